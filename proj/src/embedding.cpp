#include <algorithm>
#include <map>

#include "berge/bergematch.hpp"

namespace berge {

const char* search_status_name(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not_found";
    case SearchStatus::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

HostIndex::HostIndex(const Hypergraph& h) : h_(h), n_(h.order()), r_(h.uniformity()) {
  const std::size_t m = h.size();
  edges_of_.assign(static_cast<std::size_t>(n_) + 1, DynBitset(m));
  edge_vertices_.assign(m, DynBitset(static_cast<std::size_t>(n_) + 1));
  for (std::size_t e = 0; e < m; ++e) {
    for (Vertex v : h.edge(e)) {
      edges_of_[static_cast<std::size_t>(v)].set(e);
      edge_vertices_[e].set(static_cast<std::size_t>(v));
    }
  }
}

DynBitset HostIndex::all_edges() const {
  DynBitset all(num_edges());
  all.set_all();
  return all;
}

struct EmbeddingSearch::Plan {
  std::vector<Vertex> order;  // pattern vertices in placement order
  // Per position: (earlier pattern vertex, pattern edge joining them).
  std::vector<std::vector<std::pair<Vertex, int>>> back;
  // Per position: earlier pattern vertices whose image must be smaller / larger.
  std::vector<std::vector<Vertex>> below;
  std::vector<std::vector<Vertex>> above;
  std::vector<Vertex> pin;  // [pattern vertex - 1] -> host vertex or 0
  int anchor_edge = -1;
};

struct EmbeddingSearch::PlanCache {
  std::unique_ptr<Plan> free[2];
  std::vector<Plan> anchored[2];
};

namespace {

struct Adjacency {
  std::vector<std::vector<std::pair<Vertex, int>>> nbrs;  // [v] -> (neighbour, edge id), ascending
  std::vector<int> component_of;                          // [v] -> component index
};

Adjacency build_adjacency(const PatternGraph& p) {
  Adjacency a;
  a.nbrs.resize(static_cast<std::size_t>(p.num_vertices) + 1);
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    auto [u, v] = p.edges[i];
    a.nbrs[static_cast<std::size_t>(u)].emplace_back(v, static_cast<int>(i));
    a.nbrs[static_cast<std::size_t>(v)].emplace_back(u, static_cast<int>(i));
  }
  for (auto& l : a.nbrs) std::sort(l.begin(), l.end());
  a.component_of.assign(static_cast<std::size_t>(p.num_vertices) + 1, -1);
  for (std::size_t c = 0; c < p.components.size(); ++c) {
    const auto& comp = p.components[c];
    for (int v = comp.first_vertex; v < comp.first_vertex + comp.num_vertices; ++v)
      a.component_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }
  return a;
}

}  // namespace

EmbeddingSearch::EmbeddingSearch(std::shared_ptr<const HostIndex> host, PatternGraph pattern)
    : host_(std::move(host)), pattern_(std::move(pattern)), pattern_degree_(pattern_.degrees()) {
  // Representatives of the automorphism orbits generated by reflecting paths,
  // rotating/reflecting cycles, permuting star leaves, and permuting
  // identical components.
  std::map<std::pair<int, int>, Vertex> last_of_kind;
  for (const auto& c : pattern_.components) {
    const Vertex a = c.first_vertex;
    switch (c.kind) {
      case ComponentKind::Path:
      case ComponentKind::Matching:
        symmetry_constraints_.emplace_back(a, a + c.length);
        break;
      case ComponentKind::Cycle:
        for (int i = 1; i < c.length; ++i) symmetry_constraints_.emplace_back(a, a + i);
        symmetry_constraints_.emplace_back(a + 1, a + c.length - 1);
        break;
      case ComponentKind::Star:
        for (int i = 1; i < c.length; ++i) symmetry_constraints_.emplace_back(a + i, a + i + 1);
        break;
    }
    const std::pair<int, int> key{static_cast<int>(c.kind), c.length};
    auto it = last_of_kind.find(key);
    if (it != last_of_kind.end()) symmetry_constraints_.emplace_back(it->second, a);
    last_of_kind[key] = a;
  }

  auto cache = std::make_shared<PlanCache>();
  for (int sym = 0; sym < 2; ++sym) {
    cache->free[sym] = std::make_unique<Plan>(make_plan(-1, {}, sym == 1));
    for (std::size_t j = 0; j < pattern_.edges.size(); ++j)
      cache->anchored[sym].push_back(make_plan(static_cast<int>(j), {}, sym == 1));
  }
  plans_ = std::move(cache);
}

EmbeddingSearch::Plan EmbeddingSearch::make_plan(int anchor_edge, const std::vector<std::pair<Vertex, Vertex>>& pinned,
                                                 bool symmetry) const {
  const Adjacency adj = build_adjacency(pattern_);
  const int s = pattern_.num_vertices;
  Plan plan;
  plan.anchor_edge = anchor_edge;
  plan.pin.assign(static_cast<std::size_t>(s), 0);
  for (auto [pv, hv] : pinned) plan.pin[static_cast<std::size_t>(pv - 1)] = hv;

  std::vector<std::size_t> comps(pattern_.components.size());
  for (std::size_t i = 0; i < comps.size(); ++i) comps[i] = i;
  std::stable_sort(comps.begin(), comps.end(), [&](std::size_t a, std::size_t b) {
    return pattern_.components[a].length > pattern_.components[b].length;
  });
  Vertex anchor_u = 0, anchor_v = 0;
  if (anchor_edge >= 0) {
    anchor_u = pattern_.edges[static_cast<std::size_t>(anchor_edge)].first;
    anchor_v = pattern_.edges[static_cast<std::size_t>(anchor_edge)].second;
    const auto ac = static_cast<std::size_t>(adj.component_of[static_cast<std::size_t>(anchor_u)]);
    std::stable_partition(comps.begin(), comps.end(), [&](std::size_t c) { return c == ac; });
  }

  std::vector<char> placed(static_cast<std::size_t>(s) + 1, 0);
  for (std::size_t c : comps) {
    const auto& comp = pattern_.components[c];
    Vertex start = comp.first_vertex;
    Vertex prefer = 0;
    if (anchor_edge >= 0 && adj.component_of[static_cast<std::size_t>(anchor_u)] == static_cast<int>(c)) {
      start = anchor_u;
      prefer = anchor_v;
    } else {
      for (Vertex v = comp.first_vertex; v < comp.first_vertex + comp.num_vertices; ++v)
        if (plan.pin[static_cast<std::size_t>(v - 1)] != 0) {
          start = v;
          break;
        }
    }
    // Preorder DFS; `prefer` is visited right after the start vertex.
    std::vector<Vertex> stack{start};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      if (placed[static_cast<std::size_t>(v)]) continue;
      placed[static_cast<std::size_t>(v)] = 1;
      plan.order.push_back(v);
      const auto& nb = adj.nbrs[static_cast<std::size_t>(v)];
      for (auto it = nb.rbegin(); it != nb.rend(); ++it)
        if (!placed[static_cast<std::size_t>(it->first)] && it->first != prefer) stack.push_back(it->first);
      if (v == start && prefer != 0) stack.push_back(prefer);
    }
  }

  std::vector<int> pos(static_cast<std::size_t>(s) + 1, -1);
  for (std::size_t i = 0; i < plan.order.size(); ++i) pos[static_cast<std::size_t>(plan.order[i])] = static_cast<int>(i);
  plan.back.resize(plan.order.size());
  plan.below.resize(plan.order.size());
  plan.above.resize(plan.order.size());
  for (std::size_t i = 0; i < plan.order.size(); ++i) {
    for (auto [u, e] : adj.nbrs[static_cast<std::size_t>(plan.order[i])])
      if (pos[static_cast<std::size_t>(u)] < static_cast<int>(i)) plan.back[i].emplace_back(u, e);
  }
  if (symmetry) {
    for (auto [a, b] : symmetry_constraints_) {
      const int pa = pos[static_cast<std::size_t>(a)], pb = pos[static_cast<std::size_t>(b)];
      if (pa < pb)
        plan.below[static_cast<std::size_t>(pb)].push_back(a);
      else
        plan.above[static_cast<std::size_t>(pa)].push_back(b);
    }
  }
  return plan;
}

struct EmbeddingSearch::State {
  const HostIndex& host;
  const Plan& plan;
  const PatternGraph& pattern;
  const std::vector<int>& pattern_degree;
  std::optional<std::size_t> required;
  DynBitset ordinary;  // edges usable by non-anchor pattern edges
  std::vector<DynBitset> nbr;
  std::vector<int> deg;
  DynBitset nonisolated;
  std::vector<Vertex> image;  // [pattern vertex]
  DynBitset used;
  std::vector<long> match;  // [pattern edge] -> host edge or -1
  std::vector<int> owner;   // [host edge] -> pattern edge or -1
  std::vector<DynBitset> cand;
  std::vector<std::vector<long>> saved;
  std::vector<DynBitset> scratch;
  std::vector<char> visited;
  std::uint64_t budget;
  std::uint64_t& nodes;
  bool aborted = false;

  State(const HostIndex& h, const Plan& p, const PatternGraph& pat, const std::vector<int>& pdeg,
        const DynBitset& active, std::optional<std::size_t> req, std::uint64_t b, std::uint64_t& n)
      : host(h), plan(p), pattern(pat), pattern_degree(pdeg), required(req), ordinary(active), budget(b), nodes(n) {
    const std::size_t hn = static_cast<std::size_t>(h.order()) + 1;
    if (required) ordinary.reset(*required);
    nbr.assign(hn, DynBitset(hn));
    deg.assign(hn, 0);
    nonisolated = DynBitset(hn);
    for (std::size_t v = 1; v < hn; ++v) {
      const DynBitset& ev = h.edges_of(static_cast<Vertex>(v));
      ev.for_each([&](std::size_t e) {
        if (!active.test(e)) return;
        ++deg[v];
        nbr[v] |= h.vertices_of(e);
      });
      if (deg[v] > 0) {
        nbr[v].reset(v);
        nonisolated.set(v);
      }
    }
    image.assign(static_cast<std::size_t>(pat.num_vertices) + 1, 0);
    used = DynBitset(hn);
    match.assign(pat.edges.size(), -1);
    owner.assign(h.num_edges(), -1);
    cand.assign(pat.edges.size(), DynBitset(h.num_edges()));
    saved.assign(p.order.size(), {});
    scratch.assign(p.order.size(), DynBitset(hn));
    visited.assign(pat.edges.size(), 0);
  }

  bool augment(int pe) {
    visited[static_cast<std::size_t>(pe)] = 1;
    const DynBitset& c = cand[static_cast<std::size_t>(pe)];
    for (std::size_t e = c.find_first(); e < c.size(); e = c.find_next(e + 1)) {
      const int o = owner[e];
      if (o < 0 || (!visited[static_cast<std::size_t>(o)] && augment(o))) {
        match[static_cast<std::size_t>(pe)] = static_cast<long>(e);
        owner[e] = pe;
        return true;
      }
    }
    return false;
  }

  void restore(const std::vector<long>& snapshot) {
    for (long e : match)
      if (e >= 0) owner[static_cast<std::size_t>(e)] = -1;
    match = snapshot;
    for (std::size_t pe = 0; pe < match.size(); ++pe)
      if (match[pe] >= 0) owner[static_cast<std::size_t>(match[pe])] = static_cast<int>(pe);
  }

  int remaining_degree(Vertex x) const {
    int d = deg[static_cast<std::size_t>(x)];
    for (long e : match)
      if (e >= 0 && host.vertices_of(static_cast<std::size_t>(e)).test(static_cast<std::size_t>(x))) --d;
    return d;
  }

  bool is_anchor_endpoint(Vertex pv) const {
    if (plan.anchor_edge < 0) return false;
    const auto& e = pattern.edges[static_cast<std::size_t>(plan.anchor_edge)];
    return e.first == pv || e.second == pv;
  }

  bool place(std::size_t depth) {
    if (depth == plan.order.size()) return true;
    const Vertex pv = plan.order[depth];
    const auto& back = plan.back[depth];

    DynBitset& domain = scratch[depth];
    if (back.empty()) {
      domain = nonisolated;
    } else {
      domain = nbr[static_cast<std::size_t>(image[static_cast<std::size_t>(back[0].first)])];
      for (std::size_t i = 1; i < back.size(); ++i)
        domain &= nbr[static_cast<std::size_t>(image[static_cast<std::size_t>(back[i].first)])];
    }
    domain.and_not(used);
    if (is_anchor_endpoint(pv)) domain &= host.vertices_of(*required);

    Vertex lo = 0, hi = host.order() + 1;
    for (Vertex a : plan.below[depth]) lo = std::max(lo, image[static_cast<std::size_t>(a)]);
    for (Vertex b : plan.above[depth]) hi = std::min(hi, image[static_cast<std::size_t>(b)]);
    const Vertex pin = plan.pin[static_cast<std::size_t>(pv - 1)];
    const int need = pattern_degree[static_cast<std::size_t>(pv - 1)];

    std::vector<std::pair<int, Vertex>> candidates;
    domain.for_each([&](std::size_t xi) {
      const auto x = static_cast<Vertex>(xi);
      if (x <= lo || x >= hi) return;
      if (pin != 0 && x != pin) return;
      if (deg[xi] < need) return;
      candidates.emplace_back(remaining_degree(x), x);
    });
    std::sort(candidates.begin(), candidates.end());

    for (auto [rd, x] : candidates) {
      (void)rd;
      ++nodes;
      if (budget != 0 && nodes > budget) {
        aborted = true;
        return false;
      }
      image[static_cast<std::size_t>(pv)] = x;
      used.set(static_cast<std::size_t>(x));
      saved[depth] = match;

      bool ok = true;
      for (auto [u, pe] : back) {
        DynBitset& c = cand[static_cast<std::size_t>(pe)];
        if (pe == plan.anchor_edge) {
          c.clear();
          c.set(*required);
        } else {
          DynBitset::assign_and(c, host.edges_of(x), host.edges_of(image[static_cast<std::size_t>(u)]));
          c &= ordinary;
        }
        if (c.none()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        for (auto [u, pe] : back) {
          (void)u;
          std::fill(visited.begin(), visited.end(), 0);
          if (!augment(pe)) {
            ok = false;
            break;
          }
        }
      }
      if (ok && place(depth + 1)) return true;
      restore(saved[depth]);
      used.reset(static_cast<std::size_t>(x));
      image[static_cast<std::size_t>(pv)] = 0;
      if (aborted) return false;
    }
    return false;
  }
};

EmbeddingResult EmbeddingSearch::run(const Plan& plan, const DynBitset& active, std::optional<std::size_t> required,
                                     std::uint64_t budget, std::uint64_t& nodes) const {
  EmbeddingResult result;
  const std::size_t q = pattern_.edges.size();
  if (q > active.count() || pattern_.num_vertices > host_->order()) {
    result.status = SearchStatus::NotFound;
    return result;
  }
  State st(*host_, plan, pattern_, pattern_degree_, active, required, budget, nodes);
  if (static_cast<std::size_t>(pattern_.num_vertices) > st.nonisolated.count()) {
    result.status = SearchStatus::NotFound;
    return result;
  }
  if (st.place(0)) {
    BergeCertificate cert;
    cert.pattern = pattern_;
    cert.defining_vertices.assign(st.image.begin() + 1, st.image.end());
    for (long e : st.match) cert.edge_assignment.push_back(static_cast<std::size_t>(e));
    result.status = SearchStatus::Found;
    result.certificate = std::move(cert);
  } else {
    result.status = st.aborted ? SearchStatus::Indeterminate : SearchStatus::NotFound;
  }
  return result;
}

EmbeddingResult EmbeddingSearch::find(const DynBitset& active, const EmbeddingOptions& opts) const {
  const bool symmetry = opts.symmetry_pruning && opts.pinned.empty();
  for (auto [pv, hv] : opts.pinned) {
    if (pv < 1 || pv > pattern_.num_vertices)
      throw Error(ErrorCode::IndexOutOfRange, "pinned pattern vertex " + std::to_string(pv) + " out of range");
    if (hv < 1 || hv > host_->order())
      throw Error(ErrorCode::VertexOutOfRange, "pinned host vertex " + std::to_string(hv) + " out of range");
  }
  std::uint64_t nodes = 0;
  EmbeddingResult r;
  if (opts.pinned.empty()) {
    r = run(*plans_->free[symmetry ? 1 : 0], active, std::nullopt, opts.budget, nodes);
  } else {
    const Plan plan = make_plan(-1, opts.pinned, false);
    r = run(plan, active, std::nullopt, opts.budget, nodes);
  }
  r.nodes = nodes;
  return r;
}

EmbeddingResult EmbeddingSearch::find_using(const DynBitset& active, std::size_t required,
                                            const EmbeddingOptions& opts) const {
  if (required >= host_->num_edges() || !active.test(required))
    throw Error(ErrorCode::IndexOutOfRange, "required edge " + std::to_string(required) + " is not an active edge");
  const bool symmetry = opts.symmetry_pruning && opts.pinned.empty();
  std::uint64_t nodes = 0;
  bool cut = false;
  EmbeddingResult out;
  // Every pattern edge takes a turn as the one mapped onto `required`.
  for (std::size_t j = 0; j < pattern_.edges.size(); ++j) {
    EmbeddingResult r;
    if (opts.pinned.empty()) {
      r = run(plans_->anchored[symmetry ? 1 : 0][j], active, required, opts.budget, nodes);
    } else {
      const Plan plan = make_plan(static_cast<int>(j), opts.pinned, false);
      r = run(plan, active, required, opts.budget, nodes);
    }
    if (r.status == SearchStatus::Found) {
      r.nodes = nodes;
      return r;
    }
    if (r.status == SearchStatus::Indeterminate) {
      cut = true;
      break;
    }
  }
  out.status = cut ? SearchStatus::Indeterminate : SearchStatus::NotFound;
  out.nodes = nodes;
  return out;
}

EmbeddingResult find_berge_embedding(const Hypergraph& h, const PatternGraph& f, std::uint64_t budget) {
  auto index = std::make_shared<const HostIndex>(h);
  EmbeddingSearch search(index, f);
  EmbeddingOptions opts;
  opts.budget = budget;
  return search.find(index->all_edges(), opts);
}

}  // namespace berge
