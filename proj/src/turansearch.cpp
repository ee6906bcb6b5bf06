#include "berge/turansearch.hpp"

#include <atomic>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "berge/constructions.hpp"

namespace berge {

namespace {

Hypergraph complete_hypergraph(int n, int r) {
  std::vector<Vertex> flat;
  std::vector<Vertex> s(static_cast<std::size_t>(r));
  std::iota(s.begin(), s.end(), 1);
  while (true) {
    flat.insert(flat.end(), s.begin(), s.end());
    int i = r - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - r + i + 1) --i;
    if (i < 0) break;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
  return Hypergraph::from_flat(r, n, std::move(flat));
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n) + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// A subtree of the branch-and-bound: included edges, current size, and the
// candidates still addable, alive[from..].
struct Task {
  DynBitset included;
  std::size_t size = 0;
  std::vector<std::uint32_t> alive;
  std::size_t from = 0;
};

struct Shared {
  const EmbeddingSearch& search;
  int n;
  bool connected;
  std::size_t witness_limit;
  std::uint64_t budget;
  std::atomic<long> best{-1};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> embedding_nodes{0};
  std::atomic<bool> truncated{false};
};

class Worker {
 public:
  explicit Worker(Shared& sh) : sh_(sh) {}

  long best = -1;
  std::vector<DynBitset> found;

  void run(Task& t) { visit(t.included, t.size, t.alive, t.from); }

  // Candidates of alive[from..] other than `skip` that stay free next to `s`.
  std::vector<std::uint32_t> filter(DynBitset& s, const std::vector<std::uint32_t>& alive, std::size_t from) {
    std::vector<std::uint32_t> out;
    out.reserve(alive.size() - from);
    for (std::size_t i = from; i < alive.size(); ++i) {
      const std::uint32_t c = alive[i];
      s.set(c);
      EmbeddingResult r = sh_.search.find_using(s, c);
      s.reset(c);
      sh_.embedding_nodes.fetch_add(r.nodes, std::memory_order_relaxed);
      if (r.status != SearchStatus::Found) out.push_back(c);
    }
    return out;
  }

  bool spans_connected(const DynBitset& s, const std::vector<std::uint32_t>& alive, std::size_t from) const {
    const HostIndex& host = sh_.search.host();
    UnionFind uf(sh_.n);
    std::vector<char> covered(static_cast<std::size_t>(sh_.n) + 1, 0);
    auto absorb = [&](std::size_t e) {
      auto edge = host.hypergraph().edge(e);
      for (Vertex v : edge) {
        covered[static_cast<std::size_t>(v)] = 1;
        uf.unite(v, edge[0]);
      }
    };
    s.for_each(absorb);
    for (std::size_t i = from; i < alive.size(); ++i) absorb(alive[i]);
    const int root = uf.find(1);
    for (Vertex v = 1; v <= sh_.n; ++v)
      if (!covered[static_cast<std::size_t>(v)] || uf.find(v) != root) return false;
    return true;
  }

 private:
  void visit(DynBitset& s, std::size_t size, const std::vector<std::uint32_t>& alive, std::size_t from) {
    if (sh_.truncated.load(std::memory_order_relaxed)) return;
    const std::uint64_t node = sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (sh_.budget != 0 && node > sh_.budget) {
      sh_.truncated = true;
      return;
    }
    const long bound = static_cast<long>(size + (alive.size() - from));
    if (bound < sh_.best.load(std::memory_order_relaxed)) return;
    if (bound < best || (bound == best && found.size() >= sh_.witness_limit)) return;
    if (sh_.connected && !spans_connected(s, alive, from)) return;

    if (from == alive.size()) {
      record(s, static_cast<long>(size));
      return;
    }
    const std::uint32_t e = alive[from];
    s.set(e);
    {
      const std::vector<std::uint32_t> next = filter(s, alive, from + 1);
      visit(s, size + 1, next, 0);
    }
    s.reset(e);
    visit(s, size, alive, from + 1);
  }

  void record(const DynBitset& s, long size) {
    if (size > best) {
      best = size;
      found.clear();
    }
    if (size == best && found.size() < sh_.witness_limit) found.push_back(s);
    long g = sh_.best.load();
    while (g < size && !sh_.best.compare_exchange_weak(g, size)) {
    }
  }

  Shared& sh_;
};

// Splits the root into subtrees in depth-first order until there are enough
// for the worker pool.
std::vector<Task> split(Worker& w, std::vector<Task> tasks, std::size_t target) {
  for (int round = 0; round < 12 && tasks.size() < target; ++round) {
    std::vector<Task> next;
    bool grew = false;
    for (auto& t : tasks) {
      if (t.from == t.alive.size()) {
        next.push_back(std::move(t));
        continue;
      }
      grew = true;
      const std::uint32_t e = t.alive[t.from];
      Task inc;
      inc.included = t.included;
      inc.included.set(e);
      inc.size = t.size + 1;
      inc.alive = w.filter(inc.included, t.alive, t.from + 1);
      next.push_back(std::move(inc));
      ++t.from;
      next.push_back(std::move(t));
    }
    tasks = std::move(next);
    if (!grew) break;
  }
  return tasks;
}

}  // namespace

SearchResult exact_turan(int n, int r, const PatternGraph& f, const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  if (r < 2 || r > n) throw Error(ErrorCode::InvalidArgument, "exact_turan needs 2 <= r <= n");
  if (opts.witness_limit < 1) throw Error(ErrorCode::InvalidArgument, "witness_limit must be at least 1");
  if (f.edges.empty()) throw Error(ErrorCode::InvalidArgument, "pattern has no edges");
  const BigInt candidates = binomial(n, r);
  if (candidates > opts.max_candidates)
    throw Error(ErrorCode::ScaleGuardExceeded, "C(" + std::to_string(n) + ", " + std::to_string(r) + ") = " +
                                                   candidates.str() + " candidate edges exceeds the guard of " +
                                                   std::to_string(opts.max_candidates));

  auto index = std::make_shared<const HostIndex>(complete_hypergraph(n, r));
  const EmbeddingSearch search(index, f);
  const std::size_t m = index->num_edges();

  Shared sh{search, n, opts.connected_only, opts.witness_limit, opts.node_budget};
  Worker root_worker(sh);

  Task root;
  root.included = DynBitset(m);
  {
    std::vector<std::uint32_t> all(m);
    std::iota(all.begin(), all.end(), 0U);
    root.alive = root_worker.filter(root.included, all, 0);
  }

  std::vector<Task> tasks;
  if (opts.symmetry_pruning && !root.alive.empty() && root.alive.front() == 0) {
    // Relabelling puts any edge of a non-empty host at {1..r}, the first
    // candidate; the only host without it worth visiting is the empty one.
    Task inc;
    inc.included = root.included;
    inc.included.set(0);
    inc.size = 1;
    inc.alive = root_worker.filter(inc.included, root.alive, 1);
    tasks.push_back(std::move(inc));
    Task empty;
    empty.included = root.included;
    tasks.push_back(std::move(empty));
  } else {
    tasks.push_back(std::move(root));
  }

  const unsigned threads = std::max(1U, opts.threads);
  if (threads > 1) tasks = split(root_worker, std::move(tasks), static_cast<std::size_t>(threads) * 8);

  std::vector<std::unique_ptr<Worker>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
      results[i] = std::make_unique<Worker>(sh);
      results[i]->run(tasks[i]);
    }
  };
  if (threads == 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(drain);
    for (auto& t : pool) t.join();
  }

  SearchResult out;
  long best = -1;
  for (const auto& w : results) best = std::max(best, w->best);
  out.feasible = best >= 0;
  out.max_edges = best >= 0 ? static_cast<std::size_t>(best) : 0;
  for (const auto& w : results) {
    if (w->best != best) continue;
    for (const auto& s : w->found) {
      if (out.witnesses.size() >= opts.witness_limit) break;
      std::vector<std::size_t> keep;
      s.for_each([&](std::size_t e) { keep.push_back(e); });
      out.witnesses.push_back(index->hypergraph().subhypergraph(keep));
    }
  }
  for (const auto& w : out.witnesses)
    if (find_berge_embedding(w, f).status != SearchStatus::NotFound)
      throw std::logic_error("exact_turan produced a witness containing the pattern");

  out.nodes_explored = sh.nodes.load();
  out.embedding_nodes = sh.embedding_nodes.load();
  out.exact = !sh.truncated.load();
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

bool is_maximal_free(const Hypergraph& h, const PatternGraph& f) {
  const int n = h.order(), r = h.uniformity();
  if (binomial(n, r) > (1 << 20))
    throw Error(ErrorCode::ScaleGuardExceeded, "too many r-subsets to test for maximality");
  auto index = std::make_shared<const HostIndex>(complete_hypergraph(n, r));
  const EmbeddingSearch search(index, f);
  DynBitset active(index->num_edges());
  for (std::size_t i = 0; i < h.size(); ++i) active.set(*index->hypergraph().find_edge(h.edge(i)));
  if (search.find(active).status != SearchStatus::NotFound)
    throw Error(ErrorCode::HostNotFree, "host already contains a Berge-" + f.kind_tag);
  for (std::size_t c = 0; c < index->num_edges(); ++c) {
    if (active.test(c)) continue;
    active.set(c);
    const bool creates = search.find_using(active, c).status == SearchStatus::Found;
    active.reset(c);
    if (!creates) return false;
  }
  return true;
}

FormulaComparison compare_with_formula(int n, int r, int k, int l, const SearchOptions& opts) {
  FormulaComparison c;
  c.n = n;
  c.r = r;
  c.k = k;
  c.l = l;
  c.search = exact_turan(n, r, path_pattern(l, k), opts);
  const FormulaParams p{n, r, l, k};
  const KplTuran formula = berge_kpl_turan(p);
  c.formula_value = formula.value;
  c.within_hypotheses = formula.within_hypotheses;
  c.construction_fits = p.core_size() >= r - 1 && n >= p.core_size() + r;
  c.difference = BigInt(c.search.max_edges) - c.formula_value;
  c.lower_bound_holds = !c.construction_fits || c.difference >= 0;
  return c;
}

std::string comparison_csv_header() {
  return "n,r,k,l,search_value,exact,formula_value,construction_fits,lower_bound_holds,difference,within_hypotheses\n";
}

std::string comparison_csv_row(const FormulaComparison& c) {
  std::ostringstream out;
  out << c.n << ',' << c.r << ',' << c.k << ',' << c.l << ',' << c.search.max_edges << ','
      << (c.search.exact ? "true" : "false") << ',' << c.formula_value.str() << ','
      << (c.construction_fits ? "true" : "false") << ',' << (c.lower_bound_holds ? "true" : "false") << ','
      << c.difference.str() << ',' << (c.within_hypotheses ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace berge
