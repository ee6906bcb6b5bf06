#include "berge/bergematch.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

#include "berge/formulas.hpp"

namespace berge {

bool verify_certificate(const Hypergraph& h, const BergeCertificate& cert) {
  const PatternGraph& p = cert.pattern;
  if (cert.defining_vertices.size() != static_cast<std::size_t>(p.num_vertices))
    throw Error(ErrorCode::IndexOutOfRange, "certificate lists " + std::to_string(cert.defining_vertices.size()) +
                                                " defining vertices for a pattern on " +
                                                std::to_string(p.num_vertices));
  if (cert.edge_assignment.size() != p.edges.size())
    throw Error(ErrorCode::IndexOutOfRange, "certificate assigns " + std::to_string(cert.edge_assignment.size()) +
                                                " hyperedges for a pattern with " + std::to_string(p.edges.size()) +
                                                " edges");
  for (Vertex v : cert.defining_vertices)
    if (v < 1 || v > h.order()) throw Error(ErrorCode::IndexOutOfRange, "defining vertex " + std::to_string(v) + " outside host");
  for (std::size_t e : cert.edge_assignment)
    if (e >= h.size()) throw Error(ErrorCode::IndexOutOfRange, "hyperedge index " + std::to_string(e) + " outside host");

  std::vector<Vertex> dv = cert.defining_vertices;
  std::sort(dv.begin(), dv.end());
  if (std::adjacent_find(dv.begin(), dv.end()) != dv.end()) return false;
  std::vector<std::size_t> ea = cert.edge_assignment;
  std::sort(ea.begin(), ea.end());
  if (std::adjacent_find(ea.begin(), ea.end()) != ea.end()) return false;

  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    auto edge = h.edge(cert.edge_assignment[i]);
    const Vertex a = cert.defining_vertices[static_cast<std::size_t>(p.edges[i].first - 1)];
    const Vertex b = cert.defining_vertices[static_cast<std::size_t>(p.edges[i].second - 1)];
    if (!std::binary_search(edge.begin(), edge.end(), a) || !std::binary_search(edge.begin(), edge.end(), b))
      return false;
  }
  return true;
}

LongestPathResult longest_berge_path(const Hypergraph& h, std::uint64_t budget) {
  if (h.empty()) throw Error(ErrorCode::EmptyHypergraph, "longest Berge path of a hypergraph without edges");
  auto index = std::make_shared<const HostIndex>(h);
  const DynBitset all = index->all_edges();
  LongestPathResult out;
  const int cap = static_cast<int>(std::min<std::size_t>(h.size(), static_cast<std::size_t>(h.order() - 1)));
  for (int l = 1; l <= cap; ++l) {
    EmbeddingSearch search(index, path_pattern(l));
    EmbeddingOptions opts;
    if (budget != 0) {
      if (out.nodes >= budget) {
        out.exact = false;
        break;
      }
      opts.budget = budget - out.nodes;
    }
    EmbeddingResult r = search.find(all, opts);
    out.nodes += r.nodes;
    if (r.status == SearchStatus::Found) {
      out.length = l;
      out.witness = std::move(*r.certificate);
      continue;
    }
    if (r.status == SearchStatus::Indeterminate) out.exact = false;
    break;
  }
  return out;
}

EmbeddingResult find_berge_cycle(const Hypergraph& h, int len, std::uint64_t budget) {
  if (len < 3) throw Error(ErrorCode::InvalidCycleLength, "cycle length must be at least 3, got " + std::to_string(len));
  return find_berge_embedding(h, cycle_pattern(len), budget);
}

// --- good orders -------------------------------------------------------------

bool is_good_pair(const Hypergraph& h, Vertex u, Vertex v) {
  if (u < 1 || v < 1 || u > h.order() || v > h.order()) return false;
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto a = h.edge(i);
    if (!std::binary_search(a.begin(), a.end(), u)) continue;
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (j == i) continue;
      auto b = h.edge(j);
      if (std::binary_search(b.begin(), b.end(), v)) return true;
    }
  }
  return false;
}

bool is_good_order(const Hypergraph& h, const std::vector<Vertex>& ordering) {
  std::vector<Vertex> sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != h.incident_vertices()) return false;
  for (std::size_t i = 0; i + 1 < ordering.size(); ++i)
    if (!is_good_pair(h, ordering[i], ordering[i + 1])) return false;
  return true;
}

GoodOrder good_order(const Hypergraph& h, Vertex first) {
  if (h.size() < 2) throw Error(ErrorCode::TooFewEdges, "a good order needs at least two edges");
  if (first < 1 || first > h.order() || h.degree(first) == 0)
    throw Error(ErrorCode::VertexNotInHost, "vertex " + std::to_string(first) + " lies in no edge");

  auto e0 = h.edge(0), e1 = h.edge(1);
  std::vector<Vertex> only0, only1, both;
  std::set_difference(e0.begin(), e0.end(), e1.begin(), e1.end(), std::back_inserter(only0));
  std::set_difference(e1.begin(), e1.end(), e0.begin(), e0.end(), std::back_inserter(only1));
  std::set_intersection(e0.begin(), e0.end(), e1.begin(), e1.end(), std::back_inserter(both));

  std::vector<Vertex> order;
  for (std::size_t i = 0; i < only0.size(); ++i) {
    order.push_back(only0[i]);
    order.push_back(only1[i]);
  }
  order.insert(order.end(), both.begin(), both.end());

  std::vector<char> seen(static_cast<std::size_t>(h.order()) + 1, 0);
  for (Vertex v : order) seen[static_cast<std::size_t>(v)] = 1;
  for (std::size_t i = 2; i < h.size(); ++i) {
    std::vector<Vertex> fresh;
    for (Vertex v : h.edge(i))
      if (!seen[static_cast<std::size_t>(v)]) fresh.push_back(v);
    if (fresh.empty()) continue;
    std::vector<Vertex> next;
    next.reserve(order.size() + fresh.size());
    for (std::size_t j = 0; j < fresh.size(); ++j) {
      next.push_back(fresh[j]);
      next.push_back(order[j]);
      seen[static_cast<std::size_t>(fresh[j])] = 1;
    }
    next.insert(next.end(), order.begin() + static_cast<std::ptrdiff_t>(fresh.size()), order.end());
    order = std::move(next);
  }

  // The order is good cyclically, so any rotation is good.
  auto it = std::find(order.begin(), order.end(), first);
  std::rotate(order.begin(), it, order.end());
  return GoodOrder{std::move(order)};
}

// --- Berge-common neighbours ---------------------------------------------------

std::vector<Vertex> berge_common_neighbours(const Hypergraph& h, const std::vector<Vertex>& v0) {
  std::vector<Vertex> base = v0;
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  if (base.size() < 2) throw Error(ErrorCode::V0TooSmall, "V0 needs at least two distinct vertices");
  for (Vertex v : base)
    if (v < 1 || v > h.order()) throw Error(ErrorCode::VertexNotInHost, "vertex " + std::to_string(v) + " outside host");

  const HostIndex index(h);
  std::vector<Vertex> out;
  for (Vertex u = 1; u <= h.order(); ++u) {
    if (std::binary_search(base.begin(), base.end(), u)) continue;
    const DynBitset& eu = index.edges_of(u);
    std::vector<DynBitset> through;
    through.reserve(base.size());
    bool ok = true;
    for (Vertex v : base) {
      through.push_back(eu & index.edges_of(v));
      if (through.back().none()) {
        ok = false;
        break;
      }
    }
    for (std::size_t i = 0; ok && i < base.size(); ++i)
      for (std::size_t j = i + 1; ok && j < base.size(); ++j)
        if (through[i].count() == 1 && through[j].count() == 1 && through[i] == through[j]) ok = false;
    if (ok) out.push_back(u);
  }
  return out;
}

// --- Berge stars -----------------------------------------------------------------

StarResult berge_star_exists(const Hypergraph& h, Vertex x, int l) {
  const int r = h.uniformity();
  if (l <= r) throw Error(ErrorCode::BadParameters, "star size must exceed r (l=" + std::to_string(l) +
                                                        ", r=" + std::to_string(r) + ")");
  if (x < 1 || x > h.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(x) + " outside host");

  StarResult out;
  std::vector<std::size_t> at_x;
  for (std::size_t e = 0; e < h.size(); ++e) {
    auto edge = h.edge(e);
    if (std::binary_search(edge.begin(), edge.end(), x)) at_x.push_back(e);
  }
  out.degree = static_cast<int>(at_x.size());
  out.degree_condition = BigInt(out.degree) > binomial(l - 1, r - 1);

  // Maximum matching between edges through x and the other vertices.
  std::vector<int> leaf_owner(static_cast<std::size_t>(h.order()) + 1, -1);
  std::vector<Vertex> leaf_of(at_x.size(), 0);
  std::vector<char> visited;
  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (Vertex y : h.edge(at_x[i])) {
      if (y == x || visited[static_cast<std::size_t>(y)]) continue;
      visited[static_cast<std::size_t>(y)] = 1;
      const int o = leaf_owner[static_cast<std::size_t>(y)];
      if (o < 0 || self(self, static_cast<std::size_t>(o))) {
        leaf_owner[static_cast<std::size_t>(y)] = static_cast<int>(i);
        leaf_of[i] = y;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (std::size_t i = 0; i < at_x.size() && matched < l; ++i) {
    visited.assign(static_cast<std::size_t>(h.order()) + 1, 0);
    if (augment(augment, i)) ++matched;
  }
  out.exists = matched >= l;
  if (!out.exists) return out;

  BergeCertificate cert;
  cert.pattern = star_pattern(l);
  cert.defining_vertices.assign(static_cast<std::size_t>(l) + 1, 0);
  cert.edge_assignment.assign(cert.pattern.edges.size(), 0);
  cert.defining_vertices[0] = x;
  int leaf = 0;
  for (std::size_t i = 0; i < at_x.size() && leaf < l; ++i) {
    if (leaf_of[i] == 0) continue;
    const Vertex pv = leaf + 2;
    cert.defining_vertices[static_cast<std::size_t>(pv - 1)] = leaf_of[i];
    cert.edge_assignment[*cert.pattern.edge_index(1, pv)] = at_x[i];
    ++leaf;
  }
  out.certificate = std::move(cert);
  return out;
}

// --- certificate JSON ---------------------------------------------------------------

std::string certificate_to_json(const BergeCertificate& cert) {
  nlohmann::json j;
  j["pattern"] = cert.pattern.kind_tag;
  j["defining_vertices"] = cert.defining_vertices;
  nlohmann::json assignment = nlohmann::json::array();
  for (std::size_t i = 0; i < cert.pattern.edges.size(); ++i)
    assignment.push_back({cert.pattern.edges[i].first, cert.pattern.edges[i].second, cert.edge_assignment[i]});
  j["edge_assignment"] = std::move(assignment);
  return j.dump();
}

BergeCertificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("certificate JSON: ") + e.what(), static_cast<long>(e.byte));
  }
  try {
    BergeCertificate cert;
    cert.pattern = parse_pattern(j.at("pattern").get<std::string>());
    cert.defining_vertices = j.at("defining_vertices").get<std::vector<Vertex>>();
    if (cert.defining_vertices.size() != static_cast<std::size_t>(cert.pattern.num_vertices))
      throw Error(ErrorCode::InvalidArgument, "defining_vertices has " + std::to_string(cert.defining_vertices.size()) +
                                                  " entries, pattern has " +
                                                  std::to_string(cert.pattern.num_vertices) + " vertices");
    const auto& assignment = j.at("edge_assignment");
    if (!assignment.is_array()) throw Error(ErrorCode::InvalidArgument, "edge_assignment must be an array");
    std::vector<long> slots(cert.pattern.edges.size(), -1);
    for (const auto& entry : assignment) {
      if (!entry.is_array() || entry.size() != 3)
        throw Error(ErrorCode::InvalidArgument, "edge_assignment entries are [u, v, hyperedge_index]");
      const auto u = entry[0].get<Vertex>(), v = entry[1].get<Vertex>();
      const auto e = entry[2].get<long>();
      auto idx = cert.pattern.edge_index(std::min(u, v), std::max(u, v));
      if (!idx) throw Error(ErrorCode::IndexOutOfRange, "(" + std::to_string(u) + ", " + std::to_string(v) +
                                                            ") is not a pattern edge");
      if (e < 0) throw Error(ErrorCode::IndexOutOfRange, "negative hyperedge index");
      if (slots[*idx] >= 0) throw Error(ErrorCode::InvalidArgument, "pattern edge assigned twice");
      slots[*idx] = e;
    }
    for (long e : slots) {
      if (e < 0) throw Error(ErrorCode::InvalidArgument, "pattern edge without an assigned hyperedge");
      cert.edge_assignment.push_back(static_cast<std::size_t>(e));
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("certificate JSON: ") + e.what());
  }
}

}  // namespace berge
