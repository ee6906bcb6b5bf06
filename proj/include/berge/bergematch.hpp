#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berge/bitset.hpp"
#include "berge/hypercore.hpp"

namespace berge {

// Witness for a Berge copy of a pattern: the defining vertices (one host
// vertex per pattern vertex) and the bijection from pattern edges to
// distinct host hyperedges.
struct BergeCertificate {
  PatternGraph pattern;
  std::vector<Vertex> defining_vertices;     // [pattern vertex - 1] -> host vertex
  std::vector<std::size_t> edge_assignment;  // [pattern edge index] -> host edge index

  friend bool operator==(const BergeCertificate& a, const BergeCertificate& b) {
    return a.pattern.kind_tag == b.pattern.kind_tag && a.defining_vertices == b.defining_vertices &&
           a.edge_assignment == b.edge_assignment;
  }
};

enum class SearchStatus { Found, NotFound, Indeterminate };
const char* search_status_name(SearchStatus s) noexcept;

struct EmbeddingResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<BergeCertificate> certificate;
  std::uint64_t nodes = 0;
};

struct EmbeddingOptions {
  // Vertex-assignment attempts before giving up with Indeterminate; 0 = no limit.
  std::uint64_t budget = 0;
  // Orbit pruning over the pattern's component automorphisms. Ignored when
  // any vertex is pinned.
  bool symmetry_pruning = true;
  // Pattern vertex -> required host vertex.
  std::vector<std::pair<Vertex, Vertex>> pinned;
};

// Incidence bitsets of a host hypergraph, shared by repeated searches over
// edge subsets of the same host (the Turán search reuses one index for every
// candidate host).
class HostIndex {
 public:
  explicit HostIndex(const Hypergraph& h);

  int order() const noexcept { return n_; }
  int uniformity() const noexcept { return r_; }
  std::size_t num_edges() const noexcept { return edge_vertices_.size(); }
  const Hypergraph& hypergraph() const noexcept { return h_; }

  // Host edges containing v (bits over edge indices).
  const DynBitset& edges_of(Vertex v) const noexcept { return edges_of_[static_cast<std::size_t>(v)]; }
  // Vertices of edge e (bits over 0..n, bit 0 unused).
  const DynBitset& vertices_of(std::size_t e) const noexcept { return edge_vertices_[e]; }
  DynBitset all_edges() const;

 private:
  Hypergraph h_;
  int n_ = 0;
  int r_ = 0;
  std::vector<DynBitset> edges_of_;
  std::vector<DynBitset> edge_vertices_;
};

// Backtracking search for Berge copies of a fixed pattern inside subsets of
// a fixed host. Pattern vertices are placed one at a time in a
// connectivity-respecting order; after every placement the pattern edges
// whose endpoints are both placed must still admit a system of distinct
// representatives among the active host edges (checked incrementally with
// augmenting paths).
class EmbeddingSearch {
 public:
  EmbeddingSearch(std::shared_ptr<const HostIndex> host, PatternGraph pattern);

  // Search the sub-hypergraph formed by `active` host edges.
  EmbeddingResult find(const DynBitset& active, const EmbeddingOptions& opts = {}) const;
  // Only copies whose image uses host edge `required` (which must be active).
  EmbeddingResult find_using(const DynBitset& active, std::size_t required, const EmbeddingOptions& opts = {}) const;

  const PatternGraph& pattern() const noexcept { return pattern_; }
  const HostIndex& host() const noexcept { return *host_; }

 private:
  struct Plan;
  struct State;
  struct PlanCache;

  Plan make_plan(int anchor_edge, const std::vector<std::pair<Vertex, Vertex>>& pinned, bool symmetry) const;
  EmbeddingResult run(const Plan& plan, const DynBitset& active, std::optional<std::size_t> required,
                      std::uint64_t budget, std::uint64_t& nodes) const;

  std::shared_ptr<const HostIndex> host_;
  PatternGraph pattern_;
  std::vector<int> pattern_degree_;
  // f(first) < f(second) constraints (pattern vertices) that pick one
  // representative per automorphism orbit.
  std::vector<std::pair<Vertex, Vertex>> symmetry_constraints_;
  // Unpinned plans: [symmetry on/off] x (free placement, one per anchor edge).
  std::shared_ptr<const PlanCache> plans_;
};

// Decides whether `h` contains a Berge copy of `f`. NotFound with budget 0 is
// a proof of absence; a budget cut yields Indeterminate, never NotFound.
EmbeddingResult find_berge_embedding(const Hypergraph& h, const PatternGraph& f, std::uint64_t budget = 0);

// True iff the certificate's three invariants hold against h. Throws
// IndexOutOfRange for references outside the host or the pattern.
bool verify_certificate(const Hypergraph& h, const BergeCertificate& cert);

struct LongestPathResult {
  int length = 0;
  BergeCertificate witness;
  bool exact = true;  // false when a budget cut stopped the search early
  std::uint64_t nodes = 0;
};

// Longest l such that h contains a Berge-P_l. Throws EmptyHypergraph.
LongestPathResult longest_berge_path(const Hypergraph& h, std::uint64_t budget = 0);

// Throws InvalidCycleLength for len < 3.
EmbeddingResult find_berge_cycle(const Hypergraph& h, int len, std::uint64_t budget = 0);

struct GoodOrder {
  std::vector<Vertex> ordering;
};

// (u, v) is good when distinct edges E1 ∋ u and E2 ∋ v exist.
bool is_good_pair(const Hypergraph& h, Vertex u, Vertex v);
bool is_good_order(const Hypergraph& h, const std::vector<Vertex>& ordering);

// Orders the non-isolated vertices of h so that consecutive vertices form
// good pairs, starting from `first`. Edges are added in canonical order; each
// new edge's private vertices are interleaved with the front of the current
// order, and the result is rotated to start at `first`.
// Throws TooFewEdges (m < 2) and VertexNotInHost.
GoodOrder good_order(const Hypergraph& h, Vertex first);

// Vertices u outside v0 such that every pair {v1, v2} of v0 is joined to u
// through two distinct edges ({v1,u} ⊆ E1, {v2,u} ⊆ E2, E1 != E2).
// Throws V0TooSmall and VertexNotInHost.
std::vector<Vertex> berge_common_neighbours(const Hypergraph& h, const std::vector<Vertex>& v0);

struct StarResult {
  bool exists = false;
  // d(x) > C(l-1, r-1), the sufficient condition for a Berge star.
  bool degree_condition = false;
  int degree = 0;
  std::optional<BergeCertificate> certificate;
};

// Berge star with l edges centred at x. Throws BadParameters unless l > r.
StarResult berge_star_exists(const Hypergraph& h, Vertex x, int l);

// JSON form: {"pattern": expr, "defining_vertices": [...],
//             "edge_assignment": [[u, v, hyperedge_index], ...]}
// where u, v are pattern vertices and the index is into the canonical edge
// list of the host.
std::string certificate_to_json(const BergeCertificate& cert);
BergeCertificate certificate_from_json(const std::string& json);

}  // namespace berge
