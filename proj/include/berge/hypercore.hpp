#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "berge/error.hpp"

namespace berge {

// Vertices are 1-based labels.
using Vertex = int;

// An r-uniform hypergraph on vertices 1..n with a canonical edge list: every
// edge sorted ascending, edges sorted lexicographically, no duplicates.
// Immutable once built.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Validates and canonicalizes `flat` (size must be a multiple of r).
  static Hypergraph from_flat(int r, int n, std::vector<Vertex> flat);

  int order() const noexcept { return n_; }
  int uniformity() const noexcept { return r_; }
  std::size_t size() const noexcept { return r_ == 0 ? 0 : flat_.size() / static_cast<std::size_t>(r_); }
  bool empty() const noexcept { return flat_.empty(); }

  std::span<const Vertex> edge(std::size_t i) const noexcept {
    return {flat_.data() + i * static_cast<std::size_t>(r_), static_cast<std::size_t>(r_)};
  }
  std::vector<std::vector<Vertex>> edge_lists() const;

  // Index of `sorted_edge` in the canonical list, if present.
  std::optional<std::size_t> find_edge(std::span<const Vertex> sorted_edge) const;

  int degree(Vertex v) const noexcept;
  // Vertices incident to at least one edge, ascending.
  std::vector<Vertex> incident_vertices() const;

  // Set when construction collapsed repeated edges.
  bool duplicates_collapsed() const noexcept { return duplicates_collapsed_; }

  // Keeps the listed edge indices (any order); result is canonical.
  Hypergraph subhypergraph(const std::vector<std::size_t>& keep) const;
  Hypergraph without_edge(std::size_t index) const;
  Hypergraph with_edge(std::vector<Vertex> e) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) noexcept {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.flat_ == b.flat_;
  }

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<Vertex> flat_;
  bool duplicates_collapsed_ = false;
};

// Throws NonUniformEdge, VertexOutOfRange, InvalidArgument (r < 2 or n < r).
Hypergraph make_hypergraph(int r, int n, const std::vector<std::vector<Vertex>>& raw_edges);

// Re-runs canonicalization on an existing hypergraph.
Hypergraph canonical(const Hypergraph& h);

enum class ComponentKind { Path, Cycle, Star, Matching };

// One connected piece of a pattern. Vertices first_vertex .. first_vertex +
// num_vertices - 1 in a fixed layout:
//   Path:     consecutive vertices along the path
//   Cycle:    consecutive vertices around the cycle
//   Star:     centre first, then the leaves
//   Matching: a single edge (one component per matching edge)
struct PatternComponent {
  ComponentKind kind;
  int length;  // number of edges in this component
  int first_vertex;
  int num_vertices;

  friend bool operator==(const PatternComponent&, const PatternComponent&) = default;
};

// A simple graph F given as a disjoint union of paths, cycles, stars and
// matchings. Edges are (u, v) with u < v; vertices 1..num_vertices.
struct PatternGraph {
  int num_vertices = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<PatternComponent> components;
  std::string kind_tag;  // normalized expression, e.g. "2P5+M2"

  std::size_t num_edges() const noexcept { return edges.size(); }
  // Index of edge {u, v}, if it is an edge of the pattern.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;
  std::vector<int> degrees() const;  // indexed by vertex - 1
};

// TERM ('+' TERM)*, TERM := [k]'P'l | 'C'l | 'S'l | 'M'k. Whitespace is
// ignored. Throws ParseError (position = byte offset) and InvalidCycleLength.
PatternGraph parse_pattern(std::string_view expr);

// Builders used by the parser and by callers that already know the shape.
PatternGraph path_pattern(int length, int copies = 1);
PatternGraph cycle_pattern(int length);
PatternGraph star_pattern(int leaves);

// (n, r, l, k) plus the derived core parameter l' = floor((l + 1) / 2) and
// the parity indicator (1 iff l is even). Derived values are always
// recomputed from l.
struct FormulaParams {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t l = 0;
  std::int64_t k = 1;

  std::int64_t l_prime() const noexcept { return (l + 1) / 2; }
  int parity_indicator() const noexcept { return l % 2 == 0 ? 1 : 0; }
  std::int64_t core_size() const noexcept { return k * l_prime() - 1; }
};

// .hg text format: "r n m" header, then m lines of r ascending vertices.
// Lines starting with '#' are comments. Throws FormatError with the 1-based
// line number.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_text(std::string_view text);
Hypergraph read_hypergraph_file(const std::string& path);
std::string write_hypergraph(const Hypergraph& h);
void write_hypergraph_file(const Hypergraph& h, const std::string& path);

}  // namespace berge
