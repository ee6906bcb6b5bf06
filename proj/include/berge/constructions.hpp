#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berge/formulas.hpp"
#include "berge/hypercore.hpp"

namespace berge {

// Vertex layout of H_0(n, k, l) / H_1(n, k, l): core A = {1..kl'-1},
// outer B = {kl'..n}; the special pair {u, v} (two smallest B vertices) is
// used only for even l.
struct ConstructionLayout {
  FormulaParams params;
  std::vector<Vertex> core_A;
  std::vector<Vertex> outer_B;
  std::optional<std::pair<Vertex, Vertex>> special_pair;
  std::size_t e1 = 0;  // edges inside A
  std::size_t e2 = 0;  // |E ∩ B| = 1
  std::size_t e3 = 0;  // E ∩ B = {u, v}
  bool extrapolation = false;      // k = 1
  bool within_theorem_range = false;  // k >= 2, r >= 3, l' >= r, 2l' >= r + 7
};

struct Construction {
  Hypergraph hypergraph;
  ConstructionLayout layout;
};

// Largest edge count materialized by extremal_construction.
inline constexpr std::size_t kMaxConstructionEdges = 20'000'000;

// Throws ParamsOutOfRange unless k >= 1, r >= 2, l >= 1, kl' - 1 >= r - 1 and
// n >= kl' - 1 + r, or when the edge count exceeds kMaxConstructionEdges.
Construction extremal_construction(const FormulaParams& p);

// {"A": [...], "B": [...], "special_pair": [u, v] | null,
//  "class_counts": {"E1": .., "E2": .., "E3": ..}, ...}
std::string layout_to_json(const ConstructionLayout& layout);
// Inverse of layout_to_json; the flags are recomputed from the parameters.
// Throws InvalidArgument on malformed input.
ConstructionLayout layout_from_json(const std::string& json);

// n / l disjoint copies of the complete r-graph on l vertices.
// Throws DoesNotDivide and BlockTooSmall (l < r).
Hypergraph block_construction(int n, int l, int r);

struct ClassAudit {
  std::string name;  // "E1", "E2", "E3"
  BigInt expected;
  std::size_t counted = 0;
  bool pass = false;
};

struct AuditReport {
  std::vector<ClassAudit> classes;
  std::size_t other = 0;  // edges belonging to no class
  bool layout_ok = false;  // |A|, |B| and the special pair match the parameters
  bool pass = false;
};

// Recounts every edge class of `h` from scratch against the layout.
AuditReport construction_audit(const Hypergraph& h, const ConstructionLayout& layout);
std::string audit_to_json(const AuditReport& report);

}  // namespace berge
