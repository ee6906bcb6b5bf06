#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "berge/bergematch.hpp"
#include "berge/formulas.hpp"
#include "berge/hypercore.hpp"

namespace berge {

struct SearchOptions {
  bool connected_only = false;  // ex^con: connected hosts spanning all n vertices
  std::uint64_t node_budget = 0;  // branch-and-bound nodes; 0 = no limit
  std::size_t witness_limit = 1;
  // Force {1..r} to be the first included edge.
  bool symmetry_pruning = true;
  unsigned threads = 1;
  // Scale guard on C(n, r).
  std::size_t max_candidates = 64;
};

struct SearchResult {
  std::size_t max_edges = 0;
  std::vector<Hypergraph> witnesses;
  std::uint64_t nodes_explored = 0;
  std::uint64_t embedding_nodes = 0;
  std::chrono::duration<double> elapsed{0};
  bool exact = true;
  // False when connected_only and no connected Berge-F-free host on n
  // vertices exists; max_edges is then 0 and there are no witnesses.
  bool feasible = true;
};

// Maximum number of edges of a Berge-F-free r-graph on n labelled vertices.
// Throws ScaleGuardExceeded when C(n, r) > max_candidates, InvalidArgument for
// r < 2, r > n or witness_limit 0.
SearchResult exact_turan(int n, int r, const PatternGraph& f, const SearchOptions& opts = {});

// True iff adding any absent r-subset to h creates a Berge-F. Throws
// HostNotFree when h already contains one.
bool is_maximal_free(const Hypergraph& h, const PatternGraph& f);

struct FormulaComparison {
  int n = 0, r = 0, k = 0, l = 0;
  SearchResult search;
  BigInt formula_value;
  bool within_hypotheses = false;
  bool construction_fits = false;
  // search value >= construction size; vacuously true when it does not fit.
  bool lower_bound_holds = true;
  BigInt difference;  // search value - formula value
};

// Runs exact_turan for kP_l and sets it against the closed-form value.
FormulaComparison compare_with_formula(int n, int r, int k, int l, const SearchOptions& opts = {});

std::string comparison_csv_header();
std::string comparison_csv_row(const FormulaComparison& c);

}  // namespace berge
