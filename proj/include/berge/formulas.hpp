#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "berge/hypercore.hpp"

namespace berge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); zero when k < 0, k > n or n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

// "p/q" with q >= 1 and gcd(p, q) = 1.
std::string fraction_string(const Rational& q);
std::string to_string(const BigInt& v);

// Erdős–Gallai: ex(n, P_l) <= (l - 1) n / 2.
Rational erdos_gallai_bound(std::int64_t n, std::int64_t l);

// Bushaw–Kettle graph value for kP_l and the order from which it is proven.
struct KplGraphTuran {
  BigInt value;
  BigInt threshold_n0;
  bool valid = false;  // n >= threshold_n0
};
// Throws ParamsOutOfRange unless k >= 2 and l >= 3.
KplGraphTuran kpl_graph_turan(std::int64_t n, std::int64_t k, std::int64_t l);

// Upper bound on ex_r(n, Berge-P_l) for the two known regimes:
//   case 1, l >= r + 1 > 3:  (n / l) C(l, r)
//   case 2, r >= l > 2:      n (l - 1) / (r + 1)
// Case 2 is tested first. Throws OutsideTheoremRange otherwise.
struct PathBound {
  Rational value;
  int theorem_case = 0;
};
PathBound berge_path_bound(std::int64_t n, std::int64_t r, std::int64_t l);

// Connected Berge-P_l value C(l'-1, r-1)(n - l' + 1) + C(l'-1, r) + I_l C(l'-1, r-2),
// known for l >= 2r + 13 >= 18 and n beyond an unspecified threshold.
struct ConnectedPathTuran {
  BigInt value;
  // The order from which the value is proven has no explicit form.
  bool threshold_known = false;
};
ConnectedPathTuran connected_berge_path_turan(std::int64_t n, std::int64_t r, std::int64_t l);

// Two Berge paths P_l1 ∪ P_l2 with odd lengths, as the larger of the
// single-path bound (floored; ex is an integer) and the core construction
// term. theorem_case is 1 for l2 = 1 and 2 for l1 >= l2 >= r + 6.
struct TwoPathTuran {
  BigInt value;
  BigInt path_term;
  BigInt construction_term;
  int theorem_case = 0;
};
TwoPathTuran two_path_turan(std::int64_t n, std::int64_t r, std::int64_t l1, std::int64_t l2);

// C(kl'-1, r-1)(n - kl' + 1) + C(kl'-1, r) + I_l C(kl'-1, r-2). Always
// evaluated; `within_hypotheses` reports k >= 2, r >= 3, l' >= r, 2l' >= r + 7.
struct KplTuran {
  BigInt value;
  bool within_hypotheses = false;
};
KplTuran berge_kpl_turan(const FormulaParams& p);

// Right-hand sides of the two closing conjectures, evaluated symbol for
// symbol as printed.
struct ConjectureValues {
  // f(n, l_i, r): the binomial core term with indicator on the parity of
  // the product of the l_i. The last binomial uses sum(l_i) - 1, as printed.
  BigInt forest_value;
  bool parity_term_present = false;
  // Same expression with sum(l_i') - 1 in the last binomial.
  BigInt forest_value_with_core_index;
  // Single-path bound for the longest path when it falls in a known regime.
  std::optional<Rational> longest_path_bound;
  // max{floor(longest_path_bound), forest_value}.
  BigInt conjectured_value;
  bool r_in_conjectured_range = false;  // 2 <= r <= sum(l_i')
  // Uniform kP_l version, present when all lengths agree:
  // C(kl'-1, r-1)(n - kl' - 1 + 1) + C(kl'-1, r) + I_r C(kl'-1, r-2).
  std::optional<BigInt> uniform_value;
};
// Throws ParamsOutOfRange unless at least two lengths are given, all >= 3.
ConjectureValues conjecture_values(std::int64_t n, std::int64_t r, const std::vector<std::int64_t>& lengths);

enum class LemmaId { L2_2, L2_3, L2_4, L2_5, L2_6 };
const char* lemma_name(LemmaId id) noexcept;
std::optional<LemmaId> lemma_from_name(const std::string& name);
std::vector<LemmaId> all_lemmas();

// Inclusive ranges. For L2.2 the l axis is l' and k is unused; for L2.6 the
// l axis is l and l' is derived.
struct LemmaGrid {
  std::int64_t r_min = 3, r_max = 8;
  std::int64_t k_min = 2, k_max = 6;
  std::int64_t l_min = 3, l_max = 30;
};
// r 3..8, k from the lemma's minimum to 6, l (or l') from its minimum to 30.
LemmaGrid default_grid(LemmaId id);

struct LemmaRow {
  std::int64_t r = 0;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> l;
  std::int64_t l_prime = 0;
  Rational lhs;
  Rational rhs;
  Rational slack;  // amount by which the inequality holds; <= 0 (strict) or < 0 is a violation
  bool holds = false;
};

struct LemmaReport {
  LemmaId lemma = LemmaId::L2_2;
  LemmaGrid grid;
  bool strict = true;
  std::vector<LemmaRow> rows;
  std::vector<LemmaRow> violations;  // sorted by (r, k, l)
  std::optional<Rational> margin_min;
  std::size_t cells = 0;
};

// Evaluates both sides exactly on every grid cell satisfying the lemma's
// coupled hypotheses (l >= r, or l' >= r). Throws GridOutsideHypotheses when
// a range bound falls below the lemma's stated minimum.
LemmaReport verify_lemma(LemmaId id, const LemmaGrid& grid);

// lemma,r,k,l,l_prime,lhs,rhs,slack,holds
std::string lemma_csv_header();
std::string lemma_csv_rows(const LemmaReport& report);

}  // namespace berge
