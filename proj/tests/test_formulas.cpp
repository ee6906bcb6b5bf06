#include "doctest.h"

#include "berge/formulas.hpp"

using namespace berge;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(1000, 500).str().size() == 300);
}

TEST_CASE("fraction strings") {
  CHECK(fraction_string(q(21, 2)) == "21/2");
  CHECK(fraction_string(q(10)) == "10/1");
  CHECK(fraction_string(q(-4, 6)) == "-2/3");
}

TEST_CASE("Erdős–Gallai bound") {
  CHECK(erdos_gallai_bound(10, 3) == q(10));
  CHECK(erdos_gallai_bound(7, 4) == q(21, 2));
  CHECK(erdos_gallai_bound(9, 1) == q(0));
  CHECK_THROWS_AS(erdos_gallai_bound(0, 3), Error);
}

TEST_CASE("graph value for kP_l") {
  for (int n : {10, 50, 400}) {
    CHECK(kpl_graph_turan(n, 2, 3).value == 3 * (n - 3) + 3);
    CHECK(kpl_graph_turan(n, 2, 4).value == 3 * (n - 3) + 3 + 1);
  }
  KplGraphTuran t = kpl_graph_turan(100, 2, 3);
  CHECK(t.threshold_n0 == 296);
  CHECK_FALSE(t.valid);
  CHECK(kpl_graph_turan(296, 2, 3).valid);
  CHECK_THROWS_AS(kpl_graph_turan(10, 1, 3), Error);
  CHECK_THROWS_AS(kpl_graph_turan(10, 2, 2), Error);
}

TEST_CASE("Berge path bound case routing") {
  PathBound a = berge_path_bound(8, 3, 4);
  CHECK(a.value == q(8));
  CHECK(a.theorem_case == 1);
  PathBound b = berge_path_bound(8, 4, 3);
  CHECK(b.value == q(16, 5));
  CHECK(b.theorem_case == 2);
  PathBound c = berge_path_bound(8, 3, 3);
  CHECK(c.value == q(4));
  CHECK(c.theorem_case == 2);
  // l = r + 1 falls to case 1.
  CHECK(berge_path_bound(10, 4, 5).theorem_case == 1);
  try {
    berge_path_bound(8, 2, 3);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutsideTheoremRange);
  }
  CHECK_THROWS_AS(berge_path_bound(8, 5, 2), Error);
}

TEST_CASE("connected Berge path value") {
  for (int n : {30, 100}) {
    CHECK(connected_berge_path_turan(n, 3, 19).value == 36 * (n - 9) + 84);
    CHECK(connected_berge_path_turan(n, 3, 20).value == 36 * (n - 9) + 84 + 9);
  }
  CHECK_FALSE(connected_berge_path_turan(30, 3, 19).threshold_known);
  CHECK_THROWS_AS(connected_berge_path_turan(30, 3, 18), Error);
  CHECK_THROWS_AS(connected_berge_path_turan(30, 2, 30), Error);
}

TEST_CASE("two-path value") {
  // (n, 3, 9, 9): max of 36(n-9)+84 and floor(n/9 * C(9,3)).
  TwoPathTuran small = two_path_turan(20, 3, 9, 9);
  CHECK(small.theorem_case == 2);
  CHECK(small.construction_term == 36 * 11 + 84);
  CHECK(small.path_term == (20 * 84) / 9);
  CHECK(small.value == std::max(small.construction_term, small.path_term));
  TwoPathTuran large = two_path_turan(1000, 3, 9, 9);
  CHECK(large.value == 36 * (1000 - 9) + 84);

  TwoPathTuran single = two_path_turan(100, 3, 17, 1);
  CHECK(single.theorem_case == 1);
  CHECK(single.construction_term == binomial(9, 2) * (100 - 8) + binomial(9, 3));

  CHECK_THROWS_AS(two_path_turan(100, 3, 9, 10), Error);
  CHECK_THROWS_AS(two_path_turan(100, 3, 9, 7), Error);
  CHECK_THROWS_AS(two_path_turan(100, 3, 9, 11), Error);
  CHECK_THROWS_AS(two_path_turan(100, 3, 15, 1), Error);
  CHECK_THROWS_AS(two_path_turan(100, 2, 9, 9), Error);
}

TEST_CASE("kP_l Berge value") {
  for (int n : {13, 40, 1000}) {
    CHECK(berge_kpl_turan(FormulaParams{n, 3, 6, 2}).value == 10 * n - 35);
    CHECK(berge_kpl_turan(FormulaParams{n, 3, 5, 2}).value == 10 * n - 40);
  }
  CHECK_FALSE(berge_kpl_turan(FormulaParams{13, 3, 5, 2}).within_hypotheses);
  CHECK(berge_kpl_turan(FormulaParams{40, 3, 10, 2}).within_hypotheses);
  // Large inputs stay exact.
  BigInt big = berge_kpl_turan(FormulaParams{1'000'000, 40, 1000, 3}).value;
  CHECK(big > 0);
  CHECK(big.str().size() > 60);
}

TEST_CASE("conjecture values as printed") {
  ConjectureValues odd = conjecture_values(50, 3, {5, 7});
  CHECK_FALSE(odd.parity_term_present);
  // sum l' = 7: C(6,2)(50-7+1) + C(6,3)
  CHECK(odd.forest_value == 15 * 44 + 20);
  CHECK(odd.forest_value == odd.forest_value_with_core_index);

  ConjectureValues even = conjecture_values(50, 3, {5, 6});
  CHECK(even.parity_term_present);
  // sum l' = 6, sum l = 11: C(5,2)(45) + C(5,3) + C(10,1)
  CHECK(even.forest_value == 10 * 45 + 10 + 10);
  CHECK(even.forest_value_with_core_index == 10 * 45 + 10 + 5);

  // Uniform lengths: the core-index variant coincides with the kP_l value.
  ConjectureValues uni = conjecture_values(40, 3, {6, 6});
  CHECK(uni.forest_value_with_core_index == berge_kpl_turan(FormulaParams{40, 3, 6, 2}).value);
  CHECK(uni.forest_value != uni.forest_value_with_core_index);
  REQUIRE(uni.uniform_value.has_value());
  // Printed uniform form: n - kl' - 1 + 1 and the I_r indicator (r = 3 odd).
  CHECK(*uni.uniform_value == 10 * (40 - 6) + 10);
  ConjectureValues mixed = conjecture_values(40, 3, {5, 6});
  CHECK_FALSE(mixed.uniform_value.has_value());

  CHECK(even.longest_path_bound.has_value());
  CHECK(even.conjectured_value >= even.forest_value);

  CHECK_THROWS_AS(conjecture_values(40, 3, {5}), Error);
  CHECK_THROWS_AS(conjecture_values(40, 3, {5, 2}), Error);
}

TEST_CASE("lemma examples") {
  LemmaGrid g;
  g.r_min = g.r_max = 3;
  g.l_min = g.l_max = 3;
  LemmaReport l22 = verify_lemma(LemmaId::L2_2, g);
  REQUIRE(l22.rows.size() == 1);
  CHECK(l22.rows[0].lhs == q(10));
  CHECK(l22.rows[0].rhs == q(28, 3));
  CHECK(l22.rows[0].slack == q(2, 3));

  g.k_min = g.k_max = 2;
  LemmaReport l25 = verify_lemma(LemmaId::L2_5, g);
  REQUIRE(l25.rows.size() == 1);
  CHECK(l25.rows[0].lhs == q(10));
  CHECK(l25.rows[0].rhs == q(6));

  g.k_min = g.k_max = 3;
  LemmaReport l24 = verify_lemma(LemmaId::L2_4, g);
  REQUIRE(l24.rows.size() == 1);
  // (1/2) C(5,1) - 3 + C(2,1) with (k-1)l - 1 = 5.
  CHECK(l24.rows[0].lhs == q(3, 2));
  CHECK(l24.rows[0].holds);
}

TEST_CASE("lemma grids hold with positive slack") {
  for (LemmaId id : all_lemmas()) {
    LemmaReport rep = verify_lemma(id, default_grid(id));
    CHECK_MESSAGE(rep.violations.empty(), lemma_name(id));
    REQUIRE(rep.margin_min.has_value());
    CHECK_MESSAGE(*rep.margin_min > 0, lemma_name(id));
    CHECK(rep.cells > 0);
  }
}

TEST_CASE("grids below a lemma's hypotheses are refused") {
  auto code = [](LemmaId id, LemmaGrid g) {
    try {
      verify_lemma(id, g);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  LemmaGrid g = default_grid(LemmaId::L2_4);
  g.k_min = 2;
  CHECK(code(LemmaId::L2_4, g) == ErrorCode::GridOutsideHypotheses);
  g = default_grid(LemmaId::L2_6);
  g.l_min = 4;
  CHECK(code(LemmaId::L2_6, g) == ErrorCode::GridOutsideHypotheses);
  g = default_grid(LemmaId::L2_2);
  g.r_min = 2;
  CHECK(code(LemmaId::L2_2, g) == ErrorCode::GridOutsideHypotheses);
}

TEST_CASE("lemma CSV") {
  LemmaGrid g;
  g.r_min = g.r_max = 3;
  g.l_min = g.l_max = 3;
  LemmaReport rep = verify_lemma(LemmaId::L2_2, g);
  CHECK(lemma_csv_header() == "lemma,r,k,l,l_prime,lhs,rhs,slack,holds\n");
  CHECK(lemma_csv_rows(rep) == "L2.2,3,,,3,10/1,28/3,2/3,true\n");
  CHECK(lemma_from_name("L2.5") == LemmaId::L2_5);
  CHECK_FALSE(lemma_from_name("L2.7").has_value());
}
