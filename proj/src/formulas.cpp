#include "berge/formulas.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace berge {

namespace {

BigInt floor_of(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt fl = num / den;
  if (num < 0 && fl * den != num) fl -= 1;
  return fl;
}

Rational half(const BigInt& v) { return Rational(v, 2); }

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string fraction_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Rational erdos_gallai_bound(std::int64_t n, std::int64_t l) {
  if (n < 1 || l < 1) throw Error(ErrorCode::ParamsOutOfRange, "Erdős–Gallai bound needs n, l >= 1");
  return Rational(BigInt(l - 1) * n, 2);
}

KplGraphTuran kpl_graph_turan(std::int64_t n, std::int64_t k, std::int64_t l) {
  if (k < 2 || l < 3) throw Error(ErrorCode::ParamsOutOfRange, "kP_l graph value needs k >= 2 and l >= 3");
  if (n < 1) throw Error(ErrorCode::ParamsOutOfRange, "n must be positive");
  const std::int64_t half_floor = (l + 1) / 2;
  const std::int64_t half_ceil = (l + 2) / 2;
  const std::int64_t core = k * half_floor - 1;
  KplGraphTuran out;
  out.value = BigInt(core) * (n - k * half_floor + 1) + binomial(core, 2) + (l % 2 == 0 ? 1 : 0);
  out.threshold_n0 = BigInt(2 * (l + 1)) + BigInt(2 * k * (l + 1) * (half_ceil + 1)) * binomial(l + 1, half_floor);
  out.valid = BigInt(n) >= out.threshold_n0;
  return out;
}

PathBound berge_path_bound(std::int64_t n, std::int64_t r, std::int64_t l) {
  if (n < 1) throw Error(ErrorCode::OutsideTheoremRange, "n must be positive");
  PathBound out;
  if (r >= l && l > 2) {
    out.value = Rational(BigInt(n) * (l - 1), r + 1);
    out.theorem_case = 2;
    return out;
  }
  if (l >= r + 1 && r + 1 > 3) {
    out.value = Rational(BigInt(n) * binomial(l, r), l);
    out.theorem_case = 1;
    return out;
  }
  throw Error(ErrorCode::OutsideTheoremRange, "Berge-P_l bound needs l >= r + 1 > 3 or r >= l > 2 (r=" +
                                                  std::to_string(r) + ", l=" + std::to_string(l) + ")");
}

ConnectedPathTuran connected_berge_path_turan(std::int64_t n, std::int64_t r, std::int64_t l) {
  if (!(l >= 2 * r + 13 && 2 * r + 13 >= 18))
    throw Error(ErrorCode::OutsideTheoremRange, "connected Berge-P_l value needs l >= 2r + 13 >= 18 (r=" +
                                                    std::to_string(r) + ", l=" + std::to_string(l) + ")");
  if (n < 1) throw Error(ErrorCode::OutsideTheoremRange, "n must be positive");
  const std::int64_t lp = (l + 1) / 2;
  ConnectedPathTuran out;
  out.value = binomial(lp - 1, r - 1) * (n - lp + 1) + binomial(lp - 1, r) +
              (l % 2 == 0 ? binomial(lp - 1, r - 2) : BigInt(0));
  return out;
}

TwoPathTuran two_path_turan(std::int64_t n, std::int64_t r, std::int64_t l1, std::int64_t l2) {
  if (n < 1) throw Error(ErrorCode::OutsideTheoremRange, "n must be positive");
  if (r < 3) throw Error(ErrorCode::OutsideTheoremRange, "two-path value needs r >= 3");
  if (l1 % 2 == 0 || l2 % 2 == 0) throw Error(ErrorCode::OutsideTheoremRange, "both path lengths must be odd");
  TwoPathTuran out;
  if (l2 == 1) {
    if (l1 < 2 * r + 11) throw Error(ErrorCode::OutsideTheoremRange, "P_l ∪ P_1 needs l >= 2r + 11");
    out.theorem_case = 1;
    out.construction_term = binomial((l1 + 1) / 2, r - 1) * (n - (l1 - 1) / 2) + binomial((l1 + 1) / 2, r);
  } else {
    if (!(l1 >= l2 && l2 >= r + 6)) throw Error(ErrorCode::OutsideTheoremRange, "P_l1 ∪ P_l2 needs l1 >= l2 >= r + 6");
    out.theorem_case = 2;
    const std::int64_t s = (l1 + l2) / 2;
    out.construction_term = binomial(s, r - 1) * (n - s) + binomial(s, r);
  }
  out.path_term = floor_of(berge_path_bound(n, r, l1).value);
  out.value = std::max(out.path_term, out.construction_term);
  return out;
}

KplTuran berge_kpl_turan(const FormulaParams& p) {
  if (p.n < 1 || p.r < 2 || p.l < 1 || p.k < 1)
    throw Error(ErrorCode::InvalidArgument, "berge_kpl_turan needs n >= 1, r >= 2, l >= 1, k >= 1");
  const std::int64_t core = p.core_size();
  KplTuran out;
  out.value = binomial(core, p.r - 1) * (p.n - core) + binomial(core, p.r) +
              (p.parity_indicator() ? binomial(core, p.r - 2) : BigInt(0));
  out.within_hypotheses = p.k >= 2 && p.r >= 3 && p.l_prime() >= p.r && 2 * p.l_prime() >= p.r + 7;
  return out;
}

ConjectureValues conjecture_values(std::int64_t n, std::int64_t r, const std::vector<std::int64_t>& lengths) {
  if (lengths.size() < 2) throw Error(ErrorCode::ParamsOutOfRange, "a linear forest needs at least two paths");
  if (std::any_of(lengths.begin(), lengths.end(), [](std::int64_t l) { return l < 3; }))
    throw Error(ErrorCode::ParamsOutOfRange, "every path length must be at least 3");
  if (n < 1 || r < 2) throw Error(ErrorCode::ParamsOutOfRange, "needs n >= 1 and r >= 2");

  std::int64_t sum = 0, sum_prime = 0;
  bool any_even = false;
  for (auto l : lengths) {
    sum += l;
    sum_prime += (l + 1) / 2;
    any_even = any_even || l % 2 == 0;
  }
  ConjectureValues out;
  out.parity_term_present = any_even;
  const BigInt base = binomial(sum_prime - 1, r - 1) * (n - sum_prime + 1) + binomial(sum_prime - 1, r);
  out.forest_value = base + (any_even ? binomial(sum - 1, r - 2) : BigInt(0));
  out.forest_value_with_core_index = base + (any_even ? binomial(sum_prime - 1, r - 2) : BigInt(0));
  out.r_in_conjectured_range = r >= 2 && r <= sum_prime;

  const std::int64_t longest = *std::max_element(lengths.begin(), lengths.end());
  try {
    out.longest_path_bound = berge_path_bound(n, r, longest).value;
  } catch (const Error&) {
    out.longest_path_bound.reset();
  }
  out.conjectured_value = out.forest_value;
  if (out.longest_path_bound) out.conjectured_value = std::max(out.conjectured_value, floor_of(*out.longest_path_bound));

  if (std::all_of(lengths.begin(), lengths.end(), [&](std::int64_t l) { return l == lengths.front(); })) {
    const auto k = static_cast<std::int64_t>(lengths.size());
    const std::int64_t core = k * ((lengths.front() + 1) / 2) - 1;
    out.uniform_value = binomial(core, r - 1) * (n - (core + 1) - 1 + 1) + binomial(core, r) +
                        (r % 2 == 0 ? binomial(core, r - 2) : BigInt(0));
  }
  return out;
}

// --- inequality lemmas -----------------------------------------------------

const char* lemma_name(LemmaId id) noexcept {
  switch (id) {
    case LemmaId::L2_2: return "L2.2";
    case LemmaId::L2_3: return "L2.3";
    case LemmaId::L2_4: return "L2.4";
    case LemmaId::L2_5: return "L2.5";
    case LemmaId::L2_6: return "L2.6";
  }
  return "?";
}

std::optional<LemmaId> lemma_from_name(const std::string& name) {
  for (auto id : all_lemmas())
    if (name == lemma_name(id)) return id;
  return std::nullopt;
}

std::vector<LemmaId> all_lemmas() { return {LemmaId::L2_2, LemmaId::L2_3, LemmaId::L2_4, LemmaId::L2_5, LemmaId::L2_6}; }

namespace {

struct LemmaShape {
  bool uses_k;
  std::int64_t k_min;
  std::int64_t l_min;
  bool strict;
};

LemmaShape shape_of(LemmaId id) {
  switch (id) {
    case LemmaId::L2_2: return {false, 0, 3, true};
    case LemmaId::L2_3: return {true, 2, 3, false};
    case LemmaId::L2_4: return {true, 3, 3, true};
    case LemmaId::L2_5: return {true, 2, 3, true};
    case LemmaId::L2_6: return {true, 2, 5, true};
  }
  return {true, 2, 3, true};
}

// lhs, rhs and slack for one cell; `l` is l' for L2.2.
std::tuple<Rational, Rational, Rational> evaluate(LemmaId id, std::int64_t r, std::int64_t k, std::int64_t l) {
  switch (id) {
    case LemmaId::L2_2: {
      const std::int64_t lp = l;
      Rational lhs(binomial(2 * lp - 1, r - 1));
      Rational rhs(binomial(2 * lp, r) + 2 * binomial(2 * lp, r - 1) + binomial(2 * lp, r - 2), 2 * lp);
      return {lhs, rhs, lhs - rhs};
    }
    case LemmaId::L2_3: {
      Rational lhs = Rational(binomial(k * l - 1, r - 1)) - half(binomial(k * l - 1, r - 2));
      Rational rhs(binomial((k - 1) * l, r - 1) + 1);
      return {lhs, rhs, lhs - rhs};
    }
    case LemmaId::L2_4: {
      BigInt sum = 0;
      for (std::int64_t t = 1; t <= r - 2; ++t) sum += binomial((k - 1) * l - 1, r - t - 1);
      Rational lhs = half(sum) - l + Rational(binomial(l - 1, r - 2));
      Rational rhs(0);
      return {lhs, rhs, lhs - rhs};
    }
    case LemmaId::L2_5: {
      Rational lhs(binomial(k * l - 1, r - 1));
      Rational rhs(binomial((k - 1) * l - 1, r - 1) + binomial(k * l - 1, r - 2));
      return {lhs, rhs, lhs - rhs};
    }
    case LemmaId::L2_6: {
      const std::int64_t core = k * ((l + 1) / 2) - 1;
      Rational first = Rational(binomial(core, r - 1)) - half(binomial(core, r - 2)) + Rational(1, 2);
      Rational second = Rational(binomial(l, r), l) + Rational(5, 2);
      Rational lhs = std::max(first, second);
      Rational rhs(binomial(core, r - 1));
      return {lhs, rhs, rhs - lhs};
    }
  }
  return {};
}

}  // namespace

LemmaGrid default_grid(LemmaId id) {
  const LemmaShape s = shape_of(id);
  LemmaGrid g;
  g.r_min = 3;
  g.r_max = 8;
  g.k_min = s.uses_k ? s.k_min : 1;
  g.k_max = s.uses_k ? 6 : 1;
  g.l_min = s.l_min;
  g.l_max = 30;
  return g;
}

LemmaReport verify_lemma(LemmaId id, const LemmaGrid& grid) {
  const LemmaShape s = shape_of(id);
  if (grid.r_min < 3)
    throw Error(ErrorCode::GridOutsideHypotheses, std::string(lemma_name(id)) + " needs r >= 3");
  if (s.uses_k && grid.k_min < s.k_min)
    throw Error(ErrorCode::GridOutsideHypotheses,
                std::string(lemma_name(id)) + " needs k >= " + std::to_string(s.k_min));
  if (grid.l_min < s.l_min)
    throw Error(ErrorCode::GridOutsideHypotheses,
                std::string(lemma_name(id)) + " needs " + (id == LemmaId::L2_2 ? "l'" : "l") +
                    " >= " + std::to_string(s.l_min));
  if (grid.r_max < grid.r_min || grid.l_max < grid.l_min || (s.uses_k && grid.k_max < grid.k_min))
    throw Error(ErrorCode::InvalidArgument, "empty grid range");

  LemmaReport report;
  report.lemma = id;
  report.grid = grid;
  report.strict = s.strict;
  const std::int64_t k_lo = s.uses_k ? grid.k_min : 0;
  const std::int64_t k_hi = s.uses_k ? grid.k_max : 0;
  for (std::int64_t r = grid.r_min; r <= grid.r_max; ++r) {
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
      for (std::int64_t l = grid.l_min; l <= grid.l_max; ++l) {
        const std::int64_t lp = id == LemmaId::L2_2 ? l : (l + 1) / 2;
        // Coupled hypotheses: l' >= r for L2.2 and L2.6, l >= r otherwise.
        if ((id == LemmaId::L2_2 || id == LemmaId::L2_6) ? lp < r : l < r) continue;
        auto [lhs, rhs, slack] = evaluate(id, r, k, l);
        LemmaRow row;
        row.r = r;
        if (s.uses_k) row.k = k;
        if (id != LemmaId::L2_2) row.l = l;
        row.l_prime = lp;
        row.lhs = lhs;
        row.rhs = rhs;
        row.slack = slack;
        row.holds = s.strict ? slack > 0 : slack >= 0;
        if (!report.margin_min || slack < *report.margin_min) report.margin_min = slack;
        if (!row.holds) report.violations.push_back(row);
        report.rows.push_back(std::move(row));
        ++report.cells;
      }
    }
  }
  return report;
}

std::string lemma_csv_header() { return "lemma,r,k,l,l_prime,lhs,rhs,slack,holds\n"; }

std::string lemma_csv_rows(const LemmaReport& report) {
  std::ostringstream out;
  for (const auto& row : report.rows) {
    out << lemma_name(report.lemma) << ',' << row.r << ',' << (row.k ? std::to_string(*row.k) : "") << ','
        << (row.l ? std::to_string(*row.l) : "") << ',' << row.l_prime << ',' << fraction_string(row.lhs) << ','
        << fraction_string(row.rhs) << ',' << fraction_string(row.slack) << ',' << (row.holds ? "true" : "false")
        << '\n';
  }
  return out.str();
}

}  // namespace berge
