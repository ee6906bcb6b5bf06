#include "berge/constructions.hpp"

#include <functional>

#include "json.hpp"

namespace berge {

namespace {

// Calls fn(subset) for every k-subset of pool in lexicographic order.
void for_each_subset(const std::vector<Vertex>& pool, int k, const std::function<void(const std::vector<Vertex>&)>& fn) {
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<Vertex> subset(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    fn(subset);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

Construction extremal_construction(const FormulaParams& p) {
  if (p.k < 1 || p.r < 2 || p.l < 1)
    throw Error(ErrorCode::ParamsOutOfRange, "construction needs k >= 1, r >= 2, l >= 1");
  const std::int64_t core = p.core_size();
  if (core < p.r - 1)
    throw Error(ErrorCode::ParamsOutOfRange, "core size kl'-1 = " + std::to_string(core) + " is below r-1");
  if (p.n < core + p.r)
    throw Error(ErrorCode::ParamsOutOfRange, "n = " + std::to_string(p.n) + " is below kl'-1+r = " +
                                                 std::to_string(core + p.r));
  const KplTuran expected = berge_kpl_turan(p);
  if (expected.value > kMaxConstructionEdges)
    throw Error(ErrorCode::ParamsOutOfRange, "construction would have " + expected.value.str() + " edges");

  const int r = static_cast<int>(p.r);
  const int n = static_cast<int>(p.n);
  ConstructionLayout layout;
  layout.params = p;
  for (Vertex v = 1; v <= core; ++v) layout.core_A.push_back(v);
  for (Vertex v = static_cast<Vertex>(core) + 1; v <= n; ++v) layout.outer_B.push_back(v);
  if (p.parity_indicator()) layout.special_pair = std::make_pair(layout.outer_B[0], layout.outer_B[1]);
  layout.extrapolation = p.k == 1;
  layout.within_theorem_range = expected.within_hypotheses;

  std::vector<Vertex> flat;
  flat.reserve(static_cast<std::size_t>(expected.value) * static_cast<std::size_t>(r));
  for_each_subset(layout.core_A, r, [&](const std::vector<Vertex>& s) {
    flat.insert(flat.end(), s.begin(), s.end());
    ++layout.e1;
  });
  for_each_subset(layout.core_A, r - 1, [&](const std::vector<Vertex>& s) {
    for (Vertex b : layout.outer_B) {
      flat.insert(flat.end(), s.begin(), s.end());
      flat.push_back(b);
      ++layout.e2;
    }
  });
  if (layout.special_pair) {
    const auto [u, v] = *layout.special_pair;
    for_each_subset(layout.core_A, r - 2, [&](const std::vector<Vertex>& s) {
      flat.insert(flat.end(), s.begin(), s.end());
      flat.push_back(u);
      flat.push_back(v);
      ++layout.e3;
    });
  }
  return Construction{Hypergraph::from_flat(r, n, std::move(flat)), std::move(layout)};
}

std::string layout_to_json(const ConstructionLayout& layout) {
  nlohmann::json j;
  j["n"] = layout.params.n;
  j["r"] = layout.params.r;
  j["k"] = layout.params.k;
  j["l"] = layout.params.l;
  j["l_prime"] = layout.params.l_prime();
  j["A"] = layout.core_A;
  j["B"] = layout.outer_B;
  if (layout.special_pair)
    j["special_pair"] = {layout.special_pair->first, layout.special_pair->second};
  else
    j["special_pair"] = nullptr;
  j["class_counts"] = {{"E1", layout.e1}, {"E2", layout.e2}, {"E3", layout.e3}};
  j["extrapolation"] = layout.extrapolation;
  j["within_theorem_range"] = layout.within_theorem_range;
  return j.dump();
}

ConstructionLayout layout_from_json(const std::string& text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    ConstructionLayout layout;
    layout.params = FormulaParams{j.at("n").get<std::int64_t>(), j.at("r").get<std::int64_t>(),
                                  j.at("l").get<std::int64_t>(), j.at("k").get<std::int64_t>()};
    layout.core_A = j.at("A").get<std::vector<Vertex>>();
    layout.outer_B = j.at("B").get<std::vector<Vertex>>();
    if (!j.at("special_pair").is_null()) {
      const auto pair = j.at("special_pair").get<std::vector<Vertex>>();
      if (pair.size() != 2) throw Error(ErrorCode::InvalidArgument, "special_pair must hold two vertices");
      layout.special_pair = std::make_pair(pair[0], pair[1]);
    }
    if (j.contains("class_counts")) {
      const auto& c = j.at("class_counts");
      layout.e1 = c.value("E1", std::size_t{0});
      layout.e2 = c.value("E2", std::size_t{0});
      layout.e3 = c.value("E3", std::size_t{0});
    }
    layout.extrapolation = layout.params.k == 1;
    layout.within_theorem_range = berge_kpl_turan(layout.params).within_hypotheses;
    return layout;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("layout JSON: ") + e.what());
  }
}

Hypergraph block_construction(int n, int l, int r) {
  if (r < 2 || l < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "block construction needs n, l >= 1 and r >= 2");
  if (l < r) throw Error(ErrorCode::BlockTooSmall, "block size " + std::to_string(l) + " is below r = " + std::to_string(r));
  if (n % l != 0) throw Error(ErrorCode::DoesNotDivide, std::to_string(l) + " does not divide " + std::to_string(n));
  if (BigInt(n / l) * binomial(l, r) > kMaxConstructionEdges)
    throw Error(ErrorCode::InvalidArgument, "block construction too large to materialize");
  std::vector<Vertex> flat;
  std::vector<Vertex> block(static_cast<std::size_t>(l));
  for (int b = 0; b < n / l; ++b) {
    for (int i = 0; i < l; ++i) block[static_cast<std::size_t>(i)] = b * l + i + 1;
    for_each_subset(block, r, [&](const std::vector<Vertex>& s) { flat.insert(flat.end(), s.begin(), s.end()); });
  }
  return Hypergraph::from_flat(r, n, std::move(flat));
}

AuditReport construction_audit(const Hypergraph& h, const ConstructionLayout& layout) {
  const FormulaParams& p = layout.params;
  const std::int64_t a = static_cast<std::int64_t>(layout.core_A.size());
  const std::int64_t b = static_cast<std::int64_t>(layout.outer_B.size());

  AuditReport report;
  report.layout_ok = a == p.core_size() && b == p.n - p.core_size() &&
                     layout.special_pair.has_value() == (p.parity_indicator() == 1) &&
                     h.order() == p.n && h.uniformity() == p.r;

  std::vector<char> in_b(static_cast<std::size_t>(h.order()) + 1, 0);
  for (Vertex v : layout.outer_B)
    if (v >= 1 && v <= h.order()) in_b[static_cast<std::size_t>(v)] = 1;

  std::size_t c1 = 0, c2 = 0, c3 = 0;
  for (std::size_t e = 0; e < h.size(); ++e) {
    std::vector<Vertex> outside;
    for (Vertex v : h.edge(e))
      if (in_b[static_cast<std::size_t>(v)]) outside.push_back(v);
    if (outside.empty())
      ++c1;
    else if (outside.size() == 1)
      ++c2;
    else if (outside.size() == 2 && layout.special_pair && outside[0] == layout.special_pair->first &&
             outside[1] == layout.special_pair->second)
      ++c3;
    else
      ++report.other;
  }
  const auto r = p.r;
  auto add = [&](const char* name, BigInt expected, std::size_t counted) {
    ClassAudit c{name, expected, counted, BigInt(counted) == expected};
    report.classes.push_back(std::move(c));
  };
  add("E1", binomial(a, r), c1);
  add("E2", binomial(a, r - 1) * b, c2);
  add("E3", layout.special_pair ? binomial(a, r - 2) : BigInt(0), c3);
  report.pass = report.layout_ok && report.other == 0;
  for (const auto& c : report.classes) report.pass = report.pass && c.pass;
  return report;
}

std::string audit_to_json(const AuditReport& report) {
  nlohmann::json j;
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : report.classes)
    classes.push_back({{"class", c.name}, {"expected", c.expected.str()}, {"counted", c.counted}, {"pass", c.pass}});
  j["classes"] = std::move(classes);
  j["other"] = report.other;
  j["layout_ok"] = report.layout_ok;
  j["pass"] = report.pass;
  return j.dump();
}

}  // namespace berge
