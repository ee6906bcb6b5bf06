// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "berge/bergematch.hpp"
#include "berge/constructions.hpp"
#include "berge/formulas.hpp"
#include "berge/turansearch.hpp"
#include "../oracle.hpp"

using namespace berge;
using Clock = std::chrono::steady_clock;

namespace {

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Construction size equals the headline formula on every buildable cell.
Outcome construction_identity() {
  Outcome o;
  const auto t = Clock::now();
  std::size_t cells = 0;
  for (std::int64_t r = 3; r <= 5; ++r)
    for (std::int64_t k = 1; k <= 3; ++k)
      for (std::int64_t l = r; l <= 2 * r + 4; ++l) {
        const std::int64_t lp = (l + 1) / 2;
        if (k * lp - 1 < r - 1) continue;
        for (std::int64_t n = k * lp + r; n <= k * lp + r + 12; ++n) {
          const FormulaParams p{n, r, l, k};
          const auto c = extremal_construction(p);
          const BigInt want = berge_kpl_turan(p).value;
          ++cells;
          if (BigInt(c.hypergraph.size()) != want) {
            o.pass = false;
            std::ostringstream ss;
            ss << " mismatch at n=" << n << " r=" << r << " k=" << k << " l=" << l << ": " << c.hypergraph.size()
               << " vs " << want;
            o.detail += ss.str();
          }
        }
      }
  const double s = since(t);
  if (s >= 5.0) o.pass = false;
  o.detail = std::to_string(cells) + " cells, " + std::to_string(s) + " s" + o.detail;
  return o;
}

Outcome construction_freeness() {
  Outcome o;
  struct Case {
    std::int64_t l;
    const char* forbidden;
  };
  for (const Case c : {Case{5, "2P5"}, Case{6, "2P6"}}) {
    const auto h = extremal_construction(FormulaParams{13, 3, c.l, 2}).hypergraph;
    auto t = Clock::now();
    const auto free = find_berge_embedding(h, parse_pattern(c.forbidden), 0);
    const double s_free = since(t);
    t = Clock::now();
    const auto pos = find_berge_embedding(h, parse_pattern("P5"), 0);
    const double s_pos = since(t);
    const bool ok = free.status == SearchStatus::NotFound && s_free <= 600.0 && pos.status == SearchStatus::Found &&
                    pos.certificate && verify_certificate(h, *pos.certificate) && s_pos < 1.0;
    o.pass = o.pass && ok;
    o.detail += std::string(c.l == 5 ? "H0(13,2,5)" : "H1(13,2,6)") + " " + c.forbidden + "-free " +
                search_status_name(free.status) + " in " + std::to_string(s_free) + " s, P5 " +
                search_status_name(pos.status) + " in " + std::to_string(s_pos) + " s";
    if (c.l == 5) o.detail += "; ";
  }
  return o;
}

Outcome block_sharpness() {
  Outcome o;
  const auto t = Clock::now();
  const auto p4 = parse_pattern("P4");
  const auto small = exact_turan(4, 3, p4);
  const auto big = exact_turan(8, 3, p4);
  const auto block = block_construction(8, 4, 3);
  const bool block_free = find_berge_embedding(block, p4, 0).status == SearchStatus::NotFound;
  const double s = since(t);
  o.pass = small.exact && small.max_edges == 4 && big.max_edges >= 8 && block.size() == 8 && block_free &&
           big.max_edges >= block.size() && s <= 60.0;
  o.detail = "ex(4)=" + std::to_string(small.max_edges) + (small.exact ? " exact" : " truncated") +
             ", ex(8)=" + std::to_string(big.max_edges) + (big.exact ? " exact" : " truncated") + ", block " +
             std::to_string(block.size()) + " edges " + (block_free ? "P4-free" : "NOT free") + ", " +
             std::to_string(s) + " s";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t = Clock::now();
  std::size_t cases = 0;
  for (const char* expr : {"P2", "P3", "M2", "2P2"}) {
    const auto f = parse_pattern(expr);
    for (int n = 3; n <= 6; ++n) {
      const auto got = exact_turan(n, 3, f);
      const std::size_t want = oracle::turan(n, 3, f);
      ++cases;
      if (!got.exact || got.max_edges != want) {
        o.pass = false;
        o.detail += std::string(" ") + expr + " n=" + std::to_string(n) + ": " + std::to_string(got.max_edges) +
                    " vs " + std::to_string(want);
      }
    }
  }
  const auto p2 = parse_pattern("P2");
  const auto p3 = parse_pattern("P3");
  const bool pinned = exact_turan(4, 3, p2).max_edges == 1 && exact_turan(6, 3, p2).max_edges == 2 &&
                      exact_turan(4, 3, p3).max_edges == 2;
  const double s = since(t);
  o.pass = o.pass && pinned && s <= 300.0;
  o.detail = std::to_string(cases) + " cases, pinned " + (pinned ? "ok" : "MISMATCH") + ", " + std::to_string(s) +
             " s" + o.detail;
  return o;
}

Outcome lemma_suite() {
  Outcome o;
  const auto t = Clock::now();
  std::size_t cells = 0;
  for (LemmaId id : all_lemmas()) {
    LemmaGrid g = default_grid(id);
    g.r_min = 3;
    g.r_max = 8;
    g.k_max = 6;
    g.l_max = 30;
    const auto rep = verify_lemma(id, g);
    cells += rep.cells;
    const bool ok = rep.violations.empty() && rep.margin_min && *rep.margin_min > 0;
    o.pass = o.pass && ok && rep.cells > 0;
    o.detail += std::string(lemma_name(id)) + " min slack " +
                (rep.margin_min ? fraction_string(*rep.margin_min) : std::string("none")) + "; ";
  }
  const double s = since(t);
  if (s >= 10.0) o.pass = false;
  o.detail += std::to_string(cells) + " cells, " + std::to_string(s) + " s";
  return o;
}

Outcome good_order_property(std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed ^ 0x6006'0dde);
  std::size_t graphs = 0, orders = 0, bad = 0;
  for (int i = 0; i < 500; ++i) {
    const int r = 3 + i % 3;
    const int m = 2 + static_cast<int>(rng() % 7);
    const int n = r + 2 + static_cast<int>(rng() % 4);
    const Hypergraph h = oracle::random_hypergraph(rng, n, r, m);
    if (h.size() < 2) continue;
    ++graphs;
    const auto incident = h.incident_vertices();
    for (Vertex first : incident) {
      ++orders;
      const auto ord = good_order(h, first).ordering;
      std::vector<Vertex> sorted = ord;
      std::sort(sorted.begin(), sorted.end());
      bool ok = sorted == incident && !ord.empty() && ord.front() == first;
      for (std::size_t j = 0; ok && j + 1 < ord.size(); ++j) ok = oracle::good_pair(h, ord[j], ord[j + 1]);
      if (!ok) ++bad;
    }
  }
  o.pass = bad == 0 && graphs == 500;
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(orders) + " orders, " + std::to_string(bad) +
             " failures";
  return o;
}

struct FuzzInstance {
  Hypergraph host;
  std::string pattern;
};

std::vector<FuzzInstance> fuzz_corpus(std::uint64_t seed) {
  static const char* pool[] = {"P1", "P2", "P3", "P4", "C3", "C4", "S3", "M2", "2P2", "P2+M2",
                               "M3", "S4", "P5", "C5", "2P3", "P3+P2", "C6", "3P2"};
  std::mt19937_64 rng(seed ^ 0xf022'2026);
  std::vector<FuzzInstance> out;
  out.reserve(10000);
  for (int i = 0; i < 10000; ++i) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int r = 2 + static_cast<int>(rng() % std::min(3, n - 1));
    const int m = static_cast<int>(rng() % 15);
    out.push_back({oracle::random_hypergraph(rng, n, r, m), pool[rng() % std::size(pool)]});
  }
  return out;
}

Outcome certificate_fuzz(const std::vector<FuzzInstance>& corpus) {
  Outcome o;
  const auto t = Clock::now();
  std::size_t found = 0, compared = 0, bad_cert = 0, disagree = 0;
  for (const auto& inst : corpus) {
    const auto f = parse_pattern(inst.pattern);
    const auto res = find_berge_embedding(inst.host, f, 0);
    if (res.status == SearchStatus::Indeterminate) ++disagree;
    if (res.status == SearchStatus::Found) {
      ++found;
      if (!res.certificate || !verify_certificate(inst.host, *res.certificate)) ++bad_cert;
    }
    if (f.num_edges() <= 4) {
      ++compared;
      if ((res.status == SearchStatus::Found) != oracle::contains(inst.host, f)) ++disagree;
    }
  }
  o.pass = bad_cert == 0 && disagree == 0;
  o.detail = std::to_string(corpus.size()) + " instances, " + std::to_string(found) + " certificates (" +
             std::to_string(bad_cert) + " invalid), " + std::to_string(compared) + " compared (" +
             std::to_string(disagree) + " disagreements), " + std::to_string(since(t)) + " s";
  return o;
}

Outcome bcn_agreement(const std::vector<FuzzInstance>& corpus, std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed ^ 0xbc2);
  std::size_t checks = 0, bad = 0;
  for (const auto& inst : corpus) {
    const Hypergraph& h = inst.host;
    const int n = h.order();
    for (int size = 2; size <= std::min(4, n); ++size) {
      std::vector<Vertex> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 1);
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<Vertex> v0(all.begin(), all.begin() + size);
      std::sort(v0.begin(), v0.end());
      ++checks;
      if (berge_common_neighbours(h, v0) != oracle::bcn(h, v0)) ++bad;
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(checks) + " vertex sets, " + std::to_string(bad) + " mismatches";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for the randomized criteria (6, 7, 8)");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& run) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  };

  report(1, "construction-formula identity", construction_identity);
  report(2, "construction freeness", construction_freeness);
  report(3, "block sharpness", block_sharpness);
  report(4, "brute-force oracle equivalence", oracle_equivalence);
  report(5, "lemma suite", lemma_suite);
  report(6, "good order property", [&] { return good_order_property(seed); });
  const auto corpus = fuzz_corpus(seed);
  report(7, "certificate soundness fuzz", [&] { return certificate_fuzz(corpus); });
  report(8, "BCN correctness", [&] { return bcn_agreement(corpus, seed); });
  std::printf("%d/8 criteria passed (seed %llu)\n", 8 - failed, static_cast<unsigned long long>(seed));
  return failed == 0 ? 0 : 1;
}
