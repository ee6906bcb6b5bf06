#include <random>

#include "doctest.h"

#include "berge/bergematch.hpp"
#include "berge/constructions.hpp"
#include "oracle.hpp"

using namespace berge;

namespace {

Hypergraph k4() { return make_hypergraph(3, 4, oracle::all_subsets(4, 3)); }

}  // namespace

TEST_CASE("two intersecting triples host a Berge-P2") {
  Hypergraph h = make_hypergraph(3, 5, {{1, 2, 3}, {3, 4, 5}});
  EmbeddingResult r = find_berge_embedding(h, path_pattern(2));
  REQUIRE(r.status == SearchStatus::Found);
  const BergeCertificate& c = *r.certificate;
  CHECK(c.defining_vertices == std::vector<Vertex>{1, 3, 4});
  CHECK(c.edge_assignment == std::vector<std::size_t>{0, 1});
  CHECK(verify_certificate(h, c));
}

TEST_CASE("Berge-P3 through three triples sharing a pair") {
  Hypergraph h = make_hypergraph(3, 5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}});
  EmbeddingResult r = find_berge_embedding(h, path_pattern(3));
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(r.certificate->defining_vertices == std::vector<Vertex>{3, 1, 2, 4});
  // (3,1) -> {1,2,3}, (1,2) -> {1,2,5}, (2,4) -> {1,2,4}
  CHECK(r.certificate->edge_assignment == std::vector<std::size_t>{0, 2, 1});
  CHECK(verify_certificate(h, *r.certificate));
  CHECK(find_berge_embedding(h, path_pattern(4)).status == SearchStatus::NotFound);
}

TEST_CASE("verify_certificate rejects broken witnesses") {
  Hypergraph h = make_hypergraph(3, 5, {{1, 2, 3}, {3, 4, 5}});
  BergeCertificate c = *find_berge_embedding(h, path_pattern(2)).certificate;

  BergeCertificate same_edge = c;
  same_edge.edge_assignment = {0, 0};
  CHECK_FALSE(verify_certificate(h, same_edge));

  BergeCertificate wrong_edge = c;
  wrong_edge.edge_assignment = {1, 0};
  CHECK_FALSE(verify_certificate(h, wrong_edge));

  BergeCertificate repeated_vertex = c;
  repeated_vertex.defining_vertices = {3, 3, 4};
  CHECK_FALSE(verify_certificate(h, repeated_vertex));

  BergeCertificate out_of_range = c;
  out_of_range.edge_assignment = {0, 7};
  CHECK_THROWS_AS(verify_certificate(h, out_of_range), Error);
  out_of_range = c;
  out_of_range.defining_vertices = {1, 3, 9};
  CHECK_THROWS_AS(verify_certificate(h, out_of_range), Error);
  out_of_range = c;
  out_of_range.defining_vertices.pop_back();
  CHECK_THROWS_AS(verify_certificate(h, out_of_range), Error);
}

TEST_CASE("budget exhaustion is indeterminate, never a negative") {
  Construction c = extremal_construction(FormulaParams{13, 3, 5, 2});
  EmbeddingResult r = find_berge_embedding(c.hypergraph, path_pattern(5, 2), 1000);
  CHECK(r.status == SearchStatus::Indeterminate);
  CHECK(r.nodes >= 1000);
}

TEST_CASE("symmetry pruning does not change the answer") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Hypergraph h = oracle::random_hypergraph(rng, 7, 3, 2 + trial % 7);
    auto index = std::make_shared<const HostIndex>(h);
    for (const char* expr : {"P3", "C3", "2P2", "S3", "M3", "P2+M1"}) {
      EmbeddingSearch search(index, parse_pattern(expr));
      EmbeddingOptions with, without;
      without.symmetry_pruning = false;
      auto a = search.find(index->all_edges(), with);
      auto b = search.find(index->all_edges(), without);
      CHECK(a.status == b.status);
      if (a.certificate) CHECK(verify_certificate(h, *a.certificate));
    }
  }
}

TEST_CASE("find_using only reports copies through the required edge") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    Hypergraph h = oracle::random_hypergraph(rng, 6, 3, 3 + trial % 5);
    auto index = std::make_shared<const HostIndex>(h);
    EmbeddingSearch search(index, parse_pattern(trial % 2 ? "P3" : "M2"));
    for (std::size_t e = 0; e < h.size(); ++e) {
      auto with = search.find_using(index->all_edges(), e);
      DynBitset rest = index->all_edges();
      rest.reset(e);
      const bool without = search.find(rest).status == SearchStatus::Found;
      const bool overall = search.find(index->all_edges()).status == SearchStatus::Found;
      // A copy exists through e iff removing e loses some copy or a copy through e is found.
      if (with.status == SearchStatus::Found) {
        const auto& ea = with.certificate->edge_assignment;
        CHECK(std::find(ea.begin(), ea.end(), e) != ea.end());
        CHECK(verify_certificate(h, *with.certificate));
      } else {
        CHECK(with.status == SearchStatus::NotFound);
        CHECK(overall == without);
      }
    }
  }
}

TEST_CASE("pinned vertices are honoured") {
  Hypergraph h = k4();
  auto index = std::make_shared<const HostIndex>(h);
  EmbeddingSearch search(index, path_pattern(2));
  EmbeddingOptions opts;
  opts.pinned = {{2, 4}};
  auto r = search.find(index->all_edges(), opts);
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(r.certificate->defining_vertices[1] == 4);
}

TEST_CASE("longest Berge path") {
  CHECK(longest_berge_path(k4()).length == 3);
  LongestPathResult one = longest_berge_path(make_hypergraph(3, 3, {{1, 2, 3}}));
  CHECK(one.length == 1);
  CHECK(verify_certificate(make_hypergraph(3, 3, {{1, 2, 3}}), one.witness));
  CHECK_THROWS_AS(longest_berge_path(make_hypergraph(3, 3, {})), Error);

  Construction c = extremal_construction(FormulaParams{12, 3, 5, 2});
  LongestPathResult lp = longest_berge_path(c.hypergraph);
  CHECK(lp.exact);
  CHECK(lp.length < 12);
  CHECK(verify_certificate(c.hypergraph, lp.witness));
  CHECK(find_berge_embedding(c.hypergraph, path_pattern(lp.length + 1)).status == SearchStatus::NotFound);
  // Every vertex path alternates between A (5 vertices) and B, so at most 11 vertices.
  CHECK(lp.length == 10);
}

TEST_CASE("longest path matches repeated containment queries") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    Hypergraph h = oracle::random_hypergraph(rng, 6, 3, 1 + trial % 6);
    int expected = 0;
    for (int l = 1; l <= 5; ++l)
      if (oracle::contains(h, path_pattern(l))) expected = l;
    CHECK(longest_berge_path(h).length == expected);
  }
}

TEST_CASE("Berge cycles") {
  auto tri = find_berge_cycle(k4(), 3);
  REQUIRE(tri.status == SearchStatus::Found);
  CHECK(verify_certificate(k4(), *tri.certificate));
  CHECK(find_berge_cycle(make_hypergraph(3, 5, {{1, 2, 3}, {3, 4, 5}}), 3).status == SearchStatus::NotFound);
  CHECK_THROWS_AS(find_berge_cycle(k4(), 2), Error);
  CHECK(find_berge_cycle(k4(), 4).status == SearchStatus::Found);
  CHECK(find_berge_cycle(k4(), 5).status == SearchStatus::NotFound);
}

TEST_CASE("good order base case interleaves the two private parts") {
  Hypergraph h = make_hypergraph(3, 5, {{1, 2, 3}, {3, 4, 5}});
  CHECK(good_order(h, 1).ordering == std::vector<Vertex>{1, 4, 2, 5, 3});
  GoodOrder from3 = good_order(h, 3);
  CHECK(from3.ordering.front() == 3);
  CHECK(is_good_order(h, from3.ordering));
  CHECK_THROWS_AS(good_order(make_hypergraph(3, 5, {{1, 2, 3}}), 1), Error);
  CHECK_THROWS_AS(good_order(h, 6), Error);
  CHECK_THROWS_AS(good_order(make_hypergraph(3, 6, {{1, 2, 3}, {3, 4, 5}}), 6), Error);
}

TEST_CASE("good pairs") {
  Hypergraph h = make_hypergraph(3, 6, {{1, 2, 3}, {3, 4, 5}});
  CHECK(is_good_pair(h, 1, 4));
  CHECK_FALSE(is_good_pair(h, 1, 2));
  CHECK(is_good_pair(h, 3, 3));
  CHECK_FALSE(is_good_pair(h, 1, 6));
  CHECK_FALSE(is_good_order(h, {1, 2, 4, 5, 3}));
}

TEST_CASE("good orders on disconnected and overlapping hosts") {
  Hypergraph h = make_hypergraph(3, 9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 5, 9}});
  for (Vertex v : h.incident_vertices()) {
    GoodOrder g = good_order(h, v);
    CHECK(g.ordering.front() == v);
    CHECK(is_good_order(h, g.ordering));
  }
}

TEST_CASE("Berge-common neighbours") {
  CHECK(berge_common_neighbours(make_hypergraph(3, 5, {{1, 2, 5}, {3, 4, 5}}), {1, 3}) == std::vector<Vertex>{5});
  CHECK(berge_common_neighbours(make_hypergraph(3, 5, {{1, 2, 5}}), {1, 2}).empty());
  CHECK(berge_common_neighbours(make_hypergraph(3, 4, {{1, 2, 3}, {1, 2, 4}}), {3, 4}) == std::vector<Vertex>{1, 2});
  CHECK_THROWS_AS(berge_common_neighbours(make_hypergraph(3, 4, {{1, 2, 3}}), {1}), Error);
  CHECK_THROWS_AS(berge_common_neighbours(make_hypergraph(3, 4, {{1, 2, 3}}), {1, 1}), Error);
  CHECK_THROWS_AS(berge_common_neighbours(make_hypergraph(3, 4, {{1, 2, 3}}), {1, 9}), Error);
}

TEST_CASE("Berge stars") {
  SUBCASE("degree condition implies a star") {
    // x = 1 with every triple through it on 1..6: d(x) = C(5,2) = 10 > C(3,2) = 3.
    std::vector<std::vector<Vertex>> edges;
    for (const auto& e : oracle::all_subsets(6, 3))
      if (e[0] == 1) edges.push_back(e);
    Hypergraph h = make_hypergraph(3, 6, edges);
    StarResult s = berge_star_exists(h, 1, 4);
    CHECK(s.degree_condition);
    CHECK(s.exists);
    REQUIRE(s.certificate.has_value());
    CHECK(verify_certificate(h, *s.certificate));
  }
  SUBCASE("degree exactly C(l-1, r-1) + 1") {
    // r = 3, l = 4: four triples through x = 1 on {1..5}.
    Hypergraph h = make_hypergraph(3, 5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 2, 5}});
    StarResult s = berge_star_exists(h, 1, 4);
    CHECK(s.degree == 4);
    CHECK(s.degree_condition);
    CHECK(s.exists);
  }
  SUBCASE("isolated centre") {
    StarResult s = berge_star_exists(make_hypergraph(3, 6, {{1, 2, 3}}), 6, 4);
    CHECK_FALSE(s.exists);
    CHECK(s.degree == 0);
  }
  SUBCASE("complete 3-graph on four vertices has no S4") {
    StarResult s = berge_star_exists(k4(), 1, 4);
    CHECK(s.degree == 3);
    CHECK_FALSE(s.degree_condition);
    CHECK_FALSE(s.exists);
  }
  SUBCASE("l must exceed r") { CHECK_THROWS_AS(berge_star_exists(k4(), 1, 3), Error); }
}

TEST_CASE("star matching agrees with the embedding engine with a pinned centre") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    Hypergraph h = oracle::random_hypergraph(rng, 8, 3, 3 + trial % 10);
    auto index = std::make_shared<const HostIndex>(h);
    EmbeddingSearch search(index, star_pattern(4));
    for (Vertex x = 1; x <= 8; ++x) {
      EmbeddingOptions opts;
      opts.pinned = {{1, x}};
      const bool engine = search.find(index->all_edges(), opts).status == SearchStatus::Found;
      StarResult s = berge_star_exists(h, x, 4);
      CHECK(s.exists == engine);
      if (s.degree_condition) CHECK(s.exists);
    }
  }
}

TEST_CASE("certificate JSON round trip") {
  Hypergraph h = make_hypergraph(3, 5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}});
  BergeCertificate c = *find_berge_embedding(h, path_pattern(3)).certificate;
  const std::string json = certificate_to_json(c);
  CHECK(json == R"({"defining_vertices":[3,1,2,4],"edge_assignment":[[1,2,0],[2,3,2],[3,4,1]],"pattern":"P3"})");
  BergeCertificate back = certificate_from_json(json);
  CHECK(back == c);
  CHECK(verify_certificate(h, back));

  CHECK_THROWS_AS(certificate_from_json("{"), Error);
  CHECK_THROWS_AS(certificate_from_json(R"({"pattern":"P1","defining_vertices":[1],"edge_assignment":[]})"), Error);
  CHECK_THROWS_AS(
      certificate_from_json(R"({"pattern":"P1","defining_vertices":[1,2],"edge_assignment":[[1,3,0]]})"), Error);
  CHECK_THROWS_AS(
      certificate_from_json(R"({"pattern":"P1","defining_vertices":[1,2],"edge_assignment":[[1,2,0],[2,1,0]]})"),
      Error);
  CHECK_THROWS_AS(certificate_from_json(R"({"pattern":"P1","defining_vertices":[1,2],"edge_assignment":[]})"), Error);
}

TEST_CASE("embedding agrees with the naive enumerator on small hosts") {
  std::mt19937_64 rng(2024);
  const std::vector<std::string> patterns{"P1", "P2", "P3", "P4", "C3", "C4", "M2", "2P2", "S3", "P2+M1"};
  for (int trial = 0; trial < 300; ++trial) {
    Hypergraph h = oracle::random_hypergraph(rng, 6, 3, 1 + trial % 6);
    for (const auto& expr : patterns) {
      PatternGraph f = parse_pattern(expr);
      EmbeddingResult r = find_berge_embedding(h, f);
      CHECK(r.status != SearchStatus::Indeterminate);
      CHECK((r.status == SearchStatus::Found) == oracle::contains(h, f));
      if (r.certificate) CHECK(verify_certificate(h, *r.certificate));
    }
  }
}

TEST_CASE("freeness is inherited by sub-hypergraphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Hypergraph h = oracle::random_hypergraph(rng, 7, 3, 4);
    PatternGraph f = parse_pattern("P3");
    if (find_berge_embedding(h, f).status != SearchStatus::NotFound) continue;
    for (std::size_t e = 0; e < h.size(); ++e)
      CHECK(find_berge_embedding(h.without_edge(e), f).status == SearchStatus::NotFound);
  }
}
