#include <sstream>

#include "doctest.h"

#include "berge/hypercore.hpp"

using namespace berge;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("make_hypergraph canonicalizes edge order and vertex order") {
  Hypergraph h = make_hypergraph(3, 5, {{3, 4, 5}, {3, 1, 2}});
  REQUIRE(h.size() == 2);
  CHECK(h.edge_lists() == std::vector<std::vector<Vertex>>{{1, 2, 3}, {3, 4, 5}});
  CHECK_FALSE(h.duplicates_collapsed());
  CHECK(h.degree(3) == 2);
  CHECK(h.incident_vertices() == std::vector<Vertex>{1, 2, 3, 4, 5});
}

TEST_CASE("duplicate edges collapse and set the flag") {
  Hypergraph h = make_hypergraph(3, 5, {{1, 2, 3}, {3, 2, 1}});
  CHECK(h.size() == 1);
  CHECK(h.duplicates_collapsed());
}

TEST_CASE("make_hypergraph rejects bad input") {
  CHECK(code_of([] { make_hypergraph(3, 4, {{1, 2, 5}}); }) == ErrorCode::VertexOutOfRange);
  CHECK(code_of([] { make_hypergraph(3, 4, {{1, 2}}); }) == ErrorCode::NonUniformEdge);
  CHECK(code_of([] { make_hypergraph(3, 4, {{1, 1, 2}}); }) == ErrorCode::NonUniformEdge);
  CHECK(code_of([] { make_hypergraph(1, 4, {}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_hypergraph(3, 2, {}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("canonical is idempotent") {
  Hypergraph h = make_hypergraph(3, 7, {{7, 1, 2}, {2, 3, 4}, {1, 2, 7}, {5, 6, 7}});
  CHECK(canonical(h) == h);
  CHECK(canonical(canonical(h)) == canonical(h));
}

TEST_CASE("find_edge, subhypergraph and edge edits") {
  Hypergraph h = make_hypergraph(3, 6, {{1, 2, 3}, {2, 3, 4}, {4, 5, 6}});
  std::vector<Vertex> e{2, 3, 4};
  CHECK(h.find_edge(e) == 1);
  std::vector<Vertex> missing{1, 2, 4};
  CHECK_FALSE(h.find_edge(missing).has_value());
  CHECK(h.without_edge(0).edge_lists() == std::vector<std::vector<Vertex>>{{2, 3, 4}, {4, 5, 6}});
  CHECK(h.with_edge({4, 2, 1}).find_edge(missing) == 1);
  CHECK(h.subhypergraph({2, 0}).size() == 2);
}

TEST_CASE("pattern expressions") {
  SUBCASE("2P5") {
    PatternGraph p = parse_pattern("2P5");
    CHECK(p.num_vertices == 12);
    CHECK(p.num_edges() == 10);
    CHECK(p.components.size() == 2);
  }
  SUBCASE("P3+M2") {
    PatternGraph p = parse_pattern("P3+M2");
    CHECK(p.num_vertices == 8);
    CHECK(p.num_edges() == 5);
  }
  SUBCASE("whitespace is ignored") {
    PatternGraph p = parse_pattern(" 2 P 3 + C4 ");
    CHECK(p.num_vertices == 12);
    CHECK(p.num_edges() == 10);
  }
  SUBCASE("cycle and star layouts") {
    PatternGraph c = parse_pattern("C4");
    CHECK(c.num_vertices == 4);
    CHECK(c.edge_index(1, 4).has_value());
    PatternGraph s = parse_pattern("S3");
    CHECK(s.num_vertices == 4);
    CHECK(s.degrees()[0] == 3);
  }
  SUBCASE("C2 is rejected") { CHECK(code_of([] { parse_pattern("C2"); }) == ErrorCode::InvalidCycleLength); }
}

TEST_CASE("parse errors report byte offsets") {
  try {
    parse_pattern("P3+X2");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.position() == 3);
  }
  for (const char* bad : {"", "P", "P0", "+P3", "P3+", "3C4", "P3P4", "Q1", "P-1", "P99999999999"})
    CHECK_MESSAGE(code_of([&] { parse_pattern(bad); }) == ErrorCode::ParseError, bad);
}

TEST_CASE("kP_l parses to k(l+1) vertices and kl edges across the range") {
  for (int k : {1, 2, 3, 7, 10, 100, 1000})
    for (int l : {1, 2, 5, 17, 100, 1000}) {
      PatternGraph p = parse_pattern(std::to_string(k) + "P" + std::to_string(l));
      CHECK(p.num_vertices == k * (l + 1));
      CHECK(p.num_edges() == static_cast<std::size_t>(k * l));
    }
}

TEST_CASE("FormulaParams derived values") {
  FormulaParams p{10, 3, 5, 2};
  CHECK(p.l_prime() == 3);
  CHECK(p.parity_indicator() == 0);
  p.l = 6;
  CHECK(p.l_prime() == 3);
  CHECK(p.parity_indicator() == 1);
  CHECK(p.core_size() == 5);
}

TEST_CASE(".hg reading and writing") {
  const std::string text = "3 5 2\n1 2 3\n3 4 5\n";
  Hypergraph h = read_hypergraph_text(text);
  CHECK(h.order() == 5);
  CHECK(h.uniformity() == 3);
  CHECK(h.size() == 2);
  CHECK(write_hypergraph(h) == text);
  CHECK(read_hypergraph_text(write_hypergraph(h)) == h);

  Hypergraph commented = read_hypergraph_text("# header\n3 5 1\n# edge\n2 4 5\n");
  CHECK(commented.size() == 1);

  std::istringstream stream(text);
  CHECK(read_hypergraph(stream) == h);
}

TEST_CASE(".hg format errors carry the line number") {
  auto line_of = [](const std::string& text) -> long {
    try {
      read_hypergraph_text(text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::FormatError);
      return static_cast<long>(e.position());
    }
    return 0;
  };
  CHECK(line_of("3 5 2\n1 2\n3 4 5\n") == 2);
  CHECK(line_of("3 5 2\n1 2 3\n5 4 3\n") == 3);
  CHECK(line_of("3 5 2\n1 2 3\n") == 3);
  CHECK(line_of("3 5 1\n1 2 6\n") == 2);
  CHECK(line_of("3 5 1\n1 2 3") == 2);
  CHECK(line_of("3 5\n") == 1);
  CHECK(line_of("3 5 1\n1 2 3\n1 2 4\n") == 3);
}
