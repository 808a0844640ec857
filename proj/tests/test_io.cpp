#include <catch2/catch_amalgamated.hpp>

#include "relc/io.hpp"
#include "relc/iso.hpp"
#include "relc/structure.hpp"

using namespace relc;

namespace {

Structure cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, e);
}

Structure petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return make_graph(10, e);
}

}  // namespace

TEST_CASE("json round trip") {
  Structure p = petersen();
  Lift parsed = parse_structure_json(serialize_structure_json(p));
  CHECK(parsed.base == p);
  CHECK_FALSE(parsed.has_extension());

  TupleSet dist2;
  for (int i = 0; i < 6; ++i) {
    dist2.push_back({i, (i + 2) % 6});
    dist2.push_back({(i + 2) % 6, i});
  }
  Lift x(cycle(6), Signature({2}, {"dist2"}), {dist2});
  Lift back = parse_structure_json(serialize_structure_json(x));
  CHECK(back == x);
}

TEST_CASE("json diagnostics") {
  SECTION("syntax errors carry a position") {
    try {
      parse_structure_json("{\n  \"vertices\": 3,\n  oops\n}");
      FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SECTION("tuple entry equal to the vertex count is rejected") {
    CHECK_THROWS_AS(
        parse_structure_json(R"({"vertices": 3, "signature": [2], "relations": [[[0,3]]]})"),
        std::invalid_argument);
  }
  SECTION("missing keys are rejected") {
    CHECK_THROWS_AS(parse_structure_json(R"({"vertices": 3})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_structure_json(R"([1,2,3])"), std::invalid_argument);
  }
}

TEST_CASE("edge list format") {
  Structure g = parse_edge_list("5; 0-1 1-2 2-3 3-4 4-0");
  CHECK(find_isomorphism(g, cycle(5)).has_value());
  CHECK(g == cycle(5));

  SECTION("comments and whitespace") {
    Structure h = parse_edge_list("# a pentagon\n5; 0-1 1-2\n 2-3 # tail\n3-4 4-0\n");
    CHECK(h == cycle(5));
  }
  SECTION("round trip") {
    Structure p = petersen();
    CHECK(parse_edge_list(serialize_edge_list(p)) == p);
  }
  SECTION("errors") {
    CHECK_THROWS_AS(parse_edge_list("3 0-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3; 0-3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3; 1-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3; 0+1"), std::invalid_argument);
  }
}

TEST_CASE("graph6 encoding") {
  // reference bytes: K4 is "C~" under any labeling
  CHECK(write_graph6(parse_edge_list("4; 0-1 0-2 0-3 1-2 1-3 2-3")) == "C~");
  Structure c5 = cycle(5);
  Structure back = parse_graph6_line(write_graph6(c5));
  CHECK(back == c5);

  SECTION("round trip on assorted graphs") {
    for (const Structure& g : {petersen(), cycle(6), cycle(3)})
      CHECK(parse_graph6_line(write_graph6(g)) == g);
  }
  SECTION("file parsing skips headers and blank lines") {
    std::string file = ">>graph6<<\n" + write_graph6(c5) + "\n\n" + write_graph6(cycle(6)) + "\n";
    auto gs = parse_graph6_file(file);
    REQUIRE(gs.size() == 2);
    CHECK(gs[0] == c5);
    CHECK(gs[1] == cycle(6));
  }
  SECTION("bad bytes are rejected") {
    CHECK_THROWS_AS(parse_graph6_line("C\x01"), std::invalid_argument);
  }
}

TEST_CASE("cycle notation") {
  auto p = parse_cycles("(0 1 2)(3 4)");
  CHECK(p == std::vector<int>{1, 2, 0, 4, 3});
  CHECK(format_cycles(p) == "(0 1 2)(3 4)");
  CHECK(parse_cycles("()", 3) == std::vector<int>{0, 1, 2});
  CHECK(format_cycles({0, 1, 2}) == "()");
  CHECK(parse_cycles("(1 4)", 6) == std::vector<int>{0, 4, 2, 3, 1, 5});
  CHECK_THROWS_AS(parse_cycles("(0 1)(1 2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(0 1"), std::invalid_argument);
}
