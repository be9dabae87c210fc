#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "musep/equivalence.hpp"
#include "musep/io.hpp"
#include "musep/oracle.hpp"

using namespace musep;
namespace fx = musep::fixtures;

TEST_CASE("fixture files match their in-code definitions") {
  CHECK(fx::load("gateway.json") == fx::gateway());
  CHECK(fx::load("projection_demo.json") == fx::projection_demo());
  CHECK(fx::load("inducing_paths.json") == fx::inducing_paths_graph());
  CHECK(fx::load("maximal_nonadjacent.json") == fx::maximal_nonadjacent());
  CHECK(fx::load("class_maximal.json") == fx::class_member(1));
  for (int k = 2; k <= 6; ++k)
    CHECK(fx::load("class_member" + std::to_string(k) + ".json") == fx::class_member(k));
  CHECK(fx::load("supp_unroll_demo.json") == fx::supp_unroll_demo());
  CHECK(fx::load("pair_example.json") == fx::pair_example());
}

TEST_CASE("fixture inventory facts") {
  Dmg m1 = fx::load("class_maximal.json");
  CHECK(m1.size() == 4);
  CHECK(m1.edges().size() == 12);
  int loops = 0;
  for (const Edge& e : m1.edges())
    if (e.is_loop()) ++loops;
  CHECK(loops == 6);
}

TEST_CASE("round trips") {
  for (const Dmg& g : fx::all_fixture_graphs()) {
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
  for (std::uint64_t seed = 2400; seed < 2430; ++seed) {
    Dmg g = random_dmg(5, 0.4, 0.3, seed);
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
  // Serialization is canonical: one more cycle is a fixed point.
  std::string text = serialize_graph(fx::inducing_paths_graph());
  CHECK(serialize_graph(parse_graph(text)) == text);
}

TEST_CASE("lenient input, canonical output") {
  // Reversed bidirected endpoints and shuffled edge order parse to the same
  // graph.
  Dmg g = parse_graph(R"({
    "nodes": ["b", "a"],
    "directed": [["b", "a"], ["a", "b"]],
    "bidirected": [["b", "a"]]
  })");
  CHECK(g.has_bidirected(0, 1));
  CHECK(g.has_directed(0, 1));
  CHECK(g.has_directed(1, 0));

  // Missing edge keys default to empty.
  Dmg bare = parse_graph(R"({"nodes": ["x"]})");
  CHECK(bare.size() == 1);
  CHECK(bare.edges().empty());
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_graph("{\n  \"nodes\": [\"a\",,]\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 0);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(parse_graph("[1, 2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph(R"({"nodes": ["a"], "extra": 1})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph(R"({"directed": []})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph(R"({"nodes": [1]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph(R"({"nodes": ["a"], "directed": [["a"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_graph(R"({"nodes": ["a"], "directed": [["a", "zz"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_graph(R"({"nodes": ["a"], "directed": [["a","a"],["a","a"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_graph(R"({"nodes": ["a","b"], "bidirected": [["a","b"],["b","a"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_graph(fx::fixture_path("missing_file.json")), std::runtime_error);
}

TEST_CASE("class-graph documents") {
  Dmeg d = dmeg(fx::class_member(1));
  std::string text = serialize_dmeg(d);
  CHECK(text.find("dashed_directed") != std::string::npos);
  Dmeg back = parse_dmeg(text);
  CHECK(back.maximal == d.maximal);
  CHECK(back.dashed_directed == d.dashed_directed);
  CHECK(back.dashed_bidirected == d.dashed_bidirected);

  // Plain graph documents parse as class-graph documents with no dashes.
  Dmeg plain = parse_dmeg(serialize_graph(fx::pair_example()));
  CHECK(plain.dashed_directed.empty());

  CHECK_THROWS_AS(
      parse_dmeg(R"({"nodes": ["a","b"], "directed": [["a","b"]], "dashed_directed": [["b","a"]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_dmeg(R"({"nodes": ["a"], "directed": [["a","a"]], "dashed_directed": [["a","a"]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_dmeg(
          R"({"nodes": ["a","b"], "directed": [["a","b"]], "dashed_directed": [["a","b"],["a","b"]]})"),
      std::invalid_argument);
}

TEST_CASE("dot export") {
  Dmg g = fx::inducing_paths_graph();
  std::string dot = export_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"a\" -> \"b\"") != std::string::npos);
  CHECK(dot.find("[dir=both]") != std::string::npos);
  CHECK(dot.find("style=dashed") == std::string::npos);
  CHECK(export_dot(g) == dot);  // deterministic

  Dmeg d = dmeg(fx::class_member(1));
  std::string ddot = export_dot(d);
  // The three dashed directed edges all point at b.
  size_t count = 0;
  for (size_t pos = ddot.find("[style=dashed]"); pos != std::string::npos;
       pos = ddot.find("[style=dashed]", pos + 1))
    ++count;
  CHECK(count == 3);
  CHECK(ddot.find("dir=both, style=dashed") == std::string::npos);

  std::string lonely = export_dot(make_dmg({"a"}, {}, {}));
  CHECK(lonely.find("\"a\";") != std::string::npos);
  CHECK(lonely.find("->") == std::string::npos);
}
