#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "musep/graph.hpp"

using namespace musep;
namespace fx = musep::fixtures;

TEST_CASE("construction and lookup") {
  Dmg g = fx::pair_example();
  CHECK(g.size() == 2);
  CHECK(g.label(0) == "a");
  CHECK(g.label(1) == "g");
  CHECK(g.index_of("g") == 1);
  CHECK(!g.index_of("zz").has_value());
  CHECK(g.has_directed(1, 0));
  CHECK(!g.has_directed(0, 1));
  CHECK(g.is_dg());

  Dmg empty = make_dmg({"a"}, {}, {});
  CHECK(empty.size() == 1);
  CHECK(empty.edges().empty());
}

TEST_CASE("bidirected edges are unordered and loops are allowed") {
  Dmg g = make_dmg({"a", "b"}, {{"a", "a"}}, {{"b", "a"}, {"b", "b"}});
  CHECK(g.has_bidirected(0, 1));
  CHECK(g.has_bidirected(1, 0));
  CHECK(g.has_bidirected(1, 1));
  CHECK(g.has_directed(0, 0));
  CHECK(!g.is_dg());
  CHECK(Edge::bidir(1, 0) == Edge::bidir(0, 1));
  CHECK(Edge::dir(0, 0).is_loop());
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(make_dmg({"a", "a"}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_dmg({""}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_dmg({"a", "b"}, {{"a", "b"}, {"a", "b"}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_dmg({"a", "b"}, {}, {{"a", "b"}, {"b", "a"}}), std::invalid_argument);
  CHECK_THROWS_AS(make_dmg({"a"}, {{"a", "x"}}, {}), std::invalid_argument);
}

TEST_CASE("ancestors") {
  Dmg g = fx::projection_demo();
  auto idx = [&g](const char* l) { return *g.index_of(l); };
  VertexSet c = empty_set(g.size());
  c.set(static_cast<size_t>(idx("g")));
  VertexSet an = ancestors(g, c);
  CHECK(an == make_set(g.size(), {idx("g"), idx("d"), idx("e")}));

  CHECK(ancestors(g, empty_set(g.size())).none());
  CHECK(ancestors(g, full_set(g.size())) == full_set(g.size()));

  // Monotone and idempotent.
  VertexSet bigger = c;
  bigger.set(static_cast<size_t>(idx("a")));
  CHECK(an.is_subset_of(ancestors(g, bigger)));
  CHECK(ancestors(g, an) == an);
}

TEST_CASE("parents") {
  Dmg g = fx::projection_demo();
  auto idx = [&g](const char* l) { return *g.index_of(l); };
  CHECK(parents(g, idx("g")) == make_set(g.size(), {idx("d"), idx("e")}));
  CHECK(parents(g, idx("d")) == make_set(g.size(), {idx("d")}));  // loop
  Dmg e = make_dmg({"a", "b"}, {}, {});
  CHECK(parents(e, 0).none());
}

TEST_CASE("induced subgraph") {
  Dmg g = fx::projection_demo();
  auto idx = [&g](const char* l) { return *g.index_of(l); };
  Dmg sub = induced_subgraph(g, make_set(g.size(), {idx("a"), idx("b")}));
  CHECK(sub == make_dmg({"a", "b"}, {{"a", "b"}}, {}));

  CHECK(induced_subgraph(g, full_set(g.size())) == g);
  CHECK(induced_subgraph(g, empty_set(g.size())).size() == 0);
}

TEST_CASE("supergraph relation") {
  Dmg m1 = fx::class_member(1);
  Dmg m4 = fx::class_member(4);
  CHECK(is_supergraph(m1, m4));
  CHECK(!is_supergraph(m4, m1));
  CHECK(is_supergraph(m1, m1));
  CHECK_THROWS_AS(is_supergraph(m1, fx::pair_example()), std::invalid_argument);
}

TEST_CASE("add and remove edges") {
  Dmg g = fx::pair_example();
  Dmg g2 = add_edge(g, Edge::bidir(0, 1));
  CHECK(g2.has_bidirected(0, 1));
  CHECK(!g.has_bidirected(0, 1));  // value semantics
  CHECK(remove_edge(g2, Edge::bidir(0, 1)) == g);
  CHECK_THROWS_AS(add_edge(g2, Edge::bidir(1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(remove_edge(g, Edge::dir(0, 1)), std::invalid_argument);
}

TEST_CASE("self-sibling property") {
  CHECK(!satisfies_self_sibling_property(make_dmg({"b", "c"}, {}, {{"b", "c"}})));
  CHECK(satisfies_self_sibling_property(
      make_dmg({"b", "c"}, {}, {{"b", "c"}, {"b", "b"}, {"c", "c"}})));
  CHECK(satisfies_self_sibling_property(fx::maximal_nonadjacent()));
}

TEST_CASE("canonical directed graph") {
  Dmg g = make_dmg({"b", "c"}, {}, {{"b", "c"}});
  Dmg cg = canonical_dg(g);
  CHECK(cg.size() == 3);
  CHECK(cg.is_dg());
  VertexId m = 2;
  CHECK(cg.has_directed(m, *cg.index_of("b")));
  CHECK(cg.has_directed(m, *cg.index_of("c")));

  Dmg dg = fx::gateway();
  CHECK(canonical_dg(dg) == dg);
}

TEST_CASE("unique labels") {
  CHECK(unique_label({"a", "b"}, "c") == "c");
  CHECK(unique_label({"a", "a_2"}, "a") == "a_3");
}

TEST_CASE("edge listing") {
  Dmg g = fx::maximal_nonadjacent();
  CHECK(g.edges().size() == 9);
  CHECK(g.nonloop_edges().size() == 5);
}

TEST_CASE("undirected separation") {
  UndirectedGraph u{{"a", "b", "c"}, {{0, 1}, {1, 2}}};
  CHECK(undirected_separated(u, make_set(3, {0}), make_set(3, {2}), make_set(3, {1})));
  CHECK(!undirected_separated(u, make_set(3, {0}), make_set(3, {2}), empty_set(3)));
  CHECK_THROWS_AS(undirected_separated(u, make_set(3, {0}), make_set(3, {0}), empty_set(3)),
                  std::invalid_argument);
}

TEST_CASE("vertex set helpers") {
  VertexSet s = make_set(5, {0, 3});
  CHECK(members(s) == std::vector<VertexId>{0, 3});
  CHECK(empty_set(5).none());
  CHECK(full_set(5).count() == 5);
}

TEST_CASE("cap errors carry the bound") {
  CapExceededError e("op", 20, 12);
  CHECK(e.required() == 20);
  CHECK(e.cap() == 12);
  CHECK(std::string(e.what()).find("12") != std::string::npos);
}
