#include "doctest.h"

#include <stdexcept>

#include "arcgrid/families.hpp"
#include "arcgrid/graph.hpp"

using namespace arcgrid;

TEST_CASE("vertices and edges are stored canonically") {
    Graph g;
    g.add_vertex("b");
    g.add_vertex("a");
    CHECK(g.vertex_count() == 2);
    CHECK(g.has_vertex("a"));
    CHECK_FALSE(g.has_vertex("c"));

    g.add_edge("b", "a");
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent("a", "b"));
    CHECK(g.adjacent("b", "a"));

    auto es = g.edges();
    REQUIRE(es.size() == 1);
    CHECK(es[0].first == "a");
    CHECK(es[0].second == "b");
}

TEST_CASE("parallel edges collapse and self-loops are rejected") {
    Graph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_edge("a", "b");
    g.add_edge("b", "a");
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge("a", "a"), std::invalid_argument);
}

TEST_CASE("adding a vertex twice keeps one copy") {
    Graph g;
    g.add_vertex("v");
    g.add_vertex("v");
    CHECK(g.vertex_count() == 1);
}

TEST_CASE("degree and neighbor queries") {
    Graph g;
    for (const char* id : {"hub", "x", "y", "z"}) g.add_vertex(id);
    g.add_edge("hub", "x");
    g.add_edge("hub", "y");
    g.add_edge("hub", "z");
    CHECK(g.degree_idx(g.index_of("hub")) == 3);
    CHECK(g.degree_idx(g.index_of("x")) == 1);
    CHECK(g.neighbors_idx(g.index_of("hub")).size() == 3);
}

TEST_CASE("graph equality is structural") {
    Graph a, b;
    for (const char* id : {"u", "v", "w"}) {
        a.add_vertex(id);
        b.add_vertex(id);
    }
    a.add_edge("u", "v");
    b.add_edge("u", "v");
    CHECK(a == b);
    b.add_edge("v", "w");
    CHECK(a != b);
}

TEST_CASE("a star center dominates each leaf") {
    Graph g;
    for (const char* id : {"c", "l1", "l2", "l3"}) g.add_vertex(id);
    g.add_edge("c", "l1");
    g.add_edge("c", "l2");
    g.add_edge("c", "l3");
    CHECK(dominates(g, "c", "l1"));
    CHECK_FALSE(dominates(g, "l1", "c"));
}

TEST_CASE("nonadjacent vertices never dominate") {
    Graph g;
    g.add_vertex("a");
    g.add_vertex("b");
    CHECK_FALSE(dominates(g, "a", "b"));
}

TEST_CASE("in the 3-spider c1 dominates s2") {
    // N(s2) = {c1, c3} and N(c1) = {c2, c3, s2, s3}, with c1 ~ s2.
    Graph g = thick_spider(3);
    CHECK(dominates(g, "c1", "s2"));
    CHECK_FALSE(dominates(g, "s2", "c1"));
    CHECK_FALSE(dominates(g, "c1", "s1"));
}

TEST_CASE("dominates rejects unknown vertices") {
    Graph g;
    g.add_vertex("a");
    CHECK_THROWS_AS(dominates(g, "a", "ghost"), std::invalid_argument);
}
