#include "doctest.h"

#include "arcgrid/circle.hpp"
#include "arcgrid/families.hpp"
#include "arcgrid/graph.hpp"
#include "arcgrid/grid.hpp"
#include "arcgrid/recognition.hpp"

using namespace arcgrid;

TEST_CASE("cycle powers by adjacency") {
    Graph g = cycle_power(7, 2);
    CHECK(g.vertex_count() == 7);
    for (const std::string& v : g.vertex_ids())
        CHECK(g.degree_idx(g.index_of(v)) == 4);
    CHECK(g.adjacent("v1", "v3"));
    CHECK_FALSE(g.adjacent("v1", "v4"));
    CHECK(g.adjacent("v1", "v6")); // distance 2 around the far side

    Graph c4;
    for (const char* id : {"v1", "v2", "v3", "v4"}) c4.add_vertex(id);
    c4.add_edge("v1", "v2");
    c4.add_edge("v2", "v3");
    c4.add_edge("v3", "v4");
    c4.add_edge("v4", "v1");
    CHECK(cycle_power(4, 1) == c4);

    Graph k7 = cycle_power(7, 3);
    CHECK(k7.edge_count() == 21);
}

TEST_CASE("canonical cycle-power arcs") {
    CircularArcModel m = canonical_cycle_power_model(7, 2);
    REQUIRE(m.arc_count() == 7);
    const int expected[7][2] = {{1, 6},  {3, 8},  {5, 10}, {7, 12},
                                {9, 14}, {11, 2}, {13, 4}};
    for (int i = 0; i < 7; ++i) {
        CHECK(m.arc(i).tail == expected[i][0]);
        CHECK(m.arc(i).head == expected[i][1]);
    }
    CHECK(validate(m).empty());
    CHECK(intersection_graph(m) == cycle_power(7, 2));
}

TEST_CASE("canonical models realize their cycle powers") {
    for (int k = 1; k <= 4; ++k) {
        for (int n = 2 * k + 2; n <= 2 * k + 8; ++n) {
            CircularArcModel m = canonical_cycle_power_model(n, k);
            CHECK(validate(m).empty());
            CHECK(intersection_graph(m) == cycle_power(n, k));
        }
    }
}

TEST_CASE("thick spiders") {
    Graph s2 = thick_spider(2);
    CHECK(s2.vertex_count() == 4);
    CHECK(s2.edge_count() == 3);
    CHECK(s2.adjacent("c1", "c2"));
    CHECK(s2.adjacent("c1", "s2"));
    CHECK(s2.adjacent("c2", "s1"));
    CHECK_FALSE(s2.adjacent("c1", "s1"));
    CHECK_FALSE(s2.adjacent("s1", "s2"));

    Graph s3 = thick_spider(3);
    CHECK(s3.vertex_count() == 6);
    CHECK(s3.edge_count() == 9);

    for (int n = 2; n <= 7; ++n) {
        Graph s = thick_spider(n);
        CHECK(s.edge_count() == n * (n - 1) / 2 + n * (n - 1));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                CHECK_FALSE(s.adjacent("s" + std::to_string(i),
                                       "s" + std::to_string(j)));
    }

    CHECK(contains_induced(thick_spider(6), thick_spider(3)));
}

TEST_CASE("random arc models are valid and deterministic") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int n = static_cast<int>(seed % 12) + 1;
        CircularArcModel m = random_ca_model(seed, n);
        CHECK(m.arc_count() == n);
        CHECK(validate(m).empty());
        CHECK(random_ca_model(seed, n) == m);
    }
    CHECK(random_ca_model(1, 8) != random_ca_model(2, 8));
}

TEST_CASE("random arc models match a pairwise overlap oracle") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        CircularArcModel m = random_ca_model(seed, 10);
        Graph g = intersection_graph(m);
        for (int i = 0; i < m.arc_count(); ++i) {
            for (int j = i + 1; j < m.arc_count(); ++j) {
                const Arc& a = m.arc(i);
                const Arc& b = m.arc(j);
                // Open arcs overlap iff one contains an endpoint of the other.
                bool overlap =
                    contains_position(a, CirclePosition::endpoint(b.tail)) ||
                    contains_position(a, CirclePosition::endpoint(b.head)) ||
                    contains_position(b, CirclePosition::endpoint(a.tail));
                CHECK(g.adjacent(a.id, b.id) == overlap);
            }
        }
    }
}

TEST_CASE("random interval models never wrap and are chordal") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        CircularArcModel m = random_interval_model(seed, 9);
        CHECK(validate(m).empty());
        for (const Arc& a : m.arcs()) CHECK(a.tail < a.head);
        CHECK(is_chordal(intersection_graph(m)));
        CHECK(random_interval_model(seed, 9) == m);
    }
}

TEST_CASE("spider fixtures meet their bend and shape contracts") {
    GridModel s3 = spider_fixture(SpiderFixtureKind::S3_B1EPG);
    CHECK(validate_model(s3).empty());
    CHECK(max_bends(s3) <= 1);
    CHECK_FALSE(s3.epr);
    CHECK(epg_intersection_graph(s3) == thick_spider(3));

    GridModel s6 = spider_fixture(SpiderFixtureKind::S6_B2EPR);
    CHECK(validate_model(s6).empty());
    CHECK(max_bends(s6) <= 2);
    CHECK(validate_epr(s6));
    CHECK(epg_intersection_graph(s6) == thick_spider(6));

    GridModel s7r = spider_fixture(SpiderFixtureKind::S7_B3EPR);
    CHECK(validate_model(s7r).empty());
    CHECK(max_bends(s7r) <= 3);
    CHECK(validate_epr(s7r));
    CHECK(epg_intersection_graph(s7r) == thick_spider(7));

    GridModel s7g = spider_fixture(SpiderFixtureKind::S7_B2EPG);
    CHECK(validate_model(s7g).empty());
    CHECK(max_bends(s7g) <= 2);
    CHECK_FALSE(s7g.epr);
    CHECK(epg_intersection_graph(s7g) == thick_spider(7));
}
