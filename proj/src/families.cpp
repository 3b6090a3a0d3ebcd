#include "arcgrid/families.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcgrid {

Graph cycle_power(int n, int k) {
    if (n < 3) throw std::invalid_argument("cycle_power requires n >= 3");
    if (k < 1) throw std::invalid_argument("cycle_power requires k >= 1");
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int d = std::min(j - i, n - (j - i));
            if (d <= k) g.add_edge_idx(i, j);
        }
    return g;
}

CircularArcModel canonical_cycle_power_model(int n, int k) {
    if (n < 3) throw std::invalid_argument("canonical model requires n >= 3");
    if (k < 1) throw std::invalid_argument("canonical model requires k >= 1");
    if (2 * k + 1 >= n)
        throw std::invalid_argument("canonical model requires 2k+1 < n");
    CircularArcModel m;
    for (int i = 1; i <= n; ++i) {
        int tail = 2 * i - 1;
        int head = (2 * i + 2 * k - 1) % (2 * n) + 1;
        m.add_arc("v" + std::to_string(i), tail, head);
    }
    return m;
}

Graph thick_spider(int n) {
    if (n < 2) throw std::invalid_argument("thick_spider requires n >= 2");
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex("c" + std::to_string(i));
    for (int i = 1; i <= n; ++i) g.add_vertex("s" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge_idx(i, j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) g.add_edge_idx(i, n + j);
    return g;
}

namespace {

// Fisher-Yates with explicit modulo draws so every platform produces the
// same permutation for the same seed.
std::vector<int> shuffled_endpoints(std::uint64_t seed, int n) {
    std::vector<int> perm(2 * n);
    for (int i = 0; i < 2 * n; ++i) perm[i] = i + 1;
    std::mt19937_64 rng(seed);
    for (int i = 2 * n - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

} // namespace

CircularArcModel random_ca_model(std::uint64_t seed, int n) {
    if (n < 1) throw std::invalid_argument("random_ca_model requires n >= 1");
    std::vector<int> perm = shuffled_endpoints(seed, n);
    CircularArcModel m;
    for (int i = 0; i < n; ++i)
        m.add_arc("v" + std::to_string(i + 1), perm[2 * i], perm[2 * i + 1]);
    return m;
}

CircularArcModel random_interval_model(std::uint64_t seed, int n) {
    if (n < 1)
        throw std::invalid_argument("random_interval_model requires n >= 1");
    std::vector<int> perm = shuffled_endpoints(seed, n);
    CircularArcModel m;
    for (int i = 0; i < n; ++i) {
        int a = perm[2 * i], b = perm[2 * i + 1];
        m.add_arc("v" + std::to_string(i + 1), std::min(a, b), std::max(a, b));
    }
    return m;
}

namespace {

GridPath path(const char* id, std::vector<GridPoint> corners) {
    GridPath p;
    p.id = id;
    p.corners = std::move(corners);
    return p;
}

// One-bend witness for the 3-spider: the clique meets along the cross at
// (5,5); each stable vertex sits on the one cross arm its non-neighbor
// avoids.
GridModel s3_b1epg() {
    GridModel m;
    m.paths = {
        path("c1", {{5, 1}, {5, 5}, {1, 5}}),
        path("c2", {{1, 5}, {5, 5}, {5, 9}}),
        path("c3", {{5, 1}, {5, 9}}),
        path("s1", {{5, 6}, {5, 8}}),
        path("s2", {{5, 1}, {5, 3}}),
        path("s3", {{1, 5}, {3, 5}}),
    };
    return m;
}

// Two-bend rectangle witness for the 6-spider: stable vertices occupy the
// four corners and the two horizontal side middles; each clique path runs
// almost all the way around, stopping just short of its non-neighbor.
GridModel s6_b2epr() {
    GridModel m;
    m.epr = true;
    m.rect = GridRect{0, 12, 0, 12};
    m.paths = {
        path("c1", {{0, 4}, {0, 12}, {12, 12}, {12, 1}}),
        path("c2", {{1, 0}, {12, 0}, {12, 12}, {1, 12}}),
        path("c3", {{0, 8}, {0, 0}, {12, 0}, {12, 11}}),
        path("c4", {{12, 8}, {12, 0}, {0, 0}, {0, 11}}),
        path("c5", {{11, 0}, {0, 0}, {0, 12}, {11, 12}}),
        path("c6", {{12, 4}, {12, 12}, {0, 12}, {0, 1}}),
        path("s1", {{3, 0}, {0, 0}, {0, 3}}),
        path("s2", {{0, 5}, {0, 7}}),
        path("s3", {{0, 9}, {0, 12}, {3, 12}}),
        path("s4", {{9, 12}, {12, 12}, {12, 9}}),
        path("s5", {{12, 5}, {12, 7}}),
        path("s6", {{12, 3}, {12, 0}, {9, 0}}),
    };
    return m;
}

// Three-bend rectangle witness for the 7-spider: like the 6-spider layout
// with a seventh stable vertex on the right side; the extra bend lets each
// clique path clear one more non-neighbor.
GridModel s7_b3epr() {
    GridModel m;
    m.epr = true;
    m.rect = GridRect{0, 12, 0, 12};
    m.paths = {
        path("c1", {{0, 4}, {0, 12}, {12, 12}, {12, 0}, {4, 0}}),
        path("c2", {{0, 3}, {0, 0}, {12, 0}, {12, 12}, {1, 12}}),
        path("c3", {{0, 8}, {0, 0}, {12, 0}, {12, 12}, {4, 12}}),
        path("c4", {{8, 12}, {0, 12}, {0, 0}, {12, 0}, {12, 8}}),
        path("c5", {{12, 3}, {12, 0}, {0, 0}, {0, 12}, {12, 12}}),
        path("c6", {{12, 4}, {12, 12}, {0, 12}, {0, 0}, {8, 0}}),
        path("c7", {{0, 12}, {0, 0}, {12, 0}, {12, 12}}),
        path("s1", {{3, 0}, {0, 0}, {0, 3}}),
        path("s2", {{0, 5}, {0, 7}}),
        path("s3", {{0, 9}, {0, 12}, {3, 12}}),
        path("s4", {{9, 12}, {12, 12}, {12, 9}}),
        path("s5", {{12, 5}, {12, 7}}),
        path("s6", {{12, 3}, {12, 0}, {9, 0}}),
        path("s7", {{5, 12}, {7, 12}}),
    };
    return m;
}

// Two-bend open-grid witness for the 7-spider; coordinates frozen from a
// one-time search (tools/derive_spiders.cpp plus an exhaustive single-path
// repair pass over the 13x13 grid).
GridModel s7_b2epg() {
    GridModel m;
    m.paths = {
        path("c1", {{12, 10}, {4, 10}, {4, 0}, {12, 0}}),
        path("c2", {{2, 0}, {12, 0}, {12, 12}, {2, 12}}),
        path("c3", {{12, 8}, {12, 0}, {2, 0}, {2, 11}}),
        path("c4", {{0, 4}, {12, 4}, {12, 0}, {5, 0}}),
        path("c5", {{4, 0}, {4, 12}, {12, 12}, {12, 0}}),
        path("c6", {{12, 0}, {12, 7}, {4, 7}, {4, 3}}),
        path("c7", {{4, 0}, {4, 7}, {12, 7}, {12, 2}}),
        path("s1", {{12, 4}, {12, 3}, {1, 3}}),
        path("s2", {{2, 2}, {2, 4}, {4, 4}, {4, 2}}),
        path("s3", {{12, 12}, {4, 12}, {4, 4}, {10, 4}}),
        path("s4", {{1, 10}, {12, 10}, {12, 5}, {5, 5}}),
        path("s5", {{12, 7}, {6, 7}, {6, 0}, {8, 0}}),
        path("s6", {{6, 0}, {4, 0}, {4, 1}, {12, 1}}),
        path("s7", {{12, 2}, {12, 0}, {9, 0}, {9, 8}}),
    };
    return m;
}

} // namespace

GridModel spider_fixture(SpiderFixtureKind which) {
    switch (which) {
        case SpiderFixtureKind::S3_B1EPG: return s3_b1epg();
        case SpiderFixtureKind::S6_B2EPR: return s6_b2epr();
        case SpiderFixtureKind::S7_B3EPR: return s7_b3epr();
        case SpiderFixtureKind::S7_B2EPG: return s7_b2epg();
    }
    throw std::invalid_argument("unknown fixture");
}

} // namespace arcgrid
