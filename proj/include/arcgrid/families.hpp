#ifndef ARCGRID_FAMILIES_HPP
#define ARCGRID_FAMILIES_HPP

#include <cstdint>

#include "arcgrid/circle.hpp"
#include "arcgrid/graph.hpp"
#include "arcgrid/grid.hpp"

namespace arcgrid {

// Vertices v1..vn; vi ~ vj iff their circular distance is at most k.
Graph cycle_power(int n, int k);

// Arc i = (2i-1, 2i+2k) with endpoints wrapped into 1..2n; its
// intersection graph is cycle_power(n, k).  Requires 2k+1 < n so every
// arc is proper.
CircularArcModel canonical_cycle_power_model(int n, int k);

// Clique c1..cn plus stable set s1..sn with ci ~ sj iff i != j.
Graph thick_spider(int n);

// Deterministic per seed: a uniformly random assignment of the 2n
// endpoints to n tail/head pairs.  Ids v1..vn.
CircularArcModel random_ca_model(std::uint64_t seed, int n);

// Like random_ca_model but every pair is oriented min->max, so no arc
// wraps past the top of the numbering and the model is an interval model.
CircularArcModel random_interval_model(std::uint64_t seed, int n);

enum class SpiderFixtureKind { S3_B1EPG, S6_B2EPR, S7_B3EPR, S7_B2EPG };

// Frozen grid models witnessing bend bounds for thick spiders: S3 with 1
// bend on the open grid, S6 with 2 bends on a rectangle, S7 with 3 bends
// on a rectangle, and S7 with 2 bends on the open grid.
GridModel spider_fixture(SpiderFixtureKind which);

} // namespace arcgrid

#endif
