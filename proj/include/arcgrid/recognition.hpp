#pragma once

#include <optional>

#include "arcgrid/circle.hpp"
#include "arcgrid/graph.hpp"
#include "arcgrid/grid.hpp"

namespace arcgrid {

// True iff g has no chordless cycle of length at least four, decided by a
// maximum-cardinality search followed by a perfect-elimination check.
bool is_chordal(const Graph& g);

// True iff g has an induced subgraph isomorphic to h.  Backtracking search;
// exponential in the worst case, intended for small targets (|V(h)| <~ 12).
bool contains_induced(const Graph& g, const Graph& h);

// As above.  When h_vertex_transitive is set the caller asserts that h has a
// vertex-transitive automorphism group, which lets the search pin the first
// target vertex to the minimum-index host vertex of the image.
bool contains_induced(const Graph& g, const Graph& h, bool h_vertex_transitive);

// Exact integer evaluation of (4t-5)/(t-1) < n/k <= (4t-1)/t, which decides
// whether the k-th power of an n-cycle contains the t-th power of a
// (4t-1)-cycle as an induced subgraph.  Requires k >= 2, t >= 2, 2k+1 < n.
bool cycle_power_contains_criterion(long long n, long long k, long long t);

// Smallest t in [2, t_max] such that g contains the t-th power of a
// (4t-1)-cycle as an induced subgraph, or nullopt.  t is further capped so
// that 4t-1 <= |V(g)|.
std::optional<int> has_power_cycle_obstruction(const Graph& g, int t_max);

enum class B1Verdict { Yes, YesInterval, No };
enum class B1Reason { None, NotNHModel, PowerCycleObstruction, NoFourPoints };

struct B1Decision {
    B1Verdict verdict = B1Verdict::No;
    B1Reason reason = B1Reason::None;
    // Diagnostic: smallest t with an induced (4t-1)-cycle power, when one was
    // searched for and found.
    std::optional<int> obstruction_t;
    bool chordal = false;
    // Present for Yes (at most one bend per path) and YesInterval (no bends).
    std::optional<GridModel> model;
};

// Full decision procedure on a circular-arc model: normal-Helly gate, then
// the chordal/interval branch (cut at an uncovered gap, shrinking dominated
// arcs first if the circle is covered), else the four-point construction.
B1Decision decide_b1_epr(const CircularArcModel& m);

} // namespace arcgrid
