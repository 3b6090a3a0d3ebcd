#ifndef ARCGRID_TRANSFORMS_HPP
#define ARCGRID_TRANSFORMS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arcgrid/circle.hpp"
#include "arcgrid/graph.hpp"
#include "arcgrid/grid.hpp"

namespace arcgrid {

// Four gap midpoints, clockwise, such that no arc of the associated model
// contains two of them.
struct FourPoints {
    std::array<CirclePosition, 4> points;
};

// Four disjoint vertex sets used to certify separation: H1 and H3 must fall
// into different components once H2 and H4 are removed, and vice versa.
struct SeparationWitness {
    std::array<std::vector<std::string>, 4> sets;
};

// Every arc becomes a path with at most 3 bends; paths of arcs that wrap
// past the top of the numbering pairwise meet on the edge (0,0)-(0,1), and
// all shared edges lie on row 0 or column 0.  The edge-intersection graph
// of the output equals the arc-intersection graph of the input.
GridModel ca_to_b3_epg(const CircularArcModel& m);

// Embeds the circle clockwise onto a rectangle perimeter of 2n+4 unit
// edges (the four extra cells host the rectangle corners); each arc becomes
// the perimeter path between its endpoint images.  At most 4 bends; the
// intersection graph is preserved.
GridModel ca_to_b4_epr(const CircularArcModel& m);

// For a normal model: picks the first gap midpoint p, then the first gap
// midpoint q not covered by the union of arcs through p; places two
// rectangle corners inside p's gap and two inside q's.  Arcs through p or
// q bend exactly twice, all others are straight.  Throws std::runtime_error
// ("model not normal") when two arcs cover the circle.
GridModel nca_to_b2_epr(const CircularArcModel& m);

// Lexicographically first quadruple of gap midpoints no arc meets twice,
// or nullopt when no quadruple exists.
std::optional<FourPoints> find_four_points(const CircularArcModel& m);

// Perimeter embedding with one rectangle corner inside each of the four
// certified gaps; every path crosses at most one corner, so at most one
// bend.  Throws std::invalid_argument when fp is not certified for m.
GridModel nhca_to_b1_epr(const CircularArcModel& m, const FourPoints& fp);

// Inverse direction: reads each perimeter path as the open arc of perimeter
// positions it covers.  Coinciding path endpoints are ordered head-first
// (ties broken by path id) before renumbering, so paths that merely touch
// at a lattice point map to disjoint open arcs.  The intersection graph is
// preserved; when max_bends(m) <= 1 the output is additionally normal
// Helly.  Requires a model that declares and respects a rectangle.
CircularArcModel epr_to_ca(const GridModel& m);

// H_i = vertices whose arcs contain the i-th point; each is a clique.
// Throws std::runtime_error ("graph is chordal along this model") when
// some point lies in no arc.
SeparationWitness derive_separating_cliques(const CircularArcModel& m,
                                            const FourPoints& fp);

// True iff the four sets are nonempty, disjoint, each connected (each
// complete when require_complete), H1 and H3 fall into different components
// of g minus H2 and H4, and H2 and H4 fall into different components of g
// minus H1 and H3.  Returns false on any failed clause, including unknown
// vertex ids.
bool verify_separation(const Graph& g, const SeparationWitness& w,
                       bool require_complete);

} // namespace arcgrid

#endif
