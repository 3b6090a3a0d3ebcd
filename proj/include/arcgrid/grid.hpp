#ifndef ARCGRID_GRID_HPP
#define ARCGRID_GRID_HPP

#include <array>
#include <set>
#include <string>
#include <vector>

#include "arcgrid/graph.hpp"

namespace arcgrid {

struct GridPoint {
    int row = 0;
    int col = 0;

    bool operator==(const GridPoint& o) const {
        return row == o.row && col == o.col;
    }
    bool operator!=(const GridPoint& o) const { return !(*this == o); }
    bool operator<(const GridPoint& o) const {
        return row != o.row ? row < o.row : col < o.col;
    }
};

// Unit-length grid edge between two adjacent lattice points, stored with
// the smaller point first so each edge has one canonical form.
struct GridEdge {
    GridPoint a, b;

    static GridEdge between(GridPoint p, GridPoint q) {
        return q < p ? GridEdge{q, p} : GridEdge{p, q};
    }
    bool horizontal() const { return a.row == b.row; }
    bool operator==(const GridEdge& o) const { return a == o.a && b == o.b; }
    bool operator<(const GridEdge& o) const {
        return a != o.a ? a < o.a : b < o.b;
    }
};

// Axis-aligned lattice path given by its corner sequence: first and last
// entries are the path endpoints, interior entries are bend points.
struct GridPath {
    std::string id;
    std::vector<GridPoint> corners;
};

// Structural checks: >= 2 corners, nonnegative coordinates, consecutive
// corners differ in exactly one coordinate (positive-length axis-aligned
// segments), consecutive segments alternate direction, and no grid edge is
// traversed twice.  Returns violations; empty means valid.
std::vector<std::string> validate_path(const GridPath& p);
void ensure_valid_path(const GridPath& p);

// Number of interior corners.
int bend_count(const GridPath& p);

// Unit edges traversed by the path.  Throws std::invalid_argument
// ("path not simple") if an edge repeats, and rejects degenerate paths.
std::set<GridEdge> edge_set(const GridPath& p);

struct GridRect {
    int row1 = 0, row2 = 0; // row1 < row2
    int col1 = 0, col2 = 0; // col1 < col2
};

struct GridModel {
    std::vector<GridPath> paths;
    bool epr = false;  // constrained to a rectangle boundary when true
    GridRect rect;     // meaningful only when epr

    int path_count() const { return static_cast<int>(paths.size()); }
    // Index of the path with the given id, or -1.
    int find_path(const std::string& id) const;
};

std::vector<std::string> validate_model(const GridModel& m);
void ensure_valid_model(const GridModel& m);

// Vertex per path id; edge iff the paths share at least one grid edge.
Graph epg_intersection_graph(const GridModel& m);

// True iff every unit edge of every path lies on the declared rectangle's
// perimeter.  Requires the model to declare EPR mode.
bool validate_epr(const GridModel& m);

// Maximum bend_count over the paths; 0 for an empty model.
int max_bends(const GridModel& m);

enum class C4Kind { TruePie, FalsePie, Frame };

struct C4Shape {
    C4Kind kind = C4Kind::TruePie;
    GridPoint center;                  // TruePie / FalsePie
    std::array<GridPoint, 4> corners;  // Frame, row-major order
};

// Classifies four paths of at most one bend each that induce a chordless
// 4-cycle in their edge-intersection graph.  Throws std::invalid_argument
// ("not a B1 C4 witness") when the inputs violate those requirements or
// match none of the three shapes.
C4Shape classify_c4(const std::array<GridPath, 4>& paths);

} // namespace arcgrid

#endif
