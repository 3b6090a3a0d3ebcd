#ifndef ARCGRID_CIRCLE_HPP
#define ARCGRID_CIRCLE_HPP

#include <string>
#include <vector>

#include "arcgrid/graph.hpp"

namespace arcgrid {

// Positions on a circle whose circumference carries integer marks 1..2n
// clockwise.  A position is either one of those marks or the midpoint of a
// gap between consecutive marks.  Encoded in half-unit ticks so both kinds
// are exact integers: mark k sits at tick 2k, the midpoint of the gap
// clockwise after mark k sits at tick 2k+1.
struct CirclePosition {
    int tick = 0;

    static CirclePosition endpoint(int k) { return {2 * k}; }
    static CirclePosition gap_after(int k) { return {2 * k + 1}; }

    bool is_endpoint() const { return tick % 2 == 0; }
    // For gap midpoints: the mark immediately counterclockwise.
    int gap_index() const { return (tick - 1) / 2; }
    int endpoint_index() const { return tick / 2; }

    bool operator==(const CirclePosition& o) const { return tick == o.tick; }
    bool operator!=(const CirclePosition& o) const { return tick != o.tick; }
    bool operator<(const CirclePosition& o) const { return tick < o.tick; }
};

// True iff x lies strictly inside the clockwise sweep from a to b.
// Clockwise order is increasing tick value (wrapping); the predicate only
// compares values, so it is independent of the circumference.
inline bool cyclic_strictly_between(int a, int x, int b) {
    if (a < b) return a < x && x < b;
    return x > a || x < b;
}

// Open arc traversed clockwise from tail to head, endpoints excluded.
// An arc with tail > head wraps past the top of the numbering (it contains
// the midpoint between mark 2n and mark 1).
struct Arc {
    std::string id;
    int tail = 0;
    int head = 0;
};

class CircularArcModel {
public:
    CircularArcModel() = default;

    void add_arc(const std::string& id, int tail, int head) {
        arcs_.push_back(Arc{id, tail, head});
    }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(int i) const { return arcs_[i]; }
    // Index of the arc with the given id, or -1.
    int find_arc(const std::string& id) const;

    bool operator==(const CircularArcModel& o) const;
    bool operator!=(const CircularArcModel& o) const { return !(*this == o); }

private:
    std::vector<Arc> arcs_;
};

// Structural checks: ids distinct, tail != head per arc, and the 2n endpoint
// indices exactly cover {1..2n}.  Returns human-readable violations; an
// empty list means the model is valid.
std::vector<std::string> validate(const CircularArcModel& m);
// Throws std::invalid_argument listing all violations if any exist.
void ensure_valid(const CircularArcModel& m);

bool contains_position(const Arc& a, CirclePosition p);
bool arcs_intersect(const Arc& a, const Arc& b);
// True iff the open point set of inner is a proper subset of outer's.
bool properly_contains(const Arc& outer, const Arc& inner);

// True iff the union of the given arcs is the whole circle.  Decided by
// sampling every mark 1..2n and every gap midpoint; arcs only change
// membership at marks, so the 4n samples are exact.
bool covers_circle(const std::vector<Arc>& arcs, int n);

// No two arcs cover the whole circle.
bool is_normal(const CircularArcModel& m);
// No subset of at most three arcs covers the whole circle.
bool is_normal_helly(const CircularArcModel& m);

// Graph with one vertex per arc id; edge iff the open arcs overlap.
Graph intersection_graph(const CircularArcModel& m);

// Gap indices k (1..2n) whose midpoint lies inside no arc, ascending.
std::vector<int> uncovered_gap_midpoints(const CircularArcModel& m);

// If some vertex v dominates a vertex w in the intersection graph and
// replacing w's arc by the overlap of the two arcs actually changes the
// model, returns the model with the first such replacement applied
// (pairs scanned in arc order); otherwise returns m unchanged.  Endpoints
// are renumbered back to distinct integers 1..2n, and the intersection
// graph is preserved.  Throws std::runtime_error if the selected overlap
// is empty or disconnected ("domination not realizable in this model").
CircularArcModel shrink_dominated(const CircularArcModel& m);

// Applies dominated-arc shrinking until no application changes the model.
// Steps that would revisit an earlier model are refused (two arcs that
// dominate each other could otherwise trade nestings forever), so the
// procedure terminates on every valid model.
CircularArcModel shrink_dominated_fixpoint(const CircularArcModel& m);

} // namespace arcgrid

#endif
