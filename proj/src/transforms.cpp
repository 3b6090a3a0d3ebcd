#include "arcgrid/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace arcgrid {

GridModel ca_to_b3_epg(const CircularArcModel& m) {
    ensure_valid(m);
    int n = m.arc_count();
    GridModel out;
    for (const Arc& arc : m.arcs()) {
        int a = arc.tail, b = arc.head;
        GridPath p;
        p.id = arc.id;
        if (a < b) {
            p.corners = {GridPoint{0, b}, GridPoint{0, a}, GridPoint{a, a},
                         GridPoint{a, 0}, GridPoint{b, 0}};
        } else {
            // Wraps past the top of the numbering: anchored at the origin so
            // all such paths pairwise share the edge (0,0)-(0,1).
            p.corners = {GridPoint{0, 0}, GridPoint{0, b}, GridPoint{a, b},
                         GridPoint{a, 0}, GridPoint{2 * n + 1, 0}};
        }
        out.paths.push_back(std::move(p));
    }
    return out;
}

namespace {

// Clockwise embedding of the circle's marks onto a rectangle perimeter.
// corner_gaps[i] names the gap (1..2n, the gap clockwise after that mark)
// holding rectangle corner i; the four gaps must be listed in clockwise
// order starting anywhere (repeats allowed).
struct PerimeterEmbedding {
    GridRect rect;
    std::vector<GridPoint> ring;  // every perimeter point, clockwise from (0,0)
    std::vector<int> corner_pos;  // ring index of the 4 rectangle corners
    std::map<int, int> mark_pos;  // circle mark -> ring index
};

PerimeterEmbedding embed_on_perimeter(int n, const std::array<int, 4>& corner_gaps) {
    std::array<int, 4> load{};
    int total = 0;
    for (int i = 0; i < 4; ++i) {
        int diff = corner_gaps[(i + 1) % 4] - corner_gaps[i];
        load[i] = ((diff % (2 * n)) + 2 * n) % (2 * n);
        total += load[i];
    }
    if (total != 2 * n)
        throw std::logic_error("corner gaps are not in clockwise order");

    int w = std::max(load[0], load[2]) + 1;
    int h = std::max(load[1], load[3]) + 1;
    PerimeterEmbedding e;
    e.rect = GridRect{0, h, 0, w};
    for (int t = 0; t < w; ++t) e.ring.push_back(GridPoint{0, t});
    for (int t = 0; t < h; ++t) e.ring.push_back(GridPoint{t, w});
    for (int t = 0; t < w; ++t) e.ring.push_back(GridPoint{h, w - t});
    for (int t = 0; t < h; ++t) e.ring.push_back(GridPoint{h - t, 0});
    e.corner_pos = {0, w, w + h, 2 * w + h};
    for (int side = 0; side < 4; ++side)
        for (int j = 1; j <= load[side]; ++j) {
            int mark = (corner_gaps[side] + j - 1) % (2 * n) + 1;
            e.mark_pos[mark] = e.corner_pos[side] + j;
        }
    return e;
}

GridPath perimeter_path(const PerimeterEmbedding& e, const Arc& arc) {
    int size = static_cast<int>(e.ring.size());
    int from = e.mark_pos.at(arc.tail);
    int to = e.mark_pos.at(arc.head);
    GridPath p;
    p.id = arc.id;
    p.corners.push_back(e.ring[from]);
    for (int t = (from + 1) % size; t != to; t = (t + 1) % size)
        if (std::count(e.corner_pos.begin(), e.corner_pos.end(), t))
            p.corners.push_back(e.ring[t]);
    p.corners.push_back(e.ring[to]);
    return p;
}

GridModel perimeter_model(const CircularArcModel& m,
                          const std::array<int, 4>& corner_gaps) {
    PerimeterEmbedding e = embed_on_perimeter(m.arc_count(), corner_gaps);
    GridModel out;
    out.epr = true;
    out.rect = e.rect;
    for (const Arc& arc : m.arcs()) out.paths.push_back(perimeter_path(e, arc));
    return out;
}

} // namespace

GridModel ca_to_b4_epr(const CircularArcModel& m) {
    ensure_valid(m);
    int n = m.arc_count();
    // Spreading the corners evenly makes opposite sides carry equal loads,
    // so the perimeter has exactly 2n+4 unit edges.
    std::array<int, 4> gaps;
    for (int i = 0; i < 4; ++i) gaps[i] = 1 + i * 2 * n / 4;
    return perimeter_model(m, gaps);
}

GridModel nca_to_b2_epr(const CircularArcModel& m) {
    ensure_valid(m);
    if (!is_normal(m)) throw std::runtime_error("model not normal");
    int n = m.arc_count();
    int p = 1;
    std::vector<const Arc*> through_p;
    for (const Arc& a : m.arcs())
        if (contains_position(a, CirclePosition::gap_after(p)))
            through_p.push_back(&a);
    int q = 0;
    for (int k = 1; k <= 2 * n && q == 0; ++k) {
        if (k == p) continue;
        bool covered = false;
        for (const Arc* a : through_p)
            if (contains_position(*a, CirclePosition::gap_after(k))) {
                covered = true;
                break;
            }
        if (!covered) q = k;
    }
    if (q == 0)
        // Unreachable on normal models: arcs through one point whose union
        // covered the circle would include two arcs covering it.
        throw std::runtime_error("model not normal");
    return perimeter_model(m, {p, p, q, q});
}

std::optional<FourPoints> find_four_points(const CircularArcModel& m) {
    ensure_valid(m);
    int n = m.arc_count();
    int g = 2 * n;
    // conflict[a][b]: some arc contains the midpoints of both gaps.
    std::vector<std::vector<char>> conflict(g + 1, std::vector<char>(g + 1, 0));
    for (const Arc& a : m.arcs()) {
        std::vector<int> inside;
        for (int k = 1; k <= g; ++k)
            if (contains_position(a, CirclePosition::gap_after(k)))
                inside.push_back(k);
        for (std::size_t i = 0; i < inside.size(); ++i)
            for (std::size_t j = i + 1; j < inside.size(); ++j) {
                conflict[inside[i]][inside[j]] = 1;
                conflict[inside[j]][inside[i]] = 1;
            }
    }
    for (int a = 1; a <= g; ++a)
        for (int b = a + 1; b <= g; ++b) {
            if (conflict[a][b]) continue;
            for (int c = b + 1; c <= g; ++c) {
                if (conflict[a][c] || conflict[b][c]) continue;
                for (int d = c + 1; d <= g; ++d) {
                    if (conflict[a][d] || conflict[b][d] || conflict[c][d])
                        continue;
                    FourPoints fp;
                    fp.points = {
                        CirclePosition::gap_after(a), CirclePosition::gap_after(b),
                        CirclePosition::gap_after(c), CirclePosition::gap_after(d)};
                    return fp;
                }
            }
        }
    return std::nullopt;
}

namespace {

// Gap indices of the four points, ascending; throws unless they are four
// distinct gap midpoints no arc of m meets twice.
std::array<int, 4> certified_gaps(const CircularArcModel& m, const FourPoints& fp) {
    std::array<int, 4> gaps{};
    for (int i = 0; i < 4; ++i) {
        if (fp.points[i].is_endpoint())
            throw std::invalid_argument(
                "four points not certified for this model: not a gap midpoint");
        gaps[i] = fp.points[i].gap_index();
        if (gaps[i] < 1 || gaps[i] > 2 * m.arc_count())
            throw std::invalid_argument(
                "four points not certified for this model: out of range");
    }
    std::sort(gaps.begin(), gaps.end());
    for (int i = 0; i < 3; ++i)
        if (gaps[i] == gaps[i + 1])
            throw std::invalid_argument(
                "four points not certified for this model: repeated point");
    for (const Arc& a : m.arcs()) {
        int hit = 0;
        for (int k : gaps)
            if (contains_position(a, CirclePosition::gap_after(k))) ++hit;
        if (hit > 1)
            throw std::invalid_argument(
                "four points not certified for this model: arc '" + a.id +
                "' contains two of them");
    }
    return gaps;
}

} // namespace

GridModel nhca_to_b1_epr(const CircularArcModel& m, const FourPoints& fp) {
    ensure_valid(m);
    std::array<int, 4> gaps = certified_gaps(m, fp);
    return perimeter_model(m, gaps);
}

CircularArcModel epr_to_ca(const GridModel& m) {
    ensure_valid_model(m);
    if (!m.epr)
        throw std::invalid_argument("model does not declare a rectangle");
    if (!validate_epr(m))
        throw std::invalid_argument("paths leave the rectangle perimeter");

    const GridRect& r = m.rect;
    int w = r.col2 - r.col1, h = r.row2 - r.row1;
    std::vector<GridPoint> ring;
    for (int t = 0; t < w; ++t) ring.push_back(GridPoint{r.row1, r.col1 + t});
    for (int t = 0; t < h; ++t) ring.push_back(GridPoint{r.row1 + t, r.col2});
    for (int t = 0; t < w; ++t) ring.push_back(GridPoint{r.row2, r.col2 - t});
    for (int t = 0; t < h; ++t) ring.push_back(GridPoint{r.row2 - t, r.col1});
    int size = static_cast<int>(ring.size());
    std::map<GridPoint, int> pos;
    for (int i = 0; i < size; ++i) pos[ring[i]] = i;

    struct Event {
        int point;
        int kind; // 0 = head, 1 = tail: heads first so touching paths split
        std::string id;
        int path_index;
        bool operator<(const Event& o) const {
            if (point != o.point) return point < o.point;
            if (kind != o.kind) return kind < o.kind;
            return id < o.id;
        }
    };
    std::vector<Event> events;
    for (int pi = 0; pi < m.path_count(); ++pi) {
        const GridPath& p = m.paths[pi];
        std::vector<char> used(size, 0);
        for (const GridEdge& e : edge_set(p)) {
            int i = pos.at(e.a), j = pos.at(e.b);
            if ((i + 1) % size == j) used[i] = 1;
            else if ((j + 1) % size == i) used[j] = 1;
            else throw std::logic_error("perimeter edge between non-adjacent ring points");
        }
        int tail = -1, head = -1;
        for (int t = 0; t < size; ++t) {
            int prev = (t + size - 1) % size;
            if (used[t] && !used[prev]) tail = t;
            if (!used[t] && used[prev]) head = t;
        }
        if (tail < 0 || head < 0)
            throw std::invalid_argument(
                "path '" + p.id + "' covers the whole rectangle perimeter");
        events.push_back(Event{tail, 1, p.id, pi});
        events.push_back(Event{head, 0, p.id, pi});
    }
    std::sort(events.begin(), events.end());
    std::vector<std::pair<int, int>> arcs(m.path_count(), {0, 0});
    for (std::size_t i = 0; i < events.size(); ++i) {
        int label = static_cast<int>(i) + 1;
        if (events[i].kind == 1) arcs[events[i].path_index].first = label;
        else arcs[events[i].path_index].second = label;
    }
    CircularArcModel out;
    for (int pi = 0; pi < m.path_count(); ++pi)
        out.add_arc(m.paths[pi].id, arcs[pi].first, arcs[pi].second);
    return out;
}

SeparationWitness derive_separating_cliques(const CircularArcModel& m,
                                            const FourPoints& fp) {
    ensure_valid(m);
    std::array<int, 4> gaps = certified_gaps(m, fp);
    SeparationWitness w;
    for (int i = 0; i < 4; ++i) {
        for (const Arc& a : m.arcs())
            if (contains_position(a, CirclePosition::gap_after(gaps[i])))
                w.sets[i].push_back(a.id);
        if (w.sets[i].empty())
            throw std::runtime_error("graph is chordal along this model");
    }
    return w;
}

bool verify_separation(const Graph& g, const SeparationWitness& w,
                       bool require_complete) {
    std::array<std::vector<int>, 4> sets;
    std::set<int> all;
    for (int i = 0; i < 4; ++i) {
        if (w.sets[i].empty()) return false;
        for (const std::string& id : w.sets[i]) {
            if (!g.has_vertex(id)) return false;
            int v = g.index_of(id);
            if (!all.insert(v).second) return false; // sets must be disjoint
            sets[i].push_back(v);
        }
    }
    auto connected_within = [&](const std::vector<int>& vs) {
        std::set<int> inside(vs.begin(), vs.end());
        std::vector<int> stack{vs[0]};
        std::set<int> seen{vs[0]};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors_idx(v))
                if (inside.count(u) && seen.insert(u).second) stack.push_back(u);
        }
        return seen.size() == vs.size();
    };
    for (int i = 0; i < 4; ++i) {
        if (require_complete) {
            for (std::size_t a = 0; a < sets[i].size(); ++a)
                for (std::size_t b = a + 1; b < sets[i].size(); ++b)
                    if (!g.adjacent_idx(sets[i][a], sets[i][b])) return false;
        } else if (!connected_within(sets[i])) {
            return false;
        }
    }
    auto separated = [&](const std::vector<int>& from, const std::vector<int>& to,
                         const std::vector<int>& cut1, const std::vector<int>& cut2) {
        std::vector<char> removed(g.vertex_count(), 0);
        for (int v : cut1) removed[v] = 1;
        for (int v : cut2) removed[v] = 1;
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> stack;
        for (int v : from)
            if (!removed[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors_idx(v))
                if (!removed[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        for (int v : to)
            if (seen[v]) return false;
        return true;
    };
    return separated(sets[0], sets[2], sets[1], sets[3]) &&
           separated(sets[1], sets[3], sets[0], sets[2]);
}

} // namespace arcgrid
