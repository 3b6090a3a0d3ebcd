#include "arcgrid/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace arcgrid {

int GridModel::find_path(const std::string& id) const {
    for (int i = 0; i < path_count(); ++i)
        if (paths[i].id == id) return i;
    return -1;
}

std::vector<std::string> validate_path(const GridPath& p) {
    std::vector<std::string> out;
    if (p.corners.size() < 2) {
        out.push_back("path '" + p.id + "' needs at least two corners");
        return out;
    }
    for (const GridPoint& c : p.corners)
        if (c.row < 0 || c.col < 0) {
            out.push_back("path '" + p.id + "' leaves the grid (negative coordinate)");
            return out;
        }
    int prev_axis = -1; // 0 horizontal, 1 vertical
    for (std::size_t i = 0; i + 1 < p.corners.size(); ++i) {
        const GridPoint& a = p.corners[i];
        const GridPoint& b = p.corners[i + 1];
        int axis;
        if (a.row == b.row && a.col != b.col) axis = 0;
        else if (a.col == b.col && a.row != b.row) axis = 1;
        else {
            out.push_back("path '" + p.id + "' corner " + std::to_string(i + 1) +
                          " does not advance along exactly one axis");
            return out;
        }
        if (axis == prev_axis) {
            out.push_back("path '" + p.id + "' has consecutive segments on the same axis");
            return out;
        }
        prev_axis = axis;
    }
    std::set<GridEdge> seen;
    for (std::size_t i = 0; i + 1 < p.corners.size(); ++i) {
        GridPoint a = p.corners[i];
        const GridPoint& b = p.corners[i + 1];
        int dr = (b.row > a.row) - (b.row < a.row);
        int dc = (b.col > a.col) - (b.col < a.col);
        while (a != b) {
            GridPoint next{a.row + dr, a.col + dc};
            if (!seen.insert(GridEdge::between(a, next)).second) {
                out.push_back("path '" + p.id + "' is not simple");
                return out;
            }
            a = next;
        }
    }
    return out;
}

void ensure_valid_path(const GridPath& p) {
    std::vector<std::string> v = validate_path(p);
    if (v.empty()) return;
    std::ostringstream os;
    os << "invalid grid path:";
    for (const std::string& s : v) os << "\n  " << s;
    throw std::invalid_argument(os.str());
}

int bend_count(const GridPath& p) {
    return static_cast<int>(p.corners.size()) - 2;
}

std::set<GridEdge> edge_set(const GridPath& p) {
    if (p.corners.size() < 2)
        throw std::invalid_argument("path '" + p.id + "' needs at least two corners");
    std::set<GridEdge> edges;
    for (std::size_t i = 0; i + 1 < p.corners.size(); ++i) {
        GridPoint a = p.corners[i];
        const GridPoint& b = p.corners[i + 1];
        bool horiz = a.row == b.row && a.col != b.col;
        bool vert = a.col == b.col && a.row != b.row;
        if (!horiz && !vert)
            throw std::invalid_argument(
                "path '" + p.id + "' corner " + std::to_string(i + 1) +
                " does not advance along exactly one axis");
        int dr = (b.row > a.row) - (b.row < a.row);
        int dc = (b.col > a.col) - (b.col < a.col);
        while (a != b) {
            GridPoint next{a.row + dr, a.col + dc};
            if (!edges.insert(GridEdge::between(a, next)).second)
                throw std::invalid_argument("path not simple");
            a = next;
        }
    }
    return edges;
}

std::vector<std::string> validate_model(const GridModel& m) {
    std::vector<std::string> out;
    std::set<std::string> ids;
    for (const GridPath& p : m.paths) {
        if (!ids.insert(p.id).second)
            out.push_back("duplicate path id '" + p.id + "'");
        std::vector<std::string> pv = validate_path(p);
        out.insert(out.end(), pv.begin(), pv.end());
    }
    if (m.epr && (m.rect.row1 >= m.rect.row2 || m.rect.col1 >= m.rect.col2))
        out.push_back("degenerate rectangle");
    return out;
}

void ensure_valid_model(const GridModel& m) {
    std::vector<std::string> v = validate_model(m);
    if (v.empty()) return;
    std::ostringstream os;
    os << "invalid grid model:";
    for (const std::string& s : v) os << "\n  " << s;
    throw std::invalid_argument(os.str());
}

Graph epg_intersection_graph(const GridModel& m) {
    Graph g;
    std::vector<std::set<GridEdge>> edges;
    edges.reserve(m.paths.size());
    for (const GridPath& p : m.paths) {
        g.add_vertex(p.id);
        edges.push_back(edge_set(p));
    }
    for (int i = 0; i < m.path_count(); ++i)
        for (int j = i + 1; j < m.path_count(); ++j) {
            const std::set<GridEdge>& small =
                edges[i].size() <= edges[j].size() ? edges[i] : edges[j];
            const std::set<GridEdge>& large =
                edges[i].size() <= edges[j].size() ? edges[j] : edges[i];
            for (const GridEdge& e : small)
                if (large.count(e)) {
                    g.add_edge_idx(i, j);
                    break;
                }
        }
    return g;
}

bool validate_epr(const GridModel& m) {
    if (!m.epr)
        throw std::invalid_argument("model does not declare a rectangle");
    if (m.rect.row1 >= m.rect.row2 || m.rect.col1 >= m.rect.col2)
        throw std::invalid_argument("degenerate rectangle");
    const GridRect& r = m.rect;
    for (const GridPath& p : m.paths)
        for (const GridEdge& e : edge_set(p)) {
            bool ok;
            if (e.horizontal())
                ok = (e.a.row == r.row1 || e.a.row == r.row2) &&
                     e.a.col >= r.col1 && e.b.col <= r.col2;
            else
                ok = (e.a.col == r.col1 || e.a.col == r.col2) &&
                     e.a.row >= r.row1 && e.b.row <= r.row2;
            if (!ok) return false;
        }
    return true;
}

int max_bends(const GridModel& m) {
    int best = 0;
    for (const GridPath& p : m.paths) best = std::max(best, bend_count(p));
    return best;
}

namespace {

constexpr const char* kNotWitness = "not a B1 C4 witness";

// 0=N(-row),1=E(+col),2=S(+row),3=W(-col): direction of the segment leaving
// `from` toward the collinear point `to`.
int leg_direction(GridPoint from, GridPoint to) {
    if (to.row < from.row) return 0;
    if (to.col > from.col) return 1;
    if (to.row > from.row) return 2;
    return 3;
}

bool contains_interior_point(const GridPath& straight, GridPoint p) {
    GridPoint a = straight.corners.front();
    GridPoint b = straight.corners.back();
    if (a.row == b.row)
        return p.row == a.row && p.col > std::min(a.col, b.col) &&
               p.col < std::max(a.col, b.col);
    return p.col == a.col && p.row > std::min(a.row, b.row) &&
           p.row < std::max(a.row, b.row);
}

} // namespace

C4Shape classify_c4(const std::array<GridPath, 4>& paths) {
    for (const GridPath& p : paths) {
        if (!validate_path(p).empty() || bend_count(p) > 1)
            throw std::invalid_argument(kNotWitness);
    }
    GridModel tmp;
    tmp.paths.assign(paths.begin(), paths.end());
    Graph g = epg_intersection_graph(tmp);
    if (g.edge_count() != 4) throw std::invalid_argument(kNotWitness);
    for (int v = 0; v < 4; ++v)
        if (g.degree_idx(v) != 2) throw std::invalid_argument(kNotWitness);
    // 2-regular on four vertices is either C4 or two triangles' worth of
    // edges split as 2K3 (impossible with 4 edges), so connectivity seals it.
    {
        std::vector<int> stack{0};
        std::vector<char> seen(4, 0);
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors_idx(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    ++cnt;
                    stack.push_back(u);
                }
        }
        if (cnt != 4) throw std::invalid_argument(kNotWitness);
    }

    std::vector<int> bent, straight;
    for (int i = 0; i < 4; ++i)
        (bend_count(paths[i]) == 1 ? bent : straight).push_back(i);

    if (straight.empty()) {
        GridPoint c = paths[0].corners[1];
        bool common = true;
        for (int i = 1; i < 4; ++i)
            if (paths[i].corners[1] != c) common = false;
        if (common) {
            // True pie: every consecutive pair must share exactly one of the
            // four legs leaving the common center.
            std::array<std::array<bool, 4>, 4> dirs{};
            for (int i = 0; i < 4; ++i) {
                dirs[i][leg_direction(c, paths[i].corners[0])] = true;
                dirs[i][leg_direction(c, paths[i].corners[2])] = true;
            }
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    int shared = 0;
                    for (int d = 0; d < 4; ++d)
                        if (dirs[i][d] && dirs[j][d]) ++shared;
                    if (g.adjacent_idx(i, j) ? shared != 1 : shared != 0)
                        throw std::invalid_argument(kNotWitness);
                }
            C4Shape s;
            s.kind = C4Kind::TruePie;
            s.center = c;
            return s;
        }
        std::set<int> rows, cols;
        std::set<GridPoint> pts;
        for (int i = 0; i < 4; ++i) {
            rows.insert(paths[i].corners[1].row);
            cols.insert(paths[i].corners[1].col);
            pts.insert(paths[i].corners[1]);
        }
        if (rows.size() == 2 && cols.size() == 2 && pts.size() == 4) {
            C4Shape s;
            s.kind = C4Kind::Frame;
            int r1 = *rows.begin(), r2 = *rows.rbegin();
            int c1 = *cols.begin(), c2 = *cols.rbegin();
            s.corners = {GridPoint{r1, c1}, GridPoint{r1, c2},
                         GridPoint{r2, c1}, GridPoint{r2, c2}};
            return s;
        }
        throw std::invalid_argument(kNotWitness);
    }

    if (bent.size() != 2 || straight.size() != 2)
        throw std::invalid_argument(kNotWitness);
    GridPoint c = paths[bent[0]].corners[1];
    if (paths[bent[1]].corners[1] != c) throw std::invalid_argument(kNotWitness);
    const GridPath& s0 = paths[straight[0]];
    const GridPath& s1 = paths[straight[1]];
    bool s0h = s0.corners.front().row == s0.corners.back().row;
    bool s1h = s1.corners.front().row == s1.corners.back().row;
    if (s0h == s1h) throw std::invalid_argument(kNotWitness);
    if (!contains_interior_point(s0, c) || !contains_interior_point(s1, c))
        throw std::invalid_argument(kNotWitness);
    if (g.adjacent_idx(straight[0], straight[1]))
        throw std::invalid_argument(kNotWitness);
    C4Shape s;
    s.kind = C4Kind::FalsePie;
    s.center = c;
    return s;
}

} // namespace arcgrid
