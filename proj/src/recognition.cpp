#include "arcgrid/recognition.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

#include "arcgrid/families.hpp"
#include "arcgrid/transforms.hpp"

namespace arcgrid {

bool is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 3) return true;

    // Maximum-cardinality search; ties broken by smallest index so the
    // ordering (and hence the whole run) is deterministic.
    std::vector<int> weight(n, 0), order;
    std::vector<char> picked(n, 0);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!picked[v] && (best == -1 || weight[v] > weight[best])) best = v;
        picked[best] = 1;
        order.push_back(best);
        for (int u : g.neighbors_idx(best))
            if (!picked[u]) ++weight[u];
    }

    // The reverse of the search order is a perfect elimination ordering iff
    // the graph is chordal: each vertex's earliest-eliminated later neighbor
    // must dominate its remaining later neighbors.
    std::vector<int> elim(order.rbegin(), order.rend());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[elim[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = elim[i];
        std::vector<int> later;
        int parent = -1, parent_pos = n;
        for (int w : g.neighbors_idx(v)) {
            if (pos[w] <= i) continue;
            later.push_back(w);
            if (pos[w] < parent_pos) {
                parent_pos = pos[w];
                parent = w;
            }
        }
        for (int w : later)
            if (w != parent && !g.adjacent_idx(parent, w)) return false;
    }
    return true;
}

bool contains_induced(const Graph& g, const Graph& h) {
    return contains_induced(g, h, false);
}

bool contains_induced(const Graph& g, const Graph& h, bool h_vertex_transitive) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    if (nh == 0) return true;
    if (nh > ng) return false;

    std::vector<int> hdeg(nh), gdeg(ng);
    for (int v = 0; v < nh; ++v) hdeg[v] = h.degree_idx(v);
    for (int v = 0; v < ng; ++v) gdeg[v] = g.degree_idx(v);

    // Assignment order: a highest-degree start, then always the target
    // vertex with the most already-ordered neighbors (ties by degree, then
    // index) so adjacency constraints bite as early as possible.
    std::vector<int> order;
    std::vector<char> ordered(nh, 0);
    order.reserve(nh);
    int first = 0;
    for (int v = 1; v < nh; ++v)
        if (hdeg[v] > hdeg[first]) first = v;
    order.push_back(first);
    ordered[first] = 1;
    while (static_cast<int>(order.size()) < nh) {
        int best = -1, best_placed = -1;
        for (int v = 0; v < nh; ++v) {
            if (ordered[v]) continue;
            int placed = 0;
            for (int u : order)
                if (h.adjacent_idx(v, u)) ++placed;
            if (best == -1 || placed > best_placed ||
                (placed == best_placed && hdeg[v] > hdeg[best])) {
                best = v;
                best_placed = placed;
            }
        }
        order.push_back(best);
        ordered[best] = 1;
    }

    std::vector<int> image(nh, -1);
    std::vector<char> used(ng, 0);

    std::function<bool(int)> place = [&](int p) -> bool {
        if (p == nh) return true;
        const int hv = order[p];
        // A vertex-transitive target may be rooted at the minimum-index
        // host vertex of its image, so later images only look upward.
        const int start = (h_vertex_transitive && p > 0) ? image[0] + 1 : 0;
        for (int c = start; c < ng; ++c) {
            if (used[c] || gdeg[c] < hdeg[hv]) continue;
            bool ok = true;
            for (int q = 0; q < p && ok; ++q)
                ok = h.adjacent_idx(hv, order[q]) == g.adjacent_idx(c, image[q]);
            if (!ok) continue;
            used[c] = 1;
            image[p] = c;
            if (place(p + 1)) return true;
            used[c] = 0;
        }
        return false;
    };
    return place(0);
}

bool cycle_power_contains_criterion(long long n, long long k, long long t) {
    if (k < 2 || t < 2 || n <= 2 * k + 1)
        throw std::invalid_argument(
            "cycle_power_contains_criterion: requires k >= 2, t >= 2, 2k+1 < n");
    // (4t-5)/(t-1) < n/k <= (4t-1)/t, cross-multiplied to stay exact.
    return (4 * t - 5) * k < n * (t - 1) && n * t <= (4 * t - 1) * k;
}

std::optional<int> has_power_cycle_obstruction(const Graph& g, int t_max) {
    const int n = g.vertex_count();
    for (int t = 2; t <= t_max && 4 * t - 1 <= n; ++t)
        if (contains_induced(g, cycle_power(4 * t - 1, t), true)) return t;
    return std::nullopt;
}

namespace {

// 0-bend rectangle model from a model none of whose arcs covers the midpoint
// of gap `cut`: endpoints are relabelled clockwise starting right after the
// cut, making every arc a top-row interval.
GridModel interval_layout(const CircularArcModel& m, int cut) {
    const int n = m.arc_count();
    const int marks = 2 * n;
    GridModel out;
    out.epr = true;
    out.rect = GridRect{0, 1, 0, marks + 1};
    auto relabel = [&](int e) { return (e - cut - 1 + marks) % marks + 1; };
    for (const Arc& a : m.arcs()) {
        GridPath p;
        p.id = a.id;
        p.corners = {GridPoint{0, relabel(a.tail)}, GridPoint{0, relabel(a.head)}};
        out.paths.push_back(std::move(p));
    }
    return out;
}

} // namespace

B1Decision decide_b1_epr(const CircularArcModel& m) {
    ensure_valid(m);
    B1Decision d;
    if (!is_normal_helly(m)) {
        d.verdict = B1Verdict::No;
        d.reason = B1Reason::NotNHModel;
        return d;
    }
    const Graph g = intersection_graph(m);
    d.chordal = is_chordal(g);
    if (d.chordal) {
        std::vector<int> gaps = uncovered_gap_midpoints(m);
        if (!gaps.empty()) {
            d.verdict = B1Verdict::YesInterval;
            d.model = interval_layout(m, gaps.front());
            return d;
        }
        CircularArcModel shrunk = shrink_dominated_fixpoint(m);
        gaps = uncovered_gap_midpoints(shrunk);
        if (!gaps.empty()) {
            d.verdict = B1Verdict::YesInterval;
            d.model = interval_layout(shrunk, gaps.front());
            return d;
        }
        d.verdict = B1Verdict::No;
        d.reason = B1Reason::NoFourPoints;
        return d;
    }
    std::optional<FourPoints> fp = find_four_points(m);
    if (fp) {
        d.verdict = B1Verdict::Yes;
        d.model = nhca_to_b1_epr(m, *fp);
        return d;
    }
    d.verdict = B1Verdict::No;
    d.reason = B1Reason::NoFourPoints;
    d.obstruction_t = has_power_cycle_obstruction(g, (g.vertex_count() + 1) / 4);
    return d;
}

} // namespace arcgrid
