#include "arcgrid/circle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace arcgrid {

int CircularArcModel::find_arc(const std::string& id) const {
    for (int i = 0; i < arc_count(); ++i)
        if (arcs_[i].id == id) return i;
    return -1;
}

bool CircularArcModel::operator==(const CircularArcModel& o) const {
    if (arc_count() != o.arc_count()) return false;
    auto key = [](const CircularArcModel& m) {
        std::vector<std::tuple<std::string, int, int>> v;
        for (const Arc& a : m.arcs()) v.emplace_back(a.id, a.tail, a.head);
        std::sort(v.begin(), v.end());
        return v;
    };
    return key(*this) == key(o);
}

std::vector<std::string> validate(const CircularArcModel& m) {
    std::vector<std::string> out;
    int n = m.arc_count();
    if (n < 1) {
        out.push_back("model must contain at least one arc");
        return out;
    }
    std::set<std::string> ids;
    std::map<int, std::string> owner;
    for (const Arc& a : m.arcs()) {
        if (!ids.insert(a.id).second)
            out.push_back("duplicate arc id '" + a.id + "'");
        if (a.tail == a.head)
            out.push_back("arc '" + a.id + "' has equal tail and head " +
                          std::to_string(a.tail));
        for (int e : {a.tail, a.head}) {
            if (e < 1 || e > 2 * n) {
                out.push_back("arc '" + a.id + "' endpoint " +
                              std::to_string(e) + " out of range 1.." +
                              std::to_string(2 * n));
                continue;
            }
            auto ins = owner.emplace(e, a.id);
            if (!ins.second)
                out.push_back("duplicate endpoint " + std::to_string(e) +
                              " shared by arcs '" + ins.first->second +
                              "' and '" + a.id + "'");
        }
    }
    return out;
}

void ensure_valid(const CircularArcModel& m) {
    std::vector<std::string> v = validate(m);
    if (v.empty()) return;
    std::ostringstream os;
    os << "invalid circular-arc model:";
    for (const std::string& s : v) os << "\n  " << s;
    throw std::invalid_argument(os.str());
}

bool contains_position(const Arc& a, CirclePosition p) {
    return cyclic_strictly_between(2 * a.tail, p.tick, 2 * a.head);
}

bool arcs_intersect(const Arc& a, const Arc& b) {
    return contains_position(a, CirclePosition::endpoint(b.tail)) ||
           contains_position(b, CirclePosition::endpoint(a.tail));
}

bool properly_contains(const Arc& outer, const Arc& inner) {
    return contains_position(outer, CirclePosition::endpoint(inner.tail)) &&
           contains_position(outer, CirclePosition::endpoint(inner.head)) &&
           !contains_position(inner, CirclePosition::endpoint(outer.tail));
}

namespace {

// Bitmask of the 4n sample positions (ticks 2..4n+1) covered by an arc.
std::vector<std::uint64_t> coverage_mask(const Arc& a, int n) {
    std::vector<std::uint64_t> mask((4 * n + 63) / 64, 0);
    for (int t = 2; t <= 4 * n + 1; ++t)
        if (contains_position(a, CirclePosition{t})) {
            int bit = t - 2;
            mask[bit / 64] |= std::uint64_t{1} << (bit % 64);
        }
    return mask;
}

bool mask_full(const std::vector<std::uint64_t>& mask, int bits) {
    for (int b = 0; b < bits; ++b)
        if (!(mask[b / 64] >> (b % 64) & 1)) return false;
    return true;
}

} // namespace

bool covers_circle(const std::vector<Arc>& arcs, int n) {
    if (n < 1) return false;
    for (int t = 2; t <= 4 * n + 1; ++t) {
        bool hit = false;
        for (const Arc& a : arcs)
            if (contains_position(a, CirclePosition{t})) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

bool is_normal(const CircularArcModel& m) {
    int n = m.arc_count();
    std::vector<std::vector<std::uint64_t>> masks;
    masks.reserve(n);
    for (const Arc& a : m.arcs()) masks.push_back(coverage_mask(a, n));
    std::vector<std::uint64_t> u(masks.empty() ? 1 : masks[0].size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            for (std::size_t w = 0; w < u.size(); ++w)
                u[w] = masks[i][w] | masks[j][w];
            if (mask_full(u, 4 * n)) return false;
        }
    return true;
}

bool is_normal_helly(const CircularArcModel& m) {
    if (!is_normal(m)) return false;
    int n = m.arc_count();
    std::vector<std::vector<std::uint64_t>> masks;
    masks.reserve(n);
    for (const Arc& a : m.arcs()) masks.push_back(coverage_mask(a, n));
    std::vector<std::uint64_t> u(masks.empty() ? 1 : masks[0].size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                for (std::size_t w = 0; w < u.size(); ++w)
                    u[w] = masks[i][w] | masks[j][w] | masks[k][w];
                if (mask_full(u, 4 * n)) return false;
            }
    return true;
}

Graph intersection_graph(const CircularArcModel& m) {
    Graph g;
    for (const Arc& a : m.arcs()) g.add_vertex(a.id);
    for (int i = 0; i < m.arc_count(); ++i)
        for (int j = i + 1; j < m.arc_count(); ++j)
            if (arcs_intersect(m.arc(i), m.arc(j)))
                g.add_edge_idx(i, j);
    return g;
}

std::vector<int> uncovered_gap_midpoints(const CircularArcModel& m) {
    std::vector<int> out;
    int n = m.arc_count();
    for (int k = 1; k <= 2 * n; ++k) {
        CirclePosition p = CirclePosition::gap_after(k);
        bool covered = false;
        for (const Arc& a : m.arcs())
            if (contains_position(a, p)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(k);
    }
    return out;
}

namespace {

// Rebuild integer endpoints 1..2n from quarter-scaled positions (old mark k
// at 4k; replacement endpoints offset by +-1 so they sort strictly between
// neighboring marks), preserving circular order.
CircularArcModel renumber(const std::vector<std::tuple<std::string, long, long>>& raw) {
    std::vector<long> all;
    for (const auto& [id, t, h] : raw) {
        all.push_back(t);
        all.push_back(h);
    }
    std::sort(all.begin(), all.end());
    std::map<long, int> label;
    for (std::size_t i = 0; i < all.size(); ++i)
        label[all[i]] = static_cast<int>(i) + 1;
    CircularArcModel out;
    for (const auto& [id, t, h] : raw) out.add_arc(id, label[t], label[h]);
    return out;
}

} // namespace

namespace {

// First dominating pair (scanned in arc order, skipping `skip`) whose clip
// changes the model; reports the pair so callers can suppress it.
CircularArcModel shrink_step(const CircularArcModel& m,
                             const std::set<std::pair<int, int>>& skip,
                             std::pair<int, int>* chosen) {
    ensure_valid(m);
    Graph g = intersection_graph(m);
    for (int i = 0; i < m.arc_count(); ++i) {
        for (int j = 0; j < m.arc_count(); ++j) {
            if (i == j || skip.count({i, j})) continue;
            const Arc& av = m.arc(i);
            const Arc& aw = m.arc(j);
            if (!dominates(g, av.id, aw.id)) continue;
            if (!arcs_intersect(av, aw))
                throw std::runtime_error(
                    "domination not realizable in this model");
            bool tw_in = contains_position(av, CirclePosition::endpoint(aw.tail));
            bool hw_in = contains_position(av, CirclePosition::endpoint(aw.head));
            if (tw_in && hw_in) {
                if (contains_position(aw, CirclePosition::endpoint(av.tail)))
                    throw std::runtime_error(
                        "domination not realizable in this model");
                continue; // overlap equals the dominated arc: nothing to shrink
            }
            std::vector<std::tuple<std::string, long, long>> raw;
            for (int k = 0; k < m.arc_count(); ++k) {
                const Arc& a = m.arc(k);
                if (k != j) {
                    raw.emplace_back(a.id, 4L * a.tail, 4L * a.head);
                } else {
                    long t = tw_in ? 4L * aw.tail : 4L * av.tail + 1;
                    long h = hw_in ? 4L * aw.head : 4L * av.head - 1;
                    raw.emplace_back(a.id, t, h);
                }
            }
            if (chosen) *chosen = {i, j};
            return renumber(raw);
        }
    }
    if (chosen) *chosen = {-1, -1};
    return m;
}

std::vector<std::tuple<std::string, int, int>> model_key(
    const CircularArcModel& m) {
    std::vector<std::tuple<std::string, int, int>> key;
    for (const Arc& a : m.arcs()) key.emplace_back(a.id, a.tail, a.head);
    return key;
}

} // namespace

CircularArcModel shrink_dominated(const CircularArcModel& m) {
    return shrink_step(m, {}, nullptr);
}

CircularArcModel shrink_dominated_fixpoint(const CircularArcModel& m) {
    // Two arcs that dominate each other can trade nestings forever: each
    // clip tucks one arc just inside the other and renumbering re-inflates
    // it, so the naive loop never settles.  Refuse any step that reproduces
    // a model already visited and suppress the pair that caused it; the
    // suppression is cleared once some other pair makes real progress.
    CircularArcModel cur = m;
    std::set<std::vector<std::tuple<std::string, int, int>>> seen;
    seen.insert(model_key(cur));
    std::set<std::pair<int, int>> skip;
    for (;;) {
        std::pair<int, int> pair{-1, -1};
        CircularArcModel next = shrink_step(cur, skip, &pair);
        if (pair.first < 0) return cur;
        if (!seen.insert(model_key(next)).second) {
            skip.insert(pair);
            continue;
        }
        cur = std::move(next);
        skip.clear();
    }
}

} // namespace arcgrid
