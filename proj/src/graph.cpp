#include "arcgrid/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcgrid {

int Graph::add_vertex(const std::string& id) {
    auto it = index_.find(id);
    if (it != index_.end()) return it->second;
    int idx = static_cast<int>(ids_.size());
    ids_.push_back(id);
    index_[id] = idx;
    for (auto& row : adj_) row.push_back(0);
    adj_.emplace_back(ids_.size(), 0);
    return idx;
}

int Graph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw std::invalid_argument("unknown vertex id: " + id);
    return it->second;
}

void Graph::add_edge(const std::string& u, const std::string& v) {
    add_edge_idx(index_of(u), index_of(v));
}

void Graph::add_edge_idx(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::out_of_range("vertex index out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u][v] = 1;
    adj_[v][u] = 1;
}

bool Graph::adjacent(const std::string& u, const std::string& v) const {
    return adjacent_idx(index_of(u), index_of(v));
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_)
        for (char c : row) twice += static_cast<std::size_t>(c);
    return twice / 2;
}

int Graph::degree_idx(int v) const {
    int d = 0;
    for (char c : adj_[v]) d += c;
    return d;
}

std::vector<int> Graph::neighbors_idx(int v) const {
    std::vector<int> out;
    for (int u = 0; u < vertex_count(); ++u)
        if (adj_[v][u]) out.push_back(u);
    return out;
}

std::vector<std::pair<std::string, std::string>> Graph::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v = u + 1; v < vertex_count(); ++v)
            if (adj_[u][v]) {
                std::string a = ids_[u], b = ids_[v];
                if (b < a) std::swap(a, b);
                out.emplace_back(std::move(a), std::move(b));
            }
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::operator==(const Graph& other) const {
    if (vertex_count() != other.vertex_count()) return false;
    std::vector<std::string> a = ids_, b = other.ids_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
    return edges() == other.edges();
}

bool dominates(const Graph& g, const std::string& v, const std::string& w) {
    int vi = g.index_of(v), wi = g.index_of(w);
    if (vi == wi) return false;
    if (!g.adjacent_idx(vi, wi)) return false;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (!g.adjacent_idx(wi, u) || u == vi) continue;
        if (!g.adjacent_idx(vi, u)) return false;
    }
    return true;
}

} // namespace arcgrid
