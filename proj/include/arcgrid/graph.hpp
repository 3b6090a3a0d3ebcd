#ifndef ARCGRID_GRAPH_HPP
#define ARCGRID_GRAPH_HPP

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace arcgrid {

// Undirected graph with stable string vertex ids.  Vertices keep insertion
// order; equality compares the id set and the id-labelled edge set, so two
// graphs over the same labels are equal no matter how they were built.
class Graph {
public:
    Graph() = default;

    int add_vertex(const std::string& id);
    bool has_vertex(const std::string& id) const { return index_.count(id) != 0; }
    int index_of(const std::string& id) const;

    void add_edge(const std::string& u, const std::string& v);
    void add_edge_idx(int u, int v);

    bool adjacent_idx(int u, int v) const { return adj_[u][v] != 0; }
    bool adjacent(const std::string& u, const std::string& v) const;

    int vertex_count() const { return static_cast<int>(ids_.size()); }
    std::size_t edge_count() const;
    const std::vector<std::string>& vertex_ids() const { return ids_; }
    const std::string& id_of(int v) const { return ids_[v]; }
    int degree_idx(int v) const;
    std::vector<int> neighbors_idx(int v) const;

    // Edges as id pairs, each pair sorted, list sorted; canonical for tests/IO.
    std::vector<std::pair<std::string, std::string>> edges() const;

    bool operator==(const Graph& other) const;
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<char>> adj_;
};

// v dominates w: v != w, v adjacent to w, and every neighbor of w other than
// v is also a neighbor of v (closed-neighborhood containment).
// Throws std::invalid_argument if either id is unknown.
bool dominates(const Graph& g, const std::string& v, const std::string& w);

} // namespace arcgrid

#endif
