#ifndef BBT_GRAPH_HPP
#define BBT_GRAPH_HPP

#include <utility>
#include <vector>

#include "bbt/errors.hpp"

namespace bbt {

// Unordered edge, stored normalized (first < second) unless a function
// documents an orientation (cut_edges keeps the inside endpoint first).
using Edge = std::pair<int, int>;
using EdgeSet = std::vector<Edge>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Subset of the vertices 0..n-1 of a host graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : in_(static_cast<size_t>(n), false) {}

    int universe() const { return static_cast<int>(in_.size()); }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(int v) const { return in_[static_cast<size_t>(v)]; }

    void insert(int v) {
        if (!in_[static_cast<size_t>(v)]) {
            in_[static_cast<size_t>(v)] = true;
            ++count_;
        }
    }

    // Members in ascending order.
    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count_));
        for (int v = 0; v < universe(); ++v)
            if (in_[static_cast<size_t>(v)]) out.push_back(v);
        return out;
    }

    // Smallest member; -1 when empty.
    int min_vertex() const {
        for (int v = 0; v < universe(); ++v)
            if (in_[static_cast<size_t>(v)]) return v;
        return -1;
    }

    bool intersects(const VertexSet& other) const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.in_ == b.in_;
    }

private:
    std::vector<bool> in_;
    int count_ = 0;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    // Validates simplicity: throws self_loop, duplicate_edge or
    // vertex_out_of_range. Duplicates are detected on normalized pairs.
    static Graph from_edges(int n, const EdgeSet& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }
    const std::vector<int>& adj(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool has_edge(int u, int v) const;

    // All edges normalized and sorted lexicographically.
    EdgeSet edges() const;

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

// Maximal connected vertex sets under the given edge set (all edges of g
// when restrict is null). Ordered by smallest contained vertex; isolated
// vertices form singletons. Throws edge_not_in_graph.
std::vector<VertexSet> connected_components(const Graph& g, const EdgeSet* restrict = nullptr);

bool is_connected(const Graph& g);

// Edges with exactly one endpoint in h, as (inside, outside) pairs in
// lexicographic order.
std::vector<Edge> cut_edges(const Graph& g, const VertexSet& h);

// BFS tree over the restricted edge set, ascending-neighbor tie-break.
// Output normalized and sorted. Throws not_connected if restrict does not
// reach every vertex from root.
EdgeSet bfs_spanning_tree(const Graph& g, const EdgeSet& restrict, int root);

int min_degree(const Graph& g);

struct BipartiteResult {
    bool bipartite = false;
    std::vector<int> side; // 1 or 2 per vertex, valid only when bipartite
};

BipartiteResult is_bipartite(const Graph& g);

} // namespace bbt

#endif // BBT_GRAPH_HPP
