#include "bbt/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace bbt {

bool VertexSet::intersects(const VertexSet& other) const {
    const int n = std::min(universe(), other.universe());
    for (int v = 0; v < n; ++v)
        if (in_[static_cast<size_t>(v)] && other.in_[static_cast<size_t>(v)]) return true;
    return false;
}

Graph Graph::from_edges(int n, const EdgeSet& edges) {
    if (n < 0) fail(errc::invalid_parameter, "vertex count must be nonnegative");
    Graph g;
    g.adj_.assign(static_cast<size_t>(n), {});
    std::set<Edge> seen;
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            fail(errc::vertex_out_of_range,
                 "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" + std::to_string(n));
        if (a == b) fail(errc::self_loop, "vertex " + std::to_string(a));
        Edge e = make_edge(a, b);
        if (!seen.insert(e).second)
            fail(errc::duplicate_edge,
                 "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
        g.adj_[static_cast<size_t>(e.first)].push_back(e.second);
        g.adj_[static_cast<size_t>(e.second)].push_back(e.first);
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    g.m_ = static_cast<int>(seen.size());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& list = adj_[static_cast<size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

EdgeSet Graph::edges() const {
    EdgeSet out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n(); ++u)
        for (int v : adj(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

// Adjacency restricted to the given edge set; validates membership.
std::vector<std::vector<int>> restricted_adjacency(const Graph& g, const EdgeSet& edges) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.n()));
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= g.n() || b < 0 || b >= g.n() || !g.has_edge(a, b))
            fail(errc::edge_not_in_graph,
                 "(" + std::to_string(a) + "," + std::to_string(b) + ")");
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adj;
}

VertexSet bfs_collect(const Graph& g, const std::vector<std::vector<int>>* restricted, int start,
                      std::vector<bool>& visited) {
    VertexSet comp(g.n());
    std::queue<int> queue;
    visited[static_cast<size_t>(start)] = true;
    queue.push(start);
    comp.insert(start);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        const auto& nbrs = restricted ? (*restricted)[static_cast<size_t>(u)] : g.adj(u);
        for (int v : nbrs) {
            if (!visited[static_cast<size_t>(v)]) {
                visited[static_cast<size_t>(v)] = true;
                comp.insert(v);
                queue.push(v);
            }
        }
    }
    return comp;
}

} // namespace

std::vector<VertexSet> connected_components(const Graph& g, const EdgeSet* restrict) {
    std::vector<std::vector<int>> restricted;
    if (restrict != nullptr) restricted = restricted_adjacency(g, *restrict);

    std::vector<VertexSet> comps;
    std::vector<bool> visited(static_cast<size_t>(g.n()), false);
    for (int v = 0; v < g.n(); ++v) {
        if (visited[static_cast<size_t>(v)]) continue;
        comps.push_back(bfs_collect(g, restrict ? &restricted : nullptr, v, visited));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.n() <= 1 || connected_components(g).size() == 1;
}

std::vector<Edge> cut_edges(const Graph& g, const VertexSet& h) {
    std::vector<Edge> out;
    for (int u = 0; u < g.n(); ++u) {
        if (!h.contains(u)) continue;
        for (int v : g.adj(u))
            if (!h.contains(v)) out.emplace_back(u, v);
    }
    return out; // already lexicographic: u ascending, adj(u) sorted
}

EdgeSet bfs_spanning_tree(const Graph& g, const EdgeSet& restrict, int root) {
    if (root < 0 || root >= g.n()) fail(errc::vertex_out_of_range, "root " + std::to_string(root));
    auto adj = restricted_adjacency(g, restrict);
    EdgeSet tree;
    std::vector<bool> visited(static_cast<size_t>(g.n()), false);
    std::queue<int> queue;
    visited[static_cast<size_t>(root)] = true;
    queue.push(root);
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int v : adj[static_cast<size_t>(u)]) {
            if (visited[static_cast<size_t>(v)]) continue;
            visited[static_cast<size_t>(v)] = true;
            tree.push_back(make_edge(u, v));
            queue.push(v);
            ++reached;
        }
    }
    if (reached != g.n())
        fail(errc::not_connected, "restricted edge set reaches " + std::to_string(reached) + " of " +
                                      std::to_string(g.n()) + " vertices");
    std::sort(tree.begin(), tree.end());
    return tree;
}

int min_degree(const Graph& g) {
    if (g.n() == 0) return 0;
    int best = g.degree(0);
    for (int v = 1; v < g.n(); ++v) best = std::min(best, g.degree(v));
    return best;
}

BipartiteResult is_bipartite(const Graph& g) {
    BipartiteResult result;
    result.side.assign(static_cast<size_t>(g.n()), 0);
    for (int start = 0; start < g.n(); ++start) {
        if (result.side[static_cast<size_t>(start)] != 0) continue;
        result.side[static_cast<size_t>(start)] = 1;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int v : g.adj(u)) {
                if (result.side[static_cast<size_t>(v)] == 0) {
                    result.side[static_cast<size_t>(v)] = 3 - result.side[static_cast<size_t>(u)];
                    queue.push(v);
                } else if (result.side[static_cast<size_t>(v)] == result.side[static_cast<size_t>(u)]) {
                    return {false, {}};
                }
            }
        }
    }
    result.bipartite = true;
    return result;
}

} // namespace bbt
