#include "bbt/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <string>

#include "bbt/solver.hpp"

namespace bbt {

int BackboneInstance::h_min_degree() const {
    std::vector<int> degree(static_cast<size_t>(g.n()), 0);
    for (const auto& [u, v] : h) {
        ++degree[static_cast<size_t>(u)];
        ++degree[static_cast<size_t>(v)];
    }
    return degree.empty() ? 0 : *std::min_element(degree.begin(), degree.end());
}

namespace {

std::vector<int> bfs_order(const Graph& g) {
    std::vector<int> order;
    order.reserve(static_cast<size_t>(g.n()));
    std::vector<bool> visited(static_cast<size_t>(g.n()), false);
    for (int start = 0; start < g.n(); ++start) {
        if (visited[static_cast<size_t>(start)]) continue;
        std::queue<int> queue;
        visited[static_cast<size_t>(start)] = true;
        queue.push(start);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            order.push_back(u);
            for (int v : g.adj(u)) {
                if (!visited[static_cast<size_t>(v)]) {
                    visited[static_cast<size_t>(v)] = true;
                    queue.push(v);
                }
            }
        }
    }
    return order;
}

struct BbcSearch {
    const Graph& g;
    const std::vector<std::vector<int>>& h_adj;
    const std::vector<int>& order;
    int k;
    int q;
    long long nodes = 0;
    std::vector<int> colors;

    bool assign(size_t pos) {
        ++nodes;
        if (pos == order.size()) return true;
        const int v = order[pos];
        // Only the reversal i -> k+1-i maps feasible colorings to feasible
        // colorings, so the root vertex never needs a color above
        // ceil(k/2).
        const int limit = pos == 0 ? (k + 1) / 2 : k;
        for (int c = 1; c <= limit; ++c) {
            bool ok = true;
            for (int u : g.adj(v)) {
                if (colors[static_cast<size_t>(u)] == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                for (int u : h_adj[static_cast<size_t>(v)]) {
                    const int cu = colors[static_cast<size_t>(u)];
                    if (cu != 0 && std::abs(cu - c) < q) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            colors[static_cast<size_t>(v)] = c;
            if (assign(pos + 1)) return true;
            colors[static_cast<size_t>(v)] = 0;
        }
        return false;
    }
};

} // namespace

BbcResult bbc_exact(const BackboneInstance& inst, int q) {
    const Graph& g = inst.g;
    if (q < 1) fail(errc::invalid_parameter, "q >= 1 required");
    if (g.n() > 12) fail(errc::too_large, "n <= 12 required, got " + std::to_string(g.n()));
    if (g.n() == 0) fail(errc::too_small, "n >= 1 required");
    if (!is_connected(g)) fail(errc::not_connected_input, "graph must be connected");

    std::vector<std::vector<int>> h_adj(static_cast<size_t>(g.n()));
    for (const auto& [u, v] : inst.h) {
        if (u < 0 || u >= g.n() || v < 0 || v >= g.n() || !g.has_edge(u, v))
            fail(errc::edge_not_in_graph,
                 "backbone edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        h_adj[static_cast<size_t>(u)].push_back(v);
        h_adj[static_cast<size_t>(v)].push_back(u);
    }

    const int chi_lb = std::max<int>(1, static_cast<int>(greedy_clique(g).size()));
    const int floor = inst.h_min_degree() >= 1 && g.n() >= 2 ? target_k(chi_lb, q) : chi_lb;
    const int cap = q * (g.n() - 1) + 1; // spread of a rainbow coloring is always feasible

    const std::vector<int> order = bfs_order(g);
    BbcResult result;
    for (int k = floor; k <= cap; ++k) {
        BbcSearch search{g, h_adj, order, k, q, 0, std::vector<int>(static_cast<size_t>(g.n()), 0)};
        const bool found = search.assign(0);
        result.nodes += search.nodes;
        if (found) {
            result.value = k;
            result.witness = {std::move(search.colors), k};
            return result;
        }
    }
    fail(errc::algorithm_stalled, "no coloring found within the guaranteed-feasible cap");
}

bool lower_bound_check(const BackboneInstance& inst, int q, int chi) {
    if (inst.h_min_degree() < 1)
        fail(errc::degree_zero, "backbone leaves an isolated vertex");
    return bbc_exact(inst, q).value >= target_k(chi, q);
}

namespace {

struct DisjointSet {
    std::vector<int> parent;

    explicit DisjointSet(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    }
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

struct TreeEnumerator {
    const EdgeSet& edges;
    int n;
    long long cap;
    const std::function<void(const EdgeSet&)>& fn;
    long long emitted = 0;
    EdgeSet chosen;

    // Branch on edges[index] and beyond; `dsu` reflects `chosen`. Every
    // leaf is a tree because the exclude branch keeps the remainder
    // spanning-connected.
    void recurse(size_t index, DisjointSet dsu) {
        if (static_cast<int>(chosen.size()) == n - 1) {
            if (++emitted > cap) fail(errc::cap_exceeded, "more than " + std::to_string(cap) + " trees");
            fn(chosen);
            return;
        }
        if (index == edges.size()) return;
        const auto [u, v] = edges[index];

        if (dsu.find(u) != dsu.find(v)) {
            DisjointSet with = dsu;
            with.join(u, v);
            chosen.push_back(edges[index]);
            recurse(index + 1, std::move(with));
            chosen.pop_back();
        }

        // Exclude edges[index] only if the remaining edges still connect
        // everything.
        DisjointSet reach = dsu;
        int parts = 0;
        for (int v2 = 0; v2 < n; ++v2)
            if (reach.find(v2) == v2) ++parts;
        for (size_t i = index + 1; i < edges.size() && parts > 1; ++i)
            if (reach.join(edges[i].first, edges[i].second)) --parts;
        if (parts == 1) recurse(index + 1, std::move(dsu));
    }
};

} // namespace

void for_each_spanning_tree(const Graph& g, long long cap,
                            const std::function<void(const EdgeSet&)>& fn) {
    if (g.n() == 0) fail(errc::too_small, "n >= 1 required");
    if (!is_connected(g)) fail(errc::not_connected, "graph must be connected");
    if (g.n() == 1) {
        fn({});
        return;
    }
    const EdgeSet edges = g.edges();
    TreeEnumerator enumerator{edges, g.n(), cap, fn, 0, {}};
    enumerator.chosen.reserve(static_cast<size_t>(g.n() - 1));
    enumerator.recurse(0, DisjointSet(g.n()));
}

long long count_spanning_trees(const Graph& g, long long cap) {
    long long count = 0;
    for_each_spanning_tree(g, cap, [&count](const EdgeSet&) { ++count; });
    return count;
}

BestTreeResult best_tree_exact(const Graph& g, int q, long long cap) {
    if (g.n() < 2) fail(errc::too_small, "n >= 2 required");
    BestTreeResult best;
    for_each_spanning_tree(g, cap, [&](const EdgeSet& tree) {
        BbcResult r = bbc_exact({g, tree}, q);
        best.nodes += r.nodes;
        const bool better = best.tree.empty() || r.value < best.value ||
                            (r.value == best.value && tree < best.tree);
        if (better) {
            best.value = r.value;
            best.tree = tree;
            best.witness = std::move(r.witness);
        }
    });
    return best;
}

} // namespace bbt
