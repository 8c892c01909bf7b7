#ifndef BBT_ORACLE_HPP
#define BBT_ORACLE_HPP

#include <functional>

#include "bbt/coloring.hpp"
#include "bbt/graph.hpp"

namespace bbt {

// (G, H) with H a spanning subgraph given by its edge set; every vertex of
// g belongs to h implicitly.
struct BackboneInstance {
    Graph g;
    EdgeSet h; // must satisfy h subset of E(g); validated by bbc_exact

    // Degree within h of the least-covered vertex.
    int h_min_degree() const;
};

struct BbcResult {
    int value = 0;         // exact BBC_q(g, h)
    Coloring witness;      // proper, gap >= q on h-edges, max color = value
    long long nodes = 0;   // backtracking nodes explored
};

// Exact q-backbone chromatic number by iterating k upward from a clique
// lower bound and backtracking over vertices in BFS order. The spread of a
// trivial proper coloring makes k = q*(n-1)+1 always feasible, so the
// search terminates. Kept independent of exact_chromatic on purpose: the
// two sides of every cross-check share no search code. Guarded to n <= 12
// (throws too_large).
BbcResult bbc_exact(const BackboneInstance& inst, int q);

// With no isolated vertex in h, BBC_q is at least max(chi, ceil(chi/2)+q);
// this confirms it against the brute-force value. `chi` must be the exact
// chromatic number. Throws degree_zero when h leaves a vertex uncovered.
bool lower_bound_check(const BackboneInstance& inst, int q, int chi);

// Every spanning tree exactly once, deletion/contraction style on the
// fixed edge order of g.edges(). Throws cap_exceeded past `cap` trees and
// not_connected for disconnected input.
void for_each_spanning_tree(const Graph& g, long long cap,
                            const std::function<void(const EdgeSet&)>& fn);

long long count_spanning_trees(const Graph& g, long long cap = 1'000'000);

struct BestTreeResult {
    int value = 0;   // min over spanning trees T of BBC_q(g, T)
    EdgeSet tree;    // lexicographically smallest minimizer
    Coloring witness;
    long long nodes = 0;
};

// Realizes the min over all spanning trees by full enumeration (default
// cap 10^6 trees).
BestTreeResult best_tree_exact(const Graph& g, int q, long long cap = 1'000'000);

} // namespace bbt

#endif // BBT_ORACLE_HPP
