#ifndef BBT_GENERATE_HPP
#define BBT_GENERATE_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "bbt/graph.hpp"

namespace bbt {

// Counter-based 64-bit mixer (splitmix64 finalizer). Pure function of
// (seed, counter), so streams are reproducible bit-exactly everywhere.
uint64_t mix64(uint64_t seed, uint64_t counter);

// Uniform double in [0,1) from the top 53 bits of mix64.
double mix64_unit(uint64_t seed, uint64_t counter);

Graph gen_complete(int n);
Graph gen_cycle(int n);
// Hub vertex 0 joined to the rim cycle 1..n; n+1 vertices total.
Graph gen_wheel(int n);
Graph gen_complete_bipartite(int a, int b);
Graph gen_petersen();
// G(n,p): pairs (u,v), u<v, in lexicographic order; pair number i is kept
// iff mix64_unit(seed, i) < p.
Graph gen_gnp(int n, double p, uint64_t seed);

// Dispatch by family name, matching the CLI grammar.
struct GenParams {
    int n = 0;
    int a = 0;
    int b = 0;
    double p = 0.0;
    uint64_t seed = 0;
};
Graph generate(const std::string& family, const GenParams& params);

// All connected labeled simple graphs on n vertices, ascending
// edge-bitmask order (bit i is the i-th pair (u,v), u<v, lexicographic).
// n is capped at 7; larger throws too_large.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);

// Number of connected labeled graphs on n vertices (same enumeration).
long long count_connected_graphs(int n);

} // namespace bbt

#endif // BBT_GENERATE_HPP
