#include "bbt/generate.hpp"

namespace bbt {

uint64_t mix64(uint64_t seed, uint64_t counter) {
    uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double mix64_unit(uint64_t seed, uint64_t counter) {
    return static_cast<double>(mix64(seed, counter) >> 11) * 0x1.0p-53;
}

Graph gen_complete(int n) {
    if (n < 1) fail(errc::invalid_parameter, "complete: n >= 1 required");
    EdgeSet edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph gen_cycle(int n) {
    if (n < 3) fail(errc::invalid_parameter, "cycle: n >= 3 required");
    EdgeSet edges;
    for (int u = 0; u < n; ++u) edges.push_back(make_edge(u, (u + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph gen_wheel(int n) {
    if (n < 3) fail(errc::invalid_parameter, "wheel: rim length n >= 3 required");
    EdgeSet edges;
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(0, i);
        edges.push_back(make_edge(i, i % n + 1));
    }
    return Graph::from_edges(n + 1, edges);
}

Graph gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) fail(errc::invalid_parameter, "complete_bipartite: a,b >= 1 required");
    EdgeSet edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(a + b, edges);
}

Graph gen_petersen() {
    EdgeSet edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));         // outer cycle
        edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5)); // inner pentagram
        edges.emplace_back(i, 5 + i);                       // spoke
    }
    return Graph::from_edges(10, edges);
}

Graph gen_gnp(int n, double p, uint64_t seed) {
    if (n < 1) fail(errc::invalid_parameter, "gnp: n >= 1 required");
    if (!(p >= 0.0 && p <= 1.0)) fail(errc::invalid_parameter, "gnp: p in [0,1] required");
    EdgeSet edges;
    uint64_t pair = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++pair)
            if (mix64_unit(seed, pair) < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph generate(const std::string& family, const GenParams& params) {
    if (family == "complete") return gen_complete(params.n);
    if (family == "cycle") return gen_cycle(params.n);
    if (family == "wheel") return gen_wheel(params.n);
    if (family == "complete_bipartite") return gen_complete_bipartite(params.a, params.b);
    if (family == "petersen") return gen_petersen();
    if (family == "gnp") return gen_gnp(params.n, params.p, params.seed);
    fail(errc::invalid_parameter, "unknown family '" + family + "'");
}

namespace {

// Connectivity over an edge bitmask without building a Graph, to keep the
// n=7 sweep over 2^21 masks cheap.
bool mask_connected(int n, uint32_t mask, const std::vector<Edge>& pairs) {
    uint32_t reached = 1;
    uint32_t frontier = 1;
    while (frontier != 0) {
        uint32_t next = 0;
        for (size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i & 1) == 0) continue;
            const uint32_t ubit = 1u << pairs[i].first;
            const uint32_t vbit = 1u << pairs[i].second;
            if ((frontier & ubit) && !(reached & vbit)) next |= vbit;
            if ((frontier & vbit) && !(reached & ubit)) next |= ubit;
        }
        reached |= next;
        frontier = next;
    }
    return reached == (1u << n) - 1;
}

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

} // namespace

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1) fail(errc::invalid_parameter, "n >= 1 required");
    if (n > 7) fail(errc::too_large, "n <= 7 required (2^21 edge subsets at n=7)");
    const auto pairs = all_pairs(n);
    const uint32_t total = 1u << pairs.size();
    for (uint32_t mask = 0; mask < total; ++mask) {
        if (!mask_connected(n, mask, pairs)) continue;
        EdgeSet edges;
        for (size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        fn(Graph::from_edges(n, edges));
    }
}

long long count_connected_graphs(int n) {
    long long count = 0;
    for_each_connected_graph(n, [&count](const Graph&) { ++count; });
    return count;
}

} // namespace bbt
