#include "bbt/coloring.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace bbt {

int Coloring::max_color_used() const {
    int best = 0;
    for (int c : colors) best = std::max(best, c);
    return best;
}

bool is_proper(const Graph& g, const Coloring& c) {
    if (c.n() != g.n())
        fail(errc::size_mismatch,
             "coloring on " + std::to_string(c.n()) + " vertices, graph has " + std::to_string(g.n()));
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.adj(u))
            if (u < v && c.at(u) == c.at(v)) return false;
    return true;
}

namespace {

// Saturation = number of distinct colors on already-colored neighbors.
// Shared selection rule for dsatur and the exact search: highest
// saturation, then highest degree, then lowest index. Returns -1 when all
// vertices are colored.
int select_most_saturated(const Graph& g, const std::vector<int>& colors, int max_color) {
    int best = -1, best_sat = -1, best_deg = -1;
    std::vector<bool> seen(static_cast<size_t>(max_color + 1), false);
    for (int v = 0; v < g.n(); ++v) {
        if (colors[static_cast<size_t>(v)] != 0) continue;
        std::fill(seen.begin(), seen.end(), false);
        int sat = 0;
        for (int u : g.adj(v)) {
            int c = colors[static_cast<size_t>(u)];
            if (c != 0 && !seen[static_cast<size_t>(c)]) {
                seen[static_cast<size_t>(c)] = true;
                ++sat;
            }
        }
        if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
            best = v;
            best_sat = sat;
            best_deg = g.degree(v);
        }
    }
    return best;
}

int smallest_feasible_color(const Graph& g, const std::vector<int>& colors, int v) {
    std::vector<bool> used(static_cast<size_t>(g.degree(v) + 2), false);
    for (int u : g.adj(v)) {
        int c = colors[static_cast<size_t>(u)];
        if (c != 0 && c < static_cast<int>(used.size())) used[static_cast<size_t>(c)] = true;
    }
    int c = 1;
    while (used[static_cast<size_t>(c)]) ++c;
    return c;
}

} // namespace

Coloring dsatur(const Graph& g) {
    Coloring result;
    result.colors.assign(static_cast<size_t>(g.n()), 0);
    int max_color = 0;
    for (int step = 0; step < g.n(); ++step) {
        int v = select_most_saturated(g, result.colors, max_color);
        int c = smallest_feasible_color(g, result.colors, v);
        result.colors[static_cast<size_t>(v)] = c;
        max_color = std::max(max_color, c);
    }
    result.k = max_color;
    return result;
}

std::vector<int> greedy_clique(const Graph& g) {
    if (g.n() == 0) return {};
    int seed = 0;
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) > g.degree(seed)) seed = v;
    std::vector<int> clique{seed};
    std::vector<int> candidates = g.adj(seed);
    while (!candidates.empty()) {
        int pick = candidates[0];
        for (int v : candidates)
            if (g.degree(v) > g.degree(pick)) pick = v;
        clique.push_back(pick);
        std::vector<int> next;
        for (int v : candidates)
            if (v != pick && g.has_edge(v, pick)) next.push_back(v);
        candidates = std::move(next);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

namespace {

struct ChromaticSearch {
    const Graph& g;
    long long budget;
    long long nodes = 0;
    int best_k;
    int lower_bound;
    std::vector<int> best_colors;
    std::vector<int> colors;

    void run(int colored, int max_used) {
        if (++nodes > budget) fail(errc::budget_exceeded, std::to_string(budget) + " search nodes");
        if (max_used >= best_k) return; // cannot improve
        if (colored == g.n()) {
            best_k = max_used;
            best_colors = colors;
            return;
        }
        int v = select_most_saturated(g, colors, max_used);
        std::vector<bool> banned(static_cast<size_t>(max_used + 2), false);
        for (int u : g.adj(v)) {
            int c = colors[static_cast<size_t>(u)];
            if (c != 0 && c <= max_used + 1) banned[static_cast<size_t>(c)] = true;
        }
        // Colors beyond max_used+1 are interchangeable with max_used+1, so
        // trying one fresh color suffices.
        const int limit = std::min(max_used + 1, best_k - 1);
        for (int c = 1; c <= limit; ++c) {
            if (banned[static_cast<size_t>(c)]) continue;
            colors[static_cast<size_t>(v)] = c;
            run(colored + 1, std::max(max_used, c));
            colors[static_cast<size_t>(v)] = 0;
            if (best_k == lower_bound) return; // optimal already certified
        }
    }
};

} // namespace

ChromaticResult exact_chromatic(const Graph& g, long long budget) {
    if (g.n() == 0) return {0, {}, 0};
    Coloring ub = dsatur(g);
    const int lb = std::max<int>(1, static_cast<int>(greedy_clique(g).size()));
    ChromaticResult result;
    result.witness = ub;
    result.chi = ub.k;
    if (lb == ub.k) return result;

    ChromaticSearch search{g, budget, 0, ub.k, lb, {}, std::vector<int>(static_cast<size_t>(g.n()), 0)};
    search.run(0, 0);
    result.nodes = search.nodes;
    if (!search.best_colors.empty() && search.best_k < ub.k) {
        result.chi = search.best_k;
        result.witness.colors = search.best_colors;
        result.witness.k = search.best_k;
    }
    return result;
}

VertexSet kempe_component(const Graph& g, const Coloring& c, int v, int j) {
    if (c.n() != g.n()) fail(errc::size_mismatch, "coloring/graph size");
    if (j < 1 || j > c.k) fail(errc::invalid_color, "color " + std::to_string(j) + " with k=" + std::to_string(c.k));
    const int cv = c.at(v);
    if (j == cv) fail(errc::same_color, "j equals c(v) = " + std::to_string(j));
    VertexSet comp(g.n());
    std::queue<int> queue;
    comp.insert(v);
    queue.push(v);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int w : g.adj(u)) {
            if (comp.contains(w)) continue;
            if (c.at(w) == cv || c.at(w) == j) {
                comp.insert(w);
                queue.push(w);
            }
        }
    }
    return comp;
}

Coloring kempe_swap(const Graph& g, const Coloring& c, const VertexSet& component, int a, int b) {
    if (a == b) fail(errc::same_color, "a == b == " + std::to_string(a));
    if (a < 1 || a > c.k || b < 1 || b > c.k)
        fail(errc::invalid_color, "colors " + std::to_string(a) + "," + std::to_string(b) + " with k=" +
                                      std::to_string(c.k));
    if (component.empty()) fail(errc::not_a_kempe_component, "empty component");
    for (int v : component.members())
        if (c.at(v) != a && c.at(v) != b)
            fail(errc::not_a_kempe_component,
                 "vertex " + std::to_string(v) + " colored " + std::to_string(c.at(v)));
    // Must be exactly one {a,b}-chain: recompute from its first member.
    const int v0 = component.min_vertex();
    const int other = c.at(v0) == a ? b : a;
    if (!(kempe_component(g, c, v0, other) == component))
        fail(errc::not_a_kempe_component, "component is not a maximal two-color chain");

    Coloring out = c;
    for (int v : component.members()) out.colors[static_cast<size_t>(v)] = c.at(v) == a ? b : a;
    return out;
}

Coloring spread_coloring(const Coloring& c, int q) {
    if (q < 1) fail(errc::invalid_parameter, "q >= 1 required");
    Coloring out = c;
    for (auto& color : out.colors) color = q * (color - 1) + 1;
    out.k = q * (c.k - 1) + 1;
    return out;
}

} // namespace bbt
