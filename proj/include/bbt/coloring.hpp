#ifndef BBT_COLORING_HPP
#define BBT_COLORING_HPP

#include <vector>

#include "bbt/graph.hpp"

namespace bbt {

// Total vertex coloring with 1-based colors and palette bound k.
// Properness is a predicate, not a structural invariant: search code keeps
// partial states internally, but every exported Coloring is total.
struct Coloring {
    std::vector<int> colors; // colors[v] in 1..k
    int k = 0;

    int at(int v) const { return colors[static_cast<size_t>(v)]; }
    int n() const { return static_cast<int>(colors.size()); }
    // Largest color actually assigned (0 for empty).
    int max_color_used() const;

    friend bool operator==(const Coloring& a, const Coloring& b) = default;
};

// True iff every edge of g has distinct endpoint colors. Throws
// size_mismatch if c is not defined on exactly V(g).
bool is_proper(const Graph& g, const Coloring& c);

// Deterministic DSATUR: highest saturation first, ties by higher degree
// then lower index; each vertex gets the smallest feasible color.
Coloring dsatur(const Graph& g);

// Greedy clique: seed with the max-degree vertex (ties by index), extend
// by the highest-degree common neighbor. Lower bound for chi.
std::vector<int> greedy_clique(const Graph& g);

struct ChromaticResult {
    int chi = 0;
    Coloring witness;      // uses exactly colors 1..chi
    long long nodes = 0;   // branch-and-bound nodes explored
};

// Exact chromatic number by branch and bound: DSATUR upper bound, greedy
// clique lower bound, branch on the most saturated uncolored vertex,
// prune when used colors >= best known. Witness is the one a sequential
// search returns, so results are deterministic. Throws budget_exceeded
// when the node count passes `budget`.
ChromaticResult exact_chromatic(const Graph& g, long long budget = 50'000'000);

// Component of v in the subgraph induced by color classes j and c(v).
// Throws invalid_color (j outside 1..k) and same_color (j == c(v)).
VertexSet kempe_component(const Graph& g, const Coloring& c, int v, int j);

// Exchange colors a and b on `component`, which must be exactly a Kempe
// component for {a,b} (validated; throws not_a_kempe_component).
// Preserves properness and is an involution.
Coloring kempe_swap(const Graph& g, const Coloring& c, const VertexSet& component, int a, int b);

// Recolor i -> q*(i-1)+1. Turns any proper coloring into a q-backbone
// coloring of (G,G) with max color q*(k-1)+1.
Coloring spread_coloring(const Coloring& c, int q);

} // namespace bbt

#endif // BBT_COLORING_HPP
