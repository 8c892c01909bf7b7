#ifndef BBT_SOLVER_HPP
#define BBT_SOLVER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bbt/coloring.hpp"
#include "bbt/graph.hpp"

namespace bbt {

// Color-set geometry the solver works in. Colors split into a low block
// {1..x} and a high block {x+kprime+1..k}; the kprime colors between them
// form a gap that is never assigned.
struct Palette {
    int t = 0;      // colors in the input proper coloring
    int q = 0;      // required separation
    int x = 0;      // ceil(t/2), size of the low block
    int k = 0;      // max(t, x+q), palette bound
    int kprime = 0; // k - t, size of the gap

    static Palette make(int t, int q);
    bool is_gap_color(int c) const { return c > x && c <= x + kprime; }
};

// Smallest k admitting a q-backbone coloring given a proper t-coloring:
// max(t, ceil(t/2)+q).
int target_k(int t, int q);

// Colors within distance < q of i, clipped to 1..k. Contiguous, so an
// interval is enough.
struct ColorInterval {
    int lo = 0;
    int hi = 0;
    bool contains(int c) const { return lo <= c && c <= hi; }
};
ColorInterval forbidden_interval(int i, int q, int k);

// Edges of g whose endpoint colors differ by at least q (normalized,
// sorted).
EdgeSet q_subgraph(const Graph& g, const Coloring& c, int q);

// Remap colors {x+1..t} up by kprime so only the two palette blocks are
// occupied. Properness is preserved (injective remap).
std::pair<Coloring, Palette> initial_palette_coloring(const Coloring& c, int q);

struct SwapRecord {
    int case_tag = 0; // 1 or 2
    Edge edge;        // cut edge (u in the big component, v outside)
    int j = 0;        // color swapped with c(v)
};

// Called once per iteration with the coloring after the swap and the new
// maximum component size; used by tests to watch invariants.
using IterationObserver = std::function<void(const Coloring&, int)>;

// Kempe-swaps the palette coloring until its q-subgraph is connected.
// Each iteration takes the largest component H of the q-subgraph (ties by
// smallest vertex), scans cut edges (u in H, v outside) lexicographically,
// recolors the chain of v so edge uv gains gap >= q, and grows H.
// Guaranteed to finish within n-1 swaps; any violated step assertion
// throws algorithm_stalled.
std::pair<Coloring, std::vector<SwapRecord>> connect_q_subgraph(
    const Graph& g, const Coloring& c0, int q, const IterationObserver& observer = nullptr);

// BFS spanning tree rooted at 0 over the q-subgraph edges.
EdgeSet extract_backbone(const Graph& g, const Coloring& c, int q);

struct VerifyReport {
    bool proper = false;
    bool spanning_tree = false;
    bool backbone_ok = false;
    int k_used = 0;

    bool all_ok() const { return proper && spanning_tree && backbone_ok; }
};

// Checks an arbitrary claimed solution; failures are report fields, never
// exceptions.
VerifyReport verify_backbone_coloring(const Graph& g, const EdgeSet& tree, const Coloring& c, int q);

enum class SolveMode { exact, heuristic };

struct SolveResult {
    Coloring coloring;  // proper on g, palette bound k_target
    EdgeSet tree;       // n-1 edges spanning g, every edge with gap >= q
    int k_achieved = 0; // max color used
    int k_target = 0;   // max(t, ceil(t/2)+q) for the t-coloring used
    int iterations = 0; // Kempe swaps performed
    std::vector<SwapRecord> trace;
};

// Full pipeline: t-coloring (exact chi or dsatur), connect the q-subgraph,
// extract a spanning tree, self-verify. In exact mode k_achieved equals
// the optimum max(chi, ceil(chi/2)+q) for every connected graph with an
// edge. A single vertex gets the trivial result (coloring (1), no tree).
SolveResult solve(const Graph& g, int q, SolveMode mode = SolveMode::exact,
                  long long chi_budget = 50'000'000);

} // namespace bbt

#endif // BBT_SOLVER_HPP
