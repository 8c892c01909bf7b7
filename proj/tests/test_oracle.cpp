#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "bbt/generate.hpp"
#include "bbt/oracle.hpp"
#include "bbt/solver.hpp"

using namespace bbt;

namespace {

// Test-side ground truth by full enumeration of all k^n colorings; usable
// up to n ~ 6. Independent of the oracle's pruned backtracking.
bool feasible_by_enumeration(const Graph& g, const EdgeSet& h, int q, int k) {
    std::vector<int> colors(static_cast<size_t>(g.n()), 1);
    while (true) {
        bool ok = true;
        for (const auto& [u, v] : g.edges())
            if (colors[static_cast<size_t>(u)] == colors[static_cast<size_t>(v)]) ok = false;
        if (ok)
            for (const auto& [u, v] : h)
                if (std::abs(colors[static_cast<size_t>(u)] - colors[static_cast<size_t>(v)]) < q)
                    ok = false;
        if (ok) return true;
        int pos = 0;
        while (pos < g.n() && colors[static_cast<size_t>(pos)] == k) {
            colors[static_cast<size_t>(pos)] = 1;
            ++pos;
        }
        if (pos == g.n()) return false;
        ++colors[static_cast<size_t>(pos)];
    }
}

int bbc_by_enumeration(const Graph& g, const EdgeSet& h, int q) {
    for (int k = 1;; ++k)
        if (feasible_by_enumeration(g, h, q, k)) return k;
}

} // namespace

TEST_CASE("bbc_exact frozen examples") {
    Graph k3 = gen_complete(3);
    EdgeSet path{{0, 1}, {1, 2}};

    BbcResult r = bbc_exact({k3, path}, 2);
    CHECK(r.value == 4);
    CHECK(bbc_by_enumeration(k3, path, 2) == 4);

    BbcResult full = bbc_exact({k3, k3.edges()}, 2);
    CHECK(full.value == 5); // 2*chi - 1, tight by k=4 exhaustion
    CHECK(bbc_by_enumeration(k3, k3.edges(), 2) == 5);
}

TEST_CASE("bbc_exact witness is feasible and optimal") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = gen_gnp(6, 0.55, seed + 40);
        if (!is_connected(g)) continue;
        EdgeSet h;
        for (size_t i = 0; i < g.edges().size(); ++i)
            if (mix64(seed, i) % 2 == 0) h.push_back(g.edges()[i]);
        for (int q : {1, 2, 3}) {
            BbcResult r = bbc_exact({g, h}, q);
            CHECK(is_proper(g, r.witness));
            CHECK(r.witness.max_color_used() == r.value);
            for (const auto& [u, v] : h)
                CHECK(std::abs(r.witness.at(u) - r.witness.at(v)) >= q);
            CHECK(r.value == bbc_by_enumeration(g, h, q));
        }
    }
}

TEST_CASE("bbc_exact with q=1 is the chromatic number") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = gen_gnp(6, 0.5, seed + 77);
        if (!is_connected(g)) continue;
        CHECK(bbc_exact({g, g.edges()}, 1).value == exact_chromatic(g).chi);
    }
}

TEST_CASE("bbc_exact guards and validation") {
    CHECK_THROWS_WITH_AS(bbc_exact({gen_complete(13), {}}, 2), doctest::Contains("TooLarge"), Error);
    CHECK_THROWS_WITH_AS(bbc_exact({gen_complete(3), {{0, 1}, {1, 3}}}, 2),
                         doctest::Contains("EdgeNotInGraph"), Error);
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_WITH_AS(bbc_exact({p3, {{0, 2}}}, 2), doctest::Contains("EdgeNotInGraph"), Error);
}

TEST_CASE("bbc_exact is monotone in the backbone") {
    Graph g = gen_gnp(6, 0.6, 1234);
    REQUIRE(is_connected(g));
    EdgeSet all = g.edges();
    for (size_t take = 0; take <= all.size(); ++take) {
        EdgeSet h(all.begin(), all.begin() + static_cast<long>(take));
        if (take > 0)
            CHECK(bbc_exact({g, h}, 2).value >=
                  bbc_exact({g, EdgeSet(all.begin(), all.begin() + static_cast<long>(take) - 1)}, 2)
                      .value);
    }
}

TEST_CASE("bbc_exact full backbone at q=2 stays within the doubling bound") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = gen_gnp(6, 0.5, seed + 300);
        if (!is_connected(g)) continue;
        CHECK(bbc_exact({g, g.edges()}, 2).value <= 2 * exact_chromatic(g).chi - 1);
    }
}

TEST_CASE("lower_bound_check") {
    Graph k3 = gen_complete(3);
    CHECK(lower_bound_check({k3, {{0, 1}, {1, 2}}}, 2, 3));

    Graph c4 = gen_cycle(4);
    EdgeSet matching{{0, 1}, {2, 3}};
    CHECK(bbc_by_enumeration(c4, matching, 3) == 4); // k=3 fails exhaustively
    CHECK(lower_bound_check({c4, matching}, 3, 2));

    Graph star = gen_complete_bipartite(1, 3);
    CHECK_THROWS_WITH_AS(lower_bound_check({star, {{0, 1}}}, 2, 2), doctest::Contains("DegreeZero"),
                         Error);
}

namespace {

// Reference count: spanning trees as (n-1)-subsets of E that connect V.
long long count_trees_by_subsets(const Graph& g) {
    const EdgeSet edges = g.edges();
    const int n = g.n();
    long long count = 0;
    std::vector<int> pick(static_cast<size_t>(std::max(0, n - 1)), 0);
    std::function<void(size_t, size_t)> rec = [&](size_t slot, size_t from) {
        if (slot == pick.size()) {
            EdgeSet subset;
            for (int i : pick) subset.push_back(edges[static_cast<size_t>(i)]);
            if (connected_components(g, &subset).size() == 1) ++count;
            return;
        }
        for (size_t i = from; i < edges.size(); ++i) {
            pick[slot] = static_cast<int>(i);
            rec(slot + 1, i + 1);
        }
    };
    if (n >= 1) rec(0, 0);
    return count;
}

} // namespace

TEST_CASE("spanning tree enumeration counts") {
    CHECK(count_spanning_trees(gen_cycle(5)) == 5);
    CHECK(count_spanning_trees(gen_complete(4)) == 16); // Cayley: 4^2
    CHECK(count_spanning_trees(gen_complete(5)) == 125);
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(count_spanning_trees(p4) == 1);

    for (uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = gen_gnp(6, 0.55, seed + 60);
        if (!is_connected(g)) continue;
        CHECK(count_spanning_trees(g) == count_trees_by_subsets(g));
    }
}

TEST_CASE("spanning tree enumeration emits distinct valid trees") {
    Graph k4 = gen_complete(4);
    std::vector<EdgeSet> trees;
    for_each_spanning_tree(k4, 1'000'000, [&trees](const EdgeSet& t) { trees.push_back(t); });
    CHECK(trees.size() == 16);
    for (const auto& t : trees) {
        EdgeSet copy = t;
        CHECK(t.size() == 3);
        CHECK(connected_components(k4, &copy).size() == 1);
    }
    std::sort(trees.begin(), trees.end());
    CHECK(std::adjacent_find(trees.begin(), trees.end()) == trees.end());
}

TEST_CASE("spanning tree cap") {
    CHECK_THROWS_WITH_AS(count_spanning_trees(gen_complete(6), 100), doctest::Contains("CapExceeded"),
                         Error);
}

TEST_CASE("best_tree_exact fixed values") {
    CHECK(best_tree_exact(gen_complete(4), 2).value == 4);
    CHECK(best_tree_exact(gen_cycle(5), 3).value == 5); // max(3, 2+3)
    Graph edge = Graph::from_edges(2, {{0, 1}});
    CHECK(best_tree_exact(edge, 4).value == 5); // bipartite: q+1
}

TEST_CASE("best_tree_exact returns a consistent witness") {
    Graph g = gen_petersen();
    BestTreeResult r = best_tree_exact(g, 2);
    CHECK(r.value == 4); // nonbipartite, chi = 3: max(3, 2+2)
    VerifyReport report = verify_backbone_coloring(g, r.tree, r.witness, 2);
    CHECK(report.all_ok());
    CHECK(report.k_used == r.value);
}
