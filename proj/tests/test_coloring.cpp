#include <doctest.h>

#include "bbt/coloring.hpp"
#include "bbt/generate.hpp"

using namespace bbt;

namespace {

// Test-side oracle: smallest k admitting a proper k-coloring, by plain
// backtracking in vertex-index order. Shares nothing with exact_chromatic.
bool naive_colorable(const Graph& g, int k, std::vector<int>& colors, int v) {
    if (v == g.n()) return true;
    for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (int u : g.adj(v))
            if (u < v && colors[static_cast<size_t>(u)] == c) ok = false;
        if (!ok) continue;
        colors[static_cast<size_t>(v)] = c;
        if (naive_colorable(g, k, colors, v + 1)) return true;
        colors[static_cast<size_t>(v)] = 0;
    }
    return false;
}

int naive_chromatic(const Graph& g) {
    if (g.n() == 0) return 0;
    for (int k = 1; k <= g.n(); ++k) {
        std::vector<int> colors(static_cast<size_t>(g.n()), 0);
        if (naive_colorable(g, k, colors, 0)) return k;
    }
    return g.n();
}

Coloring make_coloring(std::vector<int> colors, int k) { return {std::move(colors), k}; }

} // namespace

TEST_CASE("is_proper") {
    Graph k3 = gen_complete(3);
    CHECK(is_proper(k3, make_coloring({1, 2, 3}, 3)));
    CHECK_FALSE(is_proper(k3, make_coloring({1, 1, 2}, 2)));
    CHECK(is_proper(Graph::from_edges(3, {}), make_coloring({1, 1, 1}, 1)));
    CHECK_THROWS_WITH_AS(is_proper(k3, make_coloring({1, 2}, 2)), doctest::Contains("SizeMismatch"),
                         Error);
}

TEST_CASE("dsatur on fixed graphs") {
    CHECK(dsatur(gen_complete(4)).k == 4);

    Coloring c5 = dsatur(gen_cycle(5));
    CHECK(c5.k == 3);
    // Hand-run of the rule: 0 gets 1, then 1 gets 2, 2 gets 1, 3 gets 2, 4 gets 3.
    CHECK(c5.colors == std::vector<int>{1, 2, 1, 2, 3});

    Graph star = gen_complete_bipartite(1, 9);
    Coloring sc = dsatur(star);
    CHECK(sc.k == 2);
    CHECK(is_proper(star, sc));
}

TEST_CASE("dsatur always proper, never beats chi") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = gen_gnp(7, 0.45, seed);
        Coloring c = dsatur(g);
        CHECK(is_proper(g, c));
        CHECK(c.max_color_used() == c.k);
        CHECK(c.k >= naive_chromatic(g));
    }
}

TEST_CASE("greedy_clique returns a clique") {
    Graph p = gen_petersen();
    auto clique = greedy_clique(p);
    CHECK(clique.size() == 2); // triangle-free
    Graph k5 = gen_complete(5);
    CHECK(greedy_clique(k5).size() == 5);
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = gen_gnp(8, 0.5, seed);
        auto q = greedy_clique(g);
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = i + 1; j < q.size(); ++j) CHECK(g.has_edge(q[i], q[j]));
    }
}

TEST_CASE("exact_chromatic on fixed graphs") {
    CHECK(exact_chromatic(gen_cycle(5)).chi == 3);
    CHECK(exact_chromatic(gen_complete_bipartite(3, 3)).chi == 2);
    CHECK(exact_chromatic(gen_complete(6)).chi == 6);

    // Petersen: no proper 2-coloring (odd cycles), and the search exhibits
    // a 3-coloring.
    ChromaticResult p = exact_chromatic(gen_petersen());
    CHECK(p.chi == 3);
    CHECK(naive_chromatic(gen_petersen()) == 3);
    CHECK(is_proper(gen_petersen(), p.witness));
    CHECK(p.witness.max_color_used() == 3);
}

TEST_CASE("exact_chromatic witness uses exactly chi colors") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = gen_gnp(7, 0.5, seed + 100);
        ChromaticResult r = exact_chromatic(g);
        CHECK(is_proper(g, r.witness));
        CHECK(r.witness.max_color_used() == r.chi);
        CHECK(r.chi == naive_chromatic(g));
    }
}

TEST_CASE("exact_chromatic budget") {
    CHECK_THROWS_WITH_AS(exact_chromatic(gen_gnp(12, 0.5, 5), 3), doctest::Contains("BudgetExceeded"),
                         Error);
}

TEST_CASE("exact_chromatic never beats dsatur and matches it on easy families") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = gen_gnp(8, 0.5, seed + 200);
        CHECK(exact_chromatic(g).chi <= dsatur(g).k);
    }
    CHECK(exact_chromatic(gen_complete(5)).chi == dsatur(gen_complete(5)).k);
    Graph k34 = gen_complete_bipartite(3, 4);
    CHECK(exact_chromatic(k34).chi == dsatur(k34).k);
}

TEST_CASE("exact_chromatic agrees with the naive oracle on every connected graph up to n=5") {
    for (int n = 1; n <= 5; ++n)
        for_each_connected_graph(n, [](const Graph& g) {
            CHECK(exact_chromatic(g).chi == naive_chromatic(g));
        });
}

TEST_CASE("kempe_component on paths") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Coloring c121 = make_coloring({1, 2, 1}, 2);
    CHECK(kempe_component(p3, c121, 0, 2).members() == std::vector<int>{0, 1, 2});

    Coloring c123 = make_coloring({1, 2, 3}, 3);
    CHECK(kempe_component(p3, c123, 0, 2).members() == std::vector<int>{0, 1});

    Graph k3 = gen_complete(3);
    Coloring wide = make_coloring({1, 2, 3}, 4);
    CHECK(kempe_component(k3, wide, 0, 4).members() == std::vector<int>{0});

    CHECK_THROWS_WITH_AS(kempe_component(k3, wide, 0, 5), doctest::Contains("InvalidColor"), Error);
    CHECK_THROWS_WITH_AS(kempe_component(k3, wide, 0, 1), doctest::Contains("SameColor"), Error);
}

TEST_CASE("kempe_swap fixed examples") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Coloring c = make_coloring({1, 2, 1}, 2);
    VertexSet whole(3);
    for (int v = 0; v < 3; ++v) whole.insert(v);
    CHECK(kempe_swap(p3, c, whole, 1, 2).colors == std::vector<int>{2, 1, 2});

    Coloring c123 = make_coloring({1, 2, 3}, 3);
    VertexSet head(3);
    head.insert(0);
    head.insert(1);
    Coloring swapped = kempe_swap(p3, c123, head, 1, 2);
    CHECK(swapped.colors == std::vector<int>{2, 1, 3});
    CHECK(is_proper(p3, swapped));
}

TEST_CASE("kempe_swap validates its component") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Coloring c = make_coloring({1, 2, 1}, 2);
    VertexSet part(3);
    part.insert(0); // not maximal: the 1/2-chain through 0 is the whole path
    CHECK_THROWS_WITH_AS(kempe_swap(p3, c, part, 1, 2), doctest::Contains("NotAKempeComponent"),
                         Error);
    VertexSet wrong_colors(3);
    wrong_colors.insert(2);
    CHECK_THROWS_AS(kempe_swap(p3, make_coloring({1, 2, 3}, 3), wrong_colors, 1, 2), Error);
}

TEST_CASE("spread_coloring") {
    Coloring k3 = make_coloring({1, 2, 3}, 3);
    Coloring doubled = spread_coloring(k3, 2);
    CHECK(doubled.colors == std::vector<int>{1, 3, 5});
    CHECK(doubled.k == 5); // 2*chi - 1

    CHECK(spread_coloring(k3, 1) == k3);
    CHECK(spread_coloring(make_coloring({1, 2}, 2), 4).colors == std::vector<int>{1, 5});
}

TEST_CASE("spread_coloring separates every edge by q") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = gen_gnp(8, 0.4, seed + 500);
        for (int q : {1, 2, 3, 5}) {
            Coloring s = spread_coloring(dsatur(g), q);
            CHECK(is_proper(g, s));
            for (const auto& [u, v] : g.edges()) CHECK(std::abs(s.at(u) - s.at(v)) >= q);
        }
    }
}
