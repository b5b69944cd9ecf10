#include <algorithm>
#include <optional>

#include "doctest.h"
#include "oracles.hpp"
#include "pidecomp/checkers.hpp"
#include "pidecomp/errors.hpp"
#include "pidecomp/generators.hpp"
#include "pidecomp/random.hpp"
#include "pidecomp/witness.hpp"

using namespace pidecomp;

namespace {

Graph random_graph(Rng& rng, int min_n, int max_n) {
    const int n = min_n + static_cast<int>(rng.below(max_n - min_n + 1));
    return gnp(n, rng.unit(), rng.next());
}

Graph star(int leaves) {
    std::vector<Edge> e;
    for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph(leaves + 1, e);
}

Graph drop_vertex(const Graph& g, int v) {
    std::vector<int> keep;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, std::span<const int>(keep)).graph;
}

}  // namespace

TEST_CASE("compute_treedepth on small families") {
    CHECK(compute_treedepth(Graph(5)).depth == 1);
    CHECK(compute_treedepth(Graph(0)).depth == 0);
    CHECK(compute_treedepth(path_graph(4)).depth == 3);
    CHECK(compute_treedepth(complete_graph(3)).depth == 3);
    CHECK(compute_treedepth(complete_graph(6)).depth == 6);
    CHECK(compute_treedepth(star(7)).depth == 2);
    CHECK(compute_treedepth(cycle_graph(4)).depth == 3);
    for (int k = 1; k <= 4; ++k) CHECK(compute_treedepth(path_graph((1 << k) - 1)).depth == k);
    CHECK(compute_treedepth(path_graph(16)).depth == 5);
}

TEST_CASE("compute_treedepth agrees with the recursion and certifies itself") {
    Rng rng(4);
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_graph(rng, 1, 9);
        const auto r = compute_treedepth(g);
        CHECK(r.exact);
        CHECK(r.depth == oracle::treedepth(oracle::Small::from(g)));
        CHECK(check_treedepth_forest(g, r.forest) == "");
        CHECK(r.forest.depth == r.depth);
    }
}

TEST_CASE("compute_treedepth size limit and fallback") {
    CHECK_THROWS_AS(compute_treedepth(path_graph(17)), SizeError);
    // Components are limited separately.
    std::vector<Edge> two_paths;
    for (int v = 0; v + 1 < 12; ++v) two_paths.emplace_back(v, v + 1);
    for (int v = 12; v + 1 < 24; ++v) two_paths.emplace_back(v, v + 1);
    CHECK(compute_treedepth(Graph(24, two_paths)).depth == 4);

    const auto ub = treedepth_upper_bound(grid_graph(6, 6));
    CHECK_FALSE(ub.exact);
    CHECK(check_treedepth_forest(grid_graph(6, 6), ub.forest) == "");
    CHECK(ub.depth >= 6);
}

TEST_CASE("forest validator catches bad certificates") {
    TreedepthForest f{{-1, 0, 1}, 3};
    CHECK(check_treedepth_forest(path_graph(3), f) == "");
    f.depth = 2;
    CHECK(check_treedepth_forest(path_graph(3), f) != "");
    TreedepthForest flat{{-1, -1, -1}, 1};
    CHECK(check_treedepth_forest(path_graph(3), flat) != "");
    TreedepthForest loop{{1, 0, -1}, 2};
    CHECK(check_treedepth_forest(path_graph(3), loop) != "");
}

TEST_CASE("min_deletions_to_degree") {
    const auto s = min_deletions_to_degree(star(5), 1, 2);
    CHECK(s.k == 1);
    CHECK(s.deleted == std::vector<int>{0});

    CHECK(min_deletions_to_degree(complete_graph(5), 2, 3).k == 2);
    CHECK(min_deletions_to_degree(complete_graph(5), 2, 3).deleted == std::vector<int>{0, 1});
    CHECK(min_deletions_to_degree(Graph(4), 0, 0).k == 0);
    CHECK_FALSE(min_deletions_to_degree(complete_graph(5), 0, 3).k.has_value());

    // Deleting the middle vertex beats deleting both ends.
    CHECK(min_deletions_to_degree(path_graph(3), 0, 2).deleted == std::vector<int>{1});
    // Among the optimal pairs for C_4 at degree 0, {0, 2} is lexicographically first.
    CHECK(min_deletions_to_degree(cycle_graph(4), 0, 2).deleted == std::vector<int>{0, 2});
}

TEST_CASE("min_deletions_to_degree matches exhaustive search") {
    Rng rng(9);
    for (int i = 0; i < 150; ++i) {
        const Graph g = random_graph(rng, 1, 9);
        const int n = g.vertex_count();
        const int d = static_cast<int>(rng.below(3));
        const int k_max = static_cast<int>(rng.below(n + 1));
        std::optional<int> best;
        std::vector<int> best_set;
        // Subsets ordered by size, then lexicographically.
        for (int k = 0; k <= k_max && !best; ++k) {
            std::vector<int> idx(k);
            for (int j = 0; j < k; ++j) idx[j] = j;
            while (true) {
                std::vector<bool> gone(n, false);
                for (int v : idx) gone[v] = true;
                bool ok = true;
                for (int v = 0; v < n && ok; ++v) {
                    if (gone[v]) continue;
                    int deg = 0;
                    for (int w : g.neighbors(v)) deg += !gone[w];
                    ok = deg <= d;
                }
                if (ok) {
                    best = k;
                    best_set = idx;
                    break;
                }
                int j = k - 1;
                while (j >= 0 && idx[j] == n - k + j) --j;
                if (j < 0) break;
                ++idx[j];
                for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
            }
        }
        const auto r = min_deletions_to_degree(g, d, k_max);
        CHECK(r.k == best);
        if (best) {
            CHECK(r.deleted == best_set);
            // Every vertex of degree above d + k must be deleted.
            for (int v = 0; v < n; ++v)
                if (g.degree(v) > d + *best)
                    CHECK(std::find(r.deleted.begin(), r.deleted.end(), v) != r.deleted.end());
        }
    }
}

TEST_CASE("contains_biclique_subgraph") {
    CHECK(contains_biclique_subgraph(cycle_graph(4), 2, 2).found);
    CHECK_FALSE(contains_biclique_subgraph(path_graph(8), 2, 2).found);
    CHECK_FALSE(contains_biclique_subgraph(star(6), 2, 2).found);
    CHECK(contains_biclique_subgraph(star(6), 1, 6).found);
    CHECK(contains_biclique_subgraph(biclique(3, 3), 2, 2).found);
    CHECK(contains_biclique_subgraph(biclique(3, 3), 3, 3).found);
    CHECK_FALSE(contains_biclique_subgraph(biclique(3, 3), 3, 4).found);
    CHECK(contains_biclique_subgraph(biclique(3, 4), 4, 3).found);

    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_graph(rng, 2, 10);
        const int s = 1 + static_cast<int>(rng.below(3));
        const int t = s + static_cast<int>(rng.below(2));
        const auto r = contains_biclique_subgraph(g, s, t);
        CHECK(r.found == oracle::has_biclique(oracle::Small::from(g), s, t));
        if (r.found) {
            CHECK(r.left.size() == static_cast<std::size_t>(s));
            CHECK(r.right.size() == static_cast<std::size_t>(t));
            CHECK(check_biclique(g, r.left, r.right) == "");
        }
    }
}

TEST_CASE("contains_induced") {
    CHECK(contains_induced(cycle_graph(5), path_graph(3)).found);
    CHECK_FALSE(contains_induced(complete_graph(4), Graph(2)).found);
    CHECK(contains_induced(cycle_graph(5), Graph(1)).found);
    CHECK_FALSE(contains_induced(Graph(0), Graph(1)).found);
    CHECK_FALSE(contains_induced(cycle_graph(4), complete_graph(3)).found);
    CHECK_THROWS_AS(contains_induced(complete_graph(10), Graph(9)), SizeError);

    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_graph(rng, 1, 8);
        const Graph h = random_graph(rng, 1, 4);
        const auto r = contains_induced(g, h);
        CHECK(r.found == oracle::has_induced(oracle::Small::from(g), oracle::Small::from(h)));
        if (r.found) CHECK(check_induced_map(g, h, r.map) == "");
    }
}

TEST_CASE("contains_clique_subdivision") {
    CHECK(contains_clique_subdivision(cycle_graph(6), 1, 3).found);
    CHECK_FALSE(contains_clique_subdivision(path_graph(5), 1, 3).found);
    const Graph k4_2 = subdivide(complete_graph(4), 2);
    const auto r = contains_clique_subdivision(k4_2, 2, 4);
    CHECK(r.found);
    CHECK(check_clique_subdivision(k4_2, 2, r) == "");
    CHECK_FALSE(contains_clique_subdivision(k4_2, 1, 4).found);
    CHECK(contains_clique_subdivision(complete_graph(5), 0, 5).found);
    CHECK_FALSE(contains_clique_subdivision(complete_graph(4), 0, 5).found);
    CHECK(contains_clique_subdivision(Graph(1), 3, 1).found);
    CHECK_THROWS_AS(contains_clique_subdivision(complete_graph(7), 0, 6), SizeError);

    // Every length-2 route in the bowtie runs through vertex 0.
    const Graph bowtie(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    CHECK_FALSE(contains_clique_subdivision(bowtie, 1, 3).found);
}

TEST_CASE("checkers behave as documented") {
    CHECK(make_checker("max_degree_le", {2})(cycle_graph(7)));
    CHECK_FALSE(make_checker("components_le", {3})(path_graph(4)));
    CHECK_FALSE(make_checker("treedepth_le", {2})(path_graph(4)));
    CHECK(make_checker("treedepth_le", {3})(path_graph(4)));
    CHECK(make_checker("degree_after_deletions_le", {1, 1})(star(5)));
    CHECK_FALSE(make_checker("degree_after_deletions_le", {0, 1})(star(5)));
    CHECK_FALSE(make_checker("biclique_free", {2, 2})(cycle_graph(4)));
    CHECK(make_checker("biclique_free", {2, 2})(cycle_graph(5)));
    CHECK_FALSE(make_checker("clique_subdivision_free", {1, 3})(cycle_graph(6)));
    CHECK(make_checker("excludes_induced", {}, complete_graph(3))(cycle_graph(4)));

    CHECK_THROWS_AS(make_checker("planar", {}), InputError);
    CHECK_THROWS_AS(make_checker("max_degree_le", {}), InputError);
    CHECK_THROWS_AS(make_checker("excludes_induced", {}), InputError);
}

TEST_CASE("parse_checker") {
    CHECK(parse_checker("treedepth_le:2").describe() == "treedepth_le:2");
    CHECK(parse_checker("biclique_free:2,3").params == std::vector<long>{2, 3});
    CHECK_FALSE(parse_checker("excludes_induced:K3")(complete_graph(4)));
    CHECK(parse_checker("excludes_induced:P3")(complete_graph(4)));
    CHECK_FALSE(parse_checker("excludes_induced:E2")(path_graph(3)));
    CHECK_FALSE(parse_checker("excludes_induced:C4")(cycle_graph(4)));
    CHECK_THROWS_AS(parse_checker("treedepth_le:x"), InputError);
    CHECK_THROWS_AS(parse_checker("nope:1"), InputError);
    CHECK_THROWS_AS(parse_checker("excludes_induced:/no/such/file"), InputError);
}

TEST_CASE("built-in checkers are hereditary") {
    const std::vector<PropertyChecker> checkers{
        make_checker("max_degree_le", {2}),
        make_checker("components_le", {4}),
        make_checker("treedepth_le", {3}),
        make_checker("degree_after_deletions_le", {1, 2}),
        make_checker("biclique_free", {2, 2}),
        make_checker("excludes_induced", {}, path_graph(3)),
        make_checker("excludes_induced", {}, complete_graph(3)),
        make_checker("clique_subdivision_free", {1, 3}),
        make_checker("clique_subdivision_free", {0, 4}),
    };
    Rng rng(23);
    for (int i = 0; i < 400; ++i) {
        Graph g = random_graph(rng, 1, 10);
        for (const auto& c : checkers) {
            CHECK(c.hereditary);
            if (!c(g)) continue;
            Graph h = g;
            while (h.vertex_count() > 0) {
                h = drop_vertex(h, static_cast<int>(rng.below(h.vertex_count())));
                INFO(c.describe());
                CHECK(c(h));
            }
        }
    }
}
