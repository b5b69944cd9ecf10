#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pidecomp/decomposition.hpp"
#include "pidecomp/errors.hpp"
#include "pidecomp/experiments.hpp"
#include "pidecomp/generators.hpp"
#include "pidecomp/random.hpp"

using namespace pidecomp;

namespace {

Decomposition by_parts(const Graph& g, std::vector<std::vector<int>> parts, int p) {
    return Decomposition::from_parts(share(g), parts, p);
}

PropertyChecker accept_all() { return make_checker("components_le", {1000}); }

}  // namespace

TEST_CASE("decompositions renumber labels densely") {
    const std::vector<int> labels{7, 3, 7, 10};
    const Decomposition d(share(path_graph(4)), labels, 2);
    CHECK(d.part_count() == 3);
    CHECK(d.labels() == std::vector<int>{1, 0, 1, 2});
    CHECK(d.part(1) == std::vector<int>{0, 2});

    CHECK_THROWS_AS(by_parts(path_graph(3), {{0, 1}}, 2), InputError);
    CHECK_THROWS_AS(by_parts(path_graph(3), {{0, 1}, {1, 2}}, 2), InputError);
    CHECK_THROWS_AS(Decomposition::trivial(share(path_graph(3)), 0), InputError);
    CHECK(by_parts(path_graph(3), {{0}, {}, {1, 2}}, 1).part_count() == 2);
}

TEST_CASE("union_parts") {
    const auto d = by_parts(path_graph(3), {{0, 2}, {1}}, 2);
    const std::vector<int> both{0, 1}, twice{0, 0}, bad{2};
    CHECK(union_parts(d, both).graph == path_graph(3));
    const auto doubled = union_parts(d, twice);
    CHECK(doubled.graph.vertex_count() == 2);
    CHECK(doubled.graph.edge_count() == 0);
    CHECK(doubled.to_parent == std::vector<int>{0, 2});
    CHECK_THROWS_AS(union_parts(d, bad), InputError);
}

TEST_CASE("colex order") {
    const std::vector<std::vector<int>> expected{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
    CHECK(colex_subsets(4, 2) == expected);
    CHECK(colex_subsets(3, 0) == std::vector<std::vector<int>>{{}});
    CHECK(colex_subsets(5, 5).size() == 1);
}

TEST_CASE("verify") {
    const auto p3 = by_parts(path_graph(3), {{0, 2}, {1}}, 2);
    CHECK(verify(p3, make_checker("treedepth_le", {2})).pass);

    const auto k3 = by_parts(complete_graph(3), {{0}, {1}, {2}}, 3);
    const auto verdict = verify(k3, make_checker("excludes_induced", {}, complete_graph(3)));
    CHECK_FALSE(verdict.pass);
    CHECK(verdict.counterexample == std::vector<int>{0, 1, 2});

    const auto singles = by_parts(complete_graph(4), {{0}, {1}, {2}, {3}}, 1);
    CHECK(verify(singles, make_checker("max_degree_le", {0})).pass);
    CHECK(verify(singles, make_checker("max_degree_le", {0})).unions_checked == 4);

    PropertyChecker odd = accept_all();
    odd.hereditary = false;
    CHECK_THROWS_AS(verify(singles, odd), InputError);
}

TEST_CASE("verify reports the first failing union in colex order") {
    // Parts {0},{1},{2},{3} of a path: unions {0,1}, {1,2}, {2,3} hold an edge.
    const auto d = by_parts(path_graph(4), {{0}, {1}, {2}, {3}}, 2);
    const auto v = verify(d, make_checker("max_degree_le", {0}));
    CHECK(v.counterexample == std::vector<int>{0, 1});
    CHECK(v.unions_checked == 1);

    const auto star = by_parts(path_graph(4), {{0}, {2}, {1}, {3}}, 2);
    CHECK(verify(star, make_checker("max_degree_le", {0})).counterexample == std::vector<int>{0, 2});

    // N < p: the whole graph is the only union.
    const auto small = by_parts(path_graph(4), {{0, 1}, {2, 3}}, 5);
    CHECK(verify(small, make_checker("components_le", {4})).unions_checked == 1);
}

TEST_CASE("compose_bound") {
    CHECK(compose_bound(3, 2, 2) == 12);
    CHECK(compose_bound(2, 2, 2) == 4);
    CHECK(compose_bound(1, 7, 2) == 1);
    CHECK(compose_bound(5, 0, 2) == 0);
    CHECK(compose_bound(0, 5, 2) == 0);
    for (long g = 1; g < 6; ++g)
        for (long f = 0; f < 6; ++f) CHECK(compose_bound(g, f, 1) == g * f);
    // 4 * 3^C(3,2) = 4 * 27
    CHECK(compose_bound(4, 3, 3) == 108);
    CHECK(compose_bound(BigInt(10), BigInt(10), 3) == BigInt(10) * boost::multiprecision::pow(BigInt(10), 36));
    CHECK(binomial(BigInt(5), 2) == 10);
    CHECK(binomial(BigInt(2), 3) == 0);
}

TEST_CASE("compose refines by signatures") {
    const Graph p4 = path_graph(4);
    const auto outer = by_parts(p4, {{0, 1}, {2, 3}}, 2);
    InnerMap inner;
    inner.emplace(std::vector<int>{0, 1}, by_parts(p4, {{0, 2}, {1, 3}}, 2));
    const auto r = compose(outer, inner);
    CHECK(r.decomposition.part_count() == 4);
    CHECK(r.bound == 4);
    CHECK_FALSE(r.degenerate);
    for (int v = 0; v < 4; ++v) CHECK(r.decomposition.part(v) == std::vector<int>{v});
}

TEST_CASE("compose degenerate and trivial cases") {
    const Graph g = cycle_graph(5);
    const auto one = Decomposition::trivial(share(g), 2);
    const auto r = compose(one, {});
    CHECK(r.degenerate);
    CHECK(same_partition(r.decomposition, one));

    const auto outer = by_parts(g, {{0, 1}, {2}, {3, 4}}, 2);
    InnerMap inner;
    for (const auto& subset : colex_subsets(3, 2)) {
        const auto u = union_parts(outer, subset);
        inner.emplace(subset, Decomposition::trivial(share(u.graph), 2));
    }
    const auto same = compose(outer, inner);
    CHECK(same_partition(same.decomposition, outer));
    CHECK(same.bound == 3);
}

TEST_CASE("compose rejects bad inner maps") {
    const Graph g = cycle_graph(5);
    const auto outer = by_parts(g, {{0, 1}, {2}, {3, 4}}, 2);
    InnerMap inner;
    for (const auto& subset : colex_subsets(3, 2)) {
        const auto u = union_parts(outer, subset);
        inner.emplace(subset, Decomposition::trivial(share(u.graph), 2));
    }
    InnerMap missing = inner;
    missing.erase(std::vector<int>{0, 2});
    CHECK_THROWS_AS(compose(outer, missing), InputError);

    InnerMap wrong_p = inner;
    wrong_p.erase(std::vector<int>{0, 1});
    wrong_p.emplace(std::vector<int>{0, 1},
                    Decomposition::trivial(share(union_parts(outer, std::vector<int>{0, 1}).graph), 3));
    CHECK_THROWS_AS(compose(outer, wrong_p), InputError);

    InnerMap wrong_graph = inner;
    wrong_graph.erase(std::vector<int>{0, 1});
    wrong_graph.emplace(std::vector<int>{0, 1}, Decomposition::trivial(share(path_graph(2)), 2));
    CHECK_THROWS_AS(compose(outer, wrong_graph), InputError);
}

namespace {

// Every composed p-union lies inside p parts of some inner decomposition
// whose outer subset covers the outer parts it touches.
bool lemma_holds(const CompositionInstance& inst, const Decomposition& composed) {
    const int p = inst.outer.p();
    const int n_outer = inst.outer.part_count();
    const int k = std::min(p, composed.part_count());
    for (const auto& s : colex_subsets(composed.part_count(), k)) {
        std::vector<int> vertices;
        std::set<int> touched;
        for (int i : s)
            for (int v : composed.part(i)) {
                vertices.push_back(v);
                touched.insert(inst.outer.part_of(v));
            }
        bool covered = false;
        for (const auto& outer_set : colex_subsets(n_outer, std::min(p, n_outer))) {
            if (!std::includes(outer_set.begin(), outer_set.end(), touched.begin(), touched.end())) continue;
            const auto u = union_parts(inst.outer, outer_set);
            const Decomposition& in = inst.inner.at(outer_set);
            std::set<int> inner_parts;
            for (int v : vertices) {
                const auto at = std::lower_bound(u.to_parent.begin(), u.to_parent.end(), v);
                inner_parts.insert(in.part_of(static_cast<int>(at - u.to_parent.begin())));
            }
            if (static_cast<int>(inner_parts.size()) <= p) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("composition lemma on random small instances") {
    for (int p : {2, 3}) {
        Rng rng(100 + p);
        for (int i = 0; i < 150; ++i) {
            const auto inst = make_composition_instance(rng, p);
            const auto r = compose(inst.outer, inst.inner);
            long max_inner = 0;
            for (const auto& [key, d] : inst.inner) max_inner = std::max<long>(max_inner, d.part_count());
            CHECK(r.bound == compose_bound(inst.outer.part_count(), max_inner, p));
            CHECK(BigInt(r.decomposition.part_count()) <= r.bound);
            CHECK(lemma_holds(inst, r.decomposition));
            for (const auto& [key, d] : inst.inner) REQUIRE(verify(d, inst.checker).pass);
            CHECK(verify(r.decomposition, inst.checker).pass);
        }
    }
}

TEST_CASE("intersect") {
    const Graph g(4);
    const auto a = by_parts(g, {{0, 1}, {2, 3}}, 2);
    const auto b = by_parts(g, {{0, 2}, {1, 3}}, 2);
    const auto both = intersect(a, b);
    CHECK(both.part_count() == 4);
    CHECK(both.labels() == std::vector<int>{0, 1, 2, 3});

    CHECK(same_partition(intersect(a, a), a));
    CHECK(same_partition(intersect(a, Decomposition::trivial(a.graph_ptr(), 2)), a));

    CHECK_THROWS_AS(intersect(a, by_parts(g, {{0, 1}, {2, 3}}, 3)), InputError);
    CHECK_THROWS_AS(intersect(a, Decomposition::trivial(share(path_graph(4)), 2)), InputError);
}

TEST_CASE("intersection keeps both properties") {
    Rng rng(77);
    for (int i = 0; i < 150; ++i) {
        const int n = 2 + static_cast<int>(rng.below(11));
        auto g = share(gnp(n, 0.15 + 0.5 * rng.unit(), rng.next()));
        const int p = 1 + static_cast<int>(rng.below(3));
        const Decomposition a(g, random_labels(rng, n, 1 + static_cast<int>(rng.below(4))), p);
        const Decomposition b(g, random_labels(rng, n, 1 + static_cast<int>(rng.below(4))), p);

        // Tightest thresholds each decomposition meets.
        auto tightest = [](const Decomposition& d, const char* tag) {
            for (long k = 0;; ++k) {
                auto c = make_checker(tag, {k});
                if (verify(d, c).pass) return c;
            }
        };
        const auto ca = tightest(a, "components_le");
        const auto cb = tightest(b, "max_degree_le");
        const auto both = intersect(a, b);
        CHECK(both.part_count() <= a.part_count() * b.part_count());
        CHECK(verify(both, ca).pass);
        CHECK(verify(both, cb).pass);
    }
}

TEST_CASE("bound ledger") {
    CHECK(BoundLedger::constant(5).evaluate(1000) == 5);
    const auto h = BoundLedger::composed(BoundLedger::constant(3), BoundLedger::constant(2), 2);
    for (long n : {0L, 1L, 50L, 1000000L}) CHECK(h.evaluate(n) == 12);

    const auto table = BoundLedger::table({{4, 2}, {10, 7}, {20, 9}});
    CHECK(table.evaluate(10) == 7);
    CHECK(table.evaluate(3) == 2);
    CHECK(table.evaluate(11) == 9);
    CHECK_THROWS_AS(table.evaluate(21), InputError);
    CHECK_THROWS_AS(BoundLedger::table({{1, 5}, {2, 4}}), InputError);

    const auto root = BoundLedger::power(1, 2);
    CHECK(root.evaluate(16) == 4);
    CHECK(root.evaluate(17) == 5);
    CHECK(root.evaluate(0) == 0);
    CHECK(BoundLedger::power(3, 2).evaluate(9) == 27);

    // Composition of growing bounds is evaluated pointwise.
    const auto grow = BoundLedger::composed(root, BoundLedger::constant(2), 3);
    CHECK(grow.evaluate(16) == compose_bound(4, 2, 3));

    for (long n = 0; n < 200; ++n) CHECK(grow.evaluate(n) <= grow.evaluate(n + 1));
    CHECK_FALSE(h.describe().empty());
}

TEST_CASE("decomposition documents") {
    auto g = share(cycle_graph(6));
    const auto d = by_parts(*g, {{0, 3}, {1, 4}, {2, 5}}, 2);
    const std::string text = write_decomposition(d);
    CHECK(text.rfind("pidecomp-decomposition 1\n", 0) == 0);
    const auto back = read_decomposition(text, g);
    CHECK(back.parts() == d.parts());
    CHECK(back.p() == 2);

    CHECK_THROWS_AS(read_decomposition(text, share(path_graph(6))), InputError);
    CHECK_THROWS_AS(read_decomposition(text, share(cycle_graph(7))), InputError);
    std::string broken = text;
    broken.replace(broken.find("0 3"), 3, "0 0");
    CHECK_THROWS_AS(read_decomposition(broken, g), InputError);
    CHECK_THROWS_AS(read_decomposition("nonsense", g), InputError);
}

TEST_CASE("an excluded induced pattern cannot be split across p >= |H| parts") {
    Rng rng(5);
    std::vector<oracle::Small> patterns;
    for (int k = 1; k <= 3; ++k)
        for (const auto& h : oracle::isomorphism_classes(k)) patterns.push_back(h);
    for (int n = 1; n <= 7; ++n)
        for (const auto& small : oracle::isomorphism_classes(n)) {
            auto g = share(small.to_graph());
            for (const auto& h : patterns) {
                if (!oracle::has_induced(small, h)) continue;
                const auto checker = make_checker("excludes_induced", {}, h.to_graph());
                for (int trial = 0; trial < 3; ++trial) {
                    const int p = h.n + static_cast<int>(rng.below(2));
                    const Decomposition d(g, random_labels(rng, n, 1 + static_cast<int>(rng.below(5))), p);
                    CHECK_FALSE(verify(d, checker).pass);
                }
            }
        }
}
