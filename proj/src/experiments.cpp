#include "pidecomp/experiments.hpp"

#include <algorithm>

#include "pidecomp/errors.hpp"
#include "pidecomp/generators.hpp"
#include "pidecomp/witness.hpp"

namespace pidecomp {

std::vector<int> random_labels(Rng& rng, int n, int parts) {
    std::vector<int> labels(n);
    for (int& l : labels) l = static_cast<int>(rng.below(parts));
    return labels;
}

std::vector<int> random_surjective_labels(Rng& rng, int n, int parts) {
    if (parts < 1 || n < parts) throw InputError("random_surjective_labels: need 1 <= parts <= n");
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    rng.shuffle(order);
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[order[i]] = i < parts ? i : static_cast<int>(rng.below(parts));
    return labels;
}

WeaklySparseExperiment run_weakly_sparse(int n, int runs, std::uint64_t seed) {
    WeaklySparseExperiment exp;
    exp.n = n;
    exp.seed = seed;
    exp.full_bound = kst_bound(2L * n, 2, 2);
    const auto g = share(biclique(n, n));
    Rng rng(seed);
    for (int r = 0; r < runs; ++r) {
        Decomposition d(g, random_labels(rng, 2 * n, 2), 2);
        WeaklySparseRun run;
        run.parts = d.part_count();
        run.pair = densest_part_pair(d);
        const std::vector<int> pair{run.pair.i, run.pair.j};
        const auto u = union_parts(d, pair);
        run.union_vertices = u.graph.vertex_count();
        run.union_bound = kst_bound(run.union_vertices, 2, 2);
        const bool forced = BigRational(run.pair.edges) > run.union_bound.value;
        run.biclique = contains_biclique_subgraph(u.graph, 2, 2);
        for (int& v : run.biclique.left) v = u.to_parent[v];
        for (int& v : run.biclique.right) v = u.to_parent[v];
        const long needed = (static_cast<long>(n) * n + 3) / 4;
        run.pass = run.pair.edges >= needed && BigRational(run.pair.edges) > exp.full_bound.value && forced &&
                   run.biclique.found && check_biclique(*g, run.biclique.left, run.biclique.right).empty();
        exp.pass = exp.pass && run.pass;
        exp.runs.push_back(std::move(run));
    }
    return exp;
}

PigeonholeExperiment run_half_graph_pigeonhole(int m, int parts, int runs, std::uint64_t seed) {
    PigeonholeExperiment exp;
    exp.m = m;
    exp.parts = parts;
    exp.seed = seed;
    const auto g = share(half_graph(m));
    Rng rng(seed);
    for (int r = 0; r < runs; ++r) {
        Decomposition d(g, random_labels(rng, 2 * m, parts), 2);
        PigeonholeRun run;
        run.parts = d.part_count();
        run.result = half_graph_pigeonhole(m, d);
        run.validation = check_half_graph(*g, run.result.witness);
        bool inside = true;
        for (const auto* side : {&run.result.witness.a, &run.result.witness.b})
            for (int v : *side) inside = inside && (d.part_of(v) == run.result.parts.first || d.part_of(v) == run.result.parts.second);
        const long n2 = static_cast<long>(parts) * parts;
        run.pass = run.validation.empty() && inside && run.result.witness.order() >= run.result.guaranteed &&
                   run.result.witness.order() >= (m + n2 - 1) / n2;
        exp.pass = exp.pass && run.pass;
        exp.runs.push_back(std::move(run));
    }
    return exp;
}

// ---------------------------------------------------------------------------

namespace {

enum class Measure { max_degree, component, treedepth };

long measure(const Graph& g, Measure m) {
    switch (m) {
        case Measure::max_degree: return g.max_degree();
        case Measure::component: {
            long biggest = 0;
            for (const auto& c : connected_components(g)) biggest = std::max<long>(biggest, static_cast<long>(c.size()));
            return biggest;
        }
        case Measure::treedepth: return compute_treedepth(g).depth;
    }
    return 0;
}

PropertyChecker checker_for(Measure m, long value) {
    switch (m) {
        case Measure::max_degree: return make_checker("max_degree_le", {value});
        case Measure::component: return make_checker("components_le", {value});
        case Measure::treedepth: return make_checker("treedepth_le", {value});
    }
    throw InputError("unknown measure");
}

// Largest measure over all unions of min(p, N) parts.
long worst_union(const Decomposition& d, Measure m) {
    long worst = 0;
    for (const auto& s : colex_subsets(d.part_count(), std::min(d.p(), d.part_count())))
        worst = std::max(worst, measure(union_parts(d, s).graph, m));
    return worst;
}

GraphPtr random_small_graph(Rng& rng, int min_vertices, int max_vertices) {
    const int n = min_vertices + static_cast<int>(rng.below(max_vertices - min_vertices + 1));
    const long permille = 150 + static_cast<long>(rng.below(600));
    return share(gnp(n, permille / 1000.0, rng.next()));
}

}  // namespace

CompositionInstance make_composition_instance(Rng& rng, int p, int max_vertices, int max_outer, int max_inner) {
    const int min_vertices = std::max(2, p);
    auto g = random_small_graph(rng, min_vertices, max_vertices);
    const int n = g->vertex_count();
    const int outer_parts = p + static_cast<int>(rng.below(std::max(1, std::min(max_outer, n) - p + 1)));
    Decomposition outer(g, random_surjective_labels(rng, n, outer_parts), p);

    InnerMap inner;
    for (const auto& s : colex_subsets(outer.part_count(), p)) {
        auto u = union_parts(outer, s);
        const int size = u.graph.vertex_count();
        const int parts = 1 + static_cast<int>(rng.below(std::min(max_inner, size)));
        inner.emplace(s, Decomposition(share(std::move(u.graph)), random_surjective_labels(rng, size, parts), p));
    }
    const auto m = static_cast<Measure>(rng.below(3));
    long worst = 0;
    for (const auto& [key, d] : inner) worst = std::max(worst, worst_union(d, m));
    return {g, std::move(outer), std::move(inner), checker_for(m, worst)};
}

CompositionExperiment run_composition(int runs, int p, std::uint64_t seed) {
    CompositionExperiment exp;
    exp.seed = seed;
    exp.p = p;
    Rng rng(seed);
    for (int r = 0; r < runs; ++r) {
        auto inst = make_composition_instance(rng, p);
        CompositionRun run;
        run.vertices = inst.graph->vertex_count();
        run.outer_parts = inst.outer.part_count();
        run.checker = inst.checker.describe();
        run.inner_verified = true;
        for (const auto& [key, d] : inst.inner) {
            run.max_inner_parts = std::max(run.max_inner_parts, d.part_count());
            run.inner_verified = run.inner_verified && verify(d, inst.checker).pass;
        }
        const auto composed = compose(inst.outer, inst.inner);
        run.composed_parts = composed.decomposition.part_count();
        run.bound = compose_bound(run.outer_parts, run.max_inner_parts, p);
        run.composed_verified = verify(composed.decomposition, inst.checker).pass;
        run.pass = run.inner_verified && run.composed_verified && BigInt(run.composed_parts) <= run.bound &&
                   run.bound == composed.bound;
        exp.pass = exp.pass && run.pass;
        exp.runs.push_back(std::move(run));
    }
    return exp;
}

IntersectionExperiment run_intersection(int runs, int p, std::uint64_t seed) {
    IntersectionExperiment exp;
    exp.seed = seed;
    exp.p = p;
    Rng rng(seed);
    for (int r = 0; r < runs; ++r) {
        auto g = random_small_graph(rng, 2, 12);
        const int n = g->vertex_count();
        Decomposition a(g, random_surjective_labels(rng, n, 1 + static_cast<int>(rng.below(std::min(n, 4)))), p);
        Decomposition b(g, random_surjective_labels(rng, n, 1 + static_cast<int>(rng.below(std::min(n, 4)))), p);
        const auto ma = static_cast<Measure>(rng.below(3));
        const auto mb = static_cast<Measure>(rng.below(3));
        const auto ca = checker_for(ma, worst_union(a, ma));
        const auto cb = checker_for(mb, worst_union(b, mb));
        const auto both = intersect(a, b);
        IntersectionRun run{n, a.part_count(), b.part_count(), both.part_count(), ca.describe(), cb.describe(), false};
        run.pass = verify(a, ca).pass && verify(b, cb).pass && run.parts <= run.parts_a * run.parts_b &&
                   verify(both, ca).pass && verify(both, cb).pass;
        exp.pass = exp.pass && run.pass;
        exp.runs.push_back(std::move(run));
    }
    return exp;
}

}  // namespace pidecomp
