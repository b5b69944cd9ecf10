#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pidecomp/checkers.hpp"
#include "pidecomp/decomposition.hpp"
#include "pidecomp/extremal.hpp"
#include "pidecomp/patterns.hpp"
#include "pidecomp/random.hpp"

namespace pidecomp {

/// Labels for `n` vertices drawn uniformly from [0, parts).
std::vector<int> random_labels(Rng& rng, int n, int parts);

/// Labels using every value in [0, parts): the first `parts` vertices of a
/// random order get distinct labels, the rest are uniform. Needs n >= parts.
std::vector<int> random_surjective_labels(Rng& rng, int n, int parts);

// ---------------------------------------------------------------------------
// Biclique extraction in K_{n,n}

struct WeaklySparseRun {
    int parts = 0;
    DensePair pair;
    int union_vertices = 0;
    KstBound union_bound;  ///< kst_bound(union_vertices, 2, 2)
    BicliqueResult biclique;  ///< vertices of K_{n,n}
    bool pass = false;
};

struct WeaklySparseExperiment {
    int n = 0;
    std::uint64_t seed = 0;
    KstBound full_bound;  ///< kst_bound(2n, 2, 2)
    std::vector<WeaklySparseRun> runs;
    bool pass = true;
};

/// For each run: random 2-part labelling of K_{n,n}, densest part pair,
/// and a K_{2,2} search in that pair's union. A run passes when the pair
/// has at least ceil(n^2/4) edges, beats kst_bound(2n, 2, 2) and the union
/// bound, and yields a K_{2,2}.
WeaklySparseExperiment run_weakly_sparse(int n, int runs, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Half-graph pigeonhole

struct PigeonholeRun {
    int parts = 0;
    PigeonholeResult result;
    std::string validation;  ///< empty when the witness checks out
    bool pass = false;
};

struct PigeonholeExperiment {
    int m = 0;
    int parts = 0;
    std::uint64_t seed = 0;
    std::vector<PigeonholeRun> runs;
    bool pass = true;
};

PigeonholeExperiment run_half_graph_pigeonhole(int m, int parts, int runs, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Composition and intersection

struct CompositionInstance {
    GraphPtr graph;
    Decomposition outer;
    InnerMap inner;
    PropertyChecker checker;  ///< accepted by every inner p-union
};

/// Random instance with |V| <= max_vertices, 2 <= N_outer <= max_outer and
/// inner part counts <= max_inner. The checker is max_degree_le,
/// components_le or treedepth_le, set to the largest value any inner p-union
/// attains, so every inner decomposition verifies.
CompositionInstance make_composition_instance(Rng& rng, int p, int max_vertices = 12, int max_outer = 4,
                                              int max_inner = 3);

struct CompositionRun {
    int vertices = 0;
    int outer_parts = 0;
    int max_inner_parts = 0;
    int composed_parts = 0;
    BigInt bound;
    std::string checker;
    bool inner_verified = false;
    bool composed_verified = false;
    bool pass = false;
};

struct CompositionExperiment {
    std::uint64_t seed = 0;
    int p = 2;
    std::vector<CompositionRun> runs;
    bool pass = true;
};

CompositionExperiment run_composition(int runs, int p, std::uint64_t seed);

struct IntersectionRun {
    int vertices = 0;
    int parts_a = 0;
    int parts_b = 0;
    int parts = 0;
    std::string checker_a;
    std::string checker_b;
    bool pass = false;
};

struct IntersectionExperiment {
    std::uint64_t seed = 0;
    int p = 2;
    std::vector<IntersectionRun> runs;
    bool pass = true;
};

/// Two random decompositions of one random graph, each with a checker it
/// passes; the intersection must stay within N1 * N2 parts and pass both.
IntersectionExperiment run_intersection(int runs, int p, std::uint64_t seed);

}  // namespace pidecomp
