#pragma once

#include <utility>
#include <vector>

#include "pidecomp/decomposition.hpp"
#include "pidecomp/graph.hpp"

namespace pidecomp {

/// Semi-induced half-graph: a_i ~ b_j iff i <= j; same-side pairs are free.
struct HalfGraphWitness {
    std::vector<int> a;
    std::vector<int> b;
    int order() const { return static_cast<int>(a.size()); }
};

/// A vertex set S shattered by open neighbourhoods. realizers[mask] is a
/// vertex whose neighbourhood meets S exactly in {S[i] : bit i of mask}.
struct ShatterWitness {
    std::vector<int> set;
    std::vector<int> realizers;
};

struct HalfGraphResult {
    int order = 0;
    bool exact = true;  ///< false: `order` is a greedy lower bound
    HalfGraphWitness witness;
};

/// Largest half-graph order. Exhaustive up to order exact_limit / 2; if that
/// cap is reached the ladder is extended greedily and flagged inexact.
HalfGraphResult half_graph_order(const Graph& g, int exact_limit = 16);

struct VcResult {
    int dimension = 0;
    bool capped = false;  ///< dimension reached exact_limit; the true value may be larger
    ShatterWitness witness;
};

/// Largest |S| <= exact_limit shattered by {N(v)}. Exhaustive.
VcResult vc_dimension(const Graph& g, int exact_limit = 6);

struct PigeonholeResult {
    std::pair<int, int> parts;  ///< (part of the a's, part of the b's)
    HalfGraphWitness witness;   ///< vertices of half_graph(m)
    long guaranteed = 0;        ///< ceil(m / N^2)
};

/// Buckets ladder index i by (part(a_i), part(b_i)) and returns the largest
/// bucket (smallest part pair on ties) as a half-graph inside those parts.
/// Throws InputError if `d` is not over half_graph(m).
PigeonholeResult half_graph_pigeonhole(int m, const Decomposition& d);

}  // namespace pidecomp
