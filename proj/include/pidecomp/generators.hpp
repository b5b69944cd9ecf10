#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pidecomp/graph.hpp"

namespace pidecomp {

enum class Family { complete, biclique, half_graph, path, cycle, grid, random_regular, gnp };

/// A named graph family with its parameters.
///
/// Parameter meaning per family:
///   complete(n), path(n), cycle(n)      n vertices (cycle needs n >= 3)
///   biclique(s, t)                      sides 0..s-1 and s..s+t-1
///   half_graph(n)                       a_i = i-1, b_j = n+j-1, a_i ~ b_j iff i <= j
///   grid(rows, cols)                    vertex r*cols + c
///   random_regular(n, d)                configuration model, retried until simple
///   gnp(n, permille)                    each pair kept with probability permille/1000
struct FamilySpec {
    Family family = Family::path;
    std::vector<long> params;
    std::uint64_t seed = 0;
};

Family parse_family(std::string_view name);
std::string family_name(Family f);

/// Deterministic for a fixed spec. Throws InputError for invalid parameters.
Graph generate(const FamilySpec& spec);

// Shorthands used throughout tests and experiments.
Graph complete_graph(int n);
Graph biclique(int s, int t);
Graph half_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph grid_graph(int rows, int cols);
Graph random_regular(int n, int d, std::uint64_t seed);
Graph gnp(int n, double prob, std::uint64_t seed);

}  // namespace pidecomp
