#pragma once

#include <string>
#include <vector>

#include "pidecomp/checkers.hpp"
#include "pidecomp/graph.hpp"
#include "pidecomp/patterns.hpp"

namespace pidecomp {

// Certificate validators. These only read adjacency and never call the
// search routines that produced the certificates.

/// Empty string when valid, otherwise the first problem found.
std::string check_half_graph(const Graph& g, const HalfGraphWitness& w);
std::string check_shatter(const Graph& g, const ShatterWitness& w);
std::string check_biclique(const Graph& g, const std::vector<int>& left, const std::vector<int>& right);
std::string check_treedepth_forest(const Graph& g, const TreedepthForest& f);
std::string check_induced_map(const Graph& g, const Graph& h, const std::vector<int>& map);
std::string check_clique_subdivision(const Graph& g, int p, const SubdivisionResult& r);
std::string check_independent(const Graph& g, const std::vector<int>& set);

}  // namespace pidecomp
