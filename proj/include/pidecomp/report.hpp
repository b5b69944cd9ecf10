#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "pidecomp/baker.hpp"
#include "pidecomp/checkers.hpp"
#include "pidecomp/decomposition.hpp"
#include "pidecomp/experiments.hpp"
#include "pidecomp/extremal.hpp"
#include "pidecomp/generators.hpp"
#include "pidecomp/patterns.hpp"

namespace pidecomp {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr int kReportVersion = 1;

/// Report skeleton: format tag, version, toolkit version and command echo.
json make_report(const std::vector<std::string>& command);

// Witness objects carry a "kind" tag so a report can be re-checked later.
// An optional "graph" member holds a family spec to regenerate the host
// graph; without it the report's input graph is used.
json witness_json(const HalfGraphWitness& w);
json witness_json(const ShatterWitness& w);
json biclique_json(const std::vector<int>& left, const std::vector<int>& right);
json forest_json(const TreedepthForest& f);
json independent_set_json(const std::vector<int>& vertices);
json induced_map_json(const std::vector<int>& map, const Graph& pattern);
json subdivision_json(int p, const SubdivisionResult& r);
json family_json(const FamilySpec& spec);

json decomposition_json(const Decomposition& d);
json rational_json(const BigRational& value);
json mis_json(const MisResult& r);

json experiment_json(const WeaklySparseExperiment& e);
json experiment_json(const PigeonholeExperiment& e);
json experiment_json(const CompositionExperiment& e);
json experiment_json(const IntersectionExperiment& e);

struct Revalidation {
    std::size_t checked = 0;
    std::vector<std::string> problems;
};

/// Finds every witness object in `report` and re-checks it with the
/// independent validators. `input` is the host graph for witnesses without
/// a "graph" member (may be null if there are none).
Revalidation revalidate(const json& report, const Graph* input);

}  // namespace pidecomp
