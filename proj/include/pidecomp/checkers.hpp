#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pidecomp/graph.hpp"

namespace pidecomp {

/// Exact-mode limits. Defaults are the documented desk-scale sizes.
struct ExactLimits {
    int treedepth_component = 16;   ///< vertices per connected component
    int induced_pattern = 8;        ///< pattern vertices for contains_induced
    int subdivision_branch = 5;     ///< q for contains_clique_subdivision
    int subdivision_vertices = 64;  ///< host vertices for contains_clique_subdivision
};

// ---------------------------------------------------------------------------
// Treedepth

/// Rooted forest given by a parent map (-1 marks a root).
struct TreedepthForest {
    std::vector<int> parent;
    int depth = 0;  ///< vertices on the longest root-to-leaf path
};

struct TreedepthResult {
    int depth = 0;
    TreedepthForest forest;
    bool exact = true;
};

/// Exact treedepth by memoized recursion over connected vertex subsets:
/// td(C) = 1 + min over v in C of max td(component of C - v).
/// Throws SizeError if some connected component exceeds `limit` vertices
/// (limit is capped at 64).
TreedepthResult compute_treedepth(const Graph& g, int limit = ExactLimits{}.treedepth_component);

/// Elimination forest built by repeatedly removing a maximum-degree vertex
/// (smallest index on ties) from each component. Flagged exact = false.
TreedepthResult treedepth_upper_bound(const Graph& g);

// ---------------------------------------------------------------------------
// Bounded degree after deletions

struct DeletionResult {
    std::optional<int> k;      ///< empty when more than k_max deletions are needed
    std::vector<int> deleted;  ///< lexicographically smallest optimal deletion set
};

/// Smallest k <= k_max such that deleting some k vertices leaves maximum
/// degree <= d. Any vertex of degree > d + (remaining budget) is forced into
/// the deletion set; otherwise search branches on a high-degree vertex and
/// d + 1 of its neighbours.
DeletionResult min_deletions_to_degree(const Graph& g, int d, int k_max);

// ---------------------------------------------------------------------------
// Subgraph searches

struct BicliqueResult {
    bool found = false;
    std::vector<int> left;   ///< s vertices
    std::vector<int> right;  ///< t vertices, all adjacent to every left vertex
};

/// K_{s,t} as a (not necessarily induced) subgraph. The first s-subset in
/// lexicographic order with >= t common neighbours wins; `right` holds the
/// t smallest of those neighbours.
BicliqueResult contains_biclique_subgraph(const Graph& g, int s, int t);

struct InducedResult {
    bool found = false;
    std::vector<int> map;  ///< map[i] = host vertex for pattern vertex i
};

/// Throws SizeError if h has more than `pattern_limit` vertices.
InducedResult contains_induced(const Graph& g, const Graph& h,
                               int pattern_limit = ExactLimits{}.induced_pattern);

struct SubdivisionResult {
    bool found = false;
    std::vector<int> branch;               ///< q branch vertices
    std::vector<std::vector<int>> paths;   ///< one per branch pair (i < j, lexicographic), endpoints included
};

/// The p-th subdivision of K_q as a subgraph: q branch vertices pairwise
/// joined by internally disjoint paths with exactly p internal vertices each.
SubdivisionResult contains_clique_subdivision(const Graph& g, int p, int q, const ExactLimits& limits = {});

// ---------------------------------------------------------------------------
// Checker handles

/// A named hereditary graph property standing in for a class D_p.
struct PropertyChecker {
    std::string name;
    std::vector<long> params;
    bool hereditary = true;
    std::function<bool(const Graph&)> accepts;

    bool operator()(const Graph& g) const { return accepts(g); }
    std::string describe() const;
};

/// Recognized tags:
///   max_degree_le(d)  components_le(s)  treedepth_le(t)
///   degree_after_deletions_le(k, d)  biclique_free(s, t)
///   excludes_induced(H)  clique_subdivision_free(p, q)
/// excludes_induced takes its pattern in `pattern`. Throws InputError for an
/// unknown tag or wrong parameter count.
PropertyChecker make_checker(std::string_view tag, const std::vector<long>& params,
                             const std::optional<Graph>& pattern = std::nullopt,
                             const ExactLimits& limits = {});

/// Parses "name:k1,k2". For excludes_induced the argument is an edge-list
/// path, or one of the shorthands K<n>, P<n>, C<n>, E<n> (edgeless).
PropertyChecker parse_checker(std::string_view text, const ExactLimits& limits = {});

}  // namespace pidecomp
