#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pidecomp {

using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Adjacency lists are sorted, which keeps every
/// traversal in this library deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    /// Duplicate edges (in either orientation) are merged. Self-loops and
    /// out-of-range endpoints throw InputError.
    Graph(int vertex_count, std::span<const Edge> edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool adjacent(int u, int v) const;

    /// Canonical edge list: pairs (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

/// Set of vertices of a fixed graph, stored as membership flags.
class VertexSubset {
public:
    VertexSubset() = default;
    explicit VertexSubset(int vertex_count) : flags_(vertex_count, false) {}
    /// Throws InputError for an index outside [0, vertex_count). Repeats are ignored.
    VertexSubset(int vertex_count, std::span<const int> members);

    int universe() const { return static_cast<int>(flags_.size()); }
    bool contains(int v) const { return flags_[v]; }
    void insert(int v);
    std::vector<int> members() const;
    int size() const;

private:
    std::vector<bool> flags_;
};

struct InducedSubgraph {
    Graph graph;
    /// to_parent[i] is the vertex of the parent graph that became vertex i.
    std::vector<int> to_parent;
};

// ---------------------------------------------------------------------------
// Edge-list text format
//
//   n m
//   u v      (m lines, 0 <= u, v < n, u != v)
//
// save_edge_list writes the canonical edge list with u < v, one per line.

/// Throws InputError naming the offending line (1-based).
Graph load_edge_list(std::istream& in);
Graph load_edge_list(std::string_view text);
Graph load_edge_list_file(const std::string& path);
std::string save_edge_list(const Graph& g);

/// 64-bit FNV-1a of save_edge_list(g), as 16 lowercase hex digits.
std::string graph_hash(const Graph& g);

// ---------------------------------------------------------------------------
// Transformations

/// Same vertices; u ~ v iff 1 <= dist(u, v) <= p. Throws InputError for p < 1.
Graph power_graph(const Graph& g, int p);

/// Replaces each edge by a path through p fresh vertices. Original vertices
/// keep indices [0, n); fresh ones follow in canonical edge order, listed
/// from the smaller endpoint towards the larger one.
Graph subdivide(const Graph& g, int p);

/// Flips adjacency between every pair of distinct vertices of `mark`.
Graph subset_complement(const Graph& g, const VertexSubset& mark);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& s);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

}  // namespace pidecomp
