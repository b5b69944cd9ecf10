#pragma once

#include <string>
#include <vector>

#include "pidecomp/decomposition.hpp"
#include "pidecomp/graph.hpp"

namespace pidecomp {

/// BFS layers. Layer k holds the vertices at distance k from the root of
/// their component. When the root does not reach everything, BFS restarts
/// from the smallest unvisited vertex and its layers are appended after the
/// previous ones.
struct Layering {
    std::vector<int> roots;
    std::vector<std::vector<int>> layers;
    std::vector<int> layer_of;

    int height() const { return static_cast<int>(layers.size()); }
};

/// Throws InputError for a root outside the graph.
Layering bfs_layers(const Graph& g, int root);

/// Part r collects the layers with index = r (mod D); empty classes are
/// dropped. Throws InputError for D < 2.
Decomposition layers_to_decomposition(GraphPtr g, const Layering& l, int D, int p);

enum class MisMode { exact, baker };

struct MisResult {
    std::vector<int> vertices;  ///< sorted
    MisMode mode = MisMode::exact;
    int D = 0;
    int shift = -1;
    std::vector<int> shift_sizes;  ///< baker mode: solution size per shift

    int size() const { return static_cast<int>(vertices.size()); }
};

/// ceil((1 - 1/D) * opt).
long baker_guarantee(int D, long opt);

inline constexpr int kDefaultMisLimit = 64;

/// Maximum independent set by branch and bound with degree-0/1 folding,
/// neighbourhood dominance and a greedy clique-cover bound. Throws SizeError
/// above `limit` vertices (at most 64).
MisResult exact_mis(const Graph& g, int limit = kDefaultMisLimit);

/// Connected pieces left after deleting the layers with index = shift (mod D).
std::vector<std::vector<int>> baker_pieces(const Graph& g, const Layering& l, int D, int shift);

/// Shifting strategy: for each shift s in [0, D) delete the layers with
/// index = s (mod D), solve every remaining piece exactly and keep the best
/// shift (smallest s on ties). Throws SizeError naming the shift and piece
/// when a piece exceeds `piece_limit`.
MisResult baker_mis(const Graph& g, int root, int D, int piece_limit = kDefaultMisLimit);

struct PowerColoring {
    Decomposition decomposition;
    int max_degree = 0;        ///< d of the input graph
    int power_max_degree = 0;  ///< maximum degree of G^p
    long greedy_bound = 0;     ///< 1 + maximum degree of G^p
    BigInt classic_bound;      ///< d^p + 1
    long component_bound = 0;  ///< 1 + d + ... + d^(p-1)
};

/// Greedy proper colouring of G^p in smallest-last order, lowest free colour
/// first. Colour classes become the parts of a decomposition with parameter p.
PowerColoring decompose_power_coloring(GraphPtr g, int p);

}  // namespace pidecomp
