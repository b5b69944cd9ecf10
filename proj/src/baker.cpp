#include "pidecomp/baker.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>

#include "pidecomp/errors.hpp"

namespace pidecomp {

Layering bfs_layers(const Graph& g, int root) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n) throw InputError("bfs_layers: root " + std::to_string(root) + " out of range");
    Layering l;
    l.layer_of.assign(n, -1);
    int next_root = root;
    while (next_root < n) {
        l.roots.push_back(next_root);
        const int base = l.height();
        std::vector<int> frontier{next_root};
        l.layer_of[next_root] = base;
        while (!frontier.empty()) {
            std::sort(frontier.begin(), frontier.end());
            l.layers.push_back(frontier);
            std::vector<int> next;
            for (int u : frontier)
                for (int w : g.neighbors(u))
                    if (l.layer_of[w] < 0) {
                        l.layer_of[w] = l.height();
                        next.push_back(w);
                    }
            frontier = std::move(next);
        }
        next_root = 0;
        while (next_root < n && l.layer_of[next_root] >= 0) ++next_root;
    }
    return l;
}

Decomposition layers_to_decomposition(GraphPtr g, const Layering& l, int D, int p) {
    if (D < 2) throw InputError("layers_to_decomposition: D must be at least 2");
    if (static_cast<int>(l.layer_of.size()) != g->vertex_count())
        throw InputError("layers_to_decomposition: layering is for a different graph");
    std::vector<int> labels(l.layer_of.size());
    for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = l.layer_of[v] % D;
    return Decomposition(std::move(g), labels, p);
}

long baker_guarantee(int D, long opt) { return ((D - 1) * opt + D - 1) / D; }

// ---------------------------------------------------------------------------

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

class MisSolver {
public:
    explicit MisSolver(const Graph& g) : adj_(g.vertex_count(), 0) {
        for (auto [u, v] : g.edges()) {
            adj_[u] |= bit(v);
            adj_[v] |= bit(u);
        }
    }

    Mask solve() {
        const int n = static_cast<int>(adj_.size());
        branch(n == 64 ? ~Mask{0} : bit(n) - 1, 0);
        return best_;
    }

private:
    void branch(Mask cand, Mask chosen) {
        reduce(cand, chosen);
        const int size = std::popcount(chosen);
        if (!cand) {
            if (size > std::popcount(best_) || !found_) {
                best_ = chosen;
                found_ = true;
            }
            return;
        }
        if (found_ && size + clique_cover(cand) <= std::popcount(best_)) return;

        int pivot = -1, pivot_degree = -1;
        for (Mask c = cand; c; c &= c - 1) {
            const int v = std::countr_zero(c);
            const int d = std::popcount(adj_[v] & cand);
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        branch(cand & ~adj_[pivot] & ~bit(pivot), chosen | bit(pivot));
        branch(cand & ~bit(pivot), chosen);
    }

    // Degree-0 and degree-1 vertices join the solution; a vertex whose closed
    // neighbourhood contains that of a neighbour is dropped.
    void reduce(Mask& cand, Mask& chosen) const {
        bool changed = true;
        while (changed && cand) {
            changed = false;
            for (Mask c = cand; c; c &= c - 1) {
                const int v = std::countr_zero(c);
                if (!(cand & bit(v))) continue;
                const Mask nb = adj_[v] & cand;
                if (std::popcount(nb) <= 1) {
                    chosen |= bit(v);
                    cand &= ~(nb | bit(v));
                    changed = true;
                }
            }
            if (changed) continue;
            for (Mask c = cand; c && !changed; c &= c - 1) {
                const int u = std::countr_zero(c);
                const Mask closed_u = (adj_[u] & cand) | bit(u);
                for (Mask nb = adj_[u] & cand; nb; nb &= nb - 1) {
                    const int v = std::countr_zero(nb);
                    const Mask closed_v = (adj_[v] & cand) | bit(v);
                    if ((closed_v & ~closed_u) == 0) {
                        cand &= ~bit(u);
                        changed = true;
                        break;
                    }
                }
            }
        }
    }

    int clique_cover(Mask cand) const {
        int cliques = 0;
        while (cand) {
            const int v = std::countr_zero(cand);
            Mask clique = bit(v), room = adj_[v] & cand;
            while (room) {
                const int w = std::countr_zero(room);
                clique |= bit(w);
                room &= adj_[w];
            }
            cand &= ~clique;
            ++cliques;
        }
        return cliques;
    }

    std::vector<Mask> adj_;
    Mask best_ = 0;
    bool found_ = false;
};

}  // namespace

MisResult exact_mis(const Graph& g, int limit) {
    limit = std::min(limit, 64);
    if (g.vertex_count() > limit)
        throw SizeError("exact_mis: " + std::to_string(g.vertex_count()) + " vertices exceed the exact limit of " +
                        std::to_string(limit));
    MisResult result;
    // Solve components separately; the masks stay local to each one.
    for (const auto& comp : connected_components(g)) {
        const auto sub = induced_subgraph(g, std::span<const int>(comp));
        const Mask best = MisSolver(sub.graph).solve();
        for (Mask b = best; b; b &= b - 1) result.vertices.push_back(sub.to_parent[std::countr_zero(b)]);
    }
    std::sort(result.vertices.begin(), result.vertices.end());
    return result;
}

std::vector<std::vector<int>> baker_pieces(const Graph& g, const Layering& l, int D, int shift) {
    std::vector<int> kept;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (l.layer_of[v] % D != shift) kept.push_back(v);
    const auto sub = induced_subgraph(g, std::span<const int>(kept));
    std::vector<std::vector<int>> pieces;
    for (auto& comp : connected_components(sub.graph)) {
        for (int& v : comp) v = sub.to_parent[v];
        pieces.push_back(std::move(comp));
    }
    return pieces;
}

MisResult baker_mis(const Graph& g, int root, int D, int piece_limit) {
    if (D < 2) throw InputError("baker_mis: D must be at least 2");
    const Layering l = bfs_layers(g, root);
    MisResult result;
    result.mode = MisMode::baker;
    result.D = D;
    for (int s = 0; s < D; ++s) {
        std::vector<int> chosen;
        const auto pieces = baker_pieces(g, l, D, s);
        for (std::size_t k = 0; k < pieces.size(); ++k) {
            const auto& piece = pieces[k];
            if (static_cast<int>(piece.size()) > std::min(piece_limit, 64))
                throw SizeError("baker_mis: shift " + std::to_string(s) + " piece " + std::to_string(k) + " has " +
                                std::to_string(piece.size()) + " vertices, above the exact limit");
            const auto sub = induced_subgraph(g, std::span<const int>(piece));
            for (int v : exact_mis(sub.graph, piece_limit).vertices) chosen.push_back(sub.to_parent[v]);
        }
        std::sort(chosen.begin(), chosen.end());
        result.shift_sizes.push_back(static_cast<int>(chosen.size()));
        if (result.shift < 0 || chosen.size() > result.vertices.size()) {
            result.vertices = std::move(chosen);
            result.shift = s;
        }
    }
    return result;
}

// ---------------------------------------------------------------------------

PowerColoring decompose_power_coloring(GraphPtr g, int p) {
    if (p < 1) throw InputError("power coloring: p must be positive");
    const Graph power = power_graph(*g, p);
    const int n = power.vertex_count();

    // Smallest-last order: peel minimum-degree vertices (smallest index on ties).
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = power.degree(v);
    std::vector<char> removed(n, 0);
    std::vector<int> peel;
    peel.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (pick < 0 || degree[v] < degree[pick])) pick = v;
        removed[pick] = 1;
        peel.push_back(pick);
        for (int w : power.neighbors(pick))
            if (!removed[w]) --degree[w];
    }

    std::vector<int> color(n, -1);
    std::vector<char> taken;
    for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
        const int v = *it;
        taken.assign(power.degree(v) + 1, 0);
        for (int w : power.neighbors(v))
            if (color[w] >= 0 && color[w] < static_cast<int>(taken.size())) taken[color[w]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        color[v] = c;
    }

    PowerColoring out{Decomposition(g, color, p), 0, 0, 0, BigInt(0), 0};
    out.max_degree = g->max_degree();
    out.power_max_degree = power.max_degree();
    out.greedy_bound = 1L + out.power_max_degree;
    out.classic_bound = boost::multiprecision::pow(BigInt(out.max_degree), static_cast<unsigned>(p)) + 1;
    long sum = 0, term = 1;
    for (int k = 0; k < p; ++k) {
        sum = sum > LONG_MAX - term ? LONG_MAX : sum + term;
        term = (out.max_degree != 0 && term > LONG_MAX / out.max_degree) ? LONG_MAX : term * out.max_degree;
    }
    out.component_bound = sum;
    return out;
}

}  // namespace pidecomp
