#include "pidecomp/witness.hpp"

#include <set>

namespace pidecomp {

namespace {

bool in_range(const Graph& g, int v) { return v >= 0 && v < g.vertex_count(); }

std::string pair_text(int u, int v) { return "(" + std::to_string(u) + ", " + std::to_string(v) + ")"; }

}  // namespace

std::string check_half_graph(const Graph& g, const HalfGraphWitness& w) {
    if (w.a.size() != w.b.size()) return "side lengths differ";
    std::set<int> seen;
    for (const auto* side : {&w.a, &w.b})
        for (int v : *side) {
            if (!in_range(g, v)) return "vertex out of range: " + std::to_string(v);
            if (!seen.insert(v).second) return "repeated vertex " + std::to_string(v);
        }
    for (std::size_t i = 0; i < w.a.size(); ++i)
        for (std::size_t j = 0; j < w.b.size(); ++j)
            if (g.adjacent(w.a[i], w.b[j]) != (i <= j))
                return "ladder broken at " + pair_text(static_cast<int>(i), static_cast<int>(j));
    return {};
}

std::string check_shatter(const Graph& g, const ShatterWitness& w) {
    const std::size_t k = w.set.size();
    if (k >= 31) return "set too large";
    if (w.realizers.size() != (std::size_t{1} << k)) return "expected 2^|S| realizers";
    std::set<int> distinct(w.set.begin(), w.set.end());
    if (distinct.size() != k) return "repeated vertex in shattered set";
    for (int v : w.set)
        if (!in_range(g, v)) return "vertex out of range: " + std::to_string(v);
    for (std::size_t mask = 0; mask < w.realizers.size(); ++mask) {
        const int r = w.realizers[mask];
        if (!in_range(g, r)) return "realizer out of range: " + std::to_string(r);
        for (std::size_t i = 0; i < k; ++i)
            if (g.adjacent(r, w.set[i]) != static_cast<bool>(mask >> i & 1))
                return "trace mismatch for subset mask " + std::to_string(mask);
    }
    return {};
}

std::string check_biclique(const Graph& g, const std::vector<int>& left, const std::vector<int>& right) {
    std::set<int> seen;
    for (const auto* side : {&left, &right})
        for (int v : *side) {
            if (!in_range(g, v)) return "vertex out of range: " + std::to_string(v);
            if (!seen.insert(v).second) return "repeated vertex " + std::to_string(v);
        }
    for (int u : left)
        for (int v : right)
            if (!g.adjacent(u, v)) return "missing edge " + pair_text(u, v);
    return {};
}

std::string check_treedepth_forest(const Graph& g, const TreedepthForest& f) {
    const int n = g.vertex_count();
    if (static_cast<int>(f.parent.size()) != n) return "parent map has the wrong size";
    std::vector<int> depth(n, 0);
    for (int v = 0; v < n; ++v) {
        int steps = 0;
        for (int u = v; u >= 0; u = f.parent[u]) {
            if (u >= n) return "parent out of range";
            if (++steps > n) return "parent map has a cycle";
        }
        depth[v] = steps;
    }
    int longest = 0;
    for (int d : depth) longest = std::max(longest, d);
    if (longest != f.depth) return "claimed depth " + std::to_string(f.depth) + " but forest depth is " + std::to_string(longest);
    auto is_ancestor = [&](int anc, int v) {
        for (int u = f.parent[v]; u >= 0; u = f.parent[u])
            if (u == anc) return true;
        return false;
    };
    for (auto [u, v] : g.edges())
        if (!is_ancestor(u, v) && !is_ancestor(v, u)) return "edge " + pair_text(u, v) + " not in the closure";
    return {};
}

std::string check_induced_map(const Graph& g, const Graph& h, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != h.vertex_count()) return "map has the wrong size";
    std::set<int> seen;
    for (int v : map) {
        if (!in_range(g, v)) return "image out of range: " + std::to_string(v);
        if (!seen.insert(v).second) return "map is not injective";
    }
    for (int i = 0; i < h.vertex_count(); ++i)
        for (int j = i + 1; j < h.vertex_count(); ++j)
            if (h.adjacent(i, j) != g.adjacent(map[i], map[j])) return "adjacency differs on " + pair_text(i, j);
    return {};
}

std::string check_clique_subdivision(const Graph& g, int p, const SubdivisionResult& r) {
    const std::size_t q = r.branch.size();
    if (r.paths.size() != q * (q - 1) / 2) return "wrong number of paths";
    std::set<int> used(r.branch.begin(), r.branch.end());
    if (used.size() != q) return "repeated branch vertex";
    std::size_t k = 0;
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j, ++k) {
            const auto& path = r.paths[k];
            if (path.size() != static_cast<std::size_t>(p) + 2) return "path " + std::to_string(k) + " has the wrong length";
            if (path.front() != r.branch[i] || path.back() != r.branch[j]) return "path " + std::to_string(k) + " has wrong ends";
            for (std::size_t s = 0; s + 1 < path.size(); ++s)
                if (!in_range(g, path[s]) || !in_range(g, path[s + 1]) || !g.adjacent(path[s], path[s + 1]))
                    return "path " + std::to_string(k) + " uses a non-edge";
            for (std::size_t s = 1; s + 1 < path.size(); ++s)
                if (!used.insert(path[s]).second) return "internal vertex " + std::to_string(path[s]) + " reused";
        }
    return {};
}

std::string check_independent(const Graph& g, const std::vector<int>& set) {
    std::set<int> seen;
    for (int v : set) {
        if (!in_range(g, v)) return "vertex out of range: " + std::to_string(v);
        if (!seen.insert(v).second) return "repeated vertex " + std::to_string(v);
    }
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.adjacent(set[i], set[j])) return "edge " + pair_text(set[i], set[j]) + " inside the set";
    return {};
}

}  // namespace pidecomp
