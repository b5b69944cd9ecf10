#include "pidecomp/checkers.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <unordered_map>

#include "pidecomp/errors.hpp"
#include "pidecomp/generators.hpp"

namespace pidecomp {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

// Exact treedepth of one connected graph given as adjacency bitmasks.
class TreedepthSolver {
public:
    explicit TreedepthSolver(std::vector<Mask> adj) : adj_(std::move(adj)) {}

    int solve(Mask set) {
        const int size = std::popcount(set);
        if (size == 1) return 1;
        if (auto it = memo_.find(set); it != memo_.end()) return it->second.depth;

        int best = size + 1;
        int best_root = std::countr_zero(set);
        if (is_clique(set)) {
            best = size;
        } else {
            for (Mask rest = set; rest; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                const Mask remaining = set & ~bit(v);
                int worst = 0;
                for (Mask left = remaining; left && 1 + worst < best;) {
                    const Mask comp = component_of(std::countr_zero(left), left);
                    left &= ~comp;
                    // A component can never need more levels than it has vertices.
                    if (std::popcount(comp) <= worst) continue;
                    worst = std::max(worst, solve(comp));
                }
                if (1 + worst < best) {
                    best = 1 + worst;
                    best_root = v;
                }
            }
        }
        memo_.emplace(set, Entry{best, best_root});
        return best;
    }

    // Writes parents for the subtree built over `set` (connected).
    void build(Mask set, int parent, std::vector<int>& parents) {
        const int root = std::popcount(set) == 1 ? std::countr_zero(set) : memo_.at(set).root;
        parents[root] = parent;
        const Mask remaining = set & ~bit(root);
        for (Mask left = remaining; left;) {
            const Mask comp = component_of(std::countr_zero(left), left);
            left &= ~comp;
            solve(comp);
            build(comp, root, parents);
        }
    }

    Mask component_of(int start, Mask within) const {
        Mask comp = bit(start), frontier = comp;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
            next &= within & ~comp;
            comp |= next;
            frontier = next;
        }
        return comp;
    }

private:
    bool is_clique(Mask set) const {
        for (Mask s = set; s; s &= s - 1) {
            const int v = std::countr_zero(s);
            if ((adj_[v] & set) != (set & ~bit(v))) return false;
        }
        return true;
    }

    struct Entry {
        int depth;
        int root;
    };
    std::vector<Mask> adj_;
    std::unordered_map<Mask, Entry> memo_;
};

int forest_depth(const std::vector<int>& parent) {
    std::vector<int> level(parent.size(), 0);
    int depth = 0;
    for (std::size_t v = 0; v < parent.size(); ++v) {
        if (level[v]) {
            depth = std::max(depth, level[v]);
            continue;
        }
        // Walk up to a labelled ancestor, then label the chain on the way back.
        std::vector<int> chain;
        int u = static_cast<int>(v);
        while (u >= 0 && !level[u]) {
            chain.push_back(u);
            u = parent[u];
        }
        int base = u >= 0 ? level[u] : 0;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) level[*it] = ++base;
        depth = std::max(depth, level[v]);
    }
    return depth;
}

}  // namespace

TreedepthResult compute_treedepth(const Graph& g, int limit) {
    limit = std::min(limit, 64);
    TreedepthResult result;
    result.forest.parent.assign(g.vertex_count(), -1);
    for (const auto& comp : connected_components(g)) {
        if (static_cast<int>(comp.size()) > limit)
            throw SizeError("treedepth: component of " + std::to_string(comp.size()) +
                            " vertices exceeds the exact limit of " + std::to_string(limit));
        const auto sub = induced_subgraph(g, std::span<const int>(comp));
        std::vector<Mask> adj(comp.size(), 0);
        for (auto [u, v] : sub.graph.edges()) {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        TreedepthSolver solver(std::move(adj));
        const Mask all = comp.size() == 64 ? ~Mask{0} : bit(static_cast<int>(comp.size())) - 1;
        result.depth = std::max(result.depth, solver.solve(all));
        std::vector<int> local_parent(comp.size(), -1);
        solver.build(all, -1, local_parent);
        for (std::size_t i = 0; i < comp.size(); ++i)
            result.forest.parent[comp[i]] = local_parent[i] < 0 ? -1 : comp[local_parent[i]];
    }
    result.forest.depth = forest_depth(result.forest.parent);
    return result;
}

TreedepthResult treedepth_upper_bound(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> parent(n, -1);
    std::vector<bool> alive(n, true);

    // Each work item is a connected vertex set plus the parent of its root.
    std::vector<std::pair<std::vector<int>, int>> work;
    for (auto& comp : connected_components(g)) work.emplace_back(std::move(comp), -1);
    while (!work.empty()) {
        auto [comp, above] = std::move(work.back());
        work.pop_back();
        int root = comp.front(), best_degree = -1;
        for (int v : comp) {
            int deg = 0;
            for (int w : g.neighbors(v)) deg += alive[w];
            if (deg > best_degree) {
                best_degree = deg;
                root = v;
            }
        }
        parent[root] = above;
        alive[root] = false;
        std::vector<int> rest;
        for (int v : comp)
            if (alive[v]) rest.push_back(v);
        // Split what is left into components of the surviving subgraph.
        std::vector<bool> seen(n, false);
        for (int s : rest) {
            if (seen[s]) continue;
            std::vector<int> piece{s};
            seen[s] = true;
            for (std::size_t i = 0; i < piece.size(); ++i)
                for (int w : g.neighbors(piece[i]))
                    if (alive[w] && !seen[w]) {
                        seen[w] = true;
                        piece.push_back(w);
                    }
            work.emplace_back(std::move(piece), root);
        }
    }
    TreedepthResult result;
    result.forest.parent = std::move(parent);
    result.forest.depth = forest_depth(result.forest.parent);
    result.depth = result.forest.depth;
    result.exact = false;
    return result;
}

// ---------------------------------------------------------------------------

namespace {

class DegreeDeletionSearch {
public:
    DegreeDeletionSearch(const Graph& g, int d)
        : g_(g), d_(d), deleted_(g.vertex_count(), 0), forbidden_(g.vertex_count(), 0), degree_(g.vertex_count()) {
        for (int v = 0; v < g.vertex_count(); ++v) degree_[v] = g.degree(v);
    }

    void remove(int v) {
        deleted_[v] = 1;
        for (int w : g_.neighbors(v)) --degree_[w];
    }
    void restore(int v) {
        deleted_[v] = 0;
        for (int w : g_.neighbors(v)) ++degree_[w];
    }
    void forbid(int v, bool on) { forbidden_[v] = on; }
    bool is_deleted(int v) const { return deleted_[v]; }

    // True iff at most `budget` further deletions (avoiding forbidden
    // vertices) bring the maximum degree down to d.
    bool feasible(int budget) {
        int high = -1;
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (!deleted_[v] && degree_[v] > d_) {
                high = v;
                break;
            }
        if (high < 0) return true;
        if (budget == 0) return false;

        // A surviving vertex of degree > d + budget would need more than
        // `budget` neighbours deleted, so it must go itself.
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (deleted_[v] || degree_[v] <= d_ + budget) continue;
            if (forbidden_[v]) return false;
            remove(v);
            bool ok = feasible(budget - 1);
            restore(v);
            return ok;
        }

        // Either `high` is deleted or, of any d + 1 of its neighbours, one is.
        std::vector<int> candidates{high};
        for (int w : g_.neighbors(high)) {
            if (static_cast<int>(candidates.size()) == d_ + 2) break;
            if (!deleted_[w]) candidates.push_back(w);
        }
        for (int c : candidates) {
            if (forbidden_[c]) continue;
            remove(c);
            bool ok = feasible(budget - 1);
            restore(c);
            if (ok) return true;
        }
        return false;
    }

private:
    const Graph& g_;
    int d_;
    std::vector<char> deleted_;
    std::vector<char> forbidden_;
    std::vector<int> degree_;
};

}  // namespace

DeletionResult min_deletions_to_degree(const Graph& g, int d, int k_max) {
    if (d < 0 || k_max < 0) throw InputError("min_deletions_to_degree: d and k_max must be non-negative");
    DegreeDeletionSearch search(g, d);
    DeletionResult result;
    int k = 0;
    while (k <= k_max && !search.feasible(k)) ++k;
    if (k > k_max) return result;
    result.k = k;

    // Lexicographically smallest set: fix elements one at a time, each the
    // smallest vertex that still admits a completion using larger vertices.
    const int n = g.vertex_count();
    int lower = 0;
    for (int pos = 0; pos < k; ++pos) {
        for (int x = lower; x < n; ++x) {
            search.remove(x);
            for (int y = lower; y < x; ++y) search.forbid(y, true);
            bool ok = search.feasible(k - pos - 1);
            for (int y = lower; y < x; ++y) search.forbid(y, false);
            if (ok) {
                result.deleted.push_back(x);
                lower = x + 1;
                break;
            }
            search.restore(x);
        }
        // Vertices below `lower` that were skipped stay forbidden from here on.
        for (int y = 0; y < lower; ++y)
            if (!search.is_deleted(y)) search.forbid(y, true);
    }
    return result;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool extend_biclique(const Graph& g, int s, int t, int start, std::vector<int>& left, const std::vector<int>& common,
                     BicliqueResult& out) {
    if (static_cast<int>(left.size()) == s) {
        out.found = true;
        out.left = left;
        out.right.assign(common.begin(), common.begin() + t);
        return true;
    }
    for (int v = start; v < g.vertex_count(); ++v) {
        if (g.degree(v) < t) continue;
        auto next = left.empty() ? g.neighbors(v) : intersect_sorted(common, g.neighbors(v));
        if (static_cast<int>(next.size()) < t) continue;
        left.push_back(v);
        if (extend_biclique(g, s, t, v + 1, left, next, out)) return true;
        left.pop_back();
    }
    return false;
}

}  // namespace

BicliqueResult contains_biclique_subgraph(const Graph& g, int s, int t) {
    if (s < 1 || t < 1) throw InputError("biclique: s and t must be positive");
    BicliqueResult out;
    std::vector<int> left;
    extend_biclique(g, s, t, 0, left, {}, out);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

class InducedSearch {
public:
    InducedSearch(const Graph& g, const Graph& h) : g_(g), h_(h), used_(g.vertex_count(), 0) {
        // Place pattern vertices so each one has as many placed neighbours as possible.
        const int k = h.vertex_count();
        std::vector<bool> placed(k, false);
        for (int step = 0; step < k; ++step) {
            int best = -1, best_links = -1;
            for (int v = 0; v < k; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int w : h.neighbors(v)) links += placed[w];
                if (links > best_links || (links == best_links && h.degree(v) > h.degree(best))) {
                    best = v;
                    best_links = links;
                }
            }
            placed[best] = true;
            order_.push_back(best);
        }
        map_.assign(k, -1);
    }

    bool run(std::size_t depth = 0) {
        if (depth == order_.size()) return true;
        const int pv = order_[depth];
        for (int x = 0; x < g_.vertex_count(); ++x) {
            if (used_[x] || g_.degree(x) < h_.degree(pv)) continue;
            bool consistent = true;
            for (std::size_t i = 0; i < depth && consistent; ++i) {
                const int qv = order_[i];
                consistent = h_.adjacent(pv, qv) == g_.adjacent(x, map_[qv]);
            }
            if (!consistent) continue;
            used_[x] = 1;
            map_[pv] = x;
            if (run(depth + 1)) return true;
            map_[pv] = -1;
            used_[x] = 0;
        }
        return false;
    }

    const std::vector<int>& map() const { return map_; }

private:
    const Graph& g_;
    const Graph& h_;
    std::vector<int> order_;
    std::vector<int> map_;
    std::vector<char> used_;
};

}  // namespace

InducedResult contains_induced(const Graph& g, const Graph& h, int pattern_limit) {
    if (h.vertex_count() > pattern_limit)
        throw SizeError("contains_induced: pattern of " + std::to_string(h.vertex_count()) +
                        " vertices exceeds the exact limit of " + std::to_string(pattern_limit));
    InducedResult out;
    if (h.vertex_count() > g.vertex_count()) return out;
    InducedSearch search(g, h);
    out.found = search.run();
    if (out.found) out.map = search.map();
    return out;
}

// ---------------------------------------------------------------------------

namespace {

class SubdivisionSearch {
public:
    SubdivisionSearch(const Graph& g, int p, std::vector<int> branch)
        : g_(g), p_(p), branch_(std::move(branch)), blocked_(g.vertex_count(), 0) {
        for (int b : branch_) blocked_[b] = 1;
        for (std::size_t i = 0; i < branch_.size(); ++i)
            for (std::size_t j = i + 1; j < branch_.size(); ++j) pairs_.emplace_back(branch_[i], branch_[j]);
    }

    bool route(std::size_t index = 0) {
        if (index == pairs_.size()) return true;
        auto [a, b] = pairs_[index];
        std::vector<int> path{a};
        if (walk(index, a, b, p_, path)) return true;
        return false;
    }

    const std::vector<std::vector<int>>& paths() const { return paths_; }

private:
    bool walk(std::size_t index, int cur, int target, int remaining, std::vector<int>& path) {
        if (remaining == 0) {
            if (!g_.adjacent(cur, target)) return false;
            path.push_back(target);
            paths_.push_back(path);
            if (route(index + 1)) return true;
            paths_.pop_back();
            path.pop_back();
            return false;
        }
        for (int w : g_.neighbors(cur)) {
            if (blocked_[w]) continue;
            blocked_[w] = 1;
            path.push_back(w);
            if (walk(index, w, target, remaining - 1, path)) return true;
            path.pop_back();
            blocked_[w] = 0;
        }
        return false;
    }

    const Graph& g_;
    int p_;
    std::vector<int> branch_;
    std::vector<char> blocked_;
    std::vector<Edge> pairs_;
    std::vector<std::vector<int>> paths_;
};

bool choose_branch(const Graph& g, int p, int q, std::vector<int>& candidates, std::size_t start,
                   std::vector<int>& chosen, SubdivisionResult& out) {
    if (static_cast<int>(chosen.size()) == q) {
        SubdivisionSearch search(g, p, chosen);
        if (!search.route()) return false;
        out.found = true;
        out.branch = chosen;
        out.paths = search.paths();
        return true;
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
        const int v = candidates[i];
        // With no subdivision vertices the branch set must be a clique.
        if (p == 0 && !std::all_of(chosen.begin(), chosen.end(), [&](int u) { return g.adjacent(u, v); })) continue;
        chosen.push_back(v);
        if (choose_branch(g, p, q, candidates, i + 1, chosen, out)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

SubdivisionResult contains_clique_subdivision(const Graph& g, int p, int q, const ExactLimits& limits) {
    if (p < 0 || q < 1) throw InputError("clique subdivision: need p >= 0 and q >= 1");
    if (q > limits.subdivision_branch)
        throw SizeError("clique subdivision: q = " + std::to_string(q) + " exceeds the exact limit of " +
                        std::to_string(limits.subdivision_branch));
    if (g.vertex_count() > limits.subdivision_vertices)
        throw SizeError("clique subdivision: host of " + std::to_string(g.vertex_count()) +
                        " vertices exceeds the exact limit of " + std::to_string(limits.subdivision_vertices));
    SubdivisionResult out;
    const long needed = q + static_cast<long>(p) * q * (q - 1) / 2;
    if (needed > g.vertex_count()) return out;
    std::vector<int> candidates;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= q - 1) candidates.push_back(v);
    std::vector<int> chosen;
    choose_branch(g, p, q, candidates, 0, chosen, out);
    return out;
}

// ---------------------------------------------------------------------------

std::string PropertyChecker::describe() const {
    std::string out = name;
    for (std::size_t i = 0; i < params.size(); ++i) {
        out += i == 0 ? ':' : ',';
        out += std::to_string(params[i]);
    }
    return out;
}

namespace {

void expect_params(std::string_view tag, const std::vector<long>& params, std::size_t count) {
    if (params.size() != count)
        throw InputError(std::string(tag) + " takes " + std::to_string(count) + " parameter(s), got " +
                         std::to_string(params.size()));
    for (long v : params)
        if (v < 0 || v > (1L << 30)) throw InputError(std::string(tag) + ": parameter out of range");
}

bool treedepth_at_most(const Graph& g, int t, int limit) {
    for (const auto& comp : connected_components(g)) {
        if (static_cast<int>(comp.size()) <= t) continue;
        const auto sub = induced_subgraph(g, std::span<const int>(comp));
        if (static_cast<int>(comp.size()) <= limit) {
            if (compute_treedepth(sub.graph, limit).depth > t) return false;
            continue;
        }
        if (treedepth_upper_bound(sub.graph).depth <= t) continue;
        throw SizeError("treedepth_le: component of " + std::to_string(comp.size()) +
                        " vertices is beyond the exact limit and the heuristic bound is inconclusive");
    }
    return true;
}

}  // namespace

PropertyChecker make_checker(std::string_view tag, const std::vector<long>& params,
                             const std::optional<Graph>& pattern, const ExactLimits& limits) {
    PropertyChecker c{std::string(tag), params, true, {}};
    if (tag == "max_degree_le") {
        expect_params(tag, params, 1);
        const long d = params[0];
        c.accepts = [d](const Graph& g) { return g.max_degree() <= d; };
    } else if (tag == "components_le") {
        expect_params(tag, params, 1);
        const long s = params[0];
        c.accepts = [s](const Graph& g) {
            for (const auto& comp : connected_components(g))
                if (static_cast<long>(comp.size()) > s) return false;
            return true;
        };
    } else if (tag == "treedepth_le") {
        expect_params(tag, params, 1);
        const int t = static_cast<int>(params[0]);
        const int limit = limits.treedepth_component;
        c.accepts = [t, limit](const Graph& g) { return treedepth_at_most(g, t, limit); };
    } else if (tag == "degree_after_deletions_le") {
        expect_params(tag, params, 2);
        const int k = static_cast<int>(params[0]), d = static_cast<int>(params[1]);
        c.accepts = [k, d](const Graph& g) { return min_deletions_to_degree(g, d, k).k.has_value(); };
    } else if (tag == "biclique_free") {
        expect_params(tag, params, 2);
        const int s = static_cast<int>(params[0]), t = static_cast<int>(params[1]);
        if (s < 1 || t < 1) throw InputError("biclique_free: s and t must be positive");
        c.accepts = [s, t](const Graph& g) { return !contains_biclique_subgraph(g, s, t).found; };
    } else if (tag == "excludes_induced") {
        if (!pattern) throw InputError("excludes_induced needs a pattern graph");
        if (!params.empty()) throw InputError("excludes_induced takes a pattern, not integers");
        if (pattern->vertex_count() > limits.induced_pattern)
            throw SizeError("excludes_induced: pattern exceeds the exact limit");
        const int limit = limits.induced_pattern;
        c.params = {pattern->vertex_count(), static_cast<long>(pattern->edge_count())};
        c.accepts = [h = *pattern, limit](const Graph& g) { return !contains_induced(g, h, limit).found; };
    } else if (tag == "clique_subdivision_free") {
        expect_params(tag, params, 2);
        const int p = static_cast<int>(params[0]), q = static_cast<int>(params[1]);
        if (q < 1) throw InputError("clique_subdivision_free: q must be positive");
        if (q > limits.subdivision_branch) throw SizeError("clique_subdivision_free: q exceeds the exact limit");
        c.accepts = [p, q, limits](const Graph& g) { return !contains_clique_subdivision(g, p, q, limits).found; };
    } else {
        throw InputError("unknown checker: " + std::string(tag));
    }
    return c;
}

namespace {

std::optional<Graph> shorthand_pattern(std::string_view text) {
    if (text.size() < 2) return std::nullopt;
    int n = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), n);
    if (ec != std::errc{} || ptr != text.data() + text.size() || n < 1 || n > 64) return std::nullopt;
    switch (text[0]) {
        case 'K': return complete_graph(n);
        case 'P': return path_graph(n);
        case 'C': return n >= 3 ? std::optional<Graph>(cycle_graph(n)) : std::nullopt;
        case 'E': return Graph(n);
        default: return std::nullopt;
    }
}

}  // namespace

PropertyChecker parse_checker(std::string_view text, const ExactLimits& limits) {
    const auto colon = text.find(':');
    const std::string_view tag = text.substr(0, colon);
    const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    if (tag == "excludes_induced") {
        if (args.empty()) throw InputError("excludes_induced needs a pattern: K3, P4, C5, E2 or an edge-list path");
        std::optional<Graph> pattern = shorthand_pattern(args);
        if (!pattern) {
            if (!std::filesystem::exists(std::string(args)))
                throw InputError("excludes_induced: no such pattern file: " + std::string(args));
            pattern = load_edge_list_file(std::string(args));
        }
        auto c = make_checker(tag, {}, pattern, limits);
        c.name = "excludes_induced";
        return c;
    }

    std::vector<long> params;
    std::size_t pos = 0;
    while (pos < args.size()) {
        std::size_t comma = args.find(',', pos);
        if (comma == std::string_view::npos) comma = args.size();
        const auto token = args.substr(pos, comma - pos);
        long value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw InputError("checker parameter is not an integer: " + std::string(token));
        params.push_back(value);
        pos = comma + 1;
    }
    return make_checker(tag, params, std::nullopt, limits);
}

}  // namespace pidecomp
