#include "pidecomp/generators.hpp"

#include <algorithm>

#include "pidecomp/errors.hpp"
#include "pidecomp/random.hpp"

namespace pidecomp {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
}

long param(const FamilySpec& spec, std::size_t i) {
    require(spec.params.size() > i, family_name(spec.family) + ": missing parameter " + std::to_string(i + 1));
    return spec.params[i];
}

void require_arity(const FamilySpec& spec, std::size_t arity) {
    require(spec.params.size() == arity,
            family_name(spec.family) + " takes " + std::to_string(arity) + " parameter(s)");
}

constexpr long kMaxVertices = 1L << 24;

}  // namespace

Family parse_family(std::string_view name) {
    if (name == "complete") return Family::complete;
    if (name == "biclique") return Family::biclique;
    if (name == "half_graph") return Family::half_graph;
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "grid") return Family::grid;
    if (name == "random_regular") return Family::random_regular;
    if (name == "gnp") return Family::gnp;
    throw InputError("unknown family: " + std::string(name));
}

std::string family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::biclique: return "biclique";
        case Family::half_graph: return "half_graph";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::grid: return "grid";
        case Family::random_regular: return "random_regular";
        case Family::gnp: return "gnp";
    }
    return "?";
}

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::complete:
        case Family::path:
        case Family::half_graph: {
            require_arity(spec, 1);
            long n = param(spec, 0);
            require(n >= 0 && n <= kMaxVertices, family_name(spec.family) + ": n out of range");
            if (spec.family == Family::complete) return complete_graph(static_cast<int>(n));
            if (spec.family == Family::path) return path_graph(static_cast<int>(n));
            return half_graph(static_cast<int>(n));
        }
        case Family::cycle: {
            require_arity(spec, 1);
            long n = param(spec, 0);
            require(n >= 3 && n <= kMaxVertices, "cycle: n must be at least 3");
            return cycle_graph(static_cast<int>(n));
        }
        case Family::biclique: {
            require_arity(spec, 2);
            long s = param(spec, 0), t = param(spec, 1);
            require(s >= 0 && t >= 0 && s + t <= kMaxVertices, "biclique: sides out of range");
            return biclique(static_cast<int>(s), static_cast<int>(t));
        }
        case Family::grid: {
            require_arity(spec, 2);
            long r = param(spec, 0), c = param(spec, 1);
            require(r >= 1 && c >= 1 && r * c <= kMaxVertices, "grid: rows and cols must be at least 1");
            return grid_graph(static_cast<int>(r), static_cast<int>(c));
        }
        case Family::random_regular: {
            require_arity(spec, 2);
            long n = param(spec, 0), d = param(spec, 1);
            require(n >= 1 && n <= kMaxVertices && d >= 0 && d < n, "random_regular: need 0 <= d < n");
            require((n * d) % 2 == 0, "random_regular: n*d must be even");
            return random_regular(static_cast<int>(n), static_cast<int>(d), spec.seed);
        }
        case Family::gnp: {
            require_arity(spec, 2);
            long n = param(spec, 0), permille = param(spec, 1);
            require(n >= 0 && n <= kMaxVertices, "gnp: n out of range");
            require(permille >= 0 && permille <= 1000, "gnp: permille must lie in [0, 1000]");
            return gnp(static_cast<int>(n), static_cast<double>(permille) / 1000.0, spec.seed);
        }
    }
    throw InputError("unknown family");
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph biclique(int s, int t) {
    std::vector<Edge> edges;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) edges.emplace_back(u, s + v);
    return Graph(s + t, edges);
}

Graph half_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) edges.emplace_back(i, n + j);
    return Graph(2 * n, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle: n must be at least 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph grid_graph(int rows, int cols) {
    std::vector<Edge> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            if (c + 1 < cols) edges.emplace_back(v, v + 1);
            if (r + 1 < rows) edges.emplace_back(v, v + cols);
        }
    return Graph(rows * cols, edges);
}

// Configuration model: shuffle the n*d half-edge stubs and pair them off in
// order; start over with the same stream on a loop or a repeated pair.
Graph random_regular(int n, int d, std::uint64_t seed) {
    if (d < 0 || d >= std::max(n, 1) || (static_cast<long>(n) * d) % 2 != 0)
        throw InputError("random_regular: need 0 <= d < n and n*d even");
    Rng rng(seed);
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        stubs.clear();
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < d; ++k) stubs.push_back(v);
        rng.shuffle(stubs);
        std::vector<Edge> edges;
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            int u = std::min(stubs[i], stubs[i + 1]);
            int v = std::max(stubs[i], stubs[i + 1]);
            simple = u != v;
            edges.emplace_back(u, v);
        }
        if (!simple) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return Graph(n, edges);
    }
    throw InputError("random_regular: no simple pairing found");
}

Graph gnp(int n, double prob, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < prob) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace pidecomp
