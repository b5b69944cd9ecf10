#include "pidecomp/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>

#include "pidecomp/errors.hpp"

namespace pidecomp {

Graph::Graph(int vertex_count) {
    if (vertex_count < 0) throw InputError("negative vertex count");
    adj_.resize(vertex_count);
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += list.size();
    }
    edge_count_ /= 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& list : adj_) d = std::max(d, static_cast<int>(list.size()));
    return d;
}

bool Graph::adjacent(int u, int v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSubset::VertexSubset(int vertex_count, std::span<const int> members) : flags_(vertex_count, false) {
    for (int v : members) insert(v);
}

void VertexSubset::insert(int v) {
    if (v < 0 || v >= universe())
        throw InputError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(universe()) + ")");
    flags_[v] = true;
}

std::vector<int> VertexSubset::members() const {
    std::vector<int> out;
    for (int v = 0; v < universe(); ++v)
        if (flags_[v]) out.push_back(v);
    return out;
}

int VertexSubset::size() const { return static_cast<int>(std::count(flags_.begin(), flags_.end(), true)); }

// ---------------------------------------------------------------------------

namespace {

// Parses a line into exactly two non-negative integers.
bool parse_pair(const std::string& line, long& a, long& b) {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> a >> b)) return false;
    if (ss >> extra) return false;
    return a >= 0 && b >= 0;
}

bool blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

[[noreturn]] void fail_at(int line_no, const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph load_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long n = 0, m = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        if (!parse_pair(line, n, m)) fail_at(line_no, "expected header \"n m\"");
        header = true;
        break;
    }
    if (!header) throw InputError("empty edge list");
    if (n > (1L << 30)) fail_at(line_no, "vertex count too large");

    std::vector<Edge> edges;
    edges.reserve(m);
    while (static_cast<long>(edges.size()) < m && std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        long u = 0, v = 0;
        if (!parse_pair(line, u, v)) fail_at(line_no, "malformed edge line");
        if (u >= n || v >= n) fail_at(line_no, "endpoint out of range");
        if (u == v) fail_at(line_no, "self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (static_cast<long>(edges.size()) < m)
        throw InputError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    while (std::getline(in, line)) {
        ++line_no;
        if (!blank(line)) fail_at(line_no, "unexpected content after " + std::to_string(m) + " edges");
    }
    return Graph(static_cast<int>(n), edges);
}

Graph load_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load_edge_list(in);
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return load_edge_list(in);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string save_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

std::string graph_hash(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : save_edge_list(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---------------------------------------------------------------------------

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.vertex_count(), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph power_graph(const Graph& g, int p) {
    if (p < 1) throw InputError("power_graph: p must be at least 1");
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    std::vector<int> dist(n, -1);
    std::vector<int> touched;
    for (int s = 0; s < n; ++s) {
        // Truncated BFS to depth p.
        touched.assign(1, s);
        dist[s] = 0;
        for (std::size_t i = 0; i < touched.size(); ++i) {
            int u = touched[i];
            if (dist[u] == p) continue;
            for (int w : g.neighbors(u))
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    touched.push_back(w);
                }
        }
        for (int v : touched) {
            if (v > s) edges.emplace_back(s, v);
            dist[v] = -1;
        }
    }
    return Graph(n, edges);
}

Graph subdivide(const Graph& g, int p) {
    if (p < 0) throw InputError("subdivide: p must be non-negative");
    if (p == 0) return g;
    const auto original = g.edges();
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(original.size() * (p + 1));
    int next = n;
    for (auto [u, v] : original) {
        int prev = u;
        for (int k = 0; k < p; ++k) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph(next, edges);
}

Graph subset_complement(const Graph& g, const VertexSubset& mark) {
    if (mark.universe() != g.vertex_count()) throw InputError("subset_complement: mark set over a different vertex count");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (!(mark.contains(u) && mark.contains(v))) edges.emplace_back(u, v);
    const auto marked = mark.members();
    for (std::size_t i = 0; i < marked.size(); ++i)
        for (std::size_t j = i + 1; j < marked.size(); ++j)
            if (!g.adjacent(marked[i], marked[j])) edges.emplace_back(marked[i], marked[j]);
    return Graph(g.vertex_count(), edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& s) {
    if (s.universe() != g.vertex_count()) throw InputError("induced_subgraph: subset over a different vertex count");
    const auto members = s.members();
    return induced_subgraph(g, std::span<const int>(members));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> to_parent(vertices.begin(), vertices.end());
    std::sort(to_parent.begin(), to_parent.end());
    to_parent.erase(std::unique(to_parent.begin(), to_parent.end()), to_parent.end());
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i) {
        int v = to_parent[i];
        if (v < 0 || v >= g.vertex_count()) throw InputError("induced_subgraph: vertex out of range");
        local[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        for (int w : g.neighbors(to_parent[i]))
            if (local[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), local[w]);
    return {Graph(static_cast<int>(to_parent.size()), edges), std::move(to_parent)};
}

}  // namespace pidecomp
