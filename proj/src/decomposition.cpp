#include "pidecomp/decomposition.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pidecomp/errors.hpp"

namespace pidecomp {

Decomposition::Decomposition(GraphPtr graph, std::span<const int> labels, int p) : graph_(std::move(graph)), p_(p) {
    if (!graph_) throw InputError("decomposition: null graph");
    if (p < 1) throw InputError("decomposition: p must be positive");
    const int n = graph_->vertex_count();
    if (n == 0) throw InputError("decomposition: graph has no vertices");
    if (static_cast<int>(labels.size()) != n)
        throw InputError("decomposition: expected " + std::to_string(n) + " labels, got " +
                         std::to_string(labels.size()));
    std::vector<int> distinct(labels.begin(), labels.end());
    if (std::any_of(distinct.begin(), distinct.end(), [](int l) { return l < 0; }))
        throw InputError("decomposition: negative part label");
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    part_of_.resize(n);
    parts_.resize(distinct.size());
    for (int v = 0; v < n; ++v) {
        const int idx = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), labels[v]) - distinct.begin());
        part_of_[v] = idx;
        parts_[idx].push_back(v);
    }
}

Decomposition Decomposition::from_parts(GraphPtr graph, const std::vector<std::vector<int>>& parts, int p) {
    if (!graph) throw InputError("decomposition: null graph");
    const int n = graph->vertex_count();
    std::vector<int> labels(n, -1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int v : parts[i]) {
            if (v < 0 || v >= n) throw InputError("decomposition: vertex " + std::to_string(v) + " out of range");
            if (labels[v] >= 0) throw InputError("decomposition: vertex " + std::to_string(v) + " in two parts");
            labels[v] = static_cast<int>(i);
        }
    for (int v = 0; v < n; ++v)
        if (labels[v] < 0) throw InputError("decomposition: vertex " + std::to_string(v) + " in no part");
    return Decomposition(std::move(graph), labels, p);
}

Decomposition Decomposition::trivial(GraphPtr graph, int p) {
    const std::vector<int> labels(graph ? graph->vertex_count() : 0, 0);
    return Decomposition(std::move(graph), labels, p);
}

bool same_partition(const Decomposition& a, const Decomposition& b) {
    if (a.graph().vertex_count() != b.graph().vertex_count() || a.part_count() != b.part_count()) return false;
    auto pa = a.parts(), pb = b.parts();
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa == pb;
}

InducedSubgraph union_parts(const Decomposition& d, std::span<const int> parts) {
    std::vector<int> vertices;
    for (int i : parts) {
        if (i < 0 || i >= d.part_count())
            throw InputError("union_parts: part index " + std::to_string(i) + " outside [0, " +
                             std::to_string(d.part_count()) + ")");
        vertices.insert(vertices.end(), d.part(i).begin(), d.part(i).end());
    }
    return induced_subgraph(d.graph(), std::span<const int>(vertices));
}

std::vector<std::vector<int>> colex_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        int i = 0;
        while (i < k && c[i] + 1 == (i + 1 < k ? c[i + 1] : n)) ++i;
        if (i == k) break;
        ++c[i];
        for (int j = 0; j < i; ++j) c[j] = j;
    }
    return out;
}

Verdict verify(const Decomposition& d, const PropertyChecker& checker) {
    if (!checker.hereditary)
        throw InputError("verify: checker " + checker.describe() + " is not flagged hereditary");
    Verdict verdict;
    const int k = std::min(d.p(), d.part_count());
    for (const auto& subset : colex_subsets(d.part_count(), k)) {
        ++verdict.unions_checked;
        if (!checker(union_parts(d, subset).graph)) {
            verdict.pass = false;
            verdict.counterexample = subset;
            break;
        }
    }
    return verdict;
}

// ---------------------------------------------------------------------------

BigInt binomial(const BigInt& a, long b) {
    if (b < 0 || a < 0 || BigInt(b) > a) return 0;
    BigInt result = 1;
    for (long i = 0; i < b; ++i) result = result * (a - i) / (i + 1);
    return result;
}

BigInt compose_bound(const BigInt& g_val, const BigInt& f_val, int p) {
    if (p < 1) throw InputError("compose_bound: p must be positive");
    if (g_val <= 0) return 0;
    const BigInt exponent = binomial(g_val - 1, p - 1);
    if (f_val < 0) throw InputError("compose_bound: negative f");
    if (exponent == 0 || f_val == 1) return g_val;
    if (f_val == 0) return 0;
    if (exponent > 100'000'000) throw InputError("compose_bound: exponent too large to expand");
    return g_val * boost::multiprecision::pow(f_val, static_cast<unsigned>(exponent));
}

BigInt compose_bound(long g_val, long f_val, int p) { return compose_bound(BigInt(g_val), BigInt(f_val), p); }

namespace {

void check_inner(const Decomposition& outer, const std::vector<int>& subset, const InnerMap& inner,
                 std::vector<InducedSubgraph>& unions, std::vector<const Decomposition*>& inners) {
    auto it = inner.find(subset);
    std::string name = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) name += (i ? "," : "") + std::to_string(subset[i]);
    name += "}";
    if (it == inner.end()) throw InputError("compose: missing inner decomposition for part subset " + name);
    auto u = union_parts(outer, subset);
    if (!(it->second.graph() == u.graph))
        throw InputError("compose: inner decomposition for " + name + " is not over that part union");
    if (it->second.p() != outer.p()) throw InputError("compose: inner decomposition for " + name + " has a different p");
    unions.push_back(std::move(u));
    inners.push_back(&it->second);
}

}  // namespace

ComposeResult compose(const Decomposition& outer, const InnerMap& inner) {
    const int n_outer = outer.part_count();
    const int p = outer.p();
    if (n_outer < p) {
        // No p-subsets of parts exist, so every signature is just the outer part.
        BigInt f = 1;
        for (const auto& [key, d] : inner) f = std::max(f, BigInt(d.part_count()));
        return {outer, compose_bound(n_outer, static_cast<long>(f), p), true};
    }

    const auto subsets = colex_subsets(n_outer, p);
    std::vector<InducedSubgraph> unions;
    std::vector<const Decomposition*> inners;
    for (const auto& s : subsets) check_inner(outer, s, inner, unions, inners);

    const int n = outer.graph().vertex_count();
    std::vector<std::vector<int>> signature(n);
    for (int v = 0; v < n; ++v) signature[v].push_back(outer.part_of(v));
    long max_inner = 1;
    for (std::size_t k = 0; k < subsets.size(); ++k) {
        max_inner = std::max<long>(max_inner, inners[k]->part_count());
        const auto& to_parent = unions[k].to_parent;
        for (std::size_t local = 0; local < to_parent.size(); ++local)
            signature[to_parent[local]].push_back(inners[k]->part_of(static_cast<int>(local)));
    }
    // Subsets are visited in colex order, so each vertex's entries follow
    // the colex order of the subsets containing its outer part.
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v)
        labels[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) - distinct.begin());
    Decomposition composed(outer.graph_ptr(), labels, p);
    return {std::move(composed), compose_bound(n_outer, max_inner, p), false};
}

Decomposition intersect(const Decomposition& a, const Decomposition& b) {
    if (a.graph_ptr() != b.graph_ptr() && !(a.graph() == b.graph()))
        throw InputError("intersect: decompositions are over different graphs");
    if (a.p() != b.p()) throw InputError("intersect: decompositions have different p");
    const int n = a.graph().vertex_count();
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = a.part_of(v) * b.part_count() + b.part_of(v);
    return Decomposition(a.graph_ptr(), labels, a.p());
}

// ---------------------------------------------------------------------------

BoundLedger BoundLedger::constant(BigInt value) {
    if (value < 0) throw InputError("ledger: negative constant");
    return BoundLedger(Constant{std::move(value)});
}

BoundLedger BoundLedger::power(long num, long den) {
    if (num < 0 || den <= 0) throw InputError("ledger: exponent must be a non-negative fraction");
    return BoundLedger(Power{num, den});
}

BoundLedger BoundLedger::table(std::map<long, BigInt> entries) {
    if (entries.empty()) throw InputError("ledger: empty table");
    BigInt last = -1;
    for (const auto& [n, value] : entries) {
        if (n < 0 || value < 0) throw InputError("ledger: negative table entry");
        if (value < last) throw InputError("ledger: table values must be non-decreasing");
        last = value;
    }
    return BoundLedger(Table{std::move(entries)});
}

BoundLedger BoundLedger::composed(BoundLedger g, BoundLedger f, int p) {
    if (p < 1) throw InputError("ledger: p must be positive");
    return BoundLedger(Composed{std::make_shared<const BoundLedger>(std::move(g)),
                                std::make_shared<const BoundLedger>(std::move(f)), p});
}

namespace {

// Smallest x >= 0 with x^den >= target.
BigInt ceil_root(const BigInt& target, long den) {
    if (target <= 1) return target;
    BigInt lo = 1, hi = 1;
    while (boost::multiprecision::pow(hi, static_cast<unsigned>(den)) < target) hi *= 2;
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, static_cast<unsigned>(den)) >= target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

}  // namespace

BigInt BoundLedger::evaluate(long n) const {
    if (n < 0) throw InputError("ledger: negative size");
    return std::visit(
        [n](const auto& r) -> BigInt {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return r.value;
            } else if constexpr (std::is_same_v<T, Power>) {
                return ceil_root(boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(r.num)), r.den);
            } else if constexpr (std::is_same_v<T, Table>) {
                auto it = r.entries.lower_bound(n);
                if (it == r.entries.end())
                    throw InputError("ledger: table has no entry at or above n = " + std::to_string(n));
                return it->second;
            } else {
                return compose_bound(r.g->evaluate(n), r.f->evaluate(n), r.p);
            }
        },
        record_);
}

std::string BoundLedger::describe() const {
    return std::visit(
        [](const auto& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return "constant(" + r.value.str() + ")";
            } else if constexpr (std::is_same_v<T, Power>) {
                return "ceil(n^(" + std::to_string(r.num) + "/" + std::to_string(r.den) + "))";
            } else if constexpr (std::is_same_v<T, Table>) {
                std::string out = "table(";
                bool first = true;
                for (const auto& [k, v] : r.entries) {
                    out += (first ? "" : ", ") + std::to_string(k) + "->" + v.str();
                    first = false;
                }
                return out + ")";
            } else {
                return "compose(g=" + r.g->describe() + ", f=" + r.f->describe() + ", p=" + std::to_string(r.p) + ")";
            }
        },
        record_);
}

// ---------------------------------------------------------------------------

std::string write_decomposition(const Decomposition& d) {
    std::string out = "pidecomp-decomposition 1\n";
    out += "graph " + graph_hash(d.graph()) + "\n";
    out += "vertices " + std::to_string(d.graph().vertex_count()) + "\n";
    out += "p " + std::to_string(d.p()) + "\n";
    out += "parts " + std::to_string(d.part_count()) + "\n";
    for (const auto& part : d.parts()) {
        for (std::size_t i = 0; i < part.size(); ++i) out += (i ? " " : "") + std::to_string(part[i]);
        out += "\n";
    }
    return out;
}

namespace {

std::string expect_field(std::istream& in, const std::string& key, int& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ss(line);
        std::string k, v, extra;
        ss >> k >> v;
        if (k != key || v.empty() || (ss >> extra))
            throw InputError("decomposition line " + std::to_string(line_no) + ": expected \"" + key + " <value>\"");
        return v;
    }
    throw InputError("decomposition: missing \"" + key + "\" line");
}

long to_long(const std::string& s, const std::string& key, int line_no) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError("decomposition line " + std::to_string(line_no) + ": bad " + key + " value");
    }
}

}  // namespace

Decomposition read_decomposition(std::string_view text, GraphPtr graph) {
    std::istringstream in{std::string(text)};
    int line_no = 0;
    if (expect_field(in, "pidecomp-decomposition", line_no) != "1")
        throw InputError("decomposition: unsupported format version");
    const std::string hash = expect_field(in, "graph", line_no);
    const long n = to_long(expect_field(in, "vertices", line_no), "vertices", line_no);
    const long p = to_long(expect_field(in, "p", line_no), "p", line_no);
    const long count = to_long(expect_field(in, "parts", line_no), "parts", line_no);
    if (n != graph->vertex_count())
        throw InputError("decomposition: written for " + std::to_string(n) + " vertices, graph has " +
                         std::to_string(graph->vertex_count()));
    if (hash != graph_hash(*graph)) throw InputError("decomposition: graph hash mismatch (" + hash + ")");
    if (p < 1 || p > (1 << 20)) throw InputError("decomposition: bad p");
    if (count < 1 || count > n) throw InputError("decomposition: bad part count");

    std::vector<std::vector<int>> parts;
    std::string line;
    while (static_cast<long>(parts.size()) < count && std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::vector<int> part;
        std::string token;
        while (ss >> token) part.push_back(static_cast<int>(to_long(token, "vertex", line_no)));
        if (part.empty()) throw InputError("decomposition line " + std::to_string(line_no) + ": empty part");
        parts.push_back(std::move(part));
    }
    if (static_cast<long>(parts.size()) != count) throw InputError("decomposition: fewer parts than declared");
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw InputError("decomposition line " + std::to_string(line_no) + ": unexpected content");
    }
    return Decomposition::from_parts(std::move(graph), parts, static_cast<int>(p));
}

Decomposition read_decomposition_file(const std::string& path, GraphPtr graph) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return read_decomposition(buf.str(), std::move(graph));
}

}  // namespace pidecomp
