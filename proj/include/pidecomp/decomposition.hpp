#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pidecomp/checkers.hpp"
#include "pidecomp/graph.hpp"

namespace pidecomp {

using BigInt = boost::multiprecision::cpp_int;

/// Vertex partition V_0, ..., V_{N-1} of a graph with decomposition parameter p.
///
/// Every part is nonempty. Constructors renumber labels densely, keeping
/// their relative order.
class Decomposition {
public:
    /// `labels[v]` is any non-negative label for vertex v.
    Decomposition(GraphPtr graph, std::span<const int> labels, int p);

    /// Every vertex must occur in exactly one list; empty lists are dropped.
    static Decomposition from_parts(GraphPtr graph, const std::vector<std::vector<int>>& parts, int p);

    /// One part holding every vertex. The graph must have at least one vertex.
    static Decomposition trivial(GraphPtr graph, int p);

    const Graph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }
    int p() const { return p_; }
    int part_count() const { return static_cast<int>(parts_.size()); }
    int part_of(int v) const { return part_of_[v]; }
    const std::vector<int>& labels() const { return part_of_; }
    const std::vector<int>& part(int i) const { return parts_[i]; }
    const std::vector<std::vector<int>>& parts() const { return parts_; }

private:
    Decomposition() = default;
    GraphPtr graph_;
    std::vector<int> part_of_;
    std::vector<std::vector<int>> parts_;
    int p_ = 1;
};

/// True when both describe the same partition of the same vertex count,
/// ignoring part numbering.
bool same_partition(const Decomposition& a, const Decomposition& b);

/// Induced subgraph on the union of the listed parts. Repeats are allowed
/// and collapse. Throws InputError for an index outside [0, N).
InducedSubgraph union_parts(const Decomposition& d, std::span<const int> parts);

struct Verdict {
    bool pass = true;
    std::vector<int> counterexample;  ///< first failing part subset (colex order)
    std::size_t unions_checked = 0;
};

/// Checks every union of exactly min(p, N) parts, in colexicographic order,
/// stopping at the first rejected one. Smaller unions are covered by
/// heredity. Throws InputError for a checker not flagged hereditary.
Verdict verify(const Decomposition& d, const PropertyChecker& checker);

/// All k-subsets of {0..n-1} in colexicographic order.
std::vector<std::vector<int>> colex_subsets(int n, int k);

// ---------------------------------------------------------------------------
// Algebra

/// g * f^C(g-1, p-1), with C(a, b) = 0 for b > a.
BigInt compose_bound(const BigInt& g_val, const BigInt& f_val, int p);
BigInt compose_bound(long g_val, long f_val, int p);

BigInt binomial(const BigInt& a, long b);

/// Inner decompositions keyed by the sorted outer part subset they refine.
/// inner[I] decomposes union_parts(outer, I), with that union's dense
/// vertex numbering.
using InnerMap = std::map<std::vector<int>, Decomposition>;

struct ComposeResult {
    Decomposition decomposition;
    BigInt bound;           ///< compose_bound(N_outer, max inner N, p)
    bool degenerate = false;  ///< outer had fewer than p parts; returned unchanged
};

/// Refines `outer` so that every p-union of the result sits inside an inner
/// p-union. A vertex v of outer part i gets the signature
/// (i, inner[I].part_of(v) for every p-subset I containing i, in colex
/// order); vertices with equal signatures share a part. Parts are numbered
/// by signature order. Throws InputError when an inner decomposition is
/// missing, built over the wrong graph, or has a different p.
ComposeResult compose(const Decomposition& outer, const InnerMap& inner);

/// Nonempty intersections V1_i ∩ V2_j, numbered in (i, j) order.
/// Throws InputError if the graphs or p differ.
Decomposition intersect(const Decomposition& a, const Decomposition& b);

// ---------------------------------------------------------------------------
// Bound ledger

/// A non-decreasing bound N <= f(n) on part counts, kept symbolically and
/// evaluated exactly.
class BoundLedger {
public:
    struct Constant {
        BigInt value;
    };
    /// ceil(n^(num/den)).
    struct Power {
        long num;
        long den;
    };
    /// Explicit values at chosen sizes. Evaluating at n reads the entry with
    /// the smallest key >= n; sizes beyond the last key throw InputError.
    struct Table {
        std::map<long, BigInt> entries;
    };
    /// h(n) = g(n) * f(n)^C(g(n) - 1, p - 1).
    struct Composed {
        std::shared_ptr<const BoundLedger> g;
        std::shared_ptr<const BoundLedger> f;
        int p;
    };

    static BoundLedger constant(BigInt value);
    static BoundLedger power(long num, long den);
    static BoundLedger table(std::map<long, BigInt> entries);
    static BoundLedger composed(BoundLedger g, BoundLedger f, int p);

    BigInt evaluate(long n) const;
    std::string describe() const;

private:
    using Record = std::variant<Constant, Power, Table, Composed>;
    explicit BoundLedger(Record r) : record_(std::move(r)) {}
    Record record_;
};

// ---------------------------------------------------------------------------
// Decomposition document
//
//   pidecomp-decomposition 1
//   graph <16 hex digits of graph_hash>
//   vertices <n>
//   p <p>
//   parts <N>
//   <sorted vertex indices of part 0>
//   ...

std::string write_decomposition(const Decomposition& d);

/// Throws InputError when the document is malformed or does not match
/// `graph` (vertex count or hash).
Decomposition read_decomposition(std::string_view text, GraphPtr graph);
Decomposition read_decomposition_file(const std::string& path, GraphPtr graph);

}  // namespace pidecomp
