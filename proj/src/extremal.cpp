#include "pidecomp/extremal.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "pidecomp/errors.hpp"

namespace pidecomp {

namespace {

// Smallest y with y^s >= x.
BigInt ceil_root(const BigInt& x, long s) {
    if (x <= 1) return x;
    BigInt lo = 1, hi = 1;
    while (boost::multiprecision::pow(hi, static_cast<unsigned>(s)) < x) hi <<= 1;
    while (lo < hi) {
        BigInt mid = (lo + hi) >> 1;
        if (boost::multiprecision::pow(mid, static_cast<unsigned>(s)) >= x)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

constexpr unsigned kRootBits = 64;

}  // namespace

KstBound kst_bound(const KstQuery& q) {
    if (q.s < 2 || q.t < q.s) throw InputError("kst_bound: need t >= s >= 2");
    if (q.n < 0) throw InputError("kst_bound: n must be non-negative");
    if (q.s > 64) throw InputError("kst_bound: s too large");
    const BigInt radicand = BigInt(q.t - 1) * boost::multiprecision::pow(BigInt(q.n), static_cast<unsigned>(q.s - 1));
    KstBound out;
    BigRational root;
    const BigInt whole = ceil_root(radicand, q.s);
    if (boost::multiprecision::pow(whole, static_cast<unsigned>(q.s)) == radicand) {
        root = BigRational(whole);
        out.exact = true;
    } else {
        const BigInt scale = BigInt(1) << (kRootBits * static_cast<unsigned>(q.s));
        root = BigRational(ceil_root(radicand * scale, q.s), BigInt(1) << kRootBits);
    }
    out.value = BigRational(q.n) * root / 2 + BigRational(BigInt(q.s - 1) * q.n, 2);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Exhaustive edge-subset search with bitmask adjacency on <= 7 vertices.
class ZarankiewiczSearch {
public:
    ZarankiewiczSearch(int n, int s, int t) : n_(n), s_(s), t_(t), adj_(n, 0) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
        for (unsigned m = 0; m < (1u << n); ++m)
            if (std::popcount(m) == s) s_sets_.push_back(m);
    }

    int run() {
        search(0, 0);
        return best_;
    }

private:
    bool has_biclique() const {
        for (unsigned set : s_sets_) {
            unsigned common = (1u << n_) - 1;
            for (unsigned r = set; r; r &= r - 1) common &= adj_[std::countr_zero(r)];
            if (std::popcount(common & ~set) >= t_) return true;
        }
        return false;
    }

    void search(std::size_t index, int edges) {
        if (edges + static_cast<int>(pairs_.size() - index) <= best_) return;
        if (index == pairs_.size()) {
            best_ = edges;
            return;
        }
        auto [u, v] = pairs_[index];
        adj_[u] |= 1u << v;
        adj_[v] |= 1u << u;
        // Containing K_{s,t} is monotone, so a violating prefix can be cut.
        if (!has_biclique()) search(index + 1, edges + 1);
        adj_[u] &= ~(1u << v);
        adj_[v] &= ~(1u << u);
        search(index + 1, edges);
    }

    int n_, s_, t_;
    std::vector<unsigned> adj_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<unsigned> s_sets_;
    int best_ = -1;
};

}  // namespace

int zarankiewicz_brute(int n, int s, int t) {
    if (s < 1 || t < 1) throw InputError("zarankiewicz_brute: s and t must be positive");
    if (n > 7) throw SizeError("zarankiewicz_brute: n = " + std::to_string(n) + " exceeds the exhaustive limit of 7");
    if (n < 0) throw InputError("zarankiewicz_brute: n must be non-negative");
    return ZarankiewiczSearch(n, s, t).run();
}

DensePair densest_part_pair(const Decomposition& d) {
    const int parts = d.part_count();
    // counts[i][j] (i <= j): edges with one end in part i and the other in part j.
    std::vector<std::vector<long>> counts(parts, std::vector<long>(parts, 0));
    for (auto [u, v] : d.graph().edges()) {
        int a = d.part_of(u), b = d.part_of(v);
        if (a > b) std::swap(a, b);
        ++counts[a][b];
    }
    DensePair best;
    best.edges = -1;
    for (int i = 0; i < parts; ++i)
        for (int j = i; j < parts; ++j) {
            const long e = i == j ? counts[i][i] : counts[i][i] + counts[j][j] + counts[i][j];
            if (e > best.edges) best = {i, j, e, 0};
        }
    const long m = static_cast<long>(d.graph().edge_count());
    const long n2 = static_cast<long>(parts) * parts;
    best.guaranteed = (m + n2 - 1) / n2;
    return best;
}

}  // namespace pidecomp
