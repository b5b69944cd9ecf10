#include "pidecomp/patterns.hpp"

#include <algorithm>
#include <map>

#include "pidecomp/errors.hpp"
#include "pidecomp/generators.hpp"

namespace pidecomp {

namespace {

// Grows ladders one rung at a time: rung k adds (a_k, b_k) where b_k is
// adjacent to every a so far and a_k to none of the earlier b's.
class LadderSearch {
public:
    LadderSearch(const Graph& g, int cap) : g_(g), cap_(cap), used_(g.vertex_count(), 0), b_hits_(g.vertex_count(), 0) {
        a_hits_.assign(g.vertex_count(), 0);
    }

    void run() { extend(); }

    const HalfGraphWitness& best() const { return best_; }

    // Appends rungs greedily in index order until none fits.
    HalfGraphWitness greedy_extend(HalfGraphWitness w) {
        std::vector<char> used(g_.vertex_count(), 0);
        for (int v : w.a) used[v] = 1;
        for (int v : w.b) used[v] = 1;
        bool grown = true;
        while (grown) {
            grown = false;
            for (int x = 0; x < g_.vertex_count() && !grown; ++x) {
                if (used[x] || std::any_of(w.b.begin(), w.b.end(), [&](int b) { return g_.adjacent(x, b); })) continue;
                for (int y : g_.neighbors(x)) {
                    if (used[y] || !std::all_of(w.a.begin(), w.a.end(), [&](int a) { return g_.adjacent(a, y); })) continue;
                    w.a.push_back(x);
                    w.b.push_back(y);
                    used[x] = used[y] = 1;
                    grown = true;
                    break;
                }
            }
        }
        return w;
    }

private:
    void extend() {
        const int k = static_cast<int>(cur_.a.size());
        if (k > best_.order()) best_ = cur_;
        if (k == cap_ || best_.order() == cap_) return;

        // b candidates: adjacent to all a's; a candidates: adjacent to no b.
        int b_room = 0, a_room = 0;
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (used_[v]) continue;
            b_room += a_hits_[v] == k;
            a_room += b_hits_[v] == 0;
        }
        if (k + std::min(a_room, b_room) <= best_.order()) return;

        for (int x = 0; x < g_.vertex_count(); ++x) {
            if (used_[x] || b_hits_[x] != 0) continue;
            for (int y : g_.neighbors(x)) {
                if (used_[y] || a_hits_[y] != k) continue;
                push(x, y);
                extend();
                pop(x, y);
                if (best_.order() == cap_) return;
            }
        }
    }

    void push(int x, int y) {
        used_[x] = used_[y] = 1;
        cur_.a.push_back(x);
        cur_.b.push_back(y);
        for (int w : g_.neighbors(x)) ++a_hits_[w];
        for (int w : g_.neighbors(y)) ++b_hits_[w];
    }

    void pop(int x, int y) {
        used_[x] = used_[y] = 0;
        cur_.a.pop_back();
        cur_.b.pop_back();
        for (int w : g_.neighbors(x)) --a_hits_[w];
        for (int w : g_.neighbors(y)) --b_hits_[w];
    }

    const Graph& g_;
    int cap_;
    std::vector<char> used_;
    std::vector<int> a_hits_;  // number of current a's adjacent to v
    std::vector<int> b_hits_;  // number of current b's adjacent to v
    HalfGraphWitness cur_;
    HalfGraphWitness best_;
};

}  // namespace

HalfGraphResult half_graph_order(const Graph& g, int exact_limit) {
    const int cap = std::max(0, exact_limit / 2);
    LadderSearch search(g, cap);
    search.run();
    HalfGraphResult result;
    result.witness = search.best();
    if (result.witness.order() == cap && 2 * cap + 2 <= g.vertex_count()) {
        result.witness = search.greedy_extend(result.witness);
        result.exact = false;
    }
    result.order = result.witness.order();
    return result;
}

// ---------------------------------------------------------------------------

namespace {

// Realizer per trace mask if `set` is shattered, otherwise empty.
std::vector<int> shatter_realizers(const Graph& g, const std::vector<int>& set) {
    const std::size_t k = set.size();
    std::vector<int> realizer(std::size_t{1} << k, -1);
    std::size_t covered = 0;
    for (int v = 0; v < g.vertex_count() && covered < realizer.size(); ++v) {
        std::size_t mask = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (g.adjacent(v, set[i])) mask |= std::size_t{1} << i;
        if (realizer[mask] < 0) {
            realizer[mask] = v;
            ++covered;
        }
    }
    if (covered < realizer.size()) return {};
    return realizer;
}

}  // namespace

VcResult vc_dimension(const Graph& g, int exact_limit) {
    VcResult result;
    if (g.vertex_count() == 0) return result;
    result.witness.realizers = {0};

    // Shattering is closed under subsets, so every shattered k-set is a
    // shattered (k-1)-set plus a larger vertex.
    std::vector<std::vector<int>> level{{}};
    for (int k = 1; k <= std::min(exact_limit, 30); ++k) {
        if ((std::size_t{1} << k) > static_cast<std::size_t>(g.vertex_count())) break;
        std::vector<std::vector<int>> next;
        for (const auto& base : level) {
            const int start = base.empty() ? 0 : base.back() + 1;
            for (int v = start; v < g.vertex_count(); ++v) {
                auto set = base;
                set.push_back(v);
                auto realizers = shatter_realizers(g, set);
                if (realizers.empty()) continue;
                if (next.empty()) result.witness = {set, std::move(realizers)};
                next.push_back(std::move(set));
            }
        }
        if (next.empty()) break;
        result.dimension = k;
        level = std::move(next);
    }
    result.capped = result.dimension == exact_limit;
    return result;
}

// ---------------------------------------------------------------------------

PigeonholeResult half_graph_pigeonhole(int m, const Decomposition& d) {
    if (m < 1) throw InputError("half_graph_pigeonhole: m must be positive");
    if (!(d.graph() == half_graph(m))) throw InputError("half_graph_pigeonhole: decomposition is not over half_graph(m)");
    std::map<std::pair<int, int>, std::vector<int>> buckets;
    for (int i = 0; i < m; ++i) buckets[{d.part_of(i), d.part_of(m + i)}].push_back(i);

    auto best = buckets.begin();
    for (auto it = buckets.begin(); it != buckets.end(); ++it)
        if (it->second.size() > best->second.size()) best = it;

    PigeonholeResult result;
    result.parts = best->first;
    for (int i : best->second) {
        result.witness.a.push_back(i);
        result.witness.b.push_back(m + i);
    }
    const long n2 = static_cast<long>(d.part_count()) * d.part_count();
    result.guaranteed = (m + n2 - 1) / n2;
    return result;
}

}  // namespace pidecomp
