#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace pidecomp {

/// Seeded generator used by every randomized routine.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Bounded draws use plain rejection sampling on the raw 64-bit
/// output (not std::uniform_int_distribution, whose algorithm is
/// implementation-defined), so sequences agree across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % bound;
    }

    /// Uniform double in [0, 1) built from the top 53 bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Fisher-Yates from the back, using below().
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace pidecomp
