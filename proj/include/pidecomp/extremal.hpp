#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "pidecomp/decomposition.hpp"
#include "pidecomp/graph.hpp"

namespace pidecomp {

using BigRational = boost::multiprecision::cpp_rational;

struct KstQuery {
    long n;
    long s;
    long t;
};

struct KstBound {
    BigRational value;  ///< >= the real bound; equal when the roots are exact
    bool exact = false;
    double approx() const { return value.convert_to<double>(); }
};

/// Upper bound (1/2)(t-1)^(1/s) n^(2-1/s) + (1/2)(s-1) n on ex(n, K_{s,t}).
///
/// Evaluated as (n/2) * ((t-1) n^(s-1))^(1/s) + (s-1) n / 2, where the s-th
/// root is exact for perfect powers and otherwise rounded up to a multiple
/// of 2^-64. Throws InputError unless t >= s >= 2 and n >= 0.
KstBound kst_bound(const KstQuery& q);
inline KstBound kst_bound(long n, long s, long t) { return kst_bound(KstQuery{n, s, t}); }

/// Exact ex(n, K_{s,t}) by exhaustive search over edge subsets, n <= 7.
/// Throws SizeError for larger n, InputError for s or t < 1.
int zarankiewicz_brute(int n, int s, int t);

struct DensePair {
    int i = 0;
    int j = 0;
    long edges = 0;       ///< edges induced by parts i and j together
    long guaranteed = 0;  ///< ceil(m / N^2)
};

/// The part pair (i <= j) whose union induces the most edges, smallest
/// (i, j) on ties.
DensePair densest_part_pair(const Decomposition& d);

}  // namespace pidecomp
