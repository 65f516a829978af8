#pragma once

#include "pse/rational.hpp"

namespace pse {

/// ceil(n^(1/3)) for n >= 1.
inline long ceil_cbrt(long n) {
    long t = 1;
    while (t * t * t < n) ++t;
    return t;
}

/// ceil((sqrt(log2 n) - 1) / 4), evaluated exactly: the smallest B >= 0 with
/// 2^((4B+1)^2) >= n.
inline long general_side_path_bound(long n) {
    if (n <= 2) return 0;
    long b = 0;
    while (true) {
        long e = (4 * b + 1) * (4 * b + 1);
        if (e > 200 || (BigInt(1) << e) >= n) return b;
        ++b;
    }
}

/// ceil(log2(n-1) / 4): the smallest B >= 0 with 2^(4B) >= n-1.
inline long stabber_bound(long n) {
    long m = n - 1, b = 0;
    while ((BigInt(1) << (4 * b)) < m) ++b;
    return b;
}

/// ceil((k+2)/3): side path size from k nested separating triangles.
inline long nested_triangle_bound(long k) { return (k + 4) / 3; }

struct Guarantees {
    long n = 0;
    long general_bound = 0;        // Theorem 1 point set size
    long convex_bound = 0;         // Theorem 2 point set size
    long induced_path_bound = 0;   // corollary: induced path length
    long fit_convex_bound = 0;     // corollary: fit^C lower bound
};

inline Guarantees guarantees(long n) {
    require(n >= 1, Err::BadInput, "guarantees needs n >= 1");
    Guarantees g;
    g.n = n;
    g.general_bound = general_side_path_bound(n);
    g.convex_bound = ceil_cbrt(n);
    g.induced_path_bound = g.general_bound;
    g.fit_convex_bound = g.convex_bound;
    return g;
}

}  // namespace pse
