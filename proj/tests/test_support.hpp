#ifndef BSHARP_TEST_SUPPORT_HPP
#define BSHARP_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "bsharp/algebra.hpp"
#include "bsharp/sampling.hpp"

// Deterministic generators shared by the property tests.

namespace testgen {

using bsharp::SplitMix64;
using bsharp::Vec;

inline double rand_in(SplitMix64& rng, double lo, double hi) { return rng.next_in(lo, hi); }

inline Vec rand_vec(SplitMix64& rng, std::size_t n, double lo, double hi) {
    Vec v(n);
    for (double& x : v) x = rng.next_in(lo, hi);
    return v;
}

// Nonzero entries with a random sign and |x| in [lo, hi].
inline Vec rand_signed_vec(SplitMix64& rng, std::size_t n, double lo, double hi) {
    Vec v(n);
    for (double& x : v) {
        const double mag = rng.next_in(lo, hi);
        x = (rng.next() & 1) ? mag : -mag;
    }
    return v;
}

// Entries whose magnitudes are pairwise separated by the given ratio, so
// no near-tie can blur the fold / power-sum comparison. Worst-case error
// of the p=300 power sum is ~ max|x| * n * ratio^601, far below 1e-8 at
// ratio 0.93.
inline Vec rand_separated_vec(SplitMix64& rng, std::size_t n, double lo, double hi,
                              double ratio = 0.93) {
    for (;;) {
        Vec v = rand_signed_vec(rng, n, lo, hi);
        std::vector<double> mags(n);
        for (std::size_t i = 0; i < n; ++i) mags[i] = std::abs(v[i]);
        std::sort(mags.begin(), mags.end());
        bool ok = true;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (mags[i] > ratio * mags[i + 1]) ok = false;
        }
        if (ok) return v;
    }
}

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool vec_close(const Vec& a, const Vec& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!close(a[i], b[i], tol)) return false;
    }
    return true;
}

}  // namespace testgen

#endif
