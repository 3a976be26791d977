#ifndef BSHARP_ALGEBRA_HPP
#define BSHARP_ALGEBRA_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

// Core scalar algebra: the idempotent, commutative, non-associative
// operation ⊞ on the reals (the larger-magnitude operand wins, symmetric
// operands cancel to zero), its n-ary extension through symmetry counting,
// and the ⌣ semilattice operation used by B-forms.

namespace bsharp {

// Comparison knob for symmetry detection. tie_eps = 0 means bit-exact
// comparison, which preserves the exact semantics on dyadic inputs.
struct Tolerance {
    double tie_eps = 0.0;
};

// Thrown when two provably equivalent evaluation routes disagree or an
// unreachable branch is reached; distinct from input validation errors so
// callers can tell a bug apart from bad input.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

using Vec = std::vector<double>;
using IndexSet = std::vector<std::size_t>;  // 0-based, ascending
using OrthantSign = std::vector<int>;       // entries are +1 or -1

namespace detail {

inline void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + ": non-finite value");
    }
}

inline void require_all_finite(const Vec& x, const char* what) {
    for (double v : x) require_finite(v, what);
}

inline bool near(double a, double b, double eps) {
    return std::abs(a - b) <= eps;
}

}  // namespace detail

inline IndexSet full_index_set(std::size_t n) {
    IndexSet I(n);
    for (std::size_t i = 0; i < n; ++i) I[i] = i;
    return I;
}

/// x ⊞ y: returns the larger-magnitude operand; magnitude ties (within
/// tie_eps) fall back to (x+y)/2, which reproduces both idempotence
/// (x ⊞ x = x) and annihilation (x ⊞ (-x) = 0) in a single formula.
inline double boxplus(double x, double y, Tolerance tol = {}) {
    detail::require_finite(x, "boxplus");
    detail::require_finite(y, "boxplus");
    const double ax = std::abs(x), ay = std::abs(y);
    if (ax > ay + tol.tie_eps) return x;
    if (ay > ax + tol.tie_eps) return y;
    return 0.5 * (x + y);
}

/// ξ_I[x](α): occurrences of α minus occurrences of -α among the
/// coordinates indexed by I. Counts use |x_i - α| <= tie_eps.
inline int xi(const Vec& x, const IndexSet& I, double alpha, Tolerance tol = {}) {
    int count = 0;
    for (std::size_t i : I) {
        if (i >= x.size()) throw std::invalid_argument("xi: index out of range");
        if (detail::near(x[i], alpha, tol.tie_eps)) ++count;
        if (detail::near(x[i], -alpha, tol.tie_eps)) --count;
    }
    return count;
}

/// The residual index set J_I(x) = { j in I : ξ_I[x](x_j) != 0 }: indices
/// surviving symmetric cancellation.
inline IndexSet residual_index_set(const Vec& x, const IndexSet& I, Tolerance tol = {}) {
    IndexSet J;
    for (std::size_t j : I) {
        if (xi(x, I, x[j], tol) != 0) J.push_back(j);
    }
    return J;
}

/// n-ary fold over the indices in I. Evaluates the combinatorial rule: drop
/// symmetrically cancelled indices, then the max (or min) over the
/// residual set depending on the sign of the symmetry count at the top
/// magnitude. Never forms large powers; the power form lives in the
/// finite-p oracle.
inline double nary_boxplus(const Vec& x, const IndexSet& I, Tolerance tol = {}) {
    if (I.empty()) throw std::invalid_argument("nary_boxplus: empty index set");
    detail::require_all_finite(x, "nary_boxplus");
    const IndexSet J = residual_index_set(x, I, tol);
    if (J.empty()) return 0.0;
    double max_mag = 0.0;
    for (std::size_t j : J) max_mag = std::max(max_mag, std::abs(x[j]));
    const int s = xi(x, I, max_mag, tol);
    if (s > 0) {
        double best = x[J.front()];
        for (std::size_t j : J) best = std::max(best, x[j]);
        return best;
    }
    if (s < 0) {
        double best = x[J.front()];
        for (std::size_t j : J) best = std::min(best, x[j]);
        return best;
    }
    // Unreachable with a nonempty residual set: an index attaining the top
    // magnitude would have been cancelled out of J.
    throw invariant_violation("nary_boxplus: zero symmetry count on nonempty residual set");
}

inline double nary_boxplus(const Vec& x, Tolerance tol = {}) {
    return nary_boxplus(x, full_index_set(x.size()), tol);
}

namespace detail {

// Fold over a possibly-empty index set; the empty fold is 0, consistent
// with the residual-set convention.
inline double fold_or_zero(const Vec& x, const IndexSet& I, Tolerance tol) {
    return I.empty() ? 0.0 : nary_boxplus(x, I, tol);
}

}  // namespace detail

/// Λ(x): component i is x_i ⊞ (fold of the other components). Every
/// component lands in {0, fold(x)}, so the results share one sign and fold
/// associatively in any order.
inline Vec lambda_map(const Vec& x, Tolerance tol = {}) {
    const std::size_t n = x.size();
    if (n == 0) throw std::invalid_argument("lambda_map: empty vector");
    detail::require_all_finite(x, "lambda_map");
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        IndexSet rest;
        rest.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) rest.push_back(j);
        }
        out[i] = boxplus(x[i], detail::fold_or_zero(x, rest, tol), tol);
    }
    return out;
}

/// u ⌣ v: the larger-magnitude operand, with magnitude ties resolved to
/// min{u, v}. Satisfies u ⊞ v = ((u ⌣ v) - ((-u) ⌣ (-v))) / 2.
inline double smile(double u, double v, Tolerance tol = {}) {
    detail::require_finite(u, "smile");
    detail::require_finite(v, "smile");
    const double au = std::abs(u), av = std::abs(v);
    if (au > av + tol.tie_eps) return u;
    if (av > au + tol.tie_eps) return v;
    return std::min(u, v);
}

/// m-ary ⌣ fold: the max over positive entries when it strictly dominates
/// every negative entry's magnitude, otherwise the min over negative
/// entries (ties included). Zero entries belong to neither side and are
/// skipped; the all-zero input folds to 0.
inline double smile_fold(const Vec& u, Tolerance tol = {}) {
    if (u.empty()) throw std::invalid_argument("smile_fold: empty input");
    detail::require_all_finite(u, "smile_fold");
    bool has_pos = false, has_neg = false;
    double max_pos = 0.0, min_neg = 0.0;
    for (double v : u) {
        if (v > 0.0) {
            max_pos = has_pos ? std::max(max_pos, v) : v;
            has_pos = true;
        } else if (v < 0.0) {
            min_neg = has_neg ? std::min(min_neg, v) : v;
            has_neg = true;
        }
    }
    if (!has_pos && !has_neg) return 0.0;
    if (!has_neg) return max_pos;
    if (!has_pos) return min_neg;
    if (max_pos > -min_neg + tol.tie_eps) return max_pos;
    return min_neg;
}

}  // namespace bsharp

#endif
