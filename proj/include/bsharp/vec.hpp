#ifndef BSHARP_VEC_HPP
#define BSHARP_VEC_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bsharp/algebra.hpp"

// Componentwise extension of the scalar algebra to R^n: vector ⊞,
// the Hadamard product ⊡, copositivity, orthant sign maps, the
// magnitude semilattice order, and the ∞-inner product.

namespace bsharp {

namespace detail {

inline void require_same_dim(const Vec& x, const Vec& y, const char* what) {
    if (x.size() != y.size()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    }
}

}  // namespace detail

inline Vec scale(const Vec& x, double a) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i];
    return out;
}

inline double sup_norm(const Vec& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

inline Vec vec_boxplus(const Vec& x, const Vec& y, Tolerance tol = {}) {
    detail::require_same_dim(x, y, "vec_boxplus");
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = boxplus(x[i], y[i], tol);
    return out;
}

/// Coordinatewise n-ary fold of a family of vectors.
inline Vec vec_nary_boxplus(const std::vector<Vec>& xs, Tolerance tol = {}) {
    if (xs.empty()) throw std::invalid_argument("vec_nary_boxplus: empty family");
    const std::size_t n = xs.front().size();
    for (const Vec& x : xs) {
        if (x.size() != n) throw std::invalid_argument("vec_nary_boxplus: dimension mismatch");
    }
    Vec out(n);
    Vec column(xs.size());
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < xs.size(); ++j) column[j] = xs[j][k];
        out[k] = nary_boxplus(column, tol);
    }
    return out;
}

/// Hadamard product x ⊡ y.
inline Vec boxdot(const Vec& x, const Vec& y) {
    detail::require_same_dim(x, y, "boxdot");
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * y[i];
    return out;
}

/// True iff x and y share a closed orthant (all coordinate products >= 0).
inline bool is_copositive(const Vec& x, const Vec& y) {
    detail::require_same_dim(x, y, "is_copositive");
    for (std::size_t i = 0; i < x.size(); ++i) {
        const bool conflict = (x[i] > 0.0 && y[i] < 0.0) || (x[i] < 0.0 && y[i] > 0.0);
        if (conflict) return false;
    }
    return true;
}

/// Ψ_K: componentwise sign flip mapping the orthant K onto R_+^n.
/// Involutive: psi_K(psi_K(x)) = x.
inline Vec psi_K(const Vec& x, const OrthantSign& K) {
    if (x.size() != K.size()) throw std::invalid_argument("psi_K: dimension mismatch");
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = static_cast<double>(K[i]) * x[i];
    return out;
}

/// Orthant containing a copositive pair. A zero coordinate belongs to
/// several orthants; the sign is taken from x when nonzero, else from y,
/// else +1, which makes Ψ_K deterministic for copositive pairs.
inline OrthantSign infer_orthant(const Vec& x, const Vec& y) {
    detail::require_same_dim(x, y, "infer_orthant");
    OrthantSign K(x.size(), +1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0.0) {
            K[i] = x[i] > 0.0 ? +1 : -1;
        } else if (y[i] != 0.0) {
            K[i] = y[i] > 0.0 ? +1 : -1;
        }
    }
    return K;
}

inline bool in_orthant(const Vec& x, const OrthantSign& K) {
    if (x.size() != K.size()) throw std::invalid_argument("in_orthant: dimension mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (static_cast<double>(K[i]) * x[i] < 0.0) return false;
    }
    return true;
}

/// Semilattice order x ⩽ y ⟺ |x_i| <= |y_i| for every coordinate.
/// A partial order on each fixed orthant.
inline bool semilattice_leq(const Vec& x, const Vec& y) {
    detail::require_same_dim(x, y, "semilattice_leq");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::abs(x[i]) > std::abs(y[i])) return false;
    }
    return true;
}

/// ⟨x,y⟩_∞: the n-ary fold of the coordinatewise products. Satisfies
/// sqrt(⟨x,x⟩_∞) = ||x||_∞ and |⟨x,y⟩_∞| <= ||x||_∞ ||y||_∞.
inline double inner_product_infty(const Vec& x, const Vec& y, Tolerance tol = {}) {
    detail::require_same_dim(x, y, "inner_product_infty");
    if (x.empty()) throw std::invalid_argument("inner_product_infty: empty vectors");
    return nary_boxplus(boxdot(x, y), tol);
}

}  // namespace bsharp

#endif
