#ifndef BSHARP_SEPARATION_HPP
#define BSHARP_SEPARATION_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bsharp/algebra.hpp"
#include "bsharp/hull.hpp"
#include "bsharp/sampling.hpp"
#include "bsharp/vec.hpp"

// B-forms on an orthant, their sublevel-set identities, the gap to the
// ∞-inner product (whose lower semicontinuous regularization they are),
// and desk-scale search plus verification of separators between
// copositive finitely generated B-convex sets.

namespace bsharp {

/// x ↦ a_1 x_1 ⌣ ... ⌣ a_n x_n, evaluated on the tracked orthant after
/// the Ψ_K map.
struct BForm {
    Vec a;
    OrthantSign orthant;

    explicit BForm(Vec coeffs)
        : a(std::move(coeffs)), orthant(a.size(), +1) {}
    BForm(Vec coeffs, OrthantSign K) : a(std::move(coeffs)), orthant(std::move(K)) {
        if (a.size() != orthant.size()) throw std::invalid_argument("BForm: dimension mismatch");
    }
};

/// A finitely generated B-convex set ℬ[generators] inside one orthant.
struct GeneratedBSet {
    std::vector<Vec> generators;
    OrthantSign orthant;

    GeneratedBSet(std::vector<Vec> gens, OrthantSign K)
        : generators(std::move(gens)), orthant(std::move(K)) {
        if (generators.empty()) {
            throw std::invalid_argument("GeneratedBSet: empty generator list");
        }
        for (const Vec& g : generators) {
            if (g.size() != orthant.size()) {
                throw std::invalid_argument("GeneratedBSet: dimension mismatch");
            }
            if (!in_orthant(g, orthant)) {
                throw std::invalid_argument("GeneratedBSet: generator outside orthant");
            }
        }
    }

    std::size_t dim() const { return orthant.size(); }
};

inline double bform_eval(const BForm& f, const Vec& x, Tolerance tol = {}) {
    if (x.size() != f.a.size()) throw std::invalid_argument("bform_eval: dimension mismatch");
    return smile_fold(boxdot(f.a, psi_K(x, f.orthant)), tol);
}

namespace detail {

inline double max_or(double empty_value, const std::vector<double>& vals) {
    double m = empty_value;
    for (double v : vals) m = std::max(m, v);
    return m;
}

}  // namespace detail

/// f(x) <= c evaluated both directly and through the max-inequality
/// reformulation (branching on the sign of c):
///   c >= 0:  max_{I+}{a_i x_i} <= max( max_{I-}{-a_i x_i}, c )
///   c <= 0:  max( max_{I+}{a_i x_i}, -c ) <= max_{I-}{-a_i x_i}
/// Returns the direct result; a disagreement beyond tolerance throws,
/// since the two formulations are provably equivalent.
inline bool sublevel_check(const BForm& f, const Vec& x, double c, Tolerance tol = {}) {
    const double fx = bform_eval(f, x, tol);
    const bool direct = fx <= c;

    const Vec products = boxdot(f.a, psi_K(x, f.orthant));
    std::vector<double> pos, neg;
    for (double v : products) {
        if (v > 0.0) pos.push_back(v);
        if (v < 0.0) neg.push_back(-v);
    }
    const double lowest = -std::numeric_limits<double>::infinity();
    bool reformulated;
    if (c >= 0.0) {
        reformulated = detail::max_or(lowest, pos) <= std::max(detail::max_or(lowest, neg), c);
    } else {
        reformulated = std::max(detail::max_or(lowest, pos), -c) <= detail::max_or(lowest, neg);
    }
    if (direct != reformulated && std::abs(fx - c) > tol.tie_eps + 1e-12) {
        throw invariant_violation("sublevel_check: direct and reformulated evaluations disagree");
    }
    return direct;
}

/// ⟨a,x⟩_∞ - f(x) for x in R_+^n. Always >= 0; equals 0 whenever no
/// coordinate product a_i x_i is negative. A positive gap witnesses the
/// lower-semicontinuity regularization at tie points.
inline double regularization_gap(const Vec& a, const Vec& x, Tolerance tol = {}) {
    detail::require_same_dim(a, x, "regularization_gap");
    const double inner = inner_product_infty(a, x, tol);
    const double form = smile_fold(boxdot(a, x), tol);
    return inner - form;
}

struct SeparationCheck {
    bool separated = false;
    double gap = 0.0;
    double sup_c1 = 0.0;
    double inf_c2 = 0.0;
};

/// Estimates sup over C1 and inf over C2 of ⟨a,·⟩_∞ from the generators
/// plus seeded combination samples, and reports whether a separates the
/// sets with the achieved margin.
inline SeparationCheck verify_separator(const Vec& a, const GeneratedBSet& C1,
                                        const GeneratedBSet& C2, std::size_t samples,
                                        std::uint64_t seed, Tolerance tol = {}) {
    if (C1.orthant != C2.orthant) {
        throw std::invalid_argument("verify_separator: orthant mismatch");
    }
    if (a.size() != C1.dim()) throw std::invalid_argument("verify_separator: dimension mismatch");

    auto extremes = [&](const GeneratedBSet& C, std::uint64_t salt) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        auto visit = [&](const Vec& z) {
            const double v = inner_product_infty(a, z, tol);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        };
        for (const Vec& g : C.generators) visit(g);
        for (const Vec& z : combination_set_sample(C.generators, samples, seed ^ salt, tol)) {
            visit(z);
        }
        return std::pair<double, double>(lo, hi);
    };
    const double sup1 = extremes(C1, 0x5e11ULL).second;
    const double inf2 = extremes(C2, 0xc0deULL).first;

    SeparationCheck out;
    out.sup_c1 = sup1;
    out.inf_c2 = inf2;
    out.gap = inf2 - sup1;
    out.separated = sup1 < inf2 - tol.tie_eps;
    return out;
}

/// Deterministic search for a separating coefficient vector: coordinate
/// axes, sign patterns over a {2^k} magnitude grid, then random
/// directions, stopping at the first candidate verify_separator accepts.
/// The sets may well be separable even when the search comes back empty;
/// absence of a certificate is not a certificate of absence.
inline std::optional<Vec> search_separator(const GeneratedBSet& C1, const GeneratedBSet& C2,
                                           std::size_t budget, std::uint64_t seed,
                                           Tolerance tol = {}) {
    if (C1.orthant != C2.orthant) {
        throw std::invalid_argument("search_separator: orthant mismatch");
    }
    const std::size_t n = C1.dim();
    constexpr std::size_t kSearchSamples = 256;

    std::size_t tried = 0;
    auto accept = [&](const Vec& a) {
        ++tried;
        return verify_separator(a, C1, C2, kSearchSamples, seed, tol).separated;
    };

    // Axis candidates.
    for (std::size_t i = 0; i < n && tried < budget; ++i) {
        for (double s : {1.0, -1.0}) {
            if (tried >= budget) break;
            Vec a(n, 0.0);
            a[i] = s;
            if (accept(a)) return a;
        }
    }
    // Sign/magnitude grid: coefficients from {-4,-2,-1,-1/2,-1/4,0,...,4},
    // enumerated by odometer. Capped by the budget for larger dimensions.
    const std::vector<double> levels{0.0, 1.0, -1.0, 0.5, -0.5, 2.0, -2.0, 0.25, -0.25, 4.0, -4.0};
    std::vector<std::size_t> digits(n, 0);
    while (tried < budget) {
        std::size_t pos = 0;
        while (pos < n && ++digits[pos] == levels.size()) {
            digits[pos] = 0;
            ++pos;
        }
        if (pos == n) break;  // grid exhausted
        Vec a(n);
        bool all_zero = true;
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = levels[digits[i]];
            all_zero = all_zero && a[i] == 0.0;
        }
        if (all_zero) continue;
        if (accept(a)) return a;
    }
    // Random directions.
    SplitMix64 rng(seed ^ 0xd1ceULL);
    while (tried < budget) {
        Vec a(n);
        double norm = 0.0;
        for (double& v : a) {
            v = rng.next_in(-1.0, 1.0);
            norm = std::max(norm, std::abs(v));
        }
        if (norm == 0.0) continue;
        for (double& v : a) v /= norm;
        if (accept(a)) return a;
    }
    return std::nullopt;
}

}  // namespace bsharp

#endif
