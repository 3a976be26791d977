#ifndef BSHARP_HULL_HPP
#define BSHARP_HULL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bsharp/algebra.hpp"
#include "bsharp/sampling.hpp"
#include "bsharp/vec.hpp"

// Two-point limit hulls Co^∞(x,y): the gamma map, intermediate points and
// sequences, the piecewise decomposition into copositive segments,
// membership tests, and a continuous path over the hull.

namespace bsharp {

/// Extended nonnegative real for the hull parameter t in [0, +∞].
/// +∞ is a tag, never a float infinity fed into ⊞ arithmetic.
struct ExtReal {
    double value = 0.0;
    bool infinite = false;

    ExtReal() = default;
    ExtReal(double v) : value(v) {}  // NOLINT: implicit by design
    static ExtReal inf() {
        ExtReal t;
        t.infinite = true;
        return t;
    }
};

inline bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
}

/// I(x,y) = { i : x_i y_i < 0 }, the coordinates with strictly opposite
/// signs. Tested on signs, not on the product, so tiny entries cannot
/// underflow their way out of the set.
inline IndexSet sign_conflict_set(const Vec& x, const Vec& y) {
    detail::require_same_dim(x, y, "sign_conflict_set");
    IndexSet I;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if ((x[i] > 0.0 && y[i] < 0.0) || (x[i] < 0.0 && y[i] > 0.0)) I.push_back(i);
    }
    return I;
}

/// γ(x,y,t) = (max{1,t})^{-1} (x ⊞ t y), with γ(x,y,+∞) = y.
inline Vec gamma(const Vec& x, const Vec& y, ExtReal t, Tolerance tol = {}) {
    detail::require_same_dim(x, y, "gamma");
    if (t.infinite) return y;
    if (!(t.value >= 0.0)) throw std::invalid_argument("gamma: t must be in [0, +inf]");
    const double tv = t.value;
    const double inv = 1.0 / std::max(1.0, tv);
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = inv * boxplus(x[i], tv * y[i], tol);
    }
    return out;
}

struct BreakPoint {
    ExtReal t;                                // 0, a positive real, or +∞
    std::optional<std::size_t> source_index;  // set for interior breakpoints
    Vec point;                                // γ(x, y, t)
};

/// Sorted breakpoints of Θ(x,y) from t = 0 (point x) to t = +∞ (point y).
/// Consecutive points are copositive.
struct IntermediateSequence {
    std::vector<BreakPoint> breakpoints;
};

namespace detail {

// Interior breakpoint at t* = |x_i / y_i| for the group of coordinates
// `sources` (several coordinates can vanish at the same t*). Evaluated as
// (|y_i| x ⊞ |x_i| y) / max{|x_i|, |y_i|} rather than through t* itself:
// at coordinate i the two magnitudes |y_i|·|x_i| and |x_i|·|y_i| are equal
// as floating-point products, so the tie branch cancels them to an exact
// zero, whereas x_i ⊞ fl(t*) y_i would round the tie away entirely.
inline Vec intermediate_point(const Vec& x, const Vec& y, std::size_t rep,
                              const std::vector<std::size_t>& sources, Tolerance tol) {
    const double ax = std::abs(x[rep]);
    const double ay = std::abs(y[rep]);
    const double m = std::max(ax, ay);
    Vec out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (std::find(sources.begin(), sources.end(), j) != sources.end()) {
            out[j] = 0.0;
        } else {
            out[j] = boxplus(ay * x[j], ax * y[j], tol) / m;
        }
    }
    return out;
}

}  // namespace detail

/// Builds the intermediate sequence: breakpoint parameters t_i* = -x_i/y_i
/// for i in I(x,y), sorted ascending with equal values (within tie_eps)
/// merged into one breakpoint, framed by t = 0 (point x) and t = +∞
/// (point y). Consecutive points are verified copositive.
inline IntermediateSequence intermediate_sequence(const Vec& x, const Vec& y, Tolerance tol = {}) {
    detail::require_same_dim(x, y, "intermediate_sequence");
    detail::require_all_finite(x, "intermediate_sequence");
    detail::require_all_finite(y, "intermediate_sequence");

    std::vector<std::pair<double, std::size_t>> roots;
    for (std::size_t i : sign_conflict_set(x, y)) {
        roots.emplace_back(-x[i] / y[i], i);
    }
    std::sort(roots.begin(), roots.end());

    IntermediateSequence seq;
    seq.breakpoints.push_back(BreakPoint{ExtReal(0.0), std::nullopt, x});
    std::size_t k = 0;
    while (k < roots.size()) {
        std::vector<std::size_t> sources{roots[k].second};
        const double t_star = roots[k].first;
        std::size_t j = k + 1;
        while (j < roots.size() && roots[j].first - t_star <= tol.tie_eps) {
            sources.push_back(roots[j].second);
            ++j;
        }
        seq.breakpoints.push_back(BreakPoint{
            ExtReal(t_star), roots[k].second,
            detail::intermediate_point(x, y, roots[k].second, sources, tol)});
        k = j;
    }
    seq.breakpoints.push_back(BreakPoint{ExtReal::inf(), std::nullopt, y});

    for (std::size_t m = 0; m + 1 < seq.breakpoints.size(); ++m) {
        if (!is_copositive(seq.breakpoints[m].point, seq.breakpoints[m + 1].point)) {
            throw invariant_violation("intermediate_sequence: consecutive breakpoints not copositive");
        }
    }
    return seq;
}

/// Co^∞(x,y) as an ordered chain of copositive segments; segment m runs
/// from breakpoint m to breakpoint m+1.
struct PiecewiseHull {
    Vec x;
    Vec y;
    IntermediateSequence sequence;

    std::size_t segment_count() const { return sequence.breakpoints.size() - 1; }
    const Vec& segment_start(std::size_t m) const { return sequence.breakpoints[m].point; }
    const Vec& segment_end(std::size_t m) const { return sequence.breakpoints[m + 1].point; }
};

inline PiecewiseHull co_infinity(const Vec& x, const Vec& y, Tolerance tol = {}) {
    return PiecewiseHull{x, y, intermediate_sequence(x, y, tol)};
}

namespace detail {

inline double membership_atol(double z_i, Tolerance tol) {
    return tol.tie_eps + 1e-12 * std::max(1.0, std::abs(z_i));
}

}  // namespace detail

/// Membership of z in the segment hull ℬ[u,v] of a copositive pair:
/// z = (t u) ⊞ (s v) for some t, s in [0,1] with max{t,s} = 1. After the
/// Ψ_K map everything is nonnegative and ⊞ is the coordinatewise max, so
/// for each of the two cases (t = 1, s = 1) the free parameter is pinned
/// by a coordinate ratio; each candidate gets verified componentwise.
inline bool segment_membership(const Vec& z, const Vec& u, const Vec& v, Tolerance tol = {}) {
    detail::require_same_dim(z, u, "segment_membership");
    detail::require_same_dim(u, v, "segment_membership");
    if (!is_copositive(u, v)) {
        throw std::invalid_argument("segment_membership: endpoints not copositive");
    }
    const OrthantSign K = infer_orthant(u, v);
    const Vec up = psi_K(u, K), vp = psi_K(v, K), zp = psi_K(z, K);

    auto matches = [&](const Vec& fixed, const Vec& scaled, double s) {
        for (std::size_t i = 0; i < zp.size(); ++i) {
            const double recon = std::max(fixed[i], s * scaled[i]);
            if (std::abs(recon - zp[i]) > detail::membership_atol(zp[i], tol)) return false;
        }
        return true;
    };
    auto try_side = [&](const Vec& fixed, const Vec& scaled) {
        if (matches(fixed, scaled, 0.0) || matches(fixed, scaled, 1.0)) return true;
        for (std::size_t i = 0; i < zp.size(); ++i) {
            if (scaled[i] <= 0.0) continue;  // no candidate from a vanishing coordinate
            const double s = zp[i] / scaled[i];
            if (s < 0.0 || s > 1.0 + 1e-9) continue;
            if (matches(fixed, scaled, std::min(s, 1.0))) return true;
        }
        return false;
    };
    return try_side(up, vp) || try_side(vp, up);
}

/// z belongs to the hull iff some segment contains it.
inline bool hull_membership(const Vec& z, const PiecewiseHull& hull, Tolerance tol = {}) {
    for (std::size_t m = 0; m < hull.segment_count(); ++m) {
        if (segment_membership(z, hull.segment_start(m), hull.segment_end(m), tol)) return true;
    }
    return false;
}

namespace detail {

// 4-ary fold of (T u_k, R u_k, S v_k, W v_k) with tie detection scaled to
// the coordinate. Candidate parameters come from rounded ratios, so
// cancellations must be recognized within a few ulps.
inline double four_fold(double a, double b, double c, double d, double eps) {
    Vec entries{a, b, c, d};
    return nary_boxplus(entries, Tolerance{eps});
}

inline void push_unique(std::vector<double>& vals, double v) {
    for (double w : vals) {
        if (std::abs(w - v) <= 1e-15 * std::max(1.0, std::abs(v))) return;
    }
    vals.push_back(v);
}

// Search for parameters (1, R, S, W), R <= 1, W <= S <= 1, such that
// z_k = fold(u_k, R u_k, S v_k, W v_k) for all k. Candidates for S are the
// visible ratios |z_k / v_k| plus the cancellation ratios |u_k / v_k| on
// sign-conflict coordinates; R and W likewise, extended with pairwise
// cancellation partners. A coarse S-grid backs the candidate phase up.
inline bool four_term_unit_side(const Vec& z, const Vec& u, const Vec& v, Tolerance tol,
                                int grid) {
    const std::size_t n = z.size();
    const IndexSet conflicts = sign_conflict_set(u, v);

    auto verify = [&](double r, double s, double w) {
        for (std::size_t k = 0; k < n; ++k) {
            const double scale = std::max({1.0, std::abs(u[k]), std::abs(v[k])});
            const double eps = tol.tie_eps + 1e-12 * scale;
            const double f = four_fold(u[k], r * u[k], s * v[k], w * v[k], eps);
            if (std::abs(f - z[k]) > tol.tie_eps + 1e-11 * std::max(1.0, std::abs(z[k]))) {
                return false;
            }
        }
        return true;
    };

    std::vector<double> s_cands{0.0, 1.0};
    for (std::size_t k = 0; k < n; ++k) {
        if (v[k] != 0.0) {
            const double r = std::abs(z[k] / v[k]);
            if (r <= 1.0 + 1e-9) push_unique(s_cands, std::min(r, 1.0));
        }
    }
    for (std::size_t k : conflicts) {
        const double r = std::abs(u[k] / v[k]);
        if (r <= 1.0 + 1e-9) push_unique(s_cands, std::min(r, 1.0));
    }

    auto try_s = [&](double s) {
        std::vector<double> r_cands{0.0, 1.0};
        for (std::size_t k = 0; k < n; ++k) {
            if (u[k] != 0.0) {
                const double r = std::abs(z[k] / u[k]);
                if (r <= 1.0 + 1e-9) push_unique(r_cands, std::min(r, 1.0));
            }
        }
        std::vector<double> w_cands{0.0, s};
        for (std::size_t k = 0; k < n; ++k) {
            if (v[k] != 0.0) {
                const double w = std::abs(z[k] / v[k]);
                if (w <= s + 1e-9) push_unique(w_cands, std::min(w, s));
            }
        }
        for (double r : r_cands) {
            for (double w : w_cands) {
                if (verify(r, s, w)) return true;
            }
            // cancellation partners: W chosen so that R u_k and W v_k tie
            for (std::size_t k : conflicts) {
                const double w = r * std::abs(u[k] / v[k]);
                if (w <= s + 1e-9 && verify(r, s, std::min(w, s))) return true;
            }
        }
        for (double w : w_cands) {
            for (std::size_t k : conflicts) {
                const double r = w * std::abs(v[k] / u[k]);
                if (r <= 1.0 + 1e-9 && verify(std::min(r, 1.0), s, w)) return true;
            }
        }
        return false;
    };

    for (double s : s_cands) {
        if (try_s(s)) return true;
    }
    for (int g = 1; g + 1 < grid; ++g) {
        if (try_s(static_cast<double>(g) / (grid - 1))) return true;
    }
    return false;
}

}  // namespace detail

/// Membership in the four-term combination set
/// { t x ⊞ r x ⊞ s y ⊞ w y : max{t,r,s,w} = 1, t,r,s,w >= 0 }, which
/// coincides with Co^∞(x,y). Decided independently of the segment
/// decomposition: a candidate-ratio search with a grid fallback, sound
/// for true instances at desk scale.
inline bool four_term_membership(const Vec& z, const Vec& x, const Vec& y, Tolerance tol = {},
                                 int grid = 200) {
    detail::require_same_dim(z, x, "four_term_membership");
    detail::require_same_dim(x, y, "four_term_membership");
    const std::size_t n = z.size();

    // Necessary conditions: every fold value is bounded by the larger input
    // magnitude, and a coordinate with both inputs on one side of zero can
    // only fold to that side.
    for (std::size_t k = 0; k < n; ++k) {
        const double atol = tol.tie_eps + 1e-11 * std::max(1.0, std::abs(z[k]));
        if (std::abs(z[k]) > std::max(std::abs(x[k]), std::abs(y[k])) + atol) return false;
        if (x[k] >= 0.0 && y[k] >= 0.0 && z[k] < -atol) return false;
        if (x[k] <= 0.0 && y[k] <= 0.0 && z[k] > atol) return false;
    }
    return detail::four_term_unit_side(z, x, y, tol, grid) ||
           detail::four_term_unit_side(z, y, x, tol, grid);
}

/// Seeded sample of the m-point combination set
/// { ⊞ t_i x_i : t in [0,1]^m, max t_i = 1 }: draw t, renormalize so the
/// max is exactly 1, fold the scaled family.
inline std::vector<Vec> combination_set_sample(const std::vector<Vec>& xs, std::size_t count,
                                               std::uint64_t seed, Tolerance tol = {}) {
    if (xs.empty()) throw std::invalid_argument("combination_set_sample: empty generator list");
    SplitMix64 rng(seed);
    std::vector<Vec> out;
    out.reserve(count);
    std::vector<double> t(xs.size());
    std::vector<Vec> scaled(xs.size());
    for (std::size_t c = 0; c < count; ++c) {
        double m = 0.0;
        for (double& ti : t) {
            ti = rng.next_double();
            m = std::max(m, ti);
        }
        for (double& ti : t) ti = (m > 0.0) ? ti / m : 1.0;
        for (std::size_t j = 0; j < xs.size(); ++j) scaled[j] = scale(xs[j], t[j]);
        out.push_back(vec_nary_boxplus(scaled, tol));
    }
    return out;
}

/// Continuous surjective parametrization of Co^∞(x,y): [0,1] is split into
/// one equal subinterval per segment, and within segment m the local
/// parameter σ is sent through σ/(1-σ) into the segment's own γ map
/// (γ over the segment endpoints, which are copositive, is continuous;
/// the global γ(x,y,·) jumps at interior breakpoints and only covers part
/// of the hull). path_eval(x,y,0) = x and path_eval(x,y,1) = y.
inline Vec path_eval(const Vec& x, const Vec& y, double s, Tolerance tol = {}) {
    if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("path_eval: s must be in [0,1]");
    const IntermediateSequence seq = intermediate_sequence(x, y, tol);
    const std::size_t segments = seq.breakpoints.size() - 1;
    if (s >= 1.0) return seq.breakpoints.back().point;
    const double pos = s * static_cast<double>(segments);
    std::size_t idx = static_cast<std::size_t>(pos);
    if (idx >= segments) idx = segments - 1;
    const double sigma = pos - static_cast<double>(idx);
    const Vec& u = seq.breakpoints[idx].point;
    const Vec& v = seq.breakpoints[idx + 1].point;
    if (sigma <= 0.0) return u;
    return gamma(u, v, ExtReal(sigma / (1.0 - sigma)), tol);
}

}  // namespace bsharp

#endif
