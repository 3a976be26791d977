#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bsharp/vec.hpp"
#include "test_support.hpp"

using namespace bsharp;
using testgen::close;

TEST_CASE("vec_boxplus is componentwise") {
    CHECK(vec_boxplus(Vec{4, 2}, Vec{-2, -3}) == Vec{4, -3});
    const Vec x{1.5, -2.25, 0.0};
    CHECK(vec_boxplus(x, x) == x);
    CHECK(vec_boxplus(Vec{1, -1}, Vec{-1, 1}) == Vec{0, 0});
    CHECK_THROWS_AS(vec_boxplus(Vec{1}, Vec{1, 2}), std::invalid_argument);
}

TEST_CASE("vec_nary_boxplus: max on the positive orthant, min on the negative") {
    SplitMix64 rng(21);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng.next() % 4;
        const std::size_t m = 1 + rng.next() % 5;
        std::vector<Vec> pos, neg;
        for (std::size_t j = 0; j < m; ++j) {
            pos.push_back(testgen::rand_vec(rng, n, 0.0, 5.0));
            neg.push_back(testgen::rand_vec(rng, n, -5.0, 0.0));
        }
        const Vec join = vec_nary_boxplus(pos);
        const Vec meet = vec_nary_boxplus(neg);
        for (std::size_t k = 0; k < n; ++k) {
            double hi = pos[0][k], lo = neg[0][k];
            for (std::size_t j = 1; j < m; ++j) {
                hi = std::max(hi, pos[j][k]);
                lo = std::min(lo, neg[j][k]);
            }
            CHECK(join[k] == hi);
            CHECK(meet[k] == lo);
        }
    }
    const Vec single{3, -1, 2};
    CHECK(vec_nary_boxplus({single}) == single);
    CHECK_THROWS_AS(vec_nary_boxplus({}), std::invalid_argument);
}

TEST_CASE("boxdot and copositivity") {
    CHECK(boxdot(Vec{4, 2}, Vec{-2, -3}) == Vec{-8, -6});
    CHECK(boxdot(Vec{1, 7}, Vec{1, 1}) == Vec{1, 7});
    CHECK(boxdot(Vec{0, 5}, Vec{7, 0}) == Vec{0, 0});

    CHECK(is_copositive(Vec{4, 2}, Vec{3, 4}));
    CHECK_FALSE(is_copositive(Vec{4, 2}, Vec{-2, -3}));
    CHECK(is_copositive(Vec{0, 1}, Vec{-5, 2}));

    // copositive <=> some common orthant contains both
    SplitMix64 rng(22);
    for (int trial = 0; trial < 1000; ++trial) {
        const Vec x = testgen::rand_vec(rng, 3, -2.0, 2.0);
        const Vec y = testgen::rand_vec(rng, 3, -2.0, 2.0);
        const OrthantSign K = infer_orthant(x, y);
        CHECK(is_copositive(x, y) == (in_orthant(x, K) && in_orthant(y, K)));
    }
}

TEST_CASE("psi_K maps its orthant onto the positive orthant and is involutive") {
    CHECK(psi_K(Vec{-1, 2}, OrthantSign{-1, +1}) == Vec{1, 2});

    SplitMix64 rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng.next() % 5;
        OrthantSign K(n);
        for (int& s : K) s = (rng.next() & 1) ? +1 : -1;
        const Vec x = testgen::rand_vec(rng, n, -4.0, 4.0);
        CHECK(psi_K(psi_K(x, K), K) == x);

        Vec inside(n);
        for (std::size_t i = 0; i < n; ++i) inside[i] = static_cast<double>(K[i]) * std::abs(x[i]);
        CHECK(in_orthant(psi_K(inside, K), OrthantSign(n, +1)));
    }
}

TEST_CASE("semilattice order: componentwise magnitude comparison") {
    CHECK(semilattice_leq(Vec{1, -2}, Vec{-3, 2}));
    const Vec x{0.5, -0.25};
    CHECK(semilattice_leq(x, x));
    CHECK_FALSE(semilattice_leq(Vec{2, 0}, Vec{1, 5}));
}

TEST_CASE("semilattice order restricted to an orthant is a partial order") {
    SplitMix64 rng(24);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng.next() % 4;
        OrthantSign K(n);
        for (int& s : K) s = (rng.next() & 1) ? +1 : -1;
        auto draw = [&] {
            Vec v(n);
            for (std::size_t i = 0; i < n; ++i) {
                v[i] = static_cast<double>(K[i]) * rng.next_in(0.0, 3.0);
            }
            return v;
        };
        const Vec a = draw(), b = draw(), c = draw();
        CHECK(semilattice_leq(a, a));
        if (semilattice_leq(a, b) && semilattice_leq(b, a)) CHECK(a == b);
        if (semilattice_leq(a, b) && semilattice_leq(b, c)) CHECK(semilattice_leq(a, c));
    }
}

TEST_CASE("inner product: norm identity, bound, homogeneity") {
    CHECK(inner_product_infty(Vec{1, -2}, Vec{3, 1}) == 3.0);
    CHECK(inner_product_infty(Vec{2, -7, 1}, Vec{0, 0, 0}) == 0.0);

    SplitMix64 rng(25);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 1 + rng.next() % 5;
        const Vec x = testgen::rand_vec(rng, n, -6.0, 6.0);
        const Vec y = testgen::rand_vec(rng, n, -6.0, 6.0);

        CHECK(close(std::sqrt(inner_product_infty(x, x)), sup_norm(x), 1e-12));
        CHECK(std::abs(inner_product_infty(x, y)) <= sup_norm(x) * sup_norm(y) + 1e-12);

        const double alpha = rng.next_in(-3.0, 3.0);
        const double lhs = alpha * inner_product_infty(x, y);
        const double tol = 1e-12 * (1.0 + std::abs(lhs));
        CHECK(close(lhs, inner_product_infty(scale(x, alpha), y), tol));
        CHECK(close(lhs, inner_product_infty(x, scale(y, alpha)), tol));
    }
}

TEST_CASE("orthant fold identity: fold = Psi_K of the join of Psi_K images") {
    SplitMix64 rng(26);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng.next() % 4;
        const std::size_t m = 1 + rng.next() % 4;
        OrthantSign K(n);
        for (int& s : K) s = (rng.next() & 1) ? +1 : -1;
        std::vector<Vec> xs;
        for (std::size_t j = 0; j < m; ++j) {
            Vec v(n);
            for (std::size_t i = 0; i < n; ++i) {
                v[i] = static_cast<double>(K[i]) * rng.next_in(0.0, 4.0);
            }
            xs.push_back(v);
        }
        std::vector<Vec> mapped;
        for (const Vec& v : xs) mapped.push_back(psi_K(v, K));
        Vec join = mapped[0];
        for (std::size_t j = 1; j < m; ++j) {
            for (std::size_t i = 0; i < n; ++i) join[i] = std::max(join[i], mapped[j][i]);
        }
        CHECK(vec_nary_boxplus(xs) == psi_K(join, K));
    }
}
