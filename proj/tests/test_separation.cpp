#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bsharp/separation.hpp"
#include "test_support.hpp"

using namespace bsharp;
using testgen::close;

TEST_CASE("bform_eval: smile fold of the scaled coordinates") {
    CHECK(bform_eval(BForm(Vec{1, 1}), Vec{2, 3}) == 3.0);
    CHECK(bform_eval(BForm(Vec{1, -1}), Vec{2, 3}) == -3.0);
    CHECK(bform_eval(BForm(Vec{1, -1}), Vec{3, 3}) == -3.0);
    CHECK_THROWS_AS(bform_eval(BForm(Vec{1, 1}), Vec{1, 2, 3}), std::invalid_argument);

    // orthant-tracked evaluation: map into R_+^n first
    const BForm f(Vec{1, -1}, OrthantSign{-1, +1});
    CHECK(bform_eval(f, Vec{-2, 3}) == -3.0);
}

TEST_CASE("sublevel_check: direct and reformulated evaluations agree") {
    const BForm f_mixed(Vec{1, -1});
    CHECK(sublevel_check(f_mixed, Vec{2, 3}, 0.0));
    CHECK(sublevel_check(f_mixed, Vec{2, 3}, -1.0));   // f = -3 <= -1
    CHECK_FALSE(sublevel_check(BForm(Vec{1, 1}), Vec{2, 3}, -1.0));
    CHECK(sublevel_check(BForm(Vec{1, 1}), Vec{2, 3}, 5.0));

    SplitMix64 rng(61);
    for (int trial = 0; trial < 5000; ++trial) {
        const std::size_t n = 1 + rng.next() % 4;
        const BForm f(testgen::rand_vec(rng, n, -4.0, 4.0));
        const Vec x = testgen::rand_vec(rng, n, 0.0, 4.0);
        const double c = rng.next_in(-6.0, 6.0);
        CHECK_NOTHROW(sublevel_check(f, x, c));
        CHECK(sublevel_check(f, x, c) == (bform_eval(f, x) <= c));
    }
}

TEST_CASE("regularization_gap: zero off the tie set, positive on it") {
    CHECK(regularization_gap(Vec{1, -1}, Vec{2, 3}) == 0.0);
    CHECK(regularization_gap(Vec{1, -1}, Vec{3, 3}) == 3.0);
    CHECK(regularization_gap(Vec{2, 3}, Vec{1, 1}) == 0.0);

    SplitMix64 rng(62);
    for (int trial = 0; trial < 5000; ++trial) {
        const std::size_t n = 1 + rng.next() % 4;
        const Vec a = testgen::rand_vec(rng, n, -4.0, 4.0);
        const Vec x = testgen::rand_vec(rng, n, 0.0, 4.0);
        const double gap = regularization_gap(a, x);
        CHECK(gap >= 0.0);
        bool any_negative = false;
        for (double v : boxdot(a, x)) any_negative = any_negative || v < 0.0;
        if (!any_negative) CHECK(gap == 0.0);
    }
}

TEST_CASE("lower semicontinuity witness sequence") {
    // perturb the negative tie coordinate so its product strictly dominates
    const Vec a{1, -1};
    for (double k : {10.0, 100.0, 1000.0}) {
        const Vec xk{3.0, 3.0 + 1.0 / k};
        const double inner = inner_product_infty(a, xk);
        CHECK(close(inner, -3.0 - 1.0 / k, 1e-12));
    }
    // the limit is the B-form value, below the unperturbed inner product
    CHECK(inner_product_infty(a, Vec{3, 3}) == 0.0);
    CHECK(bform_eval(BForm(a), Vec{3, 3}) == -3.0);
}

TEST_CASE("verify_separator: singleton hulls and scaling") {
    const OrthantSign plus2{+1, +1};
    const GeneratedBSet C1({Vec{1, 1}}, plus2);
    const GeneratedBSet C2({Vec{3, 3}}, plus2);

    const auto check = verify_separator(Vec{1, 0}, C1, C2, 200, 0);
    CHECK(check.separated);
    CHECK(close(check.gap, 2.0, 1e-12));
    CHECK(close(check.sup_c1, 1.0, 1e-12));
    CHECK(close(check.inf_c2, 3.0, 1e-12));

    const auto same = verify_separator(Vec{1, 0}, C1, C1, 200, 0);
    CHECK_FALSE(same.separated);
    CHECK(same.gap <= 0.0);

    const auto scaled = verify_separator(Vec{4, 0}, C1, C2, 200, 0);
    CHECK(scaled.separated);
    CHECK(close(scaled.gap, 4.0 * check.gap, 1e-12));

    const GeneratedBSet other({Vec{-1, 1}}, OrthantSign{-1, +1});
    CHECK_THROWS_AS(verify_separator(Vec{1, 0}, C1, other, 10, 0), std::invalid_argument);
}

TEST_CASE("verify_separator: more samples never flip a comfortable verdict") {
    const OrthantSign plus2{+1, +1};
    const GeneratedBSet C1({Vec{1, 1}, Vec{2, 1}}, plus2);
    const GeneratedBSet C2({Vec{5, 4}, Vec{4, 6}}, plus2);
    const Vec a{1, 0};
    const auto base = verify_separator(a, C1, C2, 50, 9);
    CHECK(base.separated);
    for (std::size_t samples : {200, 1000, 5000}) {
        CHECK(verify_separator(a, C1, C2, samples, 9).separated);
    }
}

TEST_CASE("search_separator: finds disjoint boxes, gives up on overlap") {
    const OrthantSign plus2{+1, +1};
    const GeneratedBSet C1({Vec{1, 1}, Vec{2, 1}}, plus2);
    const GeneratedBSet C2({Vec{5, 4}, Vec{4, 6}}, plus2);

    const auto a = search_separator(C1, C2, 1000, 0);
    REQUIRE(a.has_value());
    const auto replay = verify_separator(*a, C1, C2, 1000, 0);
    CHECK(replay.separated);
    CHECK(replay.gap > 0.0);

    // shared generator: no functional can separate
    const GeneratedBSet D1({Vec{1, 1}, Vec{2, 3}}, plus2);
    const GeneratedBSet D2({Vec{2, 3}, Vec{4, 1}}, plus2);
    CHECK_FALSE(search_separator(D1, D2, 300, 0).has_value());

    // deterministic under the seed
    const auto again = search_separator(C1, C2, 1000, 0);
    REQUIRE(again.has_value());
    CHECK(*again == *a);
}

TEST_CASE("GeneratedBSet validates its generators") {
    CHECK_THROWS_AS(GeneratedBSet({Vec{1, -1}}, OrthantSign{+1, +1}), std::invalid_argument);
    CHECK_THROWS_AS(GeneratedBSet({}, OrthantSign{+1}), std::invalid_argument);
    CHECK_THROWS_AS(GeneratedBSet({Vec{1, 1, 1}}, OrthantSign{+1, +1}), std::invalid_argument);
    CHECK_NOTHROW(GeneratedBSet({Vec{0, 1}}, OrthantSign{-1, +1}));
}
