#include <doctest.h>

#include "msim/error.hpp"
#include "msim/misiurewicz.hpp"
#include "support.hpp"

using namespace msim;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an msim::Error");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("solve_misiurewicz finds the tip of the Mandelbrot set") {
    const auto d = solve_misiurewicz(1, 1, -1.9);
    CHECK(std::abs(d.c0 - Complex(-2.0)) <= 1e-13);
    CHECK(std::abs(d.a0 - Complex(2.0)) <= 1e-12);
    CHECK(std::abs(d.lambda0 - Complex(4.0)) <= 1e-12);
    CHECK(d.residual <= 1e-13);
}

TEST_CASE("solve_misiurewicz finds c = i with a period-2 landing cycle") {
    const auto d = solve_misiurewicz(1, 2, {0.1, 0.9});
    CHECK(std::abs(d.c0 - Complex(0, 1)) <= 1e-13);
    CHECK(std::abs(d.a0 - Complex(-1, 1)) <= 1e-12);
    CHECK(std::abs(d.lambda0 - Complex(4, 4)) <= 1e-11);
}

TEST_CASE("superattracting root is rejected as not repelling") {
    CHECK(kind_of([] { solve_misiurewicz(1, 1, 0.05); }) == ErrorKind::NotRepelling);
}

TEST_CASE("non-minimal representations are rejected") {
    // c = -2 lands on its fixed point after one step, so (2, 1) and (1, 2) also hold
    CHECK(kind_of([] { solve_misiurewicz(2, 1, -1.99); }) == ErrorKind::NotMinimal);
    CHECK(kind_of([] { solve_misiurewicz(1, 2, -1.99); }) == ErrorKind::NotMinimal);
}

TEST_CASE("invalid orders are rejected") {
    CHECK(kind_of([] { solve_misiurewicz(0, 1, -2.0); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { solve_misiurewicz(1, 0, -2.0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("Newton gives up on a hopeless budget") {
    NewtonOptions opts;
    opts.max_iter = 1;
    CHECK(kind_of([&] { solve_misiurewicz(3, 2, {0.3, 0.7}, opts); }) == ErrorKind::NoConvergence);
}

TEST_CASE("certified data satisfies its invariants") {
    const Complex seeds[] = {{-2.0, 0.0}, {0.0, 1.0}, {-1.5436890126920764, 0.0}, {-0.10109636384562, 0.95628651080914}};
    for (Complex seed : seeds) {
        const auto d = certify_near(seed, {.l_max = 6, .p_max = 4, .max_seed_distance = 1e-2});
        CAPTURE(seed);
        CHECK(relation_residual(d.c0, d.l, d.p) <= 10 * NewtonOptions{}.tol);
        CHECK(std::abs(d.lambda0) > 1.0);
        CHECK(multiplier(d.c0, d.a0, d.p) == d.lambda0);
        for (int l = 1; l <= d.l; ++l) {
            for (int p = 1; p <= d.p; ++p) {
                if (d.p % p != 0 || (l == d.l && p == d.p)) continue;
                CHECK(relation_residual(d.c0, l, p) >= NewtonOptions{}.minimality_tol);
            }
        }
    }
}

TEST_CASE("seed perturbations of 1e-3 reconverge to the same root") {
    testing::Sampler s(17);
    const auto ref = solve_misiurewicz(1, 2, {0, 1});
    for (int t = 0; t < 20; ++t) {
        const auto d = solve_misiurewicz(1, 2, Complex(0, 1) + 1e-3 * std::polar(1.0, s.uniform(0, 6.283)));
        CHECK(std::abs(d.c0 - ref.c0) <= 1e-13);
    }
}

TEST_CASE("track_periodic_point examples") {
    CHECK(track_periodic_point(-2.0, 2.0, 1) == Complex(2.0));
    const Complex c = -2.0 + 1e-4;
    const Complex oracle = (1.0 + std::sqrt(1.0 - 4.0 * c)) / 2.0;
    CHECK(std::abs(track_periodic_point(c, 2.0, 1) - oracle) <= 1e-13);
    CHECK(std::abs(track_periodic_point({0, 1}, {-1, 1}, 2) - Complex(-1, 1)) <= 1e-14);
}

TEST_CASE("track_periodic_point follows the fixed point along a path") {
    Complex a = 2.0;
    for (int s = 1; s <= 100; ++s) {
        const Complex c = Complex(-2.0, 0.0) + 0.002 * s * Complex(0.6, 0.8);
        a = track_periodic_point(c, a, 1);
        const Complex oracle = (1.0 + std::sqrt(1.0 - 4.0 * c)) / 2.0;
        CHECK(std::abs(a - oracle) <= 1e-12);
    }
}

TEST_CASE("track_periodic_point reports a jump to another branch") {
    // seeded just right of the critical point of z^2 - z - 2, the first Newton step overshoots
    CHECK(kind_of([] { track_periodic_point(-2.0, 0.6, 1); }) == ErrorKind::BasinJump);
}

TEST_CASE("da/dc at the tip matches -1/(2a-1) by finite differences") {
    const double h = 1e-6;
    const Complex fd = (track_periodic_point(-2.0 + h, 2.0, 1) - track_periodic_point(-2.0 - h, 2.0, 1)) / (2 * h);
    CHECK(std::abs(fd - Complex(-1.0 / 3.0)) <= 1e-5);
}

TEST_CASE("multiplier examples") {
    CHECK(multiplier(-2.0, 2.0, 1) == Complex(4.0));
    CHECK(multiplier(0.0, 0.0, 1) == Complex(0.0));
    CHECK(multiplier({0, 1}, {-1, 1}, 2) == Complex(4, 4));
}

TEST_CASE("figure centers certify with the reported orders") {
    struct Case {
        Complex seed;
        int l, p;
    };
    const Case cases[] = {
        {{-1.4303576324513074, 0.0}, 4, 2},
        {{0.0, 1.0}, 1, 2},
    };
    for (const auto& cs : cases) {
        const auto d = certify_near(cs.seed);
        CHECK(d.l == cs.l);
        CHECK(d.p == cs.p);
        CHECK(std::abs(d.c0 - cs.seed) <= 1e-12);
    }
}
