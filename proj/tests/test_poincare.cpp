#include <doctest.h>

#include <vector>

#include "msim/error.hpp"
#include "msim/poincare.hpp"
#include "support.hpp"

using namespace msim;

namespace {

const RescaleData& tip() {
    static const RescaleData d = compute_Q(solve_misiurewicz(1, 1, -2.0));
    return d;
}

const RescaleData& at_i() {
    static const RescaleData d = compute_Q(solve_misiurewicz(1, 2, {0, 1}));
    return d;
}

// f(z) = z^2 - 2 is conjugate to the doubling map of cosh, so phi(w) = 2 cosh(sqrt(w)).
Complex tip_phi(Complex w) { return 2.0 * std::cosh(std::sqrt(w)); }

double sup_phik_minus_phi(const RescaleData& d, int k, double radius, int n) {
    const auto ev = make_evaluator(d.base);
    double worst = 0.0;
    for (Complex w : disk_grid(radius, n)) worst = std::max(worst, std::abs(phi_k(d, k, w) - phi(ev, w)));
    return worst;
}

}  // namespace

TEST_CASE("phi is normalised at the origin") {
    const auto ev_i = make_evaluator(at_i().base);
    CHECK(std::abs(phi(ev_i, 0.0) - Complex(-1, 1)) <= 1e-14);
    const double h = 1e-6;
    const Complex slope = testing::central_difference([&](Complex w) { return phi(ev_i, w); }, 0.0, h);
    CHECK(std::abs(slope - Complex(1.0)) <= 1e-6);
    CHECK(phi(make_evaluator(tip().base), 0.0) == Complex(2.0));
}

TEST_CASE("phi at the tip matches the closed form") {
    const auto ev = make_evaluator(tip().base);
    testing::Sampler s(41);
    for (int t = 0; t < 100; ++t) {
        const Complex w = s.in_disk(3.0);
        CHECK(std::abs(phi(ev, w) - tip_phi(w)) <= 1e-9);
    }
}

TEST_CASE("functional equation residuals") {
    const auto ev_i = make_evaluator(at_i().base);
    CHECK(functional_equation_residual(ev_i, 0.0) <= 1e-12);
    testing::Sampler s(43);
    for (int t = 0; t < 100; ++t) CHECK(functional_equation_residual(ev_i, s.in_disk(1.0)) < 1e-8);
    CHECK(functional_equation_residual(make_evaluator(tip().base), 0.3) < 1e-8);
}

TEST_CASE("functional equation holds on polar grids for several certified parameters") {
    const Complex seeds[] = {{-2, 0}, {0, 1}, {-1.4303576324513074, 0}, {-1.5436890126920764, 0},
                             {-0.10109636384562, 0.95628651080914}};
    for (Complex seed : seeds) {
        const auto ev = make_evaluator(certify_near(seed, {.max_seed_distance = 1e-2}));
        const auto grid = polar_grid(1.0, 10, 10);
        REQUIRE(grid.size() == 100);
        double worst = 0.0, worst_scaled = 0.0;
        for (Complex w : grid) {
            const double res = functional_equation_residual(ev, w);
            worst = std::max(worst, res);
            worst_scaled = std::max(worst_scaled, res / std::max(1.0, std::abs(apply_return_map(ev, phi(ev, w)))));
        }
        CAPTURE(seed);
        CAPTURE(worst);
        CHECK(worst_scaled < 1e-8);
    }
}

TEST_CASE("phi rejects points beyond r_max and runaway iteration") {
    auto ev = make_evaluator(at_i().base);
    CHECK_THROWS_AS(phi(ev, 2e3), Error);
    ev.n_cap = 2;
    try {
        phi(ev, 0.5);
        FAIL("expected NoConvergence");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoConvergence);
    }
}

TEST_CASE("Cauchy increments contract at the expected rate") {
    for (const RescaleData* d : {&tip(), &at_i()}) {
        const auto ev = make_evaluator(d->base);
        for (Complex w : polar_grid(1.0, 4, 8)) {
            const auto t = phi_trace(ev, w);
            CHECK(t.increments.size() > 4);
            CHECK(cauchy_rate_ok(t, d->base.lambda0));
        }
    }
}

TEST_CASE("phi_k and Phi_k pass through a0 at w = 0") {
    for (const RescaleData* d : {&tip(), &at_i()}) {
        for (int k = 0; k <= 12; ++k) {
            CHECK(std::abs(phi_k(*d, k, 0.0) - d->base.a0) <= 1e-12);
            CHECK(std::abs(Phi_k(*d, k, 0.0) - d->base.a0) <= 1e-12);
        }
    }
}

TEST_CASE("phi_k approaches phi") {
    const auto ev = make_evaluator(tip().base);
    const Complex target = phi(ev, 1.0);
    CHECK(std::abs(phi_k(tip(), 3, 1.0) - target) > std::abs(phi_k(tip(), 6, 1.0) - target));
    CHECK(sup_phik_minus_phi(at_i(), 10, 2.0, 33) < 1e-3);
}

TEST_CASE("Phi_k approaches phi") {
    const auto ev = make_evaluator(tip().base);
    CHECK(std::abs(Phi_k(tip(), 10, 0.5) - phi(ev, 0.5)) < 1e-2);
    const auto ev_i = make_evaluator(at_i().base);
    auto sup = [&](int k) {
        double worst = 0.0;
        for (Complex w : disk_grid(1.0, 33)) worst = std::max(worst, std::abs(Phi_k(at_i(), k, w) - phi(ev_i, w)));
        return worst;
    };
    CHECK(sup(14) < sup(8));
}

TEST_CASE("perturbative and direct evaluations agree at shallow depth") {
    testing::Sampler s(47);
    for (const RescaleData* d : {&tip(), &at_i()}) {
        for (int k = 0; k <= 4; ++k) {
            const Complex w = s.in_disk(1.0);
            CHECK(std::abs(phi_k(*d, k, w) - phi_k_direct(*d, k, w)) <= 1e-9);
            CHECK(std::abs(Phi_k(*d, k, w) - Phi_k_direct(*d, k, w)) <= 1e-9);
        }
    }
}

TEST_CASE("convergence table contracts over k = 5..15") {
    for (const RescaleData* d : {&tip(), &at_i()}) {
        const auto rows = lemma_convergence(*d, 5, 15);
        std::vector<double> a, b;
        for (const auto& r : rows) {
            a.push_back(r.sup_phik_phi);
            b.push_back(r.sup_Phik_phi);
        }
        const double bound = contraction_bound(d->base.lambda0);
        CHECK(contracts(a, bound));
        CHECK(contracts(b, bound));
    }
}

TEST_CASE("a 10 percent error in Q breaks the contraction") {
    for (const RescaleData* d : {&tip(), &at_i()}) {
        RescaleData wrong = *d;
        wrong.Q *= 1.1;
        const auto rows = lemma_convergence(wrong, 5, 12);
        std::vector<double> b;
        for (const auto& r : rows) b.push_back(r.sup_Phik_phi);
        CHECK_FALSE(contracts(b, contraction_bound(d->base.lambda0)));
    }
}

TEST_CASE("contracts and cauchy_rate_ok on hand-made sequences") {
    const std::vector<double> fast = {1.0, 0.3, 0.08, 0.02};
    const std::vector<double> slow = {1.0, 0.95, 0.9};
    const std::vector<double> flat = {1.0, 1.0};
    CHECK(contracts(fast, 0.5));
    CHECK_FALSE(contracts(slow, 0.5));
    CHECK_FALSE(contracts(flat, 1.0));
    PhiTrace t;
    t.increments = {1, 1, 1, 1, 0.4, 0.1};
    CHECK(cauchy_rate_ok(t, 4.0));
    t.increments.push_back(0.09);
    CHECK_FALSE(cauchy_rate_ok(t, 4.0));
}

TEST_CASE("disk and polar grids") {
    const auto g = disk_grid(1.0, 33);
    CHECK(g.size() > 780);
    for (Complex w : g) CHECK(std::abs(w) <= 1.0);
    CHECK(disk_grid(1.0, 1).size() == 1);
    const auto p = polar_grid(2.0, 3, 5);
    CHECK(p.size() == 15);
    CHECK(std::abs(p.back()) == doctest::Approx(2.0));
}
