#include <doctest.h>

#include <vector>

#include "msim/error.hpp"
#include "msim/tricorn.hpp"
#include "support.hpp"

using namespace msim;

namespace {

const Complex kComplexCenter{-1.2222454262925588, 0.18411010266019595};
const Complex kRealCenter{-1.4303576324513074, 0.0};

const TricornData& complex_center() {
    static const TricornData d = certify_tricorn_near(kComplexCenter);
    return d;
}

const TricornData& real_center() {
    static const TricornData d = certify_tricorn_near(kRealCenter);
    return d;
}

Jacobian2 jacobian_of(Complex B0, Complex B0p) {
    // u = B0 c + B0' conj(c) evaluated at c = 1 and c = i gives the Jacobian columns
    const Complex ux = B0 + B0p;
    const Complex uy = Complex(0, 1) * (B0 - B0p);
    return {ux.real(), uy.real(), ux.imag(), uy.imag()};
}

}  // namespace

TEST_CASE("biquadratic is the second iterate of g") {
    CHECK(biquadratic(0.0, 0.0, 5) == Complex(0.0));
    testing::Sampler s(61);
    for (int t = 0; t < 100; ++t) {
        const Complex c = s.in_disk(1.0);
        const Complex z = s.in_disk(1.0);
        const int n = s.integer(0, 6);
        const Complex want = iterate_g(c, z, 2 * n);
        if (!is_finite(want)) continue;
        CHECK(std::abs(biquadratic(c, z, n) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
        const double cr = s.uniform(-2.0, 0.25);
        const double zr = s.uniform(-1.0, 1.0);
        CHECK(std::abs(biquadratic(cr, zr, n) - iterate_f(cr, zr, 2 * n)) <= 1e-12);
    }
}

TEST_CASE("biquadratic_derivative agrees with finite differences") {
    testing::Sampler s(62);
    for (int t = 0; t < 50; ++t) {
        const Complex c = s.in_disk(0.6);
        const Complex z = s.in_disk(0.6);
        const int n = s.integer(1, 4);
        const Complex fd = testing::central_difference([&](Complex w) { return biquadratic(c, w, n); }, z, 1e-6);
        const Complex dz = biquadratic_derivative(c, z, n);
        CHECK(std::abs(dz - fd) <= 1e-5 * std::max(1.0, std::abs(dz)));
    }
}

TEST_CASE("the complex tricorn center certifies as a tricorn Misiurewicz parameter") {
    const auto& d = complex_center();
    CHECK(d.l == 1);
    CHECK(d.p == 3);
    CHECK(std::abs(d.c0 - kComplexCenter) <= 1e-12);
    CHECK(tricorn_relation_residual(d.c0, d.l, d.p) <= 1e-12);
    CHECK(std::abs(d.lambda0) > 1.0);
    // frozen from the finite-difference pipeline
    CHECK(std::abs(d.a0 - Complex(-1.5678901661366118, -0.11742538261710989)) <= 1e-9);
    CHECK(std::abs(d.lambda0 - Complex(110.87100498347284, 0.0)) <= 1e-7);
    CHECK(std::abs(d.A0 - Complex(-0.6952907775509742, 3.275506604334832)) <= 1e-9);
    CHECK(std::abs(d.B0 - Complex(0.19357795542564654, 3.2745628798903166)) <= 1e-6);
    CHECK(std::abs(d.B0p - Complex(0.1469615258842053, -1.1609373542322075)) <= 1e-6);
    CHECK(std::abs(std::abs(d.Q) - std::abs(d.Qp)) > 1e-6);
}

TEST_CASE("the real tricorn center certifies as a real tricorn parameter") {
    const auto& d = real_center();
    CHECK(d.c0.imag() == 0.0);
    CHECK(d.l == 4);
    CHECK(d.p == 2);
    CHECK(std::abs(d.c0 - kRealCenter) <= 1e-12);
}

TEST_CASE("the tip is the same Misiurewicz parameter for both families") {
    const auto t = solve_tricorn_misiurewicz(1, 1, -1.99);
    CHECK(std::abs(t.c0 - Complex(-2.0)) <= 1e-13);
    CHECK(std::abs(t.a0 - Complex(2.0)) <= 1e-12);
    CHECK(std::abs(t.lambda0 - Complex(16.0)) <= 1e-10);  // multiplier of g^2 = f^2 at 2
    CHECK(std::abs(t.A0 - Complex(-16.0)) <= 1e-10);      // (f^2)'(-2) = 4 * (-4)
    // along the real axis u(c) is the quadratic b(c) - a(c) with b = f_c^2(c): -11 + 1/3
    CHECK(std::abs((t.B0 + t.B0p) - Complex(-32.0 / 3.0)) <= 1e-6);
}

TEST_CASE("invalid and non-repelling tricorn requests") {
    CHECK_THROWS_AS(solve_tricorn_misiurewicz(0, 1, -2.0), Error);
    try {
        solve_tricorn_misiurewicz(1, 1, 0.02);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK((e.kind() == ErrorKind::NotRepelling || e.kind() == ErrorKind::NotMinimal));
    }
}

TEST_CASE("wirtinger_pair examples") {
    auto [b1, b1p] = wirtinger_pair({1, 0, 0, 1});
    CHECK(b1 == Complex(1.0));
    CHECK(b1p == Complex(0.0));
    auto [b2, b2p] = wirtinger_pair({1, 0, 0, -1});
    CHECK(b2 == Complex(0.0));
    CHECK(b2p == Complex(1.0));
    // u = (2+i) c + (1-i) conj(c): u_x = 3, u_y = i((2+i) - (1-i)) = -2 + i
    auto [b3, b3p] = wirtinger_pair({3, -2, 0, 1});
    CHECK(std::abs(b3 - Complex(2, 1)) <= 1e-15);
    CHECK(std::abs(b3p - Complex(1, -1)) <= 1e-15);
    CHECK(std::abs(b3 - wirtinger_pair(jacobian_of({2, 1}, {1, -1})).first) <= 1e-15);
}

TEST_CASE("wirtinger_pair inverts real_jacobian") {
    testing::Sampler s(63);
    for (int t = 0; t < 100; ++t) {
        const Complex B0 = s.in_box(3.0);
        const Complex B0p = s.in_box(3.0);
        const auto [x, xp] = wirtinger_pair(real_jacobian(B0, B0p));
        CHECK(std::abs(x - B0) <= 1e-14);
        CHECK(std::abs(xp - B0p) <= 1e-14);
    }
}

TEST_CASE("B0 pair is stable under step halving") {
    const auto [b5, b5p] = compute_B0_pair(complex_center(), 1e-5);
    const auto [b6, b6p] = compute_B0_pair(complex_center(), 1e-6);
    const double scale = std::abs(b6) + std::abs(b6p);
    CHECK(std::abs(b5 - b6) <= 1e-4 * scale);
    CHECK(std::abs(b5p - b6p) <= 1e-4 * scale);
    CHECK(std::abs(std::abs(b6) - std::abs(b6p)) > 1e-6 * scale);
}

TEST_CASE("B0 pair is conjugation symmetric at a real parameter") {
    const auto& d = real_center();
    CHECK(std::abs(d.B0.imag()) <= 1e-6 * std::abs(d.B0));
    CHECK(std::abs(d.B0p.imag()) <= 1e-6 * std::abs(d.B0));
    CHECK(std::abs(std::abs(d.B0) - std::abs(d.B0p)) > 1e-3);
}

TEST_CASE("compute_QQp examples") {
    const auto id = compute_QQp(1.0, 1.0, 0.0);
    CHECK(id.Q == Complex(1.0));
    CHECK(id.Qp == Complex(0.0));
    // B0 = 0, B0' = 1: the identity conj(H(x)) = x forces H = conjugation
    const auto flip = compute_QQp(1.0, 0.0, 1.0);
    CHECK(flip.Q == Complex(0.0));
    CHECK(flip.Qp == Complex(1.0));
    try {
        compute_QQp(1.0, 1.0, Complex(0, 1));
        FAIL("expected DegenerateTransversality");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateTransversality);
    }
}

TEST_CASE("H solves the defining identity B0 H(x) + B0' conj(H(x)) = A0 x") {
    testing::Sampler s(64);
    int checked = 0;
    while (checked < 100) {
        const Complex A0 = s.in_box(2.0);
        const Complex B0 = s.in_box(2.0);
        const Complex B0p = s.in_box(2.0);
        if (std::abs(std::abs(B0) - std::abs(B0p)) < 0.1 || std::abs(A0) < 0.1) continue;
        ++checked;
        const auto H = compute_QQp(A0, B0, B0p);
        const Complex x = s.in_disk(1.0);
        const Complex Hx = apply_H(H, x);
        CHECK(std::abs(B0 * Hx + B0p * std::conj(Hx) - A0 * x) <= 1e-12 * std::max(1.0, std::abs(A0 * x)) * 10);
    }
}

TEST_CASE("apply_H and apply_h") {
    CHECK(apply_H({1.0, 0.0}, {0.3, -0.7}) == Complex(0.3, -0.7));
    CHECK(apply_H({2.0, Complex(0, 1)}, {1, 1}) == Complex(3, 3));
    testing::Sampler s(65);
    for (int t = 0; t < 100; ++t) {
        const RealLinearMap m{s.in_box(2.0), s.in_box(0.5)};
        if (!(std::abs(std::abs(m.Q) - std::abs(m.Qp)) > 0.2)) continue;
        const Complex w = s.in_disk(2.0);
        CHECK(std::abs(apply_h(m, apply_H(m, w)) - w) < 1e-12);
    }
    const auto H = complex_center().H();
    for (int t = 0; t < 100; ++t) {
        const Complex w = s.in_disk(2.0);
        CHECK(std::abs(apply_h(H, apply_H(H, w)) - w) < 1e-12);
    }
    try {
        apply_h({1.0, Complex(0, 1)}, 1.0);
        FAIL("expected NotInvertible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInvertible);
    }
}

TEST_CASE("Phi_k_tricorn passes through a0 at w = 0") {
    for (const TricornData* d : {&complex_center(), &real_center()}) {
        for (int k = 0; k <= 4; ++k) {
            CHECK(std::abs(Phi_k_tricorn(*d, k, 0.0) - d->a0) <= 1e-12);
            CHECK(std::abs(phi_k_tricorn(*d, k, 0.0) - d->a0) <= 1e-12);
        }
    }
}

TEST_CASE("perturbative and direct tricorn evaluation agree at shallow depth") {
    testing::Sampler s(66);
    for (int k = 0; k <= 2; ++k) {
        const Complex w = s.in_disk(1.0);
        CHECK(std::abs(Phi_k_tricorn(complex_center(), k, w) - Phi_k_tricorn_direct(complex_center(), k, w)) <= 1e-8);
    }
}

TEST_CASE("sup |Phi_k - phi_k| contracts over k = 5..12 at the real tricorn parameter") {
    const auto rows = lemma_convergence(real_center(), 5, 12);
    std::vector<double> diff;
    for (const auto& r : rows) diff.push_back(r.sup_Phik_phik);
    CHECK(contracts(diff, contraction_bound(real_center().lambda0)));
}

TEST_CASE("sup |Phi_k - phi_k| contracts at the complex tricorn center") {
    const auto rows = lemma_convergence(complex_center(), 1, 4);
    std::vector<double> diff;
    for (const auto& r : rows) diff.push_back(r.sup_Phik_phik);
    CHECK(contracts(diff, contraction_bound(complex_center().lambda0)));
}

TEST_CASE("tricorn functional equation") {
    for (const TricornData* d : {&complex_center(), &real_center()}) {
        const auto ev = make_evaluator(*d);
        // on D(1) phi leaves the filled Julia set and one return map takes it to 1e30 and beyond
        for (Complex w : polar_grid(1.0, 10, 10)) {
            const double scale = std::max(1.0, std::abs(apply_return_map(ev, phi(ev, w))));
            CHECK(functional_equation_residual(ev, w) / scale < 1e-8);
        }
        for (Complex w : polar_grid(0.1, 10, 10)) CHECK(functional_equation_residual(ev, w) < 1e-8);
    }
}

TEST_CASE("real slice: tricorn Phi_k equals the quadratic Phi_k on real w") {
    const auto& t = real_center();
    // the tricorn data is the quadratic theory of g^2 = f^2 on the real line, i.e. orders (2l, 2p)
    MisiurewiczData m;
    m.c0 = t.c0;
    m.l = 2 * t.l;
    m.p = 2 * t.p;
    m.a0 = iterate_f(t.c0, t.c0, m.l);
    m.lambda0 = multiplier(t.c0, m.a0, m.p);
    const auto q = compute_Q(m);
    CHECK(std::abs(q.Q - (t.Q + t.Qp)) <= 1e-6 * std::abs(q.Q));
    for (int k = 0; k <= 6; ++k) {
        for (double w : {-1.0, -0.4, 0.3, 0.9}) {
            CHECK(std::abs(Phi_k_tricorn(t, k, w) - Phi_k(q, k, w)) <= 1e-6);
        }
    }
}

TEST_CASE("the companion fixed point g(a0) has the same multiplier") {
    for (const TricornData* d : {&complex_center(), &real_center()}) {
        const Complex a1 = step_g(d->c0, d->a0);
        CHECK(std::abs(biquadratic_derivative(d->c0, a1, d->p) - d->lambda0) <= 1e-9 * std::abs(d->lambda0));
    }
}
