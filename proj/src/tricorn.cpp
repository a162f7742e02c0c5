#include "msim/tricorn.hpp"

#include <cmath>
#include <string>

#include "lemma_table.hpp"
#include "msim/dynamics.hpp"
#include "msim/error.hpp"
#include "newton.hpp"

namespace msim {

Complex apply_H(const RealLinearMap& m, Complex w) { return m.Q * w + m.Qp * std::conj(w); }

Complex apply_h(const RealLinearMap& m, Complex W) {
    const double det = m.determinant();
    if (det == 0.0) throw Error(ErrorKind::NotInvertible, "|Q| == |Q'|");
    return (std::conj(m.Q) * W - m.Qp * std::conj(W)) / det;
}

std::pair<Complex, Complex> wirtinger_pair(const Jacobian2& j) {
    const Complex b0{0.5 * (j.m11 + j.m22), 0.5 * (j.m21 - j.m12)};
    const Complex b0p{0.5 * (j.m11 - j.m22), 0.5 * (j.m21 + j.m12)};
    return {b0, b0p};
}

Jacobian2 real_jacobian(Complex B0, Complex B0p) {
    // columns are the images of 1 and i
    const Complex ux = B0 + B0p;
    const Complex uy = Complex(0, 1) * (B0 - B0p);
    return {ux.real(), uy.real(), ux.imag(), uy.imag()};
}

Complex biquadratic(Complex c, Complex z, int n) {
    const Complex cc = std::conj(c);
    for (int i = 0; i < n && is_finite(z); ++i) {
        const Complex u = z * z + cc;
        z = u * u + c;
    }
    return z;
}

Complex biquadratic_derivative(Complex c, Complex z, int n) {
    const Complex cc = std::conj(c);
    DualComplex x = DualComplex::variable(z);
    for (int i = 0; i < n; ++i) x = sqr(sqr(x) + cc) + c;
    return x.der;
}

double tricorn_relation_residual(Complex c, int l, int p) {
    return std::abs(iterate_g(c, c, l + p) - iterate_g(c, c, l));
}

Complex track_tricorn_periodic_point(Complex c, Complex a_seed, int p, double tol, double step_bound) {
    if (p < 1) throw Error(ErrorKind::InvalidArgument, "p must be >= 1");
    NewtonOptions opts;
    opts.tol = tol;
    const Complex a = detail::damped_newton(
        a_seed, [&](Complex z) { return biquadratic(c, z, p) - z; },
        [&](Complex z, Complex fz) { return -fz / (biquadratic_derivative(c, z, p) - 1.0); }, opts);
    if (std::abs(a - a_seed) > step_bound) {
        throw Error(ErrorKind::BasinJump, "continued point moved " + std::to_string(std::abs(a - a_seed)) +
                                              " from its seed");
    }
    return a;
}

namespace {

double fd_step(Complex c, double h_rel) { return h_rel * std::max(1.0, std::abs(c)); }

template <class U>
Jacobian2 central_jacobian(U&& u, Complex c, double h) {
    const Complex ux = (u(c + h) - u(c - h)) / (2.0 * h);
    const Complex uy = (u(c + Complex(0, h)) - u(c - Complex(0, h))) / (2.0 * h);
    return {ux.real(), uy.real(), ux.imag(), uy.imag()};
}

Complex relation_value(Complex c, int l, int p) {
    return iterate_g(c, c, l + p) - iterate_g(c, c, l);
}

void check_minimal(Complex c0, int l, int p, double tol) {
    for (int lp = 1; lp <= l; ++lp) {
        for (int pp = 1; pp <= p; ++pp) {
            if (p % pp != 0 || (lp == l && pp == p)) continue;
            if (tricorn_relation_residual(c0, lp, pp) < tol) {
                throw Error(ErrorKind::NotMinimal, "relation already holds for (l, p) = (" +
                                                       std::to_string(lp) + ", " +
                                                       std::to_string(pp) + ")");
            }
        }
    }
}

}  // namespace

Jacobian2 transversality_jacobian(const TricornData& d, double h_rel) {
    auto u = [&](Complex c) {
        const Complex a = track_tricorn_periodic_point(c, d.a0, d.p);
        return biquadratic(c, c, d.l) - a;
    };
    return central_jacobian(u, d.c0, fd_step(d.c0, h_rel));
}

std::pair<Complex, Complex> compute_B0_pair(const TricornData& d, double h_rel) {
    const auto [b0, b0p] = wirtinger_pair(transversality_jacobian(d, h_rel));
    const double gap = std::abs(std::abs(b0) - std::abs(b0p));
    if (gap < 1e-6 * (std::abs(b0) + std::abs(b0p))) {
        throw Error(ErrorKind::DegenerateTransversality, "|B0| and |B0'| coincide");
    }
    return {b0, b0p};
}

RealLinearMap compute_QQp(Complex A0, Complex B0, Complex B0p) {
    const double det = std::norm(B0) - std::norm(B0p);
    if (det == 0.0) throw Error(ErrorKind::DegenerateTransversality, "|B0| == |B0'|");
    return {A0 * std::conj(B0) / det, -std::conj(A0) * B0p / det};
}

TricornData solve_tricorn_misiurewicz(int l, int p, Complex seed, const NewtonOptions& opts) {
    if (l < 1 || p < 1) throw Error(ErrorKind::InvalidArgument, "l and p must be >= 1");

    auto residual = [&](Complex c) { return relation_value(c, l, p); };
    auto step = [&](Complex c, Complex fc) {
        const Jacobian2 j = central_jacobian(residual, c, fd_step(c, 1e-6));
        const double det = j.m11 * j.m22 - j.m12 * j.m21;
        // solve J s = -F
        const double sx = (-fc.real() * j.m22 + fc.imag() * j.m12) / det;
        const double sy = (-fc.imag() * j.m11 + fc.real() * j.m21) / det;
        return Complex(sx, sy);
    };
    const Complex c0 = detail::damped_newton(seed, residual, step, opts);

    check_minimal(c0, l, p, opts.minimality_tol);

    TricornData d;
    d.c0 = c0;
    d.l = l;
    d.p = p;
    d.a0 = biquadratic(c0, c0, l);
    d.lambda0 = biquadratic_derivative(c0, d.a0, p);
    d.residual = tricorn_relation_residual(c0, l, p);
    if (!(std::abs(d.lambda0) > 1.0)) {
        throw Error(ErrorKind::NotRepelling,
                    "|lambda0| = " + std::to_string(std::abs(d.lambda0)) + " is not > 1");
    }
    d.A0 = biquadratic_derivative(c0, c0, l);
    if (std::abs(d.A0) < 1e-12) throw Error(ErrorKind::DegenerateA0, "A0 vanishes");
    std::tie(d.B0, d.B0p) = compute_B0_pair(d);
    const RealLinearMap m = compute_QQp(d.A0, d.B0, d.B0p);
    d.Q = m.Q;
    d.Qp = m.Qp;
    return d;
}

TricornData certify_tricorn_near(Complex seed, const SearchOptions& opts) {
    const double radius = opts.max_seed_distance * std::max(1.0, std::abs(seed));
    for (int l = 1; l <= opts.l_max; ++l) {
        for (int p = 1; p <= opts.p_max; ++p) {
            try {
                auto d = solve_tricorn_misiurewicz(l, p, seed, opts.newton);
                if (std::abs(d.c0 - seed) <= radius) return d;
            } catch (const Error&) {
            }
        }
    }
    throw Error(ErrorKind::NoConvergence, "no certified tricorn Misiurewicz parameter near the seed");
}

namespace {

ReferenceOrbit reference_for(const TricornData& d) {
    return ReferenceOrbit::build(Family::Antiholomorphic, d.c0, 2 * d.l, 2 * d.p);
}

}  // namespace

Complex phi_k_tricorn(const TricornData& d, int k, Complex w) {
    const Complex rho = rho_k(d, k);
    return d.a0 + perturbed_orbit(reference_for(d), 0, 2 * d.l + 2 * k * d.p, rho * w, Complex{});
}

Complex Phi_k_tricorn(const TricornData& d, int k, Complex w) {
    const Complex eps = apply_H(d.H(), rho_k(d, k) * w);
    return d.a0 + perturbed_orbit(reference_for(d), 0, 2 * d.l + 2 * k * d.p, eps, eps);
}

Complex Phi_k_tricorn_direct(const TricornData& d, int k, Complex w) {
    const Complex c = d.c0 + apply_H(d.H(), rho_k(d, k) * w);
    return iterate_g(c, c, 2 * d.l + 2 * k * d.p);
}

PoincareEvaluator make_evaluator(const TricornData& d) {
    PoincareEvaluator ev;
    ev.family = Family::Antiholomorphic;
    ev.c0 = d.c0;
    ev.a0 = d.a0;
    ev.lambda0 = d.lambda0;
    ev.p = d.p;
    ev.n_cap = default_step_cap(d.lambda0);
    ev.cycle = ReferenceOrbit::cycle_through(Family::Antiholomorphic, d.c0, d.a0, 2 * d.p);
    return ev;
}

std::vector<LemmaRow> lemma_convergence(const TricornData& d, int k_from, int k_to, double radius,
                                        int grid) {
    return detail::lemma_rows(
        make_evaluator(d), radius, grid, k_from, k_to,
        [&](int k, Complex w) { return phi_k_tricorn(d, k, w); },
        [&](int k, Complex w) { return Phi_k_tricorn(d, k, w); });
}

}  // namespace msim
