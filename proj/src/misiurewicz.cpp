#include "msim/misiurewicz.hpp"

#include <string>

#include "msim/dynamics.hpp"
#include "msim/error.hpp"
#include "newton.hpp"

namespace msim {

namespace {

// F(c) = f_c^{l+p}(c) - f_c^l(c) together with dF/dc.
DualComplex relation(Complex c, int l, int p) {
    const auto head = orbit_with_derivatives(c, c, l, StartPoint::FollowsC);
    const auto tail = orbit_with_derivatives(c, c, l + p, StartPoint::FollowsC);
    return {tail.final - head.final, tail.dc - head.dc};
}

bool divides(int d, int n) { return n % d == 0; }

void check_minimal(Complex c0, int l, int p, double tol) {
    for (int lp = 1; lp <= l; ++lp) {
        for (int pp = 1; pp <= p; ++pp) {
            if (!divides(pp, p) || (lp == l && pp == p)) continue;
            if (relation_residual(c0, lp, pp) < tol) {
                throw Error(ErrorKind::NotMinimal, "relation already holds for (l, p) = (" +
                                                       std::to_string(lp) + ", " +
                                                       std::to_string(pp) + ")");
            }
        }
    }
}

}  // namespace

double relation_residual(Complex c, int l, int p) {
    return std::abs(iterate_f(c, c, l + p) - iterate_f(c, c, l));
}

Complex multiplier(Complex c, Complex a, int p) {
    return orbit_with_derivatives(c, a, p).dz;
}

MisiurewiczData solve_misiurewicz(int l, int p, Complex seed, const NewtonOptions& opts) {
    if (l < 1 || p < 1) throw Error(ErrorKind::InvalidArgument, "l and p must be >= 1");
    if (!(opts.tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tol must be positive");

    const Complex c0 = detail::damped_newton(
        seed, [&](Complex c) { return relation(c, l, p).val; },
        [&](Complex c, Complex fc) { return -fc / relation(c, l, p).der; }, opts);

    check_minimal(c0, l, p, opts.minimality_tol);

    MisiurewiczData d;
    d.c0 = c0;
    d.l = l;
    d.p = p;
    d.a0 = iterate_f(c0, c0, l);
    d.lambda0 = multiplier(c0, d.a0, p);
    d.residual = relation_residual(c0, l, p);
    if (!(std::abs(d.lambda0) > 1.0)) {
        throw Error(ErrorKind::NotRepelling,
                    "|lambda0| = " + std::to_string(std::abs(d.lambda0)) + " is not > 1");
    }
    return d;
}

MisiurewiczData certify_near(Complex seed, const SearchOptions& opts) {
    const double radius = opts.max_seed_distance * std::max(1.0, std::abs(seed));
    for (int l = 1; l <= opts.l_max; ++l) {
        for (int p = 1; p <= opts.p_max; ++p) {
            try {
                auto d = solve_misiurewicz(l, p, seed, opts.newton);
                if (std::abs(d.c0 - seed) <= radius) return d;
            } catch (const Error&) {
                // not this (l, p)
            }
        }
    }
    throw Error(ErrorKind::NoConvergence, "no certified Misiurewicz parameter near the seed with l <= " +
                                              std::to_string(opts.l_max) +
                                              ", p <= " + std::to_string(opts.p_max));
}

Complex track_periodic_point(Complex c, Complex a_seed, int p, double tol, double step_bound) {
    if (p < 1) throw Error(ErrorKind::InvalidArgument, "p must be >= 1");
    NewtonOptions opts;
    opts.tol = tol;
    const Complex a = detail::damped_newton(
        a_seed,
        [&](Complex z) { return iterate_f(c, z, p) - z; },
        [&](Complex z, Complex fz) { return -fz / (multiplier(c, z, p) - 1.0); }, opts);
    if (std::abs(a - a_seed) > step_bound) {
        throw Error(ErrorKind::BasinJump, "continued point moved " + std::to_string(std::abs(a - a_seed)) +
                                              " from its seed");
    }
    return a;
}

}  // namespace msim
