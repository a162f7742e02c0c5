#include "msim/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lemma_table.hpp"
#include "msim/error.hpp"

namespace msim {

ReferenceOrbit ReferenceOrbit::build(Family family, Complex c0, int head_len, int cycle_len) {
    if (head_len < 0 || cycle_len < 1) throw Error(ErrorKind::InvalidArgument, "bad reference orbit lengths");
    ReferenceOrbit ref;
    ref.family = family;
    ref.c0 = c0;
    Complex z = c0;
    ref.head.reserve(head_len);
    for (int j = 0; j < head_len; ++j) {
        ref.head.push_back(z);
        z = family == Family::Quadratic ? step_f(c0, z) : step_g(c0, z);
    }
    ref.cycle.reserve(cycle_len);
    for (int j = 0; j < cycle_len; ++j) {
        ref.cycle.push_back(z);
        z = family == Family::Quadratic ? step_f(c0, z) : step_g(c0, z);
    }
    return ref;
}

ReferenceOrbit ReferenceOrbit::cycle_through(Family family, Complex c0, Complex start, int cycle_len) {
    if (cycle_len < 1) throw Error(ErrorKind::InvalidArgument, "bad reference orbit lengths");
    ReferenceOrbit ref;
    ref.family = family;
    ref.c0 = c0;
    Complex z = start;
    for (int j = 0; j < cycle_len; ++j) {
        ref.cycle.push_back(z);
        z = family == Family::Quadratic ? step_f(c0, z) : step_g(c0, z);
    }
    return ref;
}

Complex perturbed_orbit(const ReferenceOrbit& ref, int start, int n, Complex delta, Complex eps) {
    if (ref.family == Family::Quadratic) {
        for (int j = start; j < start + n && is_finite(delta); ++j) {
            delta = (2.0 * ref.at(j) + delta) * delta + eps;
        }
    } else {
        for (int j = start; j < start + n && is_finite(delta); ++j) {
            const Complex dc = std::conj(delta);
            delta = (2.0 * std::conj(ref.at(j)) + dc) * dc + eps;
        }
    }
    return delta;
}

int default_step_cap(Complex lambda0) {
    const double m = std::abs(lambda0);
    if (!(m > 1.0)) throw Error(ErrorKind::NotRepelling, "Poincare function needs |lambda0| > 1");
    return std::max(60, static_cast<int>(std::ceil(60.0 * std::numbers::ln2 / std::log(m))));
}

PoincareEvaluator make_evaluator(const MisiurewiczData& d) {
    PoincareEvaluator ev;
    ev.family = Family::Quadratic;
    ev.c0 = d.c0;
    ev.a0 = d.a0;
    ev.lambda0 = d.lambda0;
    ev.p = d.p;
    ev.n_cap = default_step_cap(d.lambda0);
    ev.cycle = ReferenceOrbit::cycle_through(Family::Quadratic, d.c0, d.a0, d.p);
    return ev;
}

namespace {

int return_steps(const PoincareEvaluator& ev) {
    return ev.family == Family::Quadratic ? ev.p : 2 * ev.p;
}

}  // namespace

PhiTrace phi_trace(const PoincareEvaluator& ev, Complex w) {
    if (!(std::abs(w) <= ev.r_max)) {
        throw Error(ErrorKind::InvalidArgument, "|w| exceeds the evaluator radius");
    }
    const int steps = return_steps(ev);
    PhiTrace trace;
    Complex scale{1.0};  // lambda0^n
    Complex prev = w;    // phi_0(w) - a0
    int small = 0;
    for (int n = 1; n <= ev.n_cap; ++n) {
        scale *= ev.lambda0;
        const Complex cur = perturbed_orbit(ev.cycle, 0, n * steps, w / scale, Complex{});
        if (!is_finite(cur)) break;
        const double inc = std::abs(cur - prev);
        trace.increments.push_back(inc);
        prev = cur;
        small = inc < ev.tol ? small + 1 : 0;
        if (small == 2) {
            trace.value = ev.a0 + cur;
            return trace;
        }
    }
    throw Error(ErrorKind::NoConvergence, "Poincare sequence not Cauchy within n_cap = " +
                                              std::to_string(ev.n_cap));
}

Complex phi(const PoincareEvaluator& ev, Complex w) { return phi_trace(ev, w).value; }

Complex apply_return_map(const PoincareEvaluator& ev, Complex z) {
    return ev.family == Family::Quadratic ? iterate_f(ev.c0, z, ev.p) : iterate_g(ev.c0, z, 2 * ev.p);
}

double functional_equation_residual(const PoincareEvaluator& ev, Complex w) {
    return std::abs(phi(ev, ev.lambda0 * w) - apply_return_map(ev, phi(ev, w)));
}

namespace {

ReferenceOrbit reference_for(const RescaleData& d) {
    return ReferenceOrbit::build(Family::Quadratic, d.base.c0, d.base.l, d.base.p);
}

}  // namespace

Complex phi_k(const RescaleData& d, int k, Complex w) {
    const Complex rho = rho_k(d, k);
    const auto ref = reference_for(d);
    return d.base.a0 + perturbed_orbit(ref, 0, d.base.l + k * d.base.p, rho * w, Complex{});
}

Complex Phi_k(const RescaleData& d, int k, Complex w) {
    const Complex eps = d.Q * rho_k(d, k) * w;
    const auto ref = reference_for(d);
    return d.base.a0 + perturbed_orbit(ref, 0, d.base.l + k * d.base.p, eps, eps);
}

Complex phi_k_direct(const RescaleData& d, int k, Complex w) {
    const Complex z = d.base.c0 + rho_k(d, k) * w;
    return iterate_f(d.base.c0, z, d.base.l + k * d.base.p);
}

Complex Phi_k_direct(const RescaleData& d, int k, Complex w) {
    const Complex c = d.base.c0 + d.Q * rho_k(d, k) * w;
    return iterate_f(c, c, d.base.l + k * d.base.p);
}

std::vector<Complex> disk_grid(double radius, int n) {
    std::vector<Complex> pts;
    if (n < 1) return pts;
    pts.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double x = n == 1 ? 0.0 : -radius + 2.0 * radius * i / (n - 1);
            const double y = n == 1 ? 0.0 : -radius + 2.0 * radius * j / (n - 1);
            if (x * x + y * y <= radius * radius) pts.emplace_back(x, y);
        }
    }
    return pts;
}

std::vector<Complex> polar_grid(double radius, int rings, int spokes) {
    std::vector<Complex> pts;
    if (rings < 1 || spokes < 1) return pts;
    pts.reserve(static_cast<std::size_t>(rings) * spokes);
    for (int i = 0; i < rings; ++i) {
        const double rho = radius * (i + 1) / rings;
        for (int j = 0; j < spokes; ++j) {
            pts.push_back(std::polar(rho, 2.0 * std::numbers::pi * j / spokes));
        }
    }
    return pts;
}

std::vector<LemmaRow> lemma_convergence(const RescaleData& d, int k_from, int k_to, double radius,
                                        int grid) {
    return detail::lemma_rows(
        make_evaluator(d.base), radius, grid, k_from, k_to,
        [&](int k, Complex w) { return phi_k(d, k, w); },
        [&](int k, Complex w) { return Phi_k(d, k, w); });
}

double contraction_bound(Complex lambda0) {
    const double m = std::abs(lambda0);
    return (1.0 + m) / (2.0 * m);
}

bool contracts(std::span<const double> seq, double bound) {
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (!(seq[i] < seq[i - 1]) || !(seq[i] <= bound * seq[i - 1])) return false;
    }
    return true;
}

bool cauchy_rate_ok(const PhiTrace& trace, Complex lambda0, int burn_in) {
    const double bound = 2.0 / std::abs(lambda0);
    for (std::size_t n = static_cast<std::size_t>(burn_in) + 1; n < trace.increments.size(); ++n) {
        if (trace.increments[n] > bound * trace.increments[n - 1]) return false;
    }
    return true;
}

}  // namespace msim
