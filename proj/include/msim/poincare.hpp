#pragma once

#include <span>
#include <vector>

#include "msim/complex.hpp"
#include "msim/dynamics.hpp"
#include "msim/misiurewicz.hpp"
#include "msim/rescale.hpp"

namespace msim {

/// Preperiodic critical-value orbit z_0 = c0, z_1, ... stored as its
/// preperiodic head and one period of the cycle it lands on. For the
/// antiholomorphic family the lengths are 2l and 2p (the even iterates are
/// holomorphic).
struct ReferenceOrbit {
    Family family = Family::Quadratic;
    Complex c0{};
    std::vector<Complex> head;
    std::vector<Complex> cycle;

    static ReferenceOrbit build(Family family, Complex c0, int head_len, int cycle_len);
    /// Pure cycle: the orbit of `start` under the map with parameter c0.
    static ReferenceOrbit cycle_through(Family family, Complex c0, Complex start, int cycle_len);

    Complex at(int j) const {
        const int h = static_cast<int>(head.size());
        return j < h ? head[j] : cycle[(j - h) % cycle.size()];
    }
    Complex landing_point() const { return cycle.front(); }
};

/// Displacement after n steps of the orbit started at at(start) + delta with
/// parameter c0 + eps, relative to at(start + n). The update is the exact
/// algebraic difference of the two orbits, so small displacements keep their
/// relative precision.
Complex perturbed_orbit(const ReferenceOrbit& ref, int start, int n, Complex delta, Complex eps);

/// Poincare function of a repelling fixed point a0 of the return map
/// (f^p for the quadratic family, g^{2p} for the antiholomorphic one).
struct PoincareEvaluator {
    Family family = Family::Quadratic;
    Complex c0{};
    Complex a0{};
    Complex lambda0{};
    int p = 1;  // period of a0 under the return map's generator (f or g^2)
    double tol = 1e-10;
    int n_cap = 60;  // make_evaluator raises this for |lambda0| < 2
    double r_max = 1e3;
    ReferenceOrbit cycle;  // head empty; cycle = orbit of a0 over one return
};

PoincareEvaluator make_evaluator(const MisiurewiczData& d);

/// 60 steps suffice for |lambda0| >= 2; weaker multipliers need
/// proportionally more to shrink w / lambda0^n to rounding level.
int default_step_cap(Complex lambda0);

struct PhiTrace {
    Complex value{};
    std::vector<double> increments;  // |phi_{n+1} - phi_n|, n = 0, 1, ...
};

/// lim_n F^n(a0 + w / lambda0^n) with F the return map. Stops once two
/// consecutive Cauchy increments are below tol; NoConvergence at n_cap.
Complex phi(const PoincareEvaluator& ev, Complex w);
PhiTrace phi_trace(const PoincareEvaluator& ev, Complex w);

/// F(z) evaluated directly.
Complex apply_return_map(const PoincareEvaluator& ev, Complex z);

/// |phi(lambda0 w) - F(phi(w))|.
double functional_equation_residual(const PoincareEvaluator& ev, Complex w);

/// f_{c0}^{l+kp}(c0 + rho_k w).
Complex phi_k(const RescaleData& d, int k, Complex w);
/// f_c^{l+kp}(c) with c = c0 + Q rho_k w.
Complex Phi_k(const RescaleData& d, int k, Complex w);

/// Plain left-to-right iteration of the same maps, without the reference
/// orbit. Loses about log10|1/rho_k| digits; kept as a cross-check.
Complex phi_k_direct(const RescaleData& d, int k, Complex w);
Complex Phi_k_direct(const RescaleData& d, int k, Complex w);

/// Uniform n x n lattice over [-radius, radius]^2 (endpoints included),
/// restricted to the closed disk.
std::vector<Complex> disk_grid(double radius, int n);

/// rings x spokes points radius (i + 1) / rings e^{2 pi i j / spokes}.
std::vector<Complex> polar_grid(double radius, int rings, int spokes);

struct LemmaRow {
    int k = 0;
    double sup_phik_phi = 0.0;
    double sup_Phik_phi = 0.0;
    double sup_Phik_phik = 0.0;
};

/// Sup-norm differences of the dynamical and parametric rescaled families
/// against the Poincare function over a disk lattice. The limit is evaluated
/// with Cauchy tolerance 1e-13 so rows down to ~1e-11 stay meaningful.
std::vector<LemmaRow> lemma_convergence(const RescaleData& d, int k_from, int k_to,
                                        double radius = 1.0, int grid = 33);

/// Ratio bound (1 + |lambda|) / (2 |lambda|): halfway between the
/// geometric rate 1/|lambda| and stagnation.
double contraction_bound(Complex lambda0);

/// Strictly decreasing with every successive ratio <= bound.
bool contracts(std::span<const double> seq, double bound);

/// Cauchy increments past `burn_in` shrink by at least 2/|lambda0| per step.
bool cauchy_rate_ok(const PhiTrace& trace, Complex lambda0, int burn_in = 3);

}  // namespace msim
