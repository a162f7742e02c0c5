#pragma once

#include <utility>
#include <vector>

#include "msim/complex.hpp"
#include "msim/misiurewicz.hpp"
#include "msim/poincare.hpp"

// Antiholomorphic family g_c(z) = conj(z)^2 + c and its Misiurewicz theory.
// Parameter derivatives are real 2x2 Jacobians (g is not C-differentiable in
// c); z-derivatives go through the holomorphic second iterate
// G_c(z) = g_c^2(z) = (z^2 + conj(c))^2 + c.

namespace msim {

/// H(w) = Q w + Q' conj(w).
struct RealLinearMap {
    Complex Q{};
    Complex Qp{};

    double determinant() const { return std::norm(Q) - std::norm(Qp); }
    bool invertible() const { return determinant() != 0.0; }
};

Complex apply_H(const RealLinearMap& m, Complex w);
/// H^{-1}(W) = (conj(Q) W - Q' conj(W)) / (|Q|^2 - |Q'|^2). Throws NotInvertible.
Complex apply_h(const RealLinearMap& m, Complex W);

/// Real Jacobian of c = x + iy -> u = u1 + i u2, rows (u1, u2), columns (x, y).
struct Jacobian2 {
    double m11 = 0, m12 = 0;
    double m21 = 0, m22 = 0;
};

/// Splits the real-linear map into B0 c + B0' conj(c).
std::pair<Complex, Complex> wirtinger_pair(const Jacobian2& jac);
/// Inverse of wirtinger_pair.
Jacobian2 real_jacobian(Complex B0, Complex B0p);

struct TricornData {
    Complex c0{};
    int l = 1;
    int p = 1;
    Complex a0{};       // g_{c0}^{2l}(c0)
    Complex lambda0{};  // (g_{c0}^{2p})'(a0)
    Complex A0{};       // (g_{c0}^{2l})'(c0)
    Complex B0{};
    Complex B0p{};
    Complex Q{};
    Complex Qp{};
    double residual = 0.0;  // |g^{l+p}(c0) - g^l(c0)|

    RealLinearMap H() const { return {Q, Qp}; }
};

/// G_c^n(z) = g_c^{2n}(z).
Complex biquadratic(Complex c, Complex z, int n);
/// (G_c^n)'(z) with c frozen.
Complex biquadratic_derivative(Complex c, Complex z, int n);

double tricorn_relation_residual(Complex c, int l, int p);

/// Fixed point of G_c^p continued from a_seed by Newton.
Complex track_tricorn_periodic_point(Complex c, Complex a_seed, int p, double tol = 1e-13,
                                     double step_bound = 1e-2);

/// 2D Newton on Re/Im of g_c^{l+p}(c) - g_c^l(c) with a central-difference
/// Jacobian, then certification and the full set of rescaling constants.
/// Throws NoConvergence, NotMinimal, NotRepelling, DegenerateTransversality.
TricornData solve_tricorn_misiurewicz(int l, int p, Complex seed, const NewtonOptions& opts = {});
TricornData certify_tricorn_near(Complex seed, const SearchOptions& opts = {});

/// Central differences of u(c) = g_c^{2l}(c) - a(c) in the real and
/// imaginary directions with step h_rel * max(1, |c0|).
Jacobian2 transversality_jacobian(const TricornData& d, double h_rel = 1e-6);
std::pair<Complex, Complex> compute_B0_pair(const TricornData& d, double h_rel = 1e-6);

/// Q = A0 conj(B0) / D, Q' = -conj(A0) B0' / D, D = |B0|^2 - |B0'|^2.
RealLinearMap compute_QQp(Complex A0, Complex B0, Complex B0p);

inline Complex rho_k(const TricornData& d, int k) { return rho_k(d.A0, d.lambda0, k); }

/// g_{c0}^{2l+2kp}(c0 + rho_k w).
Complex phi_k_tricorn(const TricornData& d, int k, Complex w);
/// g_c^{2l+2kp}(c) with c = c0 + H(rho_k w).
Complex Phi_k_tricorn(const TricornData& d, int k, Complex w);
Complex Phi_k_tricorn_direct(const TricornData& d, int k, Complex w);

PoincareEvaluator make_evaluator(const TricornData& d);

std::vector<LemmaRow> lemma_convergence(const TricornData& d, int k_from, int k_to,
                                        double radius = 1.0, int grid = 33);

}  // namespace msim
