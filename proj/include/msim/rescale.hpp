#pragma once

#include "msim/complex.hpp"
#include "msim/misiurewicz.hpp"

namespace msim {

/// Zoom constants at a certified Misiurewicz parameter.
///
/// The dynamical zoom at depth k is z = c0 + rho_k w with
/// rho_k = 1 / (A0 lambda0^k); the matching parameter zoom is
/// c = c0 + Q rho_k w. Rescaling the Mandelbrot set itself uses q = 1/Q.
struct RescaleData {
    MisiurewiczData base;
    Complex A0{};  // (f_{c0}^l)'(c0)
    Complex B0{};  // d/dc (b(c) - a(c)) at c0, b(c) = f_c^l(c)
    Complex Q{};   // A0 / B0
    Complex q{};   // B0 / A0
};

inline constexpr double kDegenerateA0 = 1e-12;
inline constexpr double kDegenerateB0 = 1e-10;
inline constexpr double kLambdaPowerGuard = 1e300;

Complex compute_A0(const MisiurewiczData& d);

/// Transversality coefficient via implicit differentiation of f_c^p(a) = a.
Complex compute_B0(const MisiurewiczData& d);

/// a'(c0) for the continued periodic point, (df_c^p/dc)(a0) / (1 - lambda0).
Complex periodic_point_derivative(const MisiurewiczData& d);

RescaleData compute_Q(const MisiurewiczData& d);

/// 1 / (A0 lambda0^k); throws RangeExceeded once |lambda0|^k >= 1e300.
Complex rho_k(Complex A0, Complex lambda0, int k);
inline Complex rho_k(const RescaleData& d, int k) { return rho_k(d.A0, d.base.lambda0, k); }

}  // namespace msim
