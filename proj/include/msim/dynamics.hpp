#pragma once

#include <optional>

#include "msim/complex.hpp"

// Orbits of the quadratic family f_c(z) = z^2 + c and of the antiholomorphic
// family g_c(z) = conj(z)^2 + c.

namespace msim {

inline constexpr double kEscapeRadius = 2.0;
inline constexpr int kDefaultBudget = 1000;

enum class Family { Quadratic, Antiholomorphic };

inline Complex step_f(Complex c, Complex z) { return z * z + c; }
inline Complex step_g(Complex c, Complex z) {
    const Complex zc = std::conj(z);
    return zc * zc + c;
}

/// f_c^n(z). Once the orbit leaves the double range the non-finite value is
/// returned as is; check with is_finite().
Complex iterate_f(Complex c, Complex z, int n);
Complex iterate_g(Complex c, Complex z, int n);
Complex iterate(Family family, Complex c, Complex z, int n);

/// Which parameter dependence the dc channel tracks.
enum class StartPoint {
    Fixed,     // z is independent of c
    FollowsC,  // z = c, as for the critical value orbit
};

struct OrbitResult {
    Complex final{};
    std::optional<int> escaped_at;  // first m <= n with |f^m| > 2
    Complex dz{};                   // d/dz f_c^n(z)
    Complex dc{};                   // d/dc f_c^n(z(c))
};

OrbitResult orbit_with_derivatives(Complex c, Complex z, int n, StartPoint start = StartPoint::Fixed);

/// Smallest n <= n_max with |f_c^n(z)| > radius, or nullopt when the orbit
/// stays bounded for the whole budget.
std::optional<int> escape_time(Complex c, Complex z, int n_max = kDefaultBudget,
                               double radius = kEscapeRadius);
std::optional<int> escape_time_anti(Complex c, Complex z, int n_max = kDefaultBudget,
                                    double radius = kEscapeRadius);
std::optional<int> escape_time(Family family, Complex c, Complex z, int n_max = kDefaultBudget,
                               double radius = kEscapeRadius);

}  // namespace msim
