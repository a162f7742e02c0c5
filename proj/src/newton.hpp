#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "msim/complex.hpp"
#include "msim/error.hpp"
#include "msim/misiurewicz.hpp"

namespace msim::detail {

/// Damped Newton iteration on a complex unknown. `step(c, Fc)` returns the
/// full Newton step. Steps are halved while they fail to decrease |F|.
/// Converged when |F| <= tol, or when the Newton step is below the
/// resolution of c (the rounding floor of F has been reached).
template <class Residual, class Step>
Complex damped_newton(Complex seed, Residual&& residual, Step&& step, const NewtonOptions& opts) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    Complex c = seed;
    Complex fc = residual(c);
    for (int it = 0; it < opts.max_iter; ++it) {
        if (!is_finite(fc)) break;
        if (std::abs(fc) <= opts.tol) return c;
        Complex s = step(c, fc);
        if (!is_finite(s)) break;
        if (std::abs(s) <= 16.0 * eps * std::max(1.0, std::abs(c))) return c;
        bool improved = false;
        for (int halvings = 0; halvings < 40; ++halvings) {
            const Complex trial = c + s;
            const Complex ft = residual(trial);
            if (is_finite(ft) && std::abs(ft) < std::abs(fc)) {
                c = trial;
                fc = ft;
                improved = true;
                break;
            }
            s *= 0.5;
        }
        if (!improved) break;
    }
    throw Error(ErrorKind::NoConvergence,
                "Newton did not reach |F| <= " + std::to_string(opts.tol) + " from the seed");
}

}  // namespace msim::detail
