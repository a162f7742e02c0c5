#include "msim/rescale.hpp"

#include <cmath>
#include <string>

#include "msim/dynamics.hpp"
#include "msim/error.hpp"

namespace msim {

Complex compute_A0(const MisiurewiczData& d) {
    const Complex a = orbit_with_derivatives(d.c0, d.c0, d.l).dz;
    if (std::abs(a) < kDegenerateA0) {
        throw Error(ErrorKind::DegenerateA0, "A0 vanishes, c0 looks strictly periodic");
    }
    return a;
}

Complex periodic_point_derivative(const MisiurewiczData& d) {
    const Complex dfdc = orbit_with_derivatives(d.c0, d.a0, d.p, StartPoint::Fixed).dc;
    return dfdc / (1.0 - d.lambda0);
}

Complex compute_B0(const MisiurewiczData& d) {
    const Complex db = orbit_with_derivatives(d.c0, d.c0, d.l, StartPoint::FollowsC).dc;
    const Complex b0 = db - periodic_point_derivative(d);
    if (std::abs(b0) < kDegenerateB0) {
        throw Error(ErrorKind::DegenerateB0, "B0 vanishes, transversality fails at this parameter");
    }
    return b0;
}

RescaleData compute_Q(const MisiurewiczData& d) {
    RescaleData r;
    r.base = d;
    r.A0 = compute_A0(d);
    r.B0 = compute_B0(d);
    r.Q = r.A0 / r.B0;
    r.q = r.B0 / r.A0;
    return r;
}

Complex rho_k(Complex A0, Complex lambda0, int k) {
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "k must be >= 0");
    if (k > 0 && k * std::log10(std::abs(lambda0)) >= std::log10(kLambdaPowerGuard)) {
        throw Error(ErrorKind::RangeExceeded, "|lambda0|^" + std::to_string(k) + " exceeds 1e300");
    }
    Complex denom = A0;
    for (int i = 0; i < k; ++i) denom *= lambda0;
    return 1.0 / denom;
}

}  // namespace msim
