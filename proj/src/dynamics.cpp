#include "msim/dynamics.hpp"

#include "msim/error.hpp"

namespace msim {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::NotMinimal: return "NotMinimal";
        case ErrorKind::NotRepelling: return "NotRepelling";
        case ErrorKind::BasinJump: return "BasinJump";
        case ErrorKind::DegenerateA0: return "DegenerateA0";
        case ErrorKind::DegenerateB0: return "DegenerateB0";
        case ErrorKind::DegenerateTransversality: return "DegenerateTransversality";
        case ErrorKind::RangeExceeded: return "RangeExceeded";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::EmptySet: return "EmptySet";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Complex iterate_f(Complex c, Complex z, int n) {
    for (int i = 0; i < n && is_finite(z); ++i) z = step_f(c, z);
    return z;
}

Complex iterate_g(Complex c, Complex z, int n) {
    for (int i = 0; i < n && is_finite(z); ++i) z = step_g(c, z);
    return z;
}

Complex iterate(Family family, Complex c, Complex z, int n) {
    return family == Family::Quadratic ? iterate_f(c, z, n) : iterate_g(c, z, n);
}

OrbitResult orbit_with_derivatives(Complex c, Complex z, int n, StartPoint start) {
    OrbitResult out;
    Complex dz{1.0};
    Complex dc{start == StartPoint::FollowsC ? 1.0 : 0.0};
    if (std::norm(z) > kEscapeRadius * kEscapeRadius) out.escaped_at = 0;
    for (int m = 1; m <= n && is_finite(z); ++m) {
        // derivatives first: they use the pre-step value
        dc = 2.0 * z * dc + 1.0;
        dz = 2.0 * z * dz;
        z = z * z + c;
        if (!out.escaped_at && std::norm(z) > kEscapeRadius * kEscapeRadius) out.escaped_at = m;
    }
    out.final = z;
    out.dz = dz;
    out.dc = dc;
    return out;
}

namespace {

template <bool Anti>
std::optional<int> escape_impl(Complex c, Complex z, int n_max, double radius) {
    const double r2 = radius * radius;
    const double cx = c.real();
    const double cy = c.imag();
    double x = z.real();
    double y = z.imag();
    if (x * x + y * y > r2) return 0;
    for (int n = 1; n <= n_max; ++n) {
        const double xx = x * x;
        const double yy = y * y;
        const double xy = x * y;
        x = xx - yy + cx;
        y = (Anti ? -(xy + xy) : (xy + xy)) + cy;
        if (x * x + y * y > r2) return n;
    }
    return std::nullopt;
}

}  // namespace

std::optional<int> escape_time(Complex c, Complex z, int n_max, double radius) {
    return escape_impl<false>(c, z, n_max, radius);
}

std::optional<int> escape_time_anti(Complex c, Complex z, int n_max, double radius) {
    return escape_impl<true>(c, z, n_max, radius);
}

std::optional<int> escape_time(Family family, Complex c, Complex z, int n_max, double radius) {
    return family == Family::Quadratic ? escape_impl<false>(c, z, n_max, radius)
                                       : escape_impl<true>(c, z, n_max, radius);
}

}  // namespace msim
