#pragma once

#include <cmath>
#include <complex>

namespace msim {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Complex value carrying a first-derivative channel with respect to one
/// designated complex variable. Only C-linear derivatives are representable,
/// so antiholomorphic maps (conjugation) are deliberately not supported.
struct DualComplex {
    Complex val{};
    Complex der{};

    constexpr DualComplex() = default;
    constexpr DualComplex(Complex v, Complex d) : val(v), der(d) {}
    // implicit: constants have zero derivative
    constexpr DualComplex(Complex v) : val(v), der(0.0) {}  // NOLINT
    constexpr DualComplex(double v) : val(v), der(0.0) {}   // NOLINT

    static constexpr DualComplex variable(Complex v) { return {v, Complex(1.0)}; }
    static constexpr DualComplex constant(Complex v) { return {v, Complex(0.0)}; }

    DualComplex& operator+=(const DualComplex& o) {
        val += o.val;
        der += o.der;
        return *this;
    }
    DualComplex& operator-=(const DualComplex& o) {
        val -= o.val;
        der -= o.der;
        return *this;
    }
    DualComplex& operator*=(const DualComplex& o) {
        der = der * o.val + val * o.der;
        val *= o.val;
        return *this;
    }
    DualComplex& operator/=(const DualComplex& o) {
        der = (der * o.val - val * o.der) / (o.val * o.val);
        val /= o.val;
        return *this;
    }
};

inline DualComplex operator+(DualComplex a, const DualComplex& b) { return a += b; }
inline DualComplex operator-(DualComplex a, const DualComplex& b) { return a -= b; }
inline DualComplex operator*(DualComplex a, const DualComplex& b) { return a *= b; }
inline DualComplex operator/(DualComplex a, const DualComplex& b) { return a /= b; }
inline DualComplex operator-(const DualComplex& a) { return {-a.val, -a.der}; }

inline DualComplex sqr(const DualComplex& a) { return {a.val * a.val, 2.0 * a.val * a.der}; }

}  // namespace msim
