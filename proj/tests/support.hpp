#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "msim/complex.hpp"

namespace testing {

using msim::Complex;

inline const Complex kOmega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
    Complex in_box(double half) { return {uniform(-half, half), uniform(-half, half)}; }
    Complex in_disk(double radius) {
        for (;;) {
            const Complex z = in_box(radius);
            if (std::abs(z) <= radius) return z;
        }
    }
    std::vector<Complex> cloud(std::size_t n, double half) {
        std::vector<Complex> pts(n);
        for (auto& z : pts) z = in_box(half);
        return pts;
    }

private:
    std::mt19937_64 gen_;
};

/// O(n m) Hausdorff distance straight from the definition.
inline double brute_force_hausdorff(std::span<const Complex> a, std::span<const Complex> b) {
    auto directed = [](std::span<const Complex> from, std::span<const Complex> to) {
        double worst = 0.0;
        for (Complex x : from) {
            double best = std::numeric_limits<double>::infinity();
            for (Complex y : to) {
                const double dx = x.real() - y.real();
                const double dy = x.imag() - y.imag();
                best = std::min(best, std::sqrt(dx * dx + dy * dy));
            }
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

/// Central difference of a holomorphic function along the real axis.
template <class F>
Complex central_difference(F&& f, Complex at, double h) {
    return (f(at + h) - f(at - h)) / (2.0 * h);
}

inline double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

}  // namespace testing
