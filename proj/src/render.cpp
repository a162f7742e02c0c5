#include "msim/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "msim/error.hpp"
#include "parallel.hpp"

namespace msim {

std::size_t MembershipGrid::count() const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

namespace {

// Orbits that have left the escape disk are followed out to this radius so
// the distance estimate is accurate.
constexpr double kDistanceBailout = 1e10;
constexpr int kDistanceExtraSteps = 64;

struct PixelResult {
    bool escaped = false;
    double distance = 0.0;  // estimated distance to the set in w units; 0 when bounded
};

// Escape-time classification of one sample point with optional distance
// estimate. Derivatives are carried with respect to w and conj(w):
// alpha = dz/dw, beta = dz/dconj(w). The estimate is the Green's function
// ratio G/|grad G| = |z|^2 log|z| / |conj(z) alpha + z conj(beta)|.
template <bool Anti, bool Param, bool Estimate>
PixelResult classify_point(Complex z0, Complex c, Complex s, Complex s_conj, int budget, double r2) {
    double x = z0.real();
    double y = z0.imag();
    const double cx = c.real();
    const double cy = c.imag();
    Complex alpha = s;
    Complex beta = s_conj;

    int n = 0;
    bool escaped = x * x + y * y > r2;
    if (escaped && !Estimate) return {true, 0.0};
    const int limit = budget + (Estimate ? kDistanceExtraSteps : 0);
    while (n < limit) {
        if (escaped && x * x + y * y > kDistanceBailout * kDistanceBailout) break;
        if (!escaped && n >= budget) break;
        if constexpr (Estimate) {
            if constexpr (Anti) {
                const Complex zc(x, -y);
                const Complex a_new = 2.0 * zc * std::conj(beta);
                const Complex b_new = 2.0 * zc * std::conj(alpha);
                alpha = Param ? a_new + s : a_new;
                beta = Param ? b_new + s_conj : b_new;
            } else {
                const Complex z(x, y);
                alpha = 2.0 * z * alpha;
                beta = 2.0 * z * beta;
                if constexpr (Param) {
                    alpha += s;
                    beta += s_conj;
                }
            }
        }
        const double xx = x * x;
        const double yy = y * y;
        const double xy = x * y;
        x = xx - yy + cx;
        y = (Anti ? -(xy + xy) : (xy + xy)) + cy;
        ++n;
        if (!escaped && x * x + y * y > r2) {
            escaped = true;
            if (!Estimate) return {true, 0.0};
        }
    }
    if (!escaped) return {false, 0.0};
    const Complex z(x, y);
    const double mod = std::abs(z);
    const double grad = std::abs(std::conj(z) * alpha + z * std::conj(beta));
    if (!std::isfinite(grad) || !std::isfinite(mod)) return {true, 0.0};
    if (grad == 0.0) return {true, std::numeric_limits<double>::infinity()};
    return {true, mod * mod * std::log(mod) / grad};
}

template <bool Anti, bool Param>
void fill_grid(MembershipGrid& grid, const RescaledWindow& rw, const ClassifyOptions& opts) {
    const int res = rw.w_window.resolution;
    const double r2 = opts.escape_radius * opts.escape_radius;
    const bool estimate = opts.coverage == Coverage::DistanceEstimate;
    const double threshold = opts.de_fraction * rw.w_window.pitch();
    detail::parallel_for(res, [&](int j) {
        for (int i = 0; i < res; ++i) {
            const Complex z0 = rw.map(rw.w_window.pixel(i, j));
            const Complex c = Param ? z0 : rw.c;
            const Complex s = Param || estimate ? rw.scale : Complex{};
            const Complex sc = Param || estimate ? rw.conj_scale : Complex{};
            bool member;
            if (estimate) {
                const auto r = classify_point<Anti, Param, true>(z0, c, s, sc, opts.budget, r2);
                member = !r.escaped || r.distance <= threshold;
            } else {
                member = !classify_point<Anti, Param, false>(z0, c, s, sc, opts.budget, r2).escaped;
            }
            grid.bits[static_cast<std::size_t>(j) * res + i] = member ? 1 : 0;
        }
    });
}

RescaledWindow plain(const Window& window, Family family, Plane plane, Complex c) {
    RescaledWindow rw;
    rw.w_window = window;
    rw.family = family;
    rw.plane = plane;
    rw.c = c;
    return rw;
}

Window w_window(double r, int resolution) {
    if (!(r > 0.0)) throw Error(ErrorKind::InvalidArgument, "r must be positive");
    if (resolution < 1) throw Error(ErrorKind::InvalidArgument, "resolution must be >= 1");
    return {Complex{}, 2.0 * r, resolution};
}

void check_precision(const RescaledWindow& rw) {
    const double pitch = rw.min_stretch() * rw.w_window.pitch();
    if (!(pitch >= kMinRelativePitch * std::max(1.0, std::abs(rw.origin)))) {
        throw Error(ErrorKind::RangeExceeded, "rescaled pixel pitch is below double resolution at c0");
    }
}

RescaledWindow make_rescaled(Family family, Plane plane, Complex c0, Complex scale, Complex conj_scale,
                             double r, int resolution) {
    RescaledWindow rw;
    rw.w_window = w_window(r, resolution);
    rw.family = family;
    rw.plane = plane;
    rw.c = c0;
    rw.origin = c0;
    rw.scale = scale;
    rw.conj_scale = conj_scale;
    check_precision(rw);
    return rw;
}

}  // namespace

MembershipGrid classify_rescaled(const RescaledWindow& rw, const ClassifyOptions& opts) {
    if (opts.budget < 1) throw Error(ErrorKind::InvalidArgument, "budget must be >= 1");
    MembershipGrid grid;
    grid.window = rw.w_window;
    grid.budget = opts.budget;
    grid.bits.assign(static_cast<std::size_t>(rw.w_window.resolution) * rw.w_window.resolution, 0);
    const bool anti = rw.family == Family::Antiholomorphic;
    const bool param = rw.plane == Plane::Parameter;
    if (anti) {
        param ? fill_grid<true, true>(grid, rw, opts) : fill_grid<true, false>(grid, rw, opts);
    } else {
        param ? fill_grid<false, true>(grid, rw, opts) : fill_grid<false, false>(grid, rw, opts);
    }
    return grid;
}

MembershipGrid classify_julia(Complex c, const Window& window, int budget, bool anti, double escape_radius) {
    ClassifyOptions opts;
    opts.budget = budget;
    opts.escape_radius = escape_radius;
    return classify_rescaled(plain(window, anti ? Family::Antiholomorphic : Family::Quadratic, Plane::Dynamical, c),
                             opts);
}

MembershipGrid classify_mandelbrot(const Window& window, int budget, double escape_radius) {
    ClassifyOptions opts;
    opts.budget = budget;
    opts.escape_radius = escape_radius;
    return classify_rescaled(plain(window, Family::Quadratic, Plane::Parameter, {}), opts);
}

MembershipGrid classify_tricorn(const Window& window, int budget, double escape_radius) {
    ClassifyOptions opts;
    opts.budget = budget;
    opts.escape_radius = escape_radius;
    return classify_rescaled(plain(window, Family::Antiholomorphic, Plane::Parameter, {}), opts);
}

RescaledWindow rescaled_julia_window(const RescaleData& d, int k, double r, int resolution) {
    return make_rescaled(Family::Quadratic, Plane::Dynamical, d.base.c0, rho_k(d, k), {}, r, resolution);
}

RescaledWindow rescaled_param_window(const RescaleData& d, int k, double r, int resolution) {
    return make_rescaled(Family::Quadratic, Plane::Parameter, d.base.c0, d.Q * rho_k(d, k), {}, r,
                         resolution);
}

RescaledWindow rescaled_julia_window(const TricornData& d, int k, double r, int resolution) {
    return make_rescaled(Family::Antiholomorphic, Plane::Dynamical, d.c0, rho_k(d, k), {}, r, resolution);
}

RescaledWindow rescaled_param_window(const TricornData& d, int k, double r, int resolution) {
    // H(rho w) = Q rho w + Q' conj(rho) conj(w)
    const Complex rho = rho_k(d, k);
    return make_rescaled(Family::Antiholomorphic, Plane::Parameter, d.c0, d.Q * rho, d.Qp * std::conj(rho), r,
                         resolution);
}

PlanarSet extract_boundary(const MembershipGrid& grid, bool frame_is_outside) {
    const int res = grid.resolution();
    if (grid.count() == 0) throw Error(ErrorKind::EmptySet, "grid has no member pixels");
    PlanarSet out;
    out.scale_hint = grid.window.pitch();
    auto outside = [&](int i, int j) {
        if (i < 0 || j < 0 || i >= res || j >= res) return frame_is_outside;
        return !grid.at(i, j);
    };
    for (int j = 0; j < res; ++j) {
        for (int i = 0; i < res; ++i) {
            if (!grid.at(i, j)) continue;
            if (outside(i - 1, j) || outside(i + 1, j) || outside(i, j - 1) || outside(i, j + 1)) {
                out.points.push_back(grid.window.pixel(i, j));
            }
        }
    }
    return out;
}

PlanarSet truncate(const PlanarSet& set, double r, int circle_samples) {
    if (!(r > 0.0)) throw Error(ErrorKind::InvalidArgument, "r must be positive");
    PlanarSet out;
    out.scale_hint = set.scale_hint;
    out.points.reserve(set.points.size() + std::max(circle_samples, 0));
    for (Complex z : set.points) {
        if (std::abs(z) <= r) out.points.push_back(z);
    }
    for (int s = 0; s < circle_samples; ++s) {
        const double t = 2.0 * std::numbers::pi * s / circle_samples;
        out.points.emplace_back(r * std::cos(t), r * std::sin(t));
    }
    return out;
}

}  // namespace msim
