#pragma once

#include <cstdint>
#include <vector>

#include "msim/complex.hpp"
#include "msim/dynamics.hpp"
#include "msim/rescale.hpp"
#include "msim/tricorn.hpp"

namespace msim {

/// Square pixel window. Pixel (i, j) has its center at
/// center + width ((i+0.5)/res - 0.5) + 1i width ((j+0.5)/res - 0.5); j grows upward.
struct Window {
    Complex center{};
    double width = 4.0;
    int resolution = 512;

    // offsets written as (2i + 1 - res) / (2 res) so mirrored pixels get exactly negated offsets
    double offset(int i) const {
        return width * static_cast<double>(2 * i + 1 - resolution) / (2.0 * resolution);
    }
    Complex pixel(int i, int j) const { return center + Complex(offset(i), offset(j)); }
    double pitch() const { return width / resolution; }
};

struct MembershipGrid {
    Window window;
    int budget = kDefaultBudget;
    std::vector<std::uint8_t> bits;  // index j * res + i, 1 = member

    int resolution() const { return window.resolution; }
    bool at(int i, int j) const { return bits[static_cast<std::size_t>(j) * window.resolution + i] != 0; }
    std::size_t count() const;
};

/// Finite point cloud standing in for a compact planar set.
struct PlanarSet {
    std::vector<Complex> points;
    double scale_hint = 0.0;  // pitch of the grid the points came from
};

enum class Plane { Dynamical, Parameter };

enum class Coverage {
    PixelCenter,       // member iff the pixel center stays bounded for the budget
    DistanceEstimate,  // also member when the estimated distance to the set is below a pixel fraction
};

struct ClassifyOptions {
    int budget = kDefaultBudget;
    double escape_radius = kEscapeRadius;
    Coverage coverage = Coverage::PixelCenter;
    double de_fraction = 0.75;  // of the pixel pitch, in window coordinates; just above the half diagonal
};

/// Window in a w-plane together with the real-affine map taking w to the
/// sampled plane: w -> origin + scale w + conj_scale conj(w). Every pixel is
/// mapped pointwise, so real-linear (non-conformal) zooms are sampled exactly.
struct RescaledWindow {
    Window w_window;
    Family family = Family::Quadratic;
    Plane plane = Plane::Dynamical;
    Complex c{};  // parameter used on the dynamical plane
    Complex origin{};
    Complex scale{1.0};
    Complex conj_scale{};

    Complex map(Complex w) const { return origin + scale * w + conj_scale * std::conj(w); }
    /// Smallest stretch factor of the map.
    double min_stretch() const { return std::abs(std::abs(scale) - std::abs(conj_scale)); }
};

MembershipGrid classify_julia(Complex c, const Window& window, int budget = kDefaultBudget,
                              bool anti = false, double escape_radius = kEscapeRadius);
MembershipGrid classify_mandelbrot(const Window& window, int budget = kDefaultBudget,
                                   double escape_radius = kEscapeRadius);
MembershipGrid classify_tricorn(const Window& window, int budget = kDefaultBudget,
                                double escape_radius = kEscapeRadius);

/// Membership over the w-grid of a rescaled window. The grid's window is the
/// w-plane window, so extracted points are already pulled back.
MembershipGrid classify_rescaled(const RescaledWindow& rw, const ClassifyOptions& opts = {});

/// w in D(r) -> z = c0 + rho_k w.
RescaledWindow rescaled_julia_window(const RescaleData& d, int k, double r, int resolution);
/// w in D(r) -> c = c0 + Q rho_k w.
RescaledWindow rescaled_param_window(const RescaleData& d, int k, double r, int resolution);
RescaledWindow rescaled_julia_window(const TricornData& d, int k, double r, int resolution);
/// w in D(r) -> c = c0 + H(rho_k w).
RescaledWindow rescaled_param_window(const TricornData& d, int k, double r, int resolution);

/// Relative floor on the sampled-plane pixel pitch; finer windows are
/// rejected with RangeExceeded because double rounding of c0 + pixel offset
/// would dominate.
inline constexpr double kMinRelativePitch = 1e-13;

/// Centers of member pixels with at least one non-member 4-neighbour.
/// Out-of-grid neighbours count as non-members only when frame_is_outside.
/// Throws EmptySet when the grid has no member pixel.
PlanarSet extract_boundary(const MembershipGrid& grid, bool frame_is_outside = false);

/// (K n D(r)) u dD(r), the circle sampled at circle_samples equispaced points.
PlanarSet truncate(const PlanarSet& set, double r, int circle_samples);

}  // namespace msim
