#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "msim/complex.hpp"
#include "msim/render.hpp"
#include "msim/rescale.hpp"
#include "msim/tricorn.hpp"

namespace msim {

/// sup over a in `from` of the distance to the nearest point of `to`.
/// Nearest neighbours come from a uniform bucket grid with ring search; the
/// result is exactly the brute-force value.
double directed_hausdorff(std::span<const Complex> from, std::span<const Complex> to);

/// Symmetric Hausdorff distance. Throws EmptyInput if either side is empty.
double hausdorff_distance(std::span<const Complex> a, std::span<const Complex> b);
double hausdorff_distance(const PlanarSet& a, const PlanarSet& b);

struct ConvergenceRow {
    int k = 0;
    double rho_abs = 0.0;
    double d_julia = 0.0;
    double d_param = 0.0;
};

struct TableOptions {
    double r = 2.0;
    int resolution = 512;
    int budget = kDefaultBudget;
    int circle_samples = 0;  // 0 -> 4 * resolution
    double de_fraction = 0.75;

    double pitch() const { return 2.0 * r / resolution; }
};

/// Rescaled Julia and Mandelbrot sets at each depth k, pulled back to the
/// w-plane, truncated to D(r) and compared against the Julia-side set at the
/// deepest k (the proxy for the limit set).
std::vector<ConvergenceRow> similarity_table(const RescaleData& d, int k_from, int k_to,
                                             const TableOptions& opts = {});
/// Same with the tricorn pulled back through h = H^{-1}.
std::vector<ConvergenceRow> similarity_table_tricorn(const TricornData& d, int k_from, int k_to,
                                                     const TableOptions& opts = {});

/// Truncated boundary set of one rescaled window, as used by the tables.
PlanarSet rescaled_set(const RescaledWindow& rw, const TableOptions& opts);

/// d[i+1] <= d[i] + floor for every consecutive pair.
bool non_increasing_within(std::span<const double> seq, double floor);

/// "k,rho_abs,d_julia,d_param" with 12 significant digits, LF endings.
std::string to_csv(std::span<const ConvergenceRow> rows);
void write_csv(std::span<const ConvergenceRow> rows, const std::filesystem::path& path);

}  // namespace msim
