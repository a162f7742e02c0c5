#include "msim/hausdorff.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

#include "msim/error.hpp"
#include "parallel.hpp"

namespace msim {

namespace {

double dist2(Complex a, Complex b) {
    const double dx = a.real() - b.real();
    const double dy = a.imag() - b.imag();
    return dx * dx + dy * dy;
}

// Points bucketed into square cells of side h, stored contiguously per cell.
class BucketGrid {
public:
    explicit BucketGrid(std::span<const Complex> pts) {
        double xmin = pts[0].real(), xmax = xmin, ymin = pts[0].imag(), ymax = ymin;
        for (Complex z : pts) {
            xmin = std::min(xmin, z.real());
            xmax = std::max(xmax, z.real());
            ymin = std::min(ymin, z.imag());
            ymax = std::max(ymax, z.imag());
        }
        const double w = xmax - xmin;
        const double hgt = ymax - ymin;
        const double n = static_cast<double>(pts.size());
        h_ = w * hgt > 0.0 ? std::sqrt(w * hgt / n) : std::max(w, hgt) / n;
        if (!(h_ > 0.0)) h_ = 1.0;
        x0_ = xmin;
        y0_ = ymin;
        nx_ = static_cast<long long>(std::floor(w / h_)) + 1;
        ny_ = static_cast<long long>(std::floor(hgt / h_)) + 1;

        std::vector<std::size_t> cell_of(pts.size());
        start_.assign(static_cast<std::size_t>(nx_ * ny_) + 1, 0);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            cell_of[i] = cell_index(pts[i]);
            ++start_[cell_of[i] + 1];
        }
        for (std::size_t c = 1; c < start_.size(); ++c) start_[c] += start_[c - 1];
        std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
        pts_.resize(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) pts_[fill[cell_of[i]]++] = pts[i];
    }

    double nearest2(Complex q) const {
        const long long qx = cell_coord(q.real(), x0_);
        const long long qy = cell_coord(q.imag(), y0_);
        const long long r_first =
            std::max({0LL, -qx, qx - (nx_ - 1), -qy, qy - (ny_ - 1)});
        const long long r_last =
            std::max({std::llabs(qx), std::llabs(qx - (nx_ - 1)), std::llabs(qy), std::llabs(qy - (ny_ - 1))});
        double best = std::numeric_limits<double>::infinity();
        for (long long r = r_first; r <= r_last; ++r) {
            scan_ring(q, qx, qy, r, best);
            // cells beyond ring r are at least (r - 1) h away, one cell of slack
            // absorbing rounding in the cell assignment
            const double bound = static_cast<double>(r - 1) * h_;
            if (r >= 1 && best <= bound * bound) break;
        }
        return best;
    }

private:
    long long cell_coord(double v, double origin) const {
        return static_cast<long long>(std::floor((v - origin) / h_));
    }

    std::size_t cell_index(Complex z) const {
        const long long cx = std::clamp(cell_coord(z.real(), x0_), 0LL, nx_ - 1);
        const long long cy = std::clamp(cell_coord(z.imag(), y0_), 0LL, ny_ - 1);
        return static_cast<std::size_t>(cy * nx_ + cx);
    }

    void scan_cell(Complex q, long long cx, long long cy, double& best) const {
        if (cx < 0 || cy < 0 || cx >= nx_ || cy >= ny_) return;
        const std::size_t c = static_cast<std::size_t>(cy * nx_ + cx);
        for (std::size_t i = start_[c]; i < start_[c + 1]; ++i) best = std::min(best, dist2(q, pts_[i]));
    }

    void scan_ring(Complex q, long long qx, long long qy, long long r, double& best) const {
        if (r == 0) {
            scan_cell(q, qx, qy, best);
            return;
        }
        const long long x_lo = std::max(qx - r, 0LL), x_hi = std::min(qx + r, nx_ - 1);
        for (long long cx = x_lo; cx <= x_hi; ++cx) {
            scan_cell(q, cx, qy - r, best);
            scan_cell(q, cx, qy + r, best);
        }
        const long long y_lo = std::max(qy - r + 1, 0LL), y_hi = std::min(qy + r - 1, ny_ - 1);
        for (long long cy = y_lo; cy <= y_hi; ++cy) {
            scan_cell(q, qx - r, cy, best);
            scan_cell(q, qx + r, cy, best);
        }
    }

    double x0_ = 0, y0_ = 0, h_ = 1;
    long long nx_ = 1, ny_ = 1;
    std::vector<std::size_t> start_;
    std::vector<Complex> pts_;
};

}  // namespace

double directed_hausdorff(std::span<const Complex> from, std::span<const Complex> to) {
    if (from.empty() || to.empty()) throw Error(ErrorKind::EmptyInput, "Hausdorff distance of an empty set");
    const BucketGrid grid(to);
    constexpr int kChunks = 64;
    std::vector<double> worst(kChunks, 0.0);
    const std::size_t n = from.size();
    detail::parallel_for(kChunks, [&](int chunk) {
        const std::size_t lo = n * chunk / kChunks;
        const std::size_t hi = n * (chunk + 1) / kChunks;
        double w = 0.0;
        for (std::size_t i = lo; i < hi; ++i) w = std::max(w, grid.nearest2(from[i]));
        worst[chunk] = w;
    });
    return std::sqrt(*std::max_element(worst.begin(), worst.end()));
}

double hausdorff_distance(std::span<const Complex> a, std::span<const Complex> b) {
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double hausdorff_distance(const PlanarSet& a, const PlanarSet& b) {
    return hausdorff_distance(std::span<const Complex>(a.points), std::span<const Complex>(b.points));
}

PlanarSet rescaled_set(const RescaledWindow& rw, const TableOptions& opts) {
    ClassifyOptions copts;
    copts.budget = opts.budget;
    copts.coverage = Coverage::DistanceEstimate;
    copts.de_fraction = opts.de_fraction;
    const auto grid = classify_rescaled(rw, copts);
    PlanarSet boundary;
    boundary.scale_hint = grid.window.pitch();
    if (grid.count() > 0) boundary = extract_boundary(grid);
    const int samples = opts.circle_samples > 0 ? opts.circle_samples : 4 * opts.resolution;
    return truncate(boundary, opts.r, samples);
}

namespace {

template <class Data>
std::vector<ConvergenceRow> table_impl(const Data& d, int k_from, int k_to, const TableOptions& opts) {
    if (k_from < 0 || k_to < k_from) throw Error(ErrorKind::InvalidArgument, "empty k range");
    const PlanarSet reference = rescaled_set(rescaled_julia_window(d, k_to, opts.r, opts.resolution), opts);
    std::vector<ConvergenceRow> rows;
    for (int k = k_from; k <= k_to; ++k) {
        ConvergenceRow row;
        row.k = k;
        row.rho_abs = std::abs(rho_k(d, k));
        const PlanarSet jul = rescaled_set(rescaled_julia_window(d, k, opts.r, opts.resolution), opts);
        const PlanarSet par = rescaled_set(rescaled_param_window(d, k, opts.r, opts.resolution), opts);
        row.d_julia = hausdorff_distance(jul, reference);
        row.d_param = hausdorff_distance(par, reference);
        rows.push_back(row);
    }
    return rows;
}

void append_number(std::string& out, double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    out.append(buf, res.ptr);
}

}  // namespace

std::vector<ConvergenceRow> similarity_table(const RescaleData& d, int k_from, int k_to,
                                             const TableOptions& opts) {
    return table_impl(d, k_from, k_to, opts);
}

std::vector<ConvergenceRow> similarity_table_tricorn(const TricornData& d, int k_from, int k_to,
                                                     const TableOptions& opts) {
    return table_impl(d, k_from, k_to, opts);
}

bool non_increasing_within(std::span<const double> seq, double floor) {
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (seq[i] > seq[i - 1] + floor) return false;
    }
    return true;
}

std::string to_csv(std::span<const ConvergenceRow> rows) {
    std::string out = "k,rho_abs,d_julia,d_param\n";
    for (const auto& r : rows) {
        out += std::to_string(r.k);
        out += ',';
        append_number(out, r.rho_abs);
        out += ',';
        append_number(out, r.d_julia);
        out += ',';
        append_number(out, r.d_param);
        out += '\n';
    }
    return out;
}

void write_csv(std::span<const ConvergenceRow> rows, const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::IoError, "cannot open " + path.string());
    const std::string text = to_csv(rows);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

}  // namespace msim
