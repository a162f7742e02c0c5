#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "msim/hausdorff.hpp"
#include "msim/image_io.hpp"
#include "msim/misiurewicz.hpp"
#include "msim/poincare.hpp"
#include "msim/render.hpp"
#include "msim/rescale.hpp"
#include "msim/tricorn.hpp"

namespace msim::cli {

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NoConvergence: return kNoConvergence;
        case ErrorKind::NotRepelling: return kNotRepelling;
        case ErrorKind::NotMinimal: return kNotMinimal;
        case ErrorKind::DegenerateA0:
        case ErrorKind::DegenerateB0:
        case ErrorKind::DegenerateTransversality: return kDegenerate;
        default: return kFailure;
    }
}

namespace {

bool explicit_lp(const RunConfig& cfg) {
    if (cfg.l.has_value() != cfg.p.has_value()) {
        throw Error(ErrorKind::InvalidArgument, "l and p must be given together");
    }
    return cfg.l.has_value();
}

RescaleData solve_quadratic(const RunConfig& cfg) {
    const MisiurewiczData m = explicit_lp(cfg) ? solve_misiurewicz(*cfg.l, *cfg.p, cfg.center_seed)
                                               : certify_near(cfg.center_seed);
    return compute_Q(m);
}

TricornData solve_tricorn(const RunConfig& cfg) {
    return explicit_lp(cfg) ? solve_tricorn_misiurewicz(*cfg.l, *cfg.p, cfg.center_seed)
                            : certify_tricorn_near(cfg.center_seed);
}

void kv(std::ostream& out, std::string_view key, Complex z) { out << key << '=' << format_complex(z) << '\n'; }
void kv(std::ostream& out, std::string_view key, double v) { out << key << '=' << format_double(v) << '\n'; }
void kv(std::ostream& out, std::string_view key, int v) { out << key << '=' << v << '\n'; }

KRange k_range_or(const RunConfig& cfg, KRange fallback) { return cfg.k_range.value_or(fallback); }

void write_panel(const MembershipGrid& grid, Format format, const std::filesystem::path& path) {
    if (format == Format::Png) {
        write_png(to_image(grid), path);
    } else {
        write_pgm(grid, path);
    }
}

void index_row(std::ostream& out, int k, std::string_view panel, const std::string& file,
               const RescaledWindow& rw) {
    out << k << ',' << panel << ',' << file << ',' << format_double(rw.origin.real()) << ','
        << format_double(rw.origin.imag()) << ',' << format_double(rw.scale.real()) << ','
        << format_double(rw.scale.imag()) << ',' << format_double(rw.conj_scale.real()) << ','
        << format_double(rw.conj_scale.imag()) << ',' << format_double(rw.w_window.pitch()) << '\n';
}

template <class Data>
int zoom_impl(const Data& d, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == Format::Csv) throw Error(ErrorKind::InvalidArgument, "zoom writes pgm or png panels");
    const KRange ks = k_range_or(cfg, {0, 10});
    const std::string ext = cfg.format == Format::Png ? ".png" : ".pgm";
    std::filesystem::create_directories(cfg.output_dir);

    ClassifyOptions opts;
    opts.budget = cfg.budget;
    opts.escape_radius = cfg.escape_radius;
    opts.coverage = Coverage::DistanceEstimate;

    std::ostringstream index;
    index << "k,panel,file,origin_re,origin_im,scale_re,scale_im,conj_scale_re,conj_scale_im,w_pitch\n";
    for (int k = ks.from; k <= ks.to; ++k) {
        const std::pair<std::string_view, RescaledWindow> panels[] = {
            {"jul", rescaled_julia_window(d, k, cfg.r, cfg.resolution)},
            {"par", rescaled_param_window(d, k, cfg.r, cfg.resolution)},
        };
        for (const auto& [name, rw] : panels) {
            const std::string file = std::string(name) + "_k" + std::to_string(k) + ext;
            write_panel(classify_rescaled(rw, opts), cfg.format, cfg.output_dir / file);
            index_row(index, k, name, file, rw);
        }
    }
    const std::string text = index.str();
    std::ofstream f(cfg.output_dir / "index.csv", std::ios::binary);
    f << text;
    if (!f) throw Error(ErrorKind::IoError, "cannot write index.csv");
    out << text;
    return kOk;
}

TableOptions table_options(const RunConfig& cfg) {
    TableOptions opts;
    opts.r = cfg.r;
    opts.resolution = cfg.resolution;
    opts.budget = cfg.budget;
    return opts;
}

// The scaled residual divides by max(1, |F(phi(w))|): for large multipliers
// phi(w) leaves the filled Julia set on D(1) and the values become huge.
bool check_functional_equation(const PoincareEvaluator& ev, std::ostream& out) {
    out << "w_re,w_im,residual,scaled_residual\n";
    double worst = 0.0;
    for (Complex w : polar_grid(1.0, 10, 10)) {
        const double res = functional_equation_residual(ev, w);
        const double scaled = res / std::max(1.0, std::abs(apply_return_map(ev, phi(ev, w))));
        worst = std::max(worst, scaled);
        out << format_double(w.real()) << ',' << format_double(w.imag()) << ',' << format_double(res) << ','
            << format_double(scaled) << '\n';
    }
    return worst < 1e-8;
}

bool check_cauchy(const PoincareEvaluator& ev, std::ostream& out) {
    constexpr int kBurnIn = 3;
    out << "w_re,w_im,steps,max_ratio\n";
    bool ok = true;
    for (Complex w : polar_grid(1.0, 4, 8)) {
        const PhiTrace t = phi_trace(ev, w);
        double ratio = 0.0;
        for (std::size_t n = kBurnIn + 1; n < t.increments.size(); ++n) {
            if (t.increments[n - 1] > 0.0) ratio = std::max(ratio, t.increments[n] / t.increments[n - 1]);
        }
        ok = ok && cauchy_rate_ok(t, ev.lambda0, kBurnIn);
        out << format_double(w.real()) << ',' << format_double(w.imag()) << ',' << t.increments.size() << ','
            << format_double(ratio) << '\n';
    }
    return ok;
}

bool check_intersection(const std::vector<LemmaRow>& rows, Complex lambda0, std::ostream& out) {
    out << "k,sup_phik_phi,sup_Phik_phi,sup_Phik_phik\n";
    std::vector<double> a, b, c;
    for (const auto& r : rows) {
        out << r.k << ',' << format_double(r.sup_phik_phi) << ',' << format_double(r.sup_Phik_phi) << ','
            << format_double(r.sup_Phik_phik) << '\n';
        a.push_back(r.sup_phik_phi);
        b.push_back(r.sup_Phik_phi);
        c.push_back(r.sup_Phik_phik);
    }
    const double bound = contraction_bound(lambda0);
    return contracts(a, bound) && contracts(b, bound) && contracts(c, bound);
}

PoincareEvaluator evaluator_for(const RescaleData& d) { return make_evaluator(d.base); }
PoincareEvaluator evaluator_for(const TricornData& d) { return make_evaluator(d); }

template <class Data>
int poincare_impl(const Data& d, Complex lambda0, const RunConfig& cfg, std::ostream& out) {
    const PoincareEvaluator ev = evaluator_for(d);
    bool ok;
    if (cfg.check == "functional-equation") {
        ok = check_functional_equation(ev, out);
    } else if (cfg.check == "cauchy") {
        ok = check_cauchy(ev, out);
    } else if (cfg.check == "intersection") {
        const KRange ks = k_range_or(cfg, {5, 12});
        ok = check_intersection(lemma_convergence(d, ks.from, ks.to), lambda0, out);
    } else {
        throw Error(ErrorKind::InvalidArgument, "check must be functional-equation, intersection or cauchy");
    }
    return ok ? kOk : kCheckFailed;
}

}  // namespace

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    if (cfg.family == FamilyChoice::Quadratic) {
        const RescaleData d = solve_quadratic(cfg);
        out << "family=quadratic\n";
        kv(out, "c0", d.base.c0);
        kv(out, "l", d.base.l);
        kv(out, "p", d.base.p);
        kv(out, "a0", d.base.a0);
        kv(out, "lambda0", d.base.lambda0);
        kv(out, "A0", d.A0);
        kv(out, "B0", d.B0);
        kv(out, "Q", d.Q);
        kv(out, "q", d.q);
        kv(out, "residual", d.base.residual);
    } else {
        const TricornData d = solve_tricorn(cfg);
        const Complex w(0.6, -0.8);
        out << "family=tricorn\n";
        kv(out, "c0", d.c0);
        kv(out, "l", d.l);
        kv(out, "p", d.p);
        kv(out, "a0", d.a0);
        kv(out, "lambda0", d.lambda0);
        kv(out, "A0", d.A0);
        kv(out, "B0", d.B0);
        kv(out, "B0p", d.B0p);
        kv(out, "Q", d.Q);
        kv(out, "Qp", d.Qp);
        kv(out, "residual", d.residual);
        kv(out, "inverse_residual", std::abs(apply_h(d.H(), apply_H(d.H(), w)) - w));
    }
    return kOk;
}

int cmd_zoom(const RunConfig& cfg, std::ostream& out) {
    if (cfg.family == FamilyChoice::Quadratic) return zoom_impl(solve_quadratic(cfg), cfg, out);
    return zoom_impl(solve_tricorn(cfg), cfg, out);
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
    const KRange ks = k_range_or(cfg, {4, 12});
    const auto rows = cfg.family == FamilyChoice::Quadratic
                          ? similarity_table(solve_quadratic(cfg), ks.from, ks.to, table_options(cfg))
                          : similarity_table_tricorn(solve_tricorn(cfg), ks.from, ks.to, table_options(cfg));
    out << to_csv(rows);
    return kOk;
}

int cmd_poincare(const RunConfig& cfg, std::ostream& out) {
    if (cfg.family == FamilyChoice::Quadratic) {
        const RescaleData d = solve_quadratic(cfg);
        return poincare_impl(d, d.base.lambda0, cfg, out);
    }
    const TricornData d = solve_tricorn(cfg);
    return poincare_impl(d, d.lambda0, cfg, out);
}

namespace {

struct Command {
    CLI::App* app;
    int (*run)(const RunConfig&, std::ostream&);
};

const std::pair<const char*, const char*> kSettings[] = {
    {"family", "quadratic or tricorn"},
    {"seed", "complex starting guess for c0, e.g. -2 or 0.1-0.6i"},
    {"l", "preperiod; with --p skips the (l, p) search"},
    {"p", "period"},
    {"budget", "escape-time iteration budget"},
    {"resolution", "pixels per side"},
    {"r", "radius of the w-disk D(r)"},
    {"k", "depth or depth range a..b"},
    {"out", "output directory for zoom panels"},
    {"format", "pgm, png or csv"},
    {"escape_radius", "escape radius for membership tests"},
    {"check", "functional-equation, cauchy or intersection"},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Misiurewicz similarity toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::map<std::string, std::string> flags;
    const std::pair<const char*, Command> commands[] = {
        {"solve", {app.add_subcommand("solve", "certify a Misiurewicz parameter and print its constants"),
                   &cmd_solve}},
        {"zoom", {app.add_subcommand("zoom", "render paired Julia/parameter zoom panels"), &cmd_zoom}},
        {"table", {app.add_subcommand("table", "Hausdorff convergence table as CSV"), &cmd_table}},
        {"poincare", {app.add_subcommand("poincare", "Poincare function diagnostics"), &cmd_poincare}},
    };
    for (const auto& [name, cmd] : commands) {
        cmd.app->add_option("--config", config_path, "key=value settings file; flags override it");
        for (const auto& [key, help] : kSettings) {
            cmd.app->add_option(std::string("--") + key, flags[key], help);
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    for (const auto& [name, cmd] : commands) {
        if (!cmd.app->parsed()) continue;
        try {
            RunConfig cfg;
            if (!config_path.empty()) load_config_file(cfg, config_path);
            for (const auto& [key, help] : kSettings) {
                if (cmd.app->get_option(std::string("--") + key)->count() > 0) set_key(cfg, key, flags[key]);
            }
            const int code = cmd.run(cfg, out);
            if (code == kCheckFailed) err << name << ": check failed\n";
            return code;
        } catch (const Error& e) {
            err << name << ": " << e.what() << '\n';
            return e.kind() == ErrorKind::InvalidArgument ? kUsage : exit_code_for(e.kind());
        } catch (const std::exception& e) {
            err << name << ": " << e.what() << '\n';
            return kFailure;
        }
    }
    return kUsage;
}

}  // namespace msim::cli
