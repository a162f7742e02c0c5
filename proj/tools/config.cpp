#include "config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "msim/error.hpp"

namespace msim::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad(std::string_view what, std::string_view text) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + ": '" + std::string(text) + "'");
}

double parse_real(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) bad("not a complex number", whole);
    return v;
}

// coefficient of i: empty or a bare sign means one
double parse_imag(std::string_view s, std::string_view whole) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s, whole);
}

int parse_int(std::string_view s, std::string_view key) {
    int v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) bad("expected an integer for " + std::string(key), s);
    return v;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) bad("not a complex number", text);
    if (s.back() != 'i') return {parse_real(s, text), 0.0};

    const std::string_view body = s.substr(0, s.size() - 1);
    // the real/imaginary split is the last sign that is neither leading nor part of an exponent
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) return {0.0, parse_imag(body, text)};
    return {parse_real(body.substr(0, split), text), parse_imag(body.substr(split), text)};
}

KRange parse_k_range(std::string_view text) {
    const std::string_view s = trim(text);
    const auto dots = s.find("..");
    KRange k;
    if (dots == std::string_view::npos) {
        k.from = k.to = parse_int(s, "k");
    } else {
        k.from = parse_int(s.substr(0, dots), "k");
        k.to = parse_int(s.substr(dots + 2), "k");
    }
    if (k.from < 0 || k.to < k.from) bad("k range must be 0 <= from <= to", text);
    return k;
}

void set_key(RunConfig& cfg, std::string_view key, std::string_view raw) {
    const std::string_view value = trim(raw);
    if (key == "family") {
        if (value == "quadratic") cfg.family = FamilyChoice::Quadratic;
        else if (value == "tricorn") cfg.family = FamilyChoice::Tricorn;
        else bad("family must be quadratic or tricorn", value);
    } else if (key == "seed" || key == "center_seed") {
        cfg.center_seed = parse_complex(value);
    } else if (key == "l") {
        cfg.l = parse_int(value, key);
    } else if (key == "p") {
        cfg.p = parse_int(value, key);
    } else if (key == "budget") {
        cfg.budget = parse_int(value, key);
    } else if (key == "resolution") {
        cfg.resolution = parse_int(value, key);
    } else if (key == "r") {
        cfg.r = parse_real(value, value);
    } else if (key == "k" || key == "k_range") {
        cfg.k_range = parse_k_range(value);
    } else if (key == "out" || key == "output_dir") {
        cfg.output_dir = std::string(value);
    } else if (key == "format") {
        if (value == "pgm") cfg.format = Format::Pgm;
        else if (value == "png") cfg.format = Format::Png;
        else if (value == "csv") cfg.format = Format::Csv;
        else bad("format must be pgm, png or csv", value);
    } else if (key == "escape_radius") {
        cfg.escape_radius = parse_real(value, value);
    } else if (key == "check") {
        cfg.check = std::string(value);
    } else {
        bad("unknown setting", key);
    }
}

void load_config_text(RunConfig& cfg, std::string_view text) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            bad("config line " + std::to_string(line_no) + " is not key=value", line);
        }
        set_key(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
    }
}

void load_config_file(RunConfig& cfg, const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::IoError, "cannot read config " + path.string());
    std::ostringstream buf;
    buf << f.rdbuf();
    load_config_text(cfg, buf.str());
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

std::string format_complex(Complex z) {
    std::string out = format_double(z.real());
    const double im = z.imag();
    if (!std::signbit(im) || std::isnan(im)) out += '+';
    out += format_double(im);
    out += 'i';
    return out;
}

}  // namespace msim::cli
