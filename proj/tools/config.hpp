#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "msim/complex.hpp"
#include "msim/dynamics.hpp"

namespace msim::cli {

enum class FamilyChoice { Quadratic, Tricorn };
enum class Format { Pgm, Png, Csv };

struct KRange {
    int from = 4;
    int to = 12;
};

/// Settings shared by every subcommand. Populated from an optional
/// key=value file first, then from command-line flags.
struct RunConfig {
    FamilyChoice family = FamilyChoice::Quadratic;
    Complex center_seed{};
    std::optional<int> l;
    std::optional<int> p;
    int budget = kDefaultBudget;
    int resolution = 512;
    double r = 2.0;
    std::optional<KRange> k_range;
    std::filesystem::path output_dir = ".";
    Format format = Format::Pgm;
    double escape_radius = kEscapeRadius;  // zoom panels only
    std::string check = "functional-equation";
};

/// Locale-independent parser for "a", "bi", "a+bi", "a-bi", "i", "-i" with
/// optional exponents on either part. Throws InvalidArgument.
Complex parse_complex(std::string_view text);
/// "a..b" or a single "k". Throws InvalidArgument.
KRange parse_k_range(std::string_view text);

/// Assigns one setting by its key name (the long flag name without dashes).
/// Throws InvalidArgument on unknown keys or malformed values.
void set_key(RunConfig& cfg, std::string_view key, std::string_view value);

/// Reads flat key=value lines; '#' starts a comment, blank lines are skipped.
void load_config_file(RunConfig& cfg, const std::filesystem::path& path);
void load_config_text(RunConfig& cfg, std::string_view text);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);
/// "a+bi" / "a-bi" built from format_double of each part.
std::string format_complex(Complex z);

}  // namespace msim::cli
