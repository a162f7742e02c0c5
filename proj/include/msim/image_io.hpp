#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "msim/render.hpp"

namespace msim {

/// 8-bit grayscale raster, rows stored top to bottom.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;
};

inline constexpr std::uint8_t kInk = 0;
inline constexpr std::uint8_t kPaper = 255;

/// Member pixels become ink. Grid row j = res - 1 is the top row.
GrayImage to_image(const MembershipGrid& grid);
/// Each point is dropped into the pixel of `window` containing it; points outside are ignored.
GrayImage to_image(const PlanarSet& set, const Window& window);

/// Binary P5 bytes: "P5\n<w> <h>\n255\n" followed by the raster.
std::string encode_pgm(const GrayImage& img);

void write_pgm(const GrayImage& img, const std::filesystem::path& path);
void write_pgm(const MembershipGrid& grid, const std::filesystem::path& path);
void write_pgm(const PlanarSet& set, const Window& window, const std::filesystem::path& path);

/// 8-bit grayscale PNG with the same pixel semantics as the PGM writer.
void write_png(const GrayImage& img, const std::filesystem::path& path);

}  // namespace msim
