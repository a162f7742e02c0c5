#include "msim/image_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>

#include "msim/error.hpp"

namespace msim {

GrayImage to_image(const MembershipGrid& grid) {
    const int res = grid.resolution();
    GrayImage img{res, res, std::vector<std::uint8_t>(static_cast<std::size_t>(res) * res, kPaper)};
    for (int row = 0; row < res; ++row) {
        const int j = res - 1 - row;
        for (int i = 0; i < res; ++i) {
            if (grid.at(i, j)) img.pixels[static_cast<std::size_t>(row) * res + i] = kInk;
        }
    }
    return img;
}

GrayImage to_image(const PlanarSet& set, const Window& window) {
    const int res = window.resolution;
    GrayImage img{res, res, std::vector<std::uint8_t>(static_cast<std::size_t>(res) * res, kPaper)};
    const double left = window.center.real() - 0.5 * window.width;
    const double bottom = window.center.imag() - 0.5 * window.width;
    for (Complex z : set.points) {
        const double fi = std::floor((z.real() - left) / window.pitch());
        const double fj = std::floor((z.imag() - bottom) / window.pitch());
        if (!(fi >= 0 && fj >= 0 && fi < res && fj < res)) continue;
        const int row = res - 1 - static_cast<int>(fj);
        img.pixels[static_cast<std::size_t>(row) * res + static_cast<int>(fi)] = kInk;
    }
    return img;
}

std::string encode_pgm(const GrayImage& img) {
    std::string out = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
    return out;
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::IoError, "cannot open " + path.string());
    const std::string bytes = encode_pgm(img);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

void write_pgm(const MembershipGrid& grid, const std::filesystem::path& path) {
    write_pgm(to_image(grid), path);
}

void write_pgm(const PlanarSet& set, const Window& window, const std::filesystem::path& path) {
    write_pgm(to_image(set, window), path);
}

void write_png(const GrayImage& img, const std::filesystem::path& path) {
    std::unique_ptr<FILE, int (*)(FILE*)> file(std::fopen(path.string().c_str(), "wb"), &std::fclose);
    if (!file) throw Error(ErrorKind::IoError, "cannot open " + path.string());

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw Error(ErrorKind::IoError, "libpng initialisation failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw Error(ErrorKind::IoError, "PNG encoding failed for " + path.string());
    }
    png_init_io(png, file.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width), static_cast<png_uint_32>(img.height), 8,
                 PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int row = 0; row < img.height; ++row) {
        png_write_row(png, img.pixels.data() + static_cast<std::size_t>(row) * img.width);
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

}  // namespace msim
