#include "mmground/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mmground/errors.hpp"

namespace mmground::io {

std::uint64_t fnv1a64(std::span<const char> bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : bytes) {
        h ^= std::uint8_t(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a64_hex(std::span<const char> bytes) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a64(bytes));
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    out.write(content.data(), std::streamsize(content.size()));
    if (!out) throw IoError("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path);
    return content;
}

void ensure_directory(const std::string& path) {
    std::error_code ec;
    std::filesystem::create_directories(path, ec);
    if (ec) throw IoError("cannot create directory: " + path + " (" + ec.message() + ")");
}

std::string encode_pgm(std::size_t width, std::size_t height,
                       const std::vector<std::uint8_t>& pixels) {
    if (pixels.size() != width * height) {
        throw ParameterError("encode_pgm: pixel buffer does not match dimensions");
    }
    char header[64];
    std::snprintf(header, sizeof header, "P5\n%zu %zu\n255\n", width, height);
    std::string out(header);
    out.append(reinterpret_cast<const char*>(pixels.data()), pixels.size());
    return out;
}

std::string render_series_pgm(const std::vector<double>& values,
                              std::size_t width, std::size_t height) {
    std::vector<std::uint8_t> img(width * height, 255);
    auto put = [&](std::size_t x, std::size_t y, std::uint8_t v) {
        if (x < width && y < height) img[y * width + x] = v;
    };

    // frame
    for (std::size_t x = 0; x < width; ++x) {
        put(x, 0, 0);
        put(x, height - 1, 0);
    }
    for (std::size_t y = 0; y < height; ++y) {
        put(0, y, 0);
        put(width - 1, y, 0);
    }
    for (int gl = 1; gl < 4; ++gl) {
        std::size_t y = gl * height / 4;
        for (std::size_t x = 1; x + 1 < width; ++x) put(x, y, 220);
    }
    if (values.empty()) return encode_pgm(width, height, img);

    double lo = *std::min_element(values.begin(), values.end());
    double hi = *std::max_element(values.begin(), values.end());
    if (hi - lo < 1e-12) {
        lo -= 1.0;
        hi += 1.0;
    }
    const double margin = 0.05 * (hi - lo);
    lo -= margin;
    hi += margin;

    auto to_y = [&](double v) {
        double t = (v - lo) / (hi - lo);
        return std::size_t(std::lround((1.0 - t) * double(height - 3))) + 1;
    };
    auto to_x = [&](std::size_t i) {
        if (values.size() == 1) return width / 2;
        return 1 + i * (width - 3) / (values.size() - 1);
    };

    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        // integer line walk between consecutive points
        long x0 = long(to_x(i)), y0 = long(to_y(values[i]));
        long x1 = long(to_x(i + 1)), y1 = long(to_y(values[i + 1]));
        long steps = std::max(std::labs(x1 - x0), std::labs(y1 - y0));
        if (steps == 0) steps = 1;
        for (long s = 0; s <= steps; ++s) {
            long x = x0 + (x1 - x0) * s / steps;
            long y = y0 + (y1 - y0) * s / steps;
            put(std::size_t(x), std::size_t(y), 0);
        }
    }
    return encode_pgm(width, height, img);
}

}  // namespace mmground::io
