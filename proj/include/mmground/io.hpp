#ifndef MMGROUND_IO_HPP
#define MMGROUND_IO_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mmground::io {

// FNV-1a 64-bit over bytes; used for the artifact manifest.
std::uint64_t fnv1a64(std::span<const char> bytes);
std::string fnv1a64_hex(std::span<const char> bytes);

// Throws IoError (message includes the path) on failure.
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);
void ensure_directory(const std::string& path);

// Binary PGM (P5), 8-bit grayscale, row 0 at the top.
std::string encode_pgm(std::size_t width, std::size_t height,
                       const std::vector<std::uint8_t>& pixels);

// Minimal time-series plot: polyline of values over a framed canvas with
// light horizontal gridlines. Returns PGM bytes.
std::string render_series_pgm(const std::vector<double>& values,
                              std::size_t width = 800, std::size_t height = 400);

}  // namespace mmground::io

#endif
