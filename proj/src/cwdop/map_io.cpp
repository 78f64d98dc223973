#include "cwdop/map_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cwdop {

namespace {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void check_map(const VelocityMap& map) {
    if (map.rows.empty()) throw std::invalid_argument("velocity map is empty");
    const auto n_bins = map.rows.front().velocities.size();
    for (const auto& row : map.rows)
        if (row.velocities.size() != n_bins || row.magnitudes.size() != n_bins)
            throw std::invalid_argument("velocity map rows disagree on bin count");
}

std::ofstream open_binary(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

}  // namespace

void write_velocity_map_csv(const VelocityMap& map, std::ostream& out) {
    check_map(map);
    const auto& axis = map.rows.front().velocities;
    for (std::size_t i = 0; i < axis.size(); ++i)
        out << (i ? "," : "") << format_double(axis[i]);
    out << '\n';
    for (const auto& row : map.rows) {
        for (std::size_t i = 0; i < row.magnitudes.size(); ++i)
            out << (i ? "," : "") << format_double(row.magnitudes[i]);
        out << '\n';
    }
}

void write_velocity_map_csv(const VelocityMap& map, const std::string& path) {
    auto out = open_binary(path);
    write_velocity_map_csv(map, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_velocity_map_pgm(const VelocityMap& map, std::ostream& out) {
    check_map(map);
    const std::size_t width = map.rows.front().velocities.size();
    const std::size_t height = map.rows.size();

    // Log compression with a floor to keep exact zeros finite.
    constexpr double kFloor = 1e-30;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& row : map.rows)
        for (const double m : row.magnitudes) {
            const double level = std::log10(std::max(m, kFloor));
            lo = std::min(lo, level);
            hi = std::max(hi, level);
        }
    const double span = hi - lo;

    out << "P5\n" << width << ' ' << height << "\n255\n";
    std::string scanline(width, '\0');
    for (const auto& row : map.rows) {
        for (std::size_t i = 0; i < width; ++i) {
            const double level = std::log10(std::max(row.magnitudes[i], kFloor));
            const double unit = span > 0.0 ? (level - lo) / span : 0.0;
            scanline[i] = static_cast<char>(
                static_cast<unsigned char>(std::lround(unit * 255.0)));
        }
        out.write(scanline.data(), static_cast<std::streamsize>(width));
    }
}

void write_velocity_map_pgm(const VelocityMap& map, const std::string& path) {
    auto out = open_binary(path);
    write_velocity_map_pgm(map, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace cwdop
