#include "cwdop/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cwdop/radar_config.hpp"

namespace cwdop {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const ArrayGeometry& g) {
    if (g.n_elements < 1) throw std::invalid_argument("array: n_elements must be >= 1");
    if (!(g.pitch_m > 0.0)) throw std::invalid_argument("array: pitch must be positive");
    if (!(g.element_length_m > 0.0) || !(g.element_width_m > 0.0))
        throw std::invalid_argument("array: element dimensions must be positive");
    if (g.bend_radius_m &&
        !(*g.bend_radius_m > g.n_elements * g.pitch_m / kPi))
        throw std::invalid_argument(
            "array: bend radius too small, array would subtend >= 180 degrees");
}

Vec3 direction(double theta, double psi) {
    return {std::sin(theta) * std::cos(psi), std::sin(psi),
            std::cos(theta) * std::cos(psi)};
}

// Cosine element about its own normal, clamped to zero behind.
double element_gain(const Vec3& u, const Vec3& normal) {
    return std::max(dot(u, normal), 0.0);
}

std::complex<double> field_at(const ElementPlacement& placement,
                              std::span<const std::complex<double>> excitation,
                              double k, const Vec3& u) {
    std::complex<double> sum(0.0, 0.0);
    for (std::size_t n = 0; n < placement.positions.size(); ++n) {
        const double e = element_gain(u, placement.normals[n]);
        if (e == 0.0) continue;
        const double phase = k * dot(placement.positions[n], u);
        sum += excitation[n] * e * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return sum;
}

}  // namespace

ElementPlacement element_placement(const ArrayGeometry& geom) {
    validate(geom);
    ElementPlacement out;
    out.positions.reserve(static_cast<std::size_t>(geom.n_elements));
    out.normals.reserve(static_cast<std::size_t>(geom.n_elements));
    const double mid = 0.5 * (geom.n_elements - 1);
    for (int i = 0; i < geom.n_elements; ++i) {
        const double s = (i - mid) * geom.pitch_m;  // arc length from array center
        if (!geom.bend_radius_m) {
            out.positions.push_back({s, 0.0, 0.0});
            out.normals.push_back({0.0, 0.0, 1.0});
        } else {
            const double radius = *geom.bend_radius_m;
            const double alpha = s / radius;
            out.positions.push_back(
                {radius * std::sin(alpha), 0.0, radius * (std::cos(alpha) - 1.0)});
            out.normals.push_back({std::sin(alpha), 0.0, std::cos(alpha)});
        }
    }
    return out;
}

PatternCut array_pattern(const ArrayGeometry& geom,
                         std::span<const std::complex<double>> excitation,
                         double frequency_hz, std::span<const double> angles_rad) {
    const auto placement = element_placement(geom);
    if (excitation.size() != placement.positions.size())
        throw std::invalid_argument("array_pattern: excitation length must equal n_elements");
    const double k = 2.0 * kPi / wavelength(frequency_hz);

    PatternCut cut;
    cut.frequency_hz = frequency_hz;
    cut.angles_rad.assign(angles_rad.begin(), angles_rad.end());
    cut.values.reserve(angles_rad.size());
    for (const double theta : angles_rad)
        cut.values.push_back(std::abs(field_at(placement, excitation, k, direction(theta, 0.0))));
    return cut;
}

DirectivityResult directivity(const FieldFn& field, double frequency_hz,
                              double step_rad) {
    if (!(step_rad > 0.0) || step_rad > kPi / 180.0 + 1e-12)
        throw std::invalid_argument("directivity: step must be positive and at most 1 degree");

    const auto n_theta = static_cast<std::size_t>(std::lround(2.0 * kPi / step_rad)) + 1;
    const auto n_psi = static_cast<std::size_t>(std::lround(kPi / step_rad)) + 1;
    const double dtheta = 2.0 * kPi / static_cast<double>(n_theta - 1);
    const double dpsi = kPi / static_cast<double>(n_psi - 1);

    // Trapezoidal integral of |F|^2 cos(psi) over the sphere; cos(psi)
    // vanishes at the psi endpoints, so only theta needs edge weights.
    double integral = 0.0;
    double peak_sq = 0.0;
    for (std::size_t it = 0; it < n_theta; ++it) {
        const double theta = -kPi + static_cast<double>(it) * dtheta;
        const double wt = (it == 0 || it == n_theta - 1) ? 0.5 : 1.0;
        for (std::size_t ip = 0; ip < n_psi; ++ip) {
            const double psi = -kPi / 2.0 + static_cast<double>(ip) * dpsi;
            const double wp = (ip == 0 || ip == n_psi - 1) ? 0.5 : 1.0;
            const double mag = field(theta, psi);
            const double sq = mag * mag;
            peak_sq = std::max(peak_sq, sq);
            integral += wt * wp * sq * std::cos(psi);
        }
    }
    integral *= dtheta * dpsi;
    if (!(integral > 0.0)) throw std::domain_error("directivity: field is zero everywhere");

    const double to_d = 4.0 * kPi / integral;
    DirectivityResult result;
    result.peak_dbi = 10.0 * std::log10(to_d * peak_sq);
    result.cut_dbi.frequency_hz = frequency_hz;
    const auto n_cut = static_cast<std::size_t>(std::lround(kPi / step_rad)) + 1;
    for (std::size_t i = 0; i < n_cut; ++i) {
        const double theta = -kPi / 2.0 + static_cast<double>(i) * dpsi;
        const double mag = field(theta, 0.0);
        result.cut_dbi.angles_rad.push_back(theta);
        result.cut_dbi.values.push_back(
            mag > 0.0 ? 10.0 * std::log10(to_d * mag * mag)
                      : -300.0);  // floor for zero field
    }
    return result;
}

DirectivityResult directivity(const PatternCut& cut, double step_rad) {
    if (cut.angles_rad.size() < 2 || cut.angles_rad.size() != cut.values.size())
        throw std::invalid_argument("directivity: malformed cut");
    if (!std::is_sorted(cut.angles_rad.begin(), cut.angles_rad.end()))
        throw std::invalid_argument("directivity: cut angles must ascend");

    auto interp = [&cut](double theta) -> double {
        if (theta < cut.angles_rad.front() || theta > cut.angles_rad.back()) return 0.0;
        const auto it = std::upper_bound(cut.angles_rad.begin(), cut.angles_rad.end(), theta);
        const auto hi = std::min<std::size_t>(
            static_cast<std::size_t>(it - cut.angles_rad.begin()), cut.angles_rad.size() - 1);
        const auto lo = hi == 0 ? 0 : hi - 1;
        if (hi == lo) return cut.values[lo];
        const double t = (theta - cut.angles_rad[lo]) /
                         (cut.angles_rad[hi] - cut.angles_rad[lo]);
        return cut.values[lo] + t * (cut.values[hi] - cut.values[lo]);
    };
    const FieldFn separable = [interp](double theta, double psi) {
        return interp(theta) * std::max(std::cos(psi), 0.0);
    };
    return directivity(separable, cut.frequency_hz, step_rad);
}

DirectivityResult array_directivity(const ArrayGeometry& geom,
                                    std::span<const std::complex<double>> excitation,
                                    double frequency_hz) {
    const auto placement = element_placement(geom);
    if (excitation.size() != placement.positions.size())
        throw std::invalid_argument("array_directivity: excitation length must equal n_elements");
    const double k = 2.0 * kPi / wavelength(frequency_hz);
    std::vector<std::complex<double>> exc(excitation.begin(), excitation.end());
    const FieldFn field = [placement, exc, k](double theta, double psi) {
        return std::abs(field_at(placement, exc, k, direction(theta, psi)));
    };
    return directivity(field, frequency_hz);
}

double bend_gain_drop(const ArrayGeometry& flat, const ArrayGeometry& bent,
                      std::span<const std::complex<double>> excitation,
                      double frequency_hz) {
    if (flat.n_elements != bent.n_elements || flat.pitch_m != bent.pitch_m ||
        flat.element_length_m != bent.element_length_m ||
        flat.element_width_m != bent.element_width_m)
        throw std::invalid_argument(
            "bend_gain_drop: geometries may differ only in bend radius");
    const double flat_peak = array_directivity(flat, excitation, frequency_hz).peak_dbi;
    const double bent_peak = array_directivity(bent, excitation, frequency_hz).peak_dbi;
    return flat_peak - bent_peak;
}

}  // namespace cwdop
