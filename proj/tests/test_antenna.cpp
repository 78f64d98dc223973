#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cwdop/antenna.hpp"
#include "cwdop/radar_config.hpp"

using namespace cwdop;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFreq = 24.0e9;

std::vector<std::complex<double>> uniform_excitation(int n) {
    return std::vector<std::complex<double>>(static_cast<std::size_t>(n), {1.0, 0.0});
}

ArrayGeometry paper_flat() { return ArrayGeometry{}; }

ArrayGeometry paper_bent(double radius) {
    ArrayGeometry g;
    g.bend_radius_m = radius;
    return g;
}

std::vector<double> degree_grid(double lo_deg, double hi_deg, double step_deg) {
    std::vector<double> angles;
    for (double a = lo_deg; a <= hi_deg + 1e-9; a += step_deg)
        angles.push_back(a * kPi / 180.0);
    return angles;
}

}  // namespace

TEST_CASE("flat placement: collinear, centered, 45.92 mm between extremes") {
    const auto placement = element_placement(paper_flat());
    REQUIRE(placement.positions.size() == 8);
    CHECK(placement.positions.back().x - placement.positions.front().x ==
          doctest::Approx(0.04592).epsilon(1e-12));
    double mean_x = 0.0;
    for (const auto& p : placement.positions) {
        mean_x += p.x;
        CHECK(p.y == 0.0);
        CHECK(p.z == 0.0);
    }
    CHECK(std::abs(mean_x) <= 1e-15);
    for (const auto& n : placement.normals) {
        CHECK(n.x == 0.0);
        CHECK(n.z == 1.0);
    }
}

TEST_CASE("a huge bend radius recovers the flat placement") {
    const auto flat = element_placement(paper_flat());
    const auto nearly_flat = element_placement(paper_bent(1.0e6));
    for (std::size_t i = 0; i < flat.positions.size(); ++i) {
        CHECK(std::abs(flat.positions[i].x - nearly_flat.positions[i].x) <= 1e-9);
        CHECK(std::abs(flat.positions[i].z - nearly_flat.positions[i].z) <= 1e-9);
        // Normals tilt by s / radius, at most ~2.3e-8 rad here.
        CHECK(std::abs(flat.normals[i].x - nearly_flat.normals[i].x) <= 1e-7);
        CHECK(std::abs(flat.normals[i].z - nearly_flat.normals[i].z) <= 1e-7);
    }
}

TEST_CASE("bent placement: chord shorter than arc, radial unit normals") {
    const auto placement = element_placement(paper_bent(0.0841));
    const auto& first = placement.positions.front();
    const auto& last = placement.positions.back();
    const double chord = std::hypot(last.x - first.x, last.z - first.z);
    CHECK(chord < 0.04592);
    CHECK(chord > 0.045);  // gentle bend, nearly flat
    for (std::size_t i = 0; i < placement.normals.size(); ++i) {
        const auto& n = placement.normals[i];
        CHECK(std::hypot(n.x, n.z) == doctest::Approx(1.0).epsilon(1e-12));
    }
    // Symmetric tilts about broadside.
    CHECK(placement.normals.front().x ==
          doctest::Approx(-placement.normals.back().x).epsilon(1e-12));
}

TEST_CASE("geometry validation") {
    ArrayGeometry g;
    g.n_elements = 0;
    CHECK_THROWS_AS(element_placement(g), std::invalid_argument);
    g = ArrayGeometry{};
    g.pitch_m = 0.0;
    CHECK_THROWS_AS(element_placement(g), std::invalid_argument);
    g = ArrayGeometry{};
    g.bend_radius_m = 8 * 6.56e-3 / kPi * 0.99;  // subtends >= 180 degrees
    CHECK_THROWS_AS(element_placement(g), std::invalid_argument);
}

TEST_CASE("single element pattern is the bare cosine element") {
    ArrayGeometry g;
    g.n_elements = 1;
    const auto cut = array_pattern(g, uniform_excitation(1), kFreq,
                                   degree_grid(-90.0, 90.0, 5.0));
    for (std::size_t i = 0; i < cut.angles_rad.size(); ++i)
        CHECK(cut.values[i] ==
              doctest::Approx(std::max(std::cos(cut.angles_rad[i]), 0.0)).epsilon(1e-12));
}

TEST_CASE("flat uniform array: broadside peak of 8 elements, even symmetry") {
    const auto angles = degree_grid(-90.0, 90.0, 0.5);
    const auto cut = array_pattern(paper_flat(), uniform_excitation(8), kFreq, angles);
    const std::size_t mid = angles.size() / 2;
    CHECK(cut.values[mid] == doctest::Approx(8.0).epsilon(1e-12));
    std::size_t best = 0;
    for (std::size_t i = 1; i < cut.values.size(); ++i)
        if (cut.values[i] > cut.values[best]) best = i;
    CHECK(best == mid);
    for (std::size_t i = 0; i < angles.size(); ++i)
        CHECK(cut.values[i] ==
              doctest::Approx(cut.values[angles.size() - 1 - i]).epsilon(1e-9));
}

TEST_CASE("excitation length must match the element count") {
    CHECK_THROWS_AS(array_pattern(paper_flat(), uniform_excitation(5), kFreq,
                                  degree_grid(-90.0, 90.0, 5.0)),
                    std::invalid_argument);
}

TEST_CASE("progressive phase steers the beam to the commanded angle") {
    const double theta0 = 15.0 * kPi / 180.0;
    const auto placement = element_placement(paper_flat());
    const double k = 2.0 * kPi / wavelength(kFreq);
    std::vector<std::complex<double>> excitation;
    for (const auto& p : placement.positions)
        excitation.push_back(std::polar(1.0, -k * p.x * std::sin(theta0)));

    const auto angles = degree_grid(-90.0, 90.0, 0.5);
    const auto cut = array_pattern(paper_flat(), excitation, kFreq, angles);
    std::size_t best = 0;
    for (std::size_t i = 1; i < cut.values.size(); ++i)
        if (cut.values[i] > cut.values[best]) best = i;
    CHECK(std::abs(cut.angles_rad[best] - theta0) <= 0.5 * kPi / 180.0 + 1e-12);
}

TEST_CASE("directivity of an isotropic field is 0 dBi everywhere") {
    const auto result = directivity([](double, double) { return 1.0; }, kFreq);
    CHECK(std::abs(result.peak_dbi) <= 0.05);
    for (const double dbi : result.cut_dbi.values) CHECK(std::abs(dbi) <= 0.05);
}

TEST_CASE("uniform line of isotropic radiators matches the classical 2Nd/lambda") {
    // 8 elements at 0.525 lambda pitch; the estimate is 10 log10(2*8*0.525).
    const double lambda = wavelength(kFreq);
    ArrayGeometry g;
    g.pitch_m = 0.525 * lambda;
    const auto placement = element_placement(g);
    const double k = 2.0 * kPi / lambda;
    const FieldFn isotropic_elements = [&](double theta, double psi) {
        const Vec3 u{std::sin(theta) * std::cos(psi), std::sin(psi),
                     std::cos(theta) * std::cos(psi)};
        std::complex<double> sum(0.0, 0.0);
        for (const auto& p : placement.positions)
            sum += std::polar(1.0, k * dot(p, u));
        return std::abs(sum);
    };
    const auto result = directivity(isotropic_elements, kFreq);
    CHECK(std::abs(result.peak_dbi - 9.2428) <= 1.0);
}

TEST_CASE("directivity is invariant to excitation scale") {
    const auto full = array_directivity(paper_flat(), uniform_excitation(8), kFreq);
    std::vector<std::complex<double>> halved(8, {0.5, 0.0});
    const auto half = array_directivity(paper_flat(), halved, kFreq);
    CHECK(full.peak_dbi == doctest::Approx(half.peak_dbi).epsilon(1e-9));
}

TEST_CASE("quadrature converges: 1 degree agrees with 0.25 degree") {
    const ArrayGeometry g = paper_flat();
    const auto exc = uniform_excitation(8);
    const auto placement = element_placement(g);
    const double k = 2.0 * kPi / wavelength(kFreq);
    const FieldFn field = [&](double theta, double psi) {
        const Vec3 u{std::sin(theta) * std::cos(psi), std::sin(psi),
                     std::cos(theta) * std::cos(psi)};
        std::complex<double> sum(0.0, 0.0);
        for (std::size_t i = 0; i < placement.positions.size(); ++i) {
            const double e = std::max(dot(u, placement.normals[i]), 0.0);
            sum += exc[i] * e * std::polar(1.0, k * dot(placement.positions[i], u));
        }
        return std::abs(sum);
    };
    const double coarse = directivity(field, kFreq, 1.0 * kPi / 180.0).peak_dbi;
    const double fine = directivity(field, kFreq, 0.25 * kPi / 180.0).peak_dbi;
    // 2% in linear power is ~0.086 dB.
    CHECK(std::abs(coarse - fine) <= 0.086);
}

TEST_CASE("all-zero field has no directivity") {
    CHECK_THROWS_AS(directivity([](double, double) { return 0.0; }, kFreq),
                    std::domain_error);
}

TEST_CASE("separable cut extension approximates the full-sphere result") {
    const auto cut = array_pattern(paper_flat(), uniform_excitation(8), kFreq,
                                   degree_grid(-90.0, 90.0, 0.5));
    const auto from_cut = directivity(cut);
    const auto full = array_directivity(paper_flat(), uniform_excitation(8), kFreq);
    CHECK(std::abs(from_cut.peak_dbi - full.peak_dbi) <= 1.5);
}

TEST_CASE("bending by 84.1 mm costs 1-5 dB of peak directivity") {
    const double drop = bend_gain_drop(paper_flat(), paper_bent(0.0841),
                                       uniform_excitation(8), kFreq);
    CHECK(drop >= 1.0);
    CHECK(drop <= 5.0);
}

TEST_CASE("a gentle bend costs almost nothing") {
    const double drop = bend_gain_drop(paper_flat(), paper_bent(1.0e6),
                                       uniform_excitation(8), kFreq);
    CHECK(std::abs(drop) < 0.01);
}

TEST_CASE("the drop grows monotonically as the radius shrinks") {
    const auto exc = uniform_excitation(8);
    const double flat_peak = array_directivity(paper_flat(), exc, kFreq).peak_dbi;
    double previous_drop = 0.0;  // flat vs flat
    for (double radius : {0.3, 0.15, 0.0841}) {
        const double drop =
            flat_peak - array_directivity(paper_bent(radius), exc, kFreq).peak_dbi;
        CHECK(drop >= previous_drop);
        CHECK(drop >= 0.0);  // bent peak never beats flat for uniform excitation
        previous_drop = drop;
    }
}

TEST_CASE("bend_gain_drop rejects mismatched geometries") {
    ArrayGeometry other = paper_bent(0.0841);
    other.pitch_m = 7.0e-3;
    CHECK_THROWS_AS(bend_gain_drop(paper_flat(), other, uniform_excitation(8), kFreq),
                    std::invalid_argument);
}
