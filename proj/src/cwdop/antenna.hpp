#ifndef CWDOP_ANTENNA_HPP
#define CWDOP_ANTENNA_HPP

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace cwdop {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

// 8x1 series-fed patch array geometry, flat or conformally bent on a
// cylinder. Element dimensions are descriptive; the pattern model treats
// each element as a cosine radiator about its normal.
struct ArrayGeometry {
    int n_elements = 8;
    double pitch_m = 6.56e-3;           // element center-to-center
    double element_length_m = 3.12e-3;
    double element_width_m = 4.10e-3;
    std::optional<double> bend_radius_m;  // empty = flat
};

struct ElementPlacement {
    std::vector<Vec3> positions;
    std::vector<Vec3> normals;
};

// Flat: collinear points at pitch spacing along x, normals +z. Bent: points
// on a circular arc (arc-length spacing = pitch) in the xz-plane, normals
// radial. The bend keeps the array centered on broadside.
ElementPlacement element_placement(const ArrayGeometry& geom);

// One principal-plane cut. `values` hold field magnitudes for array_pattern
// and dBi for directivity.
struct PatternCut {
    std::vector<double> angles_rad;
    std::vector<double> values;
    double frequency_hz = 0.0;
};

// F(theta) = sum_n a_n * max(u.normal_n, 0) * exp(j k r_n.u) evaluated in
// the bending plane; u(theta) = (sin theta, 0, cos theta).
PatternCut array_pattern(const ArrayGeometry& geom,
                         std::span<const std::complex<double>> excitation,
                         double frequency_hz, std::span<const double> angles_rad);

struct DirectivityResult {
    double peak_dbi = 0.0;
    PatternCut cut_dbi;  // bending-plane cut over [-pi/2, pi/2]
};

// Field magnitude over the sphere, parameterized by the in-plane angle theta
// (from broadside) and the out-of-plane elevation psi.
using FieldFn = std::function<double(double theta, double psi)>;

// D = 4 pi |F|^2 / integral(|F|^2 dOmega), trapezoidal quadrature at the
// given angular step (default 0.5 degrees). Throws on an all-zero field.
DirectivityResult directivity(const FieldFn& field, double frequency_hz,
                              double step_rad = 0.5 * 3.14159265358979323846 / 180.0);

// Cut-based overload: extends the cut separably with a cos(psi) profile in
// the orthogonal plane, zero outside the cut's angle range.
DirectivityResult directivity(const PatternCut& cut,
                              double step_rad = 0.5 * 3.14159265358979323846 / 180.0);

// Directivity of the geometry's own 3D field (cosine elements about each
// element normal).
DirectivityResult array_directivity(const ArrayGeometry& geom,
                                    std::span<const std::complex<double>> excitation,
                                    double frequency_hz);

// Peak directivity loss of the bent geometry relative to the flat one.
// Geometries must match in everything except bend radius.
double bend_gain_drop(const ArrayGeometry& flat, const ArrayGeometry& bent,
                      std::span<const std::complex<double>> excitation,
                      double frequency_hz);

}  // namespace cwdop

#endif
