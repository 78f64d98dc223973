#ifndef CWDOP_TRAJECTORY_HPP
#define CWDOP_TRAJECTORY_HPP

#include <vector>

namespace cwdop {

enum class TrajectoryKind { radial_shuttle, crossing, constant_radial, piecewise };

// Back-and-forth radial run: approach at -speed, pause, depart at +speed,
// pause; repeated `cycles` times. Starts at the far point, approaching.
struct ShuttleParams {
    double near_range_m = 0.5;
    double far_range_m  = 4.0;
    double speed_mps    = 1.0;
    double dwell_s      = 0.0;  // pause at each turn point
    int    cycles       = 1;
};

// Straight-line pass at fixed perpendicular offset from the radar, sweeping
// laterally from -half_span to +half_span, then back, `passes` times.
struct CrossingParams {
    double closest_approach_m = 0.5;
    double speed_mps          = 1.0;
    double half_span_m        = 2.0;
    int    passes             = 1;
};

struct RangeSample {
    double range_m;
    double range_rate_mps;  // dR/dt; positive = departing
};

// Immutable time-parameterized target path exposing analytic range and
// range-rate. All kinds except `crossing` reduce to piecewise-linear range.
class Trajectory {
public:
    struct Segment {
        double duration_s;
        double range_rate_mps;
    };

    static Trajectory radial_shuttle(const ShuttleParams& p);
    static Trajectory crossing(const CrossingParams& p);
    static Trajectory constant_radial(double start_range_m, double speed_mps,
                                      double duration_s);
    static Trajectory piecewise(double start_range_m,
                                const std::vector<Segment>& segments);

    TrajectoryKind kind() const { return kind_; }
    double duration_s() const { return duration_; }

    // Range and range-rate at t in [0, duration]; throws std::domain_error
    // outside. Switching instants take the right-hand limit (left-hand at
    // t == duration, where no right segment exists).
    RangeSample at(double t) const;

private:
    Trajectory() = default;

    RangeSample crossing_at(double t) const;

    TrajectoryKind kind_ = TrajectoryKind::piecewise;
    double duration_ = 0.0;

    // Piecewise-linear representation (all kinds except crossing).
    std::vector<double> seg_start_t_;
    std::vector<double> seg_start_range_;
    std::vector<double> seg_rate_;

    // Crossing geometry.
    CrossingParams cross_{};
    double pass_duration_ = 0.0;
};

}  // namespace cwdop

#endif
