#include "cwdop/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cwdop {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Trajectory Trajectory::radial_shuttle(const ShuttleParams& p) {
    require(std::isfinite(p.near_range_m) && std::isfinite(p.far_range_m) &&
                std::isfinite(p.speed_mps) && std::isfinite(p.dwell_s),
            "radial_shuttle: parameters must be finite");
    require(p.near_range_m > 0.0 && p.near_range_m < p.far_range_m,
            "radial_shuttle: requires 0 < near_range < far_range");
    require(p.speed_mps > 0.0, "radial_shuttle: speed must be positive");
    require(p.dwell_s >= 0.0, "radial_shuttle: dwell must be non-negative");
    require(p.cycles >= 1, "radial_shuttle: cycles must be >= 1");

    const double leg = (p.far_range_m - p.near_range_m) / p.speed_mps;
    const double cycle = 2.0 * leg + 2.0 * p.dwell_s;

    Trajectory traj;
    traj.kind_ = TrajectoryKind::radial_shuttle;
    traj.duration_ = p.cycles * cycle;
    // Breakpoints are built from k * cycle, not by accumulation, so every
    // cycle is exactly periodic.
    for (int k = 0; k < p.cycles; ++k) {
        const double t0 = k * cycle;
        traj.seg_start_t_.push_back(t0);
        traj.seg_start_range_.push_back(p.far_range_m);
        traj.seg_rate_.push_back(-p.speed_mps);
        if (p.dwell_s > 0.0) {
            traj.seg_start_t_.push_back(t0 + leg);
            traj.seg_start_range_.push_back(p.near_range_m);
            traj.seg_rate_.push_back(0.0);
        }
        traj.seg_start_t_.push_back(t0 + leg + p.dwell_s);
        traj.seg_start_range_.push_back(p.near_range_m);
        traj.seg_rate_.push_back(p.speed_mps);
        if (p.dwell_s > 0.0) {
            traj.seg_start_t_.push_back(t0 + 2.0 * leg + p.dwell_s);
            traj.seg_start_range_.push_back(p.far_range_m);
            traj.seg_rate_.push_back(0.0);
        }
    }
    return traj;
}

Trajectory Trajectory::crossing(const CrossingParams& p) {
    require(std::isfinite(p.closest_approach_m) && std::isfinite(p.speed_mps) &&
                std::isfinite(p.half_span_m),
            "crossing: parameters must be finite");
    require(p.closest_approach_m > 0.0, "crossing: closest_approach must be positive");
    require(p.speed_mps > 0.0, "crossing: speed must be positive");
    require(p.half_span_m > 0.0, "crossing: half_span must be positive");
    require(p.passes >= 1, "crossing: passes must be >= 1");

    Trajectory traj;
    traj.kind_ = TrajectoryKind::crossing;
    traj.cross_ = p;
    traj.pass_duration_ = 2.0 * p.half_span_m / p.speed_mps;
    traj.duration_ = p.passes * traj.pass_duration_;
    return traj;
}

Trajectory Trajectory::constant_radial(double start_range_m, double speed_mps,
                                       double duration_s) {
    require(std::isfinite(start_range_m) && std::isfinite(speed_mps) &&
                std::isfinite(duration_s),
            "constant_radial: parameters must be finite");
    require(start_range_m > 0.0, "constant_radial: start_range must be positive");
    require(duration_s > 0.0, "constant_radial: duration must be positive");
    require(start_range_m + speed_mps * duration_s > 0.0,
            "constant_radial: target would reach the radar before the run ends");

    Trajectory traj;
    traj.kind_ = TrajectoryKind::constant_radial;
    traj.duration_ = duration_s;
    traj.seg_start_t_ = {0.0};
    traj.seg_start_range_ = {start_range_m};
    traj.seg_rate_ = {speed_mps};
    return traj;
}

Trajectory Trajectory::piecewise(double start_range_m,
                                 const std::vector<Segment>& segments) {
    require(std::isfinite(start_range_m) && start_range_m > 0.0,
            "piecewise: start_range must be positive and finite");
    require(!segments.empty(), "piecewise: needs at least one segment");

    Trajectory traj;
    traj.kind_ = TrajectoryKind::piecewise;
    double t = 0.0;
    double r = start_range_m;
    for (const auto& s : segments) {
        require(std::isfinite(s.duration_s) && s.duration_s > 0.0,
                "piecewise: segment duration must be positive");
        require(std::isfinite(s.range_rate_mps), "piecewise: segment rate must be finite");
        traj.seg_start_t_.push_back(t);
        traj.seg_start_range_.push_back(r);
        traj.seg_rate_.push_back(s.range_rate_mps);
        t += s.duration_s;
        r += s.range_rate_mps * s.duration_s;
        // Range is linear inside a segment, so positivity at breakpoints covers it.
        require(r > 0.0, "piecewise: range must stay positive");
    }
    traj.duration_ = t;
    return traj;
}

RangeSample Trajectory::at(double t) const {
    if (!std::isfinite(t) || t < 0.0 || t > duration_)
        throw std::domain_error("trajectory: time outside [0, duration]");
    if (kind_ == TrajectoryKind::crossing) return crossing_at(t);

    auto it = std::upper_bound(seg_start_t_.begin(), seg_start_t_.end(), t);
    const auto idx = static_cast<std::size_t>(it - seg_start_t_.begin()) - 1;
    const double tau = t - seg_start_t_[idx];
    return {seg_start_range_[idx] + seg_rate_[idx] * tau, seg_rate_[idx]};
}

RangeSample Trajectory::crossing_at(double t) const {
    auto pass = static_cast<long long>(std::floor(t / pass_duration_));
    pass = std::clamp<long long>(pass, 0, cross_.passes - 1);
    const double tau = t - pass * pass_duration_;
    const double direction = (pass % 2 == 0) ? 1.0 : -1.0;
    const double x = direction * (-cross_.half_span_m + cross_.speed_mps * tau);
    const double xdot = direction * cross_.speed_mps;
    const double range = std::hypot(cross_.closest_approach_m, x);
    return {range, x * xdot / range};
}

}  // namespace cwdop
