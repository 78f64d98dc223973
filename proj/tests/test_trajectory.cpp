#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cwdop/trajectory.hpp"

using namespace cwdop;

TEST_CASE("shuttle example: 0.5-4 m at 1 m/s with 1 s dwells, one cycle") {
    const Trajectory traj =
        Trajectory::radial_shuttle({0.5, 4.0, 1.0, 1.0, 1});
    CHECK(traj.duration_s() == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(traj.at(0.0).range_m == 4.0);  // starts far, approaching first
    CHECK(traj.at(0.0).range_rate_mps == -1.0);

    CHECK(traj.at(1.0).range_m == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(traj.at(1.0).range_rate_mps == -1.0);
    CHECK(traj.at(4.0).range_rate_mps == 0.0);
    CHECK(traj.at(4.0).range_m == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(traj.at(6.0).range_rate_mps == 1.0);
    CHECK(traj.at(8.5).range_rate_mps == 0.0);
    CHECK(traj.at(8.5).range_m == doctest::Approx(4.0).epsilon(1e-12));

    // Right-hand limits at the switching instants; left-hand at the end.
    CHECK(traj.at(3.5).range_rate_mps == 0.0);
    CHECK(traj.at(4.5).range_rate_mps == 1.0);
    CHECK(traj.at(8.0).range_rate_mps == 0.0);
    CHECK(traj.at(9.0).range_rate_mps == 0.0);
    CHECK(traj.at(9.0).range_m == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("degenerate dwell keeps the rate nonzero except at switch instants") {
    const Trajectory traj = Trajectory::radial_shuttle({0.5, 4.0, 1.0, 0.0, 1});
    CHECK(traj.duration_s() == doctest::Approx(7.0).epsilon(1e-12));
    for (double t = 0.05; t < 7.0; t += 0.1) CHECK(traj.at(t).range_rate_mps != 0.0);
    CHECK(traj.at(3.5).range_rate_mps == 1.0);  // right-hand limit flips sign
}

TEST_CASE("shuttle is periodic across cycles") {
    const Trajectory traj = Trajectory::radial_shuttle({0.5, 4.0, 1.3, 0.7, 4});
    const double cycle = traj.duration_s() / 4.0;
    for (double t = 0.01; t < 3.0 * cycle; t += 0.237) {
        const auto a = traj.at(t);
        const auto b = traj.at(t + cycle);
        CHECK(a.range_m == doctest::Approx(b.range_m).epsilon(1e-9));
        CHECK(a.range_rate_mps == doctest::Approx(b.range_rate_mps).epsilon(1e-9));
    }
}

TEST_CASE("crossing geometry: zero radial velocity at closest approach") {
    // d = 0.5 m, v = 2 m/s, x(t) = -2 + 2t on the first pass.
    const Trajectory traj = Trajectory::crossing({0.5, 2.0, 2.0, 2});
    CHECK(traj.duration_s() == doctest::Approx(4.0).epsilon(1e-12));

    const auto mid = traj.at(1.0);
    CHECK(mid.range_m == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mid.range_rate_mps == doctest::Approx(0.0).epsilon(1e-12));

    CHECK(traj.at(0.5).range_rate_mps < 0.0);  // x < 0, moving right: approaching
    CHECK(traj.at(1.5).range_rate_mps > 0.0);  // past boresight: departing
    // Second pass mirrors the first.
    CHECK(traj.at(2.5).range_rate_mps < 0.0);
    CHECK(traj.at(3.5).range_rate_mps > 0.0);
}

TEST_CASE("crossing radial velocity is bounded by the speed") {
    const Trajectory traj = Trajectory::crossing({0.5, 2.0, 6.0, 1});
    for (double t = 0.0; t <= traj.duration_s(); t += 0.01)
        CHECK(std::abs(traj.at(t).range_rate_mps) < 2.0);
}

TEST_CASE("crossing radial velocity is odd about the closest approach") {
    const Trajectory traj = Trajectory::crossing({0.7, 1.3, 2.6, 1});
    const double t_closest = traj.duration_s() / 2.0;
    for (double delta = 0.05; delta < t_closest; delta += 0.11) {
        CHECK(traj.at(t_closest + delta).range_rate_mps ==
              doctest::Approx(-traj.at(t_closest - delta).range_rate_mps).epsilon(1e-12));
    }
}

TEST_CASE("range rate matches a central finite difference away from switches") {
    const double h = 1e-6;
    const Trajectory shuttle = Trajectory::radial_shuttle({0.5, 4.0, 1.1, 0.4, 2});
    const Trajectory crossing = Trajectory::crossing({0.5, 2.0, 3.0, 2});
    for (const Trajectory* traj : {&shuttle, &crossing}) {
        const double duration = traj->duration_s();
        for (double t = 0.05; t < duration - 0.05; t += 0.0831) {
            const auto sample = traj->at(t);
            const double diff =
                (traj->at(t + h).range_m - traj->at(t - h).range_m) / (2.0 * h);
            // Skip samples whose +-h window straddles a rate switch.
            if (traj->at(t + h).range_rate_mps != traj->at(t - h).range_rate_mps) continue;
            CHECK(std::abs(diff - sample.range_rate_mps) <= 1e-6);
        }
    }
}

TEST_CASE("constant radial kind") {
    const Trajectory traj = Trajectory::constant_radial(4.0, -1.0, 3.0);
    CHECK(traj.kind() == TrajectoryKind::constant_radial);
    CHECK(traj.at(0.0).range_m == 4.0);
    CHECK(traj.at(3.0).range_m == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(traj.at(1.5).range_rate_mps == -1.0);
    // Would reach the radar before the run ends.
    CHECK_THROWS_AS(Trajectory::constant_radial(4.0, -1.0, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(Trajectory::constant_radial(0.0, 1.0, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(Trajectory::constant_radial(4.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("piecewise kind") {
    const Trajectory traj = Trajectory::piecewise(
        4.0, {{3.5, -1.0}, {1.0, 0.0}, {3.5, 1.0}});
    CHECK(traj.duration_s() == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(traj.at(3.0).range_m == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(traj.at(4.0).range_rate_mps == 0.0);
    CHECK(traj.at(8.0).range_m == doctest::Approx(4.0).epsilon(1e-12));

    CHECK_THROWS_AS(Trajectory::piecewise(1.0, {{2.0, -1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Trajectory::piecewise(1.0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Trajectory::piecewise(1.0, {{0.0, 1.0}}), std::invalid_argument);
}

TEST_CASE("evaluation outside the domain throws") {
    const Trajectory traj = Trajectory::constant_radial(4.0, 1.0, 2.0);
    CHECK_THROWS_AS(traj.at(-0.001), std::domain_error);
    CHECK_THROWS_AS(traj.at(2.001), std::domain_error);
    CHECK_THROWS_AS(traj.at(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST_CASE("invalid shuttle and crossing parameters") {
    CHECK_THROWS_AS(Trajectory::radial_shuttle({4.0, 0.5, 1.0, 0.0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Trajectory::radial_shuttle({0.5, 4.0, 0.0, 0.0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Trajectory::radial_shuttle({0.5, 4.0, 1.0, -0.1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Trajectory::radial_shuttle({0.5, 4.0, 1.0, 0.0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Trajectory::crossing({0.0, 1.0, 1.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Trajectory::crossing({0.5, -1.0, 1.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Trajectory::crossing({0.5, 1.0, 0.0, 1}), std::invalid_argument);
}
