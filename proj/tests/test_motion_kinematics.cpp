#include <doctest.h>

#include <cmath>
#include <vector>

#include "lpg/errors.hpp"
#include "lpg/motion_kinematics.hpp"
#include "oracles/quadrature.hpp"

using namespace lpg;

namespace {

MotionRequest request(double s0, double s1, double T, double v, double r = 0.4, double dt = 0.01) {
    MotionRequest q;
    q.s_ini = s0;
    q.s_fin = s1;
    q.duration_s = T;
    q.vmax = v;
    q.ramp_fraction = r;
    q.dt_s = dt;
    return q;
}

}  // namespace

TEST_CASE("exactly feasible request keeps its plateau and covers the distance") {
    const auto p = make_profile(request(0, 10, 6.25, 2, 0.4, 0.01));
    CHECK(p.adjustment == Adjustment::none);
    CHECK(p.effective_vmax == doctest::Approx(2.0));
    CHECK(p.effective_duration == doctest::Approx(6.25));
    CHECK(p.samples.back().position == doctest::Approx(10.0).epsilon(1e-12));
    double vmax = 0;
    for (const auto& s : p.samples) vmax = std::max(vmax, s.velocity);
    CHECK(vmax == doctest::Approx(2.0));
    CHECK(reachable_displacement(2, 6.25, 0.4) == doctest::Approx(10.0));
}

TEST_CASE("zero displacement gives a flat profile") {
    const auto p = make_profile(request(5, 5, 3, 4));
    CHECK(p.adjustment == Adjustment::none);
    for (const auto& s : p.samples) {
        CHECK(s.position == 5.0);
        CHECK(s.velocity == 0.0);
    }
}

TEST_CASE("accelerating branch evaluated directly") {
    CHECK(trapezoid_displacement(0.5, 0.0, 1.25, 5.0, 6.25, 2.0) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("position branches join continuously at the phase boundaries") {
    const double t0 = 0, t1 = 1.3, t2 = 4.1, t3 = 5.4, v = 3.7;
    const double e = 1e-13;
    CHECK(std::abs(trapezoid_displacement(t1 - e, t0, t1, t2, t3, v) - trapezoid_displacement(t1, t0, t1, t2, t3, v)) <
          1e-12);
    CHECK(std::abs(trapezoid_displacement(t2 - e, t0, t1, t2, t3, v) - trapezoid_displacement(t2, t0, t1, t2, t3, v)) <
          1e-12);
    // At rest at the end, with the full trapezoid area covered.
    CHECK(trapezoid_displacement(t3, t0, t1, t2, t3, v) == doctest::Approx(v * (t2 - t1 + (t1 - t0))));
    CHECK(trapezoid_displacement(t3 + 1, t0, t1, t2, t3, v) == trapezoid_displacement(t3, t0, t1, t2, t3, v));
}

TEST_CASE("duration is stretched when the move is unreachable") {
    const auto q = request(0, 10, 6, 1);
    CHECK(classify(q) == Adjustment::duration_increased);
    CHECK(adjust_duration(q) == doctest::Approx(12.5));
    CHECK(adjust_velocity(q) == 1.0);
    const auto p = make_profile(q);
    CHECK(p.effective_duration == doctest::Approx(12.5));
    CHECK(p.samples.back().t == doctest::Approx(12.5));
    CHECK(p.samples.back().position == doctest::Approx(10.0));
}

TEST_CASE("zero distance and the exact boundary are left alone") {
    CHECK(adjust_duration(request(3, 3, 6, 1)) == 6.0);
    const auto boundary = request(0, 4.8, 6, 1);
    CHECK(classify(boundary) == Adjustment::none);
    CHECK(adjust_duration(boundary) == 6.0);
    CHECK(adjust_velocity(boundary) == 1.0);
}

TEST_CASE("plateau velocity is lowered when the move is over-provisioned") {
    CHECK(adjust_velocity(request(0, 5, 10, 2)) == doctest::Approx(0.625));
    // 30 deg in 8 s requested at 16 deg/s.
    const auto arm = request(90, 120, 8, 16);
    CHECK(classify(arm) == Adjustment::velocity_reduced);
    CHECK(adjust_velocity(arm) == doctest::Approx(4.6875));
    CHECK(adjust_duration(arm) == 8.0);
}

TEST_CASE("downward moves mirror upward ones") {
    const auto up = make_profile(request(45, 70, 3, 15));
    const auto down = make_profile(request(70, 45, 3, 15));
    REQUIRE(up.samples.size() == down.samples.size());
    for (std::size_t i = 0; i < up.samples.size(); ++i) {
        CHECK(up.samples[i].velocity == doctest::Approx(-down.samples[i].velocity));
        CHECK(up.samples[i].position - 45 == doctest::Approx(70 - down.samples[i].position));
    }
    CHECK(down.samples.back().position == doctest::Approx(45.0));
}

TEST_CASE("acceleration is piecewise constant") {
    const auto p = make_profile(request(0, 50, 5, 18, 0.45));
    const double a = p.acceleration();
    CHECK(a == doctest::Approx(p.effective_vmax / (p.t1 - p.t0)));
    for (const auto& s : p.samples) {
        if (s.t < p.t1) CHECK(s.acceleration == doctest::Approx(a));
        else if (s.t < p.t2) CHECK(s.acceleration == 0.0);
        else CHECK(s.acceleration == doctest::Approx(-a));
    }
}

TEST_CASE("ramp share is split equally between both ends") {
    const auto p = make_profile(request(0, 50, 5, 18, 0.45));
    CHECK(p.t1 == doctest::Approx(0.225 * 5));
    CHECK(p.t3 - p.t2 == doctest::Approx(0.225 * 5));
}

TEST_CASE("sample grid") {
    const auto t = sample_times(3.0, 0.01);
    CHECK(t.size() == 301);
    CHECK(t.front() == 0.0);
    CHECK(t.back() == 3.0);
    const auto odd = sample_times(3.906, 0.01);
    CHECK(odd.back() == 3.906);
    CHECK(odd[odd.size() - 2] == doctest::Approx(3.90));
    CHECK(sample_times(0.001, 0.01).size() == 2);
    CHECK_THROWS_AS(sample_times(1, 0), ValidationError);
}

TEST_CASE("velocity integrates to the displacement") {
    const auto p = make_profile(request(10, -32, 4.4, 30, 0.3));
    CHECK(oracle::trapezoid(p.times(), p.velocities()) == doctest::Approx(-42).epsilon(1e-4));
}

TEST_CASE("invalid requests are rejected") {
    CHECK_THROWS_AS(make_profile(request(0, 1, 1, 1, 0.4, 0.0)), ValidationError);
    CHECK_THROWS_AS(make_profile(request(0, 1, 0, 1)), ValidationError);
    CHECK_THROWS_AS(make_profile(request(0, 1, 1, -1)), ValidationError);
    CHECK_THROWS_AS(make_profile(request(0, 1, 1, 1, 1.0)), ValidationError);
    CHECK_THROWS_AS(make_profile(request(0, 1, 1, 1, 0.0)), ValidationError);
}

TEST_CASE("differentiate: constant, linear and quadratic series") {
    const double dt = 0.01;
    std::vector<double> c(50, 7.0), lin, quad;
    for (int i = 0; i < 200; ++i) {
        lin.push_back(3.0 * i * dt + 1.0);
        quad.push_back((i * dt) * (i * dt));
    }
    for (double d : differentiate(c, dt)) CHECK(d == 0.0);
    for (double d : differentiate(lin, dt)) CHECK(d == doctest::Approx(3.0).epsilon(1e-9));
    const auto dq = differentiate(quad, dt);
    for (std::size_t i = 1; i + 1 < dq.size(); ++i) CHECK(std::abs(dq[i] - 2.0 * i * dt) <= 1e-4);
    CHECK_THROWS_AS(differentiate(std::vector<double>{1.0, 2.0}, dt), ValidationError);
}

TEST_CASE("differentiate on a non-uniform grid is exact for quadratics") {
    const std::vector<double> t{0.0, 0.01, 0.02, 0.03, 0.035};
    std::vector<double> y;
    for (double x : t) y.push_back(4 * x * x - x + 2);
    const auto d = differentiate(y, t);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(d[i] == doctest::Approx(8 * t[i] - 1).epsilon(1e-9));
    CHECK_THROWS_AS(differentiate(y, std::vector<double>{0, 1, 1, 2, 3}), ValidationError);
    CHECK_THROWS_AS(differentiate(y, std::vector<double>{0, 1, 2}), ValidationError);
}
