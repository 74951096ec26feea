#pragma once

#include <span>
#include <vector>

namespace lpg {

enum class MotionUnit { angular, linear };

/// Which feasibility fix, if any, was applied to a motion request.
enum class Adjustment {
    none,
    duration_increased,  ///< displacement unreachable at vmax within the set duration
    velocity_reduced,    ///< displacement reached too early at vmax; plateau lowered
};

const char* to_string(Adjustment a);

/// One point-to-point move. Angles in degrees (deg/s) or lengths in metres (m/s).
///
/// `ramp_fraction` is the combined share of the duration spent ramping; it is
/// split equally between acceleration and deceleration, so a value of 0.4
/// accelerates for 20 % of the move and decelerates for the final 20 %.
struct MotionRequest {
    double s_ini = 0.0;
    double s_fin = 0.0;
    double duration_s = 1.0;
    double vmax = 1.0;
    double ramp_fraction = 0.4;
    double dt_s = 0.01;
    MotionUnit unit = MotionUnit::angular;
};

struct MotionSample {
    double t = 0.0;
    double position = 0.0;
    double velocity = 0.0;
    double acceleration = 0.0;
};

/// Sampled symmetric trapezoid. Phase boundaries t0 < t1 <= t2 < t3 are local
/// times (t0 = 0). Samples sit at t0 + k*dt; the last one is clamped to t3, so
/// the final interval may differ from dt by up to dt/2.
struct MotionProfile {
    double t0 = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    double t3 = 0.0;
    double dt = 0.01;
    double s_ini = 0.0;
    double s_fin = 0.0;
    MotionUnit unit = MotionUnit::angular;
    double effective_vmax = 0.0;
    double effective_duration = 0.0;
    Adjustment adjustment = Adjustment::none;
    std::vector<MotionSample> samples;

    /// Constant ramp acceleration magnitude.
    double acceleration() const;

    std::vector<double> times() const;
    std::vector<double> positions() const;
    std::vector<double> velocities() const;
};

/// Plateau-speed displacement of the trapezoid: v * T * (1 - r/2).
double reachable_displacement(double vmax, double duration_s, double ramp_fraction);

/// Feasibility class of a request without building the profile.
Adjustment classify(const MotionRequest& req);

/// Duration needed to cover |s_fin - s_ini| at the set vmax. Returns the set
/// duration when the move is already reachable.
double adjust_duration(const MotionRequest& req);

/// Plateau speed that covers |s_fin - s_ini| exactly in the set duration.
/// Returns the set vmax when the move is not over-provisioned.
double adjust_velocity(const MotionRequest& req);

/// Position relative to the start of the move (unsigned displacement), evaluated
/// from the closed-form quadratic-linear-quadratic branches.
double trapezoid_displacement(double t, double t0, double t1, double t2, double t3, double vmax);

/// Local sample instants for a move of `duration_s`: k*dt for
/// k < round(duration/dt), then the duration itself.
std::vector<double> sample_times(double duration_s, double dt_s);

/// Build a sampled profile. Feasibility is resolved first; the effective fields
/// record the result. Throws ValidationError on non-positive dt, duration or vmax,
/// or a ramp fraction outside (0, 1).
MotionProfile make_profile(const MotionRequest& req);

/// Derivative of a uniformly sampled series. Second-order central differences in
/// the interior, second-order one-sided at both ends. Needs at least 3 samples.
std::vector<double> differentiate(std::span<const double> values, double dt);

/// Same as above for a strictly increasing, possibly non-uniform time grid
/// (the last interval of a profile is usually shorter than dt).
std::vector<double> differentiate(std::span<const double> values, std::span<const double> times);

}  // namespace lpg
