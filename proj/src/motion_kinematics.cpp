#include "lpg/motion_kinematics.hpp"

#include <algorithm>
#include <cmath>

#include "lpg/errors.hpp"

namespace lpg {

namespace {

// Relative slack used when deciding whether a request is exactly feasible.
constexpr double kFeasibilityTol = 1e-9;

void check_request(const MotionRequest& req) {
    if (!(req.dt_s > 0.0)) throw ValidationError("motion request: dt must be > 0");
    if (!(req.duration_s > 0.0)) throw ValidationError("motion request: duration must be > 0");
    if (!(req.vmax > 0.0)) throw ValidationError("motion request: velocity_max must be > 0");
    if (!(req.ramp_fraction > 0.0 && req.ramp_fraction < 1.0))
        throw ValidationError("motion request: ramp fraction must lie in (0, 1)");
}

}  // namespace

const char* to_string(Adjustment a) {
    switch (a) {
        case Adjustment::none: return "none";
        case Adjustment::duration_increased: return "duration_increased";
        case Adjustment::velocity_reduced: return "velocity_reduced";
    }
    return "unknown";
}

double MotionProfile::acceleration() const {
    const double ramp = t1 - t0;
    return ramp > 0.0 ? effective_vmax / ramp : 0.0;
}

std::vector<double> MotionProfile::times() const {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.t);
    return out;
}

std::vector<double> MotionProfile::positions() const {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.position);
    return out;
}

std::vector<double> MotionProfile::velocities() const {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.velocity);
    return out;
}

double reachable_displacement(double vmax, double duration_s, double ramp_fraction) {
    return vmax * duration_s * (1.0 - ramp_fraction / 2.0);
}

Adjustment classify(const MotionRequest& req) {
    const double distance = std::abs(req.s_fin - req.s_ini);
    if (distance == 0.0) return Adjustment::none;
    const double reach = reachable_displacement(req.vmax, req.duration_s, req.ramp_fraction);
    if (std::abs(distance - reach) <= kFeasibilityTol * std::max(distance, reach))
        return Adjustment::none;
    return distance > reach ? Adjustment::duration_increased : Adjustment::velocity_reduced;
}

double adjust_duration(const MotionRequest& req) {
    if (classify(req) != Adjustment::duration_increased) return req.duration_s;
    return std::abs(req.s_fin - req.s_ini) / (req.vmax * (1.0 - req.ramp_fraction / 2.0));
}

double adjust_velocity(const MotionRequest& req) {
    if (classify(req) != Adjustment::velocity_reduced) return req.vmax;
    return std::abs(req.s_fin - req.s_ini) / (req.duration_s * (1.0 - req.ramp_fraction / 2.0));
}

double trapezoid_displacement(double t, double t0, double t1, double t2, double t3, double vmax) {
    if (t <= t0) return 0.0;
    t = std::min(t, t3);
    if (t < t1) return vmax * (t - t0) * (t - t0) / (2.0 * (t1 - t0));
    if (t < t2) return vmax * (t - (t1 + t0) / 2.0);
    // Decelerating quadratic, C1-continuous with the plateau at t2 and at rest at t3.
    const double tau = t - t2;
    return vmax * (tau - tau * tau / (2.0 * (t3 - t2)) + t2 - (t0 + t1) / 2.0);
}

std::vector<double> sample_times(double duration_s, double dt_s) {
    if (!(dt_s > 0.0)) throw ValidationError("sample_times: dt must be > 0");
    if (!(duration_s >= 0.0)) throw ValidationError("sample_times: duration must be >= 0");
    // Rounding keeps the final interval within [dt/2, 3dt/2) so it never degenerates.
    const auto steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(duration_s / dt_s)));
    std::vector<double> t(steps + 1);
    for (std::size_t k = 0; k < steps; ++k) t[k] = static_cast<double>(k) * dt_s;
    t[steps] = duration_s;
    return t;
}

MotionProfile make_profile(const MotionRequest& req) {
    check_request(req);

    MotionProfile p;
    p.dt = req.dt_s;
    p.s_ini = req.s_ini;
    p.s_fin = req.s_fin;
    p.unit = req.unit;
    p.adjustment = classify(req);
    p.effective_duration = adjust_duration(req);
    p.effective_vmax = adjust_velocity(req);
    if (req.s_fin == req.s_ini) p.effective_vmax = 0.0;

    const double total = p.effective_duration;
    const double ramp = req.ramp_fraction * total / 2.0;
    p.t0 = 0.0;
    p.t1 = ramp;
    p.t2 = total - ramp;
    p.t3 = total;

    const double sign = req.s_fin >= req.s_ini ? 1.0 : -1.0;
    const double v = p.effective_vmax;
    const double a = p.acceleration();

    const auto grid = sample_times(total, req.dt_s);
    p.samples.reserve(grid.size());
    for (const double t : grid) {
        MotionSample s;
        s.t = t;
        s.position = req.s_ini + sign * trapezoid_displacement(t, p.t0, p.t1, p.t2, p.t3, v);
        if (t < p.t1) {
            s.velocity = sign * v * (t - p.t0) / ramp;
            s.acceleration = sign * a;
        } else if (t < p.t2) {
            s.velocity = sign * v;
            s.acceleration = 0.0;
        } else {
            s.velocity = sign * v * (p.t3 - t) / ramp;
            s.acceleration = -sign * a;
        }
        p.samples.push_back(s);
    }
    return p;
}

std::vector<double> differentiate(std::span<const double> values, double dt) {
    if (values.size() < 3) throw ValidationError("differentiate: need at least 3 samples");
    if (!(dt > 0.0)) throw ValidationError("differentiate: dt must be > 0");
    const std::size_t n = values.size();
    std::vector<double> d(n);
    d[0] = (-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * dt);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (values[i + 1] - values[i - 1]) / (2.0 * dt);
    d[n - 1] = (3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * dt);
    return d;
}

namespace {

// Derivative at x[j] of the quadratic through (x[i], y[i]) for i in {a, b, c}.
// Divided differences, so a constant series differentiates to exactly zero.
double lagrange_slope(std::span<const double> x, std::span<const double> y, std::size_t a,
                      std::size_t b, std::size_t c, std::size_t j) {
    const double ab = (y[b] - y[a]) / (x[b] - x[a]);
    const double bc = (y[c] - y[b]) / (x[c] - x[b]);
    const double abc = (bc - ab) / (x[c] - x[a]);
    return ab + abc * ((x[j] - x[a]) + (x[j] - x[b]));
}

}  // namespace

std::vector<double> differentiate(std::span<const double> values, std::span<const double> times) {
    if (values.size() != times.size())
        throw ValidationError("differentiate: values and times differ in length");
    if (values.size() < 3) throw ValidationError("differentiate: need at least 3 samples");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw ValidationError("differentiate: time grid must be strictly increasing");

    const std::size_t n = values.size();
    std::vector<double> d(n);
    d[0] = lagrange_slope(times, values, 0, 1, 2, 0);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = lagrange_slope(times, values, i - 1, i, i + 1, i);
    d[n - 1] = lagrange_slope(times, values, n - 3, n - 2, n - 1, n - 1);
    return d;
}

}  // namespace lpg
