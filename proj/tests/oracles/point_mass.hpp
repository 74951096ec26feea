#pragma once

// Brute-force reference for centre of mass and inertia: every link is split into
// equal point masses at segment midpoints, the attachment plus payload is a single
// point at the arm tip. Nothing here reuses the library's closed forms.

#include <cmath>
#include <cstddef>
#include <numbers>

namespace oracle {

struct Links {
    double L_boom, L_arm;
    double m_boom, m_arm, m_tip;
    double m_cabin = 0.0, l_cabin = 0.0, w_cabin = 0.0;
};

struct PointMassResult {
    double x_com;
    double I_boom;   // sum m r^2 about the boom foot
    double I_arm;    // arm points plus tip point, same reference
    double I_cabin;  // plate about its centre
};

inline PointMassResult discretize(const Links& k, double boom_deg, double arm_deg, std::size_t n) {
    const double d2r = std::numbers::pi / 180.0;
    const double ub_x = std::cos(boom_deg * d2r), ub_y = std::sin(boom_deg * d2r);
    const double arm_dir = (boom_deg + 180.0 - arm_deg) * d2r;
    const double ua_x = std::cos(arm_dir), ua_y = std::sin(arm_dir);
    const double tip_x = k.L_boom * ub_x, tip_y = k.L_boom * ub_y;

    double mx = 0.0, m = 0.0;
    PointMassResult r{};
    const double dmb = k.m_boom / n, dma = k.m_arm / n;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = (i + 0.5) / n;
        const double bx = s * k.L_boom * ub_x, by = s * k.L_boom * ub_y;
        mx += dmb * bx;
        r.I_boom += dmb * (bx * bx + by * by);
        const double ax = tip_x + s * k.L_arm * ua_x, ay = tip_y + s * k.L_arm * ua_y;
        mx += dma * ax;
        r.I_arm += dma * (ax * ax + ay * ay);
    }
    m = k.m_boom + k.m_arm;
    const double ex = tip_x + k.L_arm * ua_x, ey = tip_y + k.L_arm * ua_y;
    mx += k.m_tip * ex;
    m += k.m_tip;
    r.I_arm += k.m_tip * (ex * ex + ey * ey);
    r.x_com = mx / m;

    // Cabin as an n-by-n grid over a uniform rectangle.
    const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    const double dmc = k.m_cabin / static_cast<double>(side * side);
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j) {
            const double x = ((i + 0.5) / side - 0.5) * k.l_cabin;
            const double y = ((j + 0.5) / side - 0.5) * k.w_cabin;
            r.I_cabin += dmc * (x * x + y * y);
        }
    return r;
}

}  // namespace oracle
