#include "lpg/linkage.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lpg/errors.hpp"
#include "lpg/units.hpp"

namespace lpg {

double law_of_cosines_side(double a, double b, double included_deg) {
    const double sq = a * a + b * b - 2.0 * a * b * std::cos(deg_to_rad(included_deg));
    // Degenerate (collinear) triangles can round a hair below zero.
    return std::sqrt(std::max(sq, 0.0));
}

double law_of_cosines_angle(double a, double b, double opposite) {
    if (!(a > 0.0) || !(b > 0.0))
        throw GeometryError("law of cosines: adjacent sides must be > 0");
    double c = (a * a + b * b - opposite * opposite) / (2.0 * a * b);
    if (c > 1.0 + 1e-9 || c < -1.0 - 1e-9)
        throw GeometryError("law of cosines: sides " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                            std::to_string(opposite) + " do not form a triangle");
    c = std::clamp(c, -1.0, 1.0);
    return rad_to_deg(std::acos(c));
}

}  // namespace lpg
