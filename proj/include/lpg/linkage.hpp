#pragma once

namespace lpg {

/// Side opposite the included angle (degrees) between sides a and b.
double law_of_cosines_side(double a, double b, double included_deg);

/// Angle (degrees) between sides a and b of a triangle whose third side is c.
/// Cosine arguments up to 1e-9 outside [-1, 1] are clamped; larger excursions
/// throw GeometryError because the triangle cannot close.
double law_of_cosines_angle(double a, double b, double opposite);

}  // namespace lpg
