#pragma once

#include <cstddef>
#include <vector>

namespace oracle {

// Trapezoidal rule over an arbitrary increasing grid.
inline double trapezoid(const std::vector<double>& t, const std::vector<double>& y) {
    double sum = 0.0;
    for (std::size_t i = 1; i < t.size(); ++i) sum += 0.5 * (y[i] + y[i - 1]) * (t[i] - t[i - 1]);
    return sum;
}

}  // namespace oracle
