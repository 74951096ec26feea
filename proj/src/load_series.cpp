#include "lpg/load_series.hpp"

#include <algorithm>

namespace lpg {

const char* to_string(Component c) {
    switch (c) {
        case Component::boom: return "boom";
        case Component::arm: return "arm";
        case Component::swing: return "swing";
        case Component::idle: return "idle";
    }
    return "unknown";
}

double ComponentLoadSeries::peak_power() const {
    if (power_w.empty()) return 0.0;
    return *std::max_element(power_w.begin(), power_w.end());
}

double ComponentLoadSeries::energy() const {
    double e = 0.0;
    for (std::size_t k = 1; k < power_w.size(); ++k)
        e += 0.5 * (power_w[k] + power_w[k - 1]) * (time_s[k] - time_s[k - 1]);
    return e;
}

}  // namespace lpg
