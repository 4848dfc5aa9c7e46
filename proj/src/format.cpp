#include "crosswash/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace crosswash::format {

double round_half_away(double value, int decimals) {
    if (!std::isfinite(value)) {
        return value;
    }
    const double scale = std::pow(10.0, decimals);
    const double scaled = value * scale;
    // std::round rounds halfway cases away from zero, which is the rule here.
    double snapped = std::round(scaled) / scale;
    if (snapped == 0.0) {
        snapped = 0.0;  // avoid "-0.00"
    }
    return snapped;
}

std::string fixed(double value, int decimals) {
    const double snapped = round_half_away(value, decimals);
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, snapped);
    return buffer;
}

std::string integer(double value) {
    return fixed(value, 0);
}

std::string shortest(double value) {
    char buffer[64];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
        if (std::strtod(buffer, nullptr) == value) {
            break;
        }
    }
    return buffer;
}

}  // namespace crosswash::format
