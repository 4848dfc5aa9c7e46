#include <doctest.h>

#include "crosswash/format.hpp"

using namespace crosswash;

TEST_CASE("format: half away from zero") {
    CHECK(format::round_half_away(0.125, 2) == doctest::Approx(0.13));
    CHECK(format::round_half_away(-0.125, 2) == doctest::Approx(-0.13));
    CHECK(format::round_half_away(2.5, 0) == 3.0);
    CHECK(format::round_half_away(-2.5, 0) == -3.0);
    CHECK(format::round_half_away(66.190476, 2) == doctest::Approx(66.19));
}

TEST_CASE("format: fixed display strings") {
    CHECK(format::fixed(91.349339, 2) == "91.35");
    CHECK(format::fixed(0.0, 2) == "0.00");
    CHECK(format::fixed(-0.0001, 2) == "0.00");  // no negative zero in reports
    CHECK(format::fixed(54.5248868778, 6) == "54.524887");
    CHECK(format::integer(972.0) == "972");
    CHECK(format::integer(971.6) == "972");
}

TEST_CASE("format: shortest round-trips") {
    for (double v : {0.1, 1.0 / 3.0, 1060.0, 0.8847969782813976, -2.5e-7}) {
        const std::string text = format::shortest(v);
        CHECK(std::stod(text) == v);
    }
}
