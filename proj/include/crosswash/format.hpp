#pragma once

#include <string>

namespace crosswash::format {

/// Round half away from zero at the given number of decimals.
double round_half_away(double value, int decimals);

/// Display formatting: half-away-from-zero rounding, then fixed-point output.
/// All report numbers pass through here exactly once (no re-rounding).
std::string fixed(double value, int decimals);

/// Integer millions (fixed with zero decimals, no decimal point).
std::string integer(double value);

/// Shortest decimal string that parses back to the identical double.
std::string shortest(double value);

}  // namespace crosswash::format
