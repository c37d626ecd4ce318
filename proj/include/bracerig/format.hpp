#pragma once

#include <string>

namespace bracerig {

/// Twelve significant digits, "%.12g", with negative zero printed as 0.
std::string format_number(double x);

/// x rounded to the value format_number prints.
double canonical_number(double x);

}  // namespace bracerig
