#include "bracerig/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace bracerig {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

double canonical_number(double x) {
  const double y = std::strtod(format_number(x).c_str(), nullptr);
  return y == 0.0 ? 0.0 : y;
}

}  // namespace bracerig
