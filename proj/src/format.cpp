#include "anderson/format.hpp"

#include <cstdio>

namespace anderson {

namespace {

std::string print(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

}  // namespace

std::string fmt(double value) { return print(value, 12); }

std::string fmt_exact(double value) { return print(value, 17); }

}  // namespace anderson
