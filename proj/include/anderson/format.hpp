#pragma once

#include <string>

namespace anderson {

inline constexpr const char* kVersion = "0.1.0";

// Decimal with 12 significant digits, shortest form ("1000", "0.5", "inf").
std::string fmt(double value);

// Round-trippable decimal (17 significant digits).
std::string fmt_exact(double value);

}  // namespace anderson
