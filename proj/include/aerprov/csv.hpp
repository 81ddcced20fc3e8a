#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

namespace aerprov {

/// Shortest round-trip decimal form, locale-independent. Infinity renders as
/// the literal token `inf` (used for unlimited autonomy in sweep tables).
inline std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buffer[32];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) return "nan";
  return std::string(buffer, ptr);
}

inline std::string format_number(int value) { return std::to_string(value); }

}  // namespace aerprov
