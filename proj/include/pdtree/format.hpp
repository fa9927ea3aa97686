#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace pdtree {

/// Locale-independent shortest round-trip representation.
inline std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

/// Locale-independent, `digits` significant digits.
inline std::string format_double(double x, int digits) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, digits);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

}  // namespace pdtree
