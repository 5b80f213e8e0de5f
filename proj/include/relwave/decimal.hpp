#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>

namespace relwave {

// Shortest decimal string that round-trips to the same double.
inline std::string double_to_decimal(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double decimal_to_double(std::string_view s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("not a decimal number: " + std::string(s));
  return v;
}

}  // namespace relwave
