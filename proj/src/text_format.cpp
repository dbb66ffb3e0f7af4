#include "oligosim/text_format.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <system_error>

namespace oligosim {

std::string format_g9(double value) {
  if (value == 0.0) {
    return "0";  // fold -0.0 into the same spelling
  }
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 9);
  if (res.ec != std::errc()) {
    throw std::runtime_error("failed to format floating-point value");
  }
  return std::string(buf.data(), res.ptr);
}

std::string format_int(long long value) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

std::string format_uint(unsigned long long value) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

}  // namespace oligosim
