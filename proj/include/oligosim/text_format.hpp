#pragma once

#include <string>

namespace oligosim {

// Shortest round-trippable decimal form at 9 significant digits, produced
// with std::to_chars so the result is locale independent and byte identical
// across platforms. Negative zero is normalized to "0".
std::string format_g9(double value);

std::string format_int(long long value);

std::string format_uint(unsigned long long value);

}  // namespace oligosim
