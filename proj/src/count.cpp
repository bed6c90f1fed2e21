#include "linkcc/count.hpp"

#include <algorithm>
#include <stdexcept>

namespace linkcc {

std::string to_decimal(Count value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work with non-positive values so the minimum is representable.
  std::string digits;
  Count v = negative ? value : -value;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Count parse_count(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("malformed integer: " + std::string(text));
  constexpr Count kMax = static_cast<Count>((static_cast<unsigned __int128>(1) << 127) - 1);
  Count value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("malformed integer: " + std::string(text));
    const int d = c - '0';
    if (value > (kMax - d) / 10) throw std::invalid_argument("integer out of range: " + std::string(text));
    value = value * 10 + d;
  }
  return negative ? -value : value;
}

}  // namespace linkcc
