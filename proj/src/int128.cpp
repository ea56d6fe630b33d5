#include "morrey/int128.hpp"

#include <stdexcept>

namespace morrey {

namespace {
using UIndex = unsigned __int128;
}  // namespace

std::string index_to_string(Index v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  UIndex mag = neg ? -static_cast<UIndex>(v) : static_cast<UIndex>(v);
  char buf[48];
  int pos = 48;
  while (mag != 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<int>(mag % 10));
    mag /= 10;
  }
  if (neg) buf[--pos] = '-';
  return std::string(buf + pos, buf + 48);
}

Index parse_index(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty index string");
  std::size_t at = 0;
  bool neg = false;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    at = 1;
  }
  if (at == text.size()) throw std::invalid_argument("index string has no digits");
  constexpr UIndex kMax = ~UIndex{0} >> 1;  // 2^127 - 1
  UIndex mag = 0;
  for (; at < text.size(); ++at) {
    const char c = text[at];
    if (c < '0' || c > '9')
      throw std::invalid_argument("invalid character in index string: '" +
                                  std::string(text) + "'");
    const UIndex digit = static_cast<UIndex>(c - '0');
    if (mag > (kMax - digit) / 10)
      throw std::overflow_error("index out of 128-bit range: " +
                                std::string(text));
    mag = mag * 10 + digit;
  }
  return neg ? -static_cast<Index>(mag) : static_cast<Index>(mag);
}

Index pow2_index(long long e) {
  if (e < 0 || e > 126)
    throw std::overflow_error("2^" + std::to_string(e) +
                              " does not fit a 128-bit index");
  return static_cast<Index>(1) << e;
}

}  // namespace morrey
