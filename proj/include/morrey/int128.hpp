#pragma once

#include <string>
#include <string_view>

namespace morrey {

// Signed 128-bit sequence index. Block endpoints of the generated
// counterexample families reach ~2^96, well past the int64 range.
using Index = __int128;

std::string index_to_string(Index v);

/// Parses an optionally signed decimal string; throws std::invalid_argument
/// on junk and std::overflow_error when the value does not fit.
Index parse_index(std::string_view text);

/// 2^e; requires 0 <= e <= 126.
Index pow2_index(long long e);

inline double to_double(Index v) { return static_cast<double>(v); }

}  // namespace morrey
