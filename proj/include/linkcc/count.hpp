#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace linkcc {

// Crossing totals of weighted diagrams exceed 2^63 for moderate instance sizes.
__extension__ typedef __int128 Count;

std::string to_decimal(Count value);

// Throws std::invalid_argument on malformed input or overflow.
Count parse_count(std::string_view text);

}  // namespace linkcc
