#pragma once

#include <string>

namespace ic {

/// Exact 128-bit counter used by every census.
using Count = unsigned __int128;

inline std::string to_string(Count value) {
    if (value == 0) return "0";
    std::string digits;
    while (value > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    return {digits.rbegin(), digits.rend()};
}

}  // namespace ic
