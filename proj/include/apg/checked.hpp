#pragma once

#include <cstdint>
#include <stdexcept>

namespace apg {

using int128 = __int128;

// Results must fit in 63 bits (signed); intermediates are 128-bit.
inline int64_t narrow63(int128 v) {
    constexpr int128 lim = int128(1) << 63;
    if (v >= lim || v <= -lim)
        throw std::overflow_error("value exceeds 63 bits");
    return static_cast<int64_t>(v);
}

inline uint64_t narrow63u(int128 v) {
    if (v < 0)
        throw std::overflow_error("negative value where natural expected");
    return static_cast<uint64_t>(narrow63(v));
}

} // namespace apg
