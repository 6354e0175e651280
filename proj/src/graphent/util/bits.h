#ifndef GRAPHENT_UTIL_BITS_H
#define GRAPHENT_UTIL_BITS_H

#include <bit>
#include <cstdint>

namespace graphent {

inline int popcount(uint64_t w) { return std::popcount(w); }

inline int lowest_bit(uint64_t w) { return std::countr_zero(w); }

inline bool parity(uint64_t w) { return (std::popcount(w) & 1) != 0; }

/// Mask with the low `n` bits set; valid for 0 <= n <= 64.
inline uint64_t low_mask(int n) { return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

/// Calls f(i) for every set bit i of w, lowest first.
template <typename F>
inline void for_each_bit(uint64_t w, F &&f) {
    while (w) {
        f(std::countr_zero(w));
        w &= w - 1;
    }
}

}  // namespace graphent

#endif
