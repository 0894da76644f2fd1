#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace apg {

// a = (2d+1) * 2^u, with 2d+1 the odd part.
struct Pow2Split {
    uint64_t d;
    uint32_t u;
};

// Deterministic primality for x <= 2^63. Never probabilistic.
bool is_prime(uint64_t x);

// Bit array of primality for 0..n. Segmented internally.
std::vector<bool> sieve_upto(uint64_t n);

// Visits primes q in [lo, hi] with q == r (mod m), ascending.
// Visitor returns false to stop early.
void for_each_prime_in_class(uint64_t r, uint64_t m, uint64_t lo, uint64_t hi,
                             const std::function<bool(uint64_t)>& visit);

std::vector<uint64_t> primes_in_class(uint64_t r, uint64_t m, uint64_t lo,
                                      uint64_t hi);

Pow2Split pow2_split(uint64_t a);

inline uint64_t pow2_join(const Pow2Split& s) {
    return (2 * s.d + 1) << s.u;
}

} // namespace apg
