#include "apg/primality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace apg {

namespace {

constexpr uint64_t kSegmentBits = uint64_t(1) << 20;
constexpr uint64_t kSieveBudget = uint64_t(1) << 31;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((__uint128_t(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Miller-Rabin strong-probable-prime test to base a.
bool sprp(uint64_t n, uint64_t a) {
    uint64_t d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Simple sieve of [0, n], no segmentation. Used to seed the segmented sieve.
std::vector<bool> small_sieve(uint64_t n) {
    std::vector<bool> p(n + 1, true);
    p[0] = false;
    if (n >= 1) p[1] = false;
    for (uint64_t i = 2; i * i <= n; ++i)
        if (p[i])
            for (uint64_t j = i * i; j <= n; j += i) p[j] = false;
    return p;
}

} // namespace

bool is_prime(uint64_t x) {
    if (x < 2) return false;
    for (uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (x == p) return true;
        if (x % p == 0) return false;
    }
    // This base set is deterministic for all n < 3.3e24, covering 2^63.
    for (uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
        if (!sprp(x, a)) return false;
    return true;
}

std::vector<bool> sieve_upto(uint64_t n) {
    if (n < 2) throw std::domain_error("sieve_upto: n must be >= 2");
    if (n > kSieveBudget)
        throw std::length_error("sieve_upto: n exceeds memory budget");
    uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(n))) + 2;
    std::vector<bool> base = small_sieve(root);
    std::vector<uint64_t> base_primes;
    for (uint64_t i = 2; i <= root; ++i)
        if (base[i]) base_primes.push_back(i);

    std::vector<bool> out(n + 1, true);
    out[0] = false;
    out[1] = false;
    for (uint64_t lo = 2; lo <= n; lo += kSegmentBits) {
        uint64_t hi = std::min(n, lo + kSegmentBits - 1);
        for (uint64_t p : base_primes) {
            uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (uint64_t j = start; j <= hi; j += p) out[j] = false;
        }
    }
    return out;
}

void for_each_prime_in_class(uint64_t r, uint64_t m, uint64_t lo, uint64_t hi,
                             const std::function<bool(uint64_t)>& visit) {
    if (m < 1) throw std::domain_error("primes_in_class: need m >= 1");
    r %= m;
    if (lo > hi) return;
    uint64_t x = lo + ((r + m - lo % m) % m);
    for (; x <= hi && x >= lo; x += m) {
        if (is_prime(x) && !visit(x)) return;
        if (hi - x < m) break; // guard wraparound
    }
}

std::vector<uint64_t> primes_in_class(uint64_t r, uint64_t m, uint64_t lo,
                                      uint64_t hi) {
    std::vector<uint64_t> out;
    for_each_prime_in_class(r, m, lo, hi, [&](uint64_t p) {
        out.push_back(p);
        return true;
    });
    return out;
}

Pow2Split pow2_split(uint64_t a) {
    if (a < 1) throw std::domain_error("pow2_split: a must be >= 1");
    uint32_t u = static_cast<uint32_t>(std::countr_zero(a));
    uint64_t odd = a >> u;
    return Pow2Split{(odd - 1) / 2, u};
}

} // namespace apg
