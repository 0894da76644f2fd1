#include "apg/progression.hpp"

#include "apg/checked.hpp"
#include "apg/primality.hpp"

#include <stdexcept>

namespace apg {

namespace {

// n((n+2m-1)q - (n+2m-3)p)/2 with the divisibility asserted before dividing.
int64_t run_closed_form(int64_t p, int64_t q, uint64_t n, uint64_t m) {
    int128 nn = n;
    int128 c = n + 2 * int128(m);
    int128 prod = nn * ((c - 1) * q - (c - 3) * p);
    if (prod % 2 != 0)
        throw std::logic_error("run sum numerator is odd"); // cannot happen for odd p,q
    return narrow63(prod / 2);
}

} // namespace

PrimePair make_prime_pair(int64_t p, int64_t q, bool allow_equal) {
    if (p < 3 || q < 3 || p % 2 == 0 || q % 2 == 0 ||
        !is_prime(static_cast<uint64_t>(p)) || !is_prime(static_cast<uint64_t>(q)))
        throw std::invalid_argument("PrimePair requires two odd primes");
    if (p == q && !allow_equal)
        throw std::invalid_argument("equal pair p = q requires explicit opt-in");
    return PrimePair{p, q};
}

int64_t term(const PrimePair& pair, uint64_t k) {
    if (k < 1) throw std::domain_error("term: k must be >= 1");
    return narrow63(int128(k - 1) * (pair.q - pair.p) + pair.p);
}

int64_t sum_first(const PrimePair& pair, uint64_t n) {
    if (n < 1) throw std::domain_error("sum_first: n must be >= 1");
    return run_closed_form(pair.p, pair.q, n, 0);
}

int64_t sum_run(const PrimePair& pair, const RunWindow& w) {
    if (w.n < 1) throw std::domain_error("sum_run: n must be >= 1");
    return run_closed_form(pair.p, pair.q, w.n, w.m);
}

uint64_t sum_run_base(const RunWindow& w) {
    if (w.n < 1) throw std::domain_error("sum_run_base: n must be >= 1");
    int128 prod = int128(w.n) * (int128(w.n) + 2 * int128(w.m) + 3);
    return narrow63u(prod / 2);
}

uint64_t sum_twin(int64_t p, const RunWindow& w) {
    if (w.n < 1) throw std::domain_error("sum_twin: n must be >= 1");
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<uint64_t>(p)))
        throw std::invalid_argument("sum_twin: p must be an odd prime");
    return narrow63u(int128(w.n) * (int128(w.n) + 2 * int128(w.m) + p - 1));
}

int64_t direct_sum_oracle(const PrimePair& pair, const RunWindow& w) {
    if (w.n < 1) throw std::domain_error("direct_sum_oracle: n must be >= 1");
    int128 acc = 0;
    for (uint64_t i = w.m + 1; i <= w.m + w.n; ++i)
        acc += term(pair, i);
    return narrow63(acc);
}

} // namespace apg
