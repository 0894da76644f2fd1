#pragma once

#include <cstdint>

namespace apg {

// The two generating primes of the progression A(p,q):
// a_1 = p, a_2 = q, common difference q - p.
struct PrimePair {
    int64_t p;
    int64_t q;
    bool increasing() const { return p < q; }
};

// Validates that p and q are odd primes. Equal pairs are rejected unless
// allow_equal is set (classical-Goldbach comparisons only).
PrimePair make_prime_pair(int64_t p, int64_t q, bool allow_equal = false);

// Selects n consecutive terms a_{m+1} .. a_{m+n}.
struct RunWindow {
    uint64_t n; // run length, >= 1
    uint64_t m; // offset, >= 0
};

// a_k = (k-1)(q-p) + p
int64_t term(const PrimePair& pair, uint64_t k);

// Sum of the first n terms: n((n-1)q - (n-3)p)/2, division exact.
int64_t sum_first(const PrimePair& pair, uint64_t n);

// Sum of terms a_{m+1} .. a_{m+n}: (n/2)((n+2m-1)q - (n+2m-3)p).
int64_t sum_run(const PrimePair& pair, const RunWindow& w);

// The p=2, q=3 specialization: n(n+2m+3)/2.
uint64_t sum_run_base(const RunWindow& w);

// The q = p+2 specialization: n(n+2m+p-1).
uint64_t sum_twin(int64_t p, const RunWindow& w);

// Term-by-term summation; never uses the closed forms.
int64_t direct_sum_oracle(const PrimePair& pair, const RunWindow& w);

} // namespace apg
