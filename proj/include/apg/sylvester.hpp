#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace apg {

// Outcomes of the base-progression classification of a >= 4.
struct Representable {
    uint64_t n; // window length, >= 2
    uint64_t m; // offset, >= 0
};
struct PowerOfTwo {
    uint32_t u; // a = 2^u
};
struct MersennePrimeForm {
    uint32_t u; // a = 2^u (2^{u+1} - 1), odd part prime
};
struct FermatPrimeForm {
    uint32_t u; // a = 2^u (2^{u+1} + 1), odd part prime
};
// Only reachable when min_m > 0 rules out every window.
struct NotRepresentable {};

using SylvesterClassification =
    std::variant<Representable, PowerOfTwo, MersennePrimeForm, FermatPrimeForm,
                 NotRepresentable>;

// Constructive classification of a as a sum of consecutive terms of A(2,3).
// Witnesses come from the explicit case analysis, never from search, except
// under a nonzero min_m where the constructed witness may be rescanned.
SylvesterClassification classify_base(uint64_t a, uint64_t min_m = 0);

// All a in [4, N] with no window (n >= 2, m >= 0) summing to a.
// Brute-force window scanning, independent of classify_base.
std::vector<uint64_t> enumerate_omitted(uint64_t n_limit);
std::vector<uint64_t> enumerate_omitted_serial(uint64_t n_limit);

struct PropositionReport {
    std::vector<uint64_t> powers_of_two;
    std::vector<uint64_t> mersenne_forms;
    std::vector<uint64_t> fermat_forms;
    std::vector<uint64_t> unexplained; // must be empty; nonempty signals a bug
};

PropositionReport proposition_report(uint64_t n_limit);

// A run of consecutive positive integers start, start+1, ..., start+length-1.
struct ConsecutiveRun {
    uint64_t start;  // >= 1
    uint64_t length; // >= 2
};

// Decomposition of a as a sum of >= 2 consecutive positive integers;
// nullopt iff a is a power of two.
std::optional<ConsecutiveRun> consecutive_decomposition(uint64_t a);

// Decides a = n(n+2m+p-1) with n >= min_n, m >= 0, by divisor scan of a.
std::optional<Representable> classify_twin(int64_t p, uint64_t a,
                                           uint64_t min_n = 2);

} // namespace apg
