#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace apg {

enum class RepVariant { Even, Odd, Unified };
enum class WitnessVariant { EvenPrimed, OddPrimed };
enum class PairOrdering { AnyOrder, RequireIncreasing };

enum class RangeMode { Even, Odd, Unified, WitnessEven, WitnessOdd };

// Certificate for one of the representation identities:
//   Even:    a = n((2n-1)q - (2n-3)p)
//   Odd:     a = (2n+1)(nq - (n-1)p)
//   Unified: a = (n/2)((n-1)q - (n-3)p), n the full term count
struct RepresentationCertificate {
    uint64_t a;
    RepVariant variant;
    uint64_t n;
    int64_t p;
    int64_t q;
};

// Certificate that k makes both linear forms prime:
//   EvenPrimed: p = 2k(2n-1)+1, q = 2k(2n-3)+1, so (2n-1)q - (2n-3)p = 2
//   OddPrimed:  p = 2kn+1,      q = 2k(n-1)+1,  so nq - (n-1)p = 1
struct WitnessCertificate {
    uint64_t n;
    uint64_t k; // minimal among k <= k_bound
    int64_t p;
    int64_t q;
    WitnessVariant variant;
    uint64_t k_bound;
};

struct SearchPolicy {
    uint64_t q_bound = 1'000'000;
    uint64_t k_max = 100'000;
    PairOrdering ordering = PairOrdering::AnyOrder;
    bool allow_equal = false;
    bool require_positive_terms = false;
    bool adaptive = true; // double bounds up to the hard cap before giving up

    static constexpr uint64_t kHardCap = 1'000'000'000;

    std::string fingerprint() const;
};

// A bounded search that found nothing. Never a counterexample claim.
struct Unresolved {
    uint64_t bound; // the exhausted q_bound or k_max
};

using WitnessResult = std::variant<WitnessCertificate, Unresolved>;
using RepResult = std::variant<RepresentationCertificate, Unresolved>;

// Classical Goldbach pair with smallest p; p = q permitted here.
// nullopt would be a classical-Goldbach counterexample.
std::optional<std::pair<int64_t, int64_t>> goldbach_pair(uint64_t a);

WitnessResult witness_even(uint64_t n, const SearchPolicy& policy);
WitnessResult witness_odd(uint64_t n, const SearchPolicy& policy);

RepResult represent_even(uint64_t a, const SearchPolicy& policy);
RepResult represent_odd(uint64_t a, const SearchPolicy& policy);
RepResult represent_any(uint64_t a, const SearchPolicy& policy);

// Re-derives every invariant independently of the search code, including
// re-primality-testing p, q and re-summing via the term-by-term oracle.
bool verify_certificate(const RepresentationCertificate& cert);
bool verify_certificate(const WitnessCertificate& cert);

using AnyCertificate = std::variant<RepresentationCertificate, WitnessCertificate>;

struct RangeSummary {
    RangeMode mode;
    uint64_t lo = 0;
    uint64_t hi = 0;
    uint64_t resolved = 0;
    uint64_t unresolved = 0;
    std::vector<uint64_t> unresolved_values;
    uint64_t max_witness_k = 0;
    std::vector<AnyCertificate> certificates; // sorted by a (or n)
};

// Runs the matching single-instance search over every admissible value in
// [lo, hi]. Output is deterministic regardless of worker count.
RangeSummary verify_range(RangeMode mode, uint64_t lo, uint64_t hi,
                          const SearchPolicy& policy, int workers = 0);

const char* range_mode_name(RangeMode mode);

} // namespace apg
