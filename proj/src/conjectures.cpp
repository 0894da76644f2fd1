#include "apg/conjectures.hpp"

#include "apg/checked.hpp"
#include "apg/primality.hpp"
#include "apg/progression.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace apg {

std::string SearchPolicy::fingerprint() const {
    std::string s = "q_bound=" + std::to_string(q_bound);
    s += ";k_max=" + std::to_string(k_max);
    s += ";ordering=";
    s += (ordering == PairOrdering::AnyOrder) ? "any" : "increasing";
    s += ";allow_equal=" + std::to_string(allow_equal ? 1 : 0);
    s += ";positive=" + std::to_string(require_positive_terms ? 1 : 0);
    s += ";adaptive=" + std::to_string(adaptive ? 1 : 0);
    return s;
}

const char* range_mode_name(RangeMode mode) {
    switch (mode) {
        case RangeMode::Even: return "even";
        case RangeMode::Odd: return "odd";
        case RangeMode::Unified: return "unified";
        case RangeMode::WitnessEven: return "witness-even";
        case RangeMode::WitnessOdd: return "witness-odd";
    }
    return "?";
}

namespace {

bool odd_prime(int64_t x) {
    return x >= 3 && x % 2 == 1 && is_prime(static_cast<uint64_t>(x));
}

// Policy filter applied to every candidate pair before it is emitted.
// term_count is the number of progression terms the certificate sums.
bool pair_admissible(int64_t p, int64_t q, uint64_t term_count,
                     const SearchPolicy& policy) {
    if (p == q && !policy.allow_equal) return false;
    if (policy.ordering == PairOrdering::RequireIncreasing && p >= q)
        return false;
    if (policy.require_positive_terms && p > q) {
        // last term a_{term_count} = p + (term_count-1)(q-p)
        int128 last = int128(p) + int128(term_count - 1) * (q - p);
        if (last <= 0) return false;
    }
    return true;
}

std::vector<uint64_t> divisors_ascending(uint64_t a) {
    std::vector<uint64_t> small, large;
    for (uint64_t d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        small.push_back(d);
        if (d != a / d) large.push_back(a / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

WitnessResult witness_linear(uint64_t n, const SearchPolicy& policy,
                             WitnessVariant variant) {
    if (n < 2) throw std::domain_error("witness search: n must be >= 2");
    // EvenPrimed forms: p = 2k(2n-1)+1, q = 2k(2n-3)+1
    // OddPrimed forms:  p = 2kn+1,      q = 2k(n-1)+1
    uint64_t cp = (variant == WitnessVariant::EvenPrimed) ? 2 * n - 1 : n;
    uint64_t cq = (variant == WitnessVariant::EvenPrimed) ? 2 * n - 3 : n - 1;
    if (policy.ordering == PairOrdering::RequireIncreasing)
        return Unresolved{policy.k_max}; // both families have p > q identically

    uint64_t bound = policy.k_max;
    uint64_t k = 1;
    for (;;) {
        for (; k <= bound; ++k) {
            int64_t p = narrow63(int128(2) * k * cp + 1);
            int64_t q = narrow63(int128(2) * k * cq + 1);
            if (!is_prime(static_cast<uint64_t>(p)) ||
                !is_prime(static_cast<uint64_t>(q)))
                continue;
            int128 ident = int128(cp) * q - int128(cq) * p;
            int128 expect = (variant == WitnessVariant::EvenPrimed) ? 2 : 1;
            if (ident != expect)
                throw std::logic_error("witness identity violated");
            return WitnessCertificate{n, k, p, q, variant, bound};
        }
        if (!policy.adaptive || bound >= SearchPolicy::kHardCap) break;
        bound = std::min(bound * 2, SearchPolicy::kHardCap);
    }
    return Unresolved{bound};
}

// Smallest-p Goldbach scan over odd primes, honoring the policy.
std::optional<RepresentationCertificate> even_pair_branch(
    uint64_t a, const SearchPolicy& policy) {
    for (uint64_t p = 3; 2 * p <= a; p += 2) {
        if (!is_prime(p)) continue;
        uint64_t q = a - p;
        if (!is_prime(q)) continue;
        if (!pair_admissible(int64_t(p), int64_t(q), 2, policy)) continue;
        return RepresentationCertificate{a, RepVariant::Even, 1, int64_t(p),
                                         int64_t(q)};
    }
    return std::nullopt;
}

} // namespace

std::optional<std::pair<int64_t, int64_t>> goldbach_pair(uint64_t a) {
    if (a < 6 || a % 2 != 0)
        throw std::domain_error("goldbach_pair: a must be even and >= 6");
    for (uint64_t p = 3; 2 * p <= a; p += 2)
        if (is_prime(p) && is_prime(a - p))
            return std::make_pair(int64_t(p), int64_t(a - p));
    return std::nullopt;
}

WitnessResult witness_even(uint64_t n, const SearchPolicy& policy) {
    return witness_linear(n, policy, WitnessVariant::EvenPrimed);
}

WitnessResult witness_odd(uint64_t n, const SearchPolicy& policy) {
    return witness_linear(n, policy, WitnessVariant::OddPrimed);
}

RepResult represent_even(uint64_t a, const SearchPolicy& policy) {
    if (a < 4 || a % 2 != 0)
        throw std::domain_error("represent_even: a must be even and >= 4");

    if (auto cert = even_pair_branch(a, policy)) return *cert;

    SearchPolicy current = policy;
    for (;;) {
        for (uint64_t n : divisors_ascending(a)) {
            if (n < 2) continue;
            uint64_t r = a / n;
            if (r % 2 != 0) continue; // (2n-1)q - (2n-3)p is even for odd p,q

            if (r == 2) {
                // a = 2n: every solution of the difference identity, minimal k first.
                SearchPolicy wp = current;
                wp.adaptive = false;
                WitnessResult w = witness_even(n, wp);
                if (auto* cert = std::get_if<WitnessCertificate>(&w)) {
                    if (pair_admissible(cert->p, cert->q, 2 * n, current))
                        return RepresentationCertificate{a, RepVariant::Even, n,
                                                         cert->p, cert->q};
                }
                continue;
            }

            uint64_t modulus = 2 * n - 3;
            std::optional<RepresentationCertificate> found;
            auto try_q = [&](uint64_t q) {
                int128 num = int128(2 * n - 1) * q - r;
                if (num <= 0 || num % modulus != 0) return true;
                int64_t p = narrow63(num / modulus);
                if (!odd_prime(p)) return true;
                if (!pair_admissible(p, int64_t(q), 2 * n, current)) return true;
                found = RepresentationCertificate{a, RepVariant::Even, n, p,
                                                  int64_t(q)};
                return false;
            };
            if (modulus == 1) {
                for_each_prime_in_class(1, 2, 3, current.q_bound, try_q);
            } else {
                // 2n-1 == 2 (mod 2n-3), so q == r * inv(2) (mod 2n-3).
                uint64_t inv2 = (modulus + 1) / 2;
                uint64_t q0 = (r % modulus) * (inv2 % modulus) % modulus;
                for_each_prime_in_class(q0, modulus, 3, current.q_bound, try_q);
            }
            if (found) return *found;
        }
        if (!current.adaptive || current.q_bound >= SearchPolicy::kHardCap)
            break;
        current.q_bound = std::min(current.q_bound * 2, SearchPolicy::kHardCap);
        current.k_max = std::min(current.k_max * 2, SearchPolicy::kHardCap);
    }
    return Unresolved{current.q_bound};
}

RepResult represent_odd(uint64_t a, const SearchPolicy& policy) {
    if (a < 5 || a % 2 == 0)
        throw std::domain_error("represent_odd: a must be odd and >= 5");

    SearchPolicy current = policy;
    for (;;) {
        for (uint64_t d : divisors_ascending(a)) {
            if (d < 3) continue; // d = 2n+1 >= 3
            uint64_t n = (d - 1) / 2;
            uint64_t r = a / d;

            if (n == 1) {
                // a = 3q; the p-coefficient vanishes, p is free.
                if (!is_prime(r) || r < 3) continue;
                for (uint64_t p = 3; p <= 100; p += 2) {
                    if (!is_prime(p)) continue;
                    if (!pair_admissible(int64_t(p), int64_t(r), 3, current))
                        continue;
                    return RepresentationCertificate{a, RepVariant::Odd, 1,
                                                     int64_t(p), int64_t(r)};
                }
                continue;
            }

            if (r == 1) {
                // a = 2n+1: every solution of the difference identity, minimal k first.
                SearchPolicy wp = current;
                wp.adaptive = false;
                WitnessResult w = witness_odd(n, wp);
                if (auto* cert = std::get_if<WitnessCertificate>(&w)) {
                    if (pair_admissible(cert->p, cert->q, 2 * n + 1, current))
                        return RepresentationCertificate{a, RepVariant::Odd, n,
                                                         cert->p, cert->q};
                }
                continue;
            }

            uint64_t modulus = n - 1;
            std::optional<RepresentationCertificate> found;
            auto try_q = [&](uint64_t q) {
                int128 num = int128(n) * q - r;
                if (num <= 0 || num % modulus != 0) return true;
                int64_t p = narrow63(num / modulus);
                if (!odd_prime(p)) return true;
                if (!pair_admissible(p, int64_t(q), 2 * n + 1, current))
                    return true;
                found = RepresentationCertificate{a, RepVariant::Odd, n, p,
                                                  int64_t(q)};
                return false;
            };
            if (modulus == 1) {
                for_each_prime_in_class(1, 2, 3, current.q_bound, try_q);
            } else {
                // n == 1 (mod n-1), so q == r (mod n-1).
                for_each_prime_in_class(r % modulus, modulus, 3,
                                        current.q_bound, try_q);
            }
            if (found) return *found;
        }
        if (!current.adaptive || current.q_bound >= SearchPolicy::kHardCap)
            break;
        current.q_bound = std::min(current.q_bound * 2, SearchPolicy::kHardCap);
        current.k_max = std::min(current.k_max * 2, SearchPolicy::kHardCap);
    }
    return Unresolved{current.q_bound};
}

RepResult represent_any(uint64_t a, const SearchPolicy& policy) {
    if (a < 3) throw std::domain_error("represent_any: a must be >= 3");
    if (a == 3) {
        // Single term: S_1(p,q) = p. Any odd prime q completes the pair.
        return RepresentationCertificate{3, RepVariant::Unified, 1, 3, 5};
    }
    RepResult inner = (a % 2 == 0) ? represent_even(a, policy)
                                   : represent_odd(a, policy);
    if (auto* u = std::get_if<Unresolved>(&inner)) return *u;
    auto& cert = std::get<RepresentationCertificate>(inner);
    uint64_t term_count = (a % 2 == 0) ? 2 * cert.n : 2 * cert.n + 1;
    if (term_count % 2 != a % 2)
        throw std::logic_error("parity mismatch between sum and term count");
    return RepresentationCertificate{a, RepVariant::Unified, term_count, cert.p,
                                     cert.q};
}

bool verify_certificate(const RepresentationCertificate& cert) {
    if (!odd_prime(cert.p) || !odd_prime(cert.q)) return false;
    if (cert.n < 1) return false;
    uint64_t term_count = 0;
    switch (cert.variant) {
        case RepVariant::Even:
            term_count = 2 * cert.n;
            if (cert.a % 2 != 0) return false;
            break;
        case RepVariant::Odd:
            term_count = 2 * cert.n + 1;
            if (cert.a % 2 == 0) return false;
            break;
        case RepVariant::Unified:
            term_count = cert.n;
            if (cert.a % 2 != term_count % 2) return false;
            break;
    }
    try {
        PrimePair pair{cert.p, cert.q};
        int64_t sum = direct_sum_oracle(pair, RunWindow{term_count, 0});
        return sum >= 0 && static_cast<uint64_t>(sum) == cert.a;
    } catch (const std::overflow_error&) {
        return false;
    }
}

bool verify_certificate(const WitnessCertificate& cert) {
    if (cert.n < 2 || cert.k < 1) return false;
    uint64_t cp, cq;
    int128 expect;
    if (cert.variant == WitnessVariant::EvenPrimed) {
        cp = 2 * cert.n - 1;
        cq = 2 * cert.n - 3;
        expect = 2;
    } else {
        cp = cert.n;
        cq = cert.n - 1;
        expect = 1;
    }
    if (int128(cert.p) != int128(2) * cert.k * cp + 1) return false;
    if (int128(cert.q) != int128(2) * cert.k * cq + 1) return false;
    if (!odd_prime(cert.p) || !odd_prime(cert.q)) return false;
    return int128(cp) * cert.q - int128(cq) * cert.p == expect;
}

RangeSummary verify_range(RangeMode mode, uint64_t lo, uint64_t hi,
                          const SearchPolicy& policy, int workers) {
    if (lo > hi) throw std::domain_error("verify_range: lo must be <= hi");

    std::vector<uint64_t> values;
    auto add_range = [&](uint64_t min, uint64_t step_parity) {
        uint64_t v = std::max(lo, min);
        if (step_parity != 2 && v % 2 != step_parity % 2) ++v;
        uint64_t step = (step_parity == 2) ? 1 : 2;
        for (; v <= hi; v += step) values.push_back(v);
    };
    switch (mode) {
        case RangeMode::Even: add_range(4, 0); break;
        case RangeMode::Odd: add_range(5, 1); break;
        case RangeMode::Unified: add_range(3, 2); break;
        case RangeMode::WitnessEven:
        case RangeMode::WitnessOdd: add_range(2, 2); break;
    }

    std::vector<std::optional<AnyCertificate>> results(values.size());
    std::vector<uint8_t> failed(values.size(), 0);

    int threads = workers > 0 ? workers : 0;
#ifdef _OPENMP
    if (threads == 0) threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(values.size()); ++i) {
        uint64_t v = values[i];
        try {
            switch (mode) {
                case RangeMode::Even:
                case RangeMode::Odd:
                case RangeMode::Unified: {
                    RepResult r = (mode == RangeMode::Even)
                                      ? represent_even(v, policy)
                                      : (mode == RangeMode::Odd)
                                            ? represent_odd(v, policy)
                                            : represent_any(v, policy);
                    if (auto* c = std::get_if<RepresentationCertificate>(&r))
                        results[i] = *c;
                    else
                        failed[i] = 1;
                    break;
                }
                case RangeMode::WitnessEven:
                case RangeMode::WitnessOdd: {
                    WitnessResult w = (mode == RangeMode::WitnessEven)
                                          ? witness_even(v, policy)
                                          : witness_odd(v, policy);
                    if (auto* c = std::get_if<WitnessCertificate>(&w))
                        results[i] = *c;
                    else
                        failed[i] = 1;
                    break;
                }
            }
        } catch (const std::overflow_error&) {
            failed[i] = 1;
        }
    }

    RangeSummary summary;
    summary.mode = mode;
    summary.lo = lo;
    summary.hi = hi;
    for (size_t i = 0; i < values.size(); ++i) {
        if (failed[i]) {
            ++summary.unresolved;
            summary.unresolved_values.push_back(values[i]);
            continue;
        }
        ++summary.resolved;
        summary.certificates.push_back(*results[i]);
        if (auto* w = std::get_if<WitnessCertificate>(&*results[i]))
            summary.max_witness_k = std::max(summary.max_witness_k, w->k);
    }
    return summary;
}

} // namespace apg
