#include "apg/sylvester.hpp"

#include "apg/checked.hpp"
#include "apg/primality.hpp"
#include "apg/progression.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace apg {

namespace {

// Smallest odd factor >= 3 of odd s, or 0 if s is prime (or 1).
uint64_t smallest_odd_factor(uint64_t s) {
    for (uint64_t t = 3; t * t <= s; t += 2)
        if (s % t == 0) return t;
    return 0;
}

// Brute-force fallback for the m >= min_m reading of the window space.
std::optional<Representable> scan_window(uint64_t a, uint64_t min_m) {
    uint64_t target = 2 * a; // n(n+2m+3) = 2a
    for (uint64_t n = 2; n * n < target; ++n) {
        if (target % n != 0) continue;
        uint64_t c = target / n;
        if (c < n + 3 + 2 * min_m) continue;
        if ((c - n - 3) % 2 != 0) continue;
        return Representable{n, (c - n - 3) / 2};
    }
    return std::nullopt;
}

} // namespace

SylvesterClassification classify_base(uint64_t a, uint64_t min_m) {
    if (a < 4) throw std::domain_error("classify_base: a must be >= 4");
    Pow2Split s = pow2_split(a);
    uint64_t d = s.d;
    uint64_t pw = uint64_t(1) << s.u; // 2^u

    auto with_min_m = [&](Representable r) -> SylvesterClassification {
        if (r.m >= min_m) return r;
        if (auto alt = scan_window(a, min_m)) return *alt;
        return NotRepresentable{};
    };

    if (d == 0) return PowerOfTwo{s.u};
    if (pw >= 2 && d <= pw - 2)
        return with_min_m(Representable{2 * d + 1, pw - d - 2});
    if (d >= pw + 1)
        return with_min_m(Representable{2 * pw, d - pw - 1});

    // Gap cases: odd part is 2^{u+1} -+ 1.
    uint64_t odd_part = 2 * d + 1;
    uint64_t t = smallest_odd_factor(odd_part);
    if (t == 0) {
        if (d == pw - 1) return MersennePrimeForm{s.u};
        return FermatPrimeForm{s.u};
    }
    uint64_t v = odd_part / t;
    uint64_t m = (d == pw - 1) ? ((t * t - 1) * v + t - 3) / 2
                               : ((t * t - 1) * v - t - 3) / 2;
    return with_min_m(Representable{v, m});
}

std::vector<uint64_t> enumerate_omitted_serial(uint64_t n_limit) {
    if (n_limit < 4) throw std::domain_error("enumerate_omitted: N must be >= 4");
    if (n_limit > (uint64_t(1) << 33))
        throw std::length_error("enumerate_omitted: N exceeds configured budget");
    std::vector<uint8_t> hit(n_limit + 1, 0);
    for (uint64_t n = 2; n * (n + 3) / 2 <= n_limit; ++n)
        for (uint64_t sum = n * (n + 3) / 2; sum <= n_limit; sum += n)
            hit[sum] = 1;
    std::vector<uint64_t> omitted;
    for (uint64_t a = 4; a <= n_limit; ++a)
        if (!hit[a]) omitted.push_back(a);
    return omitted;
}

std::vector<uint64_t> enumerate_omitted(uint64_t n_limit) {
    if (n_limit < 4) throw std::domain_error("enumerate_omitted: N must be >= 4");
    if (n_limit > (uint64_t(1) << 33))
        throw std::length_error("enumerate_omitted: N exceeds configured budget");
    std::vector<uint8_t> hit(n_limit + 1, 0);
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<uint8_t> local(n_limit + 1, 0);
#pragma omp for schedule(dynamic, 16)
        for (int64_t n = 2; n <= int64_t(n_limit); ++n) {
            uint64_t un = static_cast<uint64_t>(n);
            if (un * (un + 3) / 2 > n_limit) continue;
            for (uint64_t sum = un * (un + 3) / 2; sum <= n_limit; sum += un)
                local[sum] = 1;
        }
#pragma omp critical
        for (uint64_t i = 0; i <= n_limit; ++i)
            if (local[i]) hit[i] = 1;
    }
#else
    return enumerate_omitted_serial(n_limit);
#endif
    std::vector<uint64_t> omitted;
    for (uint64_t a = 4; a <= n_limit; ++a)
        if (!hit[a]) omitted.push_back(a);
    return omitted;
}

PropositionReport proposition_report(uint64_t n_limit) {
    PropositionReport rep;
    for (uint64_t a : enumerate_omitted(n_limit)) {
        // Cross-check: the case analysis must put every omitted value into
        // one of the three exceptional families, with prime odd part.
        SylvesterClassification c = classify_base(a);
        if (auto* p2 = std::get_if<PowerOfTwo>(&c);
            p2 && a == uint64_t(1) << p2->u)
            rep.powers_of_two.push_back(a);
        else if (auto* mf = std::get_if<MersennePrimeForm>(&c);
                 mf && is_prime((uint64_t(2) << mf->u) - 1) &&
                 a == (uint64_t(1) << mf->u) * ((uint64_t(2) << mf->u) - 1))
            rep.mersenne_forms.push_back(a);
        else if (auto* ff = std::get_if<FermatPrimeForm>(&c);
                 ff && is_prime((uint64_t(2) << ff->u) + 1) &&
                 a == (uint64_t(1) << ff->u) * ((uint64_t(2) << ff->u) + 1))
            rep.fermat_forms.push_back(a);
        else
            rep.unexplained.push_back(a);
    }
    return rep;
}

std::optional<ConsecutiveRun> consecutive_decomposition(uint64_t a) {
    if (a < 2) throw std::domain_error("consecutive_decomposition: a must be >= 2");
    if ((a & (a - 1)) == 0) return std::nullopt;
    if (a == 3) return ConsecutiveRun{1, 2};
    SylvesterClassification c = classify_base(a);
    if (auto* r = std::get_if<Representable>(&c))
        return ConsecutiveRun{r->m + 2, r->n};
    if (auto* mf = std::get_if<MersennePrimeForm>(&c))
        return ConsecutiveRun{1, (uint64_t(2) << mf->u) - 1};
    auto& ff = std::get<FermatPrimeForm>(c);
    return ConsecutiveRun{1, uint64_t(2) << ff.u};
}

std::optional<Representable> classify_twin(int64_t p, uint64_t a,
                                           uint64_t min_n) {
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<uint64_t>(p)))
        throw std::invalid_argument("classify_twin: p must be an odd prime");
    uint64_t up = static_cast<uint64_t>(p);
    for (uint64_t n = std::max<uint64_t>(min_n, 1); n * n <= a; ++n) {
        if (a % n != 0) continue;
        uint64_t c = a / n;
        if (c < n + up - 1) continue;
        uint64_t num = c - n - (up - 1);
        if (num % 2 != 0) continue;
        return Representable{n, num / 2};
    }
    return std::nullopt;
}

} // namespace apg
