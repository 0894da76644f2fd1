#include "apg/conjectures.hpp"

#include "apg/progression.hpp"

#include <doctest.h>

#include <cstdint>
#include <stdexcept>

using namespace apg;

namespace {

bool td_prime(uint64_t x) {
    if (x < 2) return false;
    if (x % 2 == 0) return x == 2;
    for (uint64_t d = 3; d * d <= x; d += 2)
        if (x % d == 0) return false;
    return true;
}

// Independent witness oracle: linear scan over k with
// trial-division primality.
uint64_t witness_oracle(uint64_t n, bool even_variant, uint64_t cap = 100000) {
    uint64_t cp = even_variant ? 2 * n - 1 : n;
    uint64_t cq = even_variant ? 2 * n - 3 : n - 1;
    for (uint64_t k = 1; k <= cap; ++k)
        if (td_prime(2 * k * cp + 1) && td_prime(2 * k * cq + 1)) return k;
    return 0;
}

} // namespace

TEST_CASE("goldbach_pair") {
    CHECK(goldbach_pair(6) == std::make_pair<int64_t, int64_t>(3, 3));
    CHECK(goldbach_pair(10) == std::make_pair<int64_t, int64_t>(3, 7));
    CHECK(goldbach_pair(100) == std::make_pair<int64_t, int64_t>(3, 97));
    CHECK_THROWS_AS(goldbach_pair(4), std::domain_error);
    CHECK_THROWS_AS(goldbach_pair(7), std::domain_error);
}

TEST_CASE("witness_even small cases against the oracle") {
    SearchPolicy policy;
    for (uint64_t n : {2, 3, 4, 5, 10, 17, 100}) {
        uint64_t expect = witness_oracle(n, true);
        REQUIRE(expect > 0);
        auto w = std::get<WitnessCertificate>(witness_even(n, policy));
        CHECK(w.k == expect);
        CHECK(verify_certificate(w));
    }
    auto w2 = std::get<WitnessCertificate>(witness_even(2, policy));
    CHECK(w2.p == 7);
    CHECK(w2.q == 3);
    auto w3 = std::get<WitnessCertificate>(witness_even(3, policy));
    CHECK(w3.p == 11);
    CHECK(w3.q == 7);
    auto w4 = std::get<WitnessCertificate>(witness_even(4, policy));
    CHECK(w4.k == 3);
    CHECK(w4.p == 43);
    CHECK(w4.q == 31);
}

TEST_CASE("witness_odd small cases against the oracle") {
    SearchPolicy policy;
    for (uint64_t n : {2, 3, 4, 5, 11, 60}) {
        uint64_t expect = witness_oracle(n, false);
        REQUIRE(expect > 0);
        auto w = std::get<WitnessCertificate>(witness_odd(n, policy));
        CHECK(w.k == expect);
        CHECK(verify_certificate(w));
    }
    auto w2 = std::get<WitnessCertificate>(witness_odd(2, policy));
    CHECK(w2.p == 5);
    CHECK(w2.q == 3);
    auto w4 = std::get<WitnessCertificate>(witness_odd(4, policy));
    CHECK(w4.k == 2);
    CHECK(w4.p == 17);
    CHECK(w4.q == 13);
    auto w5 = std::get<WitnessCertificate>(witness_odd(5, policy));
    CHECK(w5.k == 24);
    CHECK(w5.p == 241);
    CHECK(w5.q == 193);
}

TEST_CASE("witness searches under RequireIncreasing are unresolved") {
    SearchPolicy policy;
    policy.ordering = PairOrdering::RequireIncreasing;
    CHECK(std::holds_alternative<Unresolved>(witness_even(5, policy)));
}

TEST_CASE("represent_even known values") {
    SearchPolicy policy;
    auto c8 = std::get<RepresentationCertificate>(represent_even(8, policy));
    CHECK(c8.n == 1);
    CHECK(c8.p == 3);
    CHECK(c8.q == 5);

    auto c4 = std::get<RepresentationCertificate>(represent_even(4, policy));
    CHECK(c4.n == 2);
    CHECK(c4.p == 7);
    CHECK(c4.q == 3);

    auto c6 = std::get<RepresentationCertificate>(represent_even(6, policy));
    CHECK(c6.n == 3);
    CHECK(c6.p == 11);
    CHECK(c6.q == 7);

    CHECK_THROWS_AS(represent_even(7, policy), std::domain_error);
}

TEST_CASE("represent_odd known values") {
    SearchPolicy policy;
    auto c9 = std::get<RepresentationCertificate>(represent_odd(9, policy));
    CHECK(c9.n == 1);
    CHECK(c9.p == 5);
    CHECK(c9.q == 3);

    auto c5 = std::get<RepresentationCertificate>(represent_odd(5, policy));
    CHECK(c5.n == 2);
    CHECK(c5.p == 5);
    CHECK(c5.q == 3);

    auto c25 = std::get<RepresentationCertificate>(represent_odd(25, policy));
    CHECK(c25.n == 2);
    CHECK(c25.p == 17);
    CHECK(c25.q == 11);

    auto c11 = std::get<RepresentationCertificate>(represent_odd(11, policy));
    CHECK(c11.n == 5);
    CHECK(c11.p == 241);
    CHECK(c11.q == 193);

    CHECK_THROWS_AS(represent_odd(8, policy), std::domain_error);
}

TEST_CASE("represent_any dispatch and parity") {
    SearchPolicy policy;
    auto c8 = std::get<RepresentationCertificate>(represent_any(8, policy));
    CHECK(c8.variant == RepVariant::Unified);
    CHECK(c8.n == 2);
    CHECK(c8.p == 3);
    CHECK(c8.q == 5);

    auto c9 = std::get<RepresentationCertificate>(represent_any(9, policy));
    CHECK(c9.n == 3);
    CHECK(c9.q == 3);

    auto c4 = std::get<RepresentationCertificate>(represent_any(4, policy));
    CHECK(c4.n == 4);
    CHECK(c4.p == 7);
    CHECK(c4.q == 3);
    CHECK(direct_sum_oracle(PrimePair{7, 3}, {4, 0}) == 4);

    auto c3 = std::get<RepresentationCertificate>(represent_any(3, policy));
    CHECK(verify_certificate(c3));
}

TEST_CASE("verify_certificate accepts real and rejects forged certificates") {
    CHECK(verify_certificate(
        RepresentationCertificate{4, RepVariant::Even, 2, 7, 3}));
    CHECK_FALSE(verify_certificate(
        RepresentationCertificate{4, RepVariant::Even, 2, 7, 5}));
    CHECK(verify_certificate(
        WitnessCertificate{2, 1, 5, 3, WitnessVariant::OddPrimed, 100}));
    CHECK_FALSE(verify_certificate(
        WitnessCertificate{2, 1, 5, 5, WitnessVariant::OddPrimed, 100}));
    // wrong parity
    CHECK_FALSE(verify_certificate(
        RepresentationCertificate{9, RepVariant::Even, 2, 7, 3}));
    // composite p
    CHECK_FALSE(verify_certificate(
        RepresentationCertificate{12, RepVariant::Even, 1, 9, 3}));
}

TEST_CASE("emitted certificates all round-trip through the verifier") {
    SearchPolicy policy;
    for (uint64_t a = 4; a <= 600; a += 2) {
        auto c = std::get<RepresentationCertificate>(represent_even(a, policy));
        REQUIRE(verify_certificate(c));
        REQUIRE(c.a % 2 == 0);
    }
    for (uint64_t a = 5; a <= 601; a += 2) {
        auto c = std::get<RepresentationCertificate>(represent_odd(a, policy));
        REQUIRE(verify_certificate(c));
        REQUIRE(c.a % 2 == 1);
    }
}

TEST_CASE("witness-to-representation bridge") {
    SearchPolicy policy;
    for (uint64_t n = 2; n <= 40; ++n) {
        auto w = std::get<WitnessCertificate>(witness_even(n, policy));
        auto c = std::get<RepresentationCertificate>(represent_even(2 * n, policy));
        if (c.n == n) {
            CHECK(c.p == w.p);
            CHECK(c.q == w.q);
        }
        CHECK(verify_certificate(RepresentationCertificate{
            2 * n, RepVariant::Even, n, w.p, w.q}));
    }
}

TEST_CASE("verify_range summaries") {
    SearchPolicy policy;
    auto even = verify_range(RangeMode::Even, 4, 100, policy, 2);
    CHECK(even.resolved == 49);
    CHECK(even.unresolved == 0);
    CHECK(even.certificates.size() == 49);

    auto we = verify_range(RangeMode::WitnessEven, 2, 100, policy, 2);
    CHECK(we.unresolved == 0);
    CHECK(we.max_witness_k > 0);

    auto odd = verify_range(RangeMode::Odd, 5, 5, policy, 1);
    CHECK(odd.resolved == 1);
}

TEST_CASE("verify_range is deterministic across worker counts") {
    SearchPolicy policy;
    auto one = verify_range(RangeMode::Unified, 3, 300, policy, 1);
    auto many = verify_range(RangeMode::Unified, 3, 300, policy, 8);
    REQUIRE(one.certificates.size() == many.certificates.size());
    for (size_t i = 0; i < one.certificates.size(); ++i) {
        auto& a = std::get<RepresentationCertificate>(one.certificates[i]);
        auto& b = std::get<RepresentationCertificate>(many.certificates[i]);
        CHECK(a.a == b.a);
        CHECK(a.n == b.n);
        CHECK(a.p == b.p);
        CHECK(a.q == b.q);
    }
}

TEST_CASE("policy fingerprint is stable") {
    SearchPolicy policy;
    CHECK(policy.fingerprint() ==
          "q_bound=1000000;k_max=100000;ordering=any;allow_equal=0;positive=0;"
          "adaptive=1");
}
