#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "primepat/arith.hpp"
#include "primepat/error.hpp"
#include "primepat/multiplets.hpp"

using namespace primepat;

TEST_CASE("is_prime examples") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(9216960491ULL));
    CHECK(is_prime(9918821194603ULL));
    CHECK_FALSE(is_prime(1057));  // 7 * 151
}

TEST_CASE("is_prime near the top of the range and on strong pseudoprimes") {
    CHECK_FALSE(is_prime(kNatMax));           // 2^63 - 1 = 7^2 * 73 * ...
    CHECK(is_prime(kNatMax - 24));            // 2^63 - 25
    CHECK_FALSE(is_prime(3215031751ULL));     // spsp(2,3,5,7)
    CHECK_FALSE(is_prime(3825123056546413051ULL));  // spsp to every prime base below 37
}

TEST_CASE("is_prime agrees with trial division on [0, 2e5] and around 1e12") {
    for (Nat n = 0; n <= 200'000; ++n) REQUIRE(is_prime(n) == oracle::is_prime(n));
    for (Nat n = 1'000'000'000'000ULL; n < 1'000'000'000'000ULL + 2000; ++n)
        REQUIRE(is_prime(n) == oracle::is_prime(n));
}

TEST_CASE("is_prime_signed uses the magnitude") {
    CHECK(is_prime_signed(-7));
    CHECK(is_prime_signed(13));
    CHECK_FALSE(is_prime_signed(-1));
    CHECK_FALSE(is_prime_signed(0));
    CHECK_FALSE(is_prime_signed(-9));
}

TEST_CASE("sieve_range examples") {
    CHECK(sieve_range(2, 10).primes() == std::vector<Nat>{2, 3, 5, 7});
    CHECK(sieve_range(1300, 1400).primes() ==
          std::vector<Nat>{1301, 1303, 1307, 1319, 1321, 1327, 1361, 1367, 1373, 1381, 1399});
    CHECK(sieve_range(90, 98).primes() == std::vector<Nat>{97});
    CHECK(sieve_range(0, 1).count() == 0);
}

TEST_CASE("sieve_range agrees with is_prime on [2, 1e7]") {
    const auto bitmap = sieve_range(2, 10'000'000);
    Nat mismatches = 0;
    for (Nat n = 2; n <= 10'000'000; ++n) mismatches += bitmap.is_prime(n) != is_prime(n);
    CHECK(mismatches == 0);
    CHECK(bitmap.count() == 664579);
}

TEST_CASE("sieve_range result does not depend on the segment size") {
    const Nat lo = 999'000, hi = 1'203'457;
    const auto reference = sieve_range(lo, hi).primes();
    for (std::size_t seg : {std::size_t{64}, std::size_t{1000}, std::size_t{1} << 16})
        CHECK(sieve_range(lo, hi, {seg, Nat{1} << 32}).primes() == reference);
}

TEST_CASE("sieve_range enforces the span budget") {
    CHECK_THROWS_AS(sieve_range(10, 5), Error);
    try {
        sieve_range(0, 1000, {1 << 10, 100});
        FAIL("expected range-too-large");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RangeTooLarge);
    }
}

TEST_CASE("prime_power_decompose examples") {
    auto d = prime_power_decompose(6561);
    REQUIRE(d);
    CHECK(d->base == 3);
    CHECK(d->exponent == 8);
    CHECK_FALSE(prime_power_decompose(12));
    d = prime_power_decompose(121);
    REQUIRE(d);
    CHECK(d->base == 11);
    CHECK(d->exponent == 2);
    d = prime_power_decompose(13);
    REQUIRE(d);
    CHECK(d->exponent == 1);
    d = prime_power_decompose(Nat{1} << 62);
    REQUIRE(d);
    CHECK(d->base == 2);
    CHECK(d->exponent == 62);
    // Largest prime square below 2^63.
    d = prime_power_decompose(3037000493ULL * 3037000493ULL);
    REQUIRE(d);
    CHECK(d->base == 3037000493ULL);
}

TEST_CASE("prime_power_decompose matches trial-division factorization up to 1e5") {
    for (Nat n = 2; n <= 100'000; ++n) {
        const auto got = prime_power_decompose(n);
        const auto want = oracle::prime_power(n);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            REQUIRE(got->base == want->first);
            REQUIRE(got->exponent == want->second);
            Nat v = 1;
            for (unsigned k = 0; k < got->exponent; ++k) v *= got->base;
            REQUIRE(v == n);
        }
    }
}

TEST_CASE("integer_root is exact at perfect powers") {
    CHECK(integer_root(1'000'000, 3) == 100);
    CHECK(integer_root(999'999, 3) == 99);
    CHECK(integer_root(kNatMax, 2) == 3037000499ULL);
    CHECK(integer_root(kNatMax, 62) == 2);
}

TEST_CASE("moebius and mangoldt examples") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(15) == 1);
    CHECK(moebius(18) == 0);
    CHECK(moebius(30) == -1);
    CHECK(mangoldt(8) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(mangoldt(10) == 0.0);
    CHECK(mangoldt(13) == doctest::Approx(2.564949357).epsilon(1e-9));
    CHECK(mangoldt(1) == 0.0);
}

TEST_CASE("moebius agrees with the oracle and is multiplicative on coprime pairs") {
    for (Nat n = 1; n <= 10'000; ++n) REQUIRE(moebius(n) == oracle::moebius(n));
    for (Nat a = 1; a <= 300; ++a)
        for (Nat b = 1; a * b <= 10'000; ++b)
            if (std::gcd(a, b) == 1) REQUIRE(moebius(a * b) == moebius(a) * moebius(b));
}

TEST_CASE("sum of mangoldt over divisors is log n") {
    for (Nat n = 1; n <= 10'000; ++n) {
        double s = 0.0;
        for (Nat d = 1; d <= n; ++d)
            if (n % d == 0) s += mangoldt(d);
        REQUIRE(std::abs(s - std::log(static_cast<double>(n))) < 1e-9);
    }
}

TEST_CASE("ArithmeticTable matches the pointwise functions") {
    const ArithmeticTable t(50'000);
    for (Nat n = 1; n <= 50'000; ++n) {
        REQUIRE(t.mu(n) == moebius(n));
        REQUIRE(t.lambda(n) == doctest::Approx(mangoldt(n)).epsilon(1e-15));
    }
}

TEST_CASE("primorial_below") {
    CHECK(primorial_below(3) == 2);
    CHECK(primorial_below(7) == 30);
    CHECK(primorial_below(11) == 210);
    CHECK(primorial_below(13) == 2310);
    CHECK(primorial_below(53) == 614889782588491410ULL);
    try {
        primorial_below(59);
        FAIL("expected overflow");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Overflow);
    }
}

TEST_CASE("largest_gap_in examples") {
    CHECK(largest_gap_in(1, 98) == Gap{8, 89});
    CHECK(largest_gap_in(1300, 1400) == Gap{34, 1327});
    // Open interval: 2 and 3 excluded at the ends.
    CHECK(largest_gap_in(2, 12) == Gap{4, 7});
    // Ties go to the smallest lower endpoint.
    CHECK(largest_gap_in(1, 20) == Gap{4, 7});
    try {
        largest_gap_in(90, 100);
        FAIL("expected empty-interval");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyInterval);
    }
}

TEST_CASE("largest gaps in the larger quoted intervals") {
    // Sieve values; 34 does not occur in (2110, 2200).
    CHECK(largest_gap_in(2110, 2200) == Gap{18, 2161});
    CHECK(largest_gap_in(8390, 8502) == Gap{34, 8467});
}

TEST_CASE("gap_histogram") {
    CHECK(gap_histogram(1, 20) == std::map<Nat, std::size_t>{{1, 1}, {2, 4}, {4, 2}});
    CHECK(gap_histogram(90, 96).empty());
    const auto h = gap_histogram(1, 10'000);
    std::size_t total = 0;
    for (const auto& [gap, count] : h) total += count;
    CHECK(total == primes_between_open(1, 10'000).size() - 1);
    CHECK(h.at(6) > h.at(26) * 50);
    CHECK(h.at(12) > h.at(34) * 50);
    CHECK(h.at(34) <= 2);
}

TEST_CASE("primorial_below divides every exceptional tuple distance") {
    for (Nat p : {5, 7}) {
        for (Nat d : search_equal_distance(p, p, 1'000'000, false)) REQUIRE(d % primorial_below(p) == 0);
    }
}
