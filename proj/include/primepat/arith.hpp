#pragma once

// Exact 63-bit integer kernel: deterministic primality, segmented sieve,
// prime-power detection and the small arithmetic functions the series code
// is built on.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace primepat {

using Nat = std::uint64_t;
using Int = std::int64_t;

inline constexpr Nat kNatMax = (Nat{1} << 63) - 1;

/// (a * b) mod m without overflow; m may be any nonzero 64-bit value.
constexpr Nat mulmod(Nat a, Nat b, Nat m) {
    return static_cast<Nat>((static_cast<unsigned __int128>(a) * b) % m);
}

constexpr Nat powmod(Nat base, Nat exp, Nat m) {
    Nat result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Deterministic for every n < 2^64: trial division by the primes below 64,
/// then strong probable-prime tests to the 13 prime bases 2..41.
bool is_prime(Nat n);

/// Primality of |n|; -p counts as prime when p does.
bool is_prime_signed(Int n);

/// Exact |n| as a Nat (also correct for INT64_MIN).
constexpr Nat magnitude(Int n) {
    return n < 0 ? Nat{0} - static_cast<Nat>(n) : static_cast<Nat>(n);
}

struct PrimePower {
    Nat base;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// (p, k) with p^k == n when n is a prime power (k = 1 for primes).
std::optional<PrimePower> prime_power_decompose(Nat n);

/// Prime or prime power. Used wherever powers are admitted as members.
bool is_prime_like(Nat n);

/// Membership test under a multiplet admission rule, on |n|.
inline bool admits(Int n, bool admit_powers) {
    return admit_powers ? is_prime_like(magnitude(n)) : is_prime_signed(n);
}

/// floor(n^(1/k)) for k >= 1.
Nat integer_root(Nat n, unsigned k);

struct Factor {
    Nat prime;
    unsigned exponent;
};

/// Trial-division factorization; intended for n up to ~10^12.
std::vector<Factor> factorize(Nat n);

int moebius(Nat n);
double mangoldt(Nat n);

/// Product of all primes strictly below p; throws Overflow past 2^63.
Nat primorial_below(Nat p);

struct SieveConfig {
    std::size_t segment_size = std::size_t{1} << 20;
    /// Largest hi - lo + 1 sieve_range accepts.
    Nat max_span = Nat{1} << 32;
};

/// Primality flags over the closed interval [lo, hi].
class PrimeBitmap {
public:
    PrimeBitmap(Nat lo, std::vector<std::uint8_t> flags)
        : lo_(lo), flags_(std::move(flags)) {}

    Nat lo() const { return lo_; }
    Nat hi() const { return lo_ + flags_.size() - 1; }
    std::size_t size() const { return flags_.size(); }

    bool is_prime(Nat n) const { return n >= lo_ && n - lo_ < flags_.size() && flags_[n - lo_]; }
    bool operator[](std::size_t i) const { return flags_[i] != 0; }

    std::vector<Nat> primes() const;
    std::size_t count() const;

private:
    Nat lo_;
    std::vector<std::uint8_t> flags_;
};

/// Segmented sieve of Eratosthenes over [lo, hi].
PrimeBitmap sieve_range(Nat lo, Nat hi, const SieveConfig& config = {});

/// All primes <= n, ascending.
std::vector<Nat> primes_up_to(Nat n, const SieveConfig& config = {});

/// Primes p with lo < p < hi.
std::vector<Nat> primes_between_open(Nat lo, Nat hi, const SieveConfig& config = {});

struct Gap {
    Nat gap;
    Nat at;  // lower prime of the gap

    friend bool operator==(const Gap&, const Gap&) = default;
};

/// Largest gap between consecutive primes in the open interval (lo, hi);
/// ties go to the smallest lower endpoint.
Gap largest_gap_in(Nat lo, Nat hi, const SieveConfig& config = {});

/// gap -> count over consecutive primes in (lo, hi). Empty when the interval
/// holds fewer than two primes.
std::map<Nat, std::size_t> gap_histogram(Nat lo, Nat hi, const SieveConfig& config = {});

/// Tables of mu(n) and Lambda(n) for 0 <= n <= limit, from a linear sieve.
/// Index 0 is unused (zero).
class ArithmeticTable {
public:
    explicit ArithmeticTable(Nat limit);

    Nat limit() const { return limit_; }
    int mu(Nat n) const { return mu_[n]; }
    double lambda(Nat n) const;
    /// Smallest prime factor (0 for n < 2).
    Nat spf(Nat n) const { return spf_[n]; }

private:
    Nat limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::int8_t> mu_;
};

}  // namespace primepat
