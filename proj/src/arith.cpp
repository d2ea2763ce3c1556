#include "primepat/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "primepat/error.hpp"

namespace primepat {

namespace {

constexpr std::array<Nat, 18> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                              29, 31, 37, 41, 43, 47, 53, 59, 61};

// Strong probable-prime bases; exact for n < 3.3 * 10^24.
constexpr std::array<Nat, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool strong_probable_prime(Nat n, Nat d, unsigned r, Nat a) {
    Nat x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

// a^k, or nullopt when the result exceeds limit.
std::optional<Nat> checked_pow(Nat a, unsigned k, Nat limit) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= a;
        if (acc > limit) return std::nullopt;
    }
    return static_cast<Nat>(acc);
}

}  // namespace

bool is_prime(Nat n) {
    if (n < 2) return false;
    for (Nat p : kSmallPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 67 * 67) return true;

    Nat d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (Nat a : kWitnesses) {
        if (!strong_probable_prime(n, d, r, a)) return false;
    }
    return true;
}

bool is_prime_signed(Int n) { return is_prime(magnitude(n)); }

Nat integer_root(Nat n, unsigned k) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "integer_root: k must be >= 1");
    if (k == 1 || n < 2) return n;
    auto guess = static_cast<Nat>(std::pow(static_cast<long double>(n), 1.0L / k));
    // Floating guess can be off by one in either direction.
    while (guess > 0 && !checked_pow(guess, k, n)) --guess;
    while (checked_pow(guess + 1, k, n)) ++guess;
    return guess;
}

std::optional<PrimePower> prime_power_decompose(Nat n) {
    if (n < 2) return std::nullopt;
    if (is_prime(n)) return PrimePower{n, 1};
    // Largest exponent first so the root is the prime itself, not a power of it.
    const unsigned max_k = 63 - static_cast<unsigned>(__builtin_clzll(n));
    for (unsigned k = max_k; k >= 2; --k) {
        const Nat r = integer_root(n, k);
        if (r < 2) continue;
        if (checked_pow(r, k, n) == n && is_prime(r)) return PrimePower{r, k};
    }
    return std::nullopt;
}

bool is_prime_like(Nat n) { return prime_power_decompose(n).has_value(); }

std::vector<Factor> factorize(Nat n) {
    std::vector<Factor> out;
    if (n < 2) return out;
    auto take = [&](Nat p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    take(2);
    take(3);
    for (Nat p = 5; p * p <= n; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

int moebius(Nat n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "moebius: n must be >= 1");
    int mu = 1;
    for (const auto& f : factorize(n)) {
        if (f.exponent > 1) return 0;
        mu = -mu;
    }
    return mu;
}

double mangoldt(Nat n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "mangoldt: n must be >= 1");
    const auto pp = prime_power_decompose(n);
    return pp ? std::log(static_cast<double>(pp->base)) : 0.0;
}

Nat primorial_below(Nat p) {
    Nat product = 1;
    for (Nat q = 2; q < p; ++q) {
        if (!is_prime(q)) continue;
        if (product > kNatMax / q)
            throw Error(ErrorKind::Overflow,
                        "primorial below " + std::to_string(p) + " exceeds 2^63");
        product *= q;
    }
    return product;
}

std::vector<Nat> PrimeBitmap::primes() const {
    std::vector<Nat> out;
    for (std::size_t i = 0; i < flags_.size(); ++i)
        if (flags_[i]) out.push_back(lo_ + i);
    return out;
}

std::size_t PrimeBitmap::count() const {
    return static_cast<std::size_t>(std::count(flags_.begin(), flags_.end(), std::uint8_t{1}));
}

PrimeBitmap sieve_range(Nat lo, Nat hi, const SieveConfig& config) {
    if (lo > hi) throw Error(ErrorKind::InvalidArgument, "sieve_range: lo > hi");
    if (hi - lo >= config.max_span)
        throw Error(ErrorKind::RangeTooLarge,
                    "sieve_range: span " + std::to_string(hi - lo + 1) + " exceeds budget " +
                        std::to_string(config.max_span));
    if (hi > kNatMax) throw Error(ErrorKind::Overflow, "sieve_range: hi >= 2^63");

    const std::size_t span = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::uint8_t> flags(span, 1);

    // Base primes up to sqrt(hi) by a plain sieve.
    const Nat root = integer_root(hi, 2);
    std::vector<std::uint8_t> small(static_cast<std::size_t>(root) + 1, 1);
    std::vector<Nat> base;
    for (Nat i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (Nat j = i * i; j <= root; j += i) small[j] = 0;
    }

    const std::size_t seg = std::max<std::size_t>(config.segment_size, 64);
    for (std::size_t seg_lo = 0; seg_lo < span; seg_lo += seg) {
        const std::size_t seg_hi = std::min(span, seg_lo + seg);  // exclusive
        const Nat value_lo = lo + seg_lo;
        const Nat value_hi = lo + seg_hi - 1;
        for (Nat p : base) {
            if (p * p > value_hi) break;
            Nat first = std::max(p * p, (value_lo + p - 1) / p * p);
            for (Nat v = first; v <= value_hi; v += p) flags[v - lo] = 0;
        }
    }
    for (Nat v = lo; v <= std::min<Nat>(hi, 1); ++v) flags[v - lo] = 0;
    return PrimeBitmap(lo, std::move(flags));
}

std::vector<Nat> primes_up_to(Nat n, const SieveConfig& config) {
    if (n < 2) return {};
    return sieve_range(2, n, config).primes();
}

std::vector<Nat> primes_between_open(Nat lo, Nat hi, const SieveConfig& config) {
    if (hi <= lo + 1) return {};
    return sieve_range(lo + 1, hi - 1, config).primes();
}

Gap largest_gap_in(Nat lo, Nat hi, const SieveConfig& config) {
    const auto primes = primes_between_open(lo, hi, config);
    if (primes.size() < 2)
        throw Error(ErrorKind::EmptyInterval, "fewer than two primes in (" + std::to_string(lo) +
                                                  ", " + std::to_string(hi) + ")");
    Gap best{0, 0};
    for (std::size_t i = 1; i < primes.size(); ++i) {
        const Nat g = primes[i] - primes[i - 1];
        if (g > best.gap) best = {g, primes[i - 1]};
    }
    return best;
}

std::map<Nat, std::size_t> gap_histogram(Nat lo, Nat hi, const SieveConfig& config) {
    std::map<Nat, std::size_t> hist;
    const auto primes = primes_between_open(lo, hi, config);
    for (std::size_t i = 1; i < primes.size(); ++i) ++hist[primes[i] - primes[i - 1]];
    return hist;
}

ArithmeticTable::ArithmeticTable(Nat limit)
    : limit_(limit), spf_(limit + 1, 0), mu_(limit + 1, 0) {
    if (limit >= (Nat{1} << 32)) throw Error(ErrorKind::RangeTooLarge, "ArithmeticTable: limit too large");
    std::vector<std::uint32_t> primes;
    if (limit >= 1) mu_[1] = 1;
    for (Nat i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            mu_[i] = -1;
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            const Nat m = i * p;
            if (p > spf_[i] || m > limit) break;
            spf_[m] = p;
            mu_[m] = (p == spf_[i]) ? 0 : static_cast<std::int8_t>(-mu_[i]);
        }
    }
}

double ArithmeticTable::lambda(Nat n) const {
    if (n < 2) return 0.0;
    const Nat p = spf_[n];
    Nat m = n;
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

}  // namespace primepat
