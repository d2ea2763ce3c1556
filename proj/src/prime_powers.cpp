#include "primepat/prime_powers.hpp"

#include <algorithm>
#include <string>

#include "primepat/error.hpp"

namespace primepat {

PrimeLike make_prime_like(Nat n) {
    const auto pp = prime_power_decompose(n);
    if (!pp) throw Error(ErrorKind::NotPrimeLike, std::to_string(n) + " is not a prime power");
    return {n, *pp};
}

std::vector<PrimeLike> proper_powers_up_to(Nat bound) {
    std::vector<PrimeLike> out;
    if (bound < 4) return out;
    for (Nat p : primes_up_to(integer_root(bound, 2))) {
        Nat v = p * p;
        for (unsigned k = 2;; ++k) {
            out.push_back({v, {p, k}});
            if (v > bound / p) break;
            v *= p;
            if (v > bound) break;
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimeLike& a, const PrimeLike& b) { return a.value < b.value; });
    return out;
}

std::vector<CloseEncounter> close_encounters(Nat bound, Nat max_gap) {
    if (bound < 2 || max_gap < 1) throw Error(ErrorKind::InvalidArgument, "close_encounters: bound >= 2, max_gap >= 1");
    std::vector<CloseEncounter> out;
    // Every encounter involves a proper power; scan its neighbourhood.
    for (const auto& power : proper_powers_up_to(bound)) {
        const Nat lo = power.value > max_gap ? power.value - max_gap : 2;
        const Nat hi = std::min(bound, power.value + max_gap);
        for (Nat v = lo; v <= hi; ++v) {
            if (v == power.value) continue;
            const auto pp = prime_power_decompose(v);
            if (!pp) continue;
            const PrimeLike other{v, *pp};
            // Power-power pairs are seen twice; keep the one found from the larger.
            if (other.is_power() && v > power.value) continue;
            if (v > power.value)
                out.push_back({other, power, v - power.value});
            else
                out.push_back({power, other, power.value - v});
        }
    }
    std::sort(out.begin(), out.end(), [](const CloseEncounter& a, const CloseEncounter& b) {
        return a.larger.value != b.larger.value ? a.larger.value < b.larger.value
                                                : a.smaller.value < b.smaller.value;
    });
    return out;
}

double divergence_rate(const CloseEncounter& e) {
    if (e.larger.decomposition.base == e.smaller.decomposition.base)
        throw Error(ErrorKind::EqualBase, "divergence_rate: both members are powers of the same prime");
    return static_cast<double>(e.larger.value) / static_cast<double>(e.smaller.value);
}

std::vector<Multiplet> repeats_with_powers(const DistancePattern& pattern, const Multiplet& anchor,
                                           Nat search_hi, unsigned workers) {
    Multiplet admitted = anchor;
    admitted.admit_powers = true;
    if (!is_prime_multiplet(admitted))
        throw Error(ErrorKind::InvalidArgument, "repeats_with_powers: anchor is not a prime-like multiplet");
    std::vector<Multiplet> out;
    if (search_hi < 3) return out;
    for (Int s : search_pattern(pattern, 2, static_cast<Int>(search_hi), true, {workers, 0})) {
        if (s == anchor.start && pattern == anchor.pattern) continue;
        out.push_back(Multiplet{s, pattern, true});
    }
    return out;
}

std::vector<Int> EqualDistanceTuple::members() const {
    std::vector<Int> out;
    for (Nat k = 0; k < length; ++k) out.push_back(start + static_cast<Int>(k * distance));
    return out;
}

std::vector<EqualDistanceTuple> equal_distance_quartets_with_powers(Nat distance, Nat bound) {
    if (distance == 0 || distance % 2 != 0)
        throw Error(ErrorKind::InvalidArgument, "equal_distance_quartets_with_powers: distance must be even");
    std::vector<Nat> starts;
    // A qualifying quartet contains a proper power at one of its 4 slots.
    for (const auto& power : proper_powers_up_to(bound + 3 * distance)) {
        for (Nat slot = 0; slot < 4; ++slot) {
            if (power.value < 2 + slot * distance) break;
            const Nat s = power.value - slot * distance;
            if (s >= bound) continue;
            bool ok = true;
            for (Nat k = 0; k < 4 && ok; ++k) ok = is_prime_like(s + k * distance);
            if (ok) starts.push_back(s);
        }
    }
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    std::vector<EqualDistanceTuple> out;
    for (Nat s : starts) out.push_back({static_cast<Int>(s), distance, 4});
    return out;
}

Cor12Report corollary12_check(const EqualDistanceTuple& quintet) {
    if (quintet.length != 5 || quintet.distance == 0 || quintet.start < 2)
        throw Error(ErrorKind::PremiseViolation, "corollary12_check: needs a positive equal-distance quintet");
    std::vector<std::size_t> powers;
    std::vector<PrimeLike> decomposed;
    const auto values = quintet.members();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto pp = prime_power_decompose(static_cast<Nat>(values[i]));
        if (pp && pp->exponent >= 2) {
            powers.push_back(i);
            decomposed.push_back({static_cast<Nat>(values[i]), *pp});
        }
    }
    if (powers.size() != 2 || powers[1] != powers[0] + 1)
        throw Error(ErrorKind::PremiseViolation,
                    "corollary12_check: needs exactly two adjacent prime-power members");

    const PrimeLike& smaller = decomposed[0];
    const PrimeLike& larger = decomposed[1];
    const Int p2 = static_cast<Int>(smaller.decomposition.base);
    const Int p1 = static_cast<Int>(larger.decomposition.base);
    const Int diff = p2 - p1;
    const bool exceptional = p2 > 5 && diff > static_cast<Int>(quintet.distance);
    return {exceptional ? Cor12Verdict::Exceptional : Cor12Verdict::Inconclusive, smaller, larger, diff};
}

}  // namespace primepat
