#pragma once

// Prime powers admitted as prime-like multiplet members: close encounters
// between powers of distinct primes, their divergence, power-admitting
// repeats of multiplet patterns, and the quintet exceptionality test.

#include <optional>
#include <vector>

#include "primepat/arith.hpp"
#include "primepat/multiplets.hpp"

namespace primepat {

struct PrimeLike {
    Nat value;
    PrimePower decomposition;

    bool is_power() const { return decomposition.exponent >= 2; }
};

/// Throws NotPrimeLike when n is neither a prime nor a prime power.
PrimeLike make_prime_like(Nat n);

/// Proper prime powers p^k (k >= 2) up to bound, ascending.
std::vector<PrimeLike> proper_powers_up_to(Nat bound);

struct CloseEncounter {
    PrimeLike larger;
    PrimeLike smaller;
    Nat gap;
};

/// Pairs of prime-likes <= bound, at least one a proper power, differing by
/// at most max_gap. Sorted by larger value, then smaller value.
std::vector<CloseEncounter> close_encounters(Nat bound, Nat max_gap);

/// larger / smaller; the per-step factor by which equal-exponent multiples
/// of the encounter drift apart. Throws EqualBase for a shared prime.
double divergence_rate(const CloseEncounter& e);

/// Power-admitting multiplets with the anchor's pattern and starts in
/// [2, search_hi], excluding the anchor itself.
std::vector<Multiplet> repeats_with_powers(const DistancePattern& pattern, const Multiplet& anchor,
                                           Nat search_hi, unsigned workers = 1);

struct EqualDistanceTuple {
    Int start;
    Nat distance;
    Nat length;

    std::vector<Int> members() const;
    friend bool operator==(const EqualDistanceTuple&, const EqualDistanceTuple&) = default;
};

/// Length-4 prime-like progressions at `distance` with start < bound and at
/// least one proper-power member; ascending by start.
std::vector<EqualDistanceTuple> equal_distance_quartets_with_powers(Nat distance, Nat bound);

enum class Cor12Verdict { Exceptional, Inconclusive };

struct Cor12Report {
    Cor12Verdict verdict;
    PrimeLike smaller_power;  // p2^m2
    PrimeLike larger_power;   // p1^m1 = p2^m2 + 2D
    Int base_difference;      // p2 - p1
};

/// Quintet with exactly two adjacent proper-power members: exceptional when
/// p2 - p1 > 2D and p2 > 5, inconclusive otherwise. Throws PremiseViolation
/// for any other member structure.
Cor12Report corollary12_check(const EqualDistanceTuple& quintet);

}  // namespace primepat
