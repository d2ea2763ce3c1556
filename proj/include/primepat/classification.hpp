#pragma once

// Partition of odd prime pairs (p_i < p_f, distance 2D) into the three
// median forms 2a +- D (D odd), 3(2a-1) +- D (D even, 3 does not divide D)
// and 2a+1 +- D (6 | D), plus the special pairs (+-3, ...) whose median
// fits none of them.

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>

#include "primepat/arith.hpp"

namespace primepat {

enum class TwinClass { I, II, III, Special };

std::string_view to_string(TwinClass c);

struct PrimePair {
    Int p_i;  // smaller
    Int p_f;  // larger

    Nat half_distance() const { return static_cast<Nat>(p_f - p_i) / 2; }
    Int median() const { return p_i + static_cast<Int>(half_distance()); }
};

/// Validates the pair (odd, prime in absolute value, p_i < p_f); throws
/// NotAPrimePair otherwise. Pairs containing +-2 are rejected.
PrimePair make_pair(Int p_i, Int p_f);

TwinClass classify_pair(Int p_i, Int p_f);
TwinClass classify_pair(const PrimePair& pair);

struct ClassParameters {
    Int a;
    Nat D;
};

/// Unique (a, D) with pair_from_parameters(class, a, D) == pair.
/// Throws SpecialPair for special pairs.
ClassParameters reconstruct_parameters(const PrimePair& pair);

/// The class formula evaluated at (a, D).
PrimePair pair_from_parameters(TwinClass c, Int a, Nat D);

struct Residues {
    int r_i;
    int r_f;
};

/// Residues of both members mod 6 (in {1, 5}); throws MemberDivisibleBy3.
Residues residue_refine(const PrimePair& pair);

/// Class III pair with both members = 1 mod 6 and a = 0 mod 3.
bool in_mod6_subset(const PrimePair& pair);

struct ClassCensus {
    Nat bound = 0;
    std::array<std::size_t, 4> counts{};  // indexed by TwinClass
    std::size_t total = 0;

    std::size_t count(TwinClass c) const { return counts[static_cast<std::size_t>(c)]; }
    double fraction(TwinClass c) const {
        return total == 0 ? 0.0 : static_cast<double>(count(c)) / static_cast<double>(total);
    }
};

/// Classifies every unordered pair of distinct odd primes <= bound.
ClassCensus census(Nat bound, unsigned workers = 1);

}  // namespace primepat
