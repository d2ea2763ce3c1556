#pragma once

// Prime multiplets: a start value plus a pattern of even gaps. Members may
// be negative (-p counts as prime when p does); with admit_powers, single
// prime powers count as members too.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "primepat/arith.hpp"

namespace primepat {

using DistancePattern = std::vector<Nat>;

/// Throws InvalidArgument unless every gap is positive and even.
void validate_pattern(const DistancePattern& pattern);

/// `count` copies of `gap`.
DistancePattern repeated(Nat gap, std::size_t count);

struct Multiplet {
    Int start = 0;
    DistancePattern pattern;
    bool admit_powers = false;

    std::size_t length() const { return pattern.size() + 1; }

    friend bool operator==(const Multiplet&, const Multiplet&) = default;
};

/// Builds and validates a multiplet (gaps even, last member in range).
Multiplet make_multiplet(Int start, DistancePattern pattern, bool admit_powers = false);

std::vector<Int> members(const Multiplet& m);

/// Multiplet with the given strictly increasing members.
Multiplet from_members(const std::vector<Int>& values, bool admit_powers = false);

bool is_prime_multiplet(const Multiplet& m);

std::string describe(const Multiplet& m);

struct SearchOptions {
    unsigned workers = 1;
    /// Stop after this many hits (0 = exhaustive). Output is still the
    /// smallest `limit` distances.
    std::size_t limit = 0;
};

/// Step between candidate distances: primorial_below(p) for exceptional
/// tuples (length == p), 2 otherwise.
Nat equal_distance_step(Nat p, Nat length);

/// All d <= d_max (multiples of equal_distance_step) with p, p+d, ...,
/// p+(length-1)d all prime(-like); ascending.
std::vector<Nat> search_equal_distance(Nat p, Nat length, Nat d_max, bool admit_powers,
                                       const SearchOptions& options = {});

struct MemberVerdict {
    Nat value;
    bool prime;
};

struct TupleReport {
    Nat start;
    Nat distance;
    std::vector<MemberVerdict> members;
    bool all_prime = false;
};

TupleReport verify_tuple(Nat start, Nat distance, Nat length);

struct BiTupleResult {
    Nat p;
    Nat distance;
    /// The full (2p-1)-member progression p-(p-1)d .. p+(p-1)d when all
    /// members are prime.
    std::optional<Multiplet> full;
    /// Longest run of consecutive prime members of that progression that
    /// contains p.
    Multiplet longest;
    /// Largest k with p-kd .. p+kd all prime.
    std::size_t symmetric_radius = 0;
    /// Composite members of the full progression, ascending.
    std::vector<Int> failures;
};

/// Bi-p-tuple at full distance `distance`; requires p > 3 prime and, with
/// D = distance / 2, 3 | D and p not dividing D.
BiTupleResult extend_bi_tuple(Nat p, Nat distance);

enum class QuintetForm {
    EqualDistance,  // 3-4D, 3-2D, 3, 3+2D, 3+4D
    LeftD2,         // 3-2d1-2d2, 3-2d2, 3, 3+2d1, 3+2d1+2d2
    LeftD1,         // 3-2d1-2d2, 3-2d1, 3, 3+2d2, 3+2d1+2d2
    MirrorD1,       // 3-2d1-2d2, 3-2d1, 3, 3+2d1, 3+2d1+2d2
    MirrorD2,       // 3-2d1-2d2, 3-2d2, 3, 3+2d2, 3+2d1+2d2
};

std::string_view to_string(QuintetForm form);

struct QuintetHit {
    Multiplet quintet;
    QuintetForm form;
};

/// All-prime quintets containing 3 in the middle built from half-gaps d1, d2.
/// d1 == d2 requires 3 not dividing d1; otherwise 3 | (d2 - d1) and 3 not
/// dividing d1. Distinct quintets only, ordered by form.
std::vector<QuintetHit> find_quintets_at_3(Nat d1, Nat d2);

/// Starts s in [lo, hi] whose multiplet (s, pattern) is fully prime(-like).
std::vector<Int> search_pattern(const DistancePattern& pattern, Int lo, Int hi, bool admit_powers,
                                const SearchOptions& options = {});

/// Drops an intermediate member; neighbouring gaps merge.
Multiplet contract(const Multiplet& m, std::size_t member_index);

/// Adds a prime(-like) value between members or at either end.
Multiplet insert(const Multiplet& m, Int value);

enum class End { First, Last };

Multiplet omit_end(const Multiplet& m, End which);

/// Members negated, order reversed.
Multiplet reverse_multiplet(const Multiplet& m);

}  // namespace primepat
