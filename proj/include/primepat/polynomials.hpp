#pragma once

#include <optional>
#include <vector>

#include "primepat/arith.hpp"

namespace primepat {

/// x^2 + b x + c.
struct QuadPoly {
    Int b;
    Int c;
};

inline constexpr QuadPoly kQ13{-3, 43};
inline constexpr QuadPoly kQ14{-3, 13};

/// Exact value; throws Overflow outside the 63-bit range.
Int evaluate(const QuadPoly& q, Int x);

struct PrimeRun {
    Nat length;           // consecutive prime(-like) values, start included
    Int failing_argument;
    Int failing_value;
};

/// Walks x = start, start+dir, ... while q(x) is prime (prime-like with
/// admit_powers), on |q(x)|.
PrimeRun prime_run(const QuadPoly& q, Int start, int direction, bool admit_powers);

struct TwoSidedRun {
    PrimeRun forward;
    PrimeRun backward;
    Nat combined;  // forward + backward - 1 (start counted once)
};

TwoSidedRun two_sided_run(const QuadPoly& q, Int start, bool admit_powers);

/// q(x) == (x+shift)^2 + (x+shift) + e_c identically.
bool euler_shift_check(const QuadPoly& q, Nat e_c, Int shift);

struct RunRow {
    Int argument;
    Int value;
    bool prime_like;
    std::optional<PrimePower> decomposition;
};

std::vector<RunRow> run_table(const QuadPoly& q, Int lo, Int hi);

struct ArgumentCount {
    Nat count;
    std::vector<Int> arguments;
};

ArgumentCount total_prime_arguments(const QuadPoly& q, Int lo, Int hi, bool admit_powers);

}  // namespace primepat
