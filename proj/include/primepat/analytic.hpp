#pragma once

// Numerical checks of the twin-prime Dirichlet-series identities at real
// s > 1. Every truncated series carries a rigorous error bound (tail plus
// floating-point accumulation), and every residual is judged against the
// sum of both sides' bounds.

#include <string>
#include <vector>

#include "primepat/arith.hpp"
#include "primepat/classification.hpp"

namespace primepat {

/// Neumaier-compensated accumulator. Also tracks sum |x| so callers can
/// bound the accumulated rounding error.
class CompensatedSum {
public:
    void add(double x);
    double value() const { return sum_ + compensation_; }
    double abs_total() const { return abs_total_; }
    /// Bound on |value() - exact sum of the (already rounded) terms plus
    /// per-term evaluation error of a few ulps.
    double rounding_bound() const;

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
    double abs_total_ = 0.0;
};

/// A real Dirichlet character stored as its value table on 0..q-1.
struct Character {
    int conductor;
    std::string name;
    std::vector<int> values;

    bool principal() const;
    int operator()(Int n) const {
        const Int r = n % conductor;
        return values[static_cast<std::size_t>(r < 0 ? r + conductor : r)];
    }
};

struct CharacterTable {
    int conductor;
    int phi;
    std::vector<Character> characters;
};

/// All characters mod q for q in {3, 4, 6, 12}; characters mod 12 are
/// products of those mod 4 and mod 3. Throws ConductorViolation otherwise.
CharacterTable character_table(int q);

/// sum over d | n of mu(d) log^2 d, by enumerating divisors.
double golomb_sum(Nat n);

/// |golomb_sum(m1*m2) - 2 Lambda(m1) Lambda(m2)| for prime powers of
/// distinct primes.
double golomb_identity_residual(Nat m1, Nat m2);

/// A truncated value with a rigorous bound on its distance to the full series.
struct Bounded {
    double value;
    double bound;
};

struct TruncationPlan {
    double s;
    Nat N;
    double tail_bound;
};

/// Tail bound for sum_{n>N} chi(n) n^-s: integral comparison for principal
/// characters, Abel summation with partial sums bounded by q otherwise.
TruncationPlan plan_for(const Character& chi, double s, Nat N);

Bounded l_truncated(double s, const Character& chi, const TruncationPlan& plan);
Bounded l_truncated(double s, const Character& chi, Nat N);

/// L'/L(s, chi) two ways: L'_N / L_N, and the Lambda series
/// -sum chi(n) Lambda(n) n^-s.
struct LogDerivative {
    Bounded quotient;
    Bounded lambda_series;
};

LogDerivative l_log_derivative_truncated(double s, const Character& chi, Nat N);

/// Z(s) = zeta(s) (1/zeta)''(s) two ways: the Golomb-coefficient series and
/// the product of the truncated zeta and mu log^2 series.
struct ZTruncation {
    double direct;
    double product;
    double difference;
    double tail_bound;
};

ZTruncation z_truncated(double s, Nat N);

enum class CheckStatus { Pass, Documented, Fail };

std::string_view to_string(CheckStatus status);

struct SeriesCheck {
    std::string identity;
    TwinClass series_class;
    Nat p_prime;
    double s;
    Nat N;
    double lhs;
    double rhs;
    double residual;
    double tail_bound;
    /// Right side after the explicitly identified correction (equals rhs
    /// when the printed formula needs none).
    double corrected_rhs;
    double corrected_residual;
    CheckStatus status;
    std::string note;
};

/// Direct progression sum vs. character decomposition of the constraint
/// series q(s) for the class (conductor 12 for III, 6 and 12 for II, 4 for I).
SeriesCheck constraint_series_residual(TwinClass c, Nat p_prime, double s, Nat N);

/// Lambda-weighted progression sum vs. the L'/L character combination.
SeriesCheck twin_series_residual(TwinClass c, Nat p_prime, double w, Nat N);

/// Class III constraint series restricted to p' = 1 mod 6.
SeriesCheck corollary14_series_residual(Nat p_prime, double s, Nat N);

// Closed-form tail integrals, exposed for tests.
double zeta_tail_bound(double s, Nat N);      // sum_{n>N} n^-s
double log_tail_bound(double s, Nat N);       // sum_{n>N} log n n^-s
double log2_tail_bound(double s, Nat N);      // sum_{n>N} log^2 n n^-s

}  // namespace primepat
