// Acceptance gate: one PASS/FAIL line per criterion, judged literally at the
// stated tolerances and time budgets. Indented lines carry the evidence.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "primepat/analytic.hpp"
#include "primepat/arith.hpp"
#include "primepat/classification.hpp"
#include "primepat/multiplets.hpp"
#include "primepat/parallel.hpp"
#include "primepat/polynomials.hpp"
#include "primepat/prime_powers.hpp"
#include "primepat/published_tables.hpp"
#include "primepat/verification.hpp"

using namespace primepat;

namespace {

struct Report {
    bool pass = true;
    std::vector<std::string> lines;

    void require(bool ok, const std::string& line) {
        pass = pass && ok;
        lines.push_back(std::string(ok ? "ok    " : "FAIL  ") + line);
    }
    void note(const std::string& line) { lines.push_back("note  " + line); }
};

template <class Range>
std::string join(const Range& values) {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : values) {
        os << (first ? "" : ", ") << v;
        first = false;
    }
    return os.str();
}

std::string num(double x, int digits = 3) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<void(Report&)>& body) {
    Report r;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.require(secs <= budget_seconds, "runtime " + num(secs) + " s (budget " + num(budget_seconds) + " s)");
    if (!r.pass) ++failures;
    std::printf("CRITERION %2d %s  %s\n", id, r.pass ? "PASS" : "FAIL", title);
    for (const auto& line : r.lines) std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
}

void series_line(Report& r, const SeriesCheck& c) {
    std::string line = c.identity + " p'=" + std::to_string(c.p_prime) + " s=" + num(c.s) +
                       " N=" + std::to_string(c.N) + ": residual " + num(c.residual) + " vs bound " +
                       num(c.tail_bound) + " [" + std::string(to_string(c.status)) + "]";
    r.require(c.status == CheckStatus::Pass, line);
    if (c.status == CheckStatus::Documented)
        r.note(c.identity + " p'=" + std::to_string(c.p_prime) + ": " + c.note + "; corrected residual " +
               num(c.corrected_residual));
}

}  // namespace

int main() {
    const unsigned workers = resolve_workers(0);

    criterion(1, "septets from 7 up to distance 10^6 equal the printed ten", 10.0, [](Report& r) {
        const auto found = search_equal_distance(7, 7, 1'000'000, false, {1, 0});
        r.require(found == published::kSeptetDistances,
                  "search returned " + std::to_string(found.size()) + " distances: " + join(found));
        std::vector<Nat> extra;
        std::set_difference(found.begin(), found.end(), published::kSeptetDistances.begin(),
                            published::kSeptetDistances.end(), std::back_inserter(extra));
        if (!extra.empty()) {
            std::vector<Nat> below;
            for (Nat d : extra)
                if (d < published::kSeptetDistances.back()) below.push_back(d);
            r.note("not in the printed list: " + join(extra) + " (" + join(below) +
                   " lie below its largest entry)");
        }
        const bool all_listed = std::includes(found.begin(), found.end(), published::kSeptetDistances.begin(),
                                              published::kSeptetDistances.end());
        r.note(std::string("every printed distance found: ") + (all_listed ? "yes" : "no"));
    });

    criterion(2, "first 11-plet distance and the printed 11-plets", 300.0, [workers](Report& r) {
        const auto found = search_equal_distance(11, 11, 2'000'000'000, false, {workers, 1});
        r.require(!found.empty() && found.front() == published::kFirst11PletDistance,
                  "first distance " + (found.empty() ? std::string("none") : std::to_string(found.front())));
        for (std::size_t i = 1; i < published::kElevenPlets.size(); ++i) {
            const auto& printed = published::kElevenPlets[i];
            const auto p = check_printed_progression(printed);
            std::string line = "printed 11-plet #" + std::to_string(i + 1) + " (d=" + std::to_string(p.distance) + ")";
            const bool last = i + 1 == published::kElevenPlets.size();
            if (last) {
                // Exactly one member inconsistent with the progression, which is itself all prime.
                const bool ok = p.inconsistent == std::vector<std::size_t>{7} && p.progression_all_prime;
                r.require(ok, line + ": inconsistent members " + join(p.inconsistent) +
                                  "; progression all prime: " + (p.progression_all_prime ? "yes" : "no"));
                if (ok)
                    r.note("#7 index 7 printed " + std::to_string(printed[7]) + ", progression gives " +
                           std::to_string(p.start + 7 * p.distance) + " [DOCUMENTED]");
                continue;
            }
            r.require(p.printed_all_prime && p.inconsistent.empty(),
                      line + ": printed members all prime: " + (p.printed_all_prime ? "yes" : "no") +
                          ", inconsistent members: " + (p.inconsistent.empty() ? "none" : join(p.inconsistent)));
            for (std::size_t k : p.inconsistent)
                r.note("#" + std::to_string(i + 1) + " index " + std::to_string(k) + " printed " +
                       std::to_string(printed[k]) + ", progression gives " +
                       std::to_string(p.start + k * p.distance) +
                       (p.progression_all_prime ? " (progression all prime)" : ""));
            if (!p.progression_all_prime)
                r.note("#" + std::to_string(i + 1) + " composite progression members: " + join(p.composite_members));
        }
    });

    criterion(3, "printed 13-tuple members are prime", 1.0, [](Report& r) {
        const auto report = verify_tuple(13, published::k13TupleDistance, 13);
        bool matches = true;
        for (std::size_t k = 0; k < 13; ++k) matches = matches && report.members[k].value == published::k13Tuple[k];
        r.require(matches, "printed members form the progression 13 + k * 9918821194590");
        r.require(report.all_prime, "all 13 members pass deterministic primality");
        bool printed_prime = std::all_of(published::k13Tuple.begin(), published::k13Tuple.end(),
                                         [](Nat v) { return is_prime(v); });
        r.require(printed_prime, "printed values checked individually");
        r.require(published::k13TupleDistance % primorial_below(13) == 0, "distance divisible by 2310");
    });

    criterion(4, "quintets 5, 5+6k, ..., 5+24k for k <= 100", 1.0, [](Report& r) {
        std::vector<Nat> ks;
        for (Nat d : search_equal_distance(5, 5, 600, false)) ks.push_back(d / 6);
        r.require(ks == published::kQuintetK, "k = " + join(ks));
    });

    criterion(5, "bi-tuples: nonet at (5, 12) and decuplet at (7, 30)", 1.0, [](Report& r) {
        const auto nonet = extend_bi_tuple(5, 12);
        const std::vector<Int> want_nonet(published::kNonet.begin(), published::kNonet.end());
        r.require(nonet.full && members(*nonet.full) == want_nonet,
                  "extend_bi_tuple(5, 12) full nonet: " + (nonet.full ? describe(*nonet.full) : "none"));
        const auto septet = extend_bi_tuple(7, 30);
        r.require(!septet.full, "extend_bi_tuple(7, 30) has no full 13-member bi-septet");
        r.require(septet.longest.length() == 10, "longest run through 7: " + describe(septet.longest));
        // The run through +7 and the printed decuplet through -7 are mirror images.
        const std::vector<Int> want_dec(published::kDecuplet.begin(), published::kDecuplet.end());
        r.require(members(reverse_multiplet(septet.longest)) == want_dec,
                  "its reversal is the printed decuplet " + describe(from_members(want_dec)));
        r.require(septet.failures.size() == 2, "members beyond the run: " + join(septet.failures) +
                                                   " (" + std::to_string(septet.failures.size()) + " composite)");
    });

    criterion(6, "prime-power quartets at distance 8 below 10^7", 30.0, [](Report& r) {
        std::vector<Nat> starts;
        for (const auto& t : equal_distance_quartets_with_powers(8, 10'000'000))
            starts.push_back(static_cast<Nat>(t.start));
        r.require(starts == published::kPowerQuartetStarts, "starts " + join(starts) + " (expected " +
                                                                join(published::kPowerQuartetStarts) + ")");
        if (std::count(starts.begin(), starts.end(), Nat{3}))
            r.note("3, 11, 19, 27 = 3^3 is a quartet the printed list omits");
    });

    criterion(7, "classification partition and class census", 120.0, [workers](Report& r) {
        const auto primes = primes_up_to(10'000);
        std::size_t pairs = 0, special = 0, bad_special = 0;
        for (std::size_t i = 1; i < primes.size(); ++i)
            for (std::size_t j = i + 1; j < primes.size(); ++j) {
                const auto c = classify_pair(static_cast<Int>(primes[i]), static_cast<Int>(primes[j]));
                ++pairs;
                if (c == TwinClass::Special) {
                    ++special;
                    if (primes[i] != 3) ++bad_special;
                }
            }
        r.require(pairs == (primes.size() - 1) * (primes.size() - 2) / 2,
                  std::to_string(pairs) + " pairs of odd primes <= 10^4 each labelled once");
        r.require(bad_special == 0, std::to_string(special) + " special pairs, all with smaller member 3");
        const auto c = census(100'000, workers);
        r.require(c.fraction(TwinClass::I) >= 0.05 && c.fraction(TwinClass::II) >= 0.05 &&
                      c.fraction(TwinClass::III) >= 0.05,
                  "N=10^5 fractions I " + num(c.fraction(TwinClass::I), 6) + ", II " +
                      num(c.fraction(TwinClass::II), 6) + ", III " + num(c.fraction(TwinClass::III), 6));
        r.require(c.total == 45988845 && c.count(TwinClass::I) == 22996664 &&
                      c.count(TwinClass::II) == 11495736 && c.count(TwinClass::III) == 11491638 &&
                      c.count(TwinClass::Special) == 4807,
                  "regression counts " + std::to_string(c.count(TwinClass::I)) + "/" +
                      std::to_string(c.count(TwinClass::II)) + "/" + std::to_string(c.count(TwinClass::III)) +
                      "/" + std::to_string(c.count(TwinClass::Special)) + " of " + std::to_string(c.total));
    });

    criterion(8, "Golomb divisor sums up to 10^5", 60.0, [](Report& r) {
        double worst_pair = 0.0, worst_zero = 0.0;
        std::size_t pairs = 0, zeros = 0;
        for (Nat n = 2; n <= 100'000; ++n) {
            const auto f = factorize(n);
            if (f.size() >= 3) {
                worst_zero = std::max(worst_zero, std::abs(golomb_sum(n)));
                ++zeros;
            } else if (f.size() == 2) {
                Nat a = 1;
                for (unsigned e = 0; e < f[0].exponent; ++e) a *= f[0].prime;
                worst_pair = std::max(worst_pair, golomb_identity_residual(a, n / a));
                ++pairs;
            }
        }
        r.require(worst_pair < 1e-9, std::to_string(pairs) + " coprime prime-power pairs, max residual " +
                                         num(worst_pair));
        r.require(worst_zero < 1e-9, std::to_string(zeros) + " n with >= 3 prime factors, max |sum| " +
                                         num(worst_zero));
    });

    criterion(9, "constraint, twin and mod-6 series identities", 120.0, [](Report& r) {
        series_line(r, constraint_series_residual(TwinClass::I, 5, 2.0, 100'000));
        series_line(r, constraint_series_residual(TwinClass::II, 5, 2.0, 100'000));
        series_line(r, constraint_series_residual(TwinClass::III, 7, 2.0, 100'000));
        series_line(r, twin_series_residual(TwinClass::I, 5, 3.0, 1'000'000));
        series_line(r, twin_series_residual(TwinClass::II, 5, 3.0, 1'000'000));
        series_line(r, twin_series_residual(TwinClass::III, 7, 3.0, 1'000'000));
        series_line(r, corollary14_series_residual(7, 2.0, 100'000));
        series_line(r, corollary14_series_residual(13, 2.0, 100'000));
    });

    criterion(10, "sieve, Z and L-function oracles", 60.0, [](Report& r) {
        const auto bitmap = sieve_range(2, 10'000'000);
        Nat mismatches = 0;
        for (Nat n = 2; n <= 10'000'000; ++n) mismatches += bitmap.is_prime(n) != is_prime(n);
        r.require(mismatches == 0, "is_prime vs sieve on [2, 10^7]: " + std::to_string(bitmap.count()) +
                                       " primes, " + std::to_string(mismatches) + " mismatches");
        const auto z = z_truncated(3.0, 10'000);
        r.require(z.difference <= z.tail_bound,
                  "Z(3) direct vs product: difference " + num(z.difference) + ", bound " + num(z.tail_bound));
        const double pi = std::acos(-1.0);
        const auto t4 = character_table(4);
        const auto l0 = l_truncated(2.0, t4.characters[0], 100'000);
        const double e0 = std::abs(l0.value - 0.75 * pi * pi / 6.0);
        r.require(e0 <= l0.bound, "L(2, chi4_0) vs (1 - 1/4) zeta(2): error " + num(e0) + ", bound " + num(l0.bound));
        const auto l1 = l_truncated(2.0, t4.characters[1], 100'000);
        const double e1 = std::abs(l1.value - 0.915965594177219015054603514932);
        r.require(e1 <= l1.bound, "L(2, chi4_1) vs Catalan: error " + num(e1) + ", bound " + num(l1.bound));
        const auto ld = l_log_derivative_truncated(3.0, t4.characters[0], 100'000);
        const double want = -(0.164822682158277240186493394799 - std::log(2.0) / 7.0);
        const double e2 = std::abs(ld.quotient.value - want);
        r.require(e2 <= ld.quotient.bound && e2 < 1e-6,
                  "L'/L(3, chi4_0) vs Euler-factor oracle: error " + num(e2));
    });

    criterion(11, "gaps and quadratic polynomials", 1.0, [](Report& r) {
        const auto g1 = largest_gap_in(1, 98);
        r.require(g1.gap == 8, "(1, 98): largest gap " + std::to_string(g1.gap) + " at " + std::to_string(g1.at));
        const auto g2 = largest_gap_in(1300, 1400);
        r.require(g2.gap == 34, "(1300, 1400): largest gap " + std::to_string(g2.gap) + " at " + std::to_string(g2.at));
        const auto g3 = largest_gap_in(2110, 2200);
        r.require(g3.gap == 34, "(2110, 2200): largest gap " + std::to_string(g3.gap) + " at " + std::to_string(g3.at));
        const auto g4 = largest_gap_in(8390, 8502);
        r.note("(8390, 8502): largest gap " + std::to_string(g4.gap) + " at " + std::to_string(g4.at) +
               "; no gap of 34 between 1361 and " + std::to_string(g4.at));
        const auto run = prime_run(kQ14, 0, +1, false);
        r.require(run.length == 12 && run.failing_value == 121, "Q14 run from 0: " + std::to_string(run.length) +
                                                                    ", stops at " + std::to_string(run.failing_value));
        r.require(prime_run(kQ14, 0, +1, true).length == 13, "Q14 run with powers: 13");
        r.require(evaluate(kQ14, 12) == 121 && evaluate(kQ13, 42) == 1681, "Q14(12) = 11^2, Q13(42) = 41^2");
        bool negative_ok = true;
        for (Int x = 0; x <= 8; ++x) negative_ok = negative_ok && is_prime_signed(evaluate(kQ14, -x));
        r.require(negative_ok && evaluate(kQ14, -9) == 121, "Q14(-x) prime for x = 0..8, Q14(-9) = 11^2");
    });

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
