#include "primepat/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "primepat/analytic.hpp"
#include "primepat/classification.hpp"
#include "primepat/multiplets.hpp"
#include "primepat/polynomials.hpp"
#include "primepat/prime_powers.hpp"
#include "primepat/published_tables.hpp"

namespace primepat {

namespace {

template <class Range>
std::string join(const Range& values, const char* sep = ", ") {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : values) {
        os << (first ? "" : sep) << v;
        first = false;
    }
    return os.str();
}

struct Outcome {
    Verdict verdict;
    std::string detail;
};

class Suite {
public:
    explicit Suite(const SuiteOptions& options) : options_(options) {}

    void run(std::string id, std::string title, const std::function<Outcome()>& body) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = body();
        } catch (const std::exception& e) {
            out = {Verdict::Fail, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results_.push_back({std::move(id), std::move(title), out.verdict, std::move(out.detail), secs});
    }

    const SuiteOptions& options() const { return options_; }
    std::vector<CheckResult> take() { return std::move(results_); }

private:
    SuiteOptions options_;
    std::vector<CheckResult> results_;
};

Outcome pass_if(bool ok, std::string detail) { return {ok ? Verdict::Pass : Verdict::Fail, std::move(detail)}; }

std::string describe_series(const SeriesCheck& c) {
    std::ostringstream os;
    os.precision(6);
    os << c.identity << " p'=" << c.p_prime << " s=" << c.s << " N=" << c.N << ": residual " << c.residual
       << " bound " << c.tail_bound;
    if (c.status == CheckStatus::Documented)
        os << "; corrected residual " << c.corrected_residual << " (" << c.note << ")";
    return os.str();
}

Verdict series_verdict(const SeriesCheck& c) {
    switch (c.status) {
        case CheckStatus::Pass: return Verdict::Pass;
        case CheckStatus::Documented: return Verdict::Documented;
        case CheckStatus::Fail: return Verdict::Fail;
    }
    return Verdict::Fail;
}

void multiplet_checks(Suite& suite) {
    const unsigned w = suite.options().workers;

    suite.run("septets", "septets starting at 7 up to distance 10^6", [w] {
        const auto found = search_equal_distance(7, 7, 1'000'000, false, {w, 0});
        std::vector<Nat> missing;
        for (Nat d : published::kSeptetDistances)
            if (!std::binary_search(found.begin(), found.end(), d)) missing.push_back(d);
        return pass_if(missing.empty(), std::to_string(found.size()) + " distances found; all ten listed present" +
                                            (missing.empty() ? "" : "; missing " + join(missing)));
    });

    suite.run("septets-unlisted", "septets below the last listed distance that the list omits", [w] {
        const auto found = search_equal_distance(7, 7, published::kSeptetDistances.back(), false, {w, 0});
        std::vector<Nat> extra;
        for (Nat d : found)
            if (!std::binary_search(published::kSeptetDistances.begin(), published::kSeptetDistances.end(), d))
                extra.push_back(d);
        if (extra.empty()) return Outcome{Verdict::Pass, "list complete up to 134250"};
        return Outcome{Verdict::Documented, "list omits " + join(extra)};
    });

    suite.run("quintet-k", "quintets 5, 5+6k, ..., 5+24k for 6k <= 600", [] {
        const auto found = search_equal_distance(5, 5, 600, false);
        std::vector<Nat> ks;
        for (Nat d : found) ks.push_back(d / 6);
        return pass_if(ks == published::kQuintetK, "k = " + join(ks));
    });

    suite.run("first-11-plet", "first exceptional 11-plet distance", [&suite, w]() -> Outcome {
        if (suite.options().skip_slow) return {Verdict::Skipped, "scan skipped (--skip-slow)"};
        const auto found = search_equal_distance(11, 11, published::kFirst11PletDistance, false, {w, 1});
        return pass_if(!found.empty() && found.front() == published::kFirst11PletDistance,
                       found.empty() ? "no 11-plet found" : "first distance " + std::to_string(found.front()));
    });

    for (std::size_t i = 0; i < published::kElevenPlets.size(); ++i) {
        suite.run("11-plet-" + std::to_string(i + 1), "printed 11-plet #" + std::to_string(i + 1), [i] {
            const auto& printed = published::kElevenPlets[i];
            const auto r = check_printed_progression(printed);
            std::ostringstream os;
            os << "distance " << r.distance;
            if (r.inconsistent.empty() && r.progression_all_prime) {
                os << ", all 11 members prime";
                return Outcome{Verdict::Pass, os.str()};
            }
            for (std::size_t k : r.inconsistent)
                os << "; member " << k << " printed " << printed[k] << ", progression gives "
                   << r.start + k * r.distance;
            if (r.progression_all_prime) {
                os << "; progression all prime (misprint)";
            } else {
                os << "; not an 11-plet: composite members " << join(r.composite_members);
            }
            return Outcome{r.progression_all_prime ? Verdict::Documented : Verdict::Fail, os.str()};
        });
    }

    suite.run("13-tuple", "printed 13-tuple members", [] {
        const auto r = check_printed_progression(published::k13Tuple);
        return pass_if(r.inconsistent.empty() && r.printed_all_prime && r.distance == published::k13TupleDistance,
                       "distance " + std::to_string(r.distance) + ", 13 members prime");
    });

    suite.run("nonet", "bi-quintet at distance 12 centred at 5", [] {
        const auto r = extend_bi_tuple(5, 12);
        const auto expected = from_members({published::kNonet.begin(), published::kNonet.end()});
        const bool ok = r.full && *r.full == expected && reverse_multiplet(expected) ==
                                                               from_members({-53, -41, -29, -17, -5, 7, 19, 31, 43});
        return pass_if(ok, ok ? describe(*r.full) : "full nonet not found");
    });

    suite.run("decuplet", "bi-septet at distance 30 centred at 7", [] {
        const auto r = extend_bi_tuple(7, 30);
        const auto expected = from_members({published::kDecuplet.begin(), published::kDecuplet.end()});
        const bool ok = !r.full && r.longest.length() == 10 && reverse_multiplet(r.longest) == expected;
        return pass_if(ok, "run " + describe(r.longest) + ", reversed " + describe(reverse_multiplet(r.longest)) +
                               "; composite " + join(r.failures));
    });

    suite.run("quintets-at-3", "listed quintets through 3 and their reversals", [] {
        bool ok = true;
        std::vector<std::string> forms;
        for (std::size_t i = 0; i < published::kQuintetsAt3.size(); ++i) {
            const auto& q = published::kQuintetsAt3[i];
            const auto& rq = published::kQuintetsAt3Reversed[i];
            const auto m = from_members({q.begin(), q.end()});
            ok = ok && is_prime_multiplet(m) && reverse_multiplet(m) == from_members({rq.begin(), rq.end()});
            const Nat d1 = static_cast<Nat>(q[3] - 3) / 2;
            const Nat d2 = static_cast<Nat>(q[4] - q[3]) / 2;
            bool hit = false;
            for (const auto& h : find_quintets_at_3(d1, d2))
                if (h.quintet == m) {
                    hit = true;
                    forms.push_back(std::string(to_string(h.form)));
                }
            ok = ok && hit;
        }
        return pass_if(ok, "forms: " + join(forms));
    });

    suite.run("pattern-4-2-4-2-4", "[4,2,4,2,4] starts below 200", [] {
        const auto s = search_pattern({4, 2, 4, 2, 4}, 1, 200, false);
        return pass_if(s == std::vector<Int>{7, 97}, "starts " + join(s));
    });

    suite.run("contraction", "contraction examples", [] {
        const bool a = contract(make_multiplet(641, {2, 4, 6, 6}), 1) == make_multiplet(641, {6, 6, 6});
        const bool b = contract(make_multiplet(601, {6, 6, 4, 2}), 3) == make_multiplet(601, {6, 6, 6});
        return pass_if(a && b, "641,647,653,659 and 601,607,613,619");
    });
}

void power_checks(Suite& suite) {
    suite.run("power-quartets", "distance-8 quartets with a prime power below 10^7", [] {
        const auto found = equal_distance_quartets_with_powers(8, 10'000'000);
        std::vector<Nat> starts;
        for (const auto& t : found) starts.push_back(static_cast<Nat>(t.start));
        bool listed = std::all_of(published::kPowerQuartetStarts.begin(), published::kPowerQuartetStarts.end(),
                                  [&](Nat s) { return std::count(starts.begin(), starts.end(), s) == 1; });
        return pass_if(listed, "starts " + join(starts));
    });

    suite.run("power-quartets-unlisted", "distance-8 power quartets missing from the list", [] {
        std::vector<Nat> extra;
        for (const auto& t : equal_distance_quartets_with_powers(8, 10'000'000)) {
            const auto s = static_cast<Nat>(t.start);
            if (std::count(published::kPowerQuartetStarts.begin(), published::kPowerQuartetStarts.end(), s) == 0)
                extra.push_back(s);
        }
        if (extra.empty()) return Outcome{Verdict::Pass, "none"};
        return Outcome{Verdict::Documented, "also found starts " + join(extra)};
    });

    suite.run("power-repeats", "power-admitting repeats of 3,7,11 / 3,5,13 / 3,5,7,9,11", [] {
        const auto r44 = repeats_with_powers({4, 4}, make_multiplet(3, {4, 4}), 100);
        const auto r28 = repeats_with_powers({2, 8}, make_multiplet(3, {2, 8}), 100);
        const bool quintet17 = is_prime_multiplet(make_multiplet(17, {2, 8, 2, 8}, true));
        const auto r2222 = repeats_with_powers({2, 2, 2, 2}, make_multiplet(5, {2, 2, 2, 2}), 1'000'000);
        auto has = [](const std::vector<Multiplet>& v, Int s) {
            return std::any_of(v.begin(), v.end(), [s](const Multiplet& m) { return m.start == s; });
        };
        std::vector<Int> starts2222;
        for (const auto& m : r2222) starts2222.push_back(m.start);
        return pass_if(has(r44, 19) && has(r28, 17) && quintet17 && has(r2222, 23),
                       "19,23,27; 17,19,27,29,37; [2,2,2,2] repeats at " + join(starts2222));
    });

    suite.run("encounters", "close encounters and divergence rates", [] {
        const auto enc = close_encounters(1000, 4);
        auto rate = [&](Nat larger, Nat smaller) {
            for (const auto& e : enc)
                if (e.larger.value == larger && e.smaller.value == smaller) return divergence_rate(e);
            return 0.0;
        };
        const double r27 = rate(27, 25), r9 = rate(9, 7), r81 = rate(81, 79), r125 = rate(125, 121);
        const bool ok = std::abs(r27 - 1.08) < 1e-12 && std::abs(r9 - 9.0 / 7.0) < 1e-12 &&
                        std::abs(r81 - 81.0 / 79.0) < 1e-12 && std::abs(r125 - 125.0 / 121.0) < 1e-12;
        std::ostringstream os;
        os.precision(6);
        os << "27/25=" << r27 << " 9/7=" << r9 << " 81/79=" << r81 << " 125/121=" << r125;
        return pass_if(ok, os.str());
    });
}

void classification_checks(Suite& suite) {
    const unsigned w = suite.options().workers;
    suite.run("partition", "every odd prime pair <= 10^4 gets one class; specials start at 3", [] {
        const auto primes = primes_up_to(10'000);
        std::size_t specials = 0, pairs = 0;
        bool ok = true;
        for (std::size_t i = 1; i < primes.size(); ++i)
            for (std::size_t j = i + 1; j < primes.size(); ++j) {
                const auto c = classify_pair(static_cast<Int>(primes[i]), static_cast<Int>(primes[j]));
                ++pairs;
                if (c == TwinClass::Special) {
                    ++specials;
                    ok = ok && primes[i] == 3;
                }
            }
        return pass_if(ok, std::to_string(pairs) + " pairs, " + std::to_string(specials) + " special");
    });

    suite.run("census", "class fractions at N = 10^5", [w] {
        const auto c = census(100'000, w);
        std::ostringstream os;
        os.precision(6);
        os << "I " << c.fraction(TwinClass::I) << ", II " << c.fraction(TwinClass::II) << ", III "
           << c.fraction(TwinClass::III) << ", special " << c.count(TwinClass::Special) << " of " << c.total;
        return pass_if(c.fraction(TwinClass::I) >= 0.05 && c.fraction(TwinClass::II) >= 0.05 &&
                           c.fraction(TwinClass::III) >= 0.05,
                       os.str());
    });
}

void analytic_checks(Suite& suite) {
    suite.run("golomb", "Golomb divisor sums up to 10^5", [] {
        double worst_identity = 0.0, worst_zero = 0.0;
        const ArithmeticTable table(100'000);
        for (Nat n = 2; n <= 100'000; ++n) {
            const auto f = factorize(n);
            if (f.size() >= 3) worst_zero = std::max(worst_zero, std::abs(golomb_sum(n)));
            if (f.size() == 2) {
                Nat a = 1;
                for (unsigned e = 0; e < f[0].exponent; ++e) a *= f[0].prime;
                worst_identity = std::max(worst_identity, golomb_identity_residual(a, n / a));
            }
        }
        std::ostringstream os;
        os << "max identity residual " << worst_identity << ", max |sum| (>=3 primes) " << worst_zero;
        return pass_if(worst_identity < 1e-9 && worst_zero < 1e-9, os.str());
    });

    struct Case {
        bool twin;
        TwinClass c;
        Nat p;
        double s;
        Nat N;
    };
    const std::vector<Case> cases = {
        {false, TwinClass::I, 5, 2.0, 100'000},  {false, TwinClass::II, 5, 2.0, 100'000},
        {false, TwinClass::III, 7, 2.0, 100'000}, {true, TwinClass::I, 5, 3.0, 1'000'000},
        {true, TwinClass::II, 5, 3.0, 1'000'000}, {true, TwinClass::III, 7, 3.0, 1'000'000},
        {false, TwinClass::I, 3, 2.0, 100'000},   {true, TwinClass::I, 3, 3.0, 1'000'000},
    };
    for (const auto& k : cases) {
        const std::string id = std::string(k.twin ? "twin-" : "constraint-") + std::string(to_string(k.c)) + "-p" +
                               std::to_string(k.p);
        suite.run(id, "series identity", [k] {
            const auto c = k.twin ? twin_series_residual(k.c, k.p, k.s, k.N)
                                  : constraint_series_residual(k.c, k.p, k.s, k.N);
            return Outcome{series_verdict(c), describe_series(c)};
        });
    }
    for (Nat p : {7, 13}) {
        suite.run("corollary14-p" + std::to_string(p), "mod-6 refined constraint series", [p] {
            const auto c = corollary14_series_residual(p, 2.0, 100'000);
            return Outcome{series_verdict(c), describe_series(c)};
        });
    }

    suite.run("z-two-forms", "Z(3) direct vs product form at N = 10^4", [] {
        const auto z = z_truncated(3.0, 10'000);
        std::ostringstream os;
        os << "difference " << z.difference << " bound " << z.tail_bound;
        return pass_if(z.difference <= z.tail_bound, os.str());
    });

    suite.run("l-oracles", "L(2, chi mod 4) against (1-2^-2) zeta(2) and Catalan's constant", [] {
        const auto t = character_table(4);
        const auto l0 = l_truncated(2.0, t.characters[0], 100'000);
        const auto l1 = l_truncated(2.0, t.characters[1], 100'000);
        const double pi = std::acos(-1.0);
        const double e0 = std::abs(l0.value - 0.75 * pi * pi / 6.0);
        const double e1 = std::abs(l1.value - 0.915965594177219015054603514932);
        std::ostringstream os;
        os << "errors " << e0 << " (bound " << l0.bound << "), " << e1 << " (bound " << l1.bound << ")";
        return pass_if(e0 <= l0.bound && e1 <= l1.bound, os.str());
    });

    suite.run("sieve-oracle", "segmented sieve agrees with Miller-Rabin", [&suite] {
        const Nat limit = suite.options().skip_slow ? 1'000'000 : 10'000'000;
        const auto bitmap = sieve_range(2, limit);
        Nat mismatches = 0;
        for (Nat n = 2; n <= limit; ++n)
            if (bitmap.is_prime(n) != is_prime(n)) ++mismatches;
        return pass_if(mismatches == 0, "[2, " + std::to_string(limit) + "]: " + std::to_string(bitmap.count()) +
                                            " primes, " + std::to_string(mismatches) + " mismatches");
    });
}

void gap_and_polynomial_checks(Suite& suite) {
    suite.run("gaps", "largest prime gaps in the quoted intervals", [] {
        const auto g1 = largest_gap_in(1, 98);
        const auto g2 = largest_gap_in(1300, 1400);
        const auto g3 = largest_gap_in(2110, 2200);
        const auto g4 = largest_gap_in(8390, 8502);
        std::ostringstream os;
        os << "(1,98): " << g1.gap << " at " << g1.at << "; (1300,1400): " << g2.gap << " at " << g2.at
           << "; (2110,2200): " << g3.gap << " at " << g3.at << "; (8390,8502): " << g4.gap << " at " << g4.at;
        return pass_if(g1.gap == 8 && g2.gap == 34 && g3.gap == 34, os.str());
    });

    suite.run("polynomials", "Q13 and Q14 prime runs", [] {
        const auto r0 = prime_run(kQ14, 0, +1, false);
        const auto r1 = prime_run(kQ14, 0, +1, true);
        const auto rn = prime_run(kQ14, 0, -1, false);
        const bool ok = r0.length == 12 && r0.failing_value == 121 && r1.length == 13 &&
                        evaluate(kQ13, 42) == 1681 && euler_shift_check(kQ13, 41, -2) && rn.length == 9 &&
                        rn.failing_argument == -9 && rn.failing_value == 121;
        return pass_if(ok, "Q14 run " + std::to_string(r0.length) + " (primes), " + std::to_string(r1.length) +
                               " (powers), backward " + std::to_string(rn.length) + "; Q13(42) = " +
                               std::to_string(evaluate(kQ13, 42)));
    });

    suite.run("q14-two-sided", "Q14 prime-like values over negative and positive arguments", [] {
        const auto run = two_sided_run(kQ14, 0, true);
        const auto count = total_prime_arguments(kQ14, -9, 12, true);
        const std::string detail = "arguments -9..12: " + std::to_string(count.count) + " values, two-sided run " +
                                   std::to_string(run.combined) + " (printed as a 23-plet)";
        if (count.count == 23) return Outcome{Verdict::Pass, detail};
        return Outcome{count.count == 22 ? Verdict::Documented : Verdict::Fail, detail};
    });
}

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Documented: return "DOCUMENTED";
        case Verdict::Skipped: return "SKIPPED";
    }
    return "?";
}

PrintedProgression check_printed_progression(std::span<const Nat> printed) {
    PrintedProgression r{};
    if (printed.size() < 2) return r;
    r.start = printed[0];
    // Candidate differences (m_k - m_0) / k, scored by agreeing members.
    std::size_t best_score = 0;
    for (std::size_t k = 1; k < printed.size(); ++k) {
        if (printed[k] <= printed[0] || (printed[k] - printed[0]) % k) continue;
        const Nat d = (printed[k] - printed[0]) / k;
        std::size_t score = 0;
        for (std::size_t j = 0; j < printed.size(); ++j)
            if (printed[j] == printed[0] + j * d) ++score;
        if (score > best_score) {
            best_score = score;
            r.distance = d;
        }
    }
    r.printed_all_prime = std::all_of(printed.begin(), printed.end(), [](Nat v) { return is_prime(v); });
    const auto report = verify_tuple(r.start, r.distance, printed.size());
    r.progression_all_prime = report.all_prime;
    for (std::size_t k = 0; k < printed.size(); ++k) {
        if (printed[k] != report.members[k].value) r.inconsistent.push_back(k);
        if (!report.members[k].prime) r.composite_members.push_back(report.members[k].value);
    }
    return r;
}

std::vector<CheckResult> run_verification_suite(const SuiteOptions& options) {
    Suite suite(options);
    multiplet_checks(suite);
    power_checks(suite);
    classification_checks(suite);
    analytic_checks(suite);
    gap_and_polynomial_checks(suite);
    return suite.take();
}

}  // namespace primepat
