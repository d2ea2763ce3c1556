#include "primepat/analytic.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "primepat/error.hpp"

namespace primepat {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_s(double s) {
    if (!(s > 1.0)) throw Error(ErrorKind::Domain, "series requires real s > 1");
}

void require_cutoff(Nat N) {
    // Tail integrands log^2 x x^-s are decreasing only past e^(2/s) < 8.
    if (N < 16) throw Error(ErrorKind::InvalidArgument, "series cutoff N must be >= 16");
}

Character make_character(int q, std::string name, std::vector<int> values) {
    return Character{q, std::move(name), std::move(values)};
}

// sum of f(n) for n = first, first + step, ... <= N.
template <class F>
CompensatedSum progression_sum(Nat first, Nat step, Nat N, F&& f) {
    CompensatedSum acc;
    for (Nat n = first; n <= N; n += step) acc.add(f(n));
    return acc;
}

// Smallest positive integer congruent to r mod q.
Nat least_positive(Int r, Int q) {
    Int m = r % q;
    if (m <= 0) m += q;
    return static_cast<Nat>(m);
}

int phi(int q) {
    int count = 0;
    for (int n = 1; n <= q; ++n)
        if (std::gcd(n, q) == 1) ++count;
    return count;
}

struct SeriesSide {
    double value = 0.0;
    double bound = 0.0;

    void add(double coeff, const Bounded& b) {
        value += coeff * b.value;
        bound += std::abs(coeff) * b.bound;
    }
};

SeriesCheck finish(SeriesCheck check, double offset_or_nan, const std::string& offset_note) {
    check.residual = std::abs(check.lhs - check.rhs);
    check.corrected_rhs = check.rhs;
    check.corrected_residual = check.residual;
    if (check.residual <= check.tail_bound) {
        check.status = CheckStatus::Pass;
        return check;
    }
    if (!std::isnan(offset_or_nan) && offset_or_nan != 0.0) {
        check.corrected_rhs = check.rhs - offset_or_nan;
        check.corrected_residual = std::abs(check.lhs - check.corrected_rhs);
        if (check.corrected_residual <= check.tail_bound) {
            check.status = CheckStatus::Documented;
            check.note = offset_note;
            return check;
        }
    }
    check.status = CheckStatus::Fail;
    return check;
}

const char* class_name(TwinClass c) {
    switch (c) {
        case TwinClass::I: return "I";
        case TwinClass::II: return "II";
        case TwinClass::III: return "III";
        case TwinClass::Special: break;
    }
    throw Error(ErrorKind::InvalidArgument, "series identities exist for classes I, II, III only");
}

void require_conductor(TwinClass c, Nat p) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p' must be prime");
    const Nat q = c == TwinClass::III ? 12 : c == TwinClass::II ? 6 : 4;
    if (std::gcd(p, q) != 1)
        throw Error(ErrorKind::ConductorViolation,
                    "p' = " + std::to_string(p) + " is not coprime to the conductor " + std::to_string(q));
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

}  // namespace

void CompensatedSum::add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        compensation_ += (sum_ - t) + x;
    else
        compensation_ += (x - t) + sum_;
    sum_ = t;
    abs_total_ += std::abs(x);
}

double CompensatedSum::rounding_bound() const { return 16.0 * kEps * abs_total_; }

bool Character::principal() const {
    for (int n = 0; n < conductor; ++n)
        if (values[static_cast<std::size_t>(n)] == -1) return false;
    return true;
}

CharacterTable character_table(int q) {
    const std::vector<std::vector<int>> mod3 = {{0, 1, 1}, {0, 1, -1}};
    const std::vector<std::vector<int>> mod4 = {{0, 1, 0, 1}, {0, 1, 0, -1}};
    CharacterTable table{q, 0, {}};
    switch (q) {
        case 3:
            for (std::size_t i = 0; i < 2; ++i)
                table.characters.push_back(make_character(3, "chi3_" + std::to_string(i), mod3[i]));
            break;
        case 4:
            for (std::size_t i = 0; i < 2; ++i)
                table.characters.push_back(make_character(4, "chi4_" + std::to_string(i), mod4[i]));
            break;
        case 6:
            for (std::size_t i = 0; i < 2; ++i) {
                std::vector<int> v(6, 0);
                for (int n = 0; n < 6; ++n)
                    if (std::gcd(n, 6) == 1) v[static_cast<std::size_t>(n)] = mod3[i][static_cast<std::size_t>(n % 3)];
                table.characters.push_back(make_character(6, "chi6_" + std::to_string(i), v));
            }
            break;
        case 12:
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    std::vector<int> v(12, 0);
                    for (int n = 0; n < 12; ++n)
                        if (std::gcd(n, 12) == 1)
                            v[static_cast<std::size_t>(n)] = mod4[i][static_cast<std::size_t>(n % 4)] *
                                                             mod3[j][static_cast<std::size_t>(n % 3)];
                    table.characters.push_back(
                        make_character(12, "chi12_" + std::to_string(2 * i + j), v));
                }
            break;
        default:
            throw Error(ErrorKind::ConductorViolation, "characters available for q in {3, 4, 6, 12}");
    }
    table.phi = phi(q);
    return table;
}

double golomb_sum(Nat n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "golomb_sum: n must be >= 1");
    const auto factors = factorize(n);
    std::vector<double> logs;
    for (const auto& f : factors) logs.push_back(std::log(static_cast<double>(f.prime)));
    // Only squarefree divisors have mu(d) != 0.
    CompensatedSum acc;
    const std::size_t subsets = std::size_t{1} << logs.size();
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        double log_d = 0.0;
        int sign = 1;
        for (std::size_t i = 0; i < logs.size(); ++i)
            if (mask & (std::size_t{1} << i)) {
                log_d += logs[i];
                sign = -sign;
            }
        acc.add(sign * log_d * log_d);
    }
    return acc.value();
}

double golomb_identity_residual(Nat m1, Nat m2) {
    const auto a = prime_power_decompose(m1);
    const auto b = prime_power_decompose(m2);
    if (!a || !b) throw Error(ErrorKind::InvalidArgument, "golomb_identity_residual: arguments must be prime powers");
    if (a->base == b->base) throw Error(ErrorKind::NotCoprime, "golomb_identity_residual: arguments share a prime");
    if (m1 > kNatMax / m2) throw Error(ErrorKind::Overflow, "golomb_identity_residual: product exceeds 2^63");
    return std::abs(golomb_sum(m1 * m2) - 2.0 * mangoldt(m1) * mangoldt(m2));
}

double zeta_tail_bound(double s, Nat N) {
    return std::pow(static_cast<double>(N), 1.0 - s) / (s - 1.0);
}

double log_tail_bound(double s, Nat N) {
    // log x x^-s decreases for x > e^(1/s), in particular from 3 on.
    if (N < 3) {
        double head = 0.0;
        for (Nat n = N + 1; n <= 3; ++n) head += std::log(static_cast<double>(n)) * std::pow(static_cast<double>(n), -s);
        return head + log_tail_bound(s, 3);
    }
    const double L = std::log(static_cast<double>(N));
    const double k = s - 1.0;
    return std::pow(static_cast<double>(N), -k) * (L / k + 1.0 / (k * k));
}

double log2_tail_bound(double s, Nat N) {
    // log^2 x x^-s decreases for x > e^(2/s), in particular from 8 on.
    if (N < 8) {
        double head = 0.0;
        for (Nat n = N + 1; n <= 8; ++n) {
            const double l = std::log(static_cast<double>(n));
            head += l * l * std::pow(static_cast<double>(n), -s);
        }
        return head + log2_tail_bound(s, 8);
    }
    const double L = std::log(static_cast<double>(N));
    const double k = s - 1.0;
    return std::pow(static_cast<double>(N), -k) * (L * L / k + 2.0 * L / (k * k) + 2.0 / (k * k * k));
}

TruncationPlan plan_for(const Character& chi, double s, Nat N) {
    require_s(s);
    require_cutoff(N);
    const double tail = chi.principal()
                            ? zeta_tail_bound(s, N)
                            : chi.conductor * std::pow(static_cast<double>(N + 1), -s);
    return {s, N, tail};
}

Bounded l_truncated(double s, const Character& chi, const TruncationPlan& plan) {
    require_s(s);
    CompensatedSum acc;
    for (Nat n = 1; n <= plan.N; ++n) {
        const int c = chi(static_cast<Int>(n));
        if (c != 0) acc.add(c * std::pow(static_cast<double>(n), -s));
    }
    return {acc.value(), plan.tail_bound + acc.rounding_bound()};
}

Bounded l_truncated(double s, const Character& chi, Nat N) { return l_truncated(s, chi, plan_for(chi, s, N)); }

LogDerivative l_log_derivative_truncated(double s, const Character& chi, Nat N) {
    const auto plan = plan_for(chi, s, N);
    const ArithmeticTable table(N);
    CompensatedSum l, dl, lam;
    for (Nat n = 1; n <= N; ++n) {
        const int c = chi(static_cast<Int>(n));
        if (c == 0) continue;
        const double x = static_cast<double>(n);
        const double ns = std::pow(x, -s);
        l.add(c * ns);
        dl.add(-c * std::log(x) * ns);
        const double lambda = table.lambda(n);
        if (lambda != 0.0) lam.add(-c * lambda * ns);
    }
    const double e = plan.tail_bound + l.rounding_bound();
    const double dl_tail = chi.principal()
                               ? log_tail_bound(s, N)
                               : chi.conductor * std::log(static_cast<double>(N + 1)) *
                                     std::pow(static_cast<double>(N + 1), -s);
    const double e_prime = dl_tail + dl.rounding_bound();

    const double ln = l.value();
    if (std::abs(ln) <= e) throw Error(ErrorKind::LValueNearZero, "L(s, chi) indistinguishable from zero");
    const double quotient = dl.value() / ln;
    const double q_bound = (e_prime * std::abs(ln) + std::abs(dl.value()) * e) / ((std::abs(ln) - e) * std::abs(ln)) +
                           4.0 * kEps * std::abs(quotient);
    return {{quotient, q_bound}, {lam.value(), log_tail_bound(s, N) + lam.rounding_bound()}};
}

ZTruncation z_truncated(double s, Nat N) {
    require_s(s);
    if (N < 2) throw Error(ErrorKind::InvalidArgument, "z_truncated: N must be >= 2");
    const ArithmeticTable table(N);

    CompensatedSum direct, zeta_part, mobius_part;
    std::vector<double> logs;
    for (Nat n = 1; n <= N; ++n) {
        const double x = static_cast<double>(n);
        const double ns = std::pow(x, -s);
        zeta_part.add(ns);
        const int mu = table.mu(n);
        if (mu != 0) {
            const double l = std::log(x);
            mobius_part.add(mu * l * l * ns);
        }
        if (n >= 2) {
            // Golomb coefficient from the distinct primes of n.
            logs.clear();
            for (Nat m = n; m > 1;) {
                const Nat p = table.spf(m);
                logs.push_back(std::log(static_cast<double>(p)));
                while (m % p == 0) m /= p;
            }
            double g = 0.0;
            const std::size_t subsets = std::size_t{1} << logs.size();
            for (std::size_t mask = 1; mask < subsets; ++mask) {
                double log_d = 0.0;
                int sign = 1;
                for (std::size_t i = 0; i < logs.size(); ++i)
                    if (mask & (std::size_t{1} << i)) {
                        log_d += logs[i];
                        sign = -sign;
                    }
                g += sign * log_d * log_d;
            }
            if (g != 0.0) direct.add(g * ns);
        }
    }

    const double a = zeta_part.value();
    const double b = mobius_part.value();
    const double product = a * b;

    // |coefficient| <= log^2 n, so the direct tail is the log^2 integral.
    const double tail_direct = log2_tail_bound(s, N) +
                               direct.rounding_bound();
    const double tail_a = zeta_tail_bound(s, N) + zeta_part.rounding_bound();
    const double tail_b = log2_tail_bound(s, N) +
                          mobius_part.rounding_bound();
    const double tail_product = tail_a * (std::abs(b) + tail_b) + std::abs(a) * tail_b +
                                4.0 * kEps * std::abs(product);
    return {direct.value(), product, std::abs(direct.value() - product), tail_direct + tail_product};
}

std::string_view to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Documented: return "DOCUMENTED";
        case CheckStatus::Fail: return "FAIL";
    }
    return "?";
}

SeriesCheck constraint_series_residual(TwinClass c, Nat p, double s, Nat N) {
    require_s(s);
    require_cutoff(N);
    const char* name = class_name(c);
    require_conductor(c, p);

    SeriesCheck check{};
    check.identity = std::string("constraint-") + name;
    check.series_class = c;
    check.p_prime = p;
    check.s = s;
    check.N = N;

    const double ps = std::pow(static_cast<double>(p), -s);
    auto term = [s](Nat n) { return std::pow(static_cast<double>(n), -s); };
    const double direct_tail = zeta_tail_bound(s, N);
    SeriesSide rhs;
    double offset = 0.0;
    std::string offset_note;
    const Int P = static_cast<Int>(p);

    if (c == TwinClass::III) {
        const auto lhs = progression_sum(p + 12, 12, N, term);
        check.lhs = ps * lhs.value();
        check.tail_bound = ps * (direct_tail + lhs.rounding_bound());
        for (const auto& chi : character_table(12).characters)
            rhs.add(ps / 4.0 * chi(P), l_truncated(s, chi, N));
        rhs.value -= ps * ps;
        // Terms n < p' of the residue class are not removed by -p'^-2s.
        for (Nat n = least_positive(P, 12); n < p; n += 12) offset += ps * term(n);
        offset_note = "printed -p'^-2s removes only n = p'; residue-class terms n < p' remain (offset " +
                      fmt(offset) + ")";
    } else if (c == TwinClass::II) {
        const Nat first = least_positive(6 - P, 12);
        const auto lhs = progression_sum(first, 12, N, term);
        check.lhs = ps * lhs.value();
        check.tail_bound = ps * (direct_tail + lhs.rounding_bound());
        for (const auto& chi : character_table(6).characters)
            rhs.add(ps / 2.0 * chi(-P), l_truncated(s, chi, N));
        for (const auto& chi : character_table(12).characters)
            rhs.add(-ps / 4.0 * chi(-P), l_truncated(s, chi, N));
    } else {
        const Nat first = least_positive(-P, 4);
        const auto lhs = progression_sum(first, 4, N, term);
        check.lhs = ps * lhs.value();
        check.tail_bound = ps * (direct_tail + lhs.rounding_bound());
        for (const auto& chi : character_table(4).characters) {
            auto l = l_truncated(s, chi, N);
            l.value -= chi(1);
            rhs.add(ps / 2.0 * chi(-P), l);
        }
        if (p % 4 == 3) {
            offset = -ps;
            offset_note = "direct sum starts at 4a - p' = 1 but the bracket subtracts chi4(1) (offset " +
                          fmt(offset) + ")";
        }
    }
    check.rhs = rhs.value;
    check.tail_bound += rhs.bound;
    return finish(check, offset, offset_note);
}

SeriesCheck twin_series_residual(TwinClass c, Nat p, double w, Nat N) {
    require_s(w);
    require_cutoff(N);
    const char* name = class_name(c);
    require_conductor(c, p);

    SeriesCheck check{};
    check.identity = std::string("twin-") + name;
    check.series_class = c;
    check.p_prime = p;
    check.s = w;
    check.N = N;

    const ArithmeticTable table(N);
    const double logp = std::log(static_cast<double>(p));
    const double pw = std::pow(static_cast<double>(p), -w);
    const double prefix = 2.0 * logp * pw;
    auto term = [&](Nat n) { return table.lambda(n) * std::pow(static_cast<double>(n), -w); };
    const double direct_tail = log_tail_bound(w, N);
    const Int P = static_cast<Int>(p);

    auto quotient = [&](const Character& chi) { return l_log_derivative_truncated(w, chi, N).quotient; };

    SeriesSide rhs;
    double offset = std::nan("");
    std::string offset_note;
    CompensatedSum lhs;

    if (c == TwinClass::III) {
        lhs = progression_sum(p + 12, 12, N, term);
        for (const auto& chi : character_table(12).characters) {
            auto ld = quotient(chi);
            ld.value += chi(P) * logp * pw;
            rhs.add(-logp * pw / 2.0 * chi(P), ld);
        }
        offset = 0.0;
        for (Nat n = least_positive(P, 12); n < p; n += 12) offset += prefix * term(n);
        offset_note = "printed correction removes only n = p'; Lambda terms n < p' of the class remain (offset " +
                      fmt(offset) + ")";
    } else if (c == TwinClass::II) {
        lhs = progression_sum(least_positive(6 - P, 12), 12, N, term);
        for (const auto& chi : character_table(6).characters) rhs.add(-logp * pw * chi(-P) / 2.0, quotient(chi));
        for (const auto& chi : character_table(12).characters) rhs.add(logp * pw * chi(-P) / 4.0, quotient(chi));
    } else {
        lhs = progression_sum(least_positive(-P, 4), 4, N, term);
        for (const auto& chi : character_table(4).characters) rhs.add(-logp * pw * chi(-P), quotient(chi));
    }

    check.lhs = prefix * lhs.value();
    check.rhs = rhs.value;
    check.tail_bound = prefix * (direct_tail + lhs.rounding_bound()) + rhs.bound;

    if (c == TwinClass::II) {
        // The printed right side carries no factor 2 against the left side.
        SeriesCheck out = finish(check, std::nan(""), "");
        if (out.status == CheckStatus::Fail) {
            out.corrected_rhs = 2.0 * out.rhs;
            out.corrected_residual = std::abs(out.lhs - out.corrected_rhs);
            const double corrected_bound = out.tail_bound + rhs.bound;
            if (out.corrected_residual <= corrected_bound) {
                out.status = CheckStatus::Documented;
                out.tail_bound = corrected_bound;
                out.note = "printed right side is exactly half the left side (missing factor 2)";
            }
        }
        return out;
    }
    return finish(check, offset, offset_note);
}

SeriesCheck corollary14_series_residual(Nat p, double s, Nat N) {
    if (p % 6 != 1)
        throw Error(ErrorKind::ResidueViolation, "p' = " + std::to_string(p) + " is not 1 mod 6");
    auto check = constraint_series_residual(TwinClass::III, p, s, N);
    check.identity = "corollary14";
    return check;
}

}  // namespace primepat
