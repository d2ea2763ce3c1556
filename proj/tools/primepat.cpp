// primepat: command-line front end over the primepat library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "primepat/analytic.hpp"
#include "primepat/arith.hpp"
#include "primepat/classification.hpp"
#include "primepat/error.hpp"
#include "primepat/multiplets.hpp"
#include "primepat/parallel.hpp"
#include "primepat/polynomials.hpp"
#include "primepat/prime_powers.hpp"
#include "primepat/report.hpp"
#include "primepat/verification.hpp"

using namespace primepat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

enum class Format { Text, Json, Csv };

// Results go to stdout in one of three formats; progress and diagnostics go
// to stderr so result streams stay machine-parseable.
class Output {
public:
    Output(Format format, std::vector<std::string> columns) : format_(format), columns_(std::move(columns)) {}

    void row(const Json& record, const std::string& text) {
        switch (format_) {
            case Format::Text: std::cout << text << '\n'; break;
            case Format::Json: std::cout << render(record) << '\n'; break;
            case Format::Csv: csv_row(record); break;
        }
    }

private:
    void csv_row(const Json& record) {
        if (!header_done_) {
            for (std::size_t i = 0; i < columns_.size(); ++i) std::cout << (i ? "," : "") << columns_[i];
            std::cout << '\n';
            header_done_ = true;
        }
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            std::cout << (i ? "," : "");
            const auto it = record.find(columns_[i]);
            if (it == record.end() || it->is_null()) continue;
            if (it->is_string()) {
                std::cout << csv_field(it->get<std::string>());
            } else if (it->is_array()) {
                std::string joined;
                for (const auto& v : *it) joined += (joined.empty() ? "" : " ") + render(v);
                std::cout << csv_field(joined);
            } else {
                std::cout << csv_field(render(*it));
            }
        }
        std::cout << '\n';
    }

    Format format_;
    std::vector<std::string> columns_;
    bool header_done_ = false;
};

std::string strip_underscores(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
    return s;
}

template <class T>
CLI::Option* add_number(CLI::App* app, const std::string& name, T& target, const std::string& help) {
    return app->add_option(name, target, help)->transform(strip_underscores, "", "");
}

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

std::string fixed(double x, int digits = 6) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

struct Globals {
    std::string format = "text";
    unsigned parallelism = 0;

    Format fmt() const {
        if (format == "json") return Format::Json;
        if (format == "csv") return Format::Csv;
        return Format::Text;
    }
    unsigned workers() const { return resolve_workers(parallelism); }
};

// ---- classify ---------------------------------------------------------

struct ClassifyArgs {
    std::vector<Int> pair;
    std::optional<Nat> census_bound;
};

int cmd_classify(const Globals& g, const ClassifyArgs& a) {
    if (a.census_bound) {
        Stopwatch sw;
        std::cerr << "census up to " << *a.census_bound << " on " << g.workers() << " worker(s)\n";
        const auto c = census(*a.census_bound, g.workers());
        std::cerr << "done in " << fixed(sw.seconds(), 3) << " s\n";
        if (g.fmt() == Format::Json) {
            std::cout << render(census_json(c)) << '\n';
            return kExitOk;
        }
        Output out(g.fmt(), {"class", "count", "fraction"});
        if (g.fmt() == Format::Text) std::cout << "N = " << c.bound << ", " << c.total << " pairs\n";
        for (auto k : {TwinClass::I, TwinClass::II, TwinClass::III, TwinClass::Special}) {
            const std::string name(to_string(k));
            std::ostringstream text;
            text << std::left << std::setw(8) << name << std::right << std::setw(12) << c.count(k) << "  "
                 << std::fixed << std::setprecision(6) << c.fraction(k);
            out.row(Json{{"class", name}, {"count", c.count(k)}, {"fraction", round_significant(c.fraction(k))}},
                    text.str());
        }
        return kExitOk;
    }
    if (a.pair.size() != 2) throw CLI::ValidationError("classify", "expected two primes or --census N");
    const auto pair = make_pair(std::min(a.pair[0], a.pair[1]), std::max(a.pair[0], a.pair[1]));
    const auto cls = classify_pair(pair);
    Json j{{"p_i", pair.p_i}, {"p_f", pair.p_f}, {"class", std::string(to_string(cls))},
           {"D", pair.half_distance()}, {"median", pair.median()}, {"a", nullptr}};
    std::string text;
    if (cls == TwinClass::Special) {
        text = "special, D=" + std::to_string(pair.half_distance());
    } else {
        const auto params = reconstruct_parameters(pair);
        j["a"] = params.a;
        text = "class " + std::string(to_string(cls)) + ", D=" + std::to_string(params.D) +
               ", a=" + std::to_string(params.a);
    }
    Output(g.fmt(), {"p_i", "p_f", "class", "D", "a", "median"}).row(j, text);
    return kExitOk;
}

// ---- search -----------------------------------------------------------

struct SearchArgs {
    std::optional<Nat> start;
    std::optional<Nat> length;
    std::optional<Nat> max_distance;
    std::vector<Nat> pattern;
    std::optional<Int> lo;
    std::optional<Int> hi;
    bool allow_powers = false;
    bool negative = false;
    bool confirm_long_run = false;
    std::size_t limit = 0;
};

int cmd_search(const Globals& g, const SearchArgs& a) {
    const bool tuple_mode = a.start || a.length || a.max_distance;
    const bool pattern_mode = !a.pattern.empty();
    if (tuple_mode == pattern_mode)
        throw CLI::ValidationError("search", "use either --start/--length/--max-distance or --pattern/--lo/--hi");
    Stopwatch sw;
    if (tuple_mode) {
        if (!a.start || !a.length || !a.max_distance)
            throw CLI::ValidationError("search", "--start, --length and --max-distance go together");
        if (a.lo || a.hi || a.negative) throw CLI::ValidationError("search", "--lo/--hi/--negative need --pattern");
        const Nat step = equal_distance_step(*a.start, *a.length);
        const Nat candidates = *a.max_distance / step;
        if (*a.length >= 13 && *a.length == *a.start && !a.confirm_long_run) {
            std::cerr << "exhaustive scan of " << candidates << " candidate distances (step " << step
                      << "); estimated " << fixed(static_cast<double>(candidates) * 2.5e-6 / g.workers(), 3)
                      << " s or more. Re-run with --confirm-long-run.\n";
            return kExitUsage;
        }
        std::cerr << "scanning " << candidates << " distances (step " << step << ") on " << g.workers()
                  << " worker(s)\n";
        const auto found = search_equal_distance(*a.start, *a.length, *a.max_distance, a.allow_powers,
                                                 {g.workers(), a.limit});
        Output out(g.fmt(), {"start", "distance", "length", "members"});
        for (Nat d : found) {
            std::ostringstream text;
            text << d << ": ";
            for (Nat k = 0; k < *a.length; ++k) text << (k ? " " : "") << *a.start + k * d;
            out.row(tuple_json(*a.start, d, *a.length), text.str());
        }
        std::cerr << found.size() << " result(s) in " << fixed(sw.seconds(), 3) << " s\n";
        return kExitOk;
    }
    if (a.confirm_long_run) throw CLI::ValidationError("search", "--confirm-long-run applies to tuple scans");
    const Int lo = a.lo.value_or(1);
    const Int hi = a.hi.value_or(1000);
    if (lo < 1 && !a.negative) throw CLI::ValidationError("search", "--lo below 1 requires --negative");
    validate_pattern(a.pattern);
    const auto starts = search_pattern(a.pattern, lo, hi, a.allow_powers, {g.workers(), a.limit});
    Output out(g.fmt(), {"start", "pattern", "members", "admit_powers"});
    for (Int s : starts) {
        const auto m = make_multiplet(s, a.pattern, a.allow_powers);
        out.row(multiplet_json(m), join(members(m), " "));
    }
    std::cerr << starts.size() << " result(s) in " << fixed(sw.seconds(), 3) << " s\n";
    return kExitOk;
}

// ---- verify-tables ----------------------------------------------------

int cmd_verify(const Globals& g, bool skip_slow, bool json) {
    const auto results = run_verification_suite({skip_slow, g.workers()});
    bool failed = false;
    for (const auto& r : results) {
        failed = failed || r.verdict == Verdict::Fail;
        if (json || g.fmt() == Format::Json) {
            std::cout << render(Json{{"id", r.id},
                                     {"title", r.title},
                                     {"verdict", std::string(to_string(r.verdict))},
                                     {"detail", r.detail},
                                     {"seconds", round_significant(r.seconds, 3)}})
                      << '\n';
        } else {
            std::cout << std::left << std::setw(11) << to_string(r.verdict) << std::setw(26) << r.id << r.detail
                      << '\n';
        }
    }
    return failed ? kExitVerification : kExitOk;
}

// ---- gaps -------------------------------------------------------------

int cmd_gaps(const Globals& g, Nat lo, Nat hi, bool histogram) {
    if (histogram) {
        Output out(g.fmt(), {"gap", "count"});
        for (const auto& [gap, count] : gap_histogram(lo, hi))
            out.row(Json{{"gap", gap}, {"count", count}}, std::to_string(gap) + " " + std::to_string(count));
        return kExitOk;
    }
    const auto gap = largest_gap_in(lo, hi);
    Output(g.fmt(), {"lo", "hi", "gap", "at"})
        .row(Json{{"lo", lo}, {"hi", hi}, {"gap", gap.gap}, {"at", gap.at}},
             "max gap " + std::to_string(gap.gap) + " at " + std::to_string(gap.at) + " (" +
                 std::to_string(gap.at) + ", " + std::to_string(gap.at + gap.gap) + ")");
    return kExitOk;
}

// ---- poly -------------------------------------------------------------

struct PolyArgs {
    Int b = kQ14.b;
    Int c = kQ14.c;
    Int from = 0;
    std::string dir = "+1";
    bool allow_powers = false;
    bool table = false;
    Int table_lo = 0;
    Int table_hi = 20;
};

int cmd_poly(const Globals& g, const PolyArgs& a) {
    const QuadPoly q{a.b, a.c};
    if (a.table) {
        Output out(g.fmt(), {"x", "value", "prime_like", "base", "exp"});
        for (const auto& r : run_table(q, a.table_lo, a.table_hi)) {
            Json j{{"x", r.argument}, {"value", r.value}, {"prime_like", r.prime_like}, {"base", nullptr},
                   {"exp", nullptr}};
            std::string text = std::to_string(r.argument) + " " + std::to_string(r.value);
            if (r.decomposition) {
                j["base"] = r.decomposition->base;
                j["exp"] = r.decomposition->exponent;
                text += r.decomposition->exponent == 1
                            ? " prime"
                            : " = " + std::to_string(r.decomposition->base) + "^" +
                                  std::to_string(r.decomposition->exponent);
            }
            out.row(j, text);
        }
        return kExitOk;
    }
    int direction = 0;
    if (a.dir == "+1" || a.dir == "1" || a.dir == "+") direction = 1;
    else if (a.dir == "-1" || a.dir == "-") direction = -1;
    else throw CLI::ValidationError("--dir", "expected +1 or -1");
    const auto run = prime_run(q, a.from, direction, a.allow_powers);
    Output(g.fmt(), {"b", "c", "from", "dir", "length", "failing_argument", "failing_value"})
        .row(Json{{"b", a.b},
                  {"c", a.c},
                  {"from", a.from},
                  {"dir", direction},
                  {"length", run.length},
                  {"failing_argument", run.failing_argument},
                  {"failing_value", run.failing_value}},
             "run " + std::to_string(run.length) + "; stops at x = " + std::to_string(run.failing_argument) +
                 " with value " + std::to_string(run.failing_value));
    return kExitOk;
}

// ---- powers -----------------------------------------------------------

int cmd_encounters(const Globals& g, Nat bound, Nat max_gap) {
    Output out(g.fmt(), {"larger", "smaller", "gap", "rate"});
    for (const auto& e : close_encounters(bound, max_gap)) {
        const auto j = encounter_json(e);
        std::string text = std::to_string(e.larger.value) + " - " + std::to_string(e.smaller.value) + " = " +
                           std::to_string(e.gap);
        if (!j["rate"].is_null()) text += ", rate " + fixed(j["rate"].get<double>(), 8);
        Json flat = j;
        flat["larger"] = e.larger.value;
        flat["smaller"] = e.smaller.value;
        out.row(g.fmt() == Format::Csv ? flat : j, text);
    }
    return kExitOk;
}

int cmd_quartets(const Globals& g, Nat distance, Nat bound) {
    Output out(g.fmt(), {"start", "distance", "length", "members"});
    for (const auto& t : equal_distance_quartets_with_powers(distance, bound))
        out.row(tuple_json(static_cast<Nat>(t.start), t.distance, t.length), join(t.members(), " "));
    return kExitOk;
}

int cmd_repeats(const Globals& g, const std::vector<Nat>& pattern, Int anchor, Nat hi) {
    validate_pattern(pattern);
    Output out(g.fmt(), {"start", "pattern", "members", "admit_powers"});
    for (const auto& m : repeats_with_powers(pattern, make_multiplet(anchor, pattern, true), hi, g.workers()))
        out.row(multiplet_json(m), join(members(m), " "));
    return kExitOk;
}

// ---- analytic ---------------------------------------------------------

struct AnalyticArgs {
    std::string identity = "constraint";
    std::string cls = "I";
    Nat p = 5;
    double s = 2.0;
    std::optional<Nat> N;
};

TwinClass parse_class(const std::string& s) {
    if (s == "I") return TwinClass::I;
    if (s == "II") return TwinClass::II;
    if (s == "III") return TwinClass::III;
    throw CLI::ValidationError("--class", "expected I, II or III");
}

int cmd_analytic(const Globals& g, const AnalyticArgs& a) {
    SeriesCheck check;
    if (a.identity == "constraint") {
        check = constraint_series_residual(parse_class(a.cls), a.p, a.s, a.N.value_or(100'000));
    } else if (a.identity == "twin") {
        check = twin_series_residual(parse_class(a.cls), a.p, a.s, a.N.value_or(1'000'000));
    } else if (a.identity == "corollary14") {
        check = corollary14_series_residual(a.p, a.s, a.N.value_or(100'000));
    } else {
        throw CLI::ValidationError("--identity", "expected constraint, twin or corollary14");
    }
    std::string text = check.identity + " p'=" + std::to_string(check.p_prime) + " s=" + fixed(check.s) +
                       " N=" + std::to_string(check.N) + ": lhs " + fixed(check.lhs, 12) + " rhs " +
                       fixed(check.rhs, 12) + " residual " + fixed(check.residual, 3) + " bound " +
                       fixed(check.tail_bound, 3) + " " + std::string(to_string(check.status));
    if (check.status == CheckStatus::Documented)
        text += " (corrected residual " + fixed(check.corrected_residual, 3) + "; " + check.note + ")";
    Output(g.fmt(), {"identity", "class", "p", "s", "N", "lhs", "rhs", "residual", "tail_bound", "status",
                     "corrected_residual", "note"})
        .row(series_check_json(check), text);
    return check.status == CheckStatus::Fail ? kExitVerification : kExitOk;
}

unsigned env_parallelism() {
    if (const char* v = std::getenv("PRIMEPAT_THREADS")) {
        try {
            return static_cast<unsigned>(std::stoul(v));
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring PRIMEPAT_THREADS=" << v << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"primepat: prime pairs, multiplets, prime powers and related series"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI file with option defaults; flags override");

    Globals g;
    g.parallelism = env_parallelism();
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--parallelism,-j", g.parallelism, "Worker threads (0 = all cores; default PRIMEPAT_THREADS)");

    ClassifyArgs classify;
    auto* c_classify = app.add_subcommand("classify", "Class of a prime pair, or a census of all pairs <= N");
    add_number(c_classify, "pair", classify.pair, "Two odd primes")->expected(0, 2);
    add_number(c_classify, "--census", classify.census_bound, "Census bound N");

    SearchArgs search;
    auto* c_search = app.add_subcommand("search", "Equal-distance tuples or distance-pattern multiplets");
    add_number(c_search, "--start", search.start, "First member p");
    add_number(c_search, "--length", search.length, "Number of members");
    add_number(c_search, "--max-distance", search.max_distance, "Largest full distance to try");
    add_number(c_search, "--pattern", search.pattern, "Gap pattern, e.g. 4,2,4")->delimiter(',');
    add_number(c_search, "--lo", search.lo, "Smallest start (default 1)");
    add_number(c_search, "--hi", search.hi, "Largest start (default 1000)");
    add_number(c_search, "--limit", search.limit, "Stop after this many results (0 = all)");
    c_search->add_flag("--allow-powers", search.allow_powers, "Admit prime powers as members");
    c_search->add_flag("--negative", search.negative, "Allow starts below 1");
    c_search->add_flag("--confirm-long-run", search.confirm_long_run, "Run scans estimated to take hours");

    bool skip_slow = false, verify_json = false;
    auto* c_verify = app.add_subcommand("verify-tables", "Check every published table and identity");
    c_verify->add_flag("--skip-slow", skip_slow, "Skip the first-11-plet scan");
    c_verify->add_flag("--json", verify_json, "JSON lines output");

    Nat gap_lo = 0, gap_hi = 0;
    bool histogram = false;
    auto* c_gaps = app.add_subcommand("gaps", "Largest prime gap in the open interval (lo, hi)");
    add_number(c_gaps, "lo", gap_lo, "Lower end")->required();
    add_number(c_gaps, "hi", gap_hi, "Upper end")->required();
    c_gaps->add_flag("--histogram", histogram, "Count every gap size instead");

    PolyArgs poly;
    auto* c_poly = app.add_subcommand(
        "poly", "Prime runs of x^2 + b x + c. CSV columns: b,c,from,dir,length,failing_argument,failing_value");
    add_number(c_poly, "--b", poly.b, "Linear coefficient")->capture_default_str();
    add_number(c_poly, "--c", poly.c, "Constant term")->capture_default_str();
    add_number(c_poly, "--from", poly.from, "Starting argument")->capture_default_str();
    c_poly->add_option("--dir", poly.dir, "+1 or -1")->capture_default_str();
    c_poly->add_flag("--allow-powers", poly.allow_powers, "Admit prime powers");
    c_poly->add_flag("--table", poly.table, "Print values over [--table-lo, --table-hi] instead");
    add_number(c_poly, "--table-lo", poly.table_lo, "Table start")->capture_default_str();
    add_number(c_poly, "--table-hi", poly.table_hi, "Table end")->capture_default_str();

    auto* c_powers = app.add_subcommand("powers", "Prime powers as multiplet members");
    c_powers->require_subcommand(1);
    Nat enc_bound = 1000, enc_gap = 2;
    auto* c_enc = c_powers->add_subcommand("encounters", "Close encounters involving a proper power");
    add_number(c_enc, "--bound", enc_bound, "Largest value")->capture_default_str();
    add_number(c_enc, "--max-gap", enc_gap, "Largest difference")->capture_default_str();
    Nat q_distance = 8, q_bound = 10'000'000;
    auto* c_quart = c_powers->add_subcommand("quartets", "Equal-distance quartets with a power member");
    add_number(c_quart, "--distance", q_distance, "Common difference")->capture_default_str();
    add_number(c_quart, "--bound", q_bound, "Starts below this")->capture_default_str();
    std::vector<Nat> r_pattern;
    Int r_anchor = 3;
    Nat r_hi = 100;
    auto* c_rep = c_powers->add_subcommand("repeats", "Power-admitting repeats of a multiplet pattern");
    add_number(c_rep, "--pattern", r_pattern, "Gap pattern")->delimiter(',')->required();
    add_number(c_rep, "--anchor", r_anchor, "Start of the anchor multiplet")->capture_default_str();
    add_number(c_rep, "--hi", r_hi, "Largest start")->capture_default_str();

    AnalyticArgs analytic;
    auto* c_analytic = app.add_subcommand("analytic", "Truncated Dirichlet-series identity check");
    c_analytic->add_option("--identity", analytic.identity, "constraint, twin or corollary14")
        ->capture_default_str();
    c_analytic->add_option("--class", analytic.cls, "I, II or III")->capture_default_str();
    add_number(c_analytic, "--p", analytic.p, "Fixed prime p'")->capture_default_str();
    c_analytic->add_option("--s", analytic.s, "Real exponent > 1")->capture_default_str();
    add_number(c_analytic, "--N", analytic.N, "Truncation point (default 1e5, twin 1e6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (c_classify->parsed()) return cmd_classify(g, classify);
        if (c_search->parsed()) return cmd_search(g, search);
        if (c_verify->parsed()) return cmd_verify(g, skip_slow, verify_json);
        if (c_gaps->parsed()) return cmd_gaps(g, gap_lo, gap_hi, histogram);
        if (c_poly->parsed()) return cmd_poly(g, poly);
        if (c_enc->parsed()) return cmd_encounters(g, enc_bound, enc_gap);
        if (c_quart->parsed()) return cmd_quartets(g, q_distance, q_bound);
        if (c_rep->parsed()) return cmd_repeats(g, r_pattern, r_anchor, r_hi);
        if (c_analytic->parsed()) return cmd_analytic(g, analytic);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
