#include "primepat/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace primepat {

double round_significant(double x, int digits) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

std::string render(const Json& j) { return j.dump(); }

Json census_json(const ClassCensus& census) {
    Json counts = Json::object();
    Json fractions = Json::object();
    for (auto c : {TwinClass::I, TwinClass::II, TwinClass::III, TwinClass::Special}) {
        const std::string key(to_string(c));
        counts[key] = census.count(c);
        fractions[key] = round_significant(census.fraction(c));
    }
    return Json{{"N", census.bound}, {"counts", counts}, {"fractions", fractions}, {"total", census.total}};
}

Json tuple_json(Nat start, Nat distance, Nat length) {
    Json members = Json::array();
    for (Nat k = 0; k < length; ++k) members.push_back(start + k * distance);
    return Json{{"start", start}, {"distance", distance}, {"length", length}, {"members", members}};
}

Json multiplet_json(const Multiplet& m) {
    return Json{{"start", m.start},
                {"pattern", m.pattern},
                {"members", members(m)},
                {"admit_powers", m.admit_powers}};
}

namespace {

Json prime_like_json(const PrimeLike& p) {
    return Json{{"base", p.decomposition.base}, {"exp", p.decomposition.exponent}};
}

}  // namespace

Json encounter_json(const CloseEncounter& e) {
    Json j{{"larger", prime_like_json(e.larger)}, {"smaller", prime_like_json(e.smaller)}, {"gap", e.gap}};
    j["rate"] = e.larger.decomposition.base == e.smaller.decomposition.base
                    ? Json(nullptr)
                    : Json(round_significant(divergence_rate(e)));
    return j;
}

Json series_check_json(const SeriesCheck& c) {
    Json j{{"identity", c.identity},
           {"class", std::string(to_string(c.series_class))},
           {"p", c.p_prime},
           {"s", round_significant(c.s)},
           {"N", c.N},
           {"lhs", round_significant(c.lhs)},
           {"rhs", round_significant(c.rhs)},
           {"residual", round_significant(c.residual)},
           {"tail_bound", round_significant(c.tail_bound)},
           {"status", std::string(to_string(c.status))}};
    if (c.status == CheckStatus::Documented) {
        j["corrected_rhs"] = round_significant(c.corrected_rhs);
        j["corrected_residual"] = round_significant(c.corrected_residual);
        j["note"] = c.note;
    }
    return j;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char ch : value) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace primepat
