#include <algorithm>
#include <doctest.h>

#include <cmath>

#include "primepat/multiplets.hpp"
#include "primepat/prime_powers.hpp"
#include "primepat/report.hpp"
#include "primepat/verification.hpp"
#include "primepat/published_tables.hpp"

using namespace primepat;

namespace {

void check_round_trip(const Json& j) {
    const std::string once = render(j);
    REQUIRE(render(Json::parse(once)) == once);
}

}  // namespace

TEST_CASE("round_significant") {
    CHECK(round_significant(1.0 / 3.0) == 0.333333333333);
    CHECK(round_significant(123456789.123456789) == 123456789.123);
    CHECK(round_significant(0.0) == 0.0);
    CHECK(round_significant(-2.5e-300) == -2.5e-300);
    CHECK(std::isinf(round_significant(INFINITY)));
}

TEST_CASE("JSON records round-trip byte for byte with sorted keys") {
    const auto census_record = census_json(census(2000));
    check_round_trip(census_record);
    const std::string text = render(census_record);
    CHECK(text.find("\"N\"") < text.find("\"counts\""));
    CHECK(text.find("\"counts\"") < text.find("\"fractions\""));

    check_round_trip(tuple_json(7, 150, 7));
    CHECK(render(tuple_json(7, 150, 3)) == R"({"distance":150,"length":3,"members":[7,157,307],"start":7})");
    check_round_trip(multiplet_json(make_multiplet(-7, {2, 8, 8, 2})));
    for (const auto& e : close_encounters(2000, 4)) check_round_trip(encounter_json(e));
    const auto enc = close_encounters(30, 2);
    const auto it = std::find_if(enc.begin(), enc.end(), [](const CloseEncounter& e) { return e.larger.value == 27; });
    REQUIRE(it != enc.end());
    const auto j = encounter_json(*it);
    CHECK(render(j) == R"({"gap":2,"larger":{"base":3,"exp":3},"rate":1.08,"smaller":{"base":5,"exp":2}})");

    for (const auto& c : {constraint_series_residual(TwinClass::III, 7, 2.0, 10'000),
                          constraint_series_residual(TwinClass::I, 3, 2.0, 10'000),
                          twin_series_residual(TwinClass::II, 5, 3.0, 10'000)})
        check_round_trip(series_check_json(c));
}

TEST_CASE("csv_field quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("parallel searches give identical output for 1 to 8 workers") {
    const auto base_pattern = search_pattern({4, 2, 4}, -1000, 200'000, false, {1, 0});
    const auto base_tuple = search_equal_distance(5, 5, 200'000, false, {1, 0});
    const auto base_repeats = repeats_with_powers({2, 8}, make_multiplet(3, {2, 8}), 100'000, 1);
    for (unsigned w = 2; w <= 8; ++w) {
        REQUIRE(search_pattern({4, 2, 4}, -1000, 200'000, false, {w, 0}) == base_pattern);
        REQUIRE(search_equal_distance(5, 5, 200'000, false, {w, 0}) == base_tuple);
        REQUIRE(repeats_with_powers({2, 8}, make_multiplet(3, {2, 8}), 100'000, w) == base_repeats);
    }
}

TEST_CASE("check_printed_progression") {
    const auto clean = check_printed_progression(published::kElevenPlets[0]);
    CHECK(clean.distance == 1536160080);
    CHECK(clean.inconsistent.empty());
    CHECK(clean.progression_all_prime);
    CHECK(clean.printed_all_prime);

    const auto sixth = check_printed_progression(published::kElevenPlets[6]);
    CHECK(sixth.distance == 150365447400ULL);
    CHECK(sixth.inconsistent == std::vector<std::size_t>{7});
    CHECK(sixth.progression_all_prime);

    const auto third = check_printed_progression(published::kElevenPlets[2]);
    CHECK(third.inconsistent == std::vector<std::size_t>{9});
    CHECK(third.progression_all_prime);

    const auto fourth = check_printed_progression(published::kElevenPlets[3]);
    CHECK_FALSE(fourth.progression_all_prime);
    CHECK_FALSE(fourth.printed_all_prime);
}
