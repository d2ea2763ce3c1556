#pragma once

// Structured output shared by the CLI and the verification suite: JSON
// records with sorted keys and floats rounded to 12 significant digits, so
// that parse-and-redump is byte-identical.

#include <string>
#include <vector>

#include <json.hpp>

#include "primepat/analytic.hpp"
#include "primepat/classification.hpp"
#include "primepat/prime_powers.hpp"

namespace primepat {

using Json = nlohmann::json;

double round_significant(double x, int digits = 12);

/// Canonical single-line rendering.
std::string render(const Json& j);

Json census_json(const ClassCensus& census);
Json tuple_json(Nat start, Nat distance, Nat length);
Json multiplet_json(const Multiplet& m);
Json encounter_json(const CloseEncounter& e);
Json series_check_json(const SeriesCheck& check);

/// CSV field escaping for values that may contain commas or quotes.
std::string csv_field(const std::string& value);

}  // namespace primepat
