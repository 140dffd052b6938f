#pragma once

#include <filesystem>
#include <string>

#include "secrecy/montecarlo.hpp"

namespace secrecy {

enum class RateUnit { Nats, Bits };

const char* unit_name(RateUnit unit);

// Unit conversion happens only here, at the output boundary; everything
// upstream stays in nats.
double convert_rate(double nats, RateUnit unit);

// CSV schema: point,mc_mean,mc_stderr,analytic,trials. A leading `series`
// column is added when the dataset carries more than one series (or any
// non-empty series label) and a trailing `jensen` column when requested.
std::string dataset_to_csv(const Dataset& data, RateUnit unit, bool with_jensen = false);

// JSON document: {"spec": <resolved experiment echo>, "unit": ..., "rows": [...]}.
std::string dataset_to_json(const Dataset& data, RateUnit unit, bool with_jensen = false);

void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace secrecy
