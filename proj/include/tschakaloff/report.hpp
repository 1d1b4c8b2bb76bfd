#pragma once

// Machine-readable forms of records and exponent reports.
//
// Record JSON: {"n":int, "m":int, "A":string, "B":string, "I_lo":string,
// "I_hi":string, "nonzero":bool}; integers and interval endpoints use the
// exact `[-]num/den` text form.

#include <span>
#include <string>

#include <json.hpp>

#include "tschakaloff/approximants.hpp"
#include "tschakaloff/asymptotics.hpp"

namespace tschakaloff {

using Json = nlohmann::ordered_json;

Json record_to_json(const ApproximantRecord &rec);
// Throws ParseError on missing fields or malformed numbers.
ApproximantRecord record_from_json(const Json &j);

// One record per line inside a top-level array.
std::string records_to_json_text(std::span<const ApproximantRecord> records);
std::vector<ApproximantRecord> records_from_json_text(const std::string &text);

// Exact columns first, then 20-digit decimal approximations of the interval.
std::string record_csv_header();
std::string record_csv_row(const ApproximantRecord &rec);

Json interval_to_json(const RationalInterval &x);
Json exponent_report_to_json(const ExponentReport &r);
Json measure_to_json(const MeasureEstimate &m);

std::string hypothesis_name(Hypothesis h);

} // namespace tschakaloff
