#pragma once

#include <nlohmann/json.hpp>

#include "sqft/analysis.hpp"
#include "sqft/qft.hpp"
#include "sqft/shor.hpp"
#include "sqft/simulator.hpp"

namespace sqft {

using json = nlohmann::ordered_json;

extern const char* const kToolVersion;

/// Outcome keys are decimal strings of c; a parallel field carries the
/// bitstring in measurement order. Probabilities keep >= 12 significant
/// digits.
json distribution_json(const OutcomeDistribution& d);

json ledger_json(const CountLedger& l);

json shor_outcome_json(const ShorOutcome& o);

json comparison_json(const ComparisonReport& r);

/// Wraps a command result with the request echo, tool version and seed.
json result_document(const json& request, const json& body);

void write_json_file(const json& doc, const std::string& path);

}  // namespace sqft
