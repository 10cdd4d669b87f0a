#include "sqft/result_doc.hpp"

#include <cstdio>
#include <fstream>

namespace sqft {

const char* const kToolVersion = "0.1.0";

namespace {

std::string prob_string(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", p);
  return buf;
}

std::string bitstring(std::uint64_t c, int bits) {
  std::string s(bits, '0');
  for (int j = 0; j < bits; ++j)
    if (c & (1ull << j)) s[bits - 1 - j] = '1';
  return s;
}

}  // namespace

json distribution_json(const OutcomeDistribution& d) {
  json probs = json::object();
  json bitstrings = json::object();
  for (const auto& [c, p] : d.p) {
    std::string key = std::to_string(c);
    probs[key] = prob_string(p);
    bitstrings[key] = bitstring(c, d.bits);
  }
  return json{{"bits", d.bits}, {"probabilities", probs}, {"bitstrings", bitstrings}};
}

json ledger_json(const CountLedger& l) {
  return json{{"single_qubit", l.single_qubit},
              {"two_qubit", l.two_qubit},
              {"measurements", l.measurements},
              {"peak_register_width", l.peak_register_width},
              {"steps", l.steps}};
}

json shor_outcome_json(const ShorOutcome& o) {
  json j{{"c", o.c}, {"status", to_string(o.status)}, {"attempts_used", o.attempts_used}};
  if (o.convergent) j["convergent"] = {{"d", o.convergent->first}, {"r", o.convergent->second}};
  if (o.order) j["order"] = *o.order;
  if (!o.factors.empty()) j["factors"] = o.factors;
  return j;
}

json comparison_json(const ComparisonReport& r) {
  return json{{"gamma_semiclassical", r.gamma_semiclassical},
              {"gamma_standard", r.gamma_standard},
              {"se_semiclassical", r.se_semiclassical},
              {"se_standard", r.se_standard},
              {"trajectories", r.trajectories},
              {"two_qubit_depolarizing_p", r.noise.two_qubit_depolarizing_p},
              {"single_qubit_depolarizing_p", r.noise.single_qubit_depolarizing_p},
              {"cx_semiclassical", r.cx_semiclassical},
              {"cx_standard", r.cx_standard}};
}

json result_document(const json& request, const json& body) {
  json doc;
  doc["tool_version"] = kToolVersion;
  doc["request"] = request;
  doc["result"] = body;
  return doc;
}

void write_json_file(const json& doc, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << doc.dump(2) << "\n";
}

}  // namespace sqft
