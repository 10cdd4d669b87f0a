#pragma once

#include <stdexcept>
#include <string>

#include "sqft/circuit.hpp"

namespace sqft {

struct QasmParseError : std::runtime_error {
  int line;
  QasmParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

/// Emits the restricted QASM 2.0 dialect: u1/u2/u3/h/s/t/x/cx, measure,
/// reset, and per-bit conditional u1. One 1-bit classical register per
/// measured bit; registers named c<j> when classical bit j' feeds output
/// bit j (so the output map survives a round trip), m<k> otherwise.
/// Dyadic angles print as exact pi fractions. Requires a lowered
/// circuit; byte-stable across runs.
std::string emit_qasm(const Circuit& circuit);

void emit_qasm_file(const Circuit& circuit, const std::string& path);

Circuit parse_qasm(const std::string& text);

Circuit parse_qasm_file(const std::string& path);

}  // namespace sqft
