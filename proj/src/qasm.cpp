#include "sqft/qasm.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace sqft {

namespace {

std::string qubit_ref(int q) { return "q[" + std::to_string(q) + "]"; }

std::string angle_list(const std::vector<PiAngle>& params) {
  std::string s = "(";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += params[i].str();
  }
  return s + ")";
}

PiAngle cycles_to_pi_angle(const Dyadic& phase) {
  // num/2^e cycles = 2*num/2^e * pi radians
  return PiAngle::pi_frac(2 * static_cast<std::int64_t>(phase.num), phase.exp);
}

}  // namespace

std::string emit_qasm(const Circuit& circuit) {
  std::vector<int> out_map = circuit.effective_output_map();
  std::vector<std::string> creg_name(circuit.num_clbits);
  for (int k = 0; k < circuit.num_clbits; ++k) creg_name[k] = "m" + std::to_string(k);
  for (size_t j = 0; j < out_map.size(); ++j) creg_name[out_map[j]] = "c" + std::to_string(j);

  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "qreg q[" << circuit.num_qubits << "];\n";
  for (int k = 0; k < circuit.num_clbits; ++k) os << "creg " << creg_name[k] << "[1];\n";

  for (const auto& op : circuit.ops) {
    if (const auto* g = std::get_if<SingleQubitOp>(&op)) {
      const Gate1& gate = g->gate;
      if (gate.name == "u1" || gate.name == "u2" || gate.name == "u3")
        os << gate.name << angle_list(gate.params) << " " << qubit_ref(g->target) << ";\n";
      else if (gate.name == "h" || gate.name == "s" || gate.name == "t" || gate.name == "x" ||
               gate.name == "id")
        os << gate.name << " " << qubit_ref(g->target) << ";\n";
      else
        throw std::invalid_argument("emit_qasm: gate '" + gate.name + "' is outside the dialect");
    } else if (const auto* cx = std::get_if<CxOp>(&op)) {
      os << "cx " << qubit_ref(cx->control) << "," << qubit_ref(cx->target) << ";\n";
    } else if (const auto* m = std::get_if<MeasureOp>(&op)) {
      os << "measure " << qubit_ref(m->qubit) << " -> " << creg_name[m->cbit] << "[0];\n";
    } else if (const auto* f = std::get_if<ConditionedPhaseOp>(&op)) {
      os << "if(" << creg_name[f->cbit] << "==" << f->value << ") u1("
         << cycles_to_pi_angle(f->phase).str() << ") " << qubit_ref(f->target) << ";\n";
    } else if (const auto* r = std::get_if<ResetOp>(&op)) {
      os << "reset " << qubit_ref(r->target) << ";\n";
    } else {
      throw std::invalid_argument("emit_qasm: circuit contains un-lowered operations");
    }
  }
  return os.str();
}

void emit_qasm_file(const Circuit& circuit, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("emit_qasm: cannot open " + path);
  f << emit_qasm(circuit);
}

namespace {

struct Parser {
  std::map<std::string, int> cregs;  // name -> clbit index
  Circuit circuit;
  int line_no = 0;

  [[noreturn]] void fail(const std::string& what) const { throw QasmParseError(line_no, what); }

  static std::string strip(std::string s) {
    auto pos = s.find("//");
    if (pos != std::string::npos) s.erase(pos);
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

  int parse_index(const std::string& tok, const std::string& reg) const {
    auto open = tok.find('[');
    auto close = tok.find(']');
    if (open == std::string::npos || close == std::string::npos || tok.substr(0, open) != reg)
      throw QasmParseError(line_no, "expected " + reg + "[i], got '" + tok + "'");
    return std::stoi(tok.substr(open + 1, close - open - 1));
  }

  PiAngle parse_angle(std::string s) const {
    if (s.empty()) fail("empty angle");
    if (s == "0") return PiAngle::zero();
    bool neg = false;
    if (s[0] == '-') {
      neg = true;
      s.erase(0, 1);
    }
    auto pi_pos = s.find("pi");
    if (pi_pos != std::string::npos) {
      std::int64_t num = 1;
      if (pi_pos > 0) {
        if (s[pi_pos - 1] != '*') fail("bad angle '" + s + "'");
        num = std::stoll(s.substr(0, pi_pos - 1));
      }
      std::int64_t den = 1;
      auto slash = s.find('/');
      if (slash != std::string::npos) den = std::stoll(s.substr(slash + 1));
      if (den <= 0 || (den & (den - 1)) != 0) fail("angle denominator must be a power of two");
      int exp = 0;
      while ((1ll << exp) < den) ++exp;
      return PiAngle::pi_frac(neg ? -num : num, exp);
    }
    return PiAngle::of_radians((neg ? -1 : 1) * std::stod(s));
  }

  Dyadic angle_to_cycles(const PiAngle& a) const {
    if (!a.dyadic) fail("conditional u1 requires a dyadic angle");
    // num/2^e * pi radians = num/2^{e+1} cycles, reduced mod 1
    std::int64_t num = a.num;
    const std::int64_t period = 2ll << a.exp;
    num %= period;
    if (num < 0) num += period;
    return Dyadic(static_cast<std::uint64_t>(num), a.exp + 1);
  }

  void parse_line(const std::string& raw) {
    std::string s = strip(raw);
    if (s.empty()) return;
    if (s.back() != ';') fail("missing ';'");
    s.pop_back();

    if (s.rfind("OPENQASM", 0) == 0 || s.rfind("include", 0) == 0) return;
    if (s.rfind("qreg", 0) == 0) {
      auto open = s.find('[');
      auto close = s.find(']');
      if (open == std::string::npos || close == std::string::npos) fail("bad qreg");
      circuit.num_qubits = std::stoi(s.substr(open + 1, close - open - 1));
      return;
    }
    if (s.rfind("creg", 0) == 0) {
      std::istringstream is(s);
      std::string kw, decl;
      is >> kw >> decl;
      auto open = decl.find('[');
      if (open == std::string::npos) fail("bad creg");
      std::string name = decl.substr(0, open);
      int width = std::stoi(decl.substr(open + 1));
      if (width != 1) fail("only 1-bit classical registers are supported");
      int idx = circuit.num_clbits++;
      cregs[name] = idx;
      if (name.size() > 1 && name[0] == 'c') {
        size_t out_pos = std::stoul(name.substr(1));
        if (circuit.output_map.size() <= out_pos) circuit.output_map.resize(out_pos + 1, -1);
        circuit.output_map[out_pos] = idx;
      }
      return;
    }

    int cond_bit = -1, cond_val = 0;
    if (s.rfind("if(", 0) == 0) {
      auto close = s.find(')');
      if (close == std::string::npos) fail("bad if(...)");
      std::string cond = s.substr(3, close - 3);
      auto eq = cond.find("==");
      if (eq == std::string::npos) fail("bad condition '" + cond + "'");
      std::string name = cond.substr(0, eq);
      auto it = cregs.find(name);
      if (it == cregs.end()) fail("unknown classical register '" + name + "'");
      cond_bit = it->second;
      cond_val = std::stoi(cond.substr(eq + 2));
      s = strip(s.substr(close + 1));
    }

    std::string head = s.substr(0, s.find_first_of(" ("));
    if (head == "measure") {
      std::istringstream is(s);
      std::string kw, qtok, arrow, ctok;
      is >> kw >> qtok >> arrow >> ctok;
      if (arrow != "->") fail("bad measure");
      auto open = ctok.find('[');
      auto it = cregs.find(ctok.substr(0, open));
      if (it == cregs.end()) fail("unknown classical register in measure");
      circuit.add(MeasureOp{parse_index(qtok, "q"), it->second});
      return;
    }
    if (head == "reset") {
      circuit.add(ResetOp{parse_index(strip(s.substr(5)), "q")});
      return;
    }
    if (head == "cx") {
      std::string rest = strip(s.substr(2));
      auto comma = rest.find(',');
      if (comma == std::string::npos) fail("bad cx");
      circuit.add(CxOp{parse_index(strip(rest.substr(0, comma)), "q"),
                       parse_index(strip(rest.substr(comma + 1)), "q")});
      return;
    }

    std::vector<PiAngle> params;
    std::string rest;
    if (head == "u1" || head == "u2" || head == "u3") {
      auto open = s.find('(');
      auto close = s.find(')');
      if (open == std::string::npos || close == std::string::npos) fail("bad " + head);
      std::string plist = s.substr(open + 1, close - open - 1);
      std::istringstream ps(plist);
      std::string tok;
      while (std::getline(ps, tok, ',')) params.push_back(parse_angle(strip(tok)));
      rest = strip(s.substr(close + 1));
    } else if (head == "h" || head == "s" || head == "t" || head == "x" || head == "id") {
      rest = strip(s.substr(head.size()));
    } else {
      fail("unsupported instruction '" + head + "'");
    }
    int target = parse_index(rest, "q");

    if (cond_bit >= 0) {
      if (head != "u1" || params.size() != 1) fail("only conditional u1 is supported");
      circuit.add(ConditionedPhaseOp{cond_bit, cond_val, angle_to_cycles(params[0]), target});
      return;
    }
    Gate1 gate;
    if (head == "u1") gate = gate_u1(params.at(0));
    else if (head == "u2") gate = gate_u2(params.at(0), params.at(1));
    else if (head == "u3") gate = gate_u3(params.at(0), params.at(1), params.at(2));
    else if (head == "h") gate = gate_h();
    else if (head == "s") gate = gate_s();
    else if (head == "t") gate = gate_t();
    else if (head == "x") gate = gate_x();
    else gate = gate_id();
    circuit.add(SingleQubitOp{gate, target});
  }
};

}  // namespace

Circuit parse_qasm(const std::string& text) {
  Parser p;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    ++p.line_no;
    p.parse_line(line);
  }
  for (size_t j = 0; j < p.circuit.output_map.size(); ++j)
    if (p.circuit.output_map[j] < 0)
      throw QasmParseError(p.line_no, "output register c" + std::to_string(j) + " missing");
  p.circuit.validate();
  return p.circuit;
}

Circuit parse_qasm_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("parse_qasm: cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return parse_qasm(os.str());
}

}  // namespace sqft
