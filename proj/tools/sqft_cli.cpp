#include <CLI11.hpp>
#include <iostream>
#include <random>

#include "sqft/qasm.hpp"
#include "sqft/result_doc.hpp"
#include "sqft/semiclassical.hpp"

namespace {

using namespace sqft;

StateVector parse_input(const std::string& spec, int n, std::uint64_t seed) {
  if (spec == "random") {
    std::mt19937_64 rng(seed);
    return StateVector::basis(n, std::uniform_int_distribution<std::uint64_t>(
                                     0, (1ull << n) - 1)(rng));
  }
  if (static_cast<int>(spec.size()) != n)
    throw CLI::ValidationError("--input", "bitstring length must equal n");
  std::uint64_t v = 0;
  for (int i = 0; i < n; ++i) {
    char ch = spec[i];
    if (ch != '0' && ch != '1') throw CLI::ValidationError("--input", "bitstring must be 0/1");
    if (ch == '1') v |= 1ull << (n - 1 - i);  // leftmost character is the top bit
  }
  return StateVector::basis(n, v);
}

int run_qft(int n, const std::string& mode, int t, const std::string& input_spec, bool exact,
            std::uint64_t shots, std::uint64_t seed, double noise_p,
            const std::string& qasm_path, const std::string& json_path) {
  Circuit circuit;
  json request{{"command", "qft"}, {"n", n}, {"mode", mode}, {"input", input_spec},
               {"exact", exact}, {"shots", shots}, {"seed", seed}, {"noise_p", noise_p}};
  if (mode == "standard") {
    circuit = build_standard_qft_measured(n);
  } else {
    if (t < 1) t = 1;
    request["t"] = t;
    circuit = build_semiclassical_circuit(plan_blocks(n, t));
  }
  Circuit lowered = lower_to_hardware_gates(circuit);
  StateVector input = parse_input(input_spec, n, seed);

  OutcomeDistribution dist;
  if (noise_p > 0) {
    NoiseModel noise{noise_p, 0.0};
    dist = run_noisy(lowered, input, noise, shots ? shots : 10000, seed);
  } else if (exact) {
    dist = enumerate_branches(circuit, input);
  } else {
    dist = sample(circuit, input, shots ? shots : 8192, seed);
  }

  if (!qasm_path.empty()) emit_qasm_file(lowered, qasm_path);

  json body;
  body["distribution"] = distribution_json(dist);
  body["gate_counts"] = ledger_json(count_gates(circuit));
  body["gate_counts_lowered"] = ledger_json(count_gates(lowered));
  body["seed"] = seed;
  json doc = result_document(request, body);
  if (!json_path.empty()) write_json_file(doc, json_path);
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_shor(std::uint64_t n_value, std::uint64_t x, int t, std::uint64_t shots,
             std::uint64_t seed, int attempts, const std::string& json_path) {
  ShorConfig cfg = ShorConfig::make(n_value, x, t);
  ShorOutcome out = factor(cfg, shots, seed, attempts);
  json request{{"command", "shor"}, {"N", n_value}, {"x", x}, {"t", t},
               {"shots", shots}, {"seed", seed}, {"attempts", attempts}};
  json body;
  body["outcome"] = shor_outcome_json(out);
  body["ledger"] = ledger_json(
      recycled_execution_ledger(plan_blocks(cfg.exponent_bits, t), cfg.work_qubits));
  body["seed"] = seed;
  json doc = result_document(request, body);
  if (!json_path.empty()) write_json_file(doc, json_path);
  std::cout << doc.dump(2) << "\n";
  return out.status == ShorStatus::success ? 0 : 4;
}

int run_decompose(int k, const std::string& json_path) {
  Gate1 rk = r_k(k);
  ControlledDecomposition dec = decompose_phase_gate(rk);
  Circuit frag = controlled_gate_circuit(dec, 0, 1);
  Eigen::MatrixXcd u = circuit_unitary(frag);
  Eigen::MatrixXcd target = Eigen::MatrixXcd::Identity(4, 4);
  target(3, 3) = rk.m(1, 1);
  double residual = max_abs_diff(u, target);
  double abc = max_abs_diff(dec.a.m * dec.b.m * dec.c.m, Eigen::MatrixXcd::Identity(2, 2));

  json doc = result_document(json{{"command", "decompose"}, {"k", k}},
                             json{{"alpha", dec.alpha.str()},
                                  {"A", dec.a.label()},
                                  {"B", dec.b.label()},
                                  {"C", dec.c.label()},
                                  {"controlled_residual", residual},
                                  {"abc_identity_residual", abc}});
  if (!json_path.empty()) write_json_file(doc, json_path);
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_compare(double noise_p, std::uint64_t trajectories, std::uint64_t seed,
                const std::string& json_path) {
  ComparisonReport r =
      compare_semiclassical_vs_standard(NoiseModel{noise_p, 0.0}, trajectories, seed);
  json doc = result_document(
      json{{"command", "compare"}, {"noise_p", noise_p}, {"trajectories", trajectories},
           {"seed", seed}},
      comparison_json(r));
  if (!json_path.empty()) write_json_file(doc, json_path);
  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semiclassical QFT simulator"};
  app.require_subcommand(1);

  int n = 3, t = 2, k = 4, attempts = 10;
  std::uint64_t big_n = 15, x = 11, shots = 0, seed = 0, trajectories = 100000;
  double noise_p = 0.0;
  bool exact = false;
  std::string mode = "standard", input_spec, qasm_path, json_path;

  auto* qft_cmd = app.add_subcommand("qft", "QFT over Z_{2^n}, standard or semiclassical");
  qft_cmd->add_option("--n", n, "register width")->required()->check(CLI::Range(1, 20));
  qft_cmd->add_option("--mode", mode)->check(CLI::IsMember({"standard", "semiclassical"}));
  qft_cmd->add_option("--t", t, "semiclassical block width");
  qft_cmd->add_option("--input", input_spec, "input bitstring or 'random'")->required();
  qft_cmd->add_flag("--exact", exact, "exact branch enumeration");
  qft_cmd->add_option("--shots", shots);
  qft_cmd->add_option("--seed", seed);
  qft_cmd->add_option("--noise-p", noise_p, "two-qubit depolarizing probability");
  qft_cmd->add_option("--emit-qasm", qasm_path);
  qft_cmd->add_option("--json", json_path);

  auto* shor_cmd = app.add_subcommand("shor", "order finding and factoring");
  shor_cmd->add_option("--N", big_n)->required();
  shor_cmd->add_option("--x", x)->required();
  shor_cmd->add_option("--t", t)->required();
  shor_cmd->add_option("--shots", shots);
  shor_cmd->add_option("--seed", seed);
  shor_cmd->add_option("--attempts", attempts);
  shor_cmd->add_option("--json", json_path);

  auto* dec_cmd = app.add_subcommand("decompose", "controlled-R_k decomposition");
  dec_cmd->add_option("--k", k)->required()->check(CLI::Range(1, 30));
  dec_cmd->add_option("--json", json_path);

  auto* cmp_cmd = app.add_subcommand("compare", "noisy semiclassical-vs-standard overlap");
  cmp_cmd->add_option("--noise-p", noise_p)->required();
  cmp_cmd->add_option("--trajectories", trajectories)->required();
  cmp_cmd->add_option("--seed", seed);
  cmp_cmd->add_option("--json", json_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (qft_cmd->parsed())
      return run_qft(n, mode, t, input_spec, exact, shots, seed, noise_p, qasm_path, json_path);
    if (shor_cmd->parsed()) return run_shor(big_n, x, t, shots ? shots : 1, seed, attempts, json_path);
    if (dec_cmd->parsed()) return run_decompose(k, json_path);
    if (cmp_cmd->parsed()) return run_compare(noise_p, trajectories, seed, json_path);
  } catch (const sqft::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
