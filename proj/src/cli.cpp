#include "fite/cli.hpp"

#include <fstream>
#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "fite/instance_io.hpp"
#include "fite/limits.hpp"
#include "fite/planner.hpp"
#include "fite/sweep.hpp"

namespace fite {

namespace {

using nlohmann::json;

struct CommonOptions {
  std::string instance;
  std::string type;
  std::string init = "uniform";
  std::vector<double> beta;
  std::vector<int> query_depths;
  double delta = 0.1;
  std::string out_path;
  std::string format = "csv";
};

std::optional<InstanceType> parse_type_flag(const std::string& type) {
  if (type.empty()) return std::nullopt;
  if (type == "maxcut") return InstanceType::kMaxCut;
  if (type == "hubo") return InstanceType::kHubo;
  throw ValidationError("--type must be maxcut or hubo, got '" + type + "'");
}

InstanceType resolve_type(const CommonOptions& opt) {
  if (auto flag = parse_type_flag(opt.type)) return *flag;
  const bool json_ext =
      opt.instance.size() >= 5 && opt.instance.substr(opt.instance.size() - 5) == ".json";
  return json_ext ? InstanceType::kHubo : InstanceType::kMaxCut;
}

struct LoadedInstance {
  PauliHamiltonian hamiltonian;
  Spectrum spectrum;
  QuantumState initial;
  InstanceType type;
};

LoadedInstance load_common(const CommonOptions& opt) {
  const InstanceType type = resolve_type(opt);
  PauliHamiltonian hamiltonian = load_instance(opt.instance, type);
  Spectrum spectrum = compute_spectrum(hamiltonian);
  const InitSpec init = parse_init_spec(opt.init, hamiltonian.num_qubits());
  QuantumState initial = prepare_initial_state(init, hamiltonian.num_qubits(), &spectrum);
  return LoadedInstance{std::move(hamiltonian), std::move(spectrum), std::move(initial), type};
}

BetaGrid beta_grid(const CommonOptions& opt, InstanceType type, bool gate_level) {
  if (opt.beta.empty()) {
    // Instance-family defaults; the dense grid is cheap on the analytic path.
    if (type == InstanceType::kHubo) return BetaGrid{0.0, 3.0, gate_level ? 0.01 : 0.001};
    return BetaGrid{0.0, 2.0, 0.001};
  }
  if (opt.beta.size() == 1) return BetaGrid{opt.beta[0], opt.beta[0], 1.0};
  if (opt.beta.size() == 3) return BetaGrid{opt.beta[0], opt.beta[1], opt.beta[2]};
  throw ValidationError("--beta takes one value or <start> <stop> <step>");
}

double single_beta(const CommonOptions& opt) {
  if (opt.beta.size() != 1) {
    throw ValidationError("this command takes exactly one --beta value");
  }
  if (!(opt.beta[0] >= 0.0)) throw ValidationError("beta must be nonnegative");
  return opt.beta[0];
}

/// Routes writes to --out when given, else to the console stream.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& console) : console_(console) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ValidationError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : console_; }

 private:
  std::ostream& console_;
  std::unique_ptr<std::ofstream> file_;
};

json spectrum_report(const LoadedInstance& loaded) {
  const Spectrum& spec = loaded.spectrum;
  json report = {
      {"n", loaded.hamiltonian.num_qubits()},
      {"terms", loaded.hamiltonian.term_count()},
      {"w_norm", loaded.hamiltonian.l1_norm()},
      {"e0", spec.e0},
      {"delta", spec.delta},
      {"ground_count", spec.ground_set.size()},
      {"identity_shift", loaded.hamiltonian.identity_shift()},
      {"gamma0", ground_overlap(loaded.initial, spec)},
  };
  if (spec.ground_set.size() == spec.dim()) {
    report["warning"] = "degenerate spectrum: every basis state is a ground state";
  }
  return report;
}

int cmd_spectrum(const CommonOptions& opt, std::ostream& out) {
  const LoadedInstance loaded = load_common(opt);
  OutputTarget target(opt.out_path, out);
  target.stream() << spectrum_report(loaded).dump(2) << "\n";
  return 0;
}

json sweep_row_json(const SweepRecord& row, bool gate_level) {
  json j = {{"beta", row.beta},         {"p_lcu", row.p_lcu},
            {"f_g", row.f_g},           {"product", row.product},
            {"envelope", row.envelope}, {"rel_err", row.rel_err}};
  if (gate_level) {
    j["p_lcu_gate"] = row.p_lcu_gate.value_or(0.0);
    j["f_g_gate"] = row.f_g_gate.value_or(0.0);
    j["state_fidelity"] = row.state_fidelity.value_or(0.0);
  }
  return j;
}

int cmd_sweep(const CommonOptions& opt, bool gate_level, std::ostream& out) {
  const LoadedInstance loaded = load_common(opt);
  const BetaGrid grid = beta_grid(opt, loaded.type, gate_level);
  const std::vector<SweepRecord> records =
      run_lcu_sweep(loaded.hamiltonian, loaded.spectrum, loaded.initial, grid, gate_level);
  OutputTarget target(opt.out_path, out);
  if (opt.format == "json") {
    json rows = json::array();
    for (const SweepRecord& row : records) rows.push_back(sweep_row_json(row, gate_level));
    target.stream() << rows.dump(2) << "\n";
  } else {
    write_lcu_csv(target.stream(), records, gate_level);
  }
  return 0;
}

int cmd_fpaa(const CommonOptions& opt, std::ostream& out) {
  const LoadedInstance loaded = load_common(opt);
  const BetaGrid grid = beta_grid(opt, loaded.type, /*gate_level=*/true);
  std::vector<int> depths = opt.query_depths;
  if (depths.empty()) depths = {0, 5, 9, 15};
  const std::vector<FpaaRecord> records =
      run_fpaa_sweep(loaded.hamiltonian, loaded.spectrum, loaded.initial, grid, depths,
                     opt.delta);
  OutputTarget target(opt.out_path, out);
  if (opt.format == "json") {
    json rows = json::array();
    for (const FpaaRecord& row : records) {
      rows.push_back(json{{"beta", row.beta},
                          {"L", row.query_depth},
                          {"delta", row.delta},
                          {"p_unamp", row.p_unamp},
                          {"p_amp", row.p_amp},
                          {"p_amp_formula", row.p_amp_formula},
                          {"f_g", row.f_g},
                          {"p_g", row.p_g}});
    }
    target.stream() << rows.dump(2) << "\n";
  } else {
    write_fpaa_csv(target.stream(), records);
  }
  return 0;
}

struct PlanOptions {
  double target_f = 0.9;
  std::optional<double> eps;
  std::optional<double> gamma0_override;
  std::optional<double> gap_override;
  bool measured = false;
};

int cmd_plan(const CommonOptions& opt, const PlanOptions& plan_opt, std::ostream& out) {
  const LoadedInstance loaded = load_common(opt);
  if (plan_opt.measured && (plan_opt.gamma0_override || plan_opt.gap_override)) {
    throw ValidationError("--measured conflicts with --gamma0/--gap overrides");
  }
  PlanInputs inputs;
  inputs.gamma0 = plan_opt.gamma0_override.value_or(ground_overlap(loaded.initial,
                                                                   loaded.spectrum));
  inputs.delta_gap = plan_opt.gap_override.value_or(loaded.spectrum.delta);
  inputs.w_norm = loaded.hamiltonian.l1_norm();
  inputs.e0 = loaded.spectrum.e0;
  inputs.target_f = plan_opt.target_f;
  inputs.fpaa_delta = opt.delta;
  inputs.state_eps = plan_opt.eps;

  OutputTarget target(opt.out_path, out);
  if (inputs.gamma0 == 0.0) {
    const json report = {
        {"result", "unreachable"},
        {"reason", "initial state has zero ground-subspace overlap; no finite beta reaches "
                   "the target fidelity"}};
    target.stream() << report.dump(2) << "\n";
    return 3;
  }
  const Plan plan =
      make_plan(inputs, loaded.hamiltonian.num_qubits(), loaded.hamiltonian.localities());
  json report = {
      {"beta_star", plan.threshold.value},
      {"p_lower", plan.sandwich.lower},
      {"p_upper", plan.sandwich.upper},
      {"lambda_star", plan.lambda_star},
      {"L_exact", plan.queries.exact_depth},
      {"L_asymptotic", plan.queries.asymptotic_depth},
      {"qubits_total", plan.cost.qubits_total},
      {"cnot_breakdown",
       {{"lcu_pass", plan.cost.lcu_pass},
        {"oracle", plan.cost.oracle},
        {"reflection", plan.cost.reflection},
        {"queries", plan.cost.queries},
        {"total", plan.cost.total},
        {"note", "estimate with unit constants"}}},
  };
  report["error_beta"] = plan.error_beta.has_value() ? json(*plan.error_beta) : json(nullptr);
  target.stream() << report.dump(2) << "\n";
  return 0;
}

int cmd_sample(const CommonOptions& opt, std::uint64_t shots, std::uint64_t seed,
               std::ostream& out) {
  const LoadedInstance loaded = load_common(opt);
  const double beta = single_beta(opt);
  const ShotReport report =
      sample_shots(loaded.hamiltonian, loaded.spectrum, loaded.initial, beta, shots, seed);
  json histogram = json::object();
  for (const auto& [bits, count] : report.histogram) histogram[bits] = count;
  const json doc = {{"shots", report.shots},
                    {"seed", report.seed},
                    {"successes", report.successes},
                    {"ground_hits", report.ground_hits},
                    {"histogram", histogram}};
  OutputTarget target(opt.out_path, out);
  target.stream() << doc.dump(2) << "\n";
  return 0;
}

std::vector<int> mask_qubits(Bits mask) {
  std::vector<int> qubits;
  for (int q = 0; q < 64; ++q) {
    if (mask & (Bits{1} << q)) qubits.push_back(q);
  }
  return qubits;
}

int cmd_gates(const CommonOptions& opt, std::ostream& out) {
  const InstanceType type = resolve_type(opt);
  const PauliHamiltonian hamiltonian = load_instance(opt.instance, type);
  const double beta = single_beta(opt);
  const UnitaryProgram program = build_lcu_program(hamiltonian, beta);
  const std::int64_t queries =
      opt.query_depths.empty() ? 0 : static_cast<std::int64_t>(opt.query_depths.front());
  const CostReport cost = cnot_estimate(hamiltonian.num_qubits(),
                                        static_cast<int>(hamiltonian.term_count()),
                                        hamiltonian.localities(), queries);
  json blocks = json::array();
  for (const LcuBlock& block : program.blocks) {
    json entry = {{"qubits", mask_qubits(block.term.mask)},
                  {"coeff", block.term.coeff},
                  {"alpha_w", block.alpha_w},
                  {"gamma_w", block.gamma_w}};
    entry["kappa"] = (block.gamma_w > 0.0) ? json(block.kappa()) : json(nullptr);
    blocks.push_back(entry);
  }
  const json doc = {{"n", program.system_qubits},
                    {"ancillas", program.num_ancillas},
                    {"qubits_total", cost.qubits_total},
                    {"beta", beta},
                    {"gate_count", program.gates.size()},
                    {"blocks", blocks},
                    {"cnot_estimate",
                     {{"lcu_pass", cost.lcu_pass},
                      {"oracle", cost.oracle},
                      {"reflection", cost.reflection},
                      {"queries", cost.queries},
                      {"total", cost.total},
                      {"note", "estimate with unit constants"}}}};
  OutputTarget target(opt.out_path, out);
  target.stream() << doc.dump(2) << "\n";
  return 0;
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_init = true) {
  cmd->add_option("--instance", opt.instance, "instance file path")->required();
  cmd->add_option("--type", opt.type, "instance format: maxcut | hubo")
      ->check(CLI::IsMember({"maxcut", "hubo"}));
  if (with_init) {
    cmd->add_option("--init", opt.init,
                    "initial state: uniform | warm:p=<float>,gstar=<bits|auto> | file:<path>");
  }
  cmd->add_option("--out", opt.out_path, "write output here instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Termwise block-encoded imaginary-time evolution for diagonal Pauli-Z "
               "Hamiltonians: identity sweeps, fixed-point amplification, planning, sampling"};
  app.require_subcommand(1);

  CommonOptions spectrum_opt, sweep_opt, fpaa_opt, plan_opt_common, sample_opt, gates_opt;
  bool gate_level = false;
  PlanOptions plan_opt;
  std::uint64_t shots = 10000;
  std::uint64_t seed = 0;

  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "instance summary: W, E0, gap, ground count, gamma0");
  add_common(spectrum_cmd, spectrum_opt);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "identity sweep over a beta grid (CSV)");
  add_common(sweep_cmd, sweep_opt);
  sweep_cmd->add_option("--beta", sweep_opt.beta, "<start> <stop> <step> (or one value)")
      ->expected(1, 3);
  sweep_cmd->add_flag("--gate-level", gate_level, "also simulate the joint-register circuit");
  sweep_cmd->add_option("--format", sweep_opt.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* fpaa_cmd =
      app.add_subcommand("fpaa", "amplification sweep over beta x query-depth grid (CSV)");
  add_common(fpaa_cmd, fpaa_opt);
  fpaa_cmd->add_option("--beta", fpaa_opt.beta, "<start> <stop> <step> (or one value)")
      ->expected(1, 3);
  fpaa_cmd->add_option("--L", fpaa_opt.query_depths,
                       "query depths, odd or 0 for no amplification (default 0,5,9,15)")
      ->delimiter(',');
  fpaa_cmd->add_option("--delta", fpaa_opt.delta, "amplification tolerance (default 0.1)");
  fpaa_cmd->add_option("--format", fpaa_opt.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* plan_cmd = app.add_subcommand("plan", "closed-form beta/query/cost plan (JSON)");
  add_common(plan_cmd, plan_opt_common);
  plan_cmd->add_option("--target-f", plan_opt.target_f, "target ground fidelity in (0, 1)")
      ->required();
  plan_cmd->add_option("--delta", plan_opt_common.delta,
                       "amplification tolerance (default 0.1)");
  double eps_value = 0.0, gamma0_value = 0.0, gap_value = 0.0;
  CLI::Option* eps_flag =
      plan_cmd->add_option("--eps", eps_value, "also plan a state-error threshold beta");
  CLI::Option* gamma0_flag =
      plan_cmd->add_option("--gamma0", gamma0_value, "override the measured overlap");
  CLI::Option* gap_flag =
      plan_cmd->add_option("--gap", gap_value, "override the measured spectral gap");
  plan_cmd->add_flag("--measured", plan_opt.measured,
                     "use enumerated gamma0 and gap (the default; rejects overrides)");

  CLI::App* sample_cmd = app.add_subcommand("sample", "seeded shot sampling report (JSON)");
  add_common(sample_cmd, sample_opt);
  sample_cmd->add_option("--beta", sample_opt.beta, "single beta value")->expected(1, 3);
  sample_cmd->add_option("--shots", shots, "number of full-register measurements");
  sample_cmd->add_option("--seed", seed, "RNG seed (default 0)");

  CLI::App* gates_cmd =
      app.add_subcommand("gates", "block-encoding program summary and cost estimate (JSON)");
  add_common(gates_cmd, gates_opt, /*with_init=*/false);
  gates_cmd->add_option("--beta", gates_opt.beta, "single beta value")->expected(1, 3);
  gates_cmd->add_option("--L", gates_opt.query_depths, "query depth for the cost estimate")
      ->delimiter(',');

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("finite");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return (code == 0) ? 0 : 2;
  }

  try {
    apply_register_limit_env();
    if (eps_flag->count() > 0) plan_opt.eps = eps_value;
    if (gamma0_flag->count() > 0) plan_opt.gamma0_override = gamma0_value;
    if (gap_flag->count() > 0) plan_opt.gap_override = gap_value;
    if (spectrum_cmd->parsed()) return cmd_spectrum(spectrum_opt, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_opt, gate_level, out);
    if (fpaa_cmd->parsed()) return cmd_fpaa(fpaa_opt, out);
    if (plan_cmd->parsed()) return cmd_plan(plan_opt_common, plan_opt, out);
    if (sample_cmd->parsed()) return cmd_sample(sample_opt, shots, seed, out);
    if (gates_cmd->parsed()) return cmd_gates(gates_opt, out);
    err << "error: no subcommand selected\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace fite
