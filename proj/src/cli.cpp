#include "asqc/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asqc/as_state.hpp"
#include "asqc/asymptotics.hpp"
#include "asqc/closed_form.hpp"
#include "asqc/oracle.hpp"
#include "asqc/sweep.hpp"
#include "asqc/thermal.hpp"

namespace asqc {

namespace {

std::string fmt(double value) {
  char buffer[40];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::general, 12);
  return std::string(buffer, result.ptr);
}

struct ParamOptions {
  HamiltonianParams p;
  double temperature = 1.0;
  bool with_temperature = false;
  std::string config_path;
};

struct ParamField {
  const char* name;
  double HamiltonianParams::* member;
  const char* help;
};

constexpr ParamField kParamFields[] = {
    {"B1", &HamiltonianParams::B1, "qubit field"},
    {"B2", &HamiltonianParams::B2, "qutrit field"},
    {"J", &HamiltonianParams::J, "transverse exchange"},
    {"Jz", &HamiltonianParams::Jz, "longitudinal exchange"},
    {"K", &HamiltonianParams::K, "axial qutrit anisotropy"},
    {"K1", &HamiltonianParams::K1, "planar qutrit anisotropy"},
    {"K2", &HamiltonianParams::K2, "field-anisotropy cross term"},
    {"Dz", &HamiltonianParams::Dz, "z antisymmetric exchange"},
    {"Gamma", &HamiltonianParams::Gamma, "symmetric anisotropic exchange"},
    {"Lambda", &HamiltonianParams::Lambda, "antisymmetric anisotropic exchange"},
};

void add_hamiltonian_options(CLI::App* cmd, ParamOptions& po,
                             bool with_temperature) {
  po.with_temperature = with_temperature;
  for (const ParamField& field : kParamFields) {
    cmd->add_option(std::string("--") + field.name, po.p.*field.member,
                    field.help);
  }
  if (with_temperature) {
    cmd->add_option("--T", po.temperature, "temperature (default 1)");
  }
  cmd->add_option("--config", po.config_path,
                  "key=value file with any of the above option names; "
                  "explicit flags take precedence");
}

std::string trimmed(const std::string& text) {
  const std::size_t first = text.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return "";
  }
  const std::size_t last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

double parse_config_number(const std::string& key, const std::string& text) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != text.size() || text.empty()) {
    throw std::invalid_argument("config key '" + key +
                                "' has non-numeric value '" + text + "'");
  }
  return value;
}

// Applies "key=value" lines from --config to every parameter the user did
// not set explicitly on the command line.  '#' and ';' start comments.
void apply_config_file(const CLI::App& cmd, ParamOptions& po) {
  if (po.config_path.empty()) {
    return;
  }
  std::ifstream file(po.config_path);
  if (!file) {
    throw std::invalid_argument("cannot read config file '" + po.config_path +
                                "'");
  }
  std::string line;
  while (std::getline(file, line)) {
    const std::size_t comment = line.find_first_of("#;");
    if (comment != std::string::npos) {
      line.erase(comment);
    }
    line = trimmed(line);
    if (line.empty()) {
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("malformed config line '" + line +
                                  "' (expected key=value)");
    }
    const std::string key = trimmed(line.substr(0, eq));
    const std::string value_text = trimmed(line.substr(eq + 1));
    double* target = nullptr;
    for (const ParamField& field : kParamFields) {
      if (key == field.name) {
        target = &(po.p.*field.member);
        break;
      }
    }
    if (target == nullptr && po.with_temperature && key == "T") {
      target = &po.temperature;
    }
    if (target == nullptr) {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
    if (cmd.count("--" + key) == 0) {
      *target = parse_config_number(key, value_text);
    }
  }
}

void print_correlations(std::ostream& out, const CorrelationBranches& c) {
  out << "U0 = " << fmt(c.U0) << "\n";
  out << "U1 = " << fmt(c.U1) << "\n";
  out << "U = " << fmt(c.U) << " (" << branch_label(c.active_U) << ")\n";
  out << "F0 = " << fmt(c.F0) << "\n";
  out << "F1 = " << fmt(c.F1) << "\n";
  out << "F = " << fmt(c.F) << " (" << branch_label(c.active_F) << ")\n";
}

int run_correlations(std::ostream& out, std::ostream& err,
                     const std::vector<double>& entries) {
  std::array<double, 10> flat;
  std::copy(entries.begin(), entries.end(), flat.begin());
  const ASDensityMatrix m = from_flat(flat);
  const ValidationReport report = validate(m, 1e-9);
  if (!report.valid) {
    err << "error: not a valid AS density matrix:\n";
    for (const Violation& v : report.violations) {
      err << "  " << v.constraint << " violated by " << fmt(v.magnitude)
          << "\n";
    }
    return 2;
  }
  print_correlations(out, correlations(m));
  return 0;
}

int run_thermal(std::ostream& out, const ParamOptions& po) {
  const GibbsResult gibbs = gibbs_state(po.p, Temperature(po.temperature));
  const ASDensityMatrix& m = gibbs.state;
  const std::array<double, 10> flat = to_flat(m);
  static constexpr const char* kNames[10] = {"p1",   "a",    "b",    "c",
                                             "d",    "p6",   "u_re", "u_im",
                                             "v_re", "v_im"};
  for (int i = 0; i < 10; ++i) {
    out << kNames[i] << " = " << fmt(flat[i]) << "\n";
  }
  out << "Z = " << fmt(gibbs.partition_function) << "\n";
  print_correlations(out, correlations(m));
  return 0;
}

struct SweepOptions {
  ParamOptions po;
  std::string axis_name;
  double lo = 0.0;
  double hi = 1.0;
  int samples = 400;
  std::string out_path;
};

void add_sweep_options(CLI::App* cmd, SweepOptions& so, bool with_output) {
  add_hamiltonian_options(cmd, so.po, true);
  cmd->add_option("--axis", so.axis_name,
                  "swept quantity: T or one of the coupling names")
      ->required();
  cmd->add_option("--lo", so.lo, "lower end of the sweep")->required();
  cmd->add_option("--hi", so.hi, "upper end of the sweep")->required();
  cmd->add_option("--n", so.samples, "grid nodes, endpoints included");
  if (with_output) {
    cmd->add_option("--out", so.out_path, "CSV output path (default stdout)");
  }
}

SweepSpec make_spec(const SweepOptions& so, std::ostream& err, bool& ok) {
  SweepSpec spec;
  spec.base = so.po.p;
  spec.base_temperature = so.po.temperature;
  spec.lo = so.lo;
  spec.hi = so.hi;
  spec.samples = so.samples;
  const std::optional<Axis> axis = axis_from_label(so.axis_name);
  if (!axis) {
    err << "error: unknown axis '" << so.axis_name << "'\n";
    ok = false;
    return spec;
  }
  spec.axis = *axis;
  ok = true;
  return spec;
}

int run_sweep(std::ostream& out, std::ostream& err, const SweepOptions& so) {
  bool ok = false;
  const SweepSpec spec = make_spec(so, err, ok);
  if (!ok) {
    return 2;
  }
  const std::vector<SweepRecord> records = sweep(spec);
  const std::vector<TransitionEvent> events =
      detect_transitions(spec, records);
  if (so.out_path.empty()) {
    emit_csv(records, events, out);
    return 0;
  }
  std::ofstream file(so.out_path);
  if (!file) {
    err << "error: cannot open '" << so.out_path << "' for writing\n";
    return 2;
  }
  emit_csv(records, events, file);
  return 0;
}

int run_transitions(std::ostream& out, std::ostream& err,
                    const SweepOptions& so) {
  bool ok = false;
  const SweepSpec spec = make_spec(so, err, ok);
  if (!ok) {
    return 2;
  }
  const std::vector<TransitionEvent> events = detect_transitions(spec);
  for (const Measure measure : {Measure::LQU, Measure::LQFI}) {
    // Tangencies (gap touches zero without a sign change) are listed below
    // but excluded from the total: the active branch never switches there.
    int count = 0;
    for (const TransitionEvent& e : events) {
      count +=
          (e.measure == measure && e.branch_from != e.branch_to) ? 1 : 0;
    }
    out << measure_label(measure) << " transitions: " << count << "\n";
    for (const TransitionEvent& e : events) {
      if (e.measure != measure) {
        continue;
      }
      out << "  x* = " << fmt(e.x_star) << ", bracket ["
          << fmt(e.bracket_lo) << ", " << fmt(e.bracket_hi) << "], ";
      if (e.branch_from == e.branch_to) {
        out << "tangency on " << branch_label(e.branch_from);
      } else {
        out << branch_label(e.branch_from) << " -> "
            << branch_label(e.branch_to);
      }
      out << (e.refined ? "" : " (unrefined)") << "\n";
    }
  }
  return 0;
}

int run_verify(std::ostream& out, int states, std::uint64_t seed) {
  double max_lqu_dev = 0.0;
  double max_lqfi_dev = 0.0;
  double max_route_dev = 0.0;
  double max_skip_dev = 0.0;

  for (int i = 0; i < states; ++i) {
    const ASDensityMatrix m = random_state(seed + static_cast<std::uint64_t>(i));
    const ASSpectrum s = spectrum(m);
    const CorrelationBranches c = correlations(m);
    const Matrix6c rho = to_dense(m);

    max_lqu_dev =
        std::max(max_lqu_dev, std::abs(c.U - oracle::lqu_oracle(rho)));
    max_lqfi_dev =
        std::max(max_lqfi_dev, std::abs(c.F - oracle::lqfi_oracle(rho)));

    const WMDiagonal wm = wm_diagonal_raw(m, s);
    max_route_dev = std::max({max_route_dev,
                              std::abs((1.0 - wm.Wzz) - c.U0),
                              std::abs((1.0 - wm.Wxx) - c.U1),
                              std::abs((1.0 - wm.Mzz) - c.F0),
                              std::abs((1.0 - wm.Mxx) - c.F1)});

    const double lqfi_loose =
        1.0 - oracle::max_eigenvalue_sym3(oracle::m_matrix(rho, 1e-12));
    const double lqfi_tight =
        1.0 - oracle::max_eigenvalue_sym3(oracle::m_matrix(rho, 1e-16));
    max_skip_dev = std::max(max_skip_dev, std::abs(lqfi_loose - lqfi_tight));
  }

  out << "states = " << states << ", seeds " << seed << ".."
      << seed + static_cast<std::uint64_t>(states) - 1 << "\n";
  out << "max |U - spectral oracle| = " << fmt(max_lqu_dev) << "\n";
  out << "max |F - spectral oracle| = " << fmt(max_lqfi_dev) << "\n";
  out << "max closed-form route disagreement = " << fmt(max_route_dev)
      << "\n";
  out << "pair-skip sensitivity (1e-12 vs 1e-16) = " << fmt(max_skip_dev)
      << "\n";

  const bool ok = max_lqu_dev <= 1e-8 && max_lqfi_dev <= 1e-8 &&
                  max_route_dev <= 1e-10;
  out << (ok ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
  return ok ? 0 : 1;
}

int run_asympt(std::ostream& out, const ParamOptions& po) {
  const HighTCoefficients c = high_t_coefficients(po.p);
  out << "cU0 = " << fmt(c.cU0) << "\n";
  out << "cU1 = " << fmt(c.cU1) << "\n";
  out << "cF0 = " << fmt(c.cF0) << "\n";
  out << "cF1 = " << fmt(c.cF1) << "\n";
  for (const double t : {50.0, 100.0, 200.0}) {
    const ASDensityMatrix m = gibbs_state(po.p, Temperature(t)).state;
    const CorrelationBranches cb = correlations(m);
    const double t_sq = t * t;
    out << "T = " << fmt(t) << ": T^2*U0 = " << fmt(t_sq * cb.U0)
        << ", T^2*U1 = " << fmt(t_sq * cb.U1)
        << ", T^2*F0 = " << fmt(t_sq * cb.F0)
        << ", T^2*F1 = " << fmt(t_sq * cb.F1) << "\n";
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{
      "Closed-form local quantum uncertainty and local quantum Fisher "
      "information for axially symmetric qubit-qutrit states"};
  app.require_subcommand(1);

  auto* corr_cmd = app.add_subcommand(
      "correlations", "evaluate both measures for an explicit state");
  std::vector<double> entries;
  corr_cmd
      ->add_option("entries", entries,
                   "p1 a b c d p6 Re(u) Im(u) Re(v) Im(v)")
      ->expected(10);

  auto* thermal_cmd = app.add_subcommand(
      "thermal", "thermal state and measures for given couplings");
  ParamOptions thermal_po;
  add_hamiltonian_options(thermal_cmd, thermal_po, true);

  auto* sweep_cmd =
      app.add_subcommand("sweep", "grid sweep along one axis, CSV output");
  SweepOptions sweep_so;
  add_sweep_options(sweep_cmd, sweep_so, true);

  auto* transitions_cmd = app.add_subcommand(
      "transitions", "report branch-switch events along one axis");
  SweepOptions transitions_so;
  add_sweep_options(transitions_cmd, transitions_so, false);

  auto* verify_cmd = app.add_subcommand(
      "verify", "cross-check closed forms against the spectral oracles");
  int verify_states = 1000;
  std::uint64_t verify_seed = 1;
  verify_cmd->add_option("--states", verify_states, "number of random states")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_seed,
                         "base seed; states use seed..seed+states-1");

  auto* asympt_cmd = app.add_subcommand(
      "asympt", "high-temperature 1/T^2 coefficients and measured tails");
  ParamOptions asympt_po;
  add_hamiltonian_options(asympt_cmd, asympt_po, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*corr_cmd) {
      return run_correlations(out, err, entries);
    }
    if (*thermal_cmd) {
      apply_config_file(*thermal_cmd, thermal_po);
      return run_thermal(out, thermal_po);
    }
    if (*sweep_cmd) {
      apply_config_file(*sweep_cmd, sweep_so.po);
      return run_sweep(out, err, sweep_so);
    }
    if (*transitions_cmd) {
      apply_config_file(*transitions_cmd, transitions_so.po);
      return run_transitions(out, err, transitions_so);
    }
    if (*verify_cmd) {
      return run_verify(out, verify_states, verify_seed);
    }
    if (*asympt_cmd) {
      apply_config_file(*asympt_cmd, asympt_po);
      return run_asympt(out, asympt_po);
    }
  } catch (const SinkError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidState& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace asqc
