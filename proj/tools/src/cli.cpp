#include "zenosq/cli/cli.hpp"

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "zenosq/cli/config.hpp"
#include "zenosq/cli/export.hpp"
#include "zenosq/dynamics_oracle.hpp"
#include "zenosq/scenarios.hpp"

namespace zenosq::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct GlobalFlags {
  std::string config_path;
  std::string out_path;
  std::optional<std::string> format;
  std::optional<double> tol;
  bool plot_script = false;
};

struct Overrides {
  std::optional<double> omega_q, omega_c, omega_d, g, drive_G, r_s;
  std::optional<double> tau, eta, omega_s, chi, lambda, dt_max;
  std::optional<std::size_t> n, lobes, modes_per_lobe, workers;
  std::optional<std::string> spectrum, table, sinc, reference, axis, grid,
      log_grid, picture, weighting;
};

struct Diagnostic {
  const char* kind;
  std::string message;
};

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n' || c == '\r') {
      out += ' ';
      continue;
    }
    out += c;
  }
  return out;
}

void report(std::ostream& err, const char* kind, const std::string& message) {
  err << "zenosq: error=" << kind << " message=\"" << escape(message) << "\"\n";
}

void add_lab_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--omega-q", o.omega_q, "transition frequency (sets the unit)");
  cmd->add_option("--omega-c", o.omega_c, "cavity frequency");
  cmd->add_option("--omega-d", o.omega_d, "parametric drive frequency");
  cmd->add_option("--g", o.g, "bare system-cavity coupling");
  cmd->add_option("--drive-G", o.drive_G, "parametric drive amplitude");
  cmd->add_option("--r-s", o.r_s,
                  "squeezing parameter; solves omega_d and G for resonance");
  cmd->add_option("--tau", o.tau, "measurement interval (1/omega_q)");
  cmd->add_option("--sinc", o.sinc, "filter sinc convention: unnormalized|normalized");
}

void add_spectrum_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--spectrum", o.spectrum,
                  "bath: hydrogen-like|low-frequency|tabulated|zero");
  cmd->add_option("--eta", o.eta, "hydrogen-like prefactor");
  cmd->add_option("--omega-s", o.omega_s, "hydrogen-like cutoff");
  cmd->add_option("--chi", o.chi, "low-frequency coupling");
  cmd->add_option("--lambda", o.lambda, "low-frequency infrared scale");
  cmd->add_option("--table", o.table, "two-column spectrum file (implies tabulated)");
  cmd->add_option("--undriven", o.reference, "drive-off reference: resonant|detuned");
}

void add_grid_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--grid", o.grid, "comma-separated grid values");
  cmd->add_option("--log-grid", o.log_grid, "lo,hi,count log-spaced grid");
  cmd->add_option("--workers", o.workers, "worker threads (0: all cores)");
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse grid value '" + item + "'");
    }
  }
  return values;
}

std::vector<double> log_grid(const std::string& text) {
  const std::vector<double> spec = parse_list(text);
  if (spec.size() != 3 || !(spec[0] > 0.0) || !(spec[1] > 0.0) || spec[2] < 1.0 ||
      spec[2] != std::floor(spec[2])) {
    throw ConfigError("--log-grid expects lo,hi,count with lo, hi > 0 and count >= 1");
  }
  const auto count = static_cast<std::size_t>(spec[2]);
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double s = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    grid[i] = std::exp(std::log(spec[0]) + s * (std::log(spec[1]) - std::log(spec[0])));
  }
  grid.front() = spec[0];
  if (count > 1) grid.back() = spec[1];
  return grid;
}

void apply_spectrum(RunConfig& c, const Overrides& o) {
  if (o.table) {
    if (o.spectrum && *o.spectrum != "tabulated") {
      throw ConfigError("--table needs --spectrum tabulated");
    }
    c.spectrum = load_tabulated(*o.table);
  } else if (o.spectrum) {
    const std::string& kind = *o.spectrum;
    if (kind == "hydrogen-like") {
      c.spectrum = HydrogenLike{6.4e-9, 550.0};
    } else if (kind == "low-frequency") {
      c.spectrum = LowFrequency{1e-4, 0.05};
    } else if (kind == "zero") {
      c.spectrum = LowFrequency{0.0, 0.05};
    } else if (kind == "tabulated") {
      throw ConfigError("--spectrum tabulated needs --table <file>");
    } else {
      throw ConfigError("unknown spectrum '" + kind +
                        "' (expected hydrogen-like|low-frequency|tabulated|zero)");
    }
  }
  if (o.eta || o.omega_s) {
    auto* h = std::get_if<HydrogenLike>(&c.spectrum);
    if (!h) throw ConfigError("--eta/--omega-s apply to a hydrogen-like spectrum only");
    if (o.eta) h->eta = *o.eta;
    if (o.omega_s) h->omega_s = *o.omega_s;
  }
  if (o.chi || o.lambda) {
    auto* l = std::get_if<LowFrequency>(&c.spectrum);
    if (!l) throw ConfigError("--chi/--lambda apply to a low-frequency spectrum only");
    if (o.chi) l->chi = *o.chi;
    if (o.lambda) l->lambda = *o.lambda;
  }
}

void apply(RunConfig& c, const Overrides& o) {
  if (o.omega_q) c.lab.omega_q = *o.omega_q;
  if (o.omega_c) c.lab.omega_c = *o.omega_c;
  if (o.g) c.lab.g = *o.g;
  if (o.r_s) {
    if (o.omega_d || o.drive_G) {
      throw ConfigError("--r-s solves the drive and excludes --omega-d/--drive-G");
    }
    try {
      c.lab = resonant_lab(c.lab.omega_c, c.lab.g, *o.r_s, c.lab.omega_q);
    } catch (const Error& e) {
      throw ConfigError(std::string("[lab] ") + e.kind() + ": " + e.what());
    }
  } else if (o.omega_d || o.drive_G) {
    if (o.omega_d) c.lab.omega_d = *o.omega_d;
    if (o.drive_G) c.lab.drive_G = *o.drive_G;
    c.lab.threshold_gap.reset();
  }
  if (o.tau) c.protocol.tau = *o.tau;
  if (o.n) c.protocol.n = *o.n;
  if (o.sinc) c.convention = parse_sinc(*o.sinc);
  if (o.reference) c.reference = parse_reference(*o.reference);
  apply_spectrum(c, o);
  if (o.lobes) c.oracle.lobes = *o.lobes;
  if (o.modes_per_lobe) c.oracle.modes_per_lobe = *o.modes_per_lobe;
  if (o.dt_max) c.oracle.dt_max = *o.dt_max;
  if (o.picture) c.oracle.picture = parse_picture(*o.picture);
  if (o.weighting) c.oracle.weighting = parse_weighting(*o.weighting);
  if (o.axis) c.sweep.axis = parse_axis(*o.axis);
  if (o.grid && o.log_grid) throw ConfigError("use either --grid or --log-grid");
  if (o.grid) c.sweep.grid = parse_list(*o.grid);
  if (o.log_grid) c.sweep.grid = log_grid(*o.log_grid);
  if (o.workers) c.sweep.workers = *o.workers;
}

void apply_globals(RunConfig& c, const GlobalFlags& flags) {
  if (!flags.out_path.empty()) c.output.path = flags.out_path;
  if (flags.format) c.output.format = parse_format(*flags.format);
  if (flags.tol) c.quadrature.rel_tol = *flags.tol;
  if (flags.plot_script) c.output.plot_script = true;
}

// Module checks first so invalid physics reports its own error kind.
void validate_run(const RunConfig& c) {
  c.lab.validate();
  zenosq::validate(c.spectrum);
  c.protocol.validate();
  c.filter().validate();
  c.validate();
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

const std::vector<Column> kBreakdownColumns = {
    {"drive_on", ""},       {"gamma_c", "omega_q"},        {"gamma_e", "omega_q"},
    {"gamma_total", "omega_q"}, {"quad_abs_error", "omega_q"}, {"lobes_used", ""}};

std::vector<Cell> breakdown_row(const DecayBreakdown& b) {
  return {b.drive_on, b.gamma_c, b.gamma_e, b.gamma_total, b.quad_abs_error,
          as_int(b.lobes_used)};
}

Table transform_table(const RunConfig& c) {
  const RotatingFrameParams rot = rotating_detunings(c.lab);
  const SqueezedFrame frame = squeezed_frame(c.lab);
  Table t;
  t.columns = {{"omega_q", "omega_q"}, {"omega_c", "omega_q"}, {"omega_d", "omega_q"},
               {"g", "omega_q"},       {"drive_G", "omega_q"}, {"delta_q", "omega_q"},
               {"delta_c", "omega_q"}, {"r_s", ""},            {"delta_s", "omega_q"},
               {"g_s", "omega_q"},     {"enhancement", ""},    {"asymptotic_enhancement", ""},
               {"resonance_detuning", "omega_q"}};
  t.rows.push_back({c.lab.omega_q, c.lab.omega_c, c.lab.omega_d, c.lab.g, c.lab.drive_G,
                    rot.delta_q, rot.delta_c, frame.r_s, frame.delta_s, frame.g_s,
                    std::cosh(frame.r_s), asymptotic_enhancement(frame.r_s),
                    frame.detuning()});
  return t;
}

Table rate_table(const RunConfig& c, const std::string& drive) {
  if (drive != "on" && drive != "off" && drive != "both") {
    throw ConfigError("--drive expects on|off|both");
  }
  const SqueezedFrame frame = squeezed_frame(c.lab);
  const FilterSpec filter = c.filter();
  const EnvRate env = gamma_env(c.spectrum, filter, c.quadrature.rel_tol,
                                c.quadrature.max_lobes);
  Table t;
  t.columns = kBreakdownColumns;
  if (drive != "off") {
    t.rows.push_back(breakdown_row(
        decay_breakdown(frame, c.lab.g, env, filter, true, c.reference)));
  }
  if (drive != "on") {
    t.rows.push_back(breakdown_row(
        decay_breakdown(frame, c.lab.g, env, filter, false, c.reference)));
  }
  return t;
}

Table survival_table(const RunConfig& c, const std::string& drive) {
  if (drive != "on" && drive != "off") throw ConfigError("--drive expects on|off");
  const SqueezedFrame frame = squeezed_frame(c.lab);
  const DecayBreakdown b =
      decay_breakdown(frame, c.lab.g, c.spectrum, c.filter(), drive == "on",
                      c.quadrature.rel_tol, c.reference);
  const SurvivalCurve curve = survival_probability(b.gamma_total, c.protocol);
  Table t;
  t.columns = {{"m", ""}, {"t", "1/omega_q"}, {"probability", ""}};
  for (std::size_t m = 0; m < curve.times.size(); ++m) {
    t.rows.push_back({as_int(m), curve.times[m], curve.probabilities[m]});
  }
  return t;
}

Table sweep_table(const std::vector<SweepRow>& rows, SweepAxis axis) {
  Table t;
  t.columns = {{to_string(axis), axis == SweepAxis::kSqueezing ? ""
                                 : axis == SweepAxis::kTau     ? "1/omega_q"
                                                               : "omega_q"},
               {"valid", ""},
               {"gamma_c", "omega_q"},
               {"gamma_e", "omega_q"},
               {"gamma_c_wo", "omega_q"},
               {"gamma_c_over_gamma_e", ""},
               {"gamma_e_over_gamma_c_wo", ""},
               {"quad_abs_error", "omega_q"},
               {"error", ""}};
  for (const SweepRow& r : rows) {
    t.rows.push_back({r.value, r.valid, r.gamma_c, r.gamma_e, r.gamma_c_wo,
                      r.gamma_c_over_gamma_e, r.gamma_e_over_gamma_c_wo,
                      r.quad_abs_error, r.error});
  }
  return t;
}

SweepContext sweep_context(const RunConfig& c) {
  SweepContext ctx;
  ctx.lab = c.lab;
  ctx.spectrum = c.spectrum;
  ctx.filter = c.filter();
  ctx.rel_tol = c.quadrature.rel_tol;
  ctx.max_lobes = c.quadrature.max_lobes;
  ctx.reference = c.reference;
  ctx.workers = c.sweep.workers;
  return ctx;
}

Table oracle_table(const RunConfig& c) {
  const SqueezedFrame frame = squeezed_frame(c.lab);
  const FilterSpec filter = c.filter();
  BathDiscretization bath;
  if (const auto* comb = std::get_if<DiscreteComb>(&c.spectrum)) {
    zenosq::validate(c.spectrum);
    bath.modes = comb->modes;
    bath.omega_q = c.lab.omega_q;
    if (!comb->modes.empty()) {
      bath.omega_lo = comb->modes.front().omega;
      bath.omega_hi = comb->modes.back().omega;
    }
  } else {
    bath = discretize_bath(c.spectrum, filter, c.oracle.lobes, c.oracle.modes_per_lobe,
                           c.oracle.weighting);
  }
  const DecayBreakdown analytic =
      decay_breakdown(frame, c.lab.g, c.spectrum, filter, true, c.quadrature.rel_tol,
                      c.reference);
  const OracleRun run =
      stroboscopic_run(frame, bath, c.protocol, c.oracle.dt_max, c.oracle.picture);
  Table t;
  t.columns = {{"gamma_effective", "omega_q"}, {"gamma_analytic", "omega_q"},
               {"relative_deviation", ""},     {"interval_survival", ""},
               {"final_survival", ""},         {"max_norm_drift", ""},
               {"bath_modes", ""},             {"dt", "1/omega_q"}};
  const double deviation = analytic.gamma_total > 0.0
                               ? run.gamma_effective / analytic.gamma_total - 1.0
                               : kNaN;
  t.rows.push_back({run.gamma_effective, analytic.gamma_total, deviation,
                    run.interval_survival.front(), run.survival.probabilities.back(),
                    run.max_norm_drift, as_int(run.bath_modes), run.dt});
  return t;
}

Table ratios_table(const Scenario& s, const PaperRatios& r) {
  const SqueezedFrame frame = squeezed_frame(s.lab);
  const double cosh_r = std::cosh(frame.r_s);
  Table t;
  t.columns = {{"scenario", ""},
               {"gamma_c", "omega_q"},
               {"gamma_e", "omega_q"},
               {"gamma_c_wo", "omega_q"},
               {"gamma_c_over_gamma_e", ""},
               {"gamma_e_over_gamma_c_wo", ""},
               {"ratio_product", ""},
               {"cosh_squared_r_s", ""},
               {"g_s_over_g", ""},
               {"quad_abs_error", "omega_q"},
               {"sinc", ""}};
  t.rows.push_back({s.name, r.driven.gamma_c, r.driven.gamma_e, r.undriven.gamma_c,
                    r.gamma_c_over_gamma_e, r.gamma_e_over_gamma_c_wo,
                    r.gamma_c_over_gamma_e * r.gamma_e_over_gamma_c_wo, cosh_r * cosh_r,
                    frame.g_s / s.lab.g, r.driven.quad_abs_error,
                    std::string(to_string(s.convention))});
  return t;
}

Table figure2_table(const Figure2Tables& fig) {
  Table t;
  t.columns = {{"g", "omega_q"},
               {"gamma_e_over_gamma_c_wo", ""},
               {"gamma_c_over_gamma_e", ""}};
  for (const Figure2Point& p : fig.points) {
    t.rows.push_back({p.g, p.gamma_e_over_gamma_c_wo, p.gamma_c_over_gamma_e});
  }
  return t;
}

void write_summary(std::ostream& out, const Scenario& s, const PaperRatios& r) {
  const SqueezedFrame frame = squeezed_frame(s.lab);
  out << "scenario " << s.name << " (" << s.notes << ")\n";
  out << std::setprecision(6);
  out << "  r_s = " << frame.r_s << ", g_s/g = " << frame.g_s / s.lab.g
      << ", filter sinc " << to_string(s.convention) << "\n";
  out << "  Gamma_c = " << r.driven.gamma_c << ", Gamma_e = " << r.driven.gamma_e
      << ", Gamma_c^wo = " << r.undriven.gamma_c << " (omega_q)\n";
  if (s.si_omega_q) {
    out << "  in SI: Gamma_c = " << r.driven.gamma_c * *s.si_omega_q
        << " s^-1, Gamma_e = " << r.driven.gamma_e * *s.si_omega_q << " s^-1\n";
  }
  out << "  Gamma_c/Gamma_e = " << r.gamma_c_over_gamma_e
      << ", Gamma_e/Gamma_c^wo = " << r.gamma_e_over_gamma_c_wo << "\n";
}

struct Emission {
  Table table;
  std::vector<std::size_t> plot_y;  // empty: nothing to plot
  std::size_t plot_x = 0;
  bool log_log = false;
};

void emit(const Emission& e, const RunConfig& c, const std::string& command,
          std::ostream& out) {
  if (c.output.plot_script) {
    if (c.output.path.empty() || c.output.format != OutputFormat::kCsv) {
      throw ConfigError("--plot-script needs --out with --format csv");
    }
    if (e.plot_y.empty()) throw ConfigError("'" + command + "' has no series to plot");
  }
  if (c.output.path.empty()) {
    out << render(e.table, c, command, c.output.format);
    return;
  }
  export_results(e.table, c, command, c.output.format, c.output.path);
  if (c.output.plot_script) {
    const std::filesystem::path data = c.output.path;
    std::ofstream script(data.string() + ".gp", std::ios::binary | std::ios::trunc);
    script << render_plot_script(e.table, data.filename(), e.plot_x, e.plot_y, e.log_log);
    if (!script) throw std::runtime_error("failed writing plot script");
  }
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Measurement-induced decay in a squeezed-cavity two-level system"};
  app.set_version_flag("--version", ZENOSQ_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--config", flags.config_path, "JSON run configuration");
  app.add_option("--out", flags.out_path, "write results to this file");
  app.add_option("--format", flags.format, "csv|json");
  app.add_option("--tol", flags.tol, "relative quadrature tolerance");
  app.add_flag("--plot-script", flags.plot_script,
               "also write <out>.gp, a gnuplot script for the data file");

  Overrides o;
  std::string drive = "both";
  std::string survival_drive = "on";
  std::string scenario_name;
  bool figure2 = false;
  bool summary = false;

  auto* transform = app.add_subcommand("transform", "squeezed-frame parameters");
  add_lab_options(transform, o);
  auto* rate = app.add_subcommand("rate", "decay-rate breakdown with drive on/off");
  add_lab_options(rate, o);
  add_spectrum_options(rate, o);
  rate->add_option("--drive", drive, "on|off|both");
  auto* survival = app.add_subcommand("survival", "survival probability curve");
  add_lab_options(survival, o);
  add_spectrum_options(survival, o);
  survival->add_option("--n", o.n, "number of measurements");
  survival->add_option("--drive", survival_drive, "on|off");
  auto* sweep = app.add_subcommand("sweep", "parameter sweep table");
  add_lab_options(sweep, o);
  add_spectrum_options(sweep, o);
  add_grid_options(sweep, o);
  sweep->add_option("--axis", o.axis, "g|r_s|tau|drive_G");
  auto* oracle = app.add_subcommand("oracle", "Schrodinger-equation cross-check");
  add_lab_options(oracle, o);
  add_spectrum_options(oracle, o);
  oracle->add_option("--n", o.n, "number of measurements");
  oracle->add_option("--lobes", o.lobes, "bath window, lobes per side");
  oracle->add_option("--modes-per-lobe", o.modes_per_lobe, "bath modes per lobe");
  oracle->add_option("--dt-max", o.dt_max, "integrator step bound (<= 0: automatic)");
  oracle->add_option("--picture", o.picture, "interaction|schrodinger");
  oracle->add_option("--weighting", o.weighting, "cell_integral|midpoint");
  auto* scenario = app.add_subcommand("scenario", "run a named preset");
  scenario->add_option("name", scenario_name, "hydrogen-2p1s|circuit-lowfreq")->required();
  scenario->add_flag("--figure2", figure2, "coupling sweep of both ratios");
  scenario->add_flag("--summary", summary, "human-readable summary on stdout");
  scenario->add_option("--sinc", o.sinc, "override the preset's sinc convention");
  add_grid_options(scenario, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << ZENOSQ_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report(err, "UsageError", e.what());
    return kExitConfig;
  }

  try {
    RunConfig config;
    if (!flags.config_path.empty()) config = load_config(flags.config_path);
    Emission emission;
    std::string command;
    if (scenario->parsed()) {
      command = "scenario";
      const std::optional<Scenario> preset = find_preset(scenario_name);
      if (!preset) throw ConfigError("unknown scenario '" + scenario_name + "'");
      Scenario s = *preset;
      if (o.sinc) s.convention = parse_sinc(*o.sinc);
      RunConfig base = config;
      config = config_from_scenario(s);
      config.quadrature = base.quadrature;
      config.output = base.output;
      config.sweep.workers = o.workers.value_or(base.sweep.workers);
      apply_globals(config, flags);
      validate_run(config);
      if (figure2) {
        std::vector<double> grid = default_figure2_grid();
        if (o.grid && o.log_grid) throw ConfigError("use either --grid or --log-grid");
        if (o.grid) grid = parse_list(*o.grid);
        if (o.log_grid) grid = log_grid(*o.log_grid);
        config.sweep.grid = grid;
        const Figure2Tables fig =
            figure2_sweep(grid, s, config.quadrature.rel_tol, config.sweep.workers);
        emission = {figure2_table(fig), {1, 2}, 0, true};
        if (summary) {
          out << "figure 2 sweep for " << s.name << ": slope(a) = " << fig.slope_a
              << ", slope(b) = " << fig.slope_b << "\n";
        }
      } else {
        const PaperRatios ratios = reproduce_paper_ratios(
            s, config.quadrature.rel_tol, config.reference);
        emission = {ratios_table(s, ratios), {}, 0, false};
        if (summary) write_summary(out, s, ratios);
      }
      if (summary && config.output.path.empty()) return kExitOk;
    } else {
      apply(config, o);
      apply_globals(config, flags);
      validate_run(config);
      if (transform->parsed()) {
        command = "transform";
        emission = {transform_table(config), {}, 0, false};
      } else if (rate->parsed()) {
        command = "rate";
        emission = {rate_table(config, drive), {}, 0, false};
      } else if (survival->parsed()) {
        command = "survival";
        emission = {survival_table(config, survival_drive), {2}, 1, false};
      } else if (sweep->parsed()) {
        command = "sweep";
        const auto rows = parameter_sweep(config.sweep.axis, config.sweep.grid,
                                          sweep_context(config));
        emission = {sweep_table(rows, config.sweep.axis), {5, 6}, 0, true};
      } else {
        command = "oracle";
        emission = {oracle_table(config), {}, 0, false};
      }
    }
    emit(emission, config, command, out);
    return kExitOk;
  } catch (const ConvergenceError& e) {
    report(err, e.kind(), e.what());
    return kExitNumerical;
  } catch (const NormDriftError& e) {
    report(err, e.kind(), e.what());
    return kExitNumerical;
  } catch (const Error& e) {
    report(err, e.kind(), e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    report(err, "IOError", e.what());
    return kExitFailure;
  }
}

}  // namespace zenosq::cli
