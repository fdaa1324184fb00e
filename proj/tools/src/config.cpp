#include "zenosq/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace zenosq::cli {
namespace {

using Json = nlohmann::ordered_json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Reads keys from one JSON object and remembers which were consumed so the
// rest can be rejected.
class Section {
 public:
  Section(const Json& root, std::string name) : name_(std::move(name)) {
    if (root.contains(name_)) {
      node_ = root.at(name_);
      if (!node_.is_object()) fail("section must be an object");
    } else {
      node_ = Json::object();
    }
  }

  bool has(const std::string& key) const { return node_.contains(key); }

  double number(const std::string& key, double fallback) {
    if (!take(key)) return fallback;
    const Json& v = node_.at(key);
    if (!v.is_number()) fail("'" + key + "' must be a number");
    return v.get<double>();
  }

  std::optional<double> optional_number(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return number(key, 0.0);
  }

  std::size_t count(const std::string& key, std::size_t fallback) {
    if (!take(key)) return fallback;
    const Json& v = node_.at(key);
    if (!v.is_number_unsigned()) fail("'" + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
  }

  std::string text(const std::string& key, std::string fallback) {
    if (!take(key)) return fallback;
    const Json& v = node_.at(key);
    if (!v.is_string()) fail("'" + key + "' must be a string");
    return v.get<std::string>();
  }

  bool flag(const std::string& key, bool fallback) {
    if (!take(key)) return fallback;
    const Json& v = node_.at(key);
    if (!v.is_boolean()) fail("'" + key + "' must be a boolean");
    return v.get<bool>();
  }

  std::vector<double> numbers(const std::string& key) {
    std::vector<double> out;
    if (!take(key)) return out;
    const Json& v = node_.at(key);
    if (!v.is_array()) fail("'" + key + "' must be an array of numbers");
    for (const Json& x : v) {
      if (!x.is_number()) fail("'" + key + "' must be an array of numbers");
      out.push_back(x.get<double>());
    }
    return out;
  }

  std::vector<std::pair<double, double>> pairs(const std::string& key) {
    std::vector<std::pair<double, double>> out;
    if (!take(key)) return out;
    const Json& v = node_.at(key);
    if (!v.is_array()) fail("'" + key + "' must be an array of [x, y] pairs");
    for (const Json& p : v) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        fail("'" + key + "' must be an array of [x, y] pairs");
      }
      out.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    return out;
  }

  void finish() const {
    for (const auto& [key, value] : node_.items()) {
      if (!used_.count(key)) fail("unknown key '" + key + "'");
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ConfigError("[" + name_ + "] " + message);
  }

 private:
  bool take(const std::string& key) {
    if (!has(key)) return false;
    used_.insert(key);
    return true;
  }

  std::string name_;
  Json node_;
  std::set<std::string> used_;
};

template <typename Enum>
struct NamedValue {
  const char* name;
  Enum value;
};

template <typename Enum, std::size_t N>
Enum lookup(std::string_view text, const NamedValue<Enum> (&table)[N],
            const char* what) {
  for (const auto& entry : table) {
    if (text == entry.name) return entry.value;
  }
  std::string options;
  for (const auto& entry : table) {
    options += options.empty() ? "" : "|";
    options += entry.name;
  }
  throw ConfigError(std::string("unknown ") + what + " '" + std::string(text) +
                    "' (expected " + options + ")");
}

template <typename Enum, std::size_t N>
const char* name_of(Enum value, const NamedValue<Enum> (&table)[N]) {
  for (const auto& entry : table) {
    if (entry.value == value) return entry.name;
  }
  return "?";
}

constexpr NamedValue<SincConvention> kSincNames[] = {
    {"unnormalized", SincConvention::kUnnormalized},
    {"normalized", SincConvention::kNormalized}};
constexpr NamedValue<UndrivenReference> kReferenceNames[] = {
    {"resonant", UndrivenReference::kResonant},
    {"detuned", UndrivenReference::kDetuned}};
constexpr NamedValue<CombWeighting> kWeightingNames[] = {
    {"cell_integral", CombWeighting::kCellIntegral},
    {"midpoint", CombWeighting::kMidpoint}};
constexpr NamedValue<Picture> kPictureNames[] = {
    {"interaction", Picture::kInteraction},
    {"schrodinger", Picture::kSchrodinger}};
constexpr NamedValue<OutputFormat> kFormatNames[] = {
    {"csv", OutputFormat::kCsv}, {"json", OutputFormat::kJson}};
constexpr NamedValue<SweepAxis> kAxisNames[] = {
    {"g", SweepAxis::kCoupling},
    {"r_s", SweepAxis::kSqueezing},
    {"tau", SweepAxis::kTau},
    {"drive_G", SweepAxis::kDrive}};

LabFrameParams read_lab(const Json& root) {
  Section s(root, "lab");
  LabFrameParams lab;
  lab.omega_q = s.number("omega_q", lab.omega_q);
  lab.omega_c = s.number("omega_c", lab.omega_c);
  lab.g = s.number("g", lab.g);
  if (s.has("r_s")) {
    if (s.has("omega_d") || s.has("drive_G") || s.has("threshold_gap")) {
      s.fail("'r_s' solves the drive for resonance and excludes omega_d, "
             "drive_G and threshold_gap");
    }
    const double r_s = s.number("r_s", 0.0);
    s.finish();
    try {
      return resonant_lab(lab.omega_c, lab.g, r_s, lab.omega_q);
    } catch (const Error& e) {
      s.fail(e.what());
    }
  }
  lab.omega_d = s.number("omega_d", lab.omega_d);
  lab.drive_G = s.number("drive_G", lab.drive_G);
  lab.threshold_gap = s.optional_number("threshold_gap");
  s.finish();
  return lab;
}

SpectralDensity read_spectrum(const Json& root,
                              const std::filesystem::path& base_dir) {
  Section s(root, "spectrum");
  const std::string kind = s.text("kind", "low_frequency");
  SpectralDensity spec;
  if (kind == "hydrogen_like") {
    HydrogenLike h;
    h.eta = s.number("eta", h.eta);
    h.omega_s = s.number("omega_s", h.omega_s);
    spec = h;
  } else if (kind == "low_frequency") {
    LowFrequency l{0.0, 0.05};
    l.chi = s.number("chi", l.chi);
    l.lambda = s.number("lambda", l.lambda);
    spec = l;
  } else if (kind == "tabulated") {
    if (s.has("file") == s.has("points")) {
      s.fail("tabulated spectrum needs exactly one of 'file' or 'points'");
    }
    Tabulated t;
    if (s.has("file")) {
      std::filesystem::path file = s.text("file", "");
      if (file.is_relative() && !base_dir.empty()) file = base_dir / file;
      t = load_tabulated(file);
    } else {
      for (const auto& [w, v] : s.pairs("points")) t.points.push_back({w, v});
    }
    spec = t;
  } else if (kind == "discrete_comb") {
    DiscreteComb c;
    for (const auto& [w, f] : s.pairs("modes")) c.modes.push_back({w, f});
    spec = c;
  } else {
    s.fail("unknown kind '" + kind +
           "' (expected hydrogen_like|low_frequency|tabulated|discrete_comb)");
  }
  s.finish();
  return spec;
}

Json spectrum_to_json(const SpectralDensity& spec) {
  return std::visit(
      Overloaded{
          [](const HydrogenLike& h) {
            return Json{{"kind", "hydrogen_like"}, {"eta", h.eta}, {"omega_s", h.omega_s}};
          },
          [](const LowFrequency& l) {
            return Json{{"kind", "low_frequency"}, {"chi", l.chi}, {"lambda", l.lambda}};
          },
          [](const Tabulated& t) {
            Json points = Json::array();
            for (const auto& p : t.points) points.push_back({p.omega, p.value});
            return Json{{"kind", "tabulated"}, {"points", points}};
          },
          [](const DiscreteComb& c) {
            Json modes = Json::array();
            for (const auto& m : c.modes) modes.push_back({m.omega, m.coupling});
            return Json{{"kind", "discrete_comb"}, {"modes", modes}};
          },
      },
      spec);
}

void check(bool ok, const char* section, const std::string& message) {
  if (!ok) throw ConfigError(std::string("[") + section + "] " + message);
}

template <typename F>
void check_module(const char* section, F&& f) {
  try {
    f();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("[") + section + "] " + e.kind() + ": " + e.what());
  }
}

}  // namespace

const char* to_string(SincConvention v) { return name_of(v, kSincNames); }
const char* to_string(UndrivenReference v) { return name_of(v, kReferenceNames); }
const char* to_string(CombWeighting v) { return name_of(v, kWeightingNames); }
const char* to_string(Picture v) { return name_of(v, kPictureNames); }
const char* to_string(OutputFormat v) { return name_of(v, kFormatNames); }
SincConvention parse_sinc(std::string_view t) { return lookup(t, kSincNames, "sinc convention"); }
UndrivenReference parse_reference(std::string_view t) {
  return lookup(t, kReferenceNames, "undriven reference");
}
CombWeighting parse_weighting(std::string_view t) {
  return lookup(t, kWeightingNames, "comb weighting");
}
Picture parse_picture(std::string_view t) { return lookup(t, kPictureNames, "picture"); }
OutputFormat parse_format(std::string_view t) { return lookup(t, kFormatNames, "format"); }
SweepAxis parse_axis(std::string_view t) { return lookup(t, kAxisNames, "sweep axis"); }

void RunConfig::validate() const {
  check_module("lab", [&] { lab.validate(); });
  check_module("spectrum", [&] { zenosq::validate(spectrum); });
  check_module("protocol", [&] { protocol.validate(); });
  check(quadrature.rel_tol > 0.0 && quadrature.rel_tol < 1.0, "quadrature",
        "rel_tol must lie in (0, 1)");
  check(quadrature.max_lobes >= 1, "quadrature", "max_lobes must be >= 1");
  check(oracle.lobes >= 1 && oracle.modes_per_lobe >= 1, "oracle",
        "lobes and modes_per_lobe must be >= 1");
  check(std::isfinite(oracle.dt_max), "oracle", "dt_max must be finite");
  for (double v : sweep.grid) check(std::isfinite(v), "sweep", "grid values must be finite");
  if (si_omega_q) check(*si_omega_q > 0.0, "meta", "si_omega_q must be > 0");
}

RunConfig config_from_scenario(const Scenario& scenario) {
  RunConfig c;
  c.name = scenario.name;
  c.notes = scenario.notes;
  c.si_omega_q = scenario.si_omega_q;
  c.lab = scenario.lab;
  c.spectrum = scenario.spectrum;
  c.protocol = scenario.protocol;
  c.convention = scenario.convention;
  return c;
}

Scenario scenario_from_config(const RunConfig& config) {
  Scenario s;
  s.name = config.name;
  s.notes = config.notes;
  s.si_omega_q = config.si_omega_q;
  s.lab = config.lab;
  s.spectrum = config.spectrum;
  s.protocol = config.protocol;
  s.convention = config.convention;
  return s;
}

RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("configuration must be a JSON object");
  static const std::set<std::string> kSections = {
      "meta", "lab", "spectrum", "protocol", "filter", "decay",
      "quadrature", "oracle", "sweep", "output"};
  for (const auto& [key, value] : root.items()) {
    if (!kSections.count(key)) throw ConfigError("unknown section '" + key + "'");
  }

  RunConfig c;
  {
    Section s(root, "meta");
    c.name = s.text("name", "");
    c.notes = s.text("notes", "");
    c.si_omega_q = s.optional_number("si_omega_q");
    s.finish();
  }
  c.lab = read_lab(root);
  c.spectrum = read_spectrum(root, base_dir);
  {
    Section s(root, "protocol");
    c.protocol.tau = s.number("tau", c.protocol.tau);
    c.protocol.n = s.count("n", c.protocol.n);
    s.finish();
  }
  {
    Section s(root, "filter");
    c.convention = parse_sinc(s.text("sinc", to_string(c.convention)));
    s.finish();
  }
  {
    Section s(root, "decay");
    c.reference = parse_reference(s.text("undriven_reference", to_string(c.reference)));
    s.finish();
  }
  {
    Section s(root, "quadrature");
    c.quadrature.rel_tol = s.number("rel_tol", c.quadrature.rel_tol);
    c.quadrature.max_lobes = s.count("max_lobes", c.quadrature.max_lobes);
    s.finish();
  }
  {
    Section s(root, "oracle");
    c.oracle.lobes = s.count("lobes", c.oracle.lobes);
    c.oracle.modes_per_lobe = s.count("modes_per_lobe", c.oracle.modes_per_lobe);
    c.oracle.dt_max = s.number("dt_max", c.oracle.dt_max);
    c.oracle.weighting = parse_weighting(s.text("weighting", to_string(c.oracle.weighting)));
    c.oracle.picture = parse_picture(s.text("picture", to_string(c.oracle.picture)));
    s.finish();
  }
  {
    Section s(root, "sweep");
    c.sweep.axis = parse_axis(s.text("axis", to_string(c.sweep.axis)));
    c.sweep.grid = s.numbers("grid");
    c.sweep.workers = s.count("workers", c.sweep.workers);
    s.finish();
  }
  {
    Section s(root, "output");
    c.output.path = s.text("path", "");
    c.output.format = parse_format(s.text("format", to_string(c.output.format)));
    c.output.plot_script = s.flag("plot_script", false);
    s.finish();
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.parent_path());
}

nlohmann::ordered_json config_to_json(const RunConfig& c) {
  Json meta = Json::object();
  meta["name"] = c.name;
  meta["notes"] = c.notes;
  if (c.si_omega_q) meta["si_omega_q"] = *c.si_omega_q;

  Json lab = {{"omega_q", c.lab.omega_q}, {"omega_c", c.lab.omega_c},
              {"omega_d", c.lab.omega_d}, {"g", c.lab.g},
              {"drive_G", c.lab.drive_G}};
  if (c.lab.threshold_gap) lab["threshold_gap"] = *c.lab.threshold_gap;

  Json root;
  root["meta"] = meta;
  root["lab"] = lab;
  root["spectrum"] = spectrum_to_json(c.spectrum);
  root["protocol"] = {{"tau", c.protocol.tau}, {"n", c.protocol.n}};
  root["filter"] = {{"sinc", to_string(c.convention)}};
  root["decay"] = {{"undriven_reference", to_string(c.reference)}};
  root["quadrature"] = {{"rel_tol", c.quadrature.rel_tol},
                        {"max_lobes", c.quadrature.max_lobes}};
  root["oracle"] = {{"lobes", c.oracle.lobes},
                    {"modes_per_lobe", c.oracle.modes_per_lobe},
                    {"dt_max", c.oracle.dt_max},
                    {"weighting", to_string(c.oracle.weighting)},
                    {"picture", to_string(c.oracle.picture)}};
  root["sweep"] = {{"axis", zenosq::to_string(c.sweep.axis)},
                   {"grid", c.sweep.grid},
                   {"workers", c.sweep.workers}};
  root["output"] = {{"path", c.output.path},
                    {"format", to_string(c.output.format)},
                    {"plot_script", c.output.plot_script}};
  return root;
}

std::string serialize_config(const RunConfig& config) {
  return config_to_json(config).dump(2) + "\n";
}

}  // namespace zenosq::cli
