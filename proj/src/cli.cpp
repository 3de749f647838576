#include "dispositions/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "dispositions/dynamics.hpp"
#include "dispositions/encounter.hpp"
#include "dispositions/montecarlo.hpp"

namespace dispositions::cli {

using json = nlohmann::ordered_json;

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::string_view axis_name(Axis a) {
  switch (a) {
    case Axis::P: return "p";
    case Axis::Q: return "q";
    case Axis::R: return "r";
    case Axis::VNonCoop: return "vnc";
    case Axis::VCoop: return "vc";
  }
  return "?";
}

double parse_double(std::string_view text, std::string_view what) {
  std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ValidationError("cannot parse " + std::string(what) + " from '" + s + "'");
  }
  return v;
}

// JSON has no infinity.
json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

}  // namespace

AxisSpec parse_axis(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ValidationError("axis '" + std::string(text) + "' is not of the form name=start:stop:count");
  }
  const std::string_view name = text.substr(0, eq);
  AxisSpec spec{};
  if (name == "p") {
    spec.axis = Axis::P;
  } else if (name == "q") {
    spec.axis = Axis::Q;
  } else if (name == "r") {
    spec.axis = Axis::R;
  } else if (name == "vnc" || name == "v_noncoop") {
    spec.axis = Axis::VNonCoop;
  } else if (name == "vc" || name == "v_coop") {
    spec.axis = Axis::VCoop;
  } else {
    throw ValidationError("unknown axis '" + std::string(name) + "'");
  }

  std::string_view rest = text.substr(eq + 1);
  const auto c1 = rest.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : rest.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw ValidationError("axis '" + std::string(text) + "' is not of the form name=start:stop:count");
  }
  spec.start = parse_double(rest.substr(0, c1), "axis start");
  spec.stop = parse_double(rest.substr(c1 + 1, c2 - c1 - 1), "axis stop");
  const std::string_view count = rest.substr(c2 + 1);
  const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), spec.count);
  if (ec != std::errc() || ptr != count.data() + count.size() || spec.count == 0) {
    throw ValidationError("axis '" + std::string(text) + "' needs a positive integer count");
  }
  if (!std::isfinite(spec.start) || !std::isfinite(spec.stop)) {
    throw ValidationError("axis '" + std::string(text) + "' has a non-finite bound");
  }
  if (spec.count == 1 && spec.start != spec.stop) {
    throw ValidationError("axis '" + std::string(text) + "' has one point but start != stop");
  }
  return spec;
}

namespace {

double axis_value(const AxisSpec& a, std::uint64_t i) {
  if (a.count == 1) return a.start;
  if (i + 1 == a.count) return a.stop;
  return a.start + (a.stop - a.start) * (static_cast<double>(i) / static_cast<double>(a.count - 1));
}

struct GridPoint {
  TranslucentPayoffs pay;
  TranslucencyParams params;
};

SweepRow evaluate(const GridPoint& pt) {
  const auto cmp = analytic::cm_rational(pt.pay, pt.params);
  return {pt.params.p(),
          pt.params.q(),
          pt.params.r(),
          pt.pay.v_noncoop(),
          pt.pay.v_coop(),
          cmp.eu_cm,
          cmp.eu_sm,
          cmp.margin,
          analytic::critical_ratio(pt.pay, pt.params.r()),
          cmp.cm_is_rational};
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepGrid& grid, unsigned workers) {
  if (grid.axes.empty()) throw ValidationError("sweep grid is empty: give at least one --axis");

  std::array<bool, 5> swept{};
  for (const AxisSpec& a : grid.axes) {
    auto& seen = swept[static_cast<int>(a.axis)];
    if (seen) throw ValidationError("axis '" + std::string(axis_name(a.axis)) + "' given twice");
    seen = true;
  }
  const std::array<std::optional<double>, 5> fixed{grid.p, grid.q, grid.r, grid.vnc, grid.vc};
  for (int k = 0; k < 5; ++k) {
    if (!swept[k] && !fixed[k]) {
      throw ValidationError("parameter '" + std::string(axis_name(static_cast<Axis>(k))) +
                            "' is neither swept nor fixed");
    }
  }

  std::uint64_t total = 1;
  for (const AxisSpec& a : grid.axes) total *= a.count;

  std::vector<GridPoint> points;
  points.reserve(total);
  std::vector<std::uint64_t> index(grid.axes.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    std::array<double, 5> v{};
    for (int k = 0; k < 5; ++k) v[k] = fixed[k].value_or(0.0);
    for (std::size_t i = 0; i < grid.axes.size(); ++i) {
      v[static_cast<int>(grid.axes[i].axis)] = axis_value(grid.axes[i], index[i]);
    }
    try {
      points.push_back({validate_translucent(v[3], v[4]), TranslucencyParams::make(v[0], v[1], v[2])});
    } catch (const ValidationError& e) {
      std::ostringstream os;
      os << "invalid grid point (p=" << format_number(v[0]) << ", q=" << format_number(v[1])
         << ", r=" << format_number(v[2]) << ", vnc=" << format_number(v[3])
         << ", vc=" << format_number(v[4]) << "): " << e.what();
      throw ValidationError(os.str());
    }
    // Odometer, last axis fastest.
    for (std::size_t i = grid.axes.size(); i-- > 0;) {
      if (++index[i] < grid.axes[i].count) break;
      index[i] = 0;
    }
  }

  std::vector<SweepRow> rows(points.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, points.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) rows[i] = evaluate(points[i]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < points.size(); i += workers) rows[i] = evaluate(points[i]);
      });
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out(kSweepHeader);
  out += '\n';
  for (const SweepRow& row : rows) {
    for (double v : {row.p, row.q, row.r, row.v_noncoop, row.v_coop, row.eu_cm, row.eu_sm,
                     row.margin, row.critical_ratio}) {
      out += format_number(v);
      out += ',';
    }
    out += row.cm_rational ? "true" : "false";
    out += '\n';
  }
  return out;
}

RunOptions options_from_env() {
  RunOptions opts;
  const char* env = std::getenv("DISPOSITIONS_SIM_THREADS");
  if (env == nullptr || *env == '\0') return opts;
  unsigned value = 0;
  const std::string_view s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ValidationError("DISPOSITIONS_SIM_THREADS must be a non-negative integer, got '" +
                          std::string(s) + "'");
  }
  opts.workers = value;
  return opts;
}

namespace {

// Flag values with an optional JSON config underneath; flags win.
class ParamSource {
 public:
  void load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file '" + path + "'");
    try {
      config_ = json::parse(in);
    } catch (const json::exception& e) {
      throw ValidationError("config file '" + path + "': " + e.what());
    }
    if (!config_.is_object()) throw ValidationError("config file '" + path + "' is not a JSON object");
  }

  std::optional<double> number(const std::optional<double>& flag, const std::string& key) const {
    if (flag) return flag;
    if (!config_.contains(key)) return std::nullopt;
    const json& v = config_.at(key);
    if (!v.is_number()) throw ValidationError("config key '" + key + "' must be a number");
    return v.get<double>();
  }

  double required(const std::optional<double>& flag, const std::string& key) const {
    auto v = number(flag, key);
    if (!v) throw ValidationError("missing parameter --" + key);
    return *v;
  }

  template <class Int>
  Int integer(const std::optional<Int>& flag, const std::string& key, Int fallback) const {
    if (flag) return *flag;
    if (!config_.contains(key)) return fallback;
    const json& v = config_.at(key);
    if (!v.is_number_unsigned()) {
      throw ValidationError("config key '" + key + "' must be a non-negative integer");
    }
    return v.get<Int>();
  }

  std::vector<std::string> strings(const std::vector<std::string>& flag, const std::string& key) const {
    if (!flag.empty() || !config_.contains(key)) return flag;
    const json& v = config_.at(key);
    if (!v.is_array()) throw ValidationError("config key '" + key + "' must be an array of strings");
    std::vector<std::string> out;
    for (const json& item : v) {
      if (!item.is_string()) throw ValidationError("config key '" + key + "' must be an array of strings");
      out.push_back(item.get<std::string>());
    }
    return out;
  }

 private:
  json config_ = json::object();
};

struct CommonFlags {
  std::optional<double> vnc, vc, p, q, r;
  std::optional<std::string> config;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--vnc", f.vnc, "Payoff of mutual non-cooperation, in (0, 1)");
  cmd->add_option("--vc", f.vc, "Payoff of mutual cooperation, in (vnc, 1)");
  cmd->add_option("--p", f.p, "Probability that two CMs recognize each other");
  cmd->add_option("--q", f.q, "Probability that a CM is exploited by an SM it meets");
  cmd->add_option("--r", f.r, "Share of CMs in the population");
  cmd->add_option("--config", f.config, "JSON file with default parameter values");
}

ParamSource source_for(const CommonFlags& f) {
  ParamSource src;
  if (f.config) src.load_config(*f.config);
  return src;
}

struct Resolved {
  TranslucentPayoffs pay;
  TranslucencyParams params;
};

Resolved resolve(const CommonFlags& f, const ParamSource& src) {
  const double vnc = src.required(f.vnc, "vnc");
  const double vc = src.required(f.vc, "vc");
  const double p = src.required(f.p, "p");
  const double q = src.required(f.q, "q");
  const double r = src.required(f.r, "r");
  return {validate_translucent(vnc, vc), TranslucencyParams::make(p, q, r)};
}

json params_json(const Resolved& x) {
  json j;
  j["vnc"] = x.pay.v_noncoop();
  j["vc"] = x.pay.v_coop();
  j["p"] = x.params.p();
  j["q"] = x.params.q();
  j["r"] = x.params.r();
  return j;
}

json histogram_json(const montecarlo::OutcomeHistogram& h) {
  json j;
  for (int k = 0; k < kOutcomeClassCount; ++k) {
    j[std::string(to_string(static_cast<OutcomeClass>(k)))] = h[k];
  }
  return j;
}

std::string cmd_analytic(const CommonFlags& f) {
  const Resolved x = resolve(f, source_for(f));
  const auto cmp = analytic::cm_rational(x.pay, x.params);
  json j;
  j["eu_cm"] = cmp.eu_cm;
  j["eu_sm"] = cmp.eu_sm;
  j["margin"] = cmp.margin;
  j["critical_ratio"] = json_number(analytic::critical_ratio(x.pay, x.params.r()));
  j["cm_rational"] = cmp.cm_is_rational;
  return j.dump(2) + "\n";
}

std::string cmd_simulate(const CommonFlags& f, const std::optional<std::uint64_t>& n_flag,
                         const std::optional<std::uint64_t>& seed_flag, unsigned workers) {
  const ParamSource src = source_for(f);
  const Resolved x = resolve(f, src);
  const auto n = src.integer<std::uint64_t>(n_flag, "n", 100000);
  const auto seed = src.integer<std::uint64_t>(seed_flag, "seed", 0);

  const EncounterConfig cfg{x.pay, x.params};
  const auto report = montecarlo::estimate_eus(cfg, n, seed, workers);
  const double eu_cm = analytic::translucent_eu_cm(x.pay, x.params);
  const double eu_sm = analytic::translucent_eu_sm(x.pay, x.params);

  json j;
  j["params"] = params_json(x);
  j["seed"] = seed;
  j["n_trials"] = report.n_trials;
  j["mean_payoff_cm"] = report.mean_payoff_cm;
  j["mean_payoff_sm"] = report.mean_payoff_sm;
  j["stderr_cm"] = report.stderr_cm;
  j["stderr_sm"] = report.stderr_sm;
  j["outcome_histogram"] = {{"cm_focal", histogram_json(report.histogram_cm)},
                            {"sm_focal", histogram_json(report.histogram_sm)}};
  j["cm_partners"] = report.cm_partners;
  j["analytic_eu_cm"] = eu_cm;
  j["analytic_eu_sm"] = eu_sm;
  j["deviation_cm"] = std::abs(report.mean_payoff_cm - eu_cm);
  j["deviation_sm"] = std::abs(report.mean_payoff_sm - eu_sm);
  return j.dump(2) + "\n";
}

std::string cmd_sweep(const CommonFlags& f, const std::vector<std::string>& axis_flags,
                      unsigned workers) {
  const ParamSource src = source_for(f);
  SweepGrid grid;
  for (const std::string& a : src.strings(axis_flags, "axis")) grid.axes.push_back(parse_axis(a));
  grid.vnc = src.number(f.vnc, "vnc");
  grid.vc = src.number(f.vc, "vc");
  grid.p = src.number(f.p, "p");
  grid.q = src.number(f.q, "q");
  grid.r = src.number(f.r, "r");
  return sweep_csv(run_sweep(grid, workers));
}

std::string cmd_evolve(const CommonFlags& f, const std::optional<std::uint64_t>& gen_flag) {
  const ParamSource src = source_for(f);
  const Resolved x = resolve(f, src);
  const auto generations = src.integer<std::uint64_t>(gen_flag, "generations", 200);

  const auto traj = dynamics::evolve(x.pay, x.params, generations);
  std::string out = "generation,r,eu_cm,eu_sm\n";
  for (const auto& s : traj.steps) {
    out += std::to_string(s.generation) + ',' + format_number(s.r) + ',' +
           format_number(s.eu_cm) + ',' + format_number(s.eu_sm) + '\n';
  }
  if (auto root = dynamics::interior_threshold(x.pay, x.params.p(), x.params.q())) {
    json j;
    j["interior_threshold"] = *root;
    out += "# " + j.dump() + "\n";
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const RunOptions& options) {
  CLI::App app{"Expected utilities of straightforward and constrained maximizers", "dispositions-sim"};
  app.require_subcommand(1);

  CommonFlags analytic_flags, simulate_flags, sweep_flags, evolve_flags;
  std::optional<std::uint64_t> n, seed, generations;
  std::vector<std::string> axes;

  auto* analytic_cmd = app.add_subcommand("analytic", "Closed-form translucent expected utilities (JSON)");
  add_common(analytic_cmd, analytic_flags);

  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimate next to the closed forms (JSON)");
  add_common(simulate_cmd, simulate_flags);
  simulate_cmd->add_option("--n", n, "Number of trials (default 100000)");
  simulate_cmd->add_option("--seed", seed, "RNG seed (default 0)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate the criterion over a parameter grid (CSV)");
  add_common(sweep_cmd, sweep_flags);
  sweep_cmd->add_option("--axis", axes, "Swept parameter as name=start:stop:count, repeatable, outermost first");

  auto* evolve_cmd = app.add_subcommand("evolve", "Replicator trajectory of the CM share (CSV)");
  add_common(evolve_cmd, evolve_flags);
  evolve_cmd->add_option("--generations", generations, "Generations to iterate (default 200)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::string text;
    if (analytic_cmd->parsed()) {
      text = cmd_analytic(analytic_flags);
    } else if (simulate_cmd->parsed()) {
      text = cmd_simulate(simulate_flags, n, seed, options.workers);
    } else if (sweep_cmd->parsed()) {
      text = cmd_sweep(sweep_flags, axes, options.workers);
    } else {
      text = cmd_evolve(evolve_flags, generations);
    }
    out << text;
    out.flush();
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace dispositions::cli
