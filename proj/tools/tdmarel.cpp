// tdmarel: failure probability of time-triggered applications crossing EMI
// zones. See README.md for the subcommands and the config format.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tdmarel/config.hpp"
#include "tdmarel/errors.hpp"
#include "tdmarel/golden.hpp"
#include "tdmarel/oracle.hpp"

namespace {

using namespace tdmarel;

enum class Format { Csv, Plot, Pretty };

constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

struct Options {
  std::string config;
  std::string out;
  Format format = Format::Csv;
  ThresholdConvention convention = ThresholdConvention::Tables;
  bool lenient = false;

  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  int table = 1;
  int series = 1;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw IoError("cannot open output file '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw IoError("error writing output");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

ParsedConfig load(const Options& opt) {
  if (opt.config.empty()) throw ConfigError("", "--config is required for this subcommand");
  ParsedConfig cfg = parse_config_file(opt.config, opt.lenient);
  for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << '\n';
  return cfg;
}

// eval, compose and simulate accept any single-t_cyc document.
struct PointRequest {
  TdmaTiming timing;
  std::vector<EmiZone> zones;
  std::optional<SimulateRequest> simulate;
};

PointRequest point_request(Request req) {
  if (auto* e = std::get_if<EvalRequest>(&req)) return {e->timing, {e->zone}, std::nullopt};
  if (auto* c = std::get_if<ComposeRequest>(&req)) return {c->timing, c->zones, std::nullopt};
  if (auto* s = std::get_if<SimulateRequest>(&req)) return {s->timing, {s->zone}, *s};
  throw ConfigError("/tdma/t_cyc_ms", "expected a single number, got a sweep range");
}

void write_report(const FailureReport& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Csv: emit_csv(report, out); break;
    case Format::Plot: emit_plot_data(report, out); break;
    case Format::Pretty: emit_pretty(report, out); break;
  }
}

int cmd_eval(const Options& opt) {
  PointRequest req = point_request(load(opt).request);
  if (req.zones.size() != 1) throw ConfigError("/zones", "eval takes exactly one zone");
  FailureReport report;
  report.model = describe(req.zones[0].model);
  report.t_z_ms = req.zones[0].passing_time_ms();
  report.t_max_ms = req.timing.t_max_ms;
  report.convention = opt.convention;
  report.rows.push_back(zone_failure_probability(req.zones[0], req.timing, opt.convention));
  Output out(opt.out);
  write_report(report, opt.format, out.stream());
  out.finish();
  return 0;
}

int cmd_sweep(const Options& opt) {
  const ParsedConfig cfg = load(opt);
  const auto* spec = std::get_if<SweepSpec>(&cfg.request);
  if (!spec) throw ConfigError("/tdma/t_cyc_ms", "sweep needs {\"start\", \"end\", \"step\"}");
  const FailureReport report = run_sweep(*spec, opt.convention);
  Output out(opt.out);
  write_report(report, opt.format, out.stream());
  out.finish();
  return 0;
}

int cmd_compose(const Options& opt) {
  PointRequest req = point_request(load(opt).request);
  std::vector<FailureRow> rows;
  for (const EmiZone& z : req.zones) {
    rows.push_back(zone_failure_probability(z, req.timing, opt.convention));
  }
  const double total = compose_zones(rows);

  Output out(opt.out);
  std::ostream& os = out.stream();
  if (opt.format == Format::Pretty) {
    os << "t_cyc_ms:   " << format_t_cyc(req.timing.t_cyc_ms) << '\n'
       << "t_max_ms:   " << format_t_cyc(req.timing.t_max_ms) << '\n'
       << "convention: " << to_string(opt.convention) << "\n\n";
    os << std::setw(6) << "zone" << std::setw(8) << "n" << std::setw(8) << "k_tol"
       << std::setw(18) << "P_fail" << "  model\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << std::setw(6) << i << std::setw(8) << rows[i].n << std::setw(8) << rows[i].k_tol
         << std::setw(18) << format_probability(rows[i].p_fail) << "  "
         << describe(req.zones[i].model) << '\n';
    }
    os << "\ntrajectory P_fail: " << format_probability(total) << '\n';
  } else {
    os << "zone,n,k_tol,p_fail\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << i << ',' << rows[i].n << ',' << rows[i].k_tol << ','
         << format_probability(rows[i].p_fail) << '\n';
    }
    os << "all,,," << format_probability(total) << '\n';
  }
  out.finish();
  return 0;
}

int cmd_simulate(const Options& opt) {
  PointRequest req = point_request(load(opt).request);
  if (req.zones.size() != 1) throw ConfigError("/zones", "simulate takes exactly one zone");
  std::uint64_t trials = req.simulate ? req.simulate->trials : 1'000'000;
  std::uint64_t seed = req.simulate ? req.simulate->seed : 0;
  if (opt.trials) trials = *opt.trials;
  if (opt.seed) seed = *opt.seed;

  const EmiZone& zone = req.zones[0];
  const FailureRow row = zone_failure_probability(zone, req.timing, opt.convention);
  const ErrorProfile profile = make_profile(zone.model, row.n);
  const McEstimate mc = mc_estimate(profile, row.k_fail, trials, seed, opt.threads);
  const double z = mc.std_err > 0.0 ? (mc.p_hat - row.p_fail) / mc.std_err : 0.0;

  Output out(opt.out);
  std::ostream& os = out.stream();
  if (opt.format == Format::Pretty) {
    os << "model:       " << describe(zone.model) << '\n'
       << "n, k_fail:   " << row.n << ", " << row.k_fail << '\n'
       << "analytic:    " << format_probability(row.p_fail) << '\n'
       << "monte carlo: " << format_probability(mc.p_hat) << " +/- "
       << format_probability(mc.std_err) << " (" << mc.trials << " trials, seed " << mc.seed
       << ")\n"
       << "z-score:     " << std::fixed << std::setprecision(3) << z << '\n';
  } else {
    os << "n,k_tol,p_fail,p_hat,std_err,trials,seed\n"
       << row.n << ',' << row.k_tol << ',' << format_probability(row.p_fail) << ','
       << format_probability(mc.p_hat) << ',' << format_probability(mc.std_err) << ','
       << mc.trials << ',' << mc.seed << '\n';
  }
  out.finish();
  return 0;
}

double rel_err(double got, double want) { return std::abs(got - want) / want; }

int cmd_repro(const Options& opt) {
  Output out(opt.out);
  std::ostream& os = out.stream();

  if (opt.table == 1) {
    const FailureReport report = run_sweep(golden::constant_preset(), opt.convention);
    if (opt.format != Format::Pretty) {
      write_report(report, opt.format, os);
    } else {
      os << "constant p = 0.1, t_z = 1500 ms, t_max = 40 ms, convention "
         << to_string(opt.convention) << "\n\n"
         << std::setw(9) << "T_cyc" << std::setw(6) << "n" << std::setw(6) << "k_tol"
         << std::setw(17) << "P_fail" << std::setw(14) << "published" << std::setw(10)
         << "rel.err" << '\n';
      for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const FailureRow& r = report.rows[i];
        const auto& g = golden::kConstantTable[i];
        char err[32];
        std::snprintf(err, sizeof err, "%.2f%%", 100.0 * rel_err(r.p_fail, g.p_fail));
        os << std::setw(9) << format_t_cyc(r.t_cyc_ms) << std::setw(6) << r.n << std::setw(6)
           << r.k_tol << std::setw(17) << format_probability(r.p_fail) << std::setw(14)
           << g.p_fail << std::setw(10) << err << '\n';
      }
    }
  } else {
    const FailureReport lo = run_sweep(golden::radio_preset(), opt.convention);
    const FailureReport hi = run_sweep(golden::radio_prime_preset(), opt.convention);
    if (opt.format != Format::Pretty) {
      write_report(opt.series == 1 ? lo : hi, opt.format, os);
    } else {
      os << "radio a=10,b=20 (P) and a=11,b=19 (P'), t_z = 1500 ms, t_max = 40 ms, convention "
         << to_string(opt.convention) << "\n\n"
         << std::setw(9) << "T_cyc" << std::setw(6) << "n" << std::setw(6) << "k_tol"
         << std::setw(17) << "P_fail" << std::setw(14) << "published" << std::setw(17)
         << "P'_fail" << std::setw(14) << "published" << '\n';
      for (std::size_t i = 0; i < lo.rows.size(); ++i) {
        const auto& g = golden::kRadioTable[i];
        os << std::setw(9) << format_t_cyc(lo.rows[i].t_cyc_ms) << std::setw(6) << lo.rows[i].n
           << std::setw(6) << lo.rows[i].k_tol << std::setw(17)
           << format_probability(lo.rows[i].p_fail) << std::setw(14) << g.p_fail
           << std::setw(17) << format_probability(hi.rows[i].p_fail) << std::setw(14)
           << g.p_fail_prime << '\n';
      }
    }
  }
  out.finish();
  return 0;
}

int cmd_profile(const Options& opt) {
  PointRequest req = point_request(load(opt).request);
  const EmiZone& zone = req.zones.at(0);
  const std::size_t n = zone_to_cycles(zone.passing_time_ms(), req.timing.t_cyc_ms);
  Output out(opt.out);
  emit_profile_plot(make_profile(zone.model, n), out.stream());
  out.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Failure probability of TDMA applications under transient EMI perturbations"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  const std::map<std::string, Format> formats{
      {"csv", Format::Csv}, {"plot", Format::Plot}, {"pretty", Format::Pretty}};
  const std::map<std::string, ThresholdConvention> conventions{
      {"tables", ThresholdConvention::Tables}, {"eq5", ThresholdConvention::Eq5}};

  app.add_option("--config", opt.config, "JSON run configuration");
  app.add_option("--out", opt.out, "Output file (default stdout)");
  app.add_option("--format", opt.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--convention", opt.convention,
                 "tables: tolerate floor(T_max/T_cyc) cycles; eq5: fail at ceil(T_max/T_cyc)")
      ->transform(CLI::CheckedTransformer(conventions, CLI::ignore_case));
  app.add_flag("--lenient", opt.lenient, "Warn about unknown config keys instead of failing");

  auto* eval = app.add_subcommand("eval", "Failure probability of one zone at one T_cyc");
  auto* sweep = app.add_subcommand("sweep", "Failure probability over a T_cyc grid");
  auto* compose = app.add_subcommand("compose", "Trajectory failure probability over zones");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo check against the exact value");
  simulate->add_option("--trials", opt.trials, "Number of simulated zone crossings")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", opt.seed, "Master seed");
  simulate->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  auto* repro = app.add_subcommand("repro", "Recompute the published reference sweeps");
  repro->add_option("--table", opt.table, "1: constant p = 0.1; 2: radio model")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  repro->add_option("--series", opt.series, "Table 2 csv/plot series: 1 (a=10,b=20), 2 (a=11,b=19)")
      ->check(CLI::IsMember({1, 2}));
  auto* profile = app.add_subcommand("profile", "Dump the per-cycle error profile (i p_i)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*eval) return cmd_eval(opt);
    if (*sweep) return cmd_sweep(opt);
    if (*compose) return cmd_compose(opt);
    if (*simulate) return cmd_simulate(opt);
    if (*repro) return cmd_repro(opt);
    if (*profile) return cmd_profile(opt);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "constraint error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return 1;
}
