#include "secrecy/cli_app.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>

#include "secrecy/dataset_io.hpp"
#include "secrecy/figures.hpp"
#include "secrecy/montecarlo.hpp"
#include "secrecy/rates.hpp"
#include "secrecy/validation.hpp"

namespace secrecy {

namespace {

using nlohmann::json;

struct CommonOptions {
  std::optional<int> bs, eve, total, served;
  std::optional<double> snr_db, xi;
  std::optional<long> trials;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::optional<std::string> strategy, regime, unit, format;
  std::string config_path;
  std::string out_path;
  bool with_jensen = false;
};

Strategy parse_strategy(const std::string& name) {
  if (name == "random") return Strategy::Random;
  if (name == "greedy-main") return Strategy::GreedyMain;
  if (name == "greedy-full") return Strategy::GreedyFull;
  if (name == "norm-based") return Strategy::NormBased;
  if (name == "norm-diff") return Strategy::NormDiff;
  if (name == "exhaustive-main") return Strategy::ExhaustiveMain;
  if (name == "exhaustive-full") return Strategy::ExhaustiveFull;
  throw std::invalid_argument("strategy: unknown value '" + name + "'");
}

Regime parse_regime(const std::string& name) {
  if (name == "high-snr") return Regime::HighSnr;
  if (name == "low-snr") return Regime::LowSnr;
  if (name == "large-scale") return Regime::LargeScale;
  throw std::invalid_argument("regime: unknown value '" + name + "'");
}

RateUnit parse_unit(const std::string& name) {
  if (name == "nats") return RateUnit::Nats;
  if (name == "bits") return RateUnit::Bits;
  throw std::invalid_argument("unit: unknown value '" + name + "'");
}

// Flat JSON config; CLI flags win over file values, defaults fill the rest.
void merge_config_file(CommonOptions& opt) {
  if (opt.config_path.empty()) return;
  std::ifstream is(opt.config_path);
  if (!is) throw std::invalid_argument("config: cannot open '" + opt.config_path + "'");
  json doc;
  try {
    is >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument("config: invalid JSON (" + std::string(e.what()) + ")");
  }
  static const char* known[] = {"M", "N", "K", "k", "snr_db", "xi", "strategy", "regime",
                                "trials", "seed", "unit", "format", "threads"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return key == k; }) == std::end(known))
      throw std::invalid_argument("config: unknown key '" + key + "'");
    (void)value;
  }
  auto fill_int = [&](const char* key, std::optional<int>& slot) {
    if (!slot && doc.contains(key)) slot = doc.at(key).get<int>();
  };
  auto fill_double = [&](const char* key, std::optional<double>& slot) {
    if (!slot && doc.contains(key)) slot = doc.at(key).get<double>();
  };
  auto fill_string = [&](const char* key, std::optional<std::string>& slot) {
    if (!slot && doc.contains(key)) slot = doc.at(key).get<std::string>();
  };
  fill_int("M", opt.bs);
  fill_int("N", opt.eve);
  fill_int("K", opt.total);
  fill_int("k", opt.served);
  fill_double("snr_db", opt.snr_db);
  fill_double("xi", opt.xi);
  fill_string("strategy", opt.strategy);
  fill_string("regime", opt.regime);
  fill_string("unit", opt.unit);
  fill_string("format", opt.format);
  if (!opt.trials && doc.contains("trials")) opt.trials = doc.at("trials").get<long>();
  if (!opt.seed && doc.contains("seed")) opt.seed = doc.at("seed").get<std::uint64_t>();
  if (!opt.threads && doc.contains("threads")) opt.threads = doc.at("threads").get<int>();
}

ExperimentSpec build_spec(const CommonOptions& opt) {
  ExperimentSpec spec;
  spec.config.bs_antennas = opt.bs.value_or(10);
  spec.config.eve_antennas = opt.eve.value_or(10);
  spec.config.served_users = opt.served.value_or(1);
  spec.config.total_users = opt.total.value_or(spec.config.served_users);
  spec.config.snr = std::pow(10.0, opt.snr_db.value_or(0.0) / 10.0);
  spec.config.error_variance = opt.xi.value_or(0.0);
  spec.strategy = parse_strategy(opt.strategy.value_or("random"));
  spec.regime = parse_regime(opt.regime.value_or("high-snr"));
  spec.trials = opt.trials.value_or(10000);
  spec.master_seed = opt.seed.value_or(1);
  spec.threads = opt.threads.value_or(0);
  spec.config.validate();

  const bool greedy_like = spec.strategy == Strategy::GreedyMain ||
                           spec.strategy == Strategy::GreedyFull;
  if (greedy_like && spec.config.served_users > spec.config.bs_antennas)
    throw std::invalid_argument("k: k exceeds M, greedy selection needs k <= M");
  if (spec.strategy == Strategy::GreedyFull &&
      spec.config.served_users > spec.config.eve_antennas)
    throw std::invalid_argument("k: k exceeds N, full-CSI greedy selection needs k <= N");
  if (!spec.config.gaussian_approx_reliable())
    std::cerr << "warning: min(M, N) < 10; closed-form approximations may be loose\n";
  if (spec.regime == Regime::HighSnr && spec.config.snr < 10.0)
    std::cerr << "warning: high-snr closed form evaluated below 10 dB\n";
  if (spec.regime == Regime::LowSnr && spec.config.snr > 0.1)
    std::cerr << "warning: low-snr closed form evaluated above -10 dB\n";
  return spec;
}

std::filesystem::path resolve_out(const std::string& name) {
  std::filesystem::path p(name);
  if (p.is_absolute()) return p;
  if (const char* dir = std::getenv("ESSR_SIM_OUT_DIR"); dir != nullptr && *dir != '\0')
    return std::filesystem::path(dir) / p;
  return p;
}

void write_dataset(const Dataset& data, const CommonOptions& opt, const std::string& default_name) {
  const std::string format = opt.format.value_or("csv");
  const RateUnit unit = parse_unit(opt.unit.value_or("nats"));
  std::string name = opt.out_path.empty() ? default_name : opt.out_path;
  std::filesystem::path path = resolve_out(name);
  if (format == "csv") {
    if (path.extension().empty()) path.replace_extension(".csv");
    write_text_file(path, dataset_to_csv(data, unit, opt.with_jensen));
  } else if (format == "json") {
    if (path.extension().empty()) path.replace_extension(".json");
    write_text_file(path, dataset_to_json(data, unit, opt.with_jensen));
  } else {
    throw std::invalid_argument("format: unknown value '" + format + "'");
  }
  std::cout << "wrote " << path.string() << "\n";
}

void add_common_options(CLI::App* sub, CommonOptions& opt, bool with_strategy = true) {
  sub->add_option("--config", opt.config_path, "JSON config file with flat keys");
  sub->add_option("--M", opt.bs, "base-station antennas");
  sub->add_option("--N", opt.eve, "eavesdropper antennas");
  sub->add_option("--K", opt.total, "total users");
  sub->add_option("--k", opt.served, "served users per slot");
  sub->add_option("--snr-db", opt.snr_db, "transmit SNR in dB");
  sub->add_option("--xi", opt.xi, "channel-estimation error variance in [0,1)");
  sub->add_option("--trials", opt.trials, "Monte Carlo trials (default 10000)");
  sub->add_option("--seed", opt.seed, "master seed (default 1)");
  sub->add_option("--threads", opt.threads, "worker threads (0 = auto; never changes results)");
  sub->add_option("--unit", opt.unit, "output unit: nats|bits (default nats)");
  sub->add_option("--format", opt.format, "output format: csv|json (default csv)");
  sub->add_option("--out", opt.out_path, "output file path");
  sub->add_flag("--jensen", opt.with_jensen, "append the mean-then-rectify diagnostic column");
  if (with_strategy) {
    sub->add_option("--strategy", opt.strategy,
                    "random|greedy-main|greedy-full|norm-based|norm-diff|"
                    "exhaustive-main|exhaustive-full");
    sub->add_option("--regime", opt.regime, "high-snr|low-snr|large-scale");
  }
}

std::string fmt_rate(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

int cmd_essr(CommonOptions& opt) {
  merge_config_file(opt);
  const ExperimentSpec spec = build_spec(opt);
  const EssrEstimate est = run_point(spec);
  const RateUnit unit = parse_unit(opt.unit.value_or("nats"));
  const double mc = convert_rate(est.mc_mean, unit);
  const double se = convert_rate(est.mc_stderr, unit);
  const double an = convert_rate(est.analytic, unit);
  std::string gap = "n/a";
  if (!std::isnan(est.analytic) && est.analytic != 0.0) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f%%", 100.0 * (est.mc_mean - est.analytic) / est.analytic);
    gap = buf;
  }
  std::cout << "essr: mc " << fmt_rate(mc) << " +- " << fmt_rate(se) << " " << unit_name(unit)
            << ", analytic " << (std::isnan(an) ? std::string("n/a") : fmt_rate(an))
            << ", rel gap " << gap << " (" << est.trials << " trials)\n";

  Dataset data;
  data.meta_json = experiment_meta_json(spec, SweepAxis::ServedUsers, {});
  DatasetRow row;
  row.point = spec.config.served_users;
  row.mc_mean = est.mc_mean;
  row.mc_stderr = est.mc_stderr;
  row.analytic = est.analytic;
  row.trials = est.trials;
  row.jensen = est.jensen;
  data.rows.push_back(row);
  write_dataset(data, opt, "essr_dataset");
  return 0;
}

int cmd_sweep(CommonOptions& opt, const std::string& axis_name, std::vector<double>& values,
              double from, double to, double step) {
  merge_config_file(opt);
  const ExperimentSpec base = build_spec(opt);
  SweepAxis axis;
  if (axis_name == "k") axis = SweepAxis::ServedUsers;
  else if (axis_name == "K") axis = SweepAxis::TotalUsers;
  else if (axis_name == "N") axis = SweepAxis::EveAntennas;
  else if (axis_name == "snr-db") axis = SweepAxis::SnrDb;
  else throw std::invalid_argument("axis: unknown value '" + axis_name + "'");
  if (values.empty()) {
    if (!(step > 0.0) || to < from)
      throw std::invalid_argument("values: provide --values or a valid --from/--to/--step range");
    for (double v = from; v <= to + 1e-9; v += step) values.push_back(v);
  }
  const Dataset data = run_sweep(base, axis, values, "");
  write_dataset(data, opt, std::string("sweep_") + sweep_axis_name(axis));
  return 0;
}

int cmd_figure(CommonOptions& opt, int figure_id, std::vector<int>& surpluses) {
  merge_config_file(opt);
  FigureOverrides ov;
  ov.trials = opt.trials;
  ov.seed = opt.seed;
  ov.threads = opt.threads;
  ov.bs_antennas = opt.bs;
  ov.eve_antennas = opt.eve;
  ov.total_users = opt.total;
  ov.snr_db = opt.snr_db;
  ov.error_variance = opt.xi;
  if (!surpluses.empty()) ov.antenna_surplus = surpluses;
  const Dataset data = run_figure(figure_id, ov);
  write_dataset(data, opt, "figure" + std::to_string(figure_id));
  return 0;
}

int cmd_table1(CommonOptions& opt) {
  merge_config_file(opt);
  const long trials = opt.trials.value_or(10000);
  const int total = opt.total.value_or(100);
  const auto rows = run_energy_table(total, {10, 20, 30, 40, 50}, trials,
                                     opt.seed.value_or(1), opt.threads.value_or(0));
  std::printf("%-10s %-12s %-12s %-12s\n", "M", "numerical", "analytical", "gumbel-ref");
  char echo[128];
  std::snprintf(echo, sizeof(echo), "# spec: {\"K\":%d,\"trials\":%ld,\"seed\":%llu}\n", total,
                trials, static_cast<unsigned long long>(opt.seed.value_or(1)));
  std::string csv = std::string(echo) + "M,numerical,analytical,gumbel_ref\n";
  for (const auto& row : rows) {
    std::printf("%-10d %-12.4f %-12.4f %-12.4f\n", row.degrees, row.numerical, row.analytical,
                row.gumbel_ref);
    char line[128];
    std::snprintf(line, sizeof(line), "%d,%.12g,%.12g,%.12g\n", row.degrees, row.numerical,
                  row.analytical, row.gumbel_ref);
    csv += line;
  }
  if (!opt.out_path.empty()) {
    const auto path = resolve_out(opt.out_path);
    write_text_file(path, csv);
    std::cout << "wrote " << path.string() << "\n";
  }
  return 0;
}

int cmd_validate(bool quick, std::vector<int>& only, std::uint64_t seed, int threads) {
  ValidationOptions vopt;
  vopt.quick = quick;
  vopt.only = only;
  vopt.seed = seed;
  vopt.threads = threads;
  const auto results = run_acceptance_suite(vopt, std::cout);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Uplink secrecy-rate simulator: Monte Carlo experiments and closed-form "
               "predictions for multiuser selection under eavesdropping"};
  app.require_subcommand(1);

  CommonOptions essr_opt;
  auto* essr = app.add_subcommand("essr", "estimate the ergodic secrecy sum-rate at one point");
  add_common_options(essr, essr_opt);

  CommonOptions sweep_opt;
  std::string axis_name = "k";
  std::vector<double> sweep_values;
  double sweep_from = 0, sweep_to = -1, sweep_step = 0;
  auto* sweep = app.add_subcommand("sweep", "sweep one axis and emit a dataset");
  add_common_options(sweep, sweep_opt);
  sweep->add_option("--axis", axis_name, "sweep axis: k|K|N|snr-db");
  sweep->add_option("--values", sweep_values, "explicit sweep values")->delimiter(',');
  sweep->add_option("--from", sweep_from, "range start");
  sweep->add_option("--to", sweep_to, "range end (inclusive)");
  sweep->add_option("--step", sweep_step, "range step");

  CommonOptions fig_opt;
  int figure_id = 1;
  std::vector<int> surpluses;
  auto* figure = app.add_subcommand("figure", "reproduce a study figure dataset");
  add_common_options(figure, fig_opt, false);
  figure->add_option("--id", figure_id, "figure number 1..9")->required();
  figure->add_option("--delta-n", surpluses, "figure 6: eavesdropper antenna surpluses")
      ->delimiter(',');

  CommonOptions table_opt;
  auto* table = app.add_subcommand("table1", "strongest-channel-energy table (K=100)");
  add_common_options(table, table_opt, false);

  bool quick = false;
  std::vector<int> only;
  std::uint64_t vseed = 1;
  int vthreads = 0;
  auto* validate = app.add_subcommand("validate", "run the acceptance checklist");
  validate->add_flag("--quick", quick,
                     "1/10 of the trials, stochastic tolerances doubled");
  validate->add_option("--only", only, "criterion ids to run")->delimiter(',');
  validate->add_option("--seed", vseed, "master seed");
  validate->add_option("--threads", vthreads, "worker threads");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(essr)) return cmd_essr(essr_opt);
    if (app.got_subcommand(sweep))
      return cmd_sweep(sweep_opt, axis_name, sweep_values, sweep_from, sweep_to, sweep_step);
    if (app.got_subcommand(figure)) return cmd_figure(fig_opt, figure_id, surpluses);
    if (app.got_subcommand(table)) return cmd_table1(table_opt);
    if (app.got_subcommand(validate)) return cmd_validate(quick, only, vseed, vthreads);
  } catch (const SingularMatrixError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace secrecy
