#include "secrecy/figures.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace secrecy {

namespace {

struct RecipeContext {
  long trials = 10000;
  std::uint64_t seed = 1;
  int threads = 0;
};

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::vector<double> range_values(int from, int to, int step = 1) {
  std::vector<double> v;
  for (int x = from; x <= to; x += step) v.push_back(static_cast<double>(x));
  return v;
}

ExperimentSpec base_spec(const RecipeContext& ctx, int bs, int eve, int total, int served,
                         double snr_db, Strategy strategy, Regime regime, double xi = 0.0) {
  ExperimentSpec spec;
  spec.config.bs_antennas = bs;
  spec.config.eve_antennas = eve;
  spec.config.total_users = total;
  spec.config.served_users = served;
  spec.config.snr = db_to_linear(snr_db);
  spec.config.error_variance = xi;
  spec.strategy = strategy;
  spec.regime = regime;
  spec.trials = ctx.trials;
  spec.master_seed = ctx.seed;
  spec.threads = ctx.threads;
  return spec;
}

void append(Dataset& into, const Dataset& part) {
  for (const auto& row : part.rows) into.rows.push_back(row);
}

void set_meta(Dataset& data, int figure_id, const ExperimentSpec& sample) {
  nlohmann::json meta = nlohmann::json::parse(
      experiment_meta_json(sample, SweepAxis::ServedUsers, {}));
  meta["figure"] = figure_id;
  data.meta_json = meta.dump();
}

}  // namespace

Dataset run_figure(int figure_id, const FigureOverrides& ov) {
  RecipeContext ctx;
  if (ov.trials) ctx.trials = *ov.trials;
  if (ov.seed) ctx.seed = *ov.seed;
  if (ov.threads) ctx.threads = *ov.threads;

  Dataset data;
  switch (figure_id) {
    case 1: {
      // Random scheduling at high SNR; the eavesdropper has one antenna
      // less, the same number, or one more than the base station.
      const int eve = ov.eve_antennas.value_or(20);
      const double snr_db = ov.snr_db.value_or(30.0);
      const auto ks = range_values(1, 30);
      for (int bs : {eve + 1, eve, eve - 1}) {
        auto spec = base_spec(ctx, bs, eve, 1, 1, snr_db, Strategy::Random, Regime::HighSnr);
        append(data, run_sweep(spec, SweepAxis::ServedUsers, ks,
                               "random-M" + std::to_string(bs) + "-N" + std::to_string(eve)));
      }
      set_meta(data, 1, base_spec(ctx, eve, eve, 1, 1, snr_db, Strategy::Random, Regime::HighSnr));
      break;
    }
    case 2: {
      const double snr_db = ov.snr_db.value_or(-30.0);
      const int bs = ov.bs_antennas.value_or(10);
      const auto ks = range_values(1, 10);
      for (int eve : {bs, ov.eve_antennas.value_or(bs + 5)}) {
        auto spec = base_spec(ctx, bs, eve, 1, 1, snr_db, Strategy::Random, Regime::LowSnr);
        append(data, run_sweep(spec, SweepAxis::ServedUsers, ks,
                               "random-M" + std::to_string(bs) + "-N" + std::to_string(eve)));
      }
      set_meta(data, 2, base_spec(ctx, bs, bs, 1, 1, snr_db, Strategy::Random, Regime::LowSnr));
      break;
    }
    case 3: {
      const int bs = ov.bs_antennas.value_or(20);
      const int total = ov.total_users.value_or(400);
      const double snr_db = ov.snr_db.value_or(30.0);
      const auto ks = range_values(1, 10);
      for (int eve : {bs, ov.eve_antennas.value_or(bs + 5)}) {
        for (Strategy s : {Strategy::GreedyMain, Strategy::GreedyFull}) {
          auto spec = base_spec(ctx, bs, eve, total, 1, snr_db, s, Regime::HighSnr);
          append(data, run_sweep(spec, SweepAxis::ServedUsers, ks,
                                 std::string(strategy_name(s)) + "-N" + std::to_string(eve)));
        }
      }
      set_meta(data, 3,
               base_spec(ctx, bs, bs, total, 1, snr_db, Strategy::GreedyMain, Regime::HighSnr));
      break;
    }
    case 4: {
      const int bs = ov.bs_antennas.value_or(10);
      const int eve = ov.eve_antennas.value_or(15);
      const int total = ov.total_users.value_or(400);
      const double snr_db = ov.snr_db.value_or(-30.0);
      const auto ks = range_values(1, 8);
      for (Strategy s : {Strategy::GreedyMain, Strategy::GreedyFull}) {
        auto spec = base_spec(ctx, bs, eve, total, 1, snr_db, s, Regime::LowSnr);
        append(data, run_sweep(spec, SweepAxis::ServedUsers, ks, strategy_name(s)));
      }
      set_meta(data, 4,
               base_spec(ctx, bs, eve, total, 1, snr_db, Strategy::GreedyMain, Regime::LowSnr));
      break;
    }
    case 5: {
      const int bs = ov.bs_antennas.value_or(100);
      const int eve = ov.eve_antennas.value_or(100);
      const int total = ov.total_users.value_or(400);
      const double snr_db = ov.snr_db.value_or(10.0);
      const auto ks = range_values(1, 8);
      for (Strategy s : {Strategy::NormBased, Strategy::GreedyMain, Strategy::NormDiff,
                         Strategy::GreedyFull}) {
        auto spec = base_spec(ctx, bs, eve, total, 1, snr_db, s, Regime::LargeScale);
        append(data, run_sweep(spec, SweepAxis::ServedUsers, ks, strategy_name(s)));
      }
      set_meta(data, 5,
               base_spec(ctx, bs, eve, total, 1, snr_db, Strategy::NormBased, Regime::LargeScale));
      break;
    }
    case 6: {
      const int bs = ov.bs_antennas.value_or(10);
      const int total = ov.total_users.value_or(400);
      const double snr_db = ov.snr_db.value_or(30.0);
      const std::vector<int> surpluses = ov.antenna_surplus.value_or(std::vector<int>{0, 2, 5});
      const auto ks = range_values(1, bs);
      for (int surplus : surpluses) {
        const int eve = bs + surplus;
        for (Strategy s : {Strategy::Random, Strategy::GreedyMain, Strategy::GreedyFull}) {
          auto spec = base_spec(ctx, bs, eve, total, 1, snr_db, s, Regime::HighSnr);
          if (s == Strategy::Random) spec.config.total_users = 1;
          append(data, run_sweep(spec, SweepAxis::ServedUsers, ks,
                                 std::string(strategy_name(s)) + "-N" + std::to_string(eve)));
        }
      }
      set_meta(data, 6,
               base_spec(ctx, bs, bs, total, 1, snr_db, Strategy::GreedyMain, Regime::HighSnr));
      break;
    }
    case 7: {
      const int bs = ov.bs_antennas.value_or(10);
      const int eve = ov.eve_antennas.value_or(15);
      const int total = ov.total_users.value_or(400);
      const double snr_db = ov.snr_db.value_or(-30.0);
      const double xi = ov.error_variance.value_or(0.1);
      const auto ks = range_values(1, 8);
      for (Strategy s : {Strategy::GreedyMain, Strategy::GreedyFull}) {
        auto spec = base_spec(ctx, bs, eve, total, 1, snr_db, s, Regime::LowSnr);
        append(data, run_sweep(spec, SweepAxis::ServedUsers, ks,
                               std::string(strategy_name(s)) + "-perfect"));
      }
      auto err = base_spec(ctx, bs, eve, total, 1, snr_db, Strategy::GreedyMain, Regime::LowSnr, xi);
      append(data, run_sweep(err, SweepAxis::ServedUsers, ks, "greedy-main-estimated"));
      set_meta(data, 7, err);
      break;
    }
    case 8: {
      const double snr_db = ov.snr_db.value_or(30.0);
      const std::vector<double> totals = {50, 100, 200, 400};
      struct Config { int antennas; int served; };
      for (Config c : {Config{10, 5}, Config{10, 10}, Config{40, 10}}) {
        auto spec = base_spec(ctx, c.antennas, c.antennas, 50, c.served, snr_db,
                              Strategy::GreedyMain, Regime::HighSnr);
        append(data, run_sweep(spec, SweepAxis::TotalUsers, totals,
                               "greedy-main-M" + std::to_string(c.antennas) + "-k" +
                                   std::to_string(c.served)));
      }
      set_meta(data, 8,
               base_spec(ctx, 10, 10, 50, 10, snr_db, Strategy::GreedyMain, Regime::HighSnr));
      break;
    }
    case 9: {
      const int bs = ov.bs_antennas.value_or(20);
      const int total = ov.total_users.value_or(400);
      const double snr_db = ov.snr_db.value_or(30.0);
      const auto eves = range_values(bs, bs + 12, 2);
      struct Series { Strategy strategy; int served; };
      for (Series s : {Series{Strategy::Random, bs}, Series{Strategy::GreedyMain, bs},
                       Series{Strategy::GreedyFull, bs}, Series{Strategy::GreedyMain, 1},
                       Series{Strategy::GreedyFull, 1}}) {
        auto spec = base_spec(ctx, bs, bs, total, s.served, snr_db, s.strategy, Regime::HighSnr);
        if (s.strategy == Strategy::Random) spec.config.total_users = s.served;
        append(data, run_sweep(spec, SweepAxis::EveAntennas, eves,
                               std::string(strategy_name(s.strategy)) + "-k" +
                                   std::to_string(s.served)));
      }
      set_meta(data, 9,
               base_spec(ctx, bs, bs, total, bs, snr_db, Strategy::GreedyMain, Regime::HighSnr));
      break;
    }
    default:
      throw std::invalid_argument("figure: id must lie in 1..9");
  }
  return data;
}

}  // namespace secrecy
