#include "secrecy/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "secrecy/rates.hpp"

namespace secrecy {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Random: return "random";
    case Strategy::GreedyMain: return "greedy-main";
    case Strategy::GreedyFull: return "greedy-full";
    case Strategy::NormBased: return "norm-based";
    case Strategy::NormDiff: return "norm-diff";
    case Strategy::ExhaustiveMain: return "exhaustive-main";
    case Strategy::ExhaustiveFull: return "exhaustive-full";
  }
  return "unknown";
}

namespace {

// Residual bookkeeping for sequential orthogonal projection: after a column
// is taken, every remaining column is orthogonalized against it and the
// cached squared norms shrink accordingly. Residuals that vanish are left
// untouched -- a column inside the selected span does not change the
// complement.
struct ResidualSet {
  ComplexMatrix residuals;
  Eigen::VectorXd energy;

  explicit ResidualSet(const ComplexMatrix& columns)
      : residuals(columns), energy(columns.cols()) {
    for (Eigen::Index j = 0; j < columns.cols(); ++j) energy(j) = columns.col(j).squaredNorm();
  }

  void deflate(int picked) {
    const double norm2 = residuals.col(picked).squaredNorm();
    if (norm2 <= 0.0) return;
    const Eigen::VectorXcd q = residuals.col(picked) / std::sqrt(norm2);
    const Eigen::RowVectorXcd coeff = q.adjoint() * residuals;
    residuals.noalias() -= q * coeff;
    for (Eigen::Index j = 0; j < energy.size(); ++j)
      energy(j) = std::max(energy(j) - std::norm(coeff(j)), 0.0);
  }
};

int argmax_available(const Eigen::VectorXd& metric, const std::vector<char>& taken) {
  int best = -1;
  double best_value = -std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < metric.size(); ++j) {
    if (taken[static_cast<std::size_t>(j)]) continue;
    if (metric(j) > best_value) {
      best_value = metric(j);
      best = static_cast<int>(j);
    }
  }
  return best;
}

SelectionOutcome top_by_key(const Eigen::VectorXd& key, int count, Strategy tag) {
  const int total = static_cast<int>(key.size());
  if (count < 1 || count > total)
    throw std::domain_error("selection: k must lie in [1, K]");
  std::vector<int> order(static_cast<std::size_t>(total));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return key(a) > key(b); });
  SelectionOutcome out;
  out.strategy = tag;
  out.indices.assign(order.begin(), order.begin() + count);
  out.step_metrics.reserve(static_cast<std::size_t>(count));
  for (int idx : out.indices) out.step_metrics.push_back(key(idx));
  return out;
}

std::uint64_t subset_count(int total, int count, std::uint64_t cap) {
  // C(total, count), saturating at cap+1 to avoid overflow.
  double value = 1.0;
  for (int i = 1; i <= count; ++i) {
    value *= static_cast<double>(total - count + i) / i;
    if (value > static_cast<double>(cap) * 2.0) return cap + 1;
  }
  return static_cast<std::uint64_t>(value + 0.5);
}

}  // namespace

SelectionOutcome select_random(int total, int count, RngStream& stream) {
  if (count < 1 || count > total) throw std::domain_error("select_random: k must lie in [1, K]");
  SelectionOutcome out;
  out.strategy = Strategy::Random;
  if (count == total) {
    out.indices.resize(static_cast<std::size_t>(total));
    std::iota(out.indices.begin(), out.indices.end(), 0);
    return out;
  }
  // Partial Fisher-Yates over the index array.
  std::vector<int> pool(static_cast<std::size_t>(total));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t span = static_cast<std::uint64_t>(total - i);
    const int j = i + static_cast<int>(stream.next() % span);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  out.indices.assign(pool.begin(), pool.begin() + count);
  return out;
}

SelectionOutcome select_greedy_main(const ComplexMatrix& main, int count) {
  const int total = static_cast<int>(main.cols());
  if (count < 1 || count > total) throw std::domain_error("select_greedy_main: k must lie in [1, K]");
  if (count > main.rows())
    throw std::domain_error("select_greedy_main: k exceeds the projection dimension M");

  SelectionOutcome out;
  out.strategy = Strategy::GreedyMain;
  ResidualSet set(main);
  std::vector<char> taken(static_cast<std::size_t>(total), 0);
  for (int l = 0; l < count; ++l) {
    const int pick = argmax_available(set.energy, taken);
    out.indices.push_back(pick);
    out.step_metrics.push_back(set.energy(pick));
    taken[static_cast<std::size_t>(pick)] = 1;
    if (l + 1 < count) set.deflate(pick);
  }
  return out;
}

SelectionOutcome select_greedy_main_regularized(const ComplexMatrix& estimate, int count,
                                                double effective_snr) {
  const int total = static_cast<int>(estimate.cols());
  const int dim = static_cast<int>(estimate.rows());
  if (count < 1 || count > total)
    throw std::domain_error("select_greedy_main_regularized: k must lie in [1, K]");
  if (count > dim)
    throw std::domain_error("select_greedy_main_regularized: k exceeds the projection dimension M");
  if (!(effective_snr > 0.0))
    throw std::domain_error("select_greedy_main_regularized: effective SNR must be > 0");

  SelectionOutcome out;
  out.strategy = Strategy::GreedyMain;
  std::vector<char> taken(static_cast<std::size_t>(total), 0);
  ComplexMatrix prefix(dim, 0);
  for (int l = 0; l < count; ++l) {
    ComplexMatrix damped = ComplexMatrix::Identity(dim, dim);
    if (prefix.cols() > 0) {
      ComplexMatrix cap = ComplexMatrix::Identity(prefix.cols(), prefix.cols());
      cap.noalias() += effective_snr * (prefix.adjoint() * prefix);
      damped.noalias() -=
          effective_snr * (prefix * cap.llt().solve(prefix.adjoint()));
    }
    const ComplexMatrix weighted = damped * estimate;
    Eigen::VectorXd metric(total);
    for (int j = 0; j < total; ++j)
      metric(j) = estimate.col(j).dot(weighted.col(j)).real();
    const int pick = argmax_available(metric, taken);
    out.indices.push_back(pick);
    out.step_metrics.push_back(metric(pick));
    taken[static_cast<std::size_t>(pick)] = 1;
    prefix.conservativeResize(Eigen::NoChange, prefix.cols() + 1);
    prefix.col(prefix.cols() - 1) = estimate.col(pick);
  }
  return out;
}

SelectionOutcome select_greedy_full(const ComplexMatrix& main, const ComplexMatrix& wiretap,
                                    int count) {
  if (main.cols() != wiretap.cols())
    throw std::domain_error("select_greedy_full: main and wiretap column counts differ");
  const int total = static_cast<int>(main.cols());
  if (count < 1 || count > total) throw std::domain_error("select_greedy_full: k must lie in [1, K]");
  if (count > main.rows() || count > wiretap.rows())
    throw std::domain_error("select_greedy_full: k exceeds a projection dimension");

  SelectionOutcome out;
  out.strategy = Strategy::GreedyFull;
  ResidualSet main_set(main);
  ResidualSet tap_set(wiretap);
  std::vector<char> taken(static_cast<std::size_t>(total), 0);
  Eigen::VectorXd ratio(total);
  for (int l = 0; l < count; ++l) {
    for (int j = 0; j < total; ++j) {
      const double denom = tap_set.energy(j);
      ratio(j) = denom > 0.0 ? main_set.energy(j) / denom
                             : std::numeric_limits<double>::infinity();
    }
    const int pick = argmax_available(ratio, taken);
    out.indices.push_back(pick);
    out.step_metrics.push_back(ratio(pick));
    taken[static_cast<std::size_t>(pick)] = 1;
    if (l + 1 < count) {
      main_set.deflate(pick);
      tap_set.deflate(pick);
    }
  }
  return out;
}

SelectionOutcome select_norm_based(const ComplexMatrix& main, int count) {
  Eigen::VectorXd key(main.cols());
  for (Eigen::Index j = 0; j < main.cols(); ++j) key(j) = main.col(j).squaredNorm();
  return top_by_key(key, count, Strategy::NormBased);
}

SelectionOutcome select_norm_diff(const ComplexMatrix& main, const ComplexMatrix& wiretap,
                                  int count) {
  if (main.cols() != wiretap.cols())
    throw std::domain_error("select_norm_diff: main and wiretap column counts differ");
  Eigen::VectorXd key(main.cols());
  for (Eigen::Index j = 0; j < main.cols(); ++j)
    key(j) = main.col(j).squaredNorm() - wiretap.col(j).squaredNorm();
  return top_by_key(key, count, Strategy::NormDiff);
}

SelectionOutcome select_exhaustive(const ComplexMatrix& main, const ComplexMatrix& wiretap,
                                   int count, ExhaustiveObjective objective, double rho,
                                   std::uint64_t subset_budget) {
  if (main.cols() != wiretap.cols())
    throw std::domain_error("select_exhaustive: main and wiretap column counts differ");
  const int total = static_cast<int>(main.cols());
  if (count < 1 || count > total) throw std::domain_error("select_exhaustive: k must lie in [1, K]");
  if (subset_count(total, count, subset_budget) > subset_budget)
    throw std::invalid_argument("select_exhaustive: subset count exceeds the configured budget");

  auto evaluate = [&](const std::vector<int>& subset) {
    ComplexMatrix h(main.rows(), count);
    ComplexMatrix g(wiretap.rows(), count);
    for (int i = 0; i < count; ++i) {
      h.col(i) = main.col(subset[static_cast<std::size_t>(i)]);
      g.col(i) = wiretap.col(subset[static_cast<std::size_t>(i)]);
    }
    const double rate = sum_rate(h, rho);
    if (objective == ExhaustiveObjective::MainRate) return rate;
    return rate - sum_rate(g, rho);
  };

  std::vector<int> subset(static_cast<std::size_t>(count));
  std::iota(subset.begin(), subset.end(), 0);
  std::vector<int> best = subset;
  double best_value = evaluate(subset);
  // Lexicographic successor walk; strict improvement keeps the earliest
  // (lowest) subset on ties.
  while (true) {
    int i = count - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == total - count + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < count; ++j)
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    const double value = evaluate(subset);
    if (value > best_value) {
      best_value = value;
      best = subset;
    }
  }

  SelectionOutcome out;
  out.strategy = objective == ExhaustiveObjective::MainRate ? Strategy::ExhaustiveMain
                                                            : Strategy::ExhaustiveFull;
  out.indices = best;
  out.step_metrics = {best_value};
  return out;
}

}  // namespace secrecy
