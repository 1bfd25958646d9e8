#include "imagewell/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace imagewell {

namespace {

using std::numbers::pi;

void require_positive_length(double length, const char* where) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    std::ostringstream msg;
    msg << where << ": length must be positive, got " << length;
    throw std::domain_error(msg.str());
  }
}

// Runs body(i) for i in [0, count) on a small pool; the first exception is
// rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
}

int resolve_order(const OrderRule& rule, double length) {
  return rule ? *rule : default_order(length);
}

}  // namespace

double pib_energy(int n, double length) {
  require_positive_length(length, "pib_energy");
  if (n < 1) throw std::domain_error("pib_energy: N must be >= 1");
  const double k = pi * n / length;
  return 0.5 * k * k;
}

double image_state_energy(int n) {
  if (n < 1) throw std::domain_error("image_state_energy: n must be >= 1");
  const double nd = n;
  return -1.0 / (32.0 * nd * nd);
}

double quantum_defect(double energy, int n, double length) {
  require_positive_length(length, "quantum_defect");
  if (!(energy > 0.0)) {
    std::ostringstream msg;
    msg << "quantum_defect: undefined for bound state energy " << energy;
    throw std::domain_error(msg.str());
  }
  return n - (length / pi) * std::sqrt(2.0 * energy);
}

double single_plane_ground(double x) { return 0.25 * x * std::exp(-0.25 * x); }

double single_plane_ground_derivative(double x) {
  return 0.25 * (1.0 - 0.25 * x) * std::exp(-0.25 * x);
}

double analytic_splitting(double length) {
  require_positive_length(length, "analytic_splitting");
  return length / 16.0 * std::exp(-0.25 * length) * (1.0 - length / 8.0);
}

int default_order(double length) {
  require_positive_length(length, "default_order");
  const double m = std::ceil(20.0 * std::sqrt(length));
  return static_cast<int>(std::clamp(m, 100.0, 2000.0));
}

std::vector<DefectRecord> defect_table(const EigenSolution& solution) {
  std::vector<DefectRecord> rows;
  rows.reserve(solution.energies.size());
  for (std::size_t k = 0; k < solution.energies.size(); ++k) {
    DefectRecord row;
    row.n = static_cast<int>(k) + 1;
    row.energy = solution.energies[k];
    if (row.energy > 0.0) {
      row.defect = quantum_defect(row.energy, row.n, solution.length);
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<DefectRecord> defect_table(double length, int order, int n_max,
                                       const AssembleOptions& options) {
  EigensolveOptions solve_options;
  solve_options.compute_states = false;
  return defect_table(solve(order, length, n_max, options, solve_options));
}

double SplittingRecord::analytic_abs() const { return std::abs(analytic); }

std::vector<EnergySweepRow> energy_sweep(std::span<const double> lengths,
                                         int n_states, OrderRule order) {
  std::vector<EnergySweepRow> rows(lengths.size());
  parallel_for(lengths.size(), [&](std::size_t i) {
    const double length = lengths[i];
    const int m = resolve_order(order, length);
    EigensolveOptions options;
    options.compute_states = false;
    auto sol = solve(m, length, n_states, {}, options);
    rows[i] = {length, m, std::move(sol.energies)};
  });
  return rows;
}

std::vector<SplittingRecord> splitting_sweep(std::span<const double> lengths,
                                             OrderRule order) {
  const auto sweep = energy_sweep(lengths, 2, order);
  std::vector<SplittingRecord> records;
  records.reserve(sweep.size());
  constexpr double kRoundoff = 1e-12;
  for (const auto& row : sweep) {
    SplittingRecord r;
    r.length = row.length;
    r.order = row.order;
    r.ground = row.energies[0];
    r.excited = row.energies[1];
    r.numeric = r.excited - r.ground;
    r.analytic = analytic_splitting(row.length);
    r.resolved = r.numeric > kRoundoff * std::abs(r.ground);
    records.push_back(r);
  }
  return records;
}

std::vector<double> log_spaced(double lo, double hi, int n_points) {
  require_positive_length(lo, "log_spaced");
  require_positive_length(hi, "log_spaced");
  if (n_points < 1) throw std::domain_error("log_spaced: need at least one point");
  if (n_points == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(n_points));
  const double ratio = hi / lo;
  for (int i = 0; i < n_points; ++i) {
    out[i] = lo * std::pow(ratio, static_cast<double>(i) / (n_points - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

DecayFit fit_splitting_decay(std::span<const SplittingRecord> records,
                             DecayModel model) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& r : records) {
    if (!r.resolved || !(r.numeric > 0.0)) continue;
    double y = std::log(r.numeric);
    if (model == DecayModel::AnalyticPrefactor) {
      const double prefactor = r.length * std::abs(1.0 - r.length / 8.0) / 16.0;
      if (!(prefactor > 0.0)) continue;  // L = 8 exactly
      y -= std::log(prefactor);
    }
    xs.push_back(r.length);
    ys.push_back(y);
  }
  if (xs.size() < 2) {
    throw std::domain_error("fit_splitting_decay: need two resolved records");
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::domain_error("fit_splitting_decay: lengths all equal");
  const double slope = sxy / sxx;
  DecayFit fit;
  fit.rate = -slope;
  fit.intercept = my - slope * mx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

}  // namespace imagewell
