#pragma once

#include <optional>
#include <span>
#include <vector>

#include "imagewell/solver.hpp"

namespace imagewell {

/// Particle-in-a-box level E_N = (pi N / L)^2 / 2.
double pib_energy(int n, double length);

/// Bound image state of a single plane, E_n = -1 / (32 n^2).
double image_state_energy(int n);

/// delta = N - (L / pi) sqrt(2 E): the amount to subtract from N so that the
/// box formula reproduces E. Throws std::domain_error for E <= 0.
double quantum_defect(double energy, int n, double length);

/// Normalized ground state of an electron bound to one plane,
/// psi_0(x) = (x / 4) exp(-x / 4), x measured from the plane.
double single_plane_ground(double x);
double single_plane_ground_derivative(double x);

/// Tunneling estimate 2 psi_0(L/2) psi_0'(L/2) = (L/16) exp(-L/4) (1 - L/8).
/// Negative for L > 8.
double analytic_splitting(double length);

/// Heuristic order for the lowest pair at plate separation L:
/// max(100, ceil(20 sqrt(L))), capped at 2000.
int default_order(double length);

struct DefectRecord {
  int n = 0;
  double energy = 0.0;
  std::optional<double> defect;  // empty for bound (E <= 0) states
};

std::vector<DefectRecord> defect_table(const EigenSolution& solution);
std::vector<DefectRecord> defect_table(double length, int order, int n_max,
                                       const AssembleOptions& options = {});

struct SplittingRecord {
  double length = 0.0;
  int order = 0;
  double ground = 0.0;
  double excited = 0.0;
  double numeric = 0.0;   // E2 - E1
  double analytic = 0.0;  // signed analytic_splitting(L)
  bool resolved = false;  // numeric above round-off of the pair

  [[nodiscard]] double analytic_abs() const;
};

struct EnergySweepRow {
  double length = 0.0;
  int order = 0;
  std::vector<double> energies;
};

/// Order selection for sweeps: a fixed M, or default_order(L) when empty.
using OrderRule = std::optional<int>;

/// Lowest n_states energies for each L. Solves run in parallel; rows keep
/// the order of lengths.
std::vector<EnergySweepRow> energy_sweep(std::span<const double> lengths,
                                         int n_states, OrderRule order = {});

std::vector<SplittingRecord> splitting_sweep(std::span<const double> lengths,
                                             OrderRule order = {});

/// n_points lengths spaced evenly in log between lo and hi inclusive.
std::vector<double> log_spaced(double lo, double hi, int n_points);

enum class DecayModel {
  /// ln dE = c - k L
  PureExponential,
  /// ln dE = c + ln(L |1 - L/8| / 16) - k L, the algebraic prefactor of the
  /// analytic splitting held fixed so k is the rate of its exponential
  AnalyticPrefactor,
};

struct DecayFit {
  double rate = 0.0;  // k, per bohr
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least-squares decay rate of the numeric splitting over resolved records.
/// Throws std::domain_error with fewer than two usable records.
DecayFit fit_splitting_decay(std::span<const SplittingRecord> records,
                             DecayModel model);

}  // namespace imagewell
