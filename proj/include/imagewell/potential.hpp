#pragma once

#include <span>
#include <vector>

namespace imagewell {

// Image-charge potential energy of an electron at distance x from the left
// plane of a grounded parallel-plate pair separated by L (hartree atomic
// units, lengths in bohr). All forms depend on x only through a = x / L,
// with an overall 1 / L. Every function requires 0 < x < L and L > 0 and
// throws std::domain_error otherwise.

/// Closed form summing every image generation:
/// V = [psi(a) + psi(1 - a) + 2 gamma] / (4 L).
double potential_closed(double x, double length);

/// Image-charge series truncated to n_terms paired summands in total:
///   V = (1 / 4L) [ -1/a + sum_{n=1..K_left}  (1/n - 1/(n - a))
///                       + sum_{n=1..K_right} (1/n - 1/(n + a)) ],
/// with K_left = ceil(n_terms / 2) pairs from the images on the left and
/// K_right = floor(n_terms / 2) from the right. Converges slowly (error of
/// order a^2 / n_terms^2) to potential_closed.
double potential_series(double x, double length, int n_terms);

/// First image generation only: V = (1 / 4L) (-1/a - 1/(1 - a)).
double potential_first_image(double x, double length);

enum class PotentialForm { ClosedDigamma, TruncatedSeries, FirstImageOnly };

/// Selects one of the three forms above for a fixed plate separation.
struct PotentialModel {
  PotentialForm form = PotentialForm::ClosedDigamma;
  double length = 1.0;
  int n_terms = 0;  // TruncatedSeries only

  /// Throws std::domain_error if length <= 0 or a series model has no terms.
  void validate() const;

  double operator()(double x) const;
};

struct ConvergenceRow {
  int terms = 0;
  double potential = 0.0;
};

/// Truncated-series values at increasing term counts plus the closed form
/// they converge to.
struct ConvergenceTable {
  double x = 0.0;
  double length = 0.0;
  std::vector<ConvergenceRow> rows;
  double closed_form = 0.0;
};

ConvergenceTable convergence_table(double x, double length,
                                   std::span<const int> term_counts);

/// One sample of the potential profile comparing the closed form (with and
/// without its 2 gamma / 4L offset) against the first-image form.
struct PotentialSample {
  double x = 0.0;
  double closed = 0.0;
  double closed_without_gamma = 0.0;
  double first_image = 0.0;
};

/// Samples n_points equally spaced interior positions x_i = L (i + 1) / (n + 1).
std::vector<PotentialSample> potential_profile(double length, int n_points);

}  // namespace imagewell
