#include "imagewell/potential.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "imagewell/special_functions.hpp"

namespace imagewell {

namespace {

double reduced_position(double x, double length, const char* where) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    std::ostringstream msg;
    msg << where << ": plate separation must be positive and finite, got "
        << length;
    throw std::domain_error(msg.str());
  }
  if (!(x > 0.0 && x < length)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << where << ": position x = " << x << " outside (0, " << length << ")";
    throw std::domain_error(msg.str());
  }
  const double a = x / length;
  // a can round onto 0 or 1 when x is within an ulp of a plate.
  if (!(a > 0.0 && a < 1.0)) {
    throw std::domain_error(std::string(where) +
                            ": position rounds onto a plate");
  }
  return a;
}

}  // namespace

double potential_closed(double x, double length) {
  const double a = reduced_position(x, length, "potential_closed");
  return (digamma(a) + digamma(1.0 - a) + 2.0 * kEulerGamma) / (4.0 * length);
}

double potential_series(double x, double length, int n_terms) {
  const double a = reduced_position(x, length, "potential_series");
  if (n_terms < 1) {
    throw std::domain_error("potential_series: n_terms must be >= 1");
  }
  const int left_pairs = (n_terms + 1) / 2;
  const int right_pairs = n_terms / 2;
  // Smallest summands first.
  double tail = 0.0;
  for (int n = left_pairs; n >= 1; --n) {
    const double dn = n;
    if (n <= right_pairs) {
      tail += 1.0 / dn - 1.0 / (dn + a);
    }
    tail += 1.0 / dn - 1.0 / (dn - a);
  }
  return (-1.0 / a + tail) / (4.0 * length);
}

double potential_first_image(double x, double length) {
  const double a = reduced_position(x, length, "potential_first_image");
  return (-1.0 / a - 1.0 / (1.0 - a)) / (4.0 * length);
}

void PotentialModel::validate() const {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::domain_error("PotentialModel: length must be positive");
  }
  if (form == PotentialForm::TruncatedSeries && n_terms < 1) {
    throw std::domain_error("PotentialModel: series form needs n_terms >= 1");
  }
}

double PotentialModel::operator()(double x) const {
  switch (form) {
    case PotentialForm::ClosedDigamma:
      return potential_closed(x, length);
    case PotentialForm::TruncatedSeries:
      return potential_series(x, length, n_terms);
    case PotentialForm::FirstImageOnly:
      return potential_first_image(x, length);
  }
  throw std::invalid_argument("PotentialModel: unknown form");
}

ConvergenceTable convergence_table(double x, double length,
                                   std::span<const int> term_counts) {
  if (term_counts.empty()) {
    throw std::domain_error("convergence_table: no term counts given");
  }
  ConvergenceTable table;
  table.x = x;
  table.length = length;
  table.rows.reserve(term_counts.size());
  for (const int k : term_counts) {
    table.rows.push_back({k, potential_series(x, length, k)});
  }
  table.closed_form = potential_closed(x, length);
  return table;
}

std::vector<PotentialSample> potential_profile(double length, int n_points) {
  if (n_points < 1) {
    throw std::domain_error("potential_profile: need at least one point");
  }
  const double offset = 2.0 * kEulerGamma / (4.0 * length);
  std::vector<PotentialSample> samples;
  samples.reserve(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    const double x = length * (i + 1.0) / (n_points + 1.0);
    const double closed = potential_closed(x, length);
    samples.push_back({x, closed, closed - offset,
                       potential_first_image(x, length)});
  }
  return samples;
}

}  // namespace imagewell
