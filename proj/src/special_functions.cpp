#include "imagewell/special_functions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace imagewell {

namespace {

constexpr double kShiftThreshold = 6.0;

// B_{2k} / (2k) for k = 1..7.
constexpr double kAsymptoticCoefficients[] = {
    1.0 / 12.0,     -1.0 / 120.0,         1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0,    -691.0 / 32760.0,     1.0 / 12.0,
};

}  // namespace

double digamma(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("digamma: argument must be finite");
  }
  if (x <= 0.0) {
    std::ostringstream msg;
    msg.precision(17);
    if (x == std::nearbyint(x)) {
      msg << "digamma: pole at x = " << x;
    } else {
      msg << "digamma: only x > 0 is supported, got " << x;
    }
    throw std::domain_error(msg.str());
  }

  double shift = 0.0;
  while (x < kShiftThreshold) {
    shift -= 1.0 / x;
    x += 1.0;
  }

  const double inv2 = 1.0 / (x * x);
  // Horner in 1/x^2, highest order first.
  double series = 0.0;
  for (int k = 6; k >= 0; --k) {
    series = series * inv2 + kAsymptoticCoefficients[k];
  }
  series *= inv2;

  return shift + (std::log(x) - 0.5 / x - series);
}

}  // namespace imagewell
