#include <doctest.h>

#include <boost/math/special_functions/digamma.hpp>
#include <cmath>
#include <random>
#include <stdexcept>

#include "imagewell/special_functions.hpp"

using imagewell::digamma;
using imagewell::kEulerGamma;

namespace {

// psi(x) = -gamma + sum_{n>=1} (1/n - 1/(n + x - 1)). Partial sums S(N) carry
// a tail ~ s/N, so 2 S(2N) - S(N) removes the leading error.
double digamma_by_partial_sums(double x, long n_terms) {
  const double s = x - 1.0;
  auto partial = [s](long n_max) {
    double sum = 0.0;
    for (long n = n_max; n >= 1; --n) {
      const double dn = static_cast<double>(n);
      sum += s / (dn * (dn + s));
    }
    return sum;
  };
  return 2.0 * partial(2 * n_terms) - partial(n_terms) - kEulerGamma;
}

}  // namespace

TEST_CASE("Euler gamma carries full double precision") {
  CHECK(kEulerGamma == 0.57721566490153286);
}

TEST_CASE("digamma reference values") {
  // The series truncation after 1/x^14 at shift threshold 6 leaves ~1e-13.
  CHECK(std::abs(digamma(1.0) - (-0.5772156649015329)) < 1e-12);
  CHECK(std::abs(digamma(0.5) - (-kEulerGamma - 2.0 * std::log(2.0))) < 1e-12);
  CHECK(std::abs(digamma(0.5) - (-1.9635100260214235)) < 1e-12);
  CHECK(std::abs(digamma(2.0) - 0.42278433509846713) < 1e-12);
  // psi(1/4) + psi(3/4) = -2 gamma - 6 ln 2
  CHECK(std::abs(digamma(0.25) + digamma(0.75) + 2 * kEulerGamma + 6 * std::log(2.0)) < 1e-12);
}

TEST_CASE("digamma(6.25) against brute-force partial sums") {
  // Frozen from digamma_by_partial_sums(6.25, 10^7) and confirmed with a
  // 30-digit evaluation: 1.7504535268837360284...
  constexpr double kFrozen = 1.750453526883736;
  const double oracle = digamma_by_partial_sums(6.25, 10'000'000);
  CHECK(std::abs(oracle - kFrozen) < 1e-11);
  CHECK(std::abs(digamma(6.25) - kFrozen) < 1e-12);
}

TEST_CASE("digamma matches an independent implementation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(1e-3, 1.0);
  std::uniform_real_distribution<double> wide(1.0, 200.0);
  for (int i = 0; i < 500; ++i) {
    const double x = unit(rng);
    CHECK(std::abs(digamma(x) - boost::math::digamma(x)) < 1e-12 * std::max(1.0, 1.0 / x));
    const double y = wide(rng);
    const double ref = boost::math::digamma(y);
    CHECK(std::abs(digamma(y) - ref) <= 1e-12 * std::abs(ref));
  }
}

TEST_CASE("digamma recurrence psi(x+1) - psi(x) = 1/x") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> dist(0.01, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(rng);
    CHECK(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) <= 1e-12);
  }
}

TEST_CASE("digamma(1/2 + t) + digamma(1/2 - t) is even in t") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(0.0, 0.49);
  for (int i = 0; i < 1000; ++i) {
    const double t = dist(rng);
    const double plus = digamma(0.5 + t) + digamma(0.5 - t);
    const double minus = digamma(0.5 - t) + digamma(0.5 + t);
    CHECK(std::abs(plus - minus) <= 1e-12);
  }
}

TEST_CASE("digamma behaves like -1/x near zero") {
  const double x = 1e-6;
  CHECK(std::abs(x * digamma(x) + 1.0) <= 1e-4);
}

TEST_CASE("digamma rejects nonpositive and non-finite arguments") {
  CHECK_THROWS_AS(digamma(0.0), std::domain_error);
  CHECK_THROWS_AS(digamma(-2.0), std::domain_error);
  CHECK_THROWS_AS(digamma(-0.5), std::domain_error);
  CHECK_THROWS_AS(digamma(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(digamma(INFINITY), std::domain_error);
  CHECK_THROWS_WITH(digamma(-3.0), doctest::Contains("pole"));
}
