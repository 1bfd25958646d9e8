#pragma once

namespace imagewell {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Digamma function psi(x) = Gamma'(x) / Gamma(x) for real x > 0.
///
/// The argument is shifted above 6 with psi(x + 1) = psi(x) + 1/x and the
/// asymptotic Bernoulli series is summed through the 1/x^14 term. Absolute
/// error is below 1e-12 on (0, 1) and relative error below 1e-12 for x >= 1.
///
/// Only positive arguments are supported; x <= 0 (including the poles at
/// the nonpositive integers) and non-finite input throw std::domain_error.
double digamma(double x);

}  // namespace imagewell
