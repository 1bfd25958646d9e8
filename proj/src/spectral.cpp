#include "imagewell/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace imagewell {

namespace {

using std::numbers::pi;

// 1 - x_j^2 = sin^2(j pi / M), evaluated without cancellation near the ends.
double one_minus_node_squared(int j, int order) {
  const int k = std::min(j, order - j);
  const double s = std::sin(pi * k / order);
  return s * s;
}

}  // namespace

ChebyshevGrid build_grid(int order, double length) {
  if (order < 2) {
    throw std::domain_error("build_grid: order must be >= 2 to have interior nodes");
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::domain_error("build_grid: length must be positive");
  }
  ChebyshevGrid grid;
  grid.order = order;
  grid.length = length;
  grid.nodes.resize(static_cast<std::size_t>(order) + 1);
  grid.scaled_nodes.resize(grid.nodes.size());
  const double half = 0.5 * length;
  for (int j = 0; j <= order; ++j) {
    const double x = std::sin(pi * (order - 2.0 * j) / (2.0 * order));
    grid.nodes[j] = x;
    grid.scaled_nodes[j] = half * x;
  }
  return grid;
}

SpectralOperator first_derivative_matrix(const ChebyshevGrid& grid) {
  const int n = grid.size();
  const int m = grid.order;
  const auto& x = grid.nodes;

  // Signed weights c_i (-1)^i with c = 2 at the endpoints.
  std::vector<double> c(static_cast<std::size_t>(n), 1.0);
  c.front() = c.back() = 2.0;
  for (int i = 1; i <= m; i += 2) {
    c[i] = -c[i];
  }

  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double value = (c[i] / c[j]) / (x[i] - x[j]);
      d(i, j) = value;
      row_sum += value;
    }
    d(i, i) = -row_sum;
  }
  d *= 2.0 / grid.length;

  return {DerivativeOrder::First, Construction::Direct, false, std::move(d)};
}

SpectralOperator second_derivative_interior(const ChebyshevGrid& grid,
                                            Construction construction) {
  const int m = grid.order;
  const int n = m - 1;
  const double scale = 2.0 / grid.length;
  Eigen::MatrixXd d2(n, n);

  switch (construction) {
    case Construction::SquaredFirst: {
      const Eigen::MatrixXd d = first_derivative_matrix(grid).matrix;
      const Eigen::MatrixXd full = d * d;
      d2 = full.block(1, 1, n, n);
      break;
    }
    case Construction::ExplicitSecond: {
      // Closed-form Gauss-Lobatto entries for interior rows and columns:
      //   i != j: (-1)^(i+j) (x_i^2 + x_i x_j - 2) / ((1 - x_i^2)(x_i - x_j)^2)
      //   i == j: -((M^2 - 1)(1 - x_i^2) + 3) / (3 (1 - x_i^2)^2)
      const auto& x = grid.nodes;
      const double mm1 = static_cast<double>(m) * m - 1.0;
      for (int i = 1; i < m; ++i) {
        const double si = one_minus_node_squared(i, m);
        for (int j = 1; j < m; ++j) {
          double value;
          if (i == j) {
            value = -(mm1 * si + 3.0) / (3.0 * si * si);
          } else {
            const double dx = x[i] - x[j];
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            value = sign * (x[i] * x[i] + x[i] * x[j] - 2.0) / (si * dx * dx);
          }
          d2(i - 1, j - 1) = value * scale * scale;
        }
      }
      break;
    }
    default:
      throw std::invalid_argument(
          "second_derivative_interior: construction must be SquaredFirst or "
          "ExplicitSecond");
  }

  return {DerivativeOrder::Second, construction, true, std::move(d2)};
}

std::vector<double> clenshaw_curtis_weights(const ChebyshevGrid& grid) {
  const int m = grid.order;
  std::vector<double> w(static_cast<std::size_t>(m) + 1, 0.0);
  const double md = m;

  if (m % 2 == 0) {
    w.front() = w.back() = 1.0 / (md * md - 1.0);
  } else {
    w.front() = w.back() = 1.0 / (md * md);
  }
  for (int j = 1; j < m; ++j) {
    // Symmetric index keeps w[j] == w[M - j] exactly.
    const int js = std::min(j, m - j);
    const double theta = pi * js / md;
    double v = 1.0;
    if (m % 2 == 0) {
      for (int k = 1; k < m / 2; ++k) {
        v -= 2.0 * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
      }
      v -= std::cos(md * theta) / (md * md - 1.0);
    } else {
      for (int k = 1; k <= (m - 1) / 2; ++k) {
        v -= 2.0 * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
      }
    }
    w[j] = 2.0 * v / md;
  }
  const double half = 0.5 * grid.length;
  for (auto& wj : w) wj *= half;
  return w;
}

Eigen::VectorXd interpolate(const ChebyshevGrid& grid, const Eigen::VectorXd& values,
                            std::span<const double> targets) {
  const int n = grid.size();
  if (values.size() != n) {
    throw std::invalid_argument("interpolate: value count does not match the grid");
  }
  // Barycentric weights of the Gauss-Lobatto nodes: (-1)^j, halved at the ends.
  std::vector<double> bw(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    bw[j] = (j % 2 == 0) ? 1.0 : -1.0;
    if (j == 0 || j == n - 1) bw[j] *= 0.5;
  }
  Eigen::VectorXd out(static_cast<Eigen::Index>(targets.size()));
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const double x = targets[t];
    double num = 0.0;
    double den = 0.0;
    bool on_node = false;
    for (int j = 0; j < n; ++j) {
      const double dx = x - grid.nodes[j];
      if (dx == 0.0) {
        out[static_cast<Eigen::Index>(t)] = values[j];
        on_node = true;
        break;
      }
      const double c = bw[j] / dx;
      num += c * values[j];
      den += c;
    }
    if (!on_node) out[static_cast<Eigen::Index>(t)] = num / den;
  }
  return out;
}

ProductQuadrature::ProductQuadrature(const ChebyshevGrid& grid)
    : grid_(grid), fine_(build_grid(2 * grid.order, grid.length)) {
  const auto w = clenshaw_curtis_weights(fine_);
  fine_weights_ = Eigen::Map<const Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
}

Eigen::VectorXd ProductQuadrature::refine(const Eigen::VectorXd& u) const {
  return interpolate(grid_, u, fine_.nodes);
}

double ProductQuadrature::refined_dot(const Eigen::VectorXd& fine_u,
                                      const Eigen::VectorXd& fine_v) const {
  return (fine_weights_.array() * fine_u.array() * fine_v.array()).sum();
}

double ProductQuadrature::operator()(const Eigen::VectorXd& u,
                                     const Eigen::VectorXd& v) const {
  return refined_dot(refine(u), refine(v));
}

}  // namespace imagewell
