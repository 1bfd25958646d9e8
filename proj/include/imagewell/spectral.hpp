#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace imagewell {

/// Chebyshev-Gauss-Lobatto grid with order + 1 nodes.
///
/// Nodes are stored in descending order, nodes[0] = +1 and nodes[order] = -1
/// on the reference interval, and scaled_nodes = (L / 2) * nodes on
/// [-L/2, L/2]. They are computed as sin(pi (M - 2j) / (2M)) rather than
/// cos(j pi / M) so that nodes[j] == -nodes[M - j] holds bit for bit.
struct ChebyshevGrid {
  int order = 0;
  double length = 0.0;
  std::vector<double> nodes;
  std::vector<double> scaled_nodes;

  [[nodiscard]] int size() const { return order + 1; }
  [[nodiscard]] int mirror(int j) const { return order - j; }
};

/// Throws std::domain_error unless order >= 2 and length > 0.
ChebyshevGrid build_grid(int order, double length);

enum class DerivativeOrder { First, Second };

/// How a differentiation matrix was produced. Direct applies to first-order
/// matrices; second-order ones are either the square of the first-order
/// matrix or built entrywise from closed-form second-derivative formulas.
enum class Construction { Direct, SquaredFirst, ExplicitSecond };

struct SpectralOperator {
  DerivativeOrder order = DerivativeOrder::First;
  Construction construction = Construction::Direct;
  bool interior_only = false;
  Eigen::MatrixXd matrix;

  [[nodiscard]] Eigen::Index size() const { return matrix.rows(); }
};

/// Full (M+1) x (M+1) first-derivative matrix in physical units (scaled by
/// 2 / L). Diagonal entries are the negated off-diagonal row sums, so every
/// row sums to zero.
SpectralOperator first_derivative_matrix(const ChebyshevGrid& grid);

/// (M-1) x (M-1) second-derivative matrix restricted to the interior nodes,
/// which imposes homogeneous Dirichlet conditions at x = +-L/2. Carries the
/// (2 / L)^2 physical scaling. Throws std::invalid_argument for Direct or an
/// out-of-range construction.
SpectralOperator second_derivative_interior(
    const ChebyshevGrid& grid,
    Construction construction = Construction::SquaredFirst);

/// Clenshaw-Curtis quadrature weights on the grid nodes, scaled to the
/// physical interval so that they sum to L. Exact for polynomials of degree
/// <= M, so not for products of two degree-M interpolants.
std::vector<double> clenshaw_curtis_weights(const ChebyshevGrid& grid);

/// Barycentric evaluation of the degree-M interpolant through `values` at
/// reference coordinates `targets` in [-1, 1].
Eigen::VectorXd interpolate(const ChebyshevGrid& grid, const Eigen::VectorXd& values,
                            std::span<const double> targets);

/// Inner product of two grid functions taken as the integral of the product
/// of their interpolants: both are evaluated on the order-2M grid and
/// combined with its Clenshaw-Curtis weights, which is exact for the
/// degree-2M product.
class ProductQuadrature {
 public:
  explicit ProductQuadrature(const ChebyshevGrid& grid);

  /// Values of the interpolant of u on the refined grid.
  [[nodiscard]] Eigen::VectorXd refine(const Eigen::VectorXd& u) const;

  /// Quadrature of two already refined vectors.
  [[nodiscard]] double refined_dot(const Eigen::VectorXd& fine_u,
                                   const Eigen::VectorXd& fine_v) const;

  [[nodiscard]] double operator()(const Eigen::VectorXd& u,
                                  const Eigen::VectorXd& v) const;

 private:
  ChebyshevGrid grid_;
  ChebyshevGrid fine_;
  Eigen::VectorXd fine_weights_;
};

}  // namespace imagewell
