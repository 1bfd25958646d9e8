#include "imagewell/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "imagewell/potential.hpp"

namespace imagewell {

double zero_potential(double /*x*/, double /*length*/) { return 0.0; }

const char* to_string(Parity parity) {
  switch (parity) {
    case Parity::Even:
      return "even";
    case Parity::Odd:
      return "odd";
    case Parity::Mixed:
      return "mixed";
  }
  return "unknown";
}

SpectralHamiltonian assemble(int order, double length,
                             const AssembleOptions& options) {
  if (order < 4) {
    throw std::domain_error("assemble: order M must be >= 4");
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::domain_error("assemble: length L must be positive");
  }
  SpectralHamiltonian h;
  h.grid = build_grid(order, length);
  h.length = length;
  h.order = order;
  h.matrix = -0.5 * second_derivative_interior(h.grid, options.construction).matrix;

  const PotentialFunction& potential =
      options.potential ? options.potential : PotentialFunction(potential_closed);
  const double half = 0.5 * length;
  for (int j = 1; j < order; ++j) {
    h.matrix(j - 1, j - 1) += potential(h.grid.scaled_nodes[j] + half, length);
  }
  return h;
}

double inner_product(std::span<const double> weights,
                     const Eigen::VectorXd& lhs, const Eigen::VectorXd& rhs) {
  double sum = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const auto i = static_cast<Eigen::Index>(j);
    sum += weights[j] * lhs[i] * rhs[i];
  }
  return sum;
}

namespace {

Parity classify(const Eigen::VectorXd& psi, double tolerance) {
  const Eigen::Index n = psi.size();
  const double peak = psi.cwiseAbs().maxCoeff();
  if (peak == 0.0) return Parity::Mixed;
  double even_mismatch = 0.0;
  double odd_mismatch = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mirrored = psi[n - 1 - j];
    even_mismatch = std::max(even_mismatch, std::abs(psi[j] - mirrored));
    odd_mismatch = std::max(odd_mismatch, std::abs(psi[j] + mirrored));
  }
  if (even_mismatch < tolerance * peak) return Parity::Even;
  if (odd_mismatch < tolerance * peak) return Parity::Odd;
  return Parity::Mixed;
}

void fix_sign(Eigen::VectorXd& psi) {
  const double threshold = 1e-8 * psi.cwiseAbs().maxCoeff();
  for (Eigen::Index j = 0; j < psi.size(); ++j) {
    if (std::abs(psi[j]) > threshold) {
      if (psi[j] < 0.0) psi = -psi;
      return;
    }
  }
}

}  // namespace

EigenSolution eigensolve(const SpectralHamiltonian& hamiltonian, int n_states,
                         const EigensolveOptions& options) {
  const int n = static_cast<int>(hamiltonian.matrix.rows());
  if (n_states < 1 || n_states > n) {
    std::ostringstream msg;
    msg << "eigensolve: n_states = " << n_states << " must lie in [1, " << n
        << "] for M = " << hamiltonian.order;
    throw std::domain_error(msg.str());
  }

  Eigen::EigenSolver<Eigen::MatrixXd> es(hamiltonian.matrix,
                                         options.compute_states);
  if (es.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigensolve: QR iteration did not converge (matrix " << n << "x"
        << n << ", limit " << es.getMaxIterations()
        << " iterations per eigenvalue)";
    throw SolverError(msg.str(), n, es.getMaxIterations());
  }
  const auto& values = es.eigenvalues();

  std::vector<int> index(static_cast<std::size_t>(n));
  std::iota(index.begin(), index.end(), 0);
  // Ties broken by index so the ordering is reproducible.
  std::stable_sort(index.begin(), index.end(), [&](int a, int b) {
    return values[a].real() < values[b].real();
  });

  EigenSolution sol;
  sol.length = hamiltonian.length;
  sol.order = hamiltonian.order;
  sol.trusted_count = hamiltonian.order / 2;
  sol.positions = hamiltonian.grid.scaled_nodes;
  sol.weights = clenshaw_curtis_weights(hamiltonian.grid);
  sol.spectral_range = values[index.back()].real() - values[index.front()].real();

  sol.energies.reserve(static_cast<std::size_t>(n_states));
  for (int k = 0; k < n_states; ++k) {
    const auto& value = values[index[k]];
    sol.energies.push_back(value.real());
    sol.max_imag = std::max(sol.max_imag, std::abs(value.imag()));
  }
  sol.imag_warning = sol.max_imag > options.imag_tolerance * sol.spectral_range;

  if (!options.compute_states) return sol;

  const auto& vectors = es.eigenvectors();
  const ProductQuadrature quadrature(hamiltonian.grid);
  for (int k = 0; k < n_states; ++k) {
    Eigen::VectorXd psi = Eigen::VectorXd::Zero(n + 2);
    psi.segment(1, n) = vectors.col(index[k]).real();
    const double norm = std::sqrt(quadrature(psi, psi));
    if (norm > 0.0) psi /= norm;
    fix_sign(psi);
    psi[0] = psi[n + 1] = 0.0;  // negation above leaves -0.0
    sol.parities.push_back(classify(psi, options.parity_tolerance));
    sol.states.push_back(std::move(psi));
  }

  // Partners of an unresolved pair are an arbitrary rotation of each other.
  for (int k = 0; k < n_states; ++k) {
    const double e = sol.energies[k];
    const double threshold = options.degeneracy_tolerance * std::abs(e);
    const double below = k > 0 ? e - sol.energies[k - 1]
                               : std::numeric_limits<double>::infinity();
    const double above = k + 1 < n
                             ? values[index[k + 1]].real() - e
                             : std::numeric_limits<double>::infinity();
    if (below < threshold || above < threshold) {
      sol.parities[k] = Parity::Mixed;
    }
  }
  return sol;
}

Eigen::MatrixXd overlap_matrix(const EigenSolution& solution) {
  const ProductQuadrature quadrature(build_grid(solution.order, solution.length));
  std::vector<Eigen::VectorXd> fine;
  fine.reserve(solution.states.size());
  for (const auto& psi : solution.states) fine.push_back(quadrature.refine(psi));
  const auto n = static_cast<Eigen::Index>(fine.size());
  Eigen::MatrixXd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      gram(i, j) = gram(j, i) = quadrature.refined_dot(fine[i], fine[j]);
    }
  }
  return gram;
}

EigenSolution solve(int order, double length, int n_states,
                    const AssembleOptions& assemble_options,
                    const EigensolveOptions& solve_options) {
  return eigensolve(assemble(order, length, assemble_options), n_states,
                    solve_options);
}

}  // namespace imagewell
