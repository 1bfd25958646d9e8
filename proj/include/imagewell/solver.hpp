#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "imagewell/spectral.hpp"

namespace imagewell {

/// Potential energy at distance x in (0, L) from the left plate.
using PotentialFunction = std::function<double(double x, double length)>;

/// V = 0 everywhere: turns the Hamiltonian into a plain particle in a box.
double zero_potential(double x, double length);

struct AssembleOptions {
  Construction construction = Construction::SquaredFirst;
  PotentialFunction potential;  // empty selects potential_closed
};

/// H = -1/2 D2_interior + diag(V) on the interior Chebyshev nodes.
///
/// Grid coordinates live on [-L/2, L/2]; the potential is evaluated at
/// x + L/2, i.e. with reduced position a = x / L + 1/2.
struct SpectralHamiltonian {
  Eigen::MatrixXd matrix;
  ChebyshevGrid grid;
  double length = 0.0;
  int order = 0;
};

/// Requires order >= 4 and length > 0 (std::domain_error otherwise).
SpectralHamiltonian assemble(int order, double length,
                             const AssembleOptions& options = {});

enum class Parity { Even, Odd, Mixed };

const char* to_string(Parity parity);

/// Eigenpairs of a spectral Hamiltonian, lowest first.
///
/// states[k] holds M + 1 values on the full grid (same order as
/// grid.scaled_nodes, descending x) with exact zeros at both plates. Each
/// state has unit norm under ProductQuadrature (Clenshaw-Curtis on the
/// order-2M grid) and its first component exceeding 1e-8 of the peak
/// magnitude is positive.
struct EigenSolution {
  double length = 0.0;
  int order = 0;
  std::vector<double> energies;
  std::vector<Eigen::VectorXd> states;
  std::vector<Parity> parities;
  std::vector<double> positions;  // scaled grid nodes, descending
  std::vector<double> weights;    // order-M Clenshaw-Curtis weights on positions
  double max_imag = 0.0;          // largest |Im E| among the kept eigenvalues
  double spectral_range = 0.0;    // max Re E - min Re E over the full spectrum
  bool imag_warning = false;      // max_imag > imag_tolerance * spectral_range
  int trusted_count = 0;          // floor(M / 2)

  [[nodiscard]] int state_count() const {
    return static_cast<int>(energies.size());
  }
};

struct EigensolveOptions {
  // Eigenvectors are skipped (states, parities left empty) when false.
  bool compute_states = true;
  double imag_tolerance = 1e-8;
  double parity_tolerance = 1e-6;
  double degeneracy_tolerance = 1e-12;
};

/// Raised when the QR iteration fails to converge.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, int matrix_size, int max_iterations)
      : std::runtime_error(what),
        matrix_size_(matrix_size),
        max_iterations_(max_iterations) {}

  [[nodiscard]] int matrix_size() const { return matrix_size_; }
  [[nodiscard]] int max_iterations() const { return max_iterations_; }

 private:
  int matrix_size_;
  int max_iterations_;
};

/// Dense real nonsymmetric eigendecomposition (Hessenberg reduction and
/// shifted QR) of H, keeping the n_states eigenvalues with smallest real
/// part. Requires 1 <= n_states <= M - 1 (std::domain_error otherwise).
///
/// Parity is decided by comparing psi(x) with +-psi(-x) relative to the
/// peak magnitude. Members of a pair closer than degeneracy_tolerance * |E|
/// are reported as Mixed since the solver may return any rotation of them.
EigenSolution eigensolve(const SpectralHamiltonian& hamiltonian, int n_states,
                         const EigensolveOptions& options = {});

/// assemble followed by eigensolve.
EigenSolution solve(int order, double length, int n_states,
                    const AssembleOptions& assemble_options = {},
                    const EigensolveOptions& solve_options = {});

/// Order-M Clenshaw-Curtis sum of lhs * rhs on the collocation nodes. The
/// rule aliases the degree-2M product, so overlaps of highly excited states
/// come out at the 1e-7 level even when the states are orthogonal.
double inner_product(std::span<const double> weights,
                     const Eigen::VectorXd& lhs, const Eigen::VectorXd& rhs);

/// Gram matrix of the solution's states under ProductQuadrature.
Eigen::MatrixXd overlap_matrix(const EigenSolution& solution);

}  // namespace imagewell
