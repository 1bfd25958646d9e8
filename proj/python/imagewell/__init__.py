"""Eigenstates of an electron confined between two grounded conducting planes."""

from ._core import (
    EULER_GAMMA,
    Construction,
    EigenSolution,
    Parity,
    SolverError,
    __version__,
    analytic_splitting,
    assemble,
    build_grid,
    clenshaw_curtis_weights,
    convergence_table,
    defect_table,
    digamma,
    eigensolve,
    energy_sweep,
    first_derivative_matrix,
    image_state_energy,
    overlap_matrix,
    pib_energy,
    potential_closed,
    potential_first_image,
    potential_series,
    quantum_defect,
    second_derivative_interior,
    single_plane_ground,
    solve,
    splitting_sweep,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
