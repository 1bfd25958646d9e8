import math

import numpy as np
import pytest

import imagewell as iw


def test_convergence_matches_table():
    t = iw.convergence_table()
    values = [p for _, p in t["rows"]]
    assert values == pytest.approx([-0.6925809270, -0.6931409927, -0.6931471181], abs=1e-9)
    assert t["closed_form"] == pytest.approx(-math.log(2.0), rel=1e-13)


def test_potential_is_vectorized():
    x = np.linspace(0.1, 0.9, 9)
    v = iw.potential_closed(x, 1.0)
    assert v.shape == (9,)
    np.testing.assert_allclose(v, v[::-1], rtol=1e-13)
    assert np.all(iw.potential_first_image(x, 1.0) < v)


def test_digamma():
    assert iw.digamma(1.0) == pytest.approx(-iw.EULER_GAMMA, abs=1e-12)
    with pytest.raises(ValueError):
        iw.digamma(-2.0)


def test_solve_low_levels():
    sol = iw.solve(100, 1.0, n_states=3)
    assert sol.energies[0] == pytest.approx(4.0122415062, rel=1e-8)
    assert len(sol.states) == 3
    assert len(sol.x) == 101
    assert [str(p) for p in sol.parities] == ["Parity.Even", "Parity.Odd", "Parity.Even"]
    gram = iw.overlap_matrix(sol)
    np.testing.assert_allclose(gram, np.eye(3), atol=1e-10)
    assert iw.quantum_defect(sol.energies[0], 1, 1.0) == pytest.approx(0.0983071, abs=1e-6)


def test_operators_and_eigensolve():
    d = iw.first_derivative_matrix(16, 2.0)
    grid = iw.build_grid(16, 2.0)
    x = np.array(grid.scaled_nodes)
    np.testing.assert_allclose(d @ x**3, 3 * x**2, atol=1e-10)
    h = iw.assemble(40, 2.0, potential="zero")
    sol = iw.eigensolve(h, 40, 2.0, 2)
    assert sol.energies[0] == pytest.approx(iw.pib_energy(1, 2.0), rel=1e-10)
    assert sum(iw.clenshaw_curtis_weights(40, 2.0)) == pytest.approx(2.0)


def test_sweeps():
    rows = iw.energy_sweep([1.0, 2.0], n_states=2, M=48)
    assert [r[0] for r in rows] == [1.0, 2.0]
    split = iw.splitting_sweep([20.0, 30.0])
    assert split[0]["dE_numeric"] > split[1]["dE_numeric"] > 0
    assert split[0]["M"] == 100


def test_domain_errors():
    with pytest.raises(ValueError):
        iw.solve(4, 1.0, n_states=5)
    with pytest.raises(ValueError):
        iw.potential_closed(1.5, 1.0)
