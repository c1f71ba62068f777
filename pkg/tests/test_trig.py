import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ratline import (
    QuadratureError,
    TrigCoefficients,
    TrigGrid,
    dft,
    dirichlet_kernel,
    fourier_coefficient_oracle,
    kernel_norm,
    lebesgue_constant,
    trig_eval,
)


def literal_kernel(n, theta, order=0):
    """Finite sum in extended precision on angles reduced to [-pi, pi)."""
    t = np.remainder(np.asarray(theta, dtype=np.longdouble) + np.pi, 2 * np.pi) - np.pi
    ks = np.arange(-((n - 1) // 2), n // 2 + 1).astype(np.longdouble)
    ph = np.exp(1j * np.multiply.outer(t, ks).astype(np.clongdouble))
    return (ph * (1j * ks) ** order).sum(axis=-1).astype(complex)


@given(st.integers(1, 4096))
def test_grid_counts(n):
    g = TrigGrid(n)
    assert g.n_plus + g.n_minus + 1 == n
    assert np.all(np.diff(g.nodes) > 0)
    assert g.nodes[0] == 0 and g.nodes[-1] < 2 * np.pi
    assert g.modes.size == n


@pytest.mark.parametrize("bad", [0, -3, 2.5])
def test_grid_rejects(bad):
    with pytest.raises(ValueError):
        TrigGrid(bad)


def test_dft_examples():
    g = TrigGrid(8)
    c = dft(g, np.ones(8))
    assert c[0] == pytest.approx(1)
    assert np.allclose([c[k] for k in g.modes if k != 0], 0, atol=1e-15)
    c1 = dft(g, np.exp(1j * g.nodes))
    assert c1[1] == pytest.approx(1)
    assert abs(c1[0]) < 1e-15
    alias = dft(g, np.exp(1j * 9 * g.nodes))
    assert np.allclose(alias.coeffs, c1.coeffs, atol=1e-14)


def test_dft_length_mismatch():
    with pytest.raises(ValueError):
        dft(TrigGrid(8), np.ones(7))


def test_trig_eval_examples():
    g = TrigGrid(8)
    assert trig_eval(dft(g, np.ones(8)), 1.234) == pytest.approx(1)
    coeffs = np.zeros(8, dtype=complex)
    coeffs[1 + g.n_minus] = 1
    assert trig_eval(TrigCoefficients(g, coeffs), np.pi / 2) == pytest.approx(1j)


def test_trig_eval_smooth_periodic_at_nodes():
    g = TrigGrid(64)
    s2 = np.sin(g.nodes[1:] / 2) ** 2
    samples = np.concatenate([[0.0], np.exp(-1 / s2)])
    back = trig_eval(dft(g, samples), g.nodes)
    assert np.max(np.abs(back - samples)) <= 1e-13 * np.max(np.abs(samples))


@pytest.mark.parametrize("n", [2, 3, 17, 64, 255, 1024])
def test_roundtrip(n, rng):
    g = TrigGrid(n)
    s = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    back = trig_eval(dft(g, s), g.nodes)
    assert np.max(np.abs(back - s)) <= 1e-12 * np.max(np.abs(s))


@pytest.mark.parametrize("n", [7, 8])
@pytest.mark.parametrize("mult", [1, 2, 3])
def test_aliasing(n, mult):
    g = TrigGrid(n)
    for j in range(-g.n_minus, g.n_plus + 1):
        a = dft(g, np.exp(1j * (j + mult * n) * g.nodes))
        b = dft(g, np.exp(1j * j * g.nodes))
        assert np.allclose(a.coeffs, b.coeffs, atol=1e-12)


def test_dirichlet_examples():
    assert dirichlet_kernel(5, 0.0) == pytest.approx(5)
    assert abs(dirichlet_kernel(5, 2 * np.pi * 2 / 5)) < 1e-14
    assert abs(dirichlet_kernel(4, np.pi)) < 1e-14
    with pytest.raises(ValueError):
        dirichlet_kernel(4, 0.0, order=2)


@pytest.mark.parametrize("n", [1, 2, 5, 8, 63, 64, 256])
@pytest.mark.parametrize("order", [0, 1])
def test_dirichlet_closed_form_matches_sum(n, order, rng):
    theta = np.concatenate([rng.uniform(-10, 10, 1000), [0.0, 2 * np.pi, 1e-9, -1e-5]])
    err = np.abs(dirichlet_kernel(n, theta, order) - literal_kernel(n, theta, order))
    # D_n' reaches ~n^2/4, where one ulp already exceeds 1e-12
    assert np.max(err) <= 1e-12 * max(1, n**2 / 4) ** order


def test_kernel_norm_examples():
    assert kernel_norm(1, 1) == pytest.approx(2 * np.pi, rel=1e-10)
    # Parseval: ||D_n||_2^2 = 2 pi n and ||D_n'||_2^2 = 2 pi sum k^2
    assert kernel_norm(16, 2) == pytest.approx(np.sqrt(2 * np.pi * 16), rel=1e-6)
    ks = np.arange(-7, 9)
    assert kernel_norm(16, 2, 1) == pytest.approx(np.sqrt(2 * np.pi * np.sum(ks**2)), rel=1e-6)
    with pytest.raises(ValueError):
        kernel_norm(8, 0.5)


def test_lebesgue_constant_examples():
    assert lebesgue_constant(1) == pytest.approx(1)
    assert lebesgue_constant(2) >= 1
    vals = [lebesgue_constant(n) for n in (8, 16, 32, 64)]
    assert np.all(np.diff(vals) > 0)


def test_fourier_coefficient_oracle_examples():
    one = lambda t: np.ones_like(t)  # noqa: E731
    assert fourier_coefficient_oracle(one, 0) == pytest.approx(1)
    assert abs(fourier_coefficient_oracle(one, 3)) < 1e-12
    assert fourier_coefficient_oracle(lambda t: np.exp(2j * t), 2) == pytest.approx(1)


def test_oracle_shows_aliasing():
    # F has Fourier coefficients a^|k|; the DFT sums the aliases
    a, n = 0.3, 8
    F = lambda t: (1 - a**2) / (1 - 2 * a * np.cos(t) + a**2)  # noqa: E731
    g = TrigGrid(n)
    c = dft(g, F(g.nodes))
    for k in (0, 1, 3):
        aliased = sum(fourier_coefficient_oracle(F, k + m * n) for m in range(-3, 4))
        assert c[k] == pytest.approx(aliased, abs=1e-9)


def test_oracle_failure_raises():
    with pytest.raises(QuadratureError):
        fourier_coefficient_oracle(lambda t: 1 / np.abs(np.sin(t)) ** 0.999, 0, tol=1e-14)
