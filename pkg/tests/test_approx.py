import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratline import (
    INFINITY,
    MobiusMap,
    PoleError,
    RationalExpansion,
    basis_r,
    coefficient,
    evaluate,
    interpolate,
    sample_nodes,
)

from .conftest import gaussian


def test_interpolation_at_nodes(unit_map):
    e = interpolate(gaussian, 0.0, 64, unit_map)
    x = sample_nodes(64, unit_map)
    assert np.max(np.abs(evaluate(e, x) - gaussian(x))) <= 1e-12


def test_coefficient_sum_is_limit(unit_map):
    e = interpolate(gaussian, 0.0, 64, unit_map)
    assert abs(e.coeffs.sum()) <= 1e-13
    e2 = interpolate(lambda x: gaussian(x) + 0.5, 0.5, 33, unit_map)
    assert e2.coeffs.sum() == pytest.approx(0.5, abs=1e-13)
    # evaluation drops the constant
    x = sample_nodes(33, unit_map)
    assert np.allclose(e2(x), gaussian(x), atol=1e-12)


def test_basis_element_reproduced(unit_map):
    e = interpolate(lambda x: basis_r(unit_map, 1, x), 0.0, 8, unit_map)
    expected = {1: 1.0}
    for j in e.indices:
        assert abs(coefficient(e, int(j)) - expected.get(int(j), 0)) <= 1e-13
    # the stored constant slot keeps the coefficient sum equal to the limit
    assert abs(e.coeffs.sum()) <= 1e-13


def test_index_range_convention(unit_map):
    for n, lo, hi in [(8, -3, 4), (7, -3, 3), (2, 0, 1)]:
        e = interpolate(gaussian, 0.0, n, unit_map)
        assert (e.j_min, e.j_max) == (lo, hi)


def test_requires_n(unit_map):
    with pytest.raises(ValueError):
        interpolate(gaussian, 0.0, 1, unit_map)
    with pytest.raises(TypeError):
        interpolate(gaussian)


def test_evaluate_examples(unit_map):
    e = RationalExpansion.from_dict(unit_map, {1: 1.0})
    assert evaluate(e, 0.0) == pytest.approx(-2)
    assert evaluate(e, INFINITY) == 0
    g = interpolate(gaussian, 0.0, 128, unit_map)
    assert abs(evaluate(g, 0.37) - gaussian(0.37)) <= 1e-10


def test_failure_of_f_propagates(unit_map):
    def bad(x):
        raise RuntimeError("boom")

    with pytest.raises(RuntimeError):
        interpolate(bad, 0.0, 8, unit_map)


def test_offaxis_matches_basis(unit_map, rng):
    c = {j: complex(rng.standard_normal(), rng.standard_normal()) for j in range(-6, 7) if j}
    e = RationalExpansion.from_dict(unit_map, c)
    for z in (0.3 + 0.4j, -2 - 0.1j, 5j, 1.2):
        ref = sum(a * basis_r(unit_map, j, z) for j, a in c.items())
        assert evaluate(e, z) == pytest.approx(ref, rel=1e-12, abs=1e-12)


def test_offaxis_poles(unit_map):
    e = RationalExpansion.from_dict(unit_map, {2: 1.0})
    with pytest.raises(PoleError):
        evaluate(e, -1j)
    assert evaluate(e, 1j) == pytest.approx(-1)
    with pytest.raises(PoleError):
        evaluate(RationalExpansion.from_dict(unit_map, {-1: 1.0}), 1j)


def test_coefficient_accessor(unit_map):
    e = RationalExpansion.from_dict(unit_map, {1: 1.0})
    assert coefficient(e, 1) == 1
    assert coefficient(e, 5) == 0
    assert coefficient(e, -1) == 0
    c = RationalExpansion(unit_map, -1, np.array([0.5, -1.0, 1.0]))
    assert coefficient(c, 0) == 0
    assert c.coefficient(0) == -1


def test_expansion_validation(unit_map):
    with pytest.raises(ValueError):
        RationalExpansion(unit_map, 1, np.ones(3))
    with pytest.raises(ValueError):
        RationalExpansion(unit_map, -5, np.ones(3))
    e = RationalExpansion(unit_map, 0, np.ones(2))
    with pytest.raises(ValueError):
        e.coeffs[0] = 2


def test_arithmetic(unit_map):
    a = RationalExpansion.from_dict(unit_map, {1: 1.0, -2: 2.0})
    b = RationalExpansion.from_dict(unit_map, {3: 1j})
    s = a + 2 * b - a
    assert s.coefficient(3) == 2j and s.coefficient(1) == 0
    with pytest.raises(ValueError):
        a + RationalExpansion.from_dict(MobiusMap(2.0), {1: 1})


def test_json_roundtrip(unit_map, rng):
    e = interpolate(lambda x: gaussian(x) * np.exp(1j * x), 0.0, 37, MobiusMap(0.75))
    back = RationalExpansion.loads(e.dumps())
    assert back.equals(e)
    d = json.loads(e.dumps())
    assert set(d) == {"beta", "j_min", "j_max", "coeffs"}
    d["j_max"] += 1
    with pytest.raises(ValueError):
        RationalExpansion.from_json_dict(d)


@pytest.mark.parametrize("n", [8, 16, 64, 256, 512])
def test_node_interpolation_sweep(n):
    m = MobiusMap(1.0)
    f = lambda x: 1 / (1 + x**2) * np.cos(x)  # noqa: E731
    e = interpolate(f, 0.0, n, m)
    x = sample_nodes(n, m)
    assert np.max(np.abs(e(x) - f(x))) <= 1e-11 * (1 + np.max(np.abs(f(x))))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 300), st.complex_numbers(max_magnitude=10), st.complex_numbers(max_magnitude=10))
def test_linearity(n, a, b):
    m = MobiusMap(1.3)
    f, g = gaussian, lambda x: 1 / (x + 1j)
    lhs = interpolate(lambda x: a * f(x) + b * g(x), 0.0, n, m)
    rhs = a * interpolate(f, 0.0, n, m) + b * interpolate(g, 0.0, n, m)
    assert np.allclose(lhs.coeffs, rhs.coeffs, atol=1e-13 * (1 + abs(a) + abs(b)))


@settings(max_examples=50)
@given(st.lists(st.complex_numbers(max_magnitude=5), min_size=1, max_size=20), st.floats(-1e3, 1e3))
def test_evaluation_bound(coeffs, x):
    e = RationalExpansion(MobiusMap(1.0), -(len(coeffs) // 2), np.array(coeffs))
    assert abs(e(x)) <= 2 * np.sum(np.abs(coeffs)) + 1e-12


def test_spectral_coefficient_decay():
    m = MobiusMap(1.0)
    tails = []
    ns = [16, 32, 64, 128, 256, 512]
    for n in ns:
        e = interpolate(gaussian, 0.0, n, m)
        tails.append(np.max(np.abs(e.coeffs[np.abs(e.indices) >= n // 4])))
    slopes = -np.diff(np.log(tails)) / np.diff(np.log(ns))
    # faster than any fixed power: the local order keeps growing
    assert np.all(np.diff(slopes) > 0)
