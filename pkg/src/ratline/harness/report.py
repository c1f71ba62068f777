"""Discrete error norms and convergence sweeps."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.integrate import trapezoid

from ..calculus import differentiate_osc
from ..cauchy import OscillatoryFunction
from ..mobius import MobiusMap
from .functions import TestFunction, approximate

__all__ = ["ErrorRecord", "ConvergenceReport", "error_report", "convergence_sweep"]

X_MAX = 60.0
POINTS = 4001


@dataclass(frozen=True)
class ErrorRecord:
    sup: float
    l2: float
    h1: float
    l1_derivative: float


@dataclass
class ConvergenceReport:
    """Error records per ``n`` and the local orders ``-d log(sup) / d log(n)``."""

    function: str
    beta: float
    n_values: np.ndarray
    errors: list = field(default_factory=list)
    fitted_orders: np.ndarray = field(default_factory=lambda: np.zeros(0))

    def __post_init__(self):
        self.n_values = np.asarray(self.n_values, dtype=int)
        if np.any(np.diff(self.n_values) <= 0):
            raise ValueError("n_values must be strictly increasing")

    @property
    def sup(self) -> np.ndarray:
        return np.array([e.sup for e in self.errors])

    def to_dict(self) -> dict:
        return {
            "meta": {"beta": self.beta, "n": self.n_values.tolist(), "function": self.function},
            "data": [
                {"n": int(n), **asdict(e)} for n, e in zip(self.n_values, self.errors)
            ],
            "fitted_orders": [float(o) for o in self.fitted_orders],
        }


def error_report(
    approx: OscillatoryFunction,
    reference: TestFunction,
    x_max: float = X_MAX,
    points: int = POINTS,
) -> ErrorRecord:
    """Errors of ``approx`` against ``reference`` on a uniform grid over ``[-x_max, x_max]``.

    ``l2``, ``h1`` and ``l1_derivative`` use the trapezoidal rule on the same
    grid.  The approximant is differentiated in coefficient space; the
    reference uses its exact derivative when it has one and
    ``numpy.gradient`` otherwise.
    """
    if points < 2:
        raise ValueError("points must be >= 2")
    x = np.linspace(-x_max, x_max, points)
    err = approx.evaluate(x) - reference.handle(x)
    if reference.exact_derivative is not None:
        dref = reference.exact_derivative(x)
    else:
        dref = np.gradient(reference.handle(x), x)
    derr = differentiate_osc(approx).evaluate(x) - dref
    l2sq = trapezoid(np.abs(err) ** 2, x)
    return ErrorRecord(
        sup=float(np.max(np.abs(err))),
        l2=float(np.sqrt(l2sq)),
        h1=float(np.sqrt(l2sq + trapezoid(np.abs(derr) ** 2, x))),
        l1_derivative=float(trapezoid(np.abs(derr), x)),
    )


def _orders(n_values, sup):
    logs = np.log(np.maximum(sup, np.finfo(float).tiny))
    return -np.diff(logs) / np.diff(np.log(n_values))


def convergence_sweep(
    reference: TestFunction,
    n_values,
    beta: float = 1.0,
    x_max: float = X_MAX,
    points: int = POINTS,
) -> ConvergenceReport:
    """Interpolate ``reference`` at every ``n`` and collect :func:`error_report` records."""
    n_values = np.asarray(n_values, dtype=int)
    if n_values.size == 0:
        raise ValueError("n_values must be nonempty")
    map = MobiusMap(beta)
    report = ConvergenceReport(reference.name, beta, n_values)
    for n in n_values:
        report.errors.append(error_report(approximate(reference, int(n), map), reference, x_max, points))
    report.fitted_orders = _orders(n_values, report.sup)
    return report
