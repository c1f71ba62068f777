"""Rational spectral approximation on the real line.

Functions are interpolated in the basis ``R_j(x) = M(x)^j - 1`` with
``M(x) = (x - i beta) / (x + i beta)``; Cauchy transforms, Fourier
transforms and derivatives act on the coefficients in closed form.
"""
from .approx import RationalExpansion, coefficient, evaluate, interpolate, sample_nodes
from .calculus import (
    FourierWeightTable,
    differentiate,
    differentiate_osc,
    fourier_transform,
    fourier_weight,
    fourier_weights,
    quadrature_nodes,
    quadrature_weights,
)
from .cauchy import (
    OscillatoryFunction,
    StabilityWarning,
    cauchy_apply,
    cauchy_basis,
    cauchy_offaxis,
    eta_coeff,
    eta_table,
    gamma_paper,
)
from .kernels import BACKEND
from .mobius import (
    INFINITY,
    MobiusMap,
    PoleError,
    basis_r,
    basis_rjk,
    circle_to_line,
    line_to_circle,
    mobius,
    product_reduce,
)
from .specfun import binomial, kummer_terminating, laguerre
from .trig import (
    QuadratureError,
    TrigCoefficients,
    TrigGrid,
    dft,
    dirichlet_kernel,
    fourier_coefficient_oracle,
    kernel_norm,
    lebesgue_constant,
    lebesgue_function,
    trig_eval,
)

__version__ = "0.1.0"
