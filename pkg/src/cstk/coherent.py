"""Coherent-state coefficients, normalizations, overlaps, reproducing kernel
and resolution-of-identity densities for the builtin measure r^beta e^{-r} dr.

Conventions.  The unnormalized coefficient of the n-th basis vector in the
fixed-m state at z is

    c_n(z) = conj(H_{n,m}^(beta)(z, zbar)) * sqrt((n^m)! / Gamma(beta+n v m+1)),

and norm_series returns N = sum |c_n|^2, so states divided by sqrt(N) have
unit norm.  At m=0 the total normalization S(t) = sum t^n/(beta+1)_n equals
Gamma(beta+1) * N; both conventions in circulation differ exactly by that
Gamma(beta+1) factor.  The resolution density is reported as
eta_density = N(z zbar) (z zbar)^beta e^{-z zbar}, the Radon-Nikodym factor
against Lebesgue measure with the 1/pi angular normalization left to the
quadrature side.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError
from .poly2d import ModeIndex, h_poly
from .specfun import DEFAULT_CONTROL, SeriesControl, gamma_fn, hyp_pfq, laguerre, pochhammer

__all__ = [
    "CoherentSpec",
    "gnlcs_coeff",
    "norm_series",
    "norm_closed_m0",
    "overlap_closed",
    "overlap_series",
    "kernel_K",
    "eta_density",
]


@dataclass(frozen=True)
class CoherentSpec:
    """Point + parameters of one generalized nonlinear coherent state."""

    z: complex
    idx_m: int = 0
    beta: float = 0.0
    truncation: SeriesControl = field(default_factory=SeriesControl)

    def __post_init__(self):
        if self.idx_m < 0:
            raise ValueError("idx_m must be non-negative")
        if self.beta < 0:
            raise ValueError("beta must be non-negative")


def gnlcs_coeff(n: int, spec: CoherentSpec) -> complex:
    """Unnormalized coefficient of basis vector n in the state at spec.z.

    At m=0 this reduces to zbar^n / sqrt((beta+1)_n Gamma(beta+1)).
    """
    m, beta = spec.idx_m, spec.beta
    h = h_poly(ModeIndex(n, m, beta), spec.z)
    scale = math.sqrt(math.factorial(min(n, m)) / gamma_fn(beta + max(n, m) + 1.0))
    return complex(h).conjugate() * scale


def norm_series(spec: CoherentSpec) -> float:
    """Squared norm N of the unnormalized coefficient vector (direct series)."""
    ctl = spec.truncation
    total = 0.0
    comp = 0.0
    prev = math.inf
    for n in range(ctl.max_terms + 1):
        term = abs(gnlcs_coeff(n, spec)) ** 2
        y = term - comp
        s = total + y
        comp = (s - total) - y
        total = s
        if n >= max(2, spec.idx_m + 2) and term <= ctl.rel_tol * total and prev <= ctl.rel_tol * total:
            return total
        prev = term
    raise ConvergenceError(f"norm_series not converged in {ctl.max_terms} terms")


def norm_closed_m0(beta: float, t: float, ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Total m=0 normalization S(t) = sum_n t^n / (beta+1)_n.

    Equals e^t 1F1(beta; beta+1; -t) and Gamma(beta+1) E_{1,beta+1}(t); the
    state built with coefficients zbar^n/sqrt((beta+1)_n) has norm S(t)^{1/2}.
    """
    total = 0.0
    comp = 0.0
    term = 1.0
    prev = math.inf
    for n in range(ctl.max_terms + 1):
        y = term - comp
        s = total + y
        comp = (s - total) - y
        total = s
        if n >= 2 and term <= ctl.rel_tol * abs(total) and prev <= ctl.rel_tol * abs(total):
            return total
        prev = term
        term *= t / (beta + 1.0 + n)
    raise ConvergenceError(f"norm_closed_m0 not converged in {ctl.max_terms} terms")


def _overlap_bracket(z: complex, w: complex, m: int, beta: float, ctl: SeriesControl) -> complex:
    """Closed form of sum_n (n^m)!/Gamma(beta+n v m+1) H_{n,m}(z) conj(H_{n,m}(w)).

    Finite Laguerre product sum over n < m plus the double 2F2 sum.
    """
    zz = (z * z.conjugate()).real
    ww = (w * w.conjugate()).real
    zw = z * w.conjugate()
    total = 0.0 + 0.0j
    gm = gamma_fn(beta + m + 1.0)
    for j in range(m):
        total += (
            math.factorial(j)
            * (z.conjugate() * w) ** (m - j)
            / gm
            * laguerre(j, beta + m - j, zz)
            * laguerre(j, beta + m - j, ww)
        )
    front = pochhammer(beta + 1.0, m) / (math.factorial(m) * gamma_fn(beta + 1.0))
    second = 0.0 + 0.0j
    for k in range(m + 1):
        for el in range(m + 1):
            coeff = (
                pochhammer(-float(m), k)
                * pochhammer(-float(m), el)
                * zz**k
                * ww**el
                / (math.factorial(k) * math.factorial(el) * pochhammer(beta + 1.0, k) * pochhammer(beta + 1.0, el))
            )
            second += coeff * hyp_pfq([1.0, m + beta + 1.0], [k + beta + 1.0, el + beta + 1.0], zw, ctl)
    return total + front * second


def overlap_closed(z: complex, w: complex, m: int, beta: float, ctl: SeriesControl = DEFAULT_CONTROL) -> complex:
    """Normalized overlap of the states at z and w (closed 2F2 form).

    The diagonal overlap is exactly 1 by construction of the normalization.
    """
    z = complex(z)
    w = complex(w)
    bracket = _overlap_bracket(z, w, m, beta, ctl)
    nz = _overlap_bracket(z, z, m, beta, ctl).real
    nw = _overlap_bracket(w, w, m, beta, ctl).real
    return bracket / math.sqrt(nz * nw)


def overlap_series(z: complex, w: complex, m: int, beta: float, ctl: SeriesControl = DEFAULT_CONTROL) -> complex:
    """Normalized overlap by brute coefficient summation (oracle route)."""
    spec_z = CoherentSpec(z=complex(z), idx_m=m, beta=beta, truncation=ctl)
    spec_w = CoherentSpec(z=complex(w), idx_m=m, beta=beta, truncation=ctl)
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    prev = math.inf
    nz = norm_series(spec_z)
    nw = norm_series(spec_w)
    scale = math.sqrt(nz * nw)
    for n in range(ctl.max_terms + 1):
        term = gnlcs_coeff(n, spec_z).conjugate() * gnlcs_coeff(n, spec_w)
        y = term - comp
        s = total + y
        comp = (s - total) - y
        total = s
        mag = abs(term) / scale
        if n >= max(2, m + 2) and mag <= ctl.rel_tol and prev <= ctl.rel_tol:
            return total / scale
        prev = mag
    raise ConvergenceError(f"overlap_series not converged in {ctl.max_terms} terms")


def _bracket_diag(t, m: int, beta: float, ctl: SeriesControl = DEFAULT_CONTROL):
    """Diagonal closed-form bracket N_{beta,m}(t) at t = z zbar (vectorized)."""
    t = np.asarray(t, dtype=float)
    total = np.zeros_like(t)
    gm = gamma_fn(beta + m + 1.0)
    for j in range(m):
        total += math.factorial(j) * t ** (m - j) / gm * laguerre(j, beta + m - j, t) ** 2
    front = pochhammer(beta + 1.0, m) / (math.factorial(m) * gamma_fn(beta + 1.0))
    second = np.zeros_like(t)
    for k in range(m + 1):
        for el in range(m + 1):
            coeff = (
                pochhammer(-float(m), k)
                * pochhammer(-float(m), el)
                / (math.factorial(k) * math.factorial(el) * pochhammer(beta + 1.0, k) * pochhammer(beta + 1.0, el))
            )
            second += coeff * t ** (k + el) * hyp_pfq([1.0, m + beta + 1.0], [k + beta + 1.0, el + beta + 1.0], t, ctl).real
    out = total + front * second
    return out if out.ndim else float(out)


def kernel_K(z: complex, w: complex, beta: float, ctl: SeriesControl = DEFAULT_CONTROL) -> complex:
    """Reproducing kernel K_beta(z, w) = e^{z wbar} 1F1(beta; beta+1; -z wbar) / Gamma(beta+1)."""
    zw = complex(z) * complex(w).conjugate()
    return cmath.exp(zw) * hyp_pfq([beta], [beta + 1.0], -zw, ctl) / gamma_fn(beta + 1.0)


def eta_density(z: complex, m: int, beta: float, ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Density of the resolution-of-identity measure against Lebesgue dnu / pi.

    eta(z) = N_{beta,m}(z zbar) (z zbar)^beta e^{-z zbar}, evaluated through
    the closed Laguerre + 2F2 bracket (so its positivity is a genuine check,
    not a tautology of the series form).  At m=0 this is exactly
    1F1(beta; beta+1; -z zbar) (z zbar)^beta / Gamma(beta+1).
    """
    z = complex(z)
    t = (z * z.conjugate()).real
    bracket = _overlap_bracket(z, z, m, beta, ctl).real
    return bracket * t**beta * math.exp(-t)
