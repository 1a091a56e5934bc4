"""2D complex orthogonal polynomials H_{n,m}^(beta)(z, zbar).

Closed polar form, exact monomial expansions, the measure-normalized family,
Ito's complex Hermite specialization, ladder-operator index maps, and the
exact differential action of the generalized Landau operator

    D_beta = -d^2/(dz dzbar) + zbar d/dzbar - (beta/z) d/dzbar,

which has eigenvalue m on H_{n,m}^(beta) whenever n >= m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .measures import GammaMeasure, MomentMeasure, gen_factorial, ortho_poly_phi, x_gen, zeta
from .specfun import laguerre, pochhammer

__all__ = [
    "ModeIndex",
    "PolyExpansion",
    "h_poly",
    "h_poly_expand",
    "p_norm",
    "ito_hermite",
    "ladder_apply",
    "landau_apply",
]


@dataclass(frozen=True)
class ModeIndex:
    """Index triple (n, m, beta) of a polynomial / coherent-state mode."""

    n: int
    m: int
    beta: float = 0.0

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError("mode indices must be non-negative")
        if self.beta < 0:
            raise ValueError("beta must be non-negative")


@dataclass(frozen=True)
class PolyExpansion:
    """Finite monomial expansion sum c_{ab} z^a zbar^b of a 2D polynomial.

    Every exponent pair satisfies a - b = n - m for the generating mode, and
    the coefficients of H_{n,m}^(beta) are real.  Instances are immutable
    after construction.
    """

    n: int
    m: int
    beta: float
    terms: tuple  # ((a, b), coefficient) pairs

    def coeffs(self) -> dict:
        return dict(self.terms)

    def evaluate(self, z) -> complex:
        # extended-precision accumulation: the monomials overshoot the value
        # by the Laguerre cancellation factor at the larger |z|
        z = np.clongdouble(complex(z))
        zc = np.conjugate(z)
        total = np.clongdouble(0.0)
        for (a, b), c in self.terms:
            total += c * z**a * zc**b
        return complex(total)


def h_poly(idx: ModeIndex, z):
    """H_{n,m}^(beta)(z, zbar) in the closed polar form.

        (-1)^(n^m) z^{n-m or 0} zbar^{m-n or 0} L_{n^m}^(|n-m|+beta)(z zbar)

    Satisfies h_poly(n, m, z) == conj(h_poly(m, n, z)); for z = 0 with n != m
    the value is the (vanishing) expansion limit.  ``z`` may be an ndarray.
    """
    n, m, beta = idx.n, idx.m, idx.beta
    z = np.asarray(z, dtype=complex)
    s = min(n, m)
    mono = z ** (n - s) * np.conjugate(z) ** (m - s)
    # Laguerre in extended precision: its alternating Horner sum is the only
    # cancellation-prone factor here
    u = np.asarray((z * np.conjugate(z)).real, dtype=np.longdouble)
    val = (-1.0) ** s * mono * laguerre(s, abs(n - m) + beta, u).astype(float)
    return val if val.ndim else val[()]


def h_poly_expand(idx: ModeIndex) -> PolyExpansion:
    """Exact monomial expansion of H_{n,m}^(beta).

    For n >= m the coefficient of z^{n-k} zbar^{m-k} is
        (-1)^k binom(m, k) (beta+1+n-k)_k / m!,   k = 0..m,
    and n < m follows by the conjugation symmetry (swap exponent roles).
    """
    n, m, beta = idx.n, idx.m, idx.beta
    big, small = max(n, m), min(n, m)
    terms = []
    fact = math.factorial(small)
    for k in range(small + 1):
        coeff = (-1.0) ** k * math.comb(small, k) * pochhammer(beta + 1.0 + big - k, k) / fact
        a, b = big - k, small - k
        if n < m:
            a, b = b, a
        terms.append(((a, b), coeff))
    return PolyExpansion(n=n, m=m, beta=beta, terms=tuple(terms))


def p_norm(idx: ModeIndex, z, measure: MomentMeasure | None = None):
    """Orthonormal polynomial P~_{n,m}^beta(z, zbar) for the given measure.

    P~ = z-monomial * phi_{n^m}(z zbar; |n-m|+beta) / sqrt(zeta_0(m+beta) x_{n,m}!);
    the builtin measure reduces to h_poly / sqrt(Gamma(beta+m+1) x_{n,m}!).
    """
    if measure is None:
        measure = GammaMeasure(beta=idx.beta)
    if abs(measure.beta - idx.beta) > 1e-12:
        raise ValueError("measure.beta and ModeIndex.beta disagree")
    n, m, beta = idx.n, idx.m, idx.beta
    s = min(n, m)
    z = np.asarray(z, dtype=complex)
    mono = z ** (n - s) * np.conjugate(z) ** (m - s)
    phi = ortho_poly_phi(measure, s, abs(n - m) + beta, (z * np.conjugate(z)).real)
    norm = math.sqrt(zeta(measure, 0, m + beta) * gen_factorial(measure, n, m))
    val = mono * phi / norm
    return val if val.ndim else val[()]


def ito_hermite(m: int, n: int, z) -> complex:
    """Ito's complex Hermite polynomial H_{m,n}(z, zbar) = (m^n)! H_{m,n}^(0).

    Direct double-binomial sum; orthogonal for the Gaussian weight on C.
    """
    if m < 0 or n < 0:
        raise ValueError("indices must be non-negative")
    z = complex(z)
    zc = z.conjugate()
    return sum(
        math.comb(m, k) * math.comb(n, k) * (-1.0) ** k * math.factorial(k) * z ** (m - k) * zc ** (n - k)
        for k in range(min(m, n) + 1)
    )


def ladder_apply(which: str, idx: ModeIndex, measure: MomentMeasure | None = None):
    """Apply a ladder operator to a mode index.

    Returns (coefficient, target ModeIndex) or (0.0, None) when annihilated.
    The second pair uses the swapped-index coefficients sqrt(x_{m,n}) /
    sqrt(x_{m+1,n}); see the eigenvalue comparison report for the bookkeeping
    discrepancy this convention introduces.
    """
    if measure is None:
        measure = GammaMeasure(beta=idx.beta)
    n, m = idx.n, idx.m
    if which == "lower1":
        if n == 0:
            return 0.0, None
        return math.sqrt(x_gen(measure, n, m)), ModeIndex(n - 1, m, idx.beta)
    if which == "raise1":
        return math.sqrt(x_gen(measure, n + 1, m)), ModeIndex(n + 1, m, idx.beta)
    if which == "lower2":
        if m == 0:
            return 0.0, None
        return math.sqrt(x_gen(measure, m, n)), ModeIndex(n, m - 1, idx.beta)
    if which == "raise2":
        return math.sqrt(x_gen(measure, m + 1, n)), ModeIndex(n, m + 1, idx.beta)
    raise ValueError(f"unknown ladder operator {which!r}")


def landau_apply(beta: float, expansion: PolyExpansion, z) -> complex:
    """Exact action of the generalized Landau operator on a monomial expansion.

    On a monomial z^a zbar^b the operator gives
        b z^a zbar^b - b (a + beta) z^{a-1} zbar^{b-1},
    so the value is assembled term-wise with no numerical differencing.
    Requires z != 0 when a 1/z term survives (a = 0, b >= 1, beta != 0).
    """
    z = complex(z)
    zc = z.conjugate()
    total = 0.0 + 0.0j
    for (a, b), c in expansion.terms:
        if b == 0:
            continue
        total += c * b * z**a * zc**b
        factor = b * (a + beta)
        if factor != 0.0:
            if a == 0 and z == 0:
                raise ZeroDivisionError("landau_apply at z=0 with a surviving 1/z term")
            total -= c * factor * z ** (a - 1) * zc ** (b - 1)
    return total
