"""Quadrature rules: generalized Gauss-Laguerre and Gauss-Hermite via
Golub-Welsch, the polar product rule on C for the weight (z zbar)^beta
e^{-z zbar}, and an adaptive truncated rule for general line weights."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import ConvergenceError
from .specfun import gamma_fn

__all__ = ["QuadratureRule", "gauss_laguerre", "gauss_hermite", "polar_rule", "adaptive_line"]


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes/weights with a domain descriptor.

    kind is one of 'half_line', 'real_line', 'polar', 'truncated_line'.
    For 'polar' the nodes are (r, theta) pairs of shape (N, 2); otherwise a
    flat array of abscissae.  Weights are strictly positive and sum to the
    total mass of the underlying weight function.
    """

    kind: str
    nodes: np.ndarray
    weights: np.ndarray
    alpha: float = 0.0
    meta: dict = field(default_factory=dict)

    @property
    def mass(self) -> float:
        return float(np.sum(self.weights))

    def complex_points(self) -> np.ndarray:
        """Polar nodes as complex numbers r e^{i theta}."""
        if self.kind != "polar":
            raise ValueError("complex_points only defined for polar rules")
        r = self.nodes[:, 0]
        th = self.nodes[:, 1]
        return r * np.exp(1j * th)

    def integrate(self, f) -> complex:
        """Apply the rule to a callable (vectorized over node arrays)."""
        pts = self.complex_points() if self.kind == "polar" else self.nodes
        vals = np.asarray(f(pts))
        return complex(np.sum(self.weights * vals))


def gauss_laguerre(n: int, alpha: float) -> QuadratureRule:
    """Generalized Gauss-Laguerre rule for the weight u^alpha e^{-u} on (0, inf).

    Golub-Welsch on the Jacobi matrix of the known three-term recurrence:
    diagonal 2k+alpha+1, off-diagonal sqrt(k(k+alpha)).  Exact for
    polynomials of degree <= 2n-1.
    """
    if n < 1:
        raise ValueError("need at least one node")
    if alpha <= -1.0:
        raise ValueError("alpha must exceed -1")
    diag = 2.0 * np.arange(n) + alpha + 1.0
    k = np.arange(1, n)
    off = np.sqrt(k * (k + alpha))
    try:
        nodes = eigh_tridiagonal(diag, off, eigvals_only=True)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceError("Jacobi matrix eigen-decomposition failed") from exc
    weights = _christoffel_weights(nodes, diag, off, gamma_fn(alpha + 1.0))
    return QuadratureRule("half_line", nodes, weights, alpha=alpha)


def _christoffel_weights(nodes: np.ndarray, diag: np.ndarray, off: np.ndarray, mass: float) -> np.ndarray:
    """Gauss weights 1 / sum_k p_k(x_i)^2 from the orthonormal recurrence.

    Strictly positive by construction, unlike squared eigenvector components
    which can underflow to exact zero at the extreme nodes of large rules.
    """
    n = len(diag)
    p_prev = np.zeros_like(nodes)
    p = np.full_like(nodes, 1.0 / math.sqrt(mass))
    total = p * p
    for k in range(n - 1):
        p, p_prev = ((nodes - diag[k]) * p - (off[k - 1] if k >= 1 else 0.0) * p_prev) / off[k], p
        total += p * p
    return 1.0 / total


def gauss_hermite(n: int) -> QuadratureRule:
    """Gauss-Hermite rule for e^{-x^2} on the real line (mass sqrt(pi))."""
    if n < 1:
        raise ValueError("need at least one node")
    diag = np.zeros(n)
    off = np.sqrt(np.arange(1, n) / 2.0)
    nodes = eigh_tridiagonal(diag, off, eigvals_only=True)
    weights = _christoffel_weights(nodes, diag, off, math.sqrt(math.pi))
    # enforce the exact +/- symmetry the eigensolver only approximates
    nodes = 0.5 * (nodes - nodes[::-1])
    weights = 0.5 * (weights + weights[::-1])
    return QuadratureRule("real_line", nodes, weights)


def polar_rule(n_r: int, n_theta: int, beta: float) -> QuadratureRule:
    """Product rule on C for integrals of f(z, zbar) (z zbar)^beta e^{-z zbar} r dr dtheta.

    Radial part substitutes u = r^2, turning the weight into (1/2) u^beta e^{-u} du
    so generalized Gauss-Laguerre is exact; angular part is the uniform
    trapezoid, exact for trigonometric polynomials of degree < n_theta.
    Total mass is pi Gamma(beta+1).
    """
    radial = gauss_laguerre(n_r, beta)
    r = np.sqrt(radial.nodes)
    wr = 0.5 * radial.weights
    th = 2.0 * math.pi * np.arange(n_theta) / n_theta
    wth = 2.0 * math.pi / n_theta
    rr, tt = np.meshgrid(r, th, indexing="ij")
    nodes = np.column_stack([rr.ravel(), tt.ravel()])
    weights = np.repeat(wr * wth, n_theta)
    return QuadratureRule("polar", nodes, weights, alpha=beta, meta={"n_r": n_r, "n_theta": n_theta})


def _simpson_weights(npts: int, h: float) -> np.ndarray:
    c = np.ones(npts)
    c[1:-1:2] = 4.0
    c[2:-1:2] = 2.0
    return c * (h / 3.0)


def adaptive_line(weight, rel_tol: float, degree_hint: int, max_halvings: int = 12) -> QuadratureRule:
    """Truncated symmetric rule for integrals of poly(x) * weight(x) over R.

    The interval [-X, X] is chosen so that weight(X) (1+X)^{2 degree_hint}
    drops below 1e-16, then a composite Simpson grid is refined until the
    monomial moments x^0, x^2, x^{2 degree_hint} agree to rel_tol between two
    successive refinements (the weight must decay at least Gaussian-fast for
    the truncation bound to make sense).
    """
    half = None
    for x_try in np.arange(3.0, 30.5, 0.5):
        bound = float(np.asarray(weight(np.array([x_try])))[0]) * (1.0 + x_try) ** (2 * degree_hint)
        if bound < 1e-16:
            half = float(x_try)
            break
    if half is None:
        raise ConvergenceError("could not truncate: weight decays too slowly")

    def moments(npts: int):
        x = np.linspace(-half, half, npts)
        wv = np.asarray(weight(x), dtype=float)
        sw = _simpson_weights(npts, 2.0 * half / (npts - 1)) * wv
        probes = np.array(
            [np.sum(sw), np.sum(sw * x**2), np.sum(sw * x ** (2 * degree_hint))]
        )
        return x, sw, probes

    npts = 257
    x, sw, probes = moments(npts)
    for _ in range(max_halvings):
        npts = 2 * (npts - 1) + 1
        x, sw, new_probes = moments(npts)
        if np.all(np.abs(new_probes - probes) <= rel_tol * np.abs(new_probes)):
            # one safety refinement beyond the agreement level
            npts = 2 * (npts - 1) + 1
            x, sw, _ = moments(npts)
            return QuadratureRule("truncated_line", x, sw, meta={"half_width": half, "npts": npts})
        probes = new_probes
    raise ConvergenceError(f"adaptive_line: no convergence after {max_halvings} halvings")
