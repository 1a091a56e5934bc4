"""Scalar special functions used throughout the toolkit.

Everything here is elementary-series based: Gamma/Pochhammer plumbing,
Laguerre and (associated) Hermite polynomials, the parabolic cylinder
function D_nu, pFq up to 2F2, the two-parameter Mittag-Leffler function and
the specialized three-variable Lauricella series

    F(u, v, w; c, b) = sum_{n,k,j} (1)_{n+2k+j} (b)_j / (c)_{n+2k+2j}
                       * u^n/n! * v^k/k! * w^j/j!.

All infinite sums use compensated (Kahan) accumulation and a SeriesControl
budget; hitting ``max_terms`` raises ConvergenceError rather than silently
truncating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, PoleError

__all__ = [
    "SeriesControl",
    "DEFAULT_CONTROL",
    "gamma_fn",
    "rgamma",
    "pochhammer",
    "laguerre",
    "hermite",
    "assoc_hermite",
    "pcf_D",
    "hyp_pfq",
    "mittag_leffler",
    "lauricella_triple",
]

_TINY = 1e-300


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for infinite summations.

    rel_tol / abs_tol bound the acceptable tail estimate, max_terms is the
    budget per summation index.
    """

    rel_tol: float = 1e-13
    abs_tol: float = 0.0
    max_terms: int = 500

    def __post_init__(self):
        if not self.rel_tol > 0.0:
            raise ValueError("rel_tol must be > 0")
        if self.abs_tol < 0.0:
            raise ValueError("abs_tol must be >= 0")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")


DEFAULT_CONTROL = SeriesControl()


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and float(x) == math.floor(x)


def gamma_fn(x: float) -> float:
    """Gamma function on the reals, poles excluded.

    Negative non-integer arguments go through the reflection formula inside
    math.gamma; non-positive integers raise PoleError.
    """
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma_fn pole at x={x}")
    return math.gamma(x)


def rgamma(x: float) -> float:
    """Reciprocal Gamma, entire: returns 0 at the poles of Gamma."""
    if _is_nonpositive_integer(x):
        return 0.0
    try:
        g = math.gamma(x)
    except OverflowError:
        return 0.0
    return 1.0 / g


def _rgamma_ld(x: float) -> np.longdouble:
    """Reciprocal Gamma in extended range (1/Gamma underflows float64 at x > 171)."""
    if _is_nonpositive_integer(x):
        return np.longdouble(0.0)
    if x > 150.0:
        return np.exp(-np.longdouble(math.lgamma(x)))
    return np.longdouble(1.0) / np.longdouble(math.gamma(x))


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.

    Evaluated as an exact float product; no Gamma ratios, so non-positive
    ``a`` is fine (the result is then an exact zero once a factor vanishes).
    """
    if k < 0:
        raise ValueError("pochhammer order must be non-negative")
    out = 1.0
    for i in range(k):
        out *= a + i
    return out


def laguerre(n: int, alpha: float, t):
    """Generalized Laguerre polynomial L_n^(alpha)(t) for arbitrary real alpha.

    Uses the explicit finite sum
        L_n^(alpha)(t) = sum_k (-1)^k (alpha+k+1)_{n-k} / ((n-k)! k!) t^k
    with Pochhammer products, which stays valid for negative integer alpha.
    ``t`` may be a scalar or ndarray.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    coeffs = [
        (-1.0) ** k * pochhammer(alpha + k + 1, n - k) / (math.factorial(n - k) * math.factorial(k))
        for k in range(n + 1)
    ]
    t = np.asarray(t)
    if t.dtype.kind not in "fc":
        t = t.astype(float)
    out = np.zeros_like(t)
    for c in reversed(coeffs):  # Horner in t
        out = out * t + c
    return out if out.ndim else out[()]


def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n(x) via the three-term recurrence."""
    return assoc_hermite(n, x, 0.0)


def assoc_hermite(n: int, x, beta: float):
    """Associated Hermite polynomial H_n(x, beta).

    Forward recurrence H_{k+1} = 2x H_k - 2(k+beta) H_{k-1} with H_{-1}=0,
    H_0=1; beta=0 recovers the physicists' Hermite polynomials.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    x = np.asarray(x)
    if x.dtype.kind not in "fc":
        x = x.astype(float)
    h_prev = np.zeros_like(x)
    h = np.ones_like(x)
    for k in range(n):
        h, h_prev = 2.0 * x * h - 2.0 * (k + beta) * h_prev, h
    return h if h.ndim else h[()]


def _tail_done(term_mag: float, prev_mag: float, total_mag: float, ctl: SeriesControl) -> bool:
    bound = max(ctl.rel_tol * total_mag, ctl.abs_tol, _TINY)
    return term_mag <= bound and prev_mag <= bound


def pcf_D(nu: float, z, ctl: SeriesControl = DEFAULT_CONTROL):
    """Parabolic cylinder function D_nu(z), entire in z.

    Summed in the Pochhammer form
        D_nu(z) = e^{-z^2/4} 2^{nu/2} sqrt(pi)
                  sum_k (-1)^k (-nu)_k / (k! Gamma((k-nu+1)/2)) (z/sqrt2)^k
    which is regular for every real nu (the Gamma(-nu) prefactor of the
    classical series form cancels against Gamma(k-nu)).  ``z`` may be a complex
    scalar or ndarray.

    At imaginary argument the O(1) terms cancel down to an e^{-|z|^2/4}-sized
    sum, so accumulation runs in extended precision; the orthogonality weight
    |D_{-beta}(ix sqrt2)|^{-2} needs usable relative accuracy out to |x| ~ 8.
    """
    z = np.asarray(z, dtype=complex)
    zq = np.asarray(z, dtype=np.clongdouble)
    zs = zq / np.longdouble(math.sqrt(2.0))
    total = np.zeros_like(zq)
    p = np.ones_like(zq)  # (-1)^k (-nu)_k (z/sqrt2)^k / k!
    prev_mag = math.inf
    for k in range(ctl.max_terms + 1):
        term = p * _rgamma_ld((k - nu + 1.0) / 2.0)
        total = total + term
        term_mag = float(np.max(np.abs(term)))
        total_mag = float(np.max(np.abs(total)))
        if k >= 2 and _tail_done(term_mag, prev_mag, total_mag, ctl):
            break
        prev_mag = term_mag
        p = p * (-(k - nu) / (k + 1.0)) * zs
    else:
        raise ConvergenceError(f"pcf_D series not converged in {ctl.max_terms} terms")
    front = np.exp(-zq * zq / 4.0) * np.clongdouble(2.0 ** (nu / 2.0) * math.sqrt(math.pi))
    out = (front * total).astype(complex)
    return out if out.ndim else out[()]


def hyp_pfq(numer, denom, t, ctl: SeriesControl = DEFAULT_CONTROL):
    """Generalized hypergeometric pFq for p, q <= 2 (covers 1F1 and 2F2).

    Compensated summation of sum_k prod(a_i)_k / prod(b_i)_k * t^k / k!.
    ``t`` may be a complex scalar or ndarray; denominator parameters must not
    be non-positive integers.
    """
    numer = list(numer)
    denom = list(denom)
    if len(numer) > 2 or len(denom) > 2:
        raise ValueError("hyp_pfq supports at most 2 numerator and 2 denominator parameters")
    for b in denom:
        if _is_nonpositive_integer(b):
            raise PoleError(f"hyp_pfq denominator parameter {b} is a non-positive integer")
    # extended-precision accumulation: alternating arguments (Kummer-type
    # identities at t ~ -10) cancel through partial sums ~e^{|t|} above the
    # limit, which 64-bit terms cannot certify at 1e-11
    t_in = np.asarray(t)
    tq = np.asarray(t_in, dtype=np.clongdouble)
    total = np.zeros_like(tq)
    term = np.ones_like(tq)
    prev_mag = math.inf
    for k in range(ctl.max_terms + 1):
        total = total + term
        term_mag = float(np.max(np.abs(term)))
        total_mag = float(np.max(np.abs(total)))
        if k >= 2 and _tail_done(term_mag, prev_mag, total_mag, ctl):
            break
        prev_mag = term_mag
        ratio = np.clongdouble(1.0 / (k + 1.0))
        for a in numer:
            ratio = ratio * np.clongdouble(a + k)
        for b in denom:
            ratio = ratio / np.clongdouble(b + k)
        term = term * ratio * tq
    else:
        raise ConvergenceError(f"hyp_pfq not converged in {ctl.max_terms} terms")
    out = total.astype(complex)
    return out if out.ndim else out[()]


def mittag_leffler(alpha: float, gamma_par: float, t: float, ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Two-parameter Mittag-Leffler function E_{alpha,gamma}(t) = sum t^n / Gamma(alpha n + gamma)."""
    if alpha <= 0 or gamma_par <= 0:
        raise ValueError("mittag_leffler requires alpha > 0 and gamma > 0")
    total = 0.0
    comp = 0.0
    prev_mag = math.inf
    tn = 1.0
    for n in range(ctl.max_terms + 1):
        term = tn * rgamma(alpha * n + gamma_par)
        y = term - comp
        s = total + y
        comp = (s - total) - y
        total = s
        if n >= 2 and _tail_done(abs(term), prev_mag, abs(total), ctl):
            return total
        prev_mag = abs(term)
        tn *= t
    raise ConvergenceError(f"mittag_leffler not converged in {ctl.max_terms} terms")


def lauricella_triple(
    c: float,
    beta: float,
    u: complex,
    v: complex,
    w: complex,
    ctl: SeriesControl = DEFAULT_CONTROL,
) -> complex:
    """Specialized generalized Lauricella series in three variables.

        sum_{n,k,j >= 0} (1)_{n+2k+j} (beta)_j / (c)_{n+2k+2j}
                         * u^n/n! * v^k/k! * w^j/j!

    The sum is enumerated by total weight d = n + 2k + 2j, which tracks the
    (c)_{n+2k+2j} denominator growth and yields a sound shell tail test: stop
    once the last two weight shells together contribute less than rel_tol of
    the accumulated magnitude.  Terms are carried by exact neighbour ratios,
    so no large Gamma values are formed.
    """
    if _is_nonpositive_integer(c):
        raise PoleError(f"lauricella_triple pole: c={c} is a non-positive integer")
    u = complex(u)
    v = complex(v)
    w = complex(w)
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    first: dict[tuple[int, int], complex] = {}
    cur: dict[tuple[int, int], complex] = {}
    prev_shell = math.inf
    for d in range(ctl.max_terms + 1):
        shell_mag = 0.0
        for j in range(d // 2 + 1):
            rem = d - 2 * j
            for k in range(rem // 2 + 1):
                n = rem - 2 * k
                if n == 0:
                    if k == 0 and j == 0:
                        term = 1.0 + 0.0j
                    elif k > 0:
                        s0 = 2 * k + j
                        dd = 2 * k + 2 * j
                        term = first[(k - 1, j)] * ((s0 - 1) * s0 * v) / ((c + dd - 2) * (c + dd - 1) * k)
                    else:
                        dd = 2 * j
                        term = first[(0, j - 1)] * ((beta + j - 1) * w) / ((c + dd - 2) * (c + dd - 1))
                    first[(k, j)] = term
                else:
                    s0 = n + 2 * k + j
                    dd = n + 2 * k + 2 * j
                    term = cur[(k, j)] * (s0 * u) / (n * (c + dd - 1))
                cur[(k, j)] = term
                shell_mag += abs(term)
                y = term - comp
                t = total + y
                comp = (t - total) - y
                total = t
        if d >= 2 and shell_mag + prev_shell <= max(ctl.rel_tol * abs(total), ctl.abs_tol, _TINY):
            return total
        prev_shell = shell_mag
    raise ConvergenceError(f"lauricella_triple not converged within weight {ctl.max_terms}")
