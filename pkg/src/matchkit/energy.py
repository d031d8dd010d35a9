"""Matching energy from count vectors.

Two independent routes:

* :func:`me_roots` sums the absolute values of the zeros of the matching
  polynomial, found by Sturm isolation of ``q(y) = alpha(sqrt(y))`` in
  exact arithmetic.
* :func:`me_quadrature` evaluates the Coulson-type integral
  ``(2/pi) * int_0^inf x**-2 * ln(sum_k m_k x**(2k)) dx``.

The integral is split at ``x = 1`` and the tail mapped by ``u = 1/x``,
which leaves the measure ``x**-2 dx`` invariant.  In the tail the
``-2 nu ln(u)`` endpoint term (``nu`` the matching number) is integrated
in closed form, so both pieces are smooth on ``[0, 1]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .matching import MatchVector
from .quadrature import QuadratureSettings, integrate
from .roots import RootError, isolate_real_roots, squarefree_decomposition

__all__ = [
    "EnergyResult", "QuadratureSettings", "RootError",
    "me_quadrature", "me_roots", "me_difference", "me_eigen", "log_poly_eval",
]


@dataclass(frozen=True)
class EnergyResult:
    value: float
    method: str
    error: float
    n: int
    roots: tuple[float, ...] | None = None

    def to_json(self) -> dict:
        return {"me": self.value, "method": self.method, "error": self.error, "n": self.n}


def log_poly_eval(mv: MatchVector, x):
    """``ln(sum_k m_k x**(2k))`` for ``x > 0``, without overflow.

    The largest term is factored out, so huge counts or extreme ``x`` are fine.
    Accepts a scalar or an array.
    """
    xs = np.asarray(x, dtype=float)
    if np.any(xs <= 0):
        raise ValueError("x must be positive")
    ks = np.array([k for k, c in enumerate(mv.counts) if c], dtype=float)
    logm = np.array([math.log(c) for c in mv.counts if c])
    terms = logm + 2.0 * ks * np.log(xs)[..., None]
    top = terms.max(axis=-1)
    rest = np.exp(terms - top[..., None]).sum(axis=-1) - 1.0
    out = top + np.log1p(rest)
    return float(out) if np.ndim(x) == 0 else out


def _scaled(coeffs) -> tuple[np.ndarray, float]:
    """Float coefficients divided by the largest magnitude, plus its log."""
    big = max(abs(c) for c in coeffs) or 1
    return np.array([c / big for c in coeffs]), math.log(big)


def _polyval_even(coeffs: np.ndarray, x: np.ndarray) -> np.ndarray:
    """``sum_k coeffs[k] * x**(2k)`` by Horner in ``x**2``."""
    x2 = x * x
    acc = np.zeros_like(x)
    for c in coeffs[::-1]:
        acc = acc * x2 + c
    return acc


def _head_integrand(mv: MatchVector):
    # x in (0, 1]: ln(1 + S(x)) / x**2 with S(x) = sum_{k>=1} m_k x**(2k).
    coeffs = np.array([0.0] + [float(c) for c in mv.counts[1:]])

    def f(x):
        return np.log1p(_polyval_even(coeffs, x)) / (x * x)
    return f


def _tail_poly(mv: MatchVector) -> tuple[np.ndarray, float, int]:
    # R(u) = sum_{k<=nu} m_k u**(2(nu-k)), reversed counts up to the matching number.
    nu = mv.matching_number
    coeffs, log_scale = _scaled(list(mv.counts[:nu + 1])[::-1])
    return coeffs, log_scale, nu


def me_quadrature(mv: MatchVector, settings: QuadratureSettings | None = None) -> EnergyResult:
    s = settings or QuadratureSettings()
    head, e1 = integrate(_head_integrand(mv), 0.0, 1.0, s)
    rcoef, log_scale, nu = _tail_poly(mv)
    tail, e2 = integrate(lambda u: np.log(_polyval_even(rcoef, u)) + log_scale, 0.0, 1.0, s)
    total = head + tail + 2.0 * nu
    return EnergyResult(2.0 / math.pi * total, "quadrature", 2.0 / math.pi * (e1 + e2), mv.n)


def me_difference(a: MatchVector, b: MatchVector,
                  settings: QuadratureSettings | None = None) -> float:
    """``ME(a) - ME(b)`` as one integral of the log-ratio of the two series."""
    if a.n != b.n:
        raise ValueError(f"orders differ: {a.n} vs {b.n}")
    s = settings or QuadratureSettings()
    width = max(len(a), len(b))
    diff = np.array([float(a[k] - b[k]) for k in range(width)])
    bcoef = np.array([float(b[k]) for k in range(width)])

    def head(x):
        return np.log1p(_polyval_even(diff, x) / _polyval_even(bcoef, x)) / (x * x)

    hv, e1 = integrate(head, 0.0, 1.0, s)
    nu_a, nu_b = a.matching_number, b.matching_number
    if nu_a == nu_b:
        rdiff = diff[:nu_a + 1][::-1].copy()
        rb = bcoef[:nu_a + 1][::-1].copy()

        def tail(u):
            return np.log1p(_polyval_even(rdiff, u) / _polyval_even(rb, u))
    else:
        ra, la, _ = _tail_poly(a)
        rb, lb, _ = _tail_poly(b)

        def tail(u):
            return np.log(_polyval_even(ra, u)) + la - np.log(_polyval_even(rb, u)) - lb
    tv, e2 = integrate(tail, 0.0, 1.0, s)
    return 2.0 / math.pi * (hv + tv + 2.0 * (nu_a - nu_b))


def _q_coefficients(mv: MatchVector) -> list[int]:
    """Ascending coefficients of ``q(y) = sum_k (-1)**k m_k y**(nu - k)``, zero roots removed."""
    nu = mv.matching_number
    return [(-1) ** (nu - j) * mv.counts[nu - j] for j in range(nu + 1)]


def me_roots(mv: MatchVector, tol: float = 1e-12) -> EnergyResult:
    """Energy as ``2 * sum(sqrt(y_i))`` over the roots ``y_i`` of ``q``.

    Raises :class:`RootError` if ``q`` has non-real roots or a root below
    ``-1e-9``; neither happens for vectors that come from a graph.
    """
    nu_full = mv.n // 2
    q = _q_coefficients(mv)
    ys: list[tuple[Fraction, Fraction]] = []
    for factor, mult in squarefree_decomposition(q):
        intervals = isolate_real_roots(factor, tol)
        if len(intervals) != len(factor) - 1:
            raise RootError(
                f"{len(factor) - 1 - len(intervals)} non-real roots; "
                "not the count vector of a graph")
        ys.extend(iv for iv in intervals for _ in range(mult))
    if len(ys) != len(q) - 1:
        raise RootError("root multiplicities do not account for the degree")
    mus = []
    err = 0.0
    for lo, hi in ys:
        if hi < -1e-9:
            raise RootError(f"negative root near {float(hi)}")
        lo_f, hi_f = max(float(lo), 0.0), max(float(hi), 0.0)
        mus.append(0.5 * (math.sqrt(lo_f) + math.sqrt(hi_f)))
        err += 0.5 * (math.sqrt(hi_f) - math.sqrt(lo_f))
    mus += [0.0] * (nu_full - len(mus))
    mus.sort(reverse=True)
    return EnergyResult(2.0 * math.fsum(mus), "roots", 2.0 * err, mv.n, tuple(mus))


def me_eigen(mv: MatchVector) -> float:
    """Companion-matrix cross-check of :func:`me_roots` (floating point only)."""
    q = _q_coefficients(mv)
    ys = np.roots(q[::-1]) if len(q) > 1 else np.array([])
    return 2.0 * float(np.sum(np.sqrt(np.clip(ys.real, 0.0, None))))
