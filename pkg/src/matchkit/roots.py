"""Real root isolation for integer polynomials via Sturm sequences.

Polynomials are integer coefficient lists in ascending order.  Isolation
runs in exact rational arithmetic; refinement bisects on dyadic points
with exact integer sign evaluation.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class RootError(ArithmeticError):
    """Polynomial does not have the expected real-root structure."""


def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _derivative(p: list) -> list:
    return _trim([i * c for i, c in enumerate(p)][1:] or [0])


def _divmod(a: list, b: list) -> tuple[list, list]:
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    if len(a) < len(b):
        return [Fraction(0)], _trim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _trim(q), _trim(a[:len(b) - 1] or [Fraction(0)])


def _primitive(p: list, keep_sign: bool = False) -> list[int]:
    """Scale a rational polynomial to coprime integers.

    The leading term is made positive unless ``keep_sign`` is set, in which
    case only positive factors are applied.
    """
    den = 1
    for c in p:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    g = g or 1
    if ints[-1] < 0 and not keep_sign:
        g = -g
    return [c // g for c in ints]


def poly_gcd(a: list, b: list) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b != [0] and any(b):
        _, r = _divmod(a, b)
        a, b = b, r
    return _primitive(a)


def _sub(a: list, b: list) -> list:
    width = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0)
                  for k in range(width)])


def squarefree_decomposition(p: list[int]) -> list[tuple[list[int], int]]:
    """Yun's algorithm: ``p = c * prod(s_i ** i)`` with squarefree, coprime ``s_i``."""
    p = _primitive(_trim(list(p)))
    if len(p) == 1:
        return []
    out = []
    g = poly_gcd(p, _derivative(p))
    b, _ = _divmod(p, g)
    c, _ = _divmod(_derivative(p), g)
    d = _sub(c, _derivative(b))
    i = 1
    while len(b) > 1:
        a = poly_gcd(b, d)
        b, _ = _divmod(b, a)
        c, _ = _divmod(d, a)
        d = _sub(c, _derivative(b))
        if len(a) > 1:
            out.append((a, i))
        i += 1
    return out


def sturm_sequence(p: list[int]) -> list[list[int]]:
    seq = [_primitive(p, True), _primitive(_derivative(p), True)]
    while len(seq[-1]) > 1:
        _, r = _divmod(seq[-2], seq[-1])
        if not any(r):
            break
        seq.append(_primitive([-c for c in r], True))
    return seq


def _sign_at(p: list[int], x: Fraction) -> int:
    num, den = x.numerator, x.denominator
    acc = 0
    scale = 1
    # sum p_i num**i den**(d-i), evaluated by Horner in integers.
    for c in reversed(p):
        acc = acc * num + c * scale
        scale *= den
    return (acc > 0) - (acc < 0)


def _variations(seq: list[list[int]], x: Fraction) -> int:
    signs = [s for s in (_sign_at(p, x) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def root_bound(p: list[int]) -> Fraction:
    """Cauchy bound: every root has modulus below the returned value."""
    lead = abs(p[-1])
    return 1 + Fraction(max(abs(c) for c in p[:-1]), lead) if len(p) > 1 else Fraction(1)


def count_roots(seq: list[list[int]], lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in ``(lo, hi]`` of the squarefree polynomial ``seq[0]``."""
    return _variations(seq, lo) - _variations(seq, hi)


def isolate_real_roots(p: list[int], tol: float = 1e-12) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals, each holding exactly one real root of squarefree ``p``.

    Intervals are refined until narrower than ``tol`` (degenerate intervals
    mark exact rational roots).
    """
    p = _primitive(_trim(list(p)))
    if len(p) == 1:
        return []
    seq = sturm_sequence(p)
    bound = root_bound(p)
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        k = count_roots(seq, lo, hi)
        if k == 0:
            continue
        if k == 1:
            out.append(_refine_root(p, lo, hi, tol))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    return sorted(out)


def _refine_root(p: list[int], lo: Fraction, hi: Fraction, tol: float) -> tuple[Fraction, Fraction]:
    # Root lies in (lo, hi]; check the closed right end first.
    if _sign_at(p, hi) == 0:
        return hi, hi
    s_hi = _sign_at(p, hi)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s = _sign_at(p, mid)
        if s == 0:
            return mid, mid
        if s == s_hi:
            hi = mid
        else:
            lo = mid
    return lo, hi
