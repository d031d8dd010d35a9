"""Exact k-matching counts, matching polynomials and the quasi-order."""

from __future__ import annotations

import enum
import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .graph import Graph, _bits, component_masks


@dataclass(frozen=True)
class MatchVector:
    """Counts ``m(G, k)`` for ``k = 0 .. n // 2`` of a graph of order ``n``.

    Shorter input is padded with zeros; trailing zeros beyond ``n // 2``
    are dropped, anything nonzero there is rejected.
    """

    n: int
    counts: tuple[int, ...]

    def __init__(self, counts: Iterable[int], n: int):
        vals = [int(c) for c in counts]
        if n < 0:
            raise ValueError("n must be nonnegative")
        nu = n // 2
        if any(vals[nu + 1:]):
            raise ValueError(f"nonzero count beyond k = {nu} for n = {n}")
        vals = vals[:nu + 1] + [0] * (nu + 1 - len(vals))
        if vals[0] != 1:
            raise ValueError("m(G, 0) must be 1")
        if any(c < 0 for c in vals):
            raise ValueError("counts must be nonnegative")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "counts", tuple(vals))

    def __getitem__(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    @property
    def matching_number(self) -> int:
        """Largest ``k`` with ``m(G, k) > 0``."""
        return max(k for k, c in enumerate(self.counts) if c)

    def __str__(self) -> str:
        return ",".join(map(str, self.counts))


def parse_mvector(text: str, n: int) -> MatchVector:
    return MatchVector((int(tok) for tok in text.replace(" ", "").split(",") if tok), n)


# ----------------------------------------------------------- counting

def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add_shift(a: list[int], b: list[int], shift: int) -> list[int]:
    """``a + z**shift * b``."""
    out = a + [0] * max(0, len(b) + shift - len(a))
    for i, y in enumerate(b):
        out[i + shift] += y
    return out


def match_vector(g: Graph) -> MatchVector:
    """Exact k-matching counts of ``g``.

    Vertex recursion ``m(G) = m(G-v) + z * sum_{u~v} m(G-v-u)`` on a
    max-degree vertex, with components multiplied separately.  Every
    residual is an induced subgraph, so it is memoised by its vertex mask.
    """
    rows = g.rows
    memo: dict[int, list[int]] = {}

    def count(mask: int) -> list[int]:
        if mask in memo:
            return memo[mask]
        comps = component_masks(g, mask)
        if len(comps) > 1:
            out = [1]
            for c in comps:
                out = _poly_mul(out, count(c))
        else:
            best = -1
            v = 0
            for w in _bits(mask):
                d = (rows[w] & mask).bit_count()
                if d > best:
                    best, v = d, w
            if best <= 0:
                out = [1]
            else:
                rest = mask & ~(1 << v)
                out = list(count(rest))
                for u in _bits(rows[v] & rest):
                    out = _poly_add_shift(out, count(rest & ~(1 << u)), 1)
        memo[mask] = out
        return out

    return MatchVector(count((1 << g.n) - 1), g.n)


def brute_force_match_vector(g: Graph) -> MatchVector:
    """Count matchings by testing every k-edge subset, k <= n // 2 (small graphs only)."""
    edges = [1 << u | 1 << v for u, v in g.edges()]
    counts = [1]
    for k in range(1, g.n // 2 + 1):
        total = 0
        for combo in itertools.combinations(edges, k):
            used = 0
            for bits in combo:
                if used & bits:
                    break
                used |= bits
            else:
                total += 1
        counts.append(total)
    return MatchVector(counts, g.n)


# --------------------------------------------------------- polynomials

@dataclass(frozen=True)
class MatchingPolynomial:
    """``alpha(G, x) = sum_k (-1)**k m(G, k) x**(n - 2k)``.

    ``coeffs[d]`` is the coefficient of ``x**d`` (ascending order).
    """

    n: int
    coeffs: tuple[int, ...]

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for d in range(self.n, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            mag = abs(c)
            body = ("" if mag == 1 and d else str(mag)) + ("x" if d else "") + (f"^{d}" if d > 1 else "")
            terms.append(("-" if c < 0 else "+") + body)
        s = "".join(terms) or "0"
        return s[1:] if s.startswith("+") else s


def matching_polynomial(mv: MatchVector) -> MatchingPolynomial:
    coeffs = [0] * (mv.n + 1)
    for k, c in enumerate(mv.counts):
        coeffs[mv.n - 2 * k] = (-1) ** k * c
    return MatchingPolynomial(mv.n, tuple(coeffs))


def mvector_from_polynomial(coeffs_desc: Sequence[int]) -> MatchVector:
    """Inverse of :func:`matching_polynomial`; coefficients highest degree first."""
    n = len(coeffs_desc) - 1
    counts = []
    for k in range(n // 2 + 1):
        c = coeffs_desc[2 * k]
        if (-1) ** k * c < 0:
            raise ValueError(f"coefficient of x^{n - 2 * k} has the wrong sign")
        counts.append(abs(c))
    if any(coeffs_desc[2 * k + 1] for k in range((n + 1) // 2)):
        raise ValueError("matching polynomials have no x^(n-odd) terms")
    return MatchVector(counts, n)


# ------------------------------------------------ subdivision recurrence

def insert_recurrence(next_mv: MatchVector, base: MatchVector) -> MatchVector:
    """Counts of G(e/j+2) from those of G(e/j+1) and G(e/j).

    ``m(G(e/j+2), k) = m(G(e/j+1), k) + m(G(e/j), k-1)``.
    """
    if next_mv.n != base.n + 1:
        raise ValueError(f"orders must differ by one (got {next_mv.n} and {base.n})")
    n = next_mv.n + 1
    return MatchVector((next_mv[k] + base[k - 1] for k in range(n // 2 + 1)), n)


def backward_recurrence(top: MatchVector, next_mv: MatchVector) -> MatchVector:
    """Counts of G(e/j) recovered from G(e/j+2) and G(e/j+1)."""
    if top.n != next_mv.n + 1:
        raise ValueError(f"orders must differ by one (got {top.n} and {next_mv.n})")
    n = next_mv.n - 1
    counts = [top[k + 1] - next_mv[k + 1] for k in range(n // 2 + 1)]
    if any(c < 0 for c in counts):
        raise ValueError("inputs are not consecutive members of a subdivision family")
    return MatchVector(counts, n)


# --------------------------------------------------------- quasi-order

class Order(enum.Enum):
    GREATER = "greater"
    LESS = "less"
    EQUIVALENT = "equivalent"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class QuasiOrdering:
    """Result of comparing two count vectors.

    ``above`` lists the ``k`` where ``a`` has more k-matchings, ``below``
    those where it has fewer.
    """

    order: Order
    above: tuple[int, ...]
    below: tuple[int, ...]


def quasi_compare(a: MatchVector, b: MatchVector) -> QuasiOrdering:
    if a.n != b.n:
        raise ValueError(f"cannot compare orders {a.n} and {b.n}")
    above = tuple(k for k in range(1, len(a)) if a[k] > b[k])
    below = tuple(k for k in range(1, len(a)) if a[k] < b[k])
    if above and below:
        order = Order.INCOMPARABLE
    elif above:
        order = Order.GREATER
    elif below:
        order = Order.LESS
    else:
        order = Order.EQUIVALENT
    return QuasiOrdering(order, above, below)
