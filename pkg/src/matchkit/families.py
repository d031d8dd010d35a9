"""Named graph families.

Families with an explicit construction come with adjacency.  The two
subdivision families ``g1`` and ``g2`` (base graph with one edge
subdivided ``n - 7`` resp. ``n - 11`` times) and the two fixed 10-vertex
extremal graphs are known only through their matching counts, so they
exist as count vectors only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .energy import EnergyResult, me_quadrature, me_roots
from .graph import Graph
from .matching import MatchVector, insert_recurrence, match_vector
from .quadrature import QuadratureSettings

# Seed counts at the two smallest orders of each subdivision family.
G1_SEEDS = {7: (1, 9, 21, 11), 8: (1, 10, 29, 26, 5)}
G2_SEEDS = {11: (1, 13, 59, 112, 84, 20), 12: (1, 14, 71, 161, 164, 68, 8)}

# The two m-maximal tricyclic graphs on ten vertices.
FIXED_VECTORS = {
    "g10_1": MatchVector((1, 12, 48, 76, 42, 5), 10),
    "g10_2": MatchVector((1, 12, 48, 75, 42, 6), 10),
}

ADJACENCY_FAMILIES = ("path", "cycle", "star", "snp", "snstar", "snstarstar", "k4pendant", "pkl")
VECTOR_FAMILIES = ("g1", "g2", "fixed")
FAMILY_NAMES = ADJACENCY_FAMILIES + VECTOR_FAMILIES

# CLI spellings that differ from the internal names.
ALIASES = {"snpp": "snp", "sn+": "snp", "g10_1": "fixed", "g10_2": "fixed"}


@dataclass(frozen=True)
class FamilyId:
    """A family member.  ``k``/``l`` are the cycle lengths for ``pkl``;
    ``tag`` selects the fixed vector for ``fixed``."""

    name: str
    n: int = 0
    k: int = 0
    l: int = 0
    tag: str = ""

    def __post_init__(self):
        if self.name not in FAMILY_NAMES:
            raise ValueError(f"unknown family {self.name!r}; choose from {', '.join(FAMILY_NAMES)}")

    def __str__(self) -> str:
        if self.name == "pkl":
            return f"pkl(n={self.n}, k={self.k}, l={self.l})"
        if self.name == "fixed":
            return self.tag
        return f"{self.name}({self.n})"


def family_id(name: str, n: int = 0, k: int = 0, l: int = 0) -> FamilyId:
    """Build a :class:`FamilyId` from a CLI-style name."""
    key = name.lower()
    if key in ("g10_1", "g10_2"):
        return FamilyId("fixed", 10, tag=key)
    return FamilyId(ALIASES.get(key, key), n, k, l)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def family_graph(fid: FamilyId) -> Graph:
    n = fid.n
    name = fid.name
    if name in VECTOR_FAMILIES:
        raise ValueError(f"family {name!r} has no adjacency construction")
    if name == "path":
        _need(n >= 1, "path needs n >= 1")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if name == "cycle":
        _need(n >= 3, "cycle needs n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    # Stars: centre 0, leaves 1..n-1.
    star = [(0, i) for i in range(1, n)]
    if name == "star":
        _need(n >= 2, "star needs n >= 2")
        return Graph.from_edges(n, star)
    if name == "snp":
        _need(n >= 3, "S_n^+ needs n >= 3")
        return Graph.from_edges(n, star + [(1, 2)])
    if name == "snstar":
        _need(n >= 4, "S_n^* needs n >= 4")
        return Graph.from_edges(n, star + [(1, 2), (1, 3)])
    if name == "snstarstar":
        _need(n >= 5, "S_n^** needs n >= 5")
        return Graph.from_edges(n, star + [(1, 2), (1, 3), (1, 4)])
    if name == "k4pendant":
        _need(n >= 4, "K_4^{n-4} needs n >= 4")
        k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        return Graph.from_edges(n, k4 + [(0, i) for i in range(4, n)])
    if name == "pkl":
        k, l = fid.k, fid.l
        _need(k >= 3 and l >= 3, "pkl needs cycle lengths k, l >= 3")
        _need(n >= k + l, "pkl needs n >= k + l")
        # Cycle C_k on 0..k-1, path k..n-l-1, cycle C_l on n-l..n-1.
        edges = [(i, (i + 1) % k) for i in range(k)]
        edges += [(n - l + i, n - l + (i + 1) % l) for i in range(l)]
        chain = [0, *range(k, n - l), n - l]
        edges += list(zip(chain, chain[1:]))
        return Graph.from_edges(n, edges)
    raise AssertionError(name)


_SERIES: dict[str, list[MatchVector]] = {}


def _subdivision_family(key: str, seeds: dict[int, tuple[int, ...]], n: int) -> MatchVector:
    n0 = min(seeds)
    _need(n >= n0, f"{key} family needs n >= {n0}")
    series = _SERIES.setdefault(key, [MatchVector(seeds[n0], n0), MatchVector(seeds[n0 + 1], n0 + 1)])
    while len(series) <= n - n0:
        series.append(insert_recurrence(series[-1], series[-2]))
    return series[n - n0]


def g1_mvector(n: int) -> MatchVector:
    """Counts of the base graph on 7 vertices with one edge subdivided ``n - 7`` times."""
    return _subdivision_family("g1", G1_SEEDS, n)


def g2_mvector(n: int) -> MatchVector:
    """Counts of the base graph on 11 vertices with one edge subdivided ``n - 11`` times."""
    return _subdivision_family("g2", G2_SEEDS, n)


def family_mvector(fid: FamilyId) -> MatchVector:
    if fid.name == "g1":
        return g1_mvector(fid.n)
    if fid.name == "g2":
        return g2_mvector(fid.n)
    if fid.name == "fixed":
        if fid.tag not in FIXED_VECTORS:
            raise ValueError(f"unknown fixed vector {fid.tag!r}")
        return FIXED_VECTORS[fid.tag]
    return match_vector(family_graph(fid))


def family_me(fid: FamilyId, settings: QuadratureSettings | None = None,
              cross_check: float = 1e-6) -> EnergyResult:
    """Energy by quadrature, confirmed against the root method."""
    mv = family_mvector(fid)
    quad = me_quadrature(mv, settings)
    roots = me_roots(mv)
    if abs(quad.value - roots.value) > cross_check:
        raise ArithmeticError(
            f"{fid}: quadrature {quad.value!r} and roots {roots.value!r} disagree")
    return quad


# Published energies of the two extremal families, rounded to 4 places.
REPORTED_ENERGIES = {
    10: {"g1": 13.8644, "g2": 13.9042},
    11: {"g1": 14.9384, "g2": 14.9466},
    12: {"g1": 16.3946, "g2": 16.5052},
    13: {"g1": 17.5097, "g2": 17.5678},
    15: {"g1": 20.0728, "g2": 20.1086},
}
