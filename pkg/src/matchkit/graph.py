"""Simple undirected graphs on at most 64 vertices.

Adjacency is stored as one integer bit mask per vertex, so neighbourhood
operations are single integer ops.  Graphs are immutable and hashable.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import lru_cache

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid argument to a graph operation."""


class CapacityError(GraphError):
    """Result would exceed MAX_VERTICES."""


class Graph6Error(GraphError):
    """Malformed graph6 record."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """A simple graph: ``rows[v]`` has bit ``u`` set iff ``u ~ v``."""

    n: int
    rows: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"n={self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise GraphError("rows must have exactly n entries")
        full = (1 << self.n) - 1
        total = 0
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise GraphError(f"row {v} has out-of-range or loop bits")
            total += row.bit_count()
        for v, row in enumerate(self.rows):
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")
                r ^= low
        object.__setattr__(self, "m", total // 2)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.rows):
            yield from ((u, v) for v in _bits(row >> (u + 1) << (u + 1)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={to_graph6(self)!r})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------- graph6

def from_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` header is accepted)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    pos = 0
    if data.startswith(b">>graph6<<"):
        pos = len(b">>graph6<<")
    if pos >= len(data):
        raise Graph6Error("empty record", pos)
    for i in range(pos, len(data)):
        if not 63 <= data[i] <= 126:
            raise Graph6Error(f"byte {data[i]!r} outside printable range 63..126", i)
    if data[pos] == 126:
        if pos + 1 < len(data) and data[pos + 1] == 126:
            raise Graph6Error(f"8-byte size field exceeds n <= {MAX_VERTICES}", pos)
        if pos + 4 > len(data):
            raise Graph6Error("truncated size field", len(data))
        n = 0
        for b in data[pos + 1:pos + 4]:
            n = (n << 6) | (b - 63)
        if n < 63:
            raise Graph6Error("non-minimal size field", pos)
        pos += 4
    else:
        n = data[pos] - 63
        pos += 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"n={n} exceeds {MAX_VERTICES}", pos - 1)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated bit field: need {need} bytes, got {len(body)}", len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after bit field", pos + need)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need and (body[-1] - 63) & ((1 << (6 * need - nbits)) - 1):
        raise Graph6Error("nonzero padding bits", pos + need - 1)
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        out = [chr(n + 63)]
    else:
        out = ["~"] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    acc = nacc = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (g.rows[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


# ------------------------------------------------------- structural edits

def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not in graph")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"cannot add edge ({u}, {v})")
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def delete_vertices(g: Graph, vs: Iterable[int]) -> Graph:
    """Induced subgraph on the remaining vertices, relabelled in order."""
    drop = set(vs)
    for v in drop:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    keep = [v for v in range(g.n) if v not in drop]
    return induced_subgraph(g, keep)


def induced_subgraph(g: Graph, keep: list[int]) -> Graph:
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in _bits(g.rows[v]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def subdivide(g: Graph, u: int, v: int, j: int) -> Graph:
    """Insert ``j`` new degree-2 vertices on edge ``uv`` (the graph G(e/j)).

    New vertices get labels ``n, ..., n+j-1`` along the path from ``u`` to ``v``.
    """
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not in graph")
    if j < 0:
        raise GraphError("j must be nonnegative")
    if j == 0:
        return g
    if g.n + j > MAX_VERTICES:
        raise CapacityError(f"subdivision would need {g.n + j} vertices")
    edges = [e for e in g.edges() if e != (min(u, v), max(u, v))]
    path = [u, *range(g.n, g.n + j), v]
    edges += list(zip(path, path[1:]))
    return Graph.from_edges(g.n + j, edges)


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Vertex masks of the connected components of the subgraph induced by ``within``."""
    rest = (1 << g.n) - 1 if within is None else within
    comps = []
    while rest:
        seen = frontier = rest & -rest
        while frontier:
            nxt = 0
            for w in _bits(frontier):
                nxt |= g.rows[w]
            frontier = nxt & rest & ~seen
            seen |= frontier
        comps.append(seen)
        rest &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1


def is_bridge(g: Graph, u: int, v: int) -> bool:
    """True if removing edge ``uv`` disconnects ``u`` from ``v``."""
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    seen = frontier = 1 << u
    while frontier:
        nxt = 0
        for w in _bits(frontier):
            nxt |= rows[w]
        frontier = nxt & ~seen
        seen |= frontier
        if seen >> v & 1:
            return False
    return True


def relabel(g: Graph, order: list[int]) -> Graph:
    """Graph whose vertex ``i`` is ``order[i]`` of ``g``."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = [0] * g.n
    for i, v in enumerate(order):
        row = 0
        for u in _bits(g.rows[v]):
            row |= 1 << pos[u]
        rows[i] = row
    return Graph(g.n, tuple(rows))


# ------------------------------------------------------ canonical labeling

@dataclass(frozen=True)
class CanonicalForm:
    """Certificate identifying an isomorphism class exactly.

    ``labeling[i]`` is the vertex of the source graph placed at canonical
    position ``i``; ``colors[v]`` is the colour of ``v`` in the stable
    colour-refinement partition (an isomorphism invariant).
    """

    certificate: bytes
    labeling: tuple[int, ...] = field(compare=False)
    colors: tuple[int, ...] = field(compare=False)


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    n = len(rows)
    while True:
        color = [0] * n
        masks = []
        for ci, cell in enumerate(cells):
            mask = 0
            for v in cell:
                color[v] = ci
                mask |= 1 << v
            masks.append(mask)
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((rows[v] & mk).bit_count() for mk in masks)
                groups.setdefault(sig, []).append(v)
            new_cells.extend(groups[s] for s in sorted(groups))
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _leaf_key(rows: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    key = []
    for v in order:
        row = 0
        for u in _bits(rows[v]):
            row |= 1 << pos[u]
        key.append(row)
    return tuple(key)


def _twin_representatives(rows: tuple[int, ...], cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        bv = 1 << v
        for r in reps:
            br = 1 << r
            if rows[v] & ~br == rows[r] & ~bv:
                break
        else:
            reps.append(v)
    return reps


@lru_cache(maxsize=200_000)
def canonical_form(g: Graph) -> CanonicalForm:
    """Exact canonical form by colour refinement plus individualisation search.

    Branches only over one vertex per twin class in the target cell;
    swapping twins is an automorphism fixing everything else, so the
    pruned subtrees yield the same leaves.
    """
    rows = g.rows
    root = _refine(rows, [list(range(g.n))] if g.n else [])
    colors = [0] * g.n
    for ci, cell in enumerate(root):
        for v in cell:
            colors[v] = ci
    best_key: tuple[int, ...] | None = None
    best_order: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_key, best_order
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            key = _leaf_key(rows, order)
            if best_key is None or key < best_key:
                best_key, best_order = key, order
            return
        cell = cells[target]
        for v in _twin_representatives(rows, cell):
            rest = [w for w in cell if w != v]
            search(_refine(rows, cells[:target] + [[v], rest] + cells[target + 1:]))

    search(root)
    key = best_key or ()
    cert = g.n.to_bytes(1, "big") + b"".join(r.to_bytes(8, "big") for r in key)
    return CanonicalForm(cert, tuple(best_order), tuple(colors))


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, list(canonical_form(g).labeling))
