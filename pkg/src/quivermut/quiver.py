"""Loop-free, 2-cycle-free quivers stored as skew-symmetric exchange matrices.

A quiver on n vertices is the n x n integer matrix b with

    b[i][j] = (#arrows i -> j) - (#arrows j -> i).

Because loops and 2-cycles are excluded, at most one direction between any
pair carries arrows, so the arrow multiplicity i -> j is max(b[i][j], 0)
and the matrix determines the quiver exactly.

Entries are kept inside the signed 64-bit range; any operation that would
leave it raises EntryOverflow instead of returning a wrapped value.
"""

from __future__ import annotations

import json
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    EmptySubset,
    EntryOverflow,
    IndexOutOfRange,
    LoopForbidden,
    TwoCycleForbidden,
)

Matrix = tuple[tuple[int, ...], ...]

_INT64_MAX = 2**63 - 1


class DegreePair(NamedTuple):
    in_degree: int
    out_degree: int


class Quiver:
    """Immutable quiver; hashable and comparable by its matrix."""

    __slots__ = ("n", "b")

    n: int
    b: Matrix

    def __init__(self, b: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in b)
        n = len(rows)
        if n < 1:
            raise ValueError("a quiver needs at least one vertex")
        if any(len(row) != n for row in rows):
            raise ValueError("exchange matrix must be square")
        for i, row in enumerate(rows):
            if row[i] != 0:
                raise LoopForbidden(f"nonzero diagonal entry at {i}")
            for j, x in enumerate(row):
                if abs(x) > _INT64_MAX:
                    raise EntryOverflow(f"entry b[{i}][{j}] exceeds 64-bit range")
                if rows[j][i] != -x:
                    raise ValueError(f"matrix not skew-symmetric at ({i},{j})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "b", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Quiver is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Quiver) and self.b == other.b

    def __hash__(self) -> int:
        return hash(self.b)

    def __repr__(self) -> str:
        return f"Quiver(n={self.n}, arrows={_arrow_triples(self)})"


def _arrow_triples(q: Quiver) -> list[tuple[int, int, int]]:
    """(src, dst, mult) for every positive entry, sorted by (src, dst)."""
    return [
        (i, j, q.b[i][j])
        for i in range(q.n)
        for j in range(q.n)
        if q.b[i][j] > 0
    ]


def quiver_from_arrows(
    n: int, arrows: Iterable[tuple[int, int, int]]
) -> Quiver:
    """Build a quiver from (src, dst, mult) triples.

    Repeated (src, dst) pairs accumulate their multiplicities.  Loops,
    2-cycles (both orientations of a pair) and out-of-range indices are
    rejected.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    mult: dict[tuple[int, int], int] = {}
    for src, dst, m in arrows:
        if not (0 <= src < n and 0 <= dst < n):
            raise IndexOutOfRange(f"arrow ({src},{dst}) outside 0..{n - 1}")
        if src == dst:
            raise LoopForbidden(f"loop at vertex {src}")
        if m < 1:
            raise ValueError("arrow multiplicity must be >= 1")
        mult[(src, dst)] = mult.get((src, dst), 0) + m
    for src, dst in mult:
        if (dst, src) in mult:
            raise TwoCycleForbidden(f"both orientations between {src} and {dst}")
    b = [[0] * n for _ in range(n)]
    for (src, dst), m in mult.items():
        b[src][dst] = m
        b[dst][src] = -m
    return Quiver(b)


def mutate(q: Quiver, k: int) -> Quiver:
    """Mutation at vertex k.

    b'[i][j] = -b[i][j]                        if k in {i, j}
             = b[i][j] + sgn(b[i][k]) * max(b[i][k] * b[k][j], 0)  otherwise

    This is the matrix form of the arrow recipe: add a composite arrow
    i -> j for every path i -> k -> j, reverse every arrow at k, then
    cancel opposing pairs.
    """
    if not 0 <= k < q.n:
        raise IndexOutOfRange(f"vertex {k} outside 0..{q.n - 1}")
    b = q.b
    n = q.n
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -b[i][j]
            else:
                x = b[i][j]
                p = b[i][k] * b[k][j]
                if p > 0:
                    x = x + p if b[i][k] > 0 else x - p
                out[i][j] = x
    return Quiver(out)


def arrow_count(q: Quiver) -> int:
    """Total number of arrows: sum of |b[i][j]| over i < j."""
    return sum(abs(q.b[i][j]) for i in range(q.n) for j in range(i + 1, q.n))


def degrees(q: Quiver, k: int) -> DegreePair:
    """(in-degree, out-degree) of vertex k, counting multiplicities."""
    if not 0 <= k < q.n:
        raise IndexOutOfRange(f"vertex {k} outside 0..{q.n - 1}")
    ins = sum(max(q.b[i][k], 0) for i in range(q.n))
    outs = sum(max(q.b[k][j], 0) for j in range(q.n))
    return DegreePair(ins, outs)


def relabel(q: Quiver, perm: Sequence[int]) -> Quiver:
    """Apply a vertex permutation; perm[i] is the new index of vertex i.

    Used by tests and the canonical-form search; not a CLI verb.
    """
    n = q.n
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            b[perm[i]][perm[j]] = q.b[i][j]
    return Quiver(b)


# --- canonical form ---------------------------------------------------------
#
# Strategy: iterated partition refinement on exact neighbor signatures
# (a vertex's color is refined by the multiset of (neighbor color, entry)
# pairs), then individualization of one vertex from the smallest remaining
# non-singleton cell with backtracking over its members.  Each fully
# discrete coloring orders the vertices; the canonical matrix is the
# row-major minimum over all discrete colorings reached this way.  The
# minimum is attained by at least one ordering per automorphism orbit, so
# equal canonical forms characterize isomorphism; tests cross-check against
# a full permutation search for small n.

def _refine(b: Matrix, colors: tuple[int, ...]) -> tuple[int, ...]:
    n = len(b)
    while True:
        sigs = []
        for i in range(n):
            nbrs = tuple(sorted((colors[j], b[i][j]) for j in range(n) if j != i))
            sigs.append((colors[i], nbrs))
        palette = sorted(set(sigs))
        new = tuple(palette.index(s) for s in sigs)
        if len(palette) == len(set(colors)):
            return new
        colors = new


def _min_matrix(b: Matrix) -> tuple[int, ...]:
    n = len(b)
    best: list[tuple[int, ...] | None] = [None]

    def leaf(colors: tuple[int, ...]) -> None:
        order = sorted(range(n), key=colors.__getitem__)
        cand = tuple(b[u][v] for u in order for v in order)
        if best[0] is None or cand < best[0]:
            best[0] = cand

    def search(colors: tuple[int, ...]) -> None:
        colors = _refine(b, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        nonsingle = [vs for _, vs in sorted(cells.items()) if len(vs) > 1]
        if not nonsingle:
            leaf(colors)
            return
        cell = min(nonsingle, key=len)
        for v in cell:
            ind = list(colors)
            ind[v] = -1
            search(tuple(ind))

    search((0,) * n)
    assert best[0] is not None
    return best[0]


def canonical_form(q: Quiver) -> Quiver:
    """The distinguished representative of q's isomorphism class."""
    flat = _min_matrix(q.b)
    n = q.n
    return Quiver([flat[i * n : (i + 1) * n] for i in range(n)])


def canonical_key(q: Quiver) -> bytes:
    """Byte string equal for two quivers iff they are isomorphic."""
    flat = _min_matrix(q.b)
    n = q.n
    rows = ";".join(
        ",".join(str(x) for x in flat[i * n : (i + 1) * n]) for i in range(n)
    )
    return f"{n}:{rows}".encode("ascii")


def are_isomorphic(q1: Quiver, q2: Quiver) -> bool:
    if q1.n != q2.n:
        return False
    return canonical_key(q1) == canonical_key(q2)


# --- subquivers and connectivity --------------------------------------------

def full_subquiver(q: Quiver, subset: Iterable[int]) -> Quiver:
    """The induced quiver on a vertex subset, rows in ascending index order."""
    vs = sorted(set(subset))
    if not vs:
        raise EmptySubset("vertex subset is empty")
    for v in vs:
        if not 0 <= v < q.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{q.n - 1}")
    return Quiver([[q.b[u][v] for v in vs] for u in vs])


def embeds_as_full_subquiver(p: Quiver, q: Quiver) -> bool:
    """Exact search for an injective vertex map realizing p as an induced
    subquiver of q (entries must match exactly on mapped pairs)."""
    if p.n > q.n:
        return False

    # Map p's vertices in an order that keeps each new vertex adjacent to
    # an already-mapped one when possible, so mismatches prune early.
    order: list[int] = []
    seen = [False] * p.n
    degree = [degrees(p, v).in_degree + degrees(p, v).out_degree for v in range(p.n)]
    while len(order) < p.n:
        adjacent = [
            v
            for v in range(p.n)
            if not seen[v] and any(p.b[v][u] != 0 for u in order)
        ]
        pool = adjacent or [v for v in range(p.n) if not seen[v]]
        nxt = max(pool, key=lambda v: degree[v])
        order.append(nxt)
        seen[nxt] = True

    q_deg = [degrees(q, v) for v in range(q.n)]
    p_deg = [degrees(p, v) for v in range(p.n)]
    image: dict[int, int] = {}
    used = [False] * q.n

    def place(idx: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        for cand in range(q.n):
            if used[cand]:
                continue
            # Ambient degrees bound induced degrees from above.
            if (
                q_deg[cand].in_degree < p_deg[v].in_degree
                or q_deg[cand].out_degree < p_deg[v].out_degree
            ):
                continue
            if any(q.b[cand][image[u]] != p.b[v][u] for u in image):
                continue
            used[cand] = True
            image[v] = cand
            if place(idx + 1):
                return True
            used[cand] = False
            del image[v]
        return False

    return place(0)


def is_connected(q: Quiver) -> bool:
    """Connectivity of the underlying undirected graph."""
    todo = [0]
    seen = {0}
    while todo:
        u = todo.pop()
        for v in range(q.n):
            if v not in seen and q.b[u][v] != 0:
                seen.add(v)
                todo.append(v)
    return len(seen) == q.n


# --- serialization ----------------------------------------------------------

def quiver_to_json(q: Quiver, indent: int | None = None) -> str:
    """quiver-v1 text: arrows as [src, dst, mult], sorted by (src, dst)."""
    payload = {
        "format": "quiver-v1",
        "n": q.n,
        "arrows": [list(t) for t in _arrow_triples(q)],
    }
    return json.dumps(payload, indent=indent)


def quiver_from_json(data: str | bytes | dict) -> Quiver:
    """Parse quiver-v1 from text or an already-decoded object."""
    obj = json.loads(data) if isinstance(data, (str, bytes)) else data
    if not isinstance(obj, dict) or obj.get("format") != "quiver-v1":
        raise ValueError("expected a quiver-v1 object")
    if not isinstance(obj.get("n"), int):
        raise ValueError("quiver-v1 needs an integer 'n'")
    arrows_field = obj.get("arrows")
    if not isinstance(arrows_field, list):
        raise ValueError("quiver-v1 needs an 'arrows' list")
    try:
        arrows = [(int(s), int(d), int(m)) for s, d, m in arrows_field]
    except (TypeError, ValueError):
        raise ValueError("quiver-v1 arrows must be [src, dst, multiplicity] triples")
    return quiver_from_arrows(obj["n"], arrows)


def quiver_to_dot(q: Quiver) -> str:
    """DOT digraph with one edge statement per arrow, vertices v0..v{n-1}."""
    lines = ["digraph quiver {"]
    for i in range(q.n):
        lines.append(f"  v{i};")
    for src, dst, m in _arrow_triples(q):
        lines.extend(f"  v{src} -> v{dst};" for _ in range(m))
    lines.append("}")
    return "\n".join(lines) + "\n"
