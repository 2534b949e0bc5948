r"""Triangulated marked surfaces as combinatorial maps.

A triangulation is a list of oriented triangles over labeled edges.  Each
triangle stores its three sides as a cyclic triple following the surface
orientation (counterclockwise).  Side slot s of triangle t is a directed
edge running from corner (t, s-1) to corner (t, s), where corner (t, s)
sits between side s and side s+1:

                 corner 1
                   /\
          side 1  /  \  side 2
                 /    \
      corner 0  /______\  corner 2
                 side 0        (slots mod 3; side 0 runs corner 2 -> 0)

Two occurrences of the same arc are glued orientation-reversingly: the
head corner of one occurrence meets the tail corner of the other.  The
resulting corner classes are the marked points of the surface; boundary
segments occur once and are not glued.

The quiver of a triangulation has one vertex per arc (indexed by rank of
the arc's edge id) and one arrow e -> f for every triangle in which arc f
cyclically follows arc e, with opposing pairs cancelled afterwards.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    ArcMultiplicityError,
    CaseConstraintViolated,
    CountMismatch,
    EdgeNotFound,
    EulerMismatch,
    IndexOutOfRange,
    NotAnArc,
    SelfFoldedForbidden,
    SpadeViolated,
)
from .quiver import Quiver

ARC = "arc"
BOUNDARY = "boundary"

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class MarkedSurface:
    """Discrete surface data: genus, boundary components, punctures, and
    the number of marked points on each boundary component."""

    genus: int
    boundary_components: int
    punctures: int
    marked_on_boundary: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "marked_on_boundary", tuple(int(c) for c in self.marked_on_boundary)
        )
        if self.genus < 0 or self.boundary_components < 0 or self.punctures < 0:
            raise ValueError("genus, boundary and puncture counts must be >= 0")
        if len(self.marked_on_boundary) != self.boundary_components:
            raise ValueError("need one marked-point count per boundary component")
        if any(c < 1 for c in self.marked_on_boundary):
            raise ValueError("every boundary component needs a marked point")
        if self.arc_count() < 0:
            raise ValueError("surface admits no triangulation (arc count < 0)")

    def arc_count(self) -> int:
        """Number of arcs in any triangulation of this surface."""
        return (
            6 * self.genus
            + 3 * self.boundary_components
            + 3 * self.punctures
            + sum(self.marked_on_boundary)
            - 6
        )


@dataclass(frozen=True)
class Edge:
    id: int
    kind: str  # ARC or BOUNDARY

    def __post_init__(self):
        if self.kind not in (ARC, BOUNDARY):
            raise ValueError(f"unknown edge kind {self.kind!r}")


@dataclass(frozen=True)
class SurfaceStats:
    genus: int
    boundary_components: int
    punctures: int
    marked_points: int
    arcs: int
    boundary_segments: int
    triangles: int
    euler_characteristic: int


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)


class Triangulation:
    """Immutable validated triangulation.

    Construction performs the full consistency check: side multiplicities,
    no self-folded triangles, count formulas, Euler characteristic, and
    the boundary-cycle structure, all against the declared surface.
    """

    __slots__ = (
        "surface",
        "edges",
        "triangles",
        "vertex_classes",
        "_stats",
        "_boundary_cycles",
        "_occurrences",
    )

    surface: MarkedSurface
    edges: tuple[Edge, ...]
    triangles: tuple[Triple, ...]
    vertex_classes: tuple[frozenset[tuple[int, int]], ...]

    def __init__(self, surface, edges, triangles):
        object.__setattr__(self, "surface", surface)
        object.__setattr__(
            self, "edges", tuple(sorted(edges, key=lambda e: e.id))
        )
        object.__setattr__(
            self, "triangles", tuple(tuple(int(x) for x in t) for t in triangles)
        )
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("Triangulation is immutable")

    # -- queries -------------------------------------------------------------

    def edge(self, edge_id: int) -> Edge:
        if not 0 <= edge_id < len(self.edges):
            raise EdgeNotFound(f"no edge with id {edge_id}")
        return self.edges[edge_id]

    def is_arc(self, edge_id: int) -> bool:
        return self.edge(edge_id).kind == ARC

    def arc_ids(self) -> tuple[int, ...]:
        return tuple(e.id for e in self.edges if e.kind == ARC)

    def arc_vertex(self, edge_id: int) -> int:
        """Quiver vertex index of an arc: its rank among sorted arc ids."""
        if not self.is_arc(edge_id):
            raise NotAnArc(f"edge {edge_id} is a boundary segment")
        return self.arc_ids().index(edge_id)

    def vertex_arc(self, vertex: int) -> int:
        """Inverse of arc_vertex."""
        ids = self.arc_ids()
        if not 0 <= vertex < len(ids):
            raise IndexOutOfRange(f"vertex {vertex} outside 0..{len(ids) - 1}")
        return ids[vertex]

    def stats(self) -> SurfaceStats:
        return self._stats

    def boundary_cycles(self) -> tuple[tuple[int, ...], ...]:
        """Boundary components as cyclic tuples of boundary-segment ids."""
        return self._boundary_cycles

    def triangles_of(self, edge_id: int) -> list[tuple[int, int]]:
        """(triangle index, slot) for every occurrence of an edge."""
        self.edge(edge_id)
        return list(self._occurrences[edge_id])

    def normalized_triangles(self) -> tuple[Triple, ...]:
        """Each cyclic triple rotated to start with its smallest id."""
        out = []
        for tri in self.triangles:
            r = min(range(3), key=lambda s: tri[s])
            out.append((tri[r], tri[(r + 1) % 3], tri[(r + 2) % 3]))
        return tuple(out)

    # -- validation ----------------------------------------------------------

    def _validate(self):
        surface = self.surface
        edges = self.edges
        ids = [e.id for e in edges]
        if ids != list(range(len(edges))):
            raise ValueError("edge ids must be unique and contiguous from 0")

        occurrences: dict[int, list[tuple[int, int]]] = {e.id: [] for e in edges}
        for t, tri in enumerate(self.triangles):
            if len(tri) != 3:
                raise ValueError(f"triangle {t} does not have 3 sides")
            if len(set(tri)) != 3:
                raise SelfFoldedForbidden(f"triangle {t} repeats a side")
            for s, eid in enumerate(tri):
                if eid not in occurrences:
                    raise EdgeNotFound(f"triangle {t} uses unknown edge {eid}")
                occurrences[eid].append((t, s))
        object.__setattr__(self, "_occurrences", occurrences)

        arcs = [e for e in edges if e.kind == ARC]
        segments = [e for e in edges if e.kind == BOUNDARY]
        for e in arcs:
            if len(occurrences[e.id]) != 2:
                raise ArcMultiplicityError(
                    f"arc {e.id} occurs {len(occurrences[e.id])} times, expected 2"
                )
        for e in segments:
            if len(occurrences[e.id]) != 1:
                raise ArcMultiplicityError(
                    f"boundary segment {e.id} occurs "
                    f"{len(occurrences[e.id])} times, expected 1"
                )

        n_arcs = len(arcs)
        n_seg = len(segments)
        n_tri = len(self.triangles)
        if n_arcs != surface.arc_count():
            raise CountMismatch(
                f"{n_arcs} arcs, surface needs {surface.arc_count()}"
            )
        if n_seg != sum(surface.marked_on_boundary):
            raise CountMismatch(
                f"{n_seg} boundary segments, surface needs "
                f"{sum(surface.marked_on_boundary)}"
            )
        if 3 * n_tri != 2 * n_arcs + n_seg:
            raise CountMismatch("3 * triangles != 2 * arcs + boundary segments")

        # Glue corners.  The head corner of side slot s is (t, s); the tail
        # is (t, s-1).  An arc's two occurrences identify head with tail.
        corners = [(t, s) for t in range(n_tri) for s in range(3)]
        uf = _UnionFind(corners)
        for e in arcs:
            (t1, s1), (t2, s2) = occurrences[e.id]
            uf.union((t1, s1), (t2, (s2 - 1) % 3))
            uf.union((t1, (s1 - 1) % 3), (t2, s2))
        classes: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for c in corners:
            classes.setdefault(uf.find(c), []).append(c)
        vertex_classes = tuple(
            frozenset(members) for _, members in sorted(classes.items())
        )
        object.__setattr__(self, "vertex_classes", vertex_classes)

        n_vertices = len(vertex_classes)
        euler = n_vertices - (n_arcs + n_seg) + n_tri
        expected = 2 - 2 * surface.genus - surface.boundary_components
        if euler != expected:
            raise EulerMismatch(
                f"V - E + F = {euler}, surface requires {expected}"
            )

        # Boundary cycles: each boundary class must be the head of exactly
        # one segment and the tail of exactly one.
        cls_of = {c: uf.find(c) for c in corners}
        head_of: dict[tuple[int, int], int] = {}
        tail_of: dict[tuple[int, int], int] = {}
        for e in segments:
            ((t, s),) = occurrences[e.id]
            head = cls_of[(t, s)]
            tail = cls_of[(t, (s - 1) % 3)]
            if head in head_of or tail in tail_of:
                raise CountMismatch("boundary segments do not form simple cycles")
            head_of[head] = e.id
            tail_of[tail] = e.id
        if set(head_of) != set(tail_of):
            raise CountMismatch("boundary segments do not close up")
        cycles = []
        remaining = dict(tail_of)
        while remaining:
            start_cls = min(remaining)
            cyc = []
            cls = start_cls
            while True:
                seg = remaining.pop(cls)
                cyc.append(seg)
                ((t, s),) = occurrences[seg]
                cls = cls_of[(t, s)]
                if cls == start_cls:
                    break
            cycles.append(tuple(cyc))
        object.__setattr__(self, "_boundary_cycles", tuple(cycles))

        if len(cycles) != surface.boundary_components:
            raise CountMismatch(
                f"{len(cycles)} boundary cycles, surface declares "
                f"{surface.boundary_components}"
            )
        if sorted(len(c) for c in cycles) != sorted(surface.marked_on_boundary):
            raise CountMismatch(
                "marked points per boundary component disagree with declaration"
            )
        n_boundary_marked = len(head_of)
        punctures = n_vertices - n_boundary_marked
        if punctures != surface.punctures:
            raise CountMismatch(
                f"{punctures} interior marked points, surface declares "
                f"{surface.punctures}"
            )

        stats = SurfaceStats(
            genus=surface.genus,
            boundary_components=len(cycles),
            punctures=punctures,
            marked_points=n_vertices,
            arcs=n_arcs,
            boundary_segments=n_seg,
            triangles=n_tri,
            euler_characteristic=euler,
        )
        object.__setattr__(self, "_stats", stats)


def validate(t: Triangulation) -> SurfaceStats:
    """Stats of a triangulation; construction already raised on bad data."""
    return t.stats()


# -- quiver extraction -------------------------------------------------------

def quiver_of(t: Triangulation) -> Quiver:
    """One vertex per arc; an arrow for each consecutive arc pair inside a
    triangle; opposing arrows cancelled."""
    ids = t.arc_ids()
    index = {eid: i for i, eid in enumerate(ids)}
    n = len(ids)
    raw = [[0] * n for _ in range(n)]
    for tri in t.triangles:
        for s in range(3):
            a, b = tri[s], tri[(s + 1) % 3]
            if a in index and b in index:
                raw[index[a]][index[b]] += 1
    bmat = [
        [raw[i][j] - raw[j][i] for j in range(n)]
        for i in range(n)
    ]
    return Quiver(bmat)


# -- flips -------------------------------------------------------------------

def _rotated(tri: Triple, eid: int) -> Triple:
    s = tri.index(eid)
    return (tri[s], tri[(s + 1) % 3], tri[(s + 2) % 3])


def flip(t: Triangulation, k: int) -> Triangulation:
    r"""Flip the arc k: the diagonal of the quadrilateral formed by its two
    triangles is exchanged for the other diagonal.

        (k, a, b), (k, c, d)  ->  (k, b, c), (k, d, a)

            .___a___.                .___a___.
            |      /|                |\      |
            d    k  b      ->        d  k    b
            |  /    |                |    \  |
            .___c___.                .___c___.

    The flipped arc keeps its id, so the quiver vertex map across a flip
    is the identity.  Works verbatim when the two triangles share both
    remaining sides (as on the once-punctured torus).
    """
    if not t.is_arc(k):
        raise NotAnArc(f"edge {k} is a boundary segment")
    (t1, _), (t2, _) = t.triangles_of(k)
    _, a, b = _rotated(t.triangles[t1], k)
    _, c, d = _rotated(t.triangles[t2], k)
    triangles = list(t.triangles)
    triangles[t1] = (k, b, c)
    triangles[t2] = (k, d, a)
    return Triangulation(t.surface, t.edges, triangles)


# -- neighborhood classification ---------------------------------------------

CASE_LABELS = ("1", "2a", "2b", "2c", "3a", "3b", "4a", "4b", "4c")


def classify_arc(t: Triangulation, k: int) -> str:
    """Case label of the arc k's neighborhood.

    With the two incident triangles written (k, j1, i1) and (k, j2, i2),
    the sides j* receive the arrow leaving k and the sides i* send the
    arrow entering k (when they are arcs).  The label is decided by how
    many of the four sides are boundary segments and which of them
    coincide; each label's arrow-count constraints are then asserted on
    the quiver, so a violation signals corrupted triangulation data.
    """
    if not t.is_arc(k):
        raise NotAnArc(f"edge {k} is a boundary segment")
    (t1, _), (t2, _) = t.triangles_of(k)
    _, j1, i1 = _rotated(t.triangles[t1], k)
    _, j2, i2 = _rotated(t.triangles[t2], k)

    if (i1 == j2) or (j1 == i2):
        raise CaseConstraintViolated(
            f"arc {k}: a side enters one triangle and leaves the other; "
            "outside the case table"
        )

    q = quiver_of(t)
    vx = t.arc_vertex

    def arrows(src: int, dst: int) -> int:
        return max(q.b[vx(src)][vx(dst)], 0)

    def deg(eid: int) -> tuple[int, int]:
        ins = sum(max(q.b[i][vx(eid)], 0) for i in range(q.n))
        outs = sum(max(q.b[vx(eid)][j], 0) for j in range(q.n))
        return ins, outs

    def require(cond: bool, label: str, what: str):
        if not cond:
            raise CaseConstraintViolated(f"arc {k}, case {label}: {what}")

    is_arc = t.is_arc
    sides = [j1, i1, j2, i2]
    nb = sum(0 if is_arc(e) else 1 for e in sides)
    k_in, k_out = deg(k)

    if nb >= 3:
        # One arrow touches k when a single side is an arc, none when all
        # four are boundary (the one-diagonal square disc).
        require(k_in + k_out == 4 - nb, "1", "wrong number of arrows at k")
        return "1"

    if nb == 2:
        arcs = [e for e in sides if is_arc(e)]
        if arcs[0] == arcs[1]:
            require(
                (k_in, k_out) in ((2, 0), (0, 2)),
                "2a",
                "expected a double arrow between k and its neighbor",
            )
            return "2a"
        ins = [e for e in (i1, i2) if is_arc(e)]
        outs = [e for e in (j1, j2) if is_arc(e)]
        if len(ins) == 2 or len(outs) == 2:
            require(
                (k_in, k_out) in ((2, 0), (0, 2)),
                "2b",
                "expected two single arrows on one side of k",
            )
            return "2b"
        # One arc enters, one leaves.  When both live in the same triangle
        # that triangle also contributes the return arrow out -> in.
        require((k_in, k_out) == (1, 1), "2c", "expected degrees (1,1)")
        u, v = ins[0], outs[0]
        same_triangle = (u, v) in ((i1, j1), (i2, j2))
        if same_triangle:
            require(arrows(v, u) >= 1, "2c", "missing the return arrow")
        return "2c"

    if nb == 1:
        if i1 == i2 or j1 == j2:
            # The repeated side pairs doubly with k; the remaining arc is
            # single and returns to it inside their shared triangle.
            require(
                (k_in, k_out) in ((2, 1), (1, 2)), "3a", "expected degrees (2,1)"
            )
            if i1 == i2:
                double, partner = i1, (j1 if is_arc(j1) else j2)
            else:
                double, partner = j1, (i1 if is_arc(i1) else i2)
            require(
                arrows(double, k) == 2 or arrows(k, double) == 2,
                "3a",
                "repeated side must pair doubly with k",
            )
            if i1 == i2:
                require(arrows(partner, double) == 1, "3a", "return arrow != 1")
            else:
                require(arrows(double, partner) == 1, "3a", "return arrow != 1")
            return "3a"
        require((k_in, k_out) in ((2, 1), (1, 2)), "3b", "expected degrees (2,1)")
        # Same-triangle out/in pairs carry a return arrow; cross pairs none.
        for jj, ii in ((j1, i1), (j2, i2)):
            if is_arc(jj) and is_arc(ii):
                require(arrows(jj, ii) >= 1, "3b", "missing same-triangle return")
        for jj, ii in ((j1, i2), (j2, i1)):
            if is_arc(jj) and is_arc(ii):
                require(arrows(jj, ii) == 0, "3b", "unexpected cross arrow")
        return "3b"

    require((k_in, k_out) == (2, 2), "4", "expected degrees (2,2)")
    coincidences = (i1 == i2) + (j1 == j2)
    if coincidences == 2:
        require(arrows(i1, k) == 2, "4a", "expected double arrow into k")
        require(arrows(k, j1) == 2, "4a", "expected double arrow out of k")
        require(arrows(j1, i1) == 2, "4a", "expected double return arrow")
        return "4a"
    if coincidences == 1:
        if j1 == j2:
            double, p1, p2 = j1, i1, i2
            require(arrows(k, double) == 2, "4b", "expected double arrow k -> j")
            require(arrows(p1, k) == 1 and arrows(p2, k) == 1, "4b", "singles")
            require(
                arrows(double, p1) == 1 and arrows(double, p2) == 1,
                "4b",
                "return arrows must be single",
            )
        else:
            double, p1, p2 = i1, j1, j2
            require(arrows(double, k) == 2, "4b", "expected double arrow i -> k")
            require(arrows(k, p1) == 1 and arrows(k, p2) == 1, "4b", "singles")
            require(
                arrows(p1, double) == 1 and arrows(p2, double) == 1,
                "4b",
                "return arrows must be single",
            )
        return "4b"
    require(arrows(j1, i1) >= 1, "4c", "missing same-triangle return")
    require(arrows(j2, i2) >= 1, "4c", "missing same-triangle return")
    require(arrows(j1, i2) == 0, "4c", "unexpected cross arrow")
    require(arrows(j2, i1) == 0, "4c", "unexpected cross arrow")
    return "4c"


# -- marked-point constructions ----------------------------------------------

def add_puncture_on_arc(t: Triangulation, gamma: int) -> tuple[Triangulation, int]:
    """Replace the arc gamma by four arcs around a new puncture.

    Two parallel copies of gamma bound a digon holding the puncture; two
    more arcs join gamma's endpoints to it.  The first triangle keeps
    gamma's id as its copy; the second gets a fresh copy.  Returns the new
    triangulation and the id of the endpoint-to-puncture arc whose quiver
    vertex has in-degree 1 and out-degree 1.
    """
    if not t.is_arc(gamma):
        raise NotAnArc(f"edge {gamma} is a boundary segment")
    (t1, s1), (t2, s2) = t.triangles_of(gamma)

    base = len(t.edges)
    mid = base  # endpoint -> puncture, the distinguished arc
    copy2 = base + 1  # second parallel copy of gamma, replaces it in t2
    other = base + 2  # the other endpoint -> puncture arc

    edges = list(t.edges) + [
        Edge(mid, ARC),
        Edge(copy2, ARC),
        Edge(other, ARC),
    ]
    triangles = list(t.triangles)
    tri2 = list(triangles[t2])
    tri2[s2] = copy2
    triangles[t2] = tuple(tri2)
    # Digon interior: (gamma, mid, other) and (mid, copy2, other) glue into
    # a disc around the puncture; mid keeps exactly one arrow in (from
    # gamma's copy) and one out (to the other copy) after the opposing
    # mid/other arrows cancel.
    triangles.append((gamma, mid, other))
    triangles.append((mid, copy2, other))

    surface = MarkedSurface(
        genus=t.surface.genus,
        boundary_components=t.surface.boundary_components,
        punctures=t.surface.punctures + 1,
        marked_on_boundary=t.surface.marked_on_boundary,
    )
    return Triangulation(surface, edges, triangles), mid


def has_spade_triangle(t: Triangulation) -> int | None:
    """Index of the first triangle with exactly one boundary side, if any."""
    for idx, tri in enumerate(t.triangles):
        boundary_sides = sum(0 if t.is_arc(e) else 1 for e in tri)
        if boundary_sides == 1:
            return idx
    return None


def add_boundary_marked_point(
    t: Triangulation, tri: int
) -> tuple[Triangulation, int]:
    """Split the boundary side of a one-boundary-side triangle at a new
    marked point and join that point to the opposite corner by a new arc.

    The triangle (c, x, y) becomes (c_head, x, new) and (c_tail, new, y);
    c keeps its id as the tail half.  Returns the new triangulation and
    the new arc's id; its quiver vertex has degrees (1,1), and both
    replacement triangles again have exactly one boundary side.
    """
    if not 0 <= tri < len(t.triangles):
        raise IndexOutOfRange(f"triangle index {tri} out of range")
    sides = t.triangles[tri]
    boundary_sides = [e for e in sides if not t.is_arc(e)]
    if len(boundary_sides) != 1:
        raise SpadeViolated(
            f"triangle {tri} has {len(boundary_sides)} boundary sides, need 1"
        )
    c = boundary_sides[0]
    _, x, y = _rotated(sides, c)

    new_arc = len(t.edges)
    c_head = len(t.edges) + 1
    edges = list(t.edges) + [Edge(new_arc, ARC), Edge(c_head, BOUNDARY)]

    triangles = list(t.triangles)
    triangles[tri] = (c_head, x, new_arc)
    triangles.append((c, new_arc, y))

    marked = list(t.surface.marked_on_boundary)
    for cycle_idx, cycle in enumerate(t.boundary_cycles()):
        if c in cycle:
            # marked_on_boundary is matched as a multiset, so bump the
            # declared count for a component of this cycle's length.
            marked[marked.index(len(cycle))] += 1
            break
    surface = MarkedSurface(
        genus=t.surface.genus,
        boundary_components=t.surface.boundary_components,
        punctures=t.surface.punctures,
        marked_on_boundary=marked,
    )
    return Triangulation(surface, edges, triangles), new_arc


# -- serialization -----------------------------------------------------------

def triangulation_to_json(t: Triangulation, indent: int | None = None) -> str:
    """tri-v1 text; triangle triples normalized to start at their smallest id."""
    payload = {
        "format": "tri-v1",
        "surface": {
            "genus": t.surface.genus,
            "boundary": t.surface.boundary_components,
            "punctures": t.surface.punctures,
            "marked": list(t.surface.marked_on_boundary),
        },
        "edges": [{"id": e.id, "kind": e.kind} for e in t.edges],
        "triangles": [list(tri) for tri in t.normalized_triangles()],
    }
    return json.dumps(payload, indent=indent)


def triangulation_from_json(data: str | bytes | dict) -> Triangulation:
    obj = json.loads(data) if isinstance(data, (str, bytes)) else data
    if not isinstance(obj, dict) or obj.get("format") != "tri-v1":
        raise ValueError("expected a tri-v1 object")
    s = obj["surface"]
    surface = MarkedSurface(
        genus=int(s["genus"]),
        boundary_components=int(s["boundary"]),
        punctures=int(s["punctures"]),
        marked_on_boundary=tuple(int(c) for c in s.get("marked", [])),
    )
    edges = [Edge(int(e["id"]), str(e["kind"])) for e in obj["edges"]]
    triangles = [tuple(int(x) for x in tri) for tri in obj["triangles"]]
    return Triangulation(surface, edges, triangles)
