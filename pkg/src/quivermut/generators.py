"""Constructors for the named quiver and triangulation families.

Closed-surface and bordered-surface families are built from explicit
polygon triangulations: a fan of diagonals from vertex 0 of a polygon
whose sides are then pairwise identified (closed pieces) or left free
(boundary).  Identification is by shared edge id, which under the
combinatorial-map gluing rule identifies sides head-to-tail, exactly the
orientation that keeps the quotient an oriented surface.  Every result
passes full triangulation validation on construction.
"""

from __future__ import annotations

from .errors import TooFewPoints, UnknownName, UnsupportedSignature
from .quiver import Quiver, arrow_count, degrees, is_connected, quiver_from_arrows
from .surface import ARC, BOUNDARY, Edge, MarkedSurface, Triangulation, quiver_of


def polygon_fan_triangulation(m: int) -> Triangulation:
    """Disc with m boundary marked points, triangulated by the fan of
    diagonals from vertex 0.  Edge ids: diagonals (0,j) for j=2..m-2 get
    ids 0..m-4 in order, then the boundary sides."""
    if m < 3:
        raise TooFewPoints(f"polygon needs >= 3 marked points, got {m}")
    n_arcs = m - 3
    # diagonal to vertex j -> id j-2; boundary side p (1-based) -> n_arcs+p-1
    def did(j: int) -> int:
        return j - 2

    def sid(p: int) -> int:
        return n_arcs + p - 1

    edges = [Edge(i, ARC) for i in range(n_arcs)] + [
        Edge(n_arcs + i, BOUNDARY) for i in range(m)
    ]
    if m == 3:
        triangles = [(sid(1), sid(2), sid(3))]
    else:
        triangles = [(sid(1), sid(2), did(2))]
        for j in range(2, m - 2):  # middle fan triangles
            triangles.append((did(j), sid(j + 1), did(j + 1)))
        triangles.append((did(m - 2), sid(m - 1), sid(m)))
    surface = MarkedSurface(
        genus=0, boundary_components=1, punctures=0, marked_on_boundary=(m,)
    )
    return Triangulation(surface, edges, triangles)


def qg0_triangulation(g: int) -> Triangulation:
    """Closed genus-g surface with one puncture, from the 4g-gon whose
    sides carry labels 1,2,1,2,...,2g-1,2g,2g-1,2g (equal labels are
    identified) and the fan of diagonals from vertex 0.

    Edge ids: diagonal to vertex j (j=2..4g-2) -> j-2; side label l -> 4g-4+l.
    """
    if g < 1:
        raise ValueError("genus must be >= 1")
    nsides = 4 * g
    n_diag = nsides - 3

    def label(p: int) -> int:
        # 1-based side position -> 1-based label
        block, pos = divmod(p - 1, 4)
        return 2 * block + 1 + (pos % 2)

    def did(j: int) -> int:
        return j - 2

    def sid(p: int) -> int:
        return n_diag + label(p) - 1

    edges = [Edge(i, ARC) for i in range(n_diag + 2 * g)]
    triangles = [(sid(1), sid(2), did(2))]
    for j in range(2, nsides - 2):
        triangles.append((did(j), sid(j + 1), did(j + 1)))
    triangles.append((did(nsides - 2), sid(nsides - 1), sid(nsides)))
    surface = MarkedSurface(genus=g, boundary_components=0, punctures=1)
    return Triangulation(surface, edges, triangles)


def qg0_quiver(g: int) -> Quiver:
    """Representative of the closed-surface class: all degrees (2,2)."""
    return quiver_of(qg0_triangulation(g))


def qgb_triangulation(g: int, b: int) -> Triangulation:
    """Genus-g surface with b boundary components, one marked point each.

    Built from an (4g+3b-2)-gon with side word

        c1  (a1 b1 a1 b1) ... (ag bg ag bg)  (x2 c2 x2) ... (xb cb xb)

    fanned from vertex 0.  The a/b pairs close up the genus handles; each
    x..x pair pinches off a boundary circle holding the single segment ci.
    Edge ids: fan diagonals first, then a/b letters, then x letters, then
    the boundary segments c1..cb.
    """
    if g < 0:
        raise UnsupportedSignature("genus must be >= 0")
    if b < 1:
        raise UnsupportedSignature("need at least one boundary component")
    if (g, b) == (0, 1):
        raise UnsupportedSignature("the once-marked disc has no triangulation")
    nsides = 4 * g + 3 * b - 2
    n_diag = nsides - 3
    n_letters = 2 * g + (b - 1)  # a/b letters plus x letters

    word: list[int] = []  # edge id of each polygon side, in order
    arc_id = n_diag
    seg_id = n_diag + n_letters
    word.append(seg_id)  # c1
    for _ in range(g):
        a, bb = arc_id, arc_id + 1
        arc_id += 2
        word.extend([a, bb, a, bb])
    for _ in range(2, b + 1):
        x = arc_id
        arc_id += 1
        seg_id += 1
        word.extend([x, seg_id, x])

    def did(j: int) -> int:
        return j - 2

    def sid(p: int) -> int:
        return word[p - 1]

    edges = [Edge(i, ARC) for i in range(n_diag + n_letters)] + [
        Edge(n_diag + n_letters + i, BOUNDARY) for i in range(b)
    ]
    triangles = [(sid(1), sid(2), did(2))]
    for j in range(2, nsides - 2):
        triangles.append((did(j), sid(j + 1), did(j + 1)))
    triangles.append((did(nsides - 2), sid(nsides - 1), sid(nsides)))
    surface = MarkedSurface(
        genus=g, boundary_components=b, punctures=0, marked_on_boundary=(1,) * b
    )
    return Triangulation(surface, edges, triangles)


def qgb_quiver(g: int, b: int) -> Quiver:
    """Representative of the bordered-surface class Q_{g,b} (b >= 1).

    Self-checks the promised shape before returning: 6(g-1)+4b vertices,
    12(g-1)+7b arrows, connected, and no vertex of degrees (1,1).
    """
    q = quiver_of(qgb_triangulation(g, b))
    want_n = 6 * (g - 1) + 4 * b
    want_arrows = 12 * (g - 1) + 7 * b
    if q.n != want_n or arrow_count(q) != want_arrows:
        raise AssertionError(
            f"Q_({g},{b}) generator produced {q.n} vertices / "
            f"{arrow_count(q)} arrows, wanted {want_n} / {want_arrows}"
        )
    if not is_connected(q):
        raise AssertionError(f"Q_({g},{b}) generator is disconnected")
    if any(degrees(q, k) == (1, 1) for k in range(q.n)):
        raise AssertionError(f"Q_({g},{b}) generator has a (1,1) vertex")
    return q


def a_n_quiver(n: int) -> Quiver:
    """Linear path 0 -> 1 -> ... -> n-1."""
    if n < 1:
        raise ValueError("need n >= 1")
    return quiver_from_arrows(n, [(i, i + 1, 1) for i in range(n - 1)])


def markov_quiver() -> Quiver:
    """The 3-vertex double-arrow cycle; same as qg0_quiver(1)."""
    return quiver_from_arrows(3, [(0, 1, 2), (1, 2, 2), (2, 0, 2)])


# Fixed representatives of the eleven exceptional mutation classes.
#
# E6/E7/E8: a linearly oriented path with one branch vertex.
# E6t/E7t/E8t: three chains oriented away from a central vertex, with leg
# lengths (2,2,2), (3,3,1) and (5,2,1).
# E6_11/E7_11/E8_11: a double arrow c1 => c2 closed into three 3-cycles
# c1 => c2 -> v -> c1, with outgoing chains of lengths (1,1,1), (2,2,0)
# and (4,1,0) hanging off the three middle vertices; the 8-vertex one is
# laid out so the documented two-step mutation runs at vertices 1 then 2.
# X6/X7: a hub with pendant/double-arrow blades; their class sizes and
# arrow spectra are pinned by the test suite.

def _branch_path(path_len: int, branch_at: int) -> list[tuple[int, int, int]]:
    arrows = [(i, i + 1, 1) for i in range(path_len - 1)]
    arrows.append((branch_at, path_len, 1))
    return arrows


def _star(legs: tuple[int, ...]) -> list[tuple[int, int, int]]:
    arrows = []
    nxt = 1
    for leg in legs:
        prev = 0
        for _ in range(leg):
            arrows.append((prev, nxt, 1))
            prev = nxt
            nxt += 1
    return arrows


def _double_core(tails: tuple[int, ...]) -> list[tuple[int, int, int]]:
    # c1=0 => c2=1; middles 2,3,4; chain of tails[i] vertices off middle 2+i.
    arrows = [(0, 1, 2)]
    nxt = 5
    for i, tail in enumerate(tails):
        mid = 2 + i
        arrows.append((1, mid, 1))
        arrows.append((mid, 0, 1))
        prev = mid
        for _ in range(tail):
            arrows.append((prev, nxt, 1))
            prev = nxt
            nxt += 1
    return arrows


def _x7_arrows() -> list[tuple[int, int, int]]:
    # hub 0; blades (1,2), (3,4), (5,6): 0 -> a, a => b, b -> 0
    arrows = []
    for a in (1, 3, 5):
        arrows += [(0, a, 1), (a, a + 1, 2), (a + 1, 0, 1)]
    return arrows


def _x6_arrows() -> list[tuple[int, int, int]]:
    # two full blades and one pendant spoke
    arrows = []
    for a in (1, 3):
        arrows += [(0, a, 1), (a, a + 1, 2), (a + 1, 0, 1)]
    arrows.append((0, 5, 1))
    return arrows


_EXCEPTIONAL: dict[str, tuple[int, list[tuple[int, int, int]]]] = {
    "E6": (6, _branch_path(5, 2)),
    "E7": (7, _branch_path(6, 2)),
    "E8": (8, _branch_path(7, 2)),
    "E6t": (7, _star((2, 2, 2))),
    "E7t": (8, _star((3, 3, 1))),
    "E8t": (9, _star((5, 2, 1))),
    "E7_11": (9, _double_core((2, 2, 0))),
    "E8_11": (10, _double_core((4, 1, 0))),
    "X6": (6, _x6_arrows()),
    "X7": (7, _x7_arrows()),
}


def _e6_11() -> tuple[int, list[tuple[int, int, int]]]:
    # The 8-vertex member written out explicitly: double arrow 3 => 4,
    # three 3-cycles through it, and pendants at 1, 5 and 7.
    arrows = [
        (4, 1, 1), (1, 2, 1), (1, 3, 1), (3, 4, 2),
        (5, 3, 1), (5, 6, 1), (4, 5, 1), (4, 7, 1),
        (7, 3, 1), (7, 0, 1),
    ]
    return 8, arrows


_EXCEPTIONAL["E6_11"] = _e6_11()

EXCEPTIONAL_NAMES = (
    "E6", "E7", "E8", "E6t", "E7t", "E8t",
    "E6_11", "E7_11", "E8_11", "X6", "X7",
)


def exceptional_quiver(name: str) -> Quiver:
    """One of the eleven exceptional mutation-class representatives."""
    if name not in _EXCEPTIONAL:
        raise UnknownName(
            f"unknown exceptional quiver {name!r}; "
            f"choose from {', '.join(EXCEPTIONAL_NAMES)}"
        )
    n, arrows = _EXCEPTIONAL[name]
    return quiver_from_arrows(n, arrows)


def exists_constant_class(n: int):
    """Does some constant-arrow-count mutation class have n vertices?

    True for n <= 2 (walks on one or two vertices only reverse arrows)
    and otherwise exactly when n is 6g-3 (closed case, g >= 1) or
    6(g-1)+4b (bordered case, b >= 1, not the once-marked disc).  Returns
    (True, witness) with the first witness in (g, b) lexicographic order,
    witness "n<=2" for the small cases, or (False, None).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n <= 2:
        return True, "n<=2"
    g = 0
    while 6 * (g - 1) <= n:
        if g >= 1 and 6 * g - 3 == n:
            return True, (g, 0)
        rem = n - 6 * (g - 1)
        if rem > 0 and rem % 4 == 0:
            b = rem // 4
            if (g, b) != (0, 1):
                return True, (g, b)
        g += 1
    return False, None
