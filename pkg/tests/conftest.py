"""Shared helpers: brute-force oracles kept deliberately independent of
the library's own canonical-labeling and search code."""

from __future__ import annotations

import itertools
import random

from quivermut import Quiver, mutate


def brute_canonical_matrix(q: Quiver) -> tuple:
    """Lexicographically minimal relabeled matrix, by trying every
    permutation.  Only sane for n <= 7."""
    n = q.n
    best = None
    for perm in itertools.permutations(range(n)):
        cand = tuple(
            tuple(q.b[perm[i]][perm[j]] for j in range(n)) for i in range(n)
        )
        if best is None or cand < best:
            best = cand
    return best


def brute_isomorphic(a: Quiver, b: Quiver) -> bool:
    if a.n != b.n:
        return False
    return brute_canonical_matrix(a) == brute_canonical_matrix(b)


def brute_class_matrices(q: Quiver, cap: int = 10_000) -> set[tuple]:
    """All iso classes reachable by mutation, keyed by the brute-force
    minimal matrix.  Raises if the cap is hit."""
    start = brute_canonical_matrix(q)
    seen = {start}
    frontier = [q]
    while frontier:
        nxt = []
        for cur in frontier:
            for k in range(cur.n):
                neighbor = mutate(cur, k)
                key = brute_canonical_matrix(neighbor)
                if key not in seen:
                    if len(seen) >= cap:
                        raise RuntimeError("brute class search exceeded cap")
                    seen.add(key)
                    nxt.append(neighbor)
        frontier = nxt
    return seen


def random_skew_matrix(rng: random.Random, n: int, max_entry: int = 2):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rng.randint(-max_entry, max_entry)
            rows[j][i] = -rows[i][j]
    return tuple(tuple(r) for r in rows)


def random_quiver(rng: random.Random, n: int, max_entry: int = 2) -> Quiver:
    return Quiver(random_skew_matrix(rng, n, max_entry))
