"""Mutation-class enumeration, constancy checks, and seeded random walks.

The mutation class of a quiver is everything reachable by sequences of
single-vertex mutations, taken up to isomorphism.  Enumeration is a
level-synchronous BFS over canonical forms.  Finiteness is decided by a
multiplicity cutoff: with three or more vertices, any reachable entry
above the threshold marks the class as infinite (two-vertex mutation only
flips the arrow, so those classes are always finite regardless of
multiplicity).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetZero, ClassNotExhausted
from .quiver import (
    Quiver,
    arrow_count,
    canonical_form,
    canonical_key,
    degrees,
    mutate,
    quiver_from_json,
    quiver_to_json,
)

EXHAUSTED_FINITE = "ExhaustedFinite"
TRUNCATED_AT_BUDGET = "TruncatedAtBudget"
INFINITE_DETECTED = "InfiniteDetected"

DEFAULT_MAX_CLASSES = 100_000
DEFAULT_MAX_MULTIPLICITY = 2


@dataclass(frozen=True)
class ClassReport:
    representatives: tuple[Quiver, ...]  # canonical forms, pairwise non-isomorphic
    arrow_counts: tuple[int, ...]  # parallel to representatives
    verdict: str
    explored: int  # number of BFS expansions performed


@dataclass(frozen=True)
class WalkReport:
    steps: int
    seed: int
    arrow_count_min: int
    arrow_count_max: int
    degree_profile_constant: bool  # every visited quiver all-(2,2)


def _exceeds_multiplicity(q: Quiver, max_multiplicity: int) -> bool:
    if q.n < 3:
        return False
    return any(
        abs(q.b[i][j]) > max_multiplicity
        for i in range(q.n)
        for j in range(i + 1, q.n)
    )


def enumerate_class(
    q: Quiver,
    max_classes: int = DEFAULT_MAX_CLASSES,
    max_multiplicity: int = DEFAULT_MAX_MULTIPLICITY,
) -> ClassReport:
    """BFS over single mutations, deduplicated by canonical key.

    Stops with InfiniteDetected as soon as any reached quiver (the input
    included) trips the multiplicity cutoff, and with TruncatedAtBudget
    when a discovery would push the class count past max_classes.
    """
    if max_classes < 1:
        raise BudgetZero("max_classes must be >= 1")
    if max_multiplicity < 2:
        raise ValueError("max_multiplicity must be >= 2")

    start = canonical_form(q)
    found: dict[bytes, Quiver] = {canonical_key(start): start}
    explored = 0

    def report(verdict: str) -> ClassReport:
        reps = tuple(found[k] for k in sorted(found))
        return ClassReport(
            representatives=reps,
            arrow_counts=tuple(arrow_count(r) for r in reps),
            verdict=verdict,
            explored=explored,
        )

    if _exceeds_multiplicity(start, max_multiplicity):
        return report(INFINITE_DETECTED)

    frontier = [start]
    while frontier:
        new_keys: list[bytes] = []
        for rep in frontier:
            explored += 1
            for k in range(rep.n):
                neighbor = canonical_form(mutate(rep, k))
                key = canonical_key(neighbor)
                if key in found:
                    continue
                if _exceeds_multiplicity(neighbor, max_multiplicity):
                    # Keep the witness: its entry is the infiniteness evidence.
                    found[key] = neighbor
                    return report(INFINITE_DETECTED)
                if len(found) >= max_classes:
                    # One more class would exceed the budget; stop at the cap.
                    return report(TRUNCATED_AT_BUDGET)
                found[key] = neighbor
                new_keys.append(key)
        # Present the next level in canonical-key order for determinism.
        frontier = [found[k] for k in sorted(new_keys)]
    return report(EXHAUSTED_FINITE)


def constant_arrow_verdict(report: ClassReport) -> bool:
    """True iff every class member has the same arrow count.

    Only meaningful for a fully exhausted class.
    """
    if report.verdict != EXHAUSTED_FINITE:
        raise ClassNotExhausted(f"verdict is {report.verdict}")
    return len(set(report.arrow_counts)) == 1


# --- seeded walks ------------------------------------------------------------

_MASK64 = (1 << 64) - 1


def splitmix64(seed: int) -> Iterator[int]:
    """The splitmix64 stream; fixed here so walks are reproducible
    across platforms and Python versions."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def _all_two_two(q: Quiver) -> bool:
    return all(degrees(q, v) == (2, 2) for v in range(q.n))


def random_mutation_walk(q: Quiver, steps: int, seed: int) -> WalkReport:
    """Mutate `steps` times at PRNG-drawn vertices (next u64 mod n),
    tracking the arrow-count range and whether every visited quiver,
    the start included, had all vertices of degree (2,2)."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    rng = splitmix64(seed)
    cur = q
    lo = hi = arrow_count(q)
    profile = _all_two_two(q)
    for _ in range(steps):
        cur = mutate(cur, next(rng) % cur.n)
        c = arrow_count(cur)
        lo = min(lo, c)
        hi = max(hi, c)
        if profile:
            profile = _all_two_two(cur)
    return WalkReport(
        steps=steps,
        seed=seed,
        arrow_count_min=lo,
        arrow_count_max=hi,
        degree_profile_constant=profile,
    )


# --- serialization ----------------------------------------------------------

def class_report_to_json(report: ClassReport, indent: int | None = None) -> str:
    """classreport-v1; representatives appear in canonical-key sort order."""
    pairs = sorted(
        zip(report.representatives, report.arrow_counts),
        key=lambda rc: canonical_key(rc[0]),
    )
    payload = {
        "format": "classreport-v1",
        "verdict": report.verdict,
        "explored": report.explored,
        "representatives": [json.loads(quiver_to_json(r)) for r, _ in pairs],
        "arrow_counts": [c for _, c in pairs],
    }
    return json.dumps(payload, indent=indent)


def class_report_from_json(data: str | bytes | dict) -> ClassReport:
    obj = json.loads(data) if isinstance(data, (str, bytes)) else data
    if not isinstance(obj, dict) or obj.get("format") != "classreport-v1":
        raise ValueError("expected a classreport-v1 object")
    reps = tuple(quiver_from_json(r) for r in obj["representatives"])
    return ClassReport(
        representatives=reps,
        arrow_counts=tuple(int(c) for c in obj["arrow_counts"]),
        verdict=obj["verdict"],
        explored=int(obj["explored"]),
    )


def walk_report_to_json(report: WalkReport, indent: int | None = None) -> str:
    payload = {
        "format": "walkreport-v1",
        "steps": report.steps,
        "seed": report.seed,
        "arrow_count_min": report.arrow_count_min,
        "arrow_count_max": report.arrow_count_max,
        "degree_profile_constant": report.degree_profile_constant,
    }
    return json.dumps(payload, indent=indent)
