"""Ground-truth brute force over whole crease patterns.

Depth-first search over crease values in a vertex-clustered order; a branch
dies as soon as any fully-assigned vertex fails its single-vertex check.
Counts are exact Python ints (arbitrary precision).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .cp import CreasePattern, MVAssignment, cone_at
from .errors import KawasakiViolation, LimitExceeded
from .single_vertex import (
    _check_values,
    _schedule,
    count_single_vertex_mv,
    kawasaki_check,
)

DEFAULT_BRUTE_LIMIT = 40


def _brute_limit(override: int | None) -> int:
    if override is not None:
        return override
    env = os.environ.get("FLATFOLD_BRUTE_LIMIT")
    return int(env) if env else DEFAULT_BRUTE_LIMIT


@dataclass
class LocalValidityReport:
    count: int
    witnesses: list[MVAssignment]
    per_vertex_counts: dict[str, int]
    cap_exceeded: bool = False


def _search_plan(cp: CreasePattern, crease_order: list[str] | None = None):
    """Crease assignment order plus per-position vertex-completion checks."""
    cones = {}
    for v in cp.interior_vertex_ids():
        cone = cone_at(cp, v)
        if not kawasaki_check(cone):
            raise KawasakiViolation(vertex=v)
        cones[v] = cone

    if crease_order is None:
        order: list[str] = []
        placed = set()
        for v in cp.interior_vertex_ids():
            for c in cones[v].crease_ids:
                if c not in placed:
                    placed.add(c)
                    order.append(c)
        for c in sorted(cp.creases):
            if c not in placed:
                placed.add(c)
                order.append(c)
    else:
        order = list(crease_order)
        if sorted(order) != sorted(cp.creases):
            raise ValueError("crease_order must be a permutation of the creases")

    pos = {c: i for i, c in enumerate(order)}
    checks_at: list[list] = [[] for _ in order]
    for v, cone in cones.items():
        sched = _schedule(cone.angles, cone.crease_ids)
        idxs = [pos[c] for c in cone.crease_ids]
        checks_at[max(idxs)].append((sched, idxs))
    return order, checks_at, cones


def enumerate_locally_valid(cp: CreasePattern, cap: int = 10000,
                            crease_order: list[str] | None = None) -> LocalValidityReport:
    """Exact count plus up to ``cap`` witness assignments."""
    order, checks_at, cones = _search_plan(cp, crease_order)
    n = len(order)
    vals = [0] * n
    count = 0
    witnesses: list[MVAssignment] = []
    capped = False

    def rec(i: int):
        nonlocal count, capped
        if i == n:
            count += 1
            if len(witnesses) < cap:
                witnesses.append(dict(zip(order, vals)))
            else:
                capped = True
            return
        for v in (1, -1):
            vals[i] = v
            ok = True
            for sched, idxs in checks_at[i]:
                if not _check_values(sched, [vals[k] for k in idxs]):
                    ok = False
                    break
            if ok:
                rec(i + 1)
        vals[i] = 0

    if n == 0:
        count = 1
        witnesses = [{}]
    else:
        rec(0)
    per_vertex = {v: count_single_vertex_mv(c) for v, c in cones.items()}
    return LocalValidityReport(count=count, witnesses=witnesses,
                               per_vertex_counts=per_vertex, cap_exceeded=capped)


def count_locally_valid(cp: CreasePattern, limit: int | None = None,
                        crease_order: list[str] | None = None) -> int:
    """Exact |M(cp)| without materializing witnesses."""
    n = len(cp.creases)
    lim = _brute_limit(limit)
    if n > lim:
        raise LimitExceeded(f"{n} creases exceed the brute-force limit {lim}")
    order, checks_at, _ = _search_plan(cp, crease_order)
    vals = [0] * n
    count = 0

    def rec(i: int):
        nonlocal count
        if i == n:
            count += 1
            return
        for v in (1, -1):
            vals[i] = v
            ok = True
            for sched, idxs in checks_at[i]:
                if not _check_values(sched, [vals[k] for k in idxs]):
                    ok = False
                    break
            if ok:
                rec(i + 1)
        vals[i] = 0

    if n == 0:
        return 1
    rec(0)
    return count


def is_locally_valid(cp: CreasePattern, mv: MVAssignment) -> bool:
    """Restriction of the assignment to every vertex folds flat."""
    from .single_vertex import is_valid_single_vertex
    for v in cp.interior_vertex_ids():
        cone = cone_at(cp, v)
        if not is_valid_single_vertex(cone, mv):
            return False
    return True
