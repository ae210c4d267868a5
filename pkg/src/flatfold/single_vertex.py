"""Single-vertex flat-foldability: Kawasaki, Maekawa, the big-little-big
condition, the crimp recursion, validity checking, counting and enumeration.

Conventions (used consistently across the library):

* ``j`` is the number of equal angles in a local-minimum run; the run is
  bordered by ``j + 1`` creases.
* For even ``j`` the crimp keeps the first bordering crease as the
  survivor; its value in the smaller cone is the majority value of the
  run creases.
* The recursion never re-checks Kawasaki after a crimp; the initial test
  is inherited through the cone states.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from .cp import Angle, ConeVertex, MVAssignment
from .errors import (
    AllAnglesEqual,
    CapExceeded,
    InvalidRun,
    KawasakiViolation,
)

#: marker returned by niceness() for cones whose angles are all equal
ALL_EQUAL = "all-equal"


@dataclass(frozen=True)
class MinRun:
    """A maximal run of equal sector angles strictly below both neighbours."""

    start: int                 # index into the cyclic angle list
    j: int                     # number of equal angles
    creases: tuple[str, ...]   # the j+1 bordering crease ids

    def angle_indices(self, n: int) -> list[int]:
        return [(self.start + k) % n for k in range(self.j)]


@dataclass(frozen=True)
class CrimpStep:
    run: MinRun
    result: ConeVertex


@dataclass(frozen=True)
class CrimpTrace:
    """The deterministic crimp recursion of a cone down to its all-equal base."""

    start: ConeVertex
    steps: tuple[CrimpStep, ...]

    @property
    def terminal(self) -> ConeVertex:
        return self.steps[-1].result if self.steps else self.start

    @property
    def max_j(self) -> int | None:
        return max((s.run.j for s in self.steps), default=None)


def kawasaki_check(cone: ConeVertex) -> bool:
    """Even degree and alternating angle sum exactly zero."""
    n = cone.degree
    if n % 2 != 0:
        return False
    s = Fraction(0)
    for i, a in enumerate(cone.angles):
        s += a if i % 2 == 0 else -a
    return s == 0


def maekawa_check(mv_values) -> bool:
    """Sum of +-1 values is +2 or -2."""
    return abs(sum(mv_values)) == 2


def blb_condition(j: int, mv_values) -> bool:
    """Validity of the j+1 crease values around a run of j equal angles.

    Sum zero when j is odd (even crease count), +-1 when j is even.
    """
    if len(mv_values) != j + 1:
        raise ValueError(f"expected {j + 1} values, got {len(mv_values)}")
    s = sum(mv_values)
    return s == 0 if j % 2 == 1 else abs(s) == 1


def find_min_runs(cone: ConeVertex) -> list[MinRun]:
    """All maximal runs of equal angles strictly smaller than both neighbours."""
    angles = cone.angles
    n = cone.degree
    if len(set(angles)) == 1:
        raise AllAnglesEqual("all sector angles are equal")
    runs = []
    i = 0
    # walk maximal equal runs starting from a position where a run begins
    start0 = 0
    while angles[start0 - 1] == angles[start0]:
        start0 -= 1  # negative indexing walks back over a wrapping run
    start0 %= n
    i = start0
    seen = 0
    while seen < n:
        j = 1
        while angles[(i + j) % n] == angles[i % n] and j < n:
            j += 1
        prev = angles[(i - 1) % n]
        nxt = angles[(i + j) % n]
        if prev > angles[i % n] and nxt > angles[i % n]:
            creases = tuple(cone.crease_ids[(i + k) % n] for k in range(j + 1))
            runs.append(MinRun(start=i % n, j=j, creases=creases))
        i += j
        seen += j
    runs.sort(key=lambda r: r.start)
    return runs


def crimp(cone: ConeVertex, run: MinRun) -> ConeVertex:
    """Fold away a local-minimum run, producing the smaller cone.

    Odd j: the run and both neighbours merge into prev - run + next and all
    j+1 bordering creases disappear. Even j: the run angles and the last j
    bordering creases disappear; the first bordering crease survives
    between the unchanged neighbours.
    """
    n = cone.degree
    runs = find_min_runs(cone)
    if run not in runs:
        raise InvalidRun(f"{run} is not a minimal run of this cone")
    if run.j >= n - 1:
        raise InvalidRun("run neighbours coincide; cone is not flat-foldable")
    # rotate so the run starts at index 1; then nothing wraps
    rot = cone.rotated((run.start - 1) % n)
    angles = list(rot.angles)
    ids = list(rot.crease_ids)
    j = run.j
    if j % 2 == 1:
        merged = angles[0] - angles[1] + angles[j + 1]
        new_angles = [merged] + angles[j + 2:]
        new_ids = [ids[0]] + ids[j + 2:]
    else:
        new_angles = [angles[0]] + angles[j + 1:]
        new_ids = ids[:2] + ids[j + 2:]
    return ConeVertex(tuple(new_angles), tuple(new_ids))


def crimp_trace(cone: ConeVertex) -> CrimpTrace:
    """Run the deterministic recursion (first MinRun each time) to the base."""
    steps = []
    cur = cone
    while len(set(cur.angles)) > 1:
        run = find_min_runs(cur)[0]
        cur = crimp(cur, run)
        steps.append(CrimpStep(run=run, result=cur))
    return CrimpTrace(start=cone, steps=tuple(steps))


def niceness(cone: ConeVertex):
    """Largest run length met by the recursion, or ALL_EQUAL.

    A vertex is 3-nice iff the returned value is an int <= 3.
    """
    if not kawasaki_check(cone):
        raise KawasakiViolation(message="niceness needs a Kawasaki-valid cone")
    if len(set(cone.angles)) == 1:
        return ALL_EQUAL
    return crimp_trace(cone).max_j


# -- fast validity schedule ---------------------------------------------------

@dataclass(frozen=True)
class _Schedule:
    """Positions, per crimp step, into the original crease tuple.

    Checking one assignment is O(degree) integer work; the schedule is
    cached per angle/crease tuple so brute-force loops stay fast.
    """

    steps: tuple[tuple[tuple[int, ...], int, int | None], ...]
    terminal_idx: tuple[int, ...]
    crease_ids: tuple[str, ...]


@lru_cache(maxsize=4096)
def _schedule(angles: tuple[Angle, ...], crease_ids: tuple[str, ...]) -> _Schedule:
    cone = ConeVertex(angles, crease_ids)
    trace = crimp_trace(cone)
    pos = {c: i for i, c in enumerate(crease_ids)}
    steps = []
    cur = cone
    for st in trace.steps:
        run = st.run
        idxs = tuple(pos[c] for c in run.creases)
        steps.append((idxs, run.j, idxs[0] if run.j % 2 == 0 else None))
        cur = st.result
    terminal = trace.terminal
    return _Schedule(
        steps=tuple(steps),
        terminal_idx=tuple(pos[c] for c in terminal.crease_ids),
        crease_ids=crease_ids,
    )


def _check_values(sched: _Schedule, vals: list[int]) -> bool:
    for idxs, j, survivor in sched.steps:
        s = 0
        for i in idxs:
            s += vals[i]
        if j % 2 == 1:
            if s != 0:
                return False
        else:
            if s not in (1, -1):
                return False
            vals[survivor] = s
    t = 0
    for i in sched.terminal_idx:
        t += vals[i]
    return abs(t) == 2


def is_valid_single_vertex(cone: ConeVertex, mv: MVAssignment) -> bool:
    """Does the assignment fold this vertex flat?

    Recursion: check the big-little-big condition at the first minimal run,
    write the majority onto the survivor for even runs, crimp, repeat; the
    all-equal base is Maekawa's theorem.
    """
    if not kawasaki_check(cone):
        raise KawasakiViolation(message="cone fails the Kawasaki test")
    sched = _schedule(cone.angles, cone.crease_ids)
    vals = [mv[c] for c in cone.crease_ids]
    if any(v not in (1, -1) for v in vals):
        raise ValueError("assignment values must be +-1")
    return _check_values(sched, vals)


def count_single_vertex_mv(cone: ConeVertex) -> int:
    """|M(cone)| in linear time.

    Base all-equal cone of degree 2n contributes 2*C(2n, n-1); each odd-j
    crimp multiplies by C(j+1, (j+1)//2) and each even-j crimp by
    C(j+1, j//2).
    """
    if not kawasaki_check(cone):
        raise KawasakiViolation(message="cone fails the Kawasaki test")
    trace = crimp_trace(cone)
    n2 = trace.terminal.degree
    total = 2 * comb(n2, n2 // 2 - 1)
    for st in trace.steps:
        j = st.run.j
        total *= comb(j + 1, (j + 1) // 2) if j % 2 == 1 else comb(j + 1, j // 2)
    return total


def enumerate_single_vertex_mv(cone: ConeVertex, cap: int = 1 << 20) -> list[MVAssignment]:
    """Materialize the valid assignments (deterministic order).

    Built by lifting base Maekawa vectors back through the crimp sequence,
    so |result| always equals count_single_vertex_mv.
    """
    total = count_single_vertex_mv(cone)
    if total > cap:
        raise CapExceeded(f"{total} assignments exceed cap {cap}")
    trace = crimp_trace(cone)
    term = trace.terminal
    base: list[dict[str, int]] = []
    for vals in product((1, -1), repeat=term.degree):
        if abs(sum(vals)) == 2:
            base.append(dict(zip(term.crease_ids, vals)))
    assignments = base
    for st in reversed(trace.steps):
        run = st.run
        j = run.j
        lifted = []
        for mu in assignments:
            if j % 2 == 1:
                for vals in product((1, -1), repeat=j + 1):
                    if sum(vals) == 0:
                        new = dict(mu)
                        new.update(zip(run.creases, vals))
                        lifted.append(new)
            else:
                survivor = run.creases[0]
                target = mu[survivor]
                for vals in product((1, -1), repeat=j + 1):
                    if sum(vals) == target:
                        new = dict(mu)
                        new.update(zip(run.creases, vals))
                        lifted.append(new)
        assignments = lifted
    assignments.sort(key=lambda m: tuple(m[c] for c in sorted(m)))
    return assignments
