"""Shared test helpers: cone builders, random Kawasaki-valid cones and the
independent brute-force validity count."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

import pytest

from flatfold import ConeVertex, is_valid_single_vertex


def cone(*angles, ids=None) -> ConeVertex:
    ids = ids or tuple(f"c{i}" for i in range(len(angles)))
    return ConeVertex(tuple(Fraction(a) for a in angles), tuple(ids))


def brute_force_count(c: ConeVertex) -> int:
    """Independent oracle: filter all 2^degree assignments through the
    validity recursion."""
    n = c.degree
    total = 0
    for vals in product((1, -1), repeat=n):
        if is_valid_single_vertex(c, dict(zip(c.crease_ids, vals))):
            total += 1
    return total


def random_kawasaki_cone(rng: random.Random, max_half_degree: int = 5) -> ConeVertex:
    """Random Kawasaki-valid cone; the angle pools deliberately include
    repeated values so equal-angle runs of length >= 2 actually occur."""
    n = rng.randint(1, max_half_degree)
    if rng.random() < 0.5:
        pool = [Fraction(5 * k) for k in range(1, 20)]
    else:
        pool = [Fraction(rng.randint(1, 400), rng.randint(1, 9)) for _ in range(24)]
    for _ in range(200):
        odds = [rng.choice(pool) for _ in range(n)]
        evens = [rng.choice(pool) for _ in range(n)]
        so, se = sum(odds), sum(evens)
        if se == 0:
            continue
        scale = so / se
        evens = [e * scale for e in evens]
        angles = []
        for o, e in zip(odds, evens):
            angles.extend([o, e])
        if all(a > 0 for a in angles):
            return cone(*angles)
    raise RuntimeError("failed to sample a cone")


@pytest.fixture
def rng():
    return random.Random(987123)
