import pytest

from flatfold import (
    count_locally_valid,
    count_single_vertex_mv,
    enumerate_locally_valid,
    is_locally_valid,
)
from flatfold.cp import cone_at
from flatfold.errors import KawasakiViolation, LimitExceeded
from flatfold.generators import miura, triangle_twist

from .helpers import grid_saw


def test_single_vertex_pattern_matches_recursion():
    cp = miura(2, 2)  # one bird's-foot vertex
    report = enumerate_locally_valid(cp)
    assert report.count == 6
    v = cp.interior_vertex_ids()[0]
    assert report.per_vertex_counts == {v: 6}
    assert count_locally_valid(cp) == count_single_vertex_mv(cone_at(cp, v))


def test_joined_twists_count():
    assert count_locally_valid(triangle_twist(2)) == 170


def test_single_twist_count_frozen():
    # regression fixture computed by this oracle (2^9 assignments)
    assert count_locally_valid(triangle_twist(1)) == 26


def test_1x2_miura_is_two():
    # one boundary-to-boundary crease: matches the 1x2 grid graph
    assert count_locally_valid(miura(1, 2)) == 2
    from flatfold.coloring import count_colorings
    assert count_colorings(grid_saw(1, 2)) == 2


def test_2x2_miura_is_six():
    assert count_locally_valid(miura(2, 2)) == 6


def test_witnesses_restrict_to_valid_vertices():
    cp = triangle_twist(1)
    report = enumerate_locally_valid(cp, cap=30)
    assert report.count == 26
    for m in report.witnesses:
        assert is_locally_valid(cp, m)
    # shared creases only constrain: count <= product of per-vertex counts
    prod = 1
    for n in report.per_vertex_counts.values():
        prod *= n
    assert report.count <= prod


def test_cap_truncates_witnesses_only():
    cp = miura(2, 3)
    report = enumerate_locally_valid(cp, cap=5)
    assert report.count == 18
    assert len(report.witnesses) == 5
    assert report.cap_exceeded


def test_search_order_independence(rng):
    cp = triangle_twist(1)
    base = count_locally_valid(cp)
    order = sorted(cp.creases)
    for _ in range(5):
        rng.shuffle(order)
        assert count_locally_valid(cp, crease_order=list(order)) == base


def test_limit_exceeded():
    with pytest.raises(LimitExceeded):
        count_locally_valid(miura(3, 3), limit=5)


def test_limit_env_override(monkeypatch):
    monkeypatch.setenv("FLATFOLD_BRUTE_LIMIT", "5")
    with pytest.raises(LimitExceeded):
        count_locally_valid(miura(3, 3))


def test_kawasaki_violation_reported():
    from flatfold import build_crease_pattern
    cp = build_crease_pattern(
        vertices={"v0": (2, 2)},
        creases={"c0": ("v0", "b0"), "c1": ("v0", "b1"),
                 "c2": ("v0", "b2"), "c3": ("v0", "b3")},
        region=[(0, 0), (4, 0), (4, 4), (0, 4)],
        boundary_points={"b0": (4, 2), "b1": (2, 4), "b2": (0, 2), "b3": (2, 0)},
        declared_angles={"v0": (100, 80, 90, 90)},
    )
    with pytest.raises(KawasakiViolation):
        count_locally_valid(cp)
