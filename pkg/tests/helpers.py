"""Constructions shared by the SAW and acceptance tests, most notably the
deliberately-invalid joined-twist merge that identifies undirected
boundary edges (the failure mode the tiling procedure must avoid)."""

from __future__ import annotations

from flatfold.generators import triangle_twist
from flatfold.saw import SawGraph, insert_prism, negate_orientations
from flatfold.tiling import _merge_vertex


def first_coloring(g: SawGraph) -> dict[int, int]:
    """Cheapest proper 3-coloring with the root colored 0 (no enumeration)."""
    ids = sorted(g.vertices)
    adj = g.adjacency()
    pos = {v: i for i, v in enumerate(ids)}
    earlier = [[pos[w] for w in adj[v] if pos[w] < pos[v]] for v in ids]
    root_pos = pos[g.root]
    colors = [0] * len(ids)

    def rec(i):
        if i == len(ids):
            return True
        for c in ((0,) if i == root_pos else (0, 1, 2)):
            if any(colors[p] == c for p in earlier[i]):
                continue
            colors[i] = c
            if rec(i + 1):
                return True
        return False

    if not rec(0):
        raise ValueError("graph has no proper 3-coloring")
    return dict(zip(ids, colors))


def twist_unit_saw(cp, vertex_ids) -> SawGraph:
    """SAW graph of the sub-pattern spanned by one twist unit's vertices."""
    g = SawGraph()
    merged = set()
    for v in sorted(vertex_ids):
        g = _merge_vertex(g, cp, v, merged)
        merged.add(v)
    return g


def _walk_desc(g):
    return [(g.edges[e].crease if g.edges[e].directed else None) for _, e in g.walk]


def _push_junk_between(g: SawGraph, ca: str, cb: str) -> SawGraph:
    """Prism the (single) undirected boundary edge until it sits between the
    crossing edges of creases ca and cb."""
    for _ in range(30):
        wd = _walk_desc(g)
        n = len(wd)
        ui = wd.index(None)
        prev_c = next(wd[(ui - k) % n] for k in range(1, n) if wd[(ui - k) % n])
        nxt_c = next(wd[(ui + k) % n] for k in range(1, n) if wd[(ui + k) % n])
        if {prev_c, nxt_c} == {ca, cb}:
            return g
        di = next((ui - k) % n for k in range(1, n)
                  if g.edges[g.walk[(ui - k) % n][1]].directed)
        g = insert_prism(g, g.walk[di][1], g.walk[ui][1])
    raise RuntimeError("could not position the undirected edge")


def _window3(g, ca, cb):
    wd = _walk_desc(g)
    n = len(wd)
    for i in range(n):
        if wd[i] is not None:
            continue
        a, b = wd[(i - 1) % n], wd[(i + 1) % n]
        if {a, b} == {ca, cb}:
            return [(i - 1) % n, i, (i + 1) % n]
    raise RuntimeError("no [directed, undirected, directed] window")


def invalid_joined_twist_saw():
    """The known-bad merge of two twist SAW graphs: the two crossing edges
    over the shared creases AND the undirected boundary edges between them
    are all identified. Returns (pattern, bad_graph).

    The undirected identification makes two triangles share an edge, which
    wrongly links the MV parity of creases in the two twist units, so the
    graph undercounts.
    """
    cp = triangle_twist(2)
    unit0 = [v for v in cp.interior_vertex_ids()][:3]
    unit1 = [v for v in cp.interior_vertex_ids()][3:]
    shared = sorted(c for c, (a, b) in cp.creases.items()
                    if (a in unit0) != (b in unit0)
                    and a in cp.vertices and b in cp.vertices)
    ca, cb = shared
    gA = twist_unit_saw(cp, unit0)
    gB = twist_unit_saw(cp, unit1)
    # align orientations with the free global reversal, then stage both
    # boundaries into the [directed, undirected, directed] configuration
    eA = gA.crossing_edges()
    eB = gB.crossing_edges()
    if eA[ca].tail_side != eB[ca].tail_side:
        gB = negate_orientations(gB)
        eB = gB.crossing_edges()
    assert eA[ca].tail_side == eB[ca].tail_side
    assert eA[cb].tail_side == eB[cb].tail_side
    gA = _push_junk_between(gA, ca, cb)
    gB = _push_junk_between(gB, ca, cb)

    wA = _window3(gA, ca, cb)
    wB = _window3(gB, ca, cb)

    def chain(g, w):
        vs = [g.walk[w[0]][0]]
        for i in w:
            vs.append(g.edges[g.walk[i][1]].other(vs[-1]))
        return vs

    chA = chain(gA, wA)
    chB = chain(gB, wB)
    firstA = gA.edges[gA.walk[wA[0]][1]].crease
    firstB = gB.edges[gB.walk[wB[0]][1]].crease
    assert firstA != firstB, "windows must run anti-parallel"

    g = gA.copy()
    vmap = {b: a for a, b in zip(chA, reversed(chB))}
    for sv in gB.vertices.values():
        if sv.id not in vmap:
            vmap[sv.id] = g.add_vertex(face=sv.face)
    undA = gA.walk[wA[1]][1]
    undB = gB.walk[wB[1]][1]
    emap, dropped = {}, {}
    for se in gB.edges.values():
        if se.directed and se.crease in (ca, cb):
            dropped[se.id] = next(e.id for e in g.edges.values()
                                  if e.directed and e.crease == se.crease)
            continue
        if se.id == undB:
            dropped[se.id] = undA  # the wrong identification
            continue
        emap[se.id] = g.add_edge(vmap[se.u], vmap[se.v], se.directed,
                                 se.crease, se.tail_side)
    nA, nB = len(gA.walk), len(gB.walk)
    new_walk = []
    i = (wA[2] + 1) % nA
    while i != wA[0]:
        new_walk.append(g.walk[i])
        i = (i + 1) % nA
    i = (wB[2] + 1) % nB
    while i != wB[0]:
        v0, e0 = gB.walk[i]
        new_walk.append((vmap[v0], emap.get(e0, dropped.get(e0))))
        i = (i + 1) % nB
    g.walk = new_walk
    g.check_walk()
    return cp, g


def grid_saw(m: int, n: int) -> SawGraph:
    """The m x n grid graph as a bare SawGraph (root at a corner)."""
    g = SawGraph()
    ids = {}
    for r in range(m):
        for c in range(n):
            ids[(r, c)] = g.add_vertex()
    for r in range(m):
        for c in range(n):
            if r + 1 < m:
                g.add_edge(ids[(r, c)], ids[(r + 1, c)])
            if c + 1 < n:
                g.add_edge(ids[(r, c)], ids[(r, c + 1)])
    g.root = 0
    return g
