"""Crease patterns as exact planar embedded graphs.

A pattern lives on a bounded polygonal region. Creases join interior
vertices and/or boundary points; faces are derived by the standard
next-edge-counterclockwise traversal. Coordinates are exact rationals.

Sector angles around a vertex come from one of two sources:

* declared per-vertex angle lists (exact rationals in degrees, listed
  counterclockwise starting at the sector that follows the lowest-id
  crease), for patterns whose true angles are irrational in degrees, or
* the coordinates themselves, but only when every consecutive direction
  pair differs by a multiple of 45 degrees -- the one family where
  rational coordinates determine rational degree measures exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    CrossingCreases,
    DanglingCrease,
    NotInteriorVertex,
    OddDegreeInteriorVertex,
    ValidationError,
)
from .geometry import (
    ANGLE_KEY,
    Point,
    on_segment,
    orient,
    polygon_signed_area2,
    primitive,
    sector_45,
    segments_conflict,
)

Angle = Fraction  # sector angle in exact degrees
MVAssignment = dict[str, int]  # crease id -> +1 mountain / -1 valley


@dataclass(frozen=True)
class ConeVertex:
    """Cyclic sector angles and crease ids around one vertex.

    angles[i] sits between crease_ids[i] and crease_ids[(i+1) % n].
    The cone total may differ from 360 after crimps.
    """

    angles: tuple[Angle, ...]
    crease_ids: tuple[str, ...]

    def __post_init__(self):
        if len(self.angles) != len(self.crease_ids):
            raise ValidationError("angle/crease count mismatch")
        if any(a <= 0 for a in self.angles):
            raise ValidationError("sector angles must be positive")

    @property
    def degree(self) -> int:
        return len(self.crease_ids)

    @property
    def cone_total(self) -> Fraction:
        return sum(self.angles, Fraction(0))

    def rotated(self, k: int) -> "ConeVertex":
        n = self.degree
        k %= n
        return ConeVertex(self.angles[k:] + self.angles[:k],
                          self.crease_ids[k:] + self.crease_ids[:k])

    def reflected(self) -> "ConeVertex":
        """Mirror image: the cyclic sequence read in the opposite direction."""
        n = self.degree
        ids = (self.crease_ids[0],) + tuple(reversed(self.crease_ids[1:]))
        angs = tuple(reversed(self.angles))
        return ConeVertex(angs, ids)

    def sector(self, i: int) -> tuple[str, str]:
        """(left, right) crease-id pair bounding sector i."""
        return (self.crease_ids[i], self.crease_ids[(i + 1) % self.degree])


@dataclass(frozen=True)
class Face:
    id: str
    nodes: tuple[str, ...]       # node ids along the walk (ccw for interior faces)
    edge_refs: tuple[str, ...]   # crease / boundary segment ids, edge_refs[i] joins nodes[i], nodes[i+1]
    is_outer: bool


@dataclass(frozen=True)
class CreasePattern:
    """Validated planar crease pattern with derived faces."""

    vertices: dict[str, Point]             # interior vertices
    boundary_points: dict[str, Point]      # crease endpoints on the region boundary
    creases: dict[str, tuple[str, str]]    # crease id -> (endpoint id, endpoint id)
    region: tuple[Point, ...]              # ccw polygon
    declared_angles: dict[str, tuple[Angle, ...]]
    faces: tuple[Face, ...] = field(default=())
    crease_sides: dict[str, tuple[str, str]] = field(default_factory=dict)
    # (vertex, left crease, right crease) -> face id for ccw-consecutive pairs
    corner_faces: dict[tuple[str, str, str], str] = field(default_factory=dict)

    def point_of(self, node_id: str) -> Point:
        if node_id in self.vertices:
            return self.vertices[node_id]
        if node_id in self.boundary_points:
            return self.boundary_points[node_id]
        raise KeyError(node_id)

    def interior_vertex_ids(self) -> list[str]:
        return sorted(self.vertices)

    def creases_at(self, v: str) -> list[str]:
        return [c for c, (a, b) in sorted(self.creases.items()) if v in (a, b)]

    def crease_other_end(self, c: str, v: str) -> str:
        a, b = self.creases[c]
        return b if a == v else a

    def interior_faces(self) -> list[Face]:
        return [f for f in self.faces if not f.is_outer]


def _edge_id_for_boundary(i: int) -> str:
    return f"s{i}"


def build_crease_pattern(vertices, creases, region, declared_angles=None,
                         boundary_points=None) -> CreasePattern:
    """Validate and assemble a crease pattern, computing faces.

    vertices: {id: (x, y)} interior vertices, exact rationals.
    creases: {id: (end_id, end_id)} endpoints reference vertices or boundary points.
    region: sequence of polygon corners, any orientation.
    declared_angles: {vertex id: [angles ccw starting after the lowest-id crease]}.
    boundary_points: {id: (x, y)} points on the region boundary.
    """
    vertices = {k: (Fraction(x), Fraction(y)) for k, (x, y) in vertices.items()}
    boundary_points = {k: (Fraction(x), Fraction(y))
                       for k, (x, y) in (boundary_points or {}).items()}
    declared_angles = {k: tuple(Fraction(a) for a in v)
                       for k, v in (declared_angles or {}).items()}
    region = [(Fraction(x), Fraction(y)) for (x, y) in region]
    if polygon_signed_area2(region) < 0:
        region = list(reversed(region))
    region_t = tuple(region)

    for cid, (a, b) in creases.items():
        for end in (a, b):
            if end not in vertices and end not in boundary_points:
                raise DanglingCrease(f"crease {cid} endpoint {end} undeclared")
        if a == b:
            raise ValidationError(f"crease {cid} is degenerate")

    pts = {**vertices, **boundary_points}
    if len(set(pts.values())) != len(pts):
        raise ValidationError("coincident vertices/boundary points")

    # region must be convex: segments with endpoints inside then stay inside,
    # which keeps boundary-contact validation exact and simple
    nreg = len(region)
    for i in range(nreg):
        if orient(region[i - 1], region[i], region[(i + 1) % nreg]) < 0:
            raise ValidationError("region polygon must be convex")

    def _on_region(p: Point) -> bool:
        return any(on_segment(p, region[i], region[(i + 1) % nreg])
                   for i in range(nreg))

    def _strictly_inside(p: Point) -> bool:
        return all(orient(region[i], region[(i + 1) % nreg], p) > 0
                   for i in range(nreg))

    for bid, p in boundary_points.items():
        if not _on_region(p):
            raise ValidationError(f"boundary point {bid} not on the region boundary")
    for vid, p in vertices.items():
        if not _strictly_inside(p):
            raise ValidationError(f"interior vertex {vid} is not strictly inside the region")

    # planarity: creases may meet only at shared endpoints, and may touch the
    # region boundary only at boundary-point endpoints
    items = sorted(creases.items())
    for i, (c1, (a1, b1)) in enumerate(items):
        p1, q1 = pts[a1], pts[b1]
        mid = ((p1[0] + q1[0]) / 2, (p1[1] + q1[1]) / 2)
        if not _strictly_inside(mid):
            raise CrossingCreases(f"crease {c1} runs along the region boundary")
        for c2, (a2, b2) in items[i + 1:]:
            p2, q2 = pts[a2], pts[b2]
            if segments_conflict(p1, q1, p2, q2):
                raise CrossingCreases(f"creases {c1} and {c2} intersect")

    # interior vertices: even degree
    degree = {v: 0 for v in vertices}
    for cid, (a, b) in creases.items():
        for end in (a, b):
            if end in degree:
                degree[end] += 1
    for v, d in degree.items():
        if d == 0:
            raise ValidationError(f"isolated interior vertex {v}")
        if d % 2 != 0:
            raise OddDegreeInteriorVertex(f"vertex {v} has degree {d}")

    # declared angle sanity
    for v, angs in declared_angles.items():
        if v not in vertices:
            raise ValidationError(f"declared angles for unknown vertex {v}")
        if len(angs) != degree[v]:
            raise ValidationError(f"vertex {v}: {len(angs)} angles for degree {degree[v]}")
        if any(a <= 0 for a in angs):
            raise ValidationError(f"vertex {v}: non-positive declared angle")
        if sum(angs) != 360:
            raise ValidationError(f"vertex {v}: declared angles sum to {sum(angs)}, not 360")

    faces, crease_sides, corner_faces = _trace_faces(
        vertices, boundary_points, creases, region)

    return CreasePattern(
        vertices=vertices,
        boundary_points=boundary_points,
        creases=dict(sorted(creases.items())),
        region=region_t,
        declared_angles=declared_angles,
        faces=faces,
        crease_sides=crease_sides,
        corner_faces=corner_faces,
    )


def _trace_faces(vertices, boundary_points, creases, region):
    """Planar face traversal. Returns (faces, crease_sides, corner_faces).

    crease_sides[c] = (left face, right face) relative to the stored (a, b)
    direction of crease c. corner_faces[(v, cL, cR)] = face occupying the
    sector that runs ccw from crease cL to crease cR at vertex v.
    """
    pts: dict[str, Point] = {**vertices, **boundary_points}
    nreg = len(region)

    # region corners become nodes too; a boundary point sitting exactly on a
    # corner doubles as the corner node (creases may end at paper corners)
    by_pos = {p: bid for bid, p in boundary_points.items()}
    corner_ids = {}
    for i, p in enumerate(region):
        if p in by_pos:
            corner_ids[i] = by_pos[p]
            continue
        if any(p == q for q in vertices.values()):
            raise ValidationError("interior vertex coincides with a region corner")
        nid = f"r{i}"
        corner_ids[i] = nid
        pts[nid] = p

    # split region edges at boundary points
    edges: dict[str, tuple[str, str]] = dict(creases)
    bp_on_edge: dict[int, list[tuple[Fraction, str]]] = {i: [] for i in range(nreg)}
    for bid, p in boundary_points.items():
        for i in range(nreg):
            a, b = region[i], region[(i + 1) % nreg]
            if on_segment(p, a, b) and p != a and p != b:
                # parameterize along the edge for ordering
                d = (b[0] - a[0], b[1] - a[1])
                t = ((p[0] - a[0]) * d[0] + (p[1] - a[1]) * d[1])
                bp_on_edge[i].append((t, bid))
                break
    seg = 0
    for i in range(nreg):
        chain = [corner_ids[i]]
        chain += [bid for _, bid in sorted(bp_on_edge[i])]
        chain.append(corner_ids[(i + 1) % nreg])
        for a, b in zip(chain, chain[1:]):
            edges[_edge_id_for_boundary(seg)] = (a, b)
            seg += 1

    # incidence with exact ccw angular sort
    incident: dict[str, list[tuple[tuple[int, int], str, str]]] = {n: [] for n in pts}
    for eid, (a, b) in edges.items():
        incident[a].append((primitive((pts[b][0] - pts[a][0], pts[b][1] - pts[a][1])), eid, b))
        incident[b].append((primitive((pts[a][0] - pts[b][0], pts[a][1] - pts[b][1])), eid, a))
    order: dict[str, list[tuple[str, str]]] = {}
    for n, lst in incident.items():
        lst.sort(key=lambda t: ANGLE_KEY(t[0]))
        ds = [t[0] for t in lst]
        if len(set(ds)) != len(ds):
            raise ValidationError(f"overlapping creases at {n}")
        order[n] = [(eid, other) for _, eid, other in lst]

    # next half-edge: arriving at v from u, leave via the edge immediately
    # clockwise of the reversed direction (interior faces traced ccw).
    def next_half_edge(u: str, eid: str, v: str) -> tuple[str, str, str]:
        lst = order[v]
        idx = next(i for i, (e2, w) in enumerate(lst) if e2 == eid and w == u)
        e2, w = lst[(idx - 1) % len(lst)]
        return (v, e2, w)

    half_edges = set()
    for eid, (a, b) in edges.items():
        half_edges.add((a, eid, b))
        half_edges.add((b, eid, a))

    walks = []
    seen = set()
    for he in sorted(half_edges):
        if he in seen:
            continue
        walk = []
        cur = he
        while cur not in seen:
            seen.add(cur)
            walk.append(cur)
            cur = next_half_edge(*cur)
        walks.append(walk)

    # identify outer face by signed area of the walk polygon
    face_rows = []
    for walk in walks:
        poly = [pts[u] for (u, _, _) in walk]
        area2 = polygon_signed_area2(poly)
        face_rows.append((walk, area2))
    outers = [w for w, a2 in face_rows if a2 < 0]
    if len(outers) != 1:
        raise ValidationError("face traversal failed to find a unique outer face")

    # deterministic face ids: sort interior walks by canonical node tuple
    def canon(walk):
        nodes = tuple(u for (u, _, _) in walk)
        rots = [nodes[i:] + nodes[:i] for i in range(len(nodes))]
        return min(rots)

    interior = sorted((w for w, a2 in face_rows if a2 >= 0), key=canon)
    faces = []
    he_face: dict[tuple[str, str, str], str] = {}
    for i, walk in enumerate(interior):
        fid = f"f{i}"
        faces.append(Face(
            id=fid,
            nodes=tuple(u for (u, _, _) in walk),
            edge_refs=tuple(e for (_, e, _) in walk),
            is_outer=False,
        ))
        for he in walk:
            he_face[he] = fid
    outer_walk = outers[0]
    fid = "outer"
    faces.append(Face(
        id=fid,
        nodes=tuple(u for (u, _, _) in outer_walk),
        edge_refs=tuple(e for (_, e, _) in outer_walk),
        is_outer=True,
    ))
    for he in outer_walk:
        he_face[he] = fid

    crease_sides = {}
    for cid, (a, b) in creases.items():
        crease_sides[cid] = (he_face[(a, cid, b)], he_face[(b, cid, a)])

    # corners: consecutive half-edges (u -> v), (v -> w) of a face put the
    # sector running ccw from edge (v,w) to edge (v,u) inside that face.
    corner_faces = {}
    for walk in interior + [outer_walk]:
        f = he_face[walk[0]]
        n = len(walk)
        for i in range(n):
            u, e1, v = walk[i]
            _, e2, w = walk[(i + 1) % n]
            if v in vertices:
                corner_faces[(v, e2, e1)] = f
    return tuple(faces), crease_sides, corner_faces


def cone_at(cp: CreasePattern, v: str) -> ConeVertex:
    """Cyclic angle/crease sequence at an interior vertex.

    Counterclockwise order, rotated so the lowest crease id comes first.
    Angles come from the vertex's declared list when present, otherwise
    from coordinates (only exact for 45-degree-multiple directions).
    """
    if v not in cp.vertices:
        raise NotInteriorVertex(v)
    p = cp.vertices[v]
    inc = []
    for cid in cp.creases_at(v):
        q = cp.point_of(cp.crease_other_end(cid, v))
        inc.append((primitive((q[0] - p[0], q[1] - p[1])), cid))
    inc.sort(key=lambda t: ANGLE_KEY(t[0]))
    dirs = [d for d, _ in inc]
    ids = [c for _, c in inc]
    # rotate so the lowest id leads
    k = ids.index(min(ids))
    dirs = dirs[k:] + dirs[:k]
    ids = ids[k:] + ids[:k]
    n = len(ids)

    if v in cp.declared_angles:
        angles = cp.declared_angles[v]
    else:
        angles = []
        for i in range(n):
            a = sector_45(dirs[i], dirs[(i + 1) % n])
            if a is None:
                raise ValidationError(
                    f"vertex {v}: sector angles are not 45-degree multiples; "
                    "declare them explicitly")
            angles.append(a)
        if sum(angles) != 360:
            raise ValidationError(f"vertex {v}: computed angles do not close up")
        angles = tuple(angles)
    return ConeVertex(angles=tuple(angles), crease_ids=tuple(ids))
