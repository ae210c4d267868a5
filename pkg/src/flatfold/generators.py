"""Parametric constructors for the crease-pattern families used by the
tests and the CLI: Miura-ori, modified Miura-ori, snake tessellations,
triangle twists (single, mirror-joined pairs and chains) and the crane.

Geometry conventions: patterns whose true sector angles are irrational in
degrees carry per-vertex declared angle lists; coordinates are exact
rationals chosen to reproduce the correct combinatorial embedding.
"""

from __future__ import annotations

from fractions import Fraction

from .cp import CreasePattern, build_crease_pattern
from .errors import BadMaskLength

F = Fraction


from dataclasses import dataclass


@dataclass(frozen=True)
class PatternSpec:
    """Family name plus family-specific parameters, as used by the CLI."""

    family: str                      # miura | modified-miura | snake | triangle-twist | crane
    m: int = 1
    n: int = 1
    mask: tuple[bool, ...] = ()
    count: int = 1

    def build(self) -> "CreasePattern":
        if self.family == "miura":
            return miura(self.m, self.n)
        if self.family == "modified-miura":
            return modified_miura(self.m, self.n, self.mask)
        if self.family == "snake":
            return snake(self.m, self.n)
        if self.family in ("triangle-twist", "joined-twists"):
            return triangle_twist(self.count)
        if self.family == "crane":
            return crane()
        raise ValueError(f"unknown family {self.family!r}")


class _Builder:
    """Accumulates vertices, boundary points and creases, reusing ids by position."""

    def __init__(self):
        self.vertices = {}
        self.bpoints = {}
        self.creases = {}
        self.angles = {}
        self._by_pos = {}
        self._nv = 0
        self._nb = 0
        self._nc = 0

    def vertex(self, x, y) -> str:
        key = (F(x), F(y))
        if key in self._by_pos:
            return self._by_pos[key]
        vid = f"v{self._nv}"
        self._nv += 1
        self.vertices[vid] = key
        self._by_pos[key] = vid
        return vid

    def bpoint(self, x, y) -> str:
        key = (F(x), F(y))
        if key in self._by_pos:
            return self._by_pos[key]
        bid = f"b{self._nb}"
        self._nb += 1
        self.bpoints[bid] = key
        self._by_pos[key] = bid
        return bid

    def crease(self, a: str, b: str) -> str:
        cid = f"c{self._nc}"
        self._nc += 1
        self.creases[cid] = (a, b)
        return cid

    def build(self, region) -> CreasePattern:
        return build_crease_pattern(self.vertices, self.creases, region,
                                    declared_angles=self.angles,
                                    boundary_points=self.bpoints)


def _declare_zigzag_angles(b: _Builder, vid: str, acute: Fraction, cp_dirs):
    """Declared angles for a degree-4 vertex with one straight pair and a
    mirrored/chevron pair: acute sectors where the true sector is acute.

    cp_dirs: list of exact direction vectors for the incident creases.
    The declared list follows the ccw order starting after the lowest
    crease id, matching cone_at's convention.
    """
    from .geometry import ANGLE_KEY, primitive
    dirs = [(primitive(d), cid) for d, cid in cp_dirs]
    dirs.sort(key=lambda t: ANGLE_KEY(t[0]))
    ids = [cid for _, cid in dirs]
    k = ids.index(min(ids))
    dirs = dirs[k:] + dirs[:k]
    out = []
    n = len(dirs)
    for i in range(n):
        d1 = dirs[i][0]
        d2 = dirs[(i + 1) % n][0]
        dotv = d1[0] * d2[0] + d1[1] * d2[1]
        out.append(acute if dotv > 0 else 180 - acute)
    if sum(out) != 360:
        raise AssertionError("bad angle declaration")
    b.angles[vid] = tuple(out)


def miura(m: int, n: int, acute=F(60)) -> CreasePattern:
    """m x n array of congruent parallelograms (bird's-foot vertices)."""
    return modified_miura(m, n, (False,) * max(n - 1, 0), acute=acute)


def modified_miura(m: int, n: int, mask, acute=F(60), shear=F(1, 4)) -> CreasePattern:
    """Miura with the selected zig-zag columns reflected left-to-right.

    Columns of parallelograms are separated by n-1 vertical zig-zag
    polylines; mask[j] reflects polyline j. Horizontal row lines are
    straight. Sector angles are declared (default 60/120; the shear only
    shapes the drawing).
    """
    if m < 1 or n < 1:
        raise ValueError("m, n >= 1")
    mask = tuple(bool(x) for x in mask)
    if len(mask) != max(n - 1, 0):
        raise BadMaskLength(f"mask needs {n - 1} entries, got {len(mask)}")
    b = _Builder()
    s = F(shear)
    if not (0 < s < F(1, 2)):
        raise ValueError("shear must be in (0, 1/2)")

    def zx(j: int, i: int) -> Fraction:
        sigma = -1 if mask[j - 1] else 1
        return j + s * sigma * (-1) ** i

    # zig-zag columns
    for j in range(1, n):
        for i in range(m):
            p = (zx(j, i), F(i))
            q = (zx(j, i + 1), F(i + 1))
            a = b.vertex(*p) if 0 < i else b.bpoint(*p)
            c = b.vertex(*q) if i + 1 < m else b.bpoint(*q)
            b.crease(a, c)

    # horizontal rows, split at the zig vertices
    for i in range(1, m):
        xs = [F(0)] + [zx(j, i) for j in range(1, n)] + [F(n)]
        nodes = []
        for k, x in enumerate(xs):
            if k == 0 or k == len(xs) - 1:
                nodes.append(b.bpoint(x, F(i)))
            else:
                nodes.append(b.vertex(x, F(i)))
        for a, c in zip(nodes, nodes[1:]):
            b.crease(a, c)

    # declared angles at the interior vertices
    for j in range(1, n):
        for i in range(1, m):
            vid = b.vertex(zx(j, i), F(i))
            x0 = zx(j, i)
            dirs = []
            for cid, (p, q) in b.creases.items():
                if vid not in (p, q):
                    continue
                other = q if p == vid else p
                pt = b.vertices.get(other) or b.bpoints[other]
                dirs.append(((pt[0] - x0, pt[1] - F(i)), cid))
            _declare_zigzag_angles(b, vid, F(acute), dirs)

    region = [(F(0), F(0)), (F(n), F(0)), (F(n), F(m)), (F(0), F(m))]
    return b.build(region)


def snake(m: int, n: int) -> CreasePattern:
    """Snake tessellation: 45-degree modified Miura with alternating
    reflections at shear 1/2, where heel-to-heel vertex pairs coincide and
    fuse into degree-6 waterbomb vertices.

    All directions are 45-degree multiples, so angles come straight from
    the coordinates.
    """
    if m < 1 or n < 1:
        raise ValueError("m, n >= 1")
    b = _Builder()
    s = F(1, 2)

    def sigma(j: int) -> int:
        return -1 if j % 2 == 0 else 1

    def zx(j: int, i: int) -> Fraction:
        return j + s * sigma(j) * (-1) ** i

    for j in range(1, n):
        for i in range(m):
            p = (zx(j, i), F(i))
            q = (zx(j, i + 1), F(i + 1))
            a = b.vertex(*p) if 0 < i else b.bpoint(*p)
            c = b.vertex(*q) if i + 1 < m else b.bpoint(*q)
            b.crease(a, c)

    for i in range(1, m):
        xs = sorted({zx(j, i) for j in range(1, n)})
        nodes = [b.bpoint(F(0), F(i))]
        nodes += [b.vertex(x, F(i)) for x in xs]
        nodes.append(b.bpoint(F(n), F(i)))
        for a, c in zip(nodes, nodes[1:]):
            b.crease(a, c)

    region = [(F(0), F(0)), (F(n), F(0)), (F(n), F(m)), (F(0), F(m))]
    return b.build(region)


def crane() -> CreasePattern:
    """The flapping-bird pattern: all vertices degree 4 except the central
    degree-6 waterbomb vertex.

    Diamond-oriented square; creases: the vertical spine, four rays to the
    edge midpoints, petal folds meeting the spine at two points, kite lines
    crossing each other on the horizontal axis (the wing vertices), and the
    head/tail V creases. Every direction is a 45-degree multiple, so all
    sector angles come straight from the coordinates.
    """
    b = _Builder()
    N, E, S, W = (0, 4), (4, 0), (0, -4), (-4, 0)
    O = b.vertex(0, 0)
    PN, PS = b.vertex(0, 2), b.vertex(0, -2)
    H, T = b.vertex(0, 3), b.vertex(0, -3)
    WE, WW = b.vertex(2, 0), b.vertex(-2, 0)
    Qs = {}
    for sx, sy in ((1, 1), (-1, 1), (1, -1), (-1, -1)):
        Qs[(sx, sy)] = b.vertex(sx, sy)
    # spine
    b.crease(O, PN)
    b.crease(PN, H)
    b.crease(H, b.bpoint(*N))
    b.crease(O, PS)
    b.crease(PS, T)
    b.crease(T, b.bpoint(*S))
    # rays to the edge midpoints
    for (sx, sy), q in Qs.items():
        b.crease(O, q)
        b.crease(q, b.bpoint(2 * sx, 2 * sy))
    # petal folds
    b.crease(Qs[(1, 1)], PN)
    b.crease(Qs[(-1, 1)], PN)
    b.crease(Qs[(1, -1)], PS)
    b.crease(Qs[(-1, -1)], PS)
    # kite lines through the wing crossings
    b.crease(Qs[(1, 1)], WE)
    b.crease(Qs[(1, -1)], WE)
    b.crease(WE, b.bpoint(3, 1))
    b.crease(WE, b.bpoint(3, -1))
    b.crease(Qs[(-1, 1)], WW)
    b.crease(Qs[(-1, -1)], WW)
    b.crease(WW, b.bpoint(-3, 1))
    b.crease(WW, b.bpoint(-3, -1))
    # head and tail
    b.crease(H, b.bpoint(F(1, 2), F(7, 2)))
    b.crease(H, b.bpoint(F(-1, 2), F(7, 2)))
    b.crease(T, b.bpoint(F(1, 2), F(-7, 2)))
    b.crease(T, b.bpoint(F(-1, 2), F(-7, 2)))
    return b.build([S, E, N, W])


# -- triangle twists -----------------------------------------------------------

# Twist geometry lives on the 60-degree sheared lattice: lattice (x, y)
# renders as x + y/2, y*sqrt(3)/2. The six unit directions are exact
# 60-degree multiples, so sector angles are known without coordinates.
_LATTICE_DIRS = {
    (1, 0): 0, (0, 1): 60, (-1, 1): 120, (-1, 0): 180, (0, -1): 240, (1, -1): 300,
}


def _lattice_angles(b: _Builder, vid: str, ray_dirs):
    """Declare sector angles at a twist vertex from its lattice directions."""
    dirs = sorted(ray_dirs, key=lambda t: _LATTICE_DIRS[t[0]])
    ids = [cid for _, cid in dirs]
    k = ids.index(min(ids))
    dirs = dirs[k:] + dirs[:k]
    out = []
    n = len(dirs)
    for i in range(n):
        a1 = _LATTICE_DIRS[dirs[i][0]]
        a2 = _LATTICE_DIRS[dirs[(i + 1) % n][0]]
        out.append(F((a2 - a1) % 360))
    if sum(out) != 360:
        raise AssertionError("twist angles do not close up")
    b.angles[vid] = tuple(out)


def _ray_to_rect(p, d, xlo, xhi, ylo, yhi):
    """Exact first intersection of the ray p + t*d with the rectangle."""
    best = None
    px, py = F(p[0]), F(p[1])
    dx, dy = F(d[0]), F(d[1])
    for value, coord in ((xlo, "x"), (xhi, "x"), (ylo, "y"), (yhi, "y")):
        if coord == "x":
            if dx == 0:
                continue
            t = (F(value) - px) / dx
            q = (F(value), py + t * dy)
        else:
            if dy == 0:
                continue
            t = (F(value) - py) / dy
            q = (px + t * dx, F(value))
        if t <= 0:
            continue
        if not (F(xlo) <= q[0] <= F(xhi) and F(ylo) <= q[1] <= F(yhi)):
            continue
        if best is None or t < best[0]:
            best = (t, q)
    if best is None:
        raise AssertionError("ray misses the region")
    return best[1]


def _mirror_x(m):
    """Reflection across the true-vertical line through lattice x = m maps
    lattice (x, y) to (2m - x - y, y) and direction (dx, dy) to
    (-dx - dy, dy)."""
    def pt(p):
        return (2 * m - p[0] - p[1], p[1])

    def vec(d):
        return (-d[0] - d[1], d[1])

    return pt, vec


def triangle_twist(count: int = 1) -> CreasePattern:
    """One triangle twist, or a chain of mirror-joined twists (count <= 3).

    Adjacent units share the two creases of one pleat strip; the mirror
    arrangement makes one shared crease the heel of both end vertices and
    the other a toe of both.
    """
    if count not in (1, 2, 3):
        raise ValueError("count must be 1, 2 or 3")
    corners = {"A": (0, 0), "B": (1, 0), "C": (0, 1)}
    units = [{k: v for k, v in corners.items()}]
    ray_dirs = [dict(A=[(1, -1), (-1, 0)], B=[(1, -1), (0, 1)], C=[(0, 1), (-1, 0)])]
    if count >= 2:
        pt, vec = _mirror_x(-1)
        units.append({k: pt(v) for k, v in units[0].items()})
        ray_dirs.append({k: [vec(d) for d in ds] for k, ds in ray_dirs[0].items()})
    if count >= 3:
        # mirror unit 2 across the line perpendicular to its outgoing strip
        # rays; on the lattice this reflection is a coordinate swap about a
        # fixed point on the strip
        def pt3(p):
            return (p[1] - 5, p[0] + 5)

        def vec3(d):
            return (d[1], d[0])

        units.append({k: pt3(v) for k, v in units[1].items()})
        ray_dirs.append({k: [vec3(d) for d in ds] for k, ds in ray_dirs[1].items()})

    # shared strips: unit k and k+1 share the images of A's and C's
    # second rays (the CA strip for the first pair)
    b = _Builder()
    vid = {}
    for t, u in enumerate(units):
        for k, p in u.items():
            vid[(t, k)] = b.vertex(*p)
    # triangle edges
    tri_dirs = {t: {} for t in range(count)}
    for t, u in enumerate(units):
        for k1, k2 in (("A", "B"), ("B", "C"), ("C", "A")):
            cid = b.crease(vid[(t, k1)], vid[(t, k2)])
            d = (u[k2][0] - u[k1][0], u[k2][1] - u[k1][1])
            from .geometry import primitive
            d = primitive(d)
            tri_dirs[t].setdefault(k1, []).append((d, cid))
            tri_dirs[t].setdefault(k2, []).append(((-d[0], -d[1]), cid))

    # connector creases between mirror-paired corners
    shared_pairs = []
    if count >= 2:
        shared_pairs.append(((0, "A"), (1, "A")))
        shared_pairs.append(((0, "C"), (1, "C")))
    if count >= 3:
        shared_pairs.append(((1, "B"), (2, "B")))
        shared_pairs.append(((1, "C"), (2, "C")))
    connected = set()
    for (t1, k1), (t2, k2) in shared_pairs:
        cid = b.crease(vid[(t1, k1)], vid[(t2, k2)])
        p1, p2 = units[t1][k1], units[t2][k2]
        from .geometry import primitive
        d = primitive((p2[0] - p1[0], p2[1] - p1[1]))
        tri_dirs[t1].setdefault(k1, []).append((d, cid))
        tri_dirs[t2].setdefault(k2, []).append(((-d[0], -d[1]), cid))
        connected.add((t1, k1, tuple(d)))
        connected.add((t2, k2, (-d[0], -d[1])))

    # free rays to the boundary
    xs = [p[0] for u in units for p in u.values()]
    ys = [p[1] for u in units for p in u.values()]
    # fractional top margin keeps diagonal rays off the region corners
    xlo, xhi = min(xs) - 3, max(xs) + 3
    ylo, yhi = min(ys) - 2, max(ys) + F(5, 2)
    for t, u in enumerate(units):
        for k, p in u.items():
            for d in ray_dirs[t][k]:
                if (t, k, tuple(d)) in connected:
                    continue
                q = _ray_to_rect(p, d, xlo, xhi, ylo, yhi)
                bid = b.bpoint(*q)
                cid = b.crease(vid[(t, k)], bid)
                tri_dirs[t].setdefault(k, []).append((d, cid))

    for t in range(count):
        for k in ("A", "B", "C"):
            _lattice_angles(b, vid[(t, k)], tri_dirs[t][k])

    region = [(F(xlo), F(ylo)), (F(xhi), F(ylo)), (F(xhi), F(yhi)), (F(xlo), F(yhi))]
    return b.build(region)
