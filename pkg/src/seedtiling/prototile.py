"""Decorated prototiles: tile T, the pi/12 triangle and the square Hilbert tile."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property, lru_cache

from .exactgeom import (
    CycloNumber,
    IntersectionKind,
    direction_index,
    encode,
    SimplePolygon,
    _seg_kind,
    in_segment_interior,
    is_simple,
    point_in_polygon,
)

ARC_END = "arc_end"
OPEN_LINK = "open_link"

# angles are stored as rational multiples of pi
TWO_THIRDS = Fraction(2, 3)


@dataclass(frozen=True)
class Connector:
    position: CycloNumber
    kind: str
    label: int


@dataclass(frozen=True)
class Decoration:
    curves: tuple            # tuple of polylines, each a tuple of CycloNumbers
    connectors: tuple        # tuple of Connector
    junctions: tuple = ()    # interior points shared by several curves (trees)

    def length_approx(self) -> float:
        total = 0.0
        for c in self.curves:
            for a, b in zip(c, c[1:]):
                total += abs(b.approx - a.approx)
        return total


@dataclass(frozen=True)
class Prototile:
    id: str
    order: int
    boundary: SimplePolygon
    angles: tuple            # interior angle at each vertex, as a Fraction of pi
    decoration: Decoration
    side_tags: tuple = ()    # one tag per edge (vertex i to i+1)
    tips: tuple = ()         # vertex indices of the acute tips
    notes: str = ""
    _extra: dict = dc_field(default_factory=dict, compare=False, hash=False)

    @property
    def vertices(self):
        return self.boundary.vertices

    def angle_at(self, p: CycloNumber) -> Fraction:
        """Interior angle of the tile at a boundary point p (pi on edges)."""
        for i, v in enumerate(self.vertices):
            if v == p:
                return self.angles[i]
        for a, b in self.boundary.edges():
            if in_segment_interior(p, a, b):
                return Fraction(1)
        raise ValueError("point is not on the tile boundary")

    @cached_property
    def edge_dirs(self) -> tuple:
        """Direction of edge i -> i+1 in units of pi/order (exact)."""
        v = self.vertices
        n = len(v)
        return tuple(direction_index(v[(i + 1) % n] - v[i]) for i in range(n))

    @cached_property
    def angle_units(self) -> tuple:
        """Interior angles in units of pi/order."""
        out = []
        for a in self.angles:
            u = a * self.order
            if u.denominator != 1:
                raise ValueError("angle is not a multiple of pi/order")
            out.append(int(u))
        return tuple(out)

    @property
    def radius(self) -> float:
        c = self.centroid_approx
        return max(abs(v.approx - c) for v in self.vertices)

    @property
    def centroid_approx(self) -> complex:
        pts = [v.approx for v in self.vertices]
        return sum(pts) / len(pts)


def closure(tile: Prototile) -> CycloNumber:
    """Sum of the directed boundary edges; zero for a closed polygon."""
    v = tile.vertices
    acc = CycloNumber.zero(tile.order)
    for i in range(len(v)):
        acc = acc + (v[(i + 1) % len(v)] - v[i])
    return acc


def float_angles(tile: Prototile) -> list[float]:
    """Interior angles recomputed from coordinates (validation only)."""
    v = [p.approx for p in tile.vertices]
    n = len(v)
    out = []
    for i in range(n):
        a = v[(i + 1) % n] - v[i]
        b = v[(i - 1) % n] - v[i]
        ang = cmath.phase(b / a)
        if ang <= 0:
            ang += 2 * math.pi
        out.append(ang)
    return out


def check_catalog_tile(tile: Prototile) -> list[str]:
    """Structural invariants; returns the failures."""
    bad = []
    if not is_simple(tile.vertices):
        bad.append("boundary not simple")
    if not closure(tile).is_zero():
        bad.append("boundary does not close")
    n = len(tile.vertices)
    if sum(tile.angles) != n - 2:
        bad.append("angle sum differs from (n-2)pi")
    for got, want in zip(float_angles(tile), tile.angles):
        if abs(got - math.pi * want) > 1e-9:
            bad.append("declared angles do not match coordinates")
            break
    dec = tile.decoration
    ends = {c.position for c in dec.connectors}
    for curve in dec.curves:
        for a, b in zip(curve, curve[1:]):
            for e0, e1 in tile.boundary.edges():
                k = _seg_kind(a, b, e0, e1)
                if k is IntersectionKind.disjoint:
                    continue
                if k is IntersectionKind.endpoint_touch:
                    touching = [p for p in (a, b) if p in ends]
                    if touching:
                        continue
                bad.append("decoration touches the boundary away from a connector")
        for p in curve[1:-1]:
            if point_in_polygon(p, tile.boundary) != "inside":
                bad.append("decoration vertex outside the tile")
    for c in dec.connectors:
        if point_in_polygon(c.position, tile.boundary) != "boundary":
            bad.append("connector not on the boundary")
    return bad


def check_arc_endpoint_angles(tile: Prototile) -> dict:
    """Interior angle at each connector, and whether all exceed 2pi/3."""
    if not tile.decoration.connectors:
        raise ValueError("prototile has no connectors")
    angles = []
    for c in tile.decoration.connectors:
        angles.append(tile.angle_at(c.position))
    return {"angles": angles, "pass": all(a > TWO_THIRDS for a in angles)}


# tile T ----------------------------------------------------------------

T_ORDER = 14
# vertex map of the mirror symmetry of the undecorated tile
T_MIRROR = {0: 4, 4: 0, 1: 3, 3: 1, 2: 2, 5: 6, 6: 5}
T_ARC = (2, 5)


@lru_cache(maxsize=None)
def versatile_T() -> Prototile:
    """Heptagonal versatile with its marked arc.

    Vertices, with zeta = exp(i pi/7) and w = zeta^2:
        V0 = 0            tip, angle pi/7
        V1 = 1            convex, 5pi/7
        V2 = 1 + w        convex, 5pi/7   (arc entry)
        V3 = B = 1+w+w^2  convex, 5pi/7
        V4 = zeta * B     tip, pi/7
        V5 = zeta (1 + w) concave, 9pi/7  (arc exit)
        V6 = zeta         concave, 9pi/7
    The convex side V0..V3 rotated by pi/7 about V0 is the concave side
    V0, V6, V5, V4, which is what lets copies fan around a tip.
    """
    z = lambda k: CycloNumber.zeta(k, T_ORDER)
    one = z(0)
    w = z(2)
    B = one + w + z(4)
    verts = [
        CycloNumber.zero(T_ORDER),
        one,
        one + w,
        B,
        B.rotate(1),
        (one + w).rotate(1),
        z(1),
    ]
    angles = tuple(Fraction(a, 7) for a in (1, 5, 5, 5, 1, 9, 9))
    poly = SimplePolygon(verts)
    a, b = T_ARC
    # the chord between the two connectors, split at its midpoint
    mid = (verts[a] + verts[b]).scale(Fraction(1, 2))
    curve = (verts[a], mid, verts[b])
    dec = Decoration(
        curves=(curve,),
        connectors=(Connector(verts[a], ARC_END, 0), Connector(verts[b], ARC_END, 1)),
    )
    tags = ("convex_side", "convex_side", "convex_side", "base",
            "concave_side", "concave_side", "concave_side")
    return Prototile("T", T_ORDER, poly, angles, dec, tags, tips=(0, 4),
                     notes="marked arc from convex vertex V2 to concave vertex V5")


# triangle ----------------------------------------------------------------

TRI_ORDER = 24


@lru_cache(maxsize=None)
def triangle_tile() -> Prototile:
    """Isosceles triangle with apex angle pi/12 and unit legs.

    Apex at 0, legs to 1 and zeta = exp(i pi/12); the arc joins the leg
    midpoints.
    """
    o = CycloNumber.zero(TRI_ORDER)
    one = CycloNumber.zeta(0, TRI_ORDER)
    z = CycloNumber.zeta(1, TRI_ORDER)
    poly = SimplePolygon([o, one, z])
    angles = (Fraction(1, 12), Fraction(11, 24), Fraction(11, 24))
    m0, m1 = one.scale(Fraction(1, 2)), z.scale(Fraction(1, 2))
    dec = Decoration(
        curves=((m0, m1),),
        connectors=(Connector(m0, ARC_END, 0), Connector(m1, ARC_END, 1)),
    )
    return Prototile("triangle", TRI_ORDER, poly, angles, dec,
                     ("leg", "base", "leg"), tips=(0,),
                     notes="marked arc halving the legs")


# square Hilbert tile -------------------------------------------------------

SQ_ORDER = 4
SQ_SIDE = 3
# connector sides of the unrotated tile: 0 bottom, 1 right, 2 top, 3 left
HILBERT_SIDES = (0, 1, 2)
# connector position on each of those sides, in thirds of the side measured
# counterclockwise from the side's first corner
HILBERT_THIRDS = (1, 1, 2)


def _g(x, y) -> CycloNumber:
    """Gaussian rational x + iy in the order-4 ring."""
    x, y = Fraction(x), Fraction(y)
    den = x.denominator * y.denominator // math.gcd(x.denominator, y.denominator)
    return CycloNumber(SQ_ORDER, [int(x * den), int(y * den)], den)


@lru_cache(maxsize=None)
def hilbert_tile() -> Prototile:
    """3x3 square with a T-shaped tree joining three connectors.

    The connectors sit one unit along the bottom, right and top sides,
    at (1, 0), (3, 1) and (1, 3); the left side carries none.  Each arm runs
    straight to the junction (1, 1), so arm k ends at connector k.
    """
    s = SQ_SIDE
    corners = [_g(0, 0), _g(s, 0), _g(s, s), _g(0, s)]
    poly = SimplePolygon(corners)
    conns = []
    for k, t in zip(HILBERT_SIDES, HILBERT_THIRDS):
        a, b = corners[k], corners[(k + 1) % 4]
        conns.append(Connector(a + (b - a).scale(Fraction(t, 3)), OPEN_LINK, k))
    hub = _g(1, 1)
    curves = tuple((c.position, hub) for c in conns)
    dec = Decoration(curves=curves, connectors=tuple(conns), junctions=(hub,))
    angles = (Fraction(1, 2),) * 4
    return Prototile("hilbert", SQ_ORDER, poly, angles, dec,
                     ("side",) * 4, notes="three connectors at edge thirds")


CATALOG = {
    "T": versatile_T,
    "triangle": triangle_tile,
    "hilbert": hilbert_tile,
}


def get_prototile(pid: str) -> Prototile:
    try:
        return CATALOG[pid]()
    except KeyError:
        raise KeyError(f"unknown prototile {pid!r}") from None


def prototile_doc(tile: Prototile) -> dict:
    """Boundary and decoration as exact coordinate strings."""
    dec = tile.decoration
    return {
        "id": tile.id,
        "order": tile.order,
        "boundary": [encode(v) for v in tile.vertices],
        "angles_over_pi": [str(a) for a in tile.angles],
        "side_tags": list(tile.side_tags),
        "curves": [[encode(p) for p in c] for c in dec.curves],
        "connectors": [{"position": encode(c.position), "kind": c.kind, "label": c.label}
                       for c in dec.connectors],
        "junctions": [encode(p) for p in dec.junctions],
    }
