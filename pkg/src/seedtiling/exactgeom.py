"""Exact arithmetic in the cyclotomic rings Q(zeta), zeta = exp(i*pi/N).

A point of the plane is a single CycloNumber (the complex number is the
point).  Coefficients are rationals stored as an integer numerator vector
with one shared positive denominator.  Three families are compiled in:
order 14 (heptagonal tile), 24 (pi/12 triangle) and 4 (square tile).

Signs are decided in two stages.  A double precision evaluation carries an
explicit error bound; when the value clears the bound its sign is proven.
Otherwise zero is decided symbolically (x + conj(x) == 0 for the real part),
and a nonzero value is refined with mpmath interval arithmetic until the
interval leaves zero, which must happen since the value is known nonzero.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

import mpmath

SUPPORTED_ORDERS = (4, 14, 24)

# monic cyclotomic polynomials Phi_{2N}, low degree first, leading 1 omitted
_PHI = {
    4: (1, 0),                      # x^2 + 1
    14: (1, -1, 1, -1, 1, -1),      # x^6 - x^5 + x^4 - x^3 + x^2 - x + 1
    24: (1, 0, 0, 0, -1, 0, 0, 0),  # x^8 - x^4 + 1
}

# relative error budget of one double evaluation (orders of magnitude above
# the true rounding error for the small coefficient vectors used here)
_FLOAT_REL = 1e-13


class OrderMismatch(ValueError):
    pass


class _Field:
    """Precomputed tables for one order."""

    def __init__(self, order: int):
        if order not in _PHI:
            raise ValueError(f"unsupported cyclotomic order {order}")
        self.order = order
        self.n = order // 2
        phi = _PHI[order]
        self.deg = d = len(phi)
        # pow_[k] = reduced coefficient vector of zeta^k, k in [0, order)
        cur = [1] + [0] * (d - 1)
        pows = []
        for _ in range(order):
            pows.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c - top * p for c, p in zip(cur, phi)]
        self.pow_ = tuple(pows)
        # reduced vectors of x^k for the product convolution, k < 2d - 1
        self.conv = tuple(pows[k % order] for k in range(2 * d - 1))
        # column tables for rotation by zeta^k and for complex conjugation
        self.rot_cols = tuple(
            tuple(pows[(j + k) % order] for j in range(d)) for k in range(order)
        )
        self.conj_cols = tuple(pows[(-j) % order] for j in range(d))
        ang = [math.pi * j / self.n for j in range(d)]
        self.cos = tuple(math.cos(a) for a in ang)
        self.sin = tuple(math.sin(a) for a in ang)
        self.zf = tuple(complex(c, s) for c, s in zip(self.cos, self.sin))
        self._iv_cache: dict[int, tuple] = {}

    def iv_tables(self, prec: int):
        if prec not in self._iv_cache:
            with mpmath.iv.workprec(prec):
                pi = mpmath.iv.pi
                cs = tuple(mpmath.iv.cos(pi * j / self.n) for j in range(self.deg))
                sn = tuple(mpmath.iv.sin(pi * j / self.n) for j in range(self.deg))
            self._iv_cache[prec] = (cs, sn)
        return self._iv_cache[prec]


@lru_cache(maxsize=None)
def field(order: int) -> _Field:
    return _Field(order)


def _lin(cols, vec):
    """Apply the linear map given by its columns to an integer vector."""
    d = len(cols[0])
    out = [0] * d
    for c, col in zip(vec, cols):
        if c:
            for i in range(d):
                v = col[i]
                if v:
                    out[i] += c * v
    return out


class CycloNumber:
    """Element of Q(zeta) in canonical reduced form."""

    __slots__ = ("order", "num", "den", "_approx", "_err", "_hash")

    def __init__(self, order: int, num: Sequence[int], den: int = 1, _canon: bool = False):
        if not _canon:
            F = field(order)
            if len(num) != F.deg:
                raise ValueError("coefficient vector has wrong length; use reduce()")
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            if den < 0:
                num, den = [-c for c in num], -den
            g = den
            for c in num:
                g = gcd(g, c)
            if g > 1:
                num = [c // g for c in num]
                den //= g
            if not any(num):
                den = 1
        self.order = order
        self.num = tuple(num)
        self.den = den
        self._approx = None
        self._err = None
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def from_int(cls, value: int, order: int) -> "CycloNumber":
        d = field(order).deg
        return cls(order, [value] + [0] * (d - 1))

    @classmethod
    def from_fraction(cls, value, order: int) -> "CycloNumber":
        v = Fraction(value)
        d = field(order).deg
        return cls(order, [v.numerator] + [0] * (d - 1), v.denominator)

    @classmethod
    def zeta(cls, k: int, order: int) -> "CycloNumber":
        F = field(order)
        return cls(order, F.pow_[k % order], 1, _canon=True)

    @classmethod
    def zero(cls, order: int) -> "CycloNumber":
        return cls(order, (0,) * field(order).deg, 1, _canon=True)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    # arithmetic --------------------------------------------------------
    def _check(self, other: "CycloNumber"):
        if other.order != self.order:
            raise OrderMismatch(f"orders {self.order} and {other.order} do not mix")

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.from_fraction(other, self.order)
        return NotImplemented

    def __add__(self, other):
        if other.__class__ is CycloNumber and other.order == self.order:
            o = other
        else:
            o = self._coerce(other)
            if o is NotImplemented:
                return o
        if self.den == o.den:
            num = [a + b for a, b in zip(self.num, o.num)]
            if self.den == 1:
                return CycloNumber(self.order, num, 1, _canon=True)
            return CycloNumber(self.order, num, self.den)
        return CycloNumber(self.order,
                           [a * o.den + b * self.den for a, b in zip(self.num, o.num)],
                           self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.order, [-a for a in self.num], self.den, _canon=True)

    def __sub__(self, other):
        if other.__class__ is CycloNumber and other.order == self.order:
            o = other
        else:
            o = self._coerce(other)
            if o is NotImplemented:
                return o
        if self.den == o.den:
            num = [a - b for a, b in zip(self.num, o.num)]
            if self.den == 1:
                return CycloNumber(self.order, num, 1, _canon=True)
            return CycloNumber(self.order, num, self.den)
        return CycloNumber(self.order,
                           [a * o.den - b * self.den for a, b in zip(self.num, o.num)],
                           self.den * o.den)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = field(self.order)
        d = F.deg
        raw = [0] * (2 * d - 1)
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(o.num):
                    if b:
                        raw[i + j] += a * b
        den = self.den * o.den
        return CycloNumber(self.order, _lin(F.conv, raw), den, _canon=den == 1)

    __rmul__ = __mul__

    def scale(self, q) -> "CycloNumber":
        q = Fraction(q)
        return CycloNumber(self.order, [a * q.numerator for a in self.num], self.den * q.denominator)

    def rotate(self, k: int) -> "CycloNumber":
        """Multiply by zeta^k."""
        F = field(self.order)
        k %= self.order
        if k == 0:
            return self
        return CycloNumber(self.order, _lin(F.rot_cols[k], self.num), self.den, _canon=True)

    def conj(self) -> "CycloNumber":
        F = field(self.order)
        return CycloNumber(self.order, _lin(F.conj_cols, self.num), self.den, _canon=True)

    def is_zero(self) -> bool:
        return not any(self.num)

    # comparison --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycloNumber):
            return self.order == other.order and self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            return self == CycloNumber.from_fraction(other, self.order)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.num, self.den))
        return self._hash

    def key(self) -> tuple:
        return (self.num, self.den)

    # floats (display and filtering only) -------------------------------
    @property
    def approx(self) -> complex:
        if self._approx is None:
            F = field(self.order)
            s = 0j
            for c, z in zip(self.num, F.zf):
                if c:
                    s += c * z
            self._approx = s / self.den
        return self._approx

    @property
    def err(self) -> float:
        """Bound on |approx - value|."""
        if self._err is None:
            self._err = _FLOAT_REL * (sum(abs(c) for c in self.num) + 1) / self.den
        return self._err

    def __complex__(self):
        return self.approx

    def __repr__(self):
        return f"CycloNumber({encode(self)})"


# canonical text encoding -----------------------------------------------

def encode(x: CycloNumber) -> str:
    parts = []
    for c in x.num:
        f = Fraction(c, x.den)
        parts.append(f"{f.numerator}/{f.denominator}")
    return f"{x.order}:[{','.join(parts)}]"


def decode(text: str) -> CycloNumber:
    try:
        head, body = text.split(":", 1)
        order = int(head)
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError
        coeffs = [Fraction(tok) for tok in body[1:-1].split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed cyclotomic encoding {text!r}") from exc
    x = reduce(coeffs, order)
    if len(coeffs) != field(order).deg or encode(x) != text:
        raise ValueError(f"non-canonical cyclotomic encoding {text!r}")
    return x


def reduce(raw_coeffs: Iterable, order: int) -> CycloNumber:
    """Canonical form of sum_k raw_coeffs[k] * zeta^k."""
    if order not in _PHI:
        raise ValueError(f"unsupported cyclotomic order {order}")
    F = field(order)
    fr = [Fraction(c) for c in raw_coeffs]
    den = 1
    for f in fr:
        den = den * f.denominator // gcd(den, f.denominator)
    acc = [0] * F.deg
    for k, f in enumerate(fr):
        c = f.numerator * (den // f.denominator)
        if c:
            for i, v in enumerate(F.pow_[k % order]):
                acc[i] += c * v
    return CycloNumber(order, acc, den)


# signs -----------------------------------------------------------------

def _refine_sign(x: CycloNumber, imag: bool) -> int:
    F = field(x.order)
    prec = 80
    while True:
        cs, sn = F.iv_tables(prec)
        tab = sn if imag else cs
        with mpmath.iv.workprec(prec):
            s = mpmath.iv.mpf(0)
            for c, t in zip(x.num, tab):
                if c:
                    s += c * t
        if s.a > 0:
            return 1
        if s.b < 0:
            return -1
        prec *= 2
        if prec > 1 << 16:
            raise ArithmeticError("interval refinement did not separate a nonzero value")


def _component_sign(x: CycloNumber, imag: bool) -> int:
    F = field(x.order)
    tab = F.sin if imag else F.cos
    s = 0.0
    mag = 1.0
    for c, t in zip(x.num, tab):
        if c:
            s += c * t
            mag += abs(c)
    if s > _FLOAT_REL * mag:
        return 1
    if s < -_FLOAT_REL * mag:
        return -1
    cj = x.conj()
    if imag:
        if (x - cj).is_zero():
            return 0
    elif (x + cj).is_zero():
        return 0
    return _refine_sign(x, imag)


def sign_of_real(x: CycloNumber) -> int:
    """Exact sign of Re(x)."""
    return _component_sign(x, False)


def sign_of_imag(x: CycloNumber) -> int:
    """Exact sign of Im(x)."""
    return _component_sign(x, True)


def compare_real(a: CycloNumber, b: CycloNumber) -> int:
    return sign_of_real(a - b)


_SIGN_CACHE: dict = {}
_SIGN_CACHE_MAX = 1 << 20


def _cached(tag, u, v, fn):
    key = (tag, u.order, u.num, u.den, v.num, v.den)
    r = _SIGN_CACHE.get(key)
    if r is None:
        r = fn(u, v)
        if len(_SIGN_CACHE) > _SIGN_CACHE_MAX:
            _SIGN_CACHE.clear()
        _SIGN_CACHE[key] = r
    return r


def _cross_sign(u: CycloNumber, v: CycloNumber) -> int:
    uf, vf = u.approx, v.approx
    cr = uf.real * vf.imag - uf.imag * vf.real
    eu, ev = u.err, v.err
    bound = abs(uf) * ev + abs(vf) * eu + eu * ev + 1e-15 * abs(uf) * abs(vf)
    if cr > bound:
        return 1
    if cr < -bound:
        return -1
    return sign_of_imag(u.conj() * v)


def _dot_sign(u: CycloNumber, v: CycloNumber) -> int:
    uf, vf = u.approx, v.approx
    dt = uf.real * vf.real + uf.imag * vf.imag
    eu, ev = u.err, v.err
    bound = abs(uf) * ev + abs(vf) * eu + eu * ev + 1e-15 * abs(uf) * abs(vf)
    if dt > bound:
        return 1
    if dt < -bound:
        return -1
    return sign_of_real(u.conj() * v)


def cross_sign(u: CycloNumber, v: CycloNumber) -> int:
    """Sign of Im(conj(u) v), i.e. of the 2d cross product u x v."""
    return _cached(0, u, v, _cross_sign)


def dot_sign(u: CycloNumber, v: CycloNumber) -> int:
    """Sign of Re(conj(u) v)."""
    return _cached(1, u, v, _dot_sign)


def orient(a: CycloNumber, b: CycloNumber, c: CycloNumber) -> int:
    """+1 if a, b, c turn counterclockwise, -1 clockwise, 0 collinear."""
    return cross_sign(b - a, c - a)


# angles and isometries --------------------------------------------------

@dataclass(frozen=True)
class AngleUnit:
    """The angle k*pi/order, with k taken modulo 2*order."""

    k: int
    order: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % (2 * self.order))

    def __add__(self, other: "AngleUnit") -> "AngleUnit":
        if other.order != self.order:
            raise OrderMismatch("angle orders differ")
        return AngleUnit(self.k + other.k, self.order)

    def __neg__(self):
        return AngleUnit(-self.k, self.order)

    @property
    def radians(self) -> float:
        return math.pi * self.k / self.order


@dataclass(frozen=True)
class Isometry:
    """p -> zeta^rot * (conj(p) if reflect else p) + translation."""

    rot: int
    reflect: bool
    translation: CycloNumber

    def __post_init__(self):
        object.__setattr__(self, "rot", self.rot % self.translation.order)
        object.__setattr__(self, "reflect", bool(self.reflect))

    @property
    def order(self) -> int:
        return self.translation.order

    @classmethod
    def identity(cls, order: int) -> "Isometry":
        return cls(0, False, CycloNumber.zero(order))

    @classmethod
    def rotation(cls, k: int, order: int, center: CycloNumber | None = None) -> "Isometry":
        if center is None:
            return cls(k, False, CycloNumber.zero(order))
        return cls(k, False, center - center.rotate(k))

    @classmethod
    def translate(cls, t: CycloNumber) -> "Isometry":
        return cls(0, False, t)

    def apply(self, p: CycloNumber) -> CycloNumber:
        if p.order != self.order:
            raise OrderMismatch("point and isometry orders differ")
        q = p.conj() if self.reflect else p
        return q.rotate(self.rot) + self.translation

    __call__ = apply

    def linear(self, v: CycloNumber) -> CycloNumber:
        """Image of a direction vector (no translation)."""
        q = v.conj() if self.reflect else v
        return q.rotate(self.rot)

    def compose(self, other: "Isometry") -> "Isometry":
        """self after other."""
        if other.order != self.order:
            raise OrderMismatch("isometry orders differ")
        if self.reflect:
            rot = self.rot - other.rot
            t = other.translation.conj().rotate(self.rot) + self.translation
        else:
            rot = self.rot + other.rot
            t = other.translation.rotate(self.rot) + self.translation
        return Isometry(rot, self.reflect != other.reflect, t)

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return self.compose(other)

    def inverse(self) -> "Isometry":
        if self.reflect:
            return Isometry(self.rot, True, -(self.translation.conj().rotate(self.rot)))
        return Isometry(-self.rot, False, -(self.translation.rotate(-self.rot)))

    def key(self) -> tuple:
        return (self.rot, self.reflect, self.translation.key())


def apply(iso: Isometry, p: CycloNumber) -> CycloNumber:
    return iso.apply(p)


def compose(a: Isometry, b: Isometry) -> Isometry:
    return a.compose(b)


# segments and polygons --------------------------------------------------

class IntersectionKind(enum.Enum):
    disjoint = "disjoint"
    endpoint_touch = "endpoint_touch"
    interior_cross = "interior_cross"
    collinear_overlap = "collinear_overlap"


@dataclass(frozen=True)
class Segment:
    a: CycloNumber
    b: CycloNumber

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("degenerate zero-length segment")
        if self.a.order != self.b.order:
            raise OrderMismatch("segment endpoints of different orders")


def on_segment(p: CycloNumber, a: CycloNumber, b: CycloNumber) -> bool:
    """p lies on the closed segment ab."""
    if orient(a, b, p) != 0:
        return False
    return dot_sign(p - a, b - a) >= 0 and dot_sign(p - b, a - b) >= 0


def in_segment_interior(p: CycloNumber, a: CycloNumber, b: CycloNumber) -> bool:
    if orient(a, b, p) != 0:
        return False
    return dot_sign(p - a, b - a) > 0 and dot_sign(p - b, a - b) > 0


def _boxes_apart(p, q, r, s, margin=1e-9) -> bool:
    pf, qf, rf, sf = p.approx, q.approx, r.approx, s.approx
    return (max(pf.real, qf.real) + margin < min(rf.real, sf.real)
            or max(rf.real, sf.real) + margin < min(pf.real, qf.real)
            or max(pf.imag, qf.imag) + margin < min(rf.imag, sf.imag)
            or max(rf.imag, sf.imag) + margin < min(pf.imag, qf.imag))


def segments_intersect(s: Segment, t: Segment) -> IntersectionKind:
    return _seg_kind(s.a, s.b, t.a, t.b)


def _seg_kind(a, b, c, d) -> IntersectionKind:
    if _boxes_apart(a, b, c, d):
        return IntersectionKind.disjoint
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 == 0 and o2 == 0:
        # collinear: compare positions along ab
        u = b - a
        tc = u.conj() * (c - a)
        td = u.conj() * (d - a)
        tb = u.conj() * u
        lo, hi = (tc, td) if compare_real(tc, td) < 0 else (td, tc)
        zero = CycloNumber.zero(a.order)
        start = lo if compare_real(lo, zero) > 0 else zero
        end = hi if compare_real(hi, tb) < 0 else tb
        cmp = compare_real(start, end)
        if cmp < 0:
            return IntersectionKind.collinear_overlap
        if cmp == 0:
            return IntersectionKind.endpoint_touch
        return IntersectionKind.disjoint
    if o1 * o2 < 0 and o3 * o4 < 0:
        return IntersectionKind.interior_cross
    if (o1 == 0 and on_segment(c, a, b)) or (o2 == 0 and on_segment(d, a, b)) \
            or (o3 == 0 and on_segment(a, c, d)) or (o4 == 0 and on_segment(b, c, d)):
        return IntersectionKind.endpoint_touch
    return IntersectionKind.disjoint


def twice_area(vertices: Sequence[CycloNumber]) -> CycloNumber:
    """Sum of conj(v_i) v_{i+1}; its imaginary part is twice the signed area."""
    acc = CycloNumber.zero(vertices[0].order)
    n = len(vertices)
    for i in range(n):
        acc = acc + vertices[i].conj() * vertices[(i + 1) % n]
    return acc


class SimplePolygon:
    """Counterclockwise simple polygon with exact vertices."""

    __slots__ = ("vertices", "order", "_bbox")

    def __init__(self, vertices: Sequence[CycloNumber], check: bool = True):
        self.vertices = tuple(vertices)
        self.order = self.vertices[0].order
        self._bbox = None
        if check:
            if not is_simple(self.vertices):
                raise ValueError("polygon is not simple")
            if sign_of_imag(twice_area(self.vertices)) <= 0:
                raise ValueError("polygon is not counterclockwise")

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        v = self.vertices
        n = len(v)
        return [(v[i], v[(i + 1) % n]) for i in range(n)]

    @property
    def bbox(self):
        if self._bbox is None:
            xs = [p.approx.real for p in self.vertices]
            ys = [p.approx.imag for p in self.vertices]
            self._bbox = (min(xs), min(ys), max(xs), max(ys))
        return self._bbox

    def area2(self) -> CycloNumber:
        return twice_area(self.vertices)

    def transformed(self, iso: Isometry) -> "SimplePolygon":
        pts = [iso.apply(p) for p in self.vertices]
        if iso.reflect:
            pts.reverse()
        return SimplePolygon(pts, check=False)


def is_simple(vertices: Sequence[CycloNumber]) -> bool:
    n = len(vertices)
    if n < 3 or len(set(vertices)) != n:
        return False
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        for j in range(i + 1, n):
            c, d = vertices[j], vertices[(j + 1) % n]
            k = _seg_kind(a, b, c, d)
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            if adjacent:
                # consecutive edges meet at their shared endpoint; only a fold back is bad
                if k is IntersectionKind.collinear_overlap:
                    return False
            elif k is not IntersectionKind.disjoint:
                return False
    return True


def _locate(p: CycloNumber, poly: SimplePolygon):
    """('vertex', i), ('edge', i), ('inside', None) or ('outside', None)."""
    v = poly.vertices
    n = len(v)
    pf = p.approx
    x0, y0, x1, y1 = poly.bbox
    if pf.real < x0 - 1e-9 or pf.real > x1 + 1e-9 or pf.imag < y0 - 1e-9 or pf.imag > y1 + 1e-9:
        return ("outside", None)
    for i in range(n):
        if v[i] == p:
            return ("vertex", i)
    for i in range(n):
        a, b = v[i], v[(i + 1) % n]
        if not _boxes_apart(p, p, a, b) and in_segment_interior(p, a, b):
            return ("edge", i)
    # crossing number with the ray to +x; half-open rule on the y range
    inside = False
    for i in range(n):
        a, b = v[i], v[(i + 1) % n]
        sa = sign_of_imag(a - p)
        sb = sign_of_imag(b - p)
        if (sa > 0) != (sb > 0):
            # edge straddles the horizontal line through p
            o = orient(a, b, p)
            if (o > 0) == (sb > 0):
                inside = not inside
    return ("inside", None) if inside else ("outside", None)


def point_in_polygon(p: CycloNumber, poly: SimplePolygon) -> str:
    """'inside', 'boundary' or 'outside'."""
    kind, _ = _locate(p, poly)
    if kind in ("vertex", "edge"):
        return "boundary"
    return kind


def _wedge(poly: SimplePolygon, kind: str, i: int):
    """Interior wedge at a boundary point as (start_dir, end_dir), ccw."""
    v = poly.vertices
    n = len(v)
    if kind == "vertex":
        return (v[(i + 1) % n] - v[i], v[(i - 1) % n] - v[i])
    d = v[(i + 1) % n] - v[i]
    return (d, -d)


def _half(ref: CycloNumber, u: CycloNumber) -> int:
    c = cross_sign(ref, u)
    if c > 0 or (c == 0 and dot_sign(ref, u) > 0):
        return 0
    return 1


def _ccw_before(ref, u, w) -> bool:
    """Angle ref->u strictly less than angle ref->w, angles in [0, 2pi)."""
    hu, hw = _half(ref, u), _half(ref, w)
    if hu != hw:
        return hu < hw
    return cross_sign(u, w) > 0


def _same_dir(u, w) -> bool:
    return cross_sign(u, w) == 0 and dot_sign(u, w) > 0


def direction_index(v: CycloNumber) -> int:
    """k in [0, 2*order) with arg(v) = k*pi/order exactly.

    The float angle proposes k; the exact test v^2 * zeta^-k > 0 confirms it
    up to a half turn, which the float estimate resolves with a wide margin.
    Raises ValueError when v points in no such direction.
    """
    n = v.order
    a = v.approx
    if a == 0:
        raise ValueError("zero vector has no direction")
    k = round(math.atan2(a.imag, a.real) * n / math.pi) % (2 * n)
    w = (v * v).rotate(-k)
    if sign_of_imag(w) != 0 or sign_of_real(w) <= 0:
        raise ValueError("direction is not a multiple of pi/order")
    return k


def _in_arc(u, start, end) -> bool:
    """u in the half-open ccw arc [start, end)."""
    if _same_dir(u, start):
        return True
    return _ccw_before(start, u, end)


def wedges_overlap(w1, w2) -> bool:
    (a1, b1), (a2, b2) = w1, w2
    return _in_arc(a2, a1, b1) or _in_arc(a1, a2, b2)


def _float_orient(a: complex, b: complex, c: complex) -> float:
    return (b.real - a.real) * (c.imag - a.imag) - (b.imag - a.imag) * (c.real - a.real)


def _float_seg_dist2(p: complex, a: complex, b: complex) -> float:
    d = b - a
    L = d.real * d.real + d.imag * d.imag
    t = ((p.real - a.real) * d.real + (p.imag - a.imag) * d.imag) / L
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    q = a + t * d
    e = p - q
    return e.real * e.real + e.imag * e.imag


def _float_winding(p: complex, pts: list) -> int:
    total = 0.0
    n = len(pts)
    for i in range(n):
        a = pts[i] - p
        b = pts[(i + 1) % n] - p
        total += math.atan2(a.real * b.imag - a.imag * b.real, a.real * b.real + a.imag * b.imag)
    return round(total / (2 * math.pi))


def polygons_overlap(p: SimplePolygon, q: SimplePolygon) -> bool:
    """True iff the interiors of p and q intersect.

    Float arithmetic with a certified error margin settles the clear cases;
    anything within the margin of a degeneracy is decided exactly.
    """
    if p.order != q.order:
        raise OrderMismatch("polygon orders differ")
    px0, py0, px1, py1 = p.bbox
    qx0, qy0, qx1, qy1 = q.bbox
    m = 1e-9
    if px1 < qx0 + m or qx1 < px0 + m or py1 < qy0 + m or qy1 < py0 + m:
        return False
    pv, qv = p.vertices, q.vertices
    pf = [v.approx for v in pv]
    qf = [v.approx for v in qv]
    err = max(max(v.err for v in pv), max(v.err for v in qv))
    span = max(px1, qx1) - min(px0, qx0) + max(py1, qy1) - min(py0, qy0) + 1.0
    tol = 8.0 * err * span + 1e-13 * span * span
    np_, nq = len(pv), len(qv)
    # proper edge crossings
    for i in range(np_):
        a, b = pf[i], pf[(i + 1) % np_]
        for j in range(nq):
            c, d = qf[j], qf[(j + 1) % nq]
            o1 = _float_orient(a, b, c)
            o2 = _float_orient(a, b, d)
            if (o1 > tol and o2 > tol) or (o1 < -tol and o2 < -tol):
                continue
            o3 = _float_orient(c, d, a)
            o4 = _float_orient(c, d, b)
            if (o3 > tol and o4 > tol) or (o3 < -tol and o4 < -tol):
                continue
            if ((o1 > tol and o2 < -tol) or (o1 < -tol and o2 > tol)) and \
                    ((o3 > tol and o4 < -tol) or (o3 < -tol and o4 > tol)):
                return True
            if _seg_kind(pv[i], pv[(i + 1) % np_], qv[j], qv[(j + 1) % nq]) \
                    is IntersectionKind.interior_cross:
                return True
    # vertices strictly inside, and wedge overlaps at boundary contacts
    tol_d = tol * tol + 1e-18
    for first, second, ff, sf in ((p, q, pf, qf), (q, p, qf, pf)):
        ns = len(sf)
        sx0, sy0, sx1, sy1 = second.bbox
        for i, x in enumerate(ff):
            if x.real < sx0 - m or x.real > sx1 + m or x.imag < sy0 - m or x.imag > sy1 + m:
                continue
            near = False
            for j in range(ns):
                if _float_seg_dist2(x, sf[j], sf[(j + 1) % ns]) <= 1e-16 + tol:
                    near = True
                    break
            if not near:
                if _float_winding(x, sf) != 0:
                    return True
                continue
            kind, j = _locate(first.vertices[i], second)
            if kind == "inside":
                return True
            if kind in ("vertex", "edge"):
                if wedges_overlap(_wedge(first, "vertex", i), _wedge(second, kind, j)):
                    return True
    return False
