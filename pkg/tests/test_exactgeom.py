import cmath
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from seedtiling.exactgeom import (
    AngleUnit, CycloNumber, IntersectionKind, Isometry, OrderMismatch, Segment,
    SimplePolygon, compare_real, cross_sign, decode, direction_index, encode, is_simple,
    orient, point_in_polygon, polygons_overlap, reduce, segments_intersect, sign_of_imag,
    sign_of_real,
)

ORDERS = (4, 14, 24)
small = st.integers(-6, 6)


@st.composite
def numbers(draw, order=None):
    n = order or draw(st.sampled_from(ORDERS))
    raw = draw(st.lists(small, min_size=n, max_size=n))
    den = draw(st.integers(1, 5))
    return reduce([Fraction(c, den) for c in raw], n)


def _exact_value(raw, n, prec=60):
    with mpmath.workdps(prec):
        return sum(mpmath.mpf(c) * mpmath.expjpi(mpmath.mpf(2 * k) / n) for k, c in enumerate(raw))


@given(numbers(14), numbers(14), numbers(14))
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == CycloNumber.zero(14)


@pytest.mark.parametrize("n", ORDERS)
def test_roots_of_unity(n):
    z = CycloNumber.zeta(1, n)
    p = CycloNumber.from_int(1, n)
    for _ in range(n):
        p = p * z
    assert p == CycloNumber.from_int(1, n)
    s = CycloNumber.zero(n)
    for k in range(n):
        s = s + CycloNumber.zeta(k, n)
    assert s.is_zero()


def test_random_identities_reduce_consistently():
    # 10^4 sums of roots of unity, each reduced from two different raw forms
    rng = random.Random(7)
    for i in range(10_000):
        n = ORDERS[i % 3]
        raw = [rng.randint(-4, 4) for _ in range(n)]
        a = reduce(raw, n)
        # zeta^k = zeta^(k+n) so shifting by n changes nothing
        padded = raw + [0] * n
        shift = rng.randrange(n)
        rolled = [0] * (2 * n)
        for k, c in enumerate(raw):
            rolled[k + n if k < shift else k] = c
        assert reduce(rolled, n) == a == reduce(padded, n)
        assert decode(encode(a)) == a
        assert abs(a.approx - complex(_exact_value(raw, n, 30))) < 1e-9


@given(numbers())
def test_sign_predicates_match_high_precision(x):
    raw = [x.num[i] for i in range(len(x.num))]
    v = _exact_value(raw, x.order) / x.den
    if abs(v.real) > 1e-6:
        assert sign_of_real(x) == (1 if v.real > 0 else -1)
    if abs(v.imag) > 1e-6:
        assert sign_of_imag(x) == (1 if v.imag > 0 else -1)


def test_sign_of_tiny_value_is_exact():
    c = CycloNumber.zeta(1, 14) + CycloNumber.zeta(13, 14)
    one = CycloNumber.from_int(1, 14)
    # 2cos(pi/7) is a root of x^3 - x^2 - 2x + 1
    assert (c * c * c - c * c - c.scale(2) + one).is_zero()
    # 2cos(pi/7) - 1.8019377358 is about 4.8e-12
    q = Fraction(18019377358, 10 ** 10)
    tiny = c - CycloNumber.from_fraction(q, 14)
    with mpmath.workdps(40):
        ref = 2 * mpmath.cos(mpmath.pi / 7) - mpmath.mpf(q.numerator) / q.denominator
    assert 0 < ref < 1e-11
    assert sign_of_real(tiny) == 1
    assert sign_of_real(-tiny) == -1
    assert sign_of_real(CycloNumber.zero(14)) == 0


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        CycloNumber.zeta(1, 14) + CycloNumber.zeta(1, 24)


@pytest.mark.parametrize("text", ["", "14:", "14:[1/1]", "14:[2/2,0/1,0/1,0/1,0/1,0/1]", "x:[1]"])
def test_decode_rejects(text):
    with pytest.raises(ValueError):
        decode(text)


@given(st.integers(0, 27), st.booleans(), numbers(14), numbers(14))
def test_isometry_group(rot, ref, t, p):
    g = Isometry(rot, ref, t)
    assert g.inverse().apply(g.apply(p)) == p
    h = Isometry((rot * 3) % 14, not ref, t.rotate(2))
    assert g.compose(h).apply(p) == g.apply(h.apply(p))


@given(st.integers(0, 27))
def test_direction_index(k):
    assert direction_index(CycloNumber.zeta(k, 28 // 2).scale(3)) % 28 == (2 * k) % 28


def test_angle_unit():
    a = AngleUnit(18, 14) + AngleUnit(16, 14)
    assert a.k == 6
    assert (-AngleUnit(2, 14)).k == 26
    assert abs(AngleUnit(8, 14).radians - 4 * cmath.pi / 7) < 1e-12


def _g(x, y):
    return CycloNumber(4, (x, y))


def test_orient_and_segments():
    a, b, c = _g(0, 0), _g(2, 0), _g(1, 1)
    assert orient(a, b, c) == 1 and orient(a, c, b) == -1
    assert orient(a, b, _g(5, 0)) == 0
    assert cross_sign(b, c) == 1
    assert segments_intersect(Segment(a, b), Segment(_g(1, -1), c)) == IntersectionKind.interior_cross
    assert segments_intersect(Segment(a, b), Segment(_g(3, 0), _g(4, 0))) == IntersectionKind.disjoint
    assert compare_real(b, c) == 1


def test_polygons():
    sq = SimplePolygon([_g(0, 0), _g(2, 0), _g(2, 2), _g(0, 2)])
    assert point_in_polygon(_g(1, 1), sq) == "inside"
    assert point_in_polygon(_g(2, 1), sq) == "boundary"
    assert point_in_polygon(_g(3, 1), sq) == "outside"
    assert not is_simple([_g(0, 0), _g(2, 2), _g(2, 0), _g(0, 2)])
    other = SimplePolygon([_g(2, 0), _g(4, 0), _g(4, 2), _g(2, 2)])
    assert not polygons_overlap(sq, other)
    assert polygons_overlap(sq, SimplePolygon([_g(1, 1), _g(3, 1), _g(3, 3), _g(1, 3)]))
