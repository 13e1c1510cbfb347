import cmath
from fractions import Fraction

import pytest

from seedtiling.exactgeom import CycloNumber, decode, is_simple
from seedtiling.prototile import (
    CATALOG, HILBERT_THIRDS, check_arc_endpoint_angles, check_catalog_tile, closure,
    float_angles, get_prototile, prototile_doc,
)


@pytest.mark.parametrize("pid", sorted(CATALOG))
def test_catalog_tile_is_sound(pid):
    tile = get_prototile(pid)
    assert closure(tile).is_zero()
    assert is_simple(tile.vertices)
    assert check_catalog_tile(tile) == []


@pytest.mark.parametrize("pid", sorted(CATALOG))
def test_angles_agree_with_floats(pid):
    tile = get_prototile(pid)
    for exact, approx in zip(tile.angles, float_angles(tile)):
        assert abs(float(exact) * cmath.pi - approx) < 1e-9
    assert sum(tile.angles) == len(tile.vertices) - 2


def test_T_angles():
    T = get_prototile("T")
    assert T.angle_units == (2, 10, 10, 10, 2, 18, 18)
    # edges have unit length
    v = T.vertices
    for i in range(7):
        assert abs(abs((v[(i + 1) % 7] - v[i]).approx) - 1) < 1e-12


def test_arc_endpoint_angles():
    assert check_arc_endpoint_angles(get_prototile("T")) == {
        "angles": [Fraction(5, 7), Fraction(9, 7)], "pass": True}
    tri = check_arc_endpoint_angles(get_prototile("triangle"))
    assert tri == {"angles": [Fraction(1), Fraction(1)], "pass": True}


def test_hilbert_tile_connectors():
    H = get_prototile("hilbert")
    pos = sorted((round(c.position.approx.real), round(c.position.approx.imag))
                 for c in H.decoration.connectors)
    assert pos == [(1, 0), (1, 3), (3, 1)]
    assert HILBERT_THIRDS == (1, 1, 2)
    assert len(H.decoration.curves) == 3


def test_unknown_prototile():
    with pytest.raises(KeyError):
        get_prototile("nope")


def test_dump_is_exact():
    doc = prototile_doc(get_prototile("T"))
    pts = [decode(s) for s in doc["boundary"]]
    assert pts == list(get_prototile("T").vertices)
    assert all(isinstance(decode(s), CycloNumber) for c in doc["curves"] for s in c)
