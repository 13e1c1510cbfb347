import pytest

from seedtiling.exactgeom import CycloNumber
from seedtiling.generators import (
    B_SECTORS, periodic_columns, sector_specs, spiral, spiral_sectors, spiral_tile_count,
    t_mirror, triangle_spiral,
)
from seedtiling.prototile import check_arc_endpoint_angles, get_prototile
from seedtiling.rules import replay_r1, verify_curve
from seedtiling.tiling import decoration_graph


@pytest.mark.parametrize("rows", [1, 2, 5])
def test_spiral_counts(rows):
    s = spiral(rows)
    # A sectors: rows 1, 3, 5 ...; B sectors start at 3
    a = rows * rows
    b = rows * rows + 2 * rows
    assert len(s) == spiral_tile_count(rows) == 11 * a + 3 * b


def test_sector_census():
    first_rows = {s: len(v) for (s, r), v in spiral_sectors(3).items() if r == 0}
    assert sorted(k for k, n in first_rows.items() if n != 1) == list(B_SECTORS)
    assert [sp.kind for sp in sector_specs(1)].count("B") == 3


def test_spiral_centre_gap_closes():
    s = spiral(2)
    zero = CycloNumber.zero(14)
    assert zero in {v for t in s.tiles for v in t.vertices}
    assert s.gap_units(zero) == 0


def test_mirror_is_a_symmetry_of_T():
    T = get_prototile("T")
    m = t_mirror()
    assert m.reflect
    assert {m.apply(v) for v in T.vertices} == set(T.vertices)


def test_spiral_curve():
    s = spiral(4)
    assert all(v.accepted for v in replay_r1(s.placements))
    assert verify_curve(s).ok


def test_columns_shape():
    s = periodic_columns(3, 4)
    assert len(s) == 27
    assert len(decoration_graph(s).components()) == 3
    with pytest.raises(ValueError):
        periodic_columns(1, 4)


def test_triangle_spiral_small():
    s = triangle_spiral(60)
    assert len(s) == 60
    assert all(v.accepted for v in replay_r1(s.placements))
    assert verify_curve(s).ok
    rep = check_arc_endpoint_angles(get_prototile("triangle"))
    assert rep["pass"] and all(a == 1 for a in rep["angles"])
