import pytest

from seedtiling.hilbert import (
    CELL_UNITS, DISTANCE_CLASSES, GRAY, QUAD_KINDS, TILES_PER_CELL, WHITE, boundary_offset,
    cell_visit_order, corner_distance, decoration_table, hilbert_path, hilbert_region,
    orientations, quadruple, tile_coords, triangle_colour, verify_hilbert, _iso_at,
)
from seedtiling.prototile import get_prototile
from seedtiling.rules import find_translations, replay_r2
from seedtiling.tiling import PlacedTile, Placement, TilingState


def d2xy(n, d):
    # textbook index-to-point conversion, kept separate from the package
    x = y = 0
    s, t = 1, d
    while s < n:
        rx = 1 & (t // 2)
        ry = 1 & (t ^ rx)
        if ry == 0:
            if rx == 1:
                x, y = s - 1 - x, s - 1 - y
            x, y = y, x
        x += s * rx
        y += s * ry
        t //= 4
        s *= 2
    return x, y


DIHEDRAL = [
    lambda x, y, m: (x, y), lambda x, y, m: (m - y, x), lambda x, y, m: (m - x, m - y),
    lambda x, y, m: (y, m - x), lambda x, y, m: (m - x, y), lambda x, y, m: (y, x),
    lambda x, y, m: (x, m - y), lambda x, y, m: (m - y, m - x),
]


def matches_oracle(cells, n):
    mx = min(x for x, _ in cells)
    my = min(y for _, y in cells)
    cells = [(x - mx, y - my) for x, y in cells]
    ref = [d2xy(n, d) for d in range(n * n)]
    for g in DIHEDRAL:
        r = [g(x, y, n - 1) for x, y in ref]
        if cells == r or cells == r[::-1]:
            return True
    return False


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_hilbert_path_is_a_grid_walk(k):
    p = hilbert_path(k)
    n = 1 << k
    assert len(set(p)) == n * n
    assert all(abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1 for a, b in zip(p, p[1:]))
    assert matches_oracle(p, n)


@pytest.mark.parametrize("level", [0, 1, 2])
def test_region_verifies(level):
    st = hilbert_region(level)
    assert len(st) == (TILES_PER_CELL << (level + 1)) ** 2
    rep = verify_hilbert(st)
    assert rep.ok, rep.failures
    assert rep.distance_classes <= DISTANCE_CLASSES
    assert matches_oracle(cell_visit_order(st), 1 << (level + 1))


def test_region_has_no_translation():
    assert find_translations(hilbert_region(1)) == []


@pytest.mark.parametrize("kind", sorted(QUAD_KINDS))
@pytest.mark.parametrize("orientation", range(4))
def test_quadruples_replay_under_r2(kind, orientation):
    seq = quadruple(kind, orientation)
    assert len(seq) == 4
    assert all(v.accepted for v in replay_r2(seq))


def test_corrupted_patch_fails():
    seq = hilbert_region(1).placements
    i = len(seq) // 2
    x, y = tile_coords(PlacedTile(0, seq[i], get_prototile("hilbert")))
    # another orientation of the tile in the same square
    other = next(iso for (rot, ref), _ in orientations()
                 if (iso := _iso_at(rot, ref, x, y)).key() != seq[i].iso.key())
    bad = TilingState(4)
    for j, q in enumerate(seq):
        bad.place(Placement("hilbert", other) if j == i else q, check=False)
    assert not verify_hilbert(bad).ok
    short = TilingState(4)
    for q in seq[:i] + seq[i + 1:]:
        short.place(q, check=False)
    rep = verify_hilbert(short)
    assert not rep.ok and not rep.single_path


def test_colouring_quarter_turn_and_halves():
    seen = set()
    for x in range(-3, 4):
        for y in range(-3, 4):
            for side in range(4):
                c = triangle_colour(x, y, side)
                assert c in (GRAY, WHITE)
                # quarter turn about the origin
                assert triangle_colour(-y - 1, x, (side + 1) % 4) == c
                seen.add(c)
    assert seen == {GRAY, WHITE}


def test_corner_distances():
    assert CELL_UNITS == 12
    seen = set()
    for x in range(4):
        for y in range(4):
            for _, sides in orientations():
                for side, u in sides.items():
                    off = boundary_offset(x, y, side, u)
                    if off is not None:
                        seen.add(corner_distance(off))
    assert seen <= {1, 2, 4, 5}


def test_decoration_table_is_complete():
    table = decoration_table()
    assert len(table) == 24
