import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from seedtiling.exactgeom import CycloNumber, Isometry
from seedtiling.generators import periodic_columns, spiral, triangle_spiral
from seedtiling.hilbert import hilbert_region
from seedtiling.prover import patch_P, seed_three
from seedtiling.tiling import (
    Overlap, Placement, SchemaError, TilingState, decoration_graph, free_boundary, from_json,
    to_json,
)

ZERO = CycloNumber.zero(14)


def _T(rot, reflect=False, t=ZERO):
    return Placement("T", Isometry(rot, reflect, t))


def test_place_and_undo():
    s = TilingState(14)
    s.place(_T(0))
    s.place(_T(3))
    assert len(s) == 2
    assert s.gap_units(ZERO) == 24
    s.undo()
    assert len(s) == 1 and s.gap_units(ZERO) == 26


def test_overlap_is_rejected():
    s = TilingState(14)
    s.place(_T(0))
    with pytest.raises(Overlap):
        s.place(_T(0))
    # rotation by pi/7 about the tip only touches along an edge
    s.place(_T(1))
    assert len(s) == 2


def test_free_boundary_of_P_encloses_the_centre():
    P = patch_P()
    assert P.gap_units(ZERO) == 0
    chains = free_boundary(P)
    assert len(chains) == 1
    ch = chains[0]
    assert ZERO not in ch.vertices
    # covered angles along the outline of a disc sum to (n - 2) pi
    assert sum(ch.interior_angles) == len(ch.vertices) - 2


def test_frontier_of_seed():
    s = seed_three()
    assert ZERO in s.frontier()
    assert s.gap_units(ZERO) == 28 - 6


def _roundtrip(state):
    doc = to_json(state)
    text = json.dumps(doc, sort_keys=True)
    back = from_json(json.loads(text))
    assert [t.placement.key() for t in back.tiles] == [t.placement.key() for t in state.tiles]
    assert json.dumps(to_json(back), sort_keys=True) == text


@settings(max_examples=6)
@given(st.integers(1, 4))
def test_json_roundtrip_spiral(rows):
    _roundtrip(spiral(rows))


def test_json_roundtrip_other_families():
    _roundtrip(periodic_columns(2, 3))
    _roundtrip(triangle_spiral(30))
    _roundtrip(hilbert_region(1))


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("version"),
    lambda d: d.update(version=99),
    lambda d: d.update(family_order="14"),
    lambda d: d["placements"][0].update(proto="X"),
    lambda d: d["placements"][0].update(rot=1.5),
    lambda d: d["placements"][0].update(tx="14:[1]"),
])
def test_schema_errors(mutate):
    doc = to_json(spiral(1))
    mutate(doc)
    with pytest.raises((SchemaError, ValueError)):
        from_json(doc)


def test_decoration_graph_of_single_tile():
    s = TilingState(14)
    s.place(_T(0))
    g = decoration_graph(s)
    assert len(g.nodes) == 2 and len(g.edges) == 1
