import pytest

from seedtiling.exactgeom import AngleUnit, CycloNumber, Isometry
from seedtiling.prototile import get_prototile
from seedtiling.prover import (
    CENTRE, EXPECTED, FIXTURES, STATEMENTS, AmbiguousStep, WedgeTask, candidate_tiles,
    enumerate_fillings, fill_to_patch_P, find_constellation, grow_forced, machine_check,
    next_point, patch_P, seed_three, state_symmetries,
)
from seedtiling.tiling import Placement, TilingState


def _brute_vertex_candidates(state, p):
    """Every placement with a vertex at p that fits and starts its wedge
    where the first free arc at p starts."""
    T = get_prototile("T")
    s, size = state.free_arcs_at(p)[0]
    full = 2 * T.order
    out = set()
    for rot in range(T.order):
        for ref in (False, True):
            lin = Isometry(rot, ref, CycloNumber.zero(T.order))
            for v in T.vertices:
                pl = Placement("T", Isometry(rot, ref, p - lin.apply(v)))
                tile = state.make_tile(pl)
                if state.conflicts(tile):
                    continue
                i = tile.vertices.index(p)
                a = tile.angle_units[i]
                # the wedge leaves its start direction along edge i
                if tile.edge_dirs[i] % full != s % full or a > size:
                    continue
                out.add(frozenset(tile.vertices))
    return out


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_candidates_cover_brute_force(name):
    state, p = FIXTURES[name].build()
    got = {frozenset(t.vertices) for t in candidate_tiles(state, p)}
    vert = {k for k in got if p in k}
    assert vert == _brute_vertex_candidates(state, p)


def test_wedge_task_checks_gap():
    state, p = FIXTURES["lemma2"].build()
    with pytest.raises(ValueError):
        WedgeTask(state, p, AngleUnit(6, 14))
    WedgeTask(state, p, AngleUnit(8, 14))


def test_fixture_gaps():
    gaps = {}
    for name, fx in FIXTURES.items():
        state, p = fx.build()
        gaps[name] = state.gap_units(p)
        assert len(state) == 2
        assert find_constellation(state, fx) == [p]
    assert gaps == {"lemma2": 8, "lemma3_a": 8, "lemma3_b": 10, "lemma3_c": 16, "lemma3_d": 8}


def test_convex_pair_gap_is_forced_with_prefixes():
    rep = machine_check("lemma2")
    assert rep.verdict == "unique" and rep.tiles == 4
    pre = rep.checks["prefixes"]
    assert [(x["gap"], x["tiles"]) for x in pre] == [(6, 3), (4, 2), (2, 1)]
    assert rep.checks["routes_agree"]


@pytest.mark.parametrize("name", ["lemma3_a", "lemma3_b", "lemma3_d"])
def test_small_forbidden_constellations(name):
    rep = machine_check(name)
    assert rep.verdict == "impossible"
    assert rep.checks["reduction_verdict"] == "impossible"


def test_case_b_reduces_to_a():
    rep = machine_check("lemma3_b")
    assert all(r["contains"] == ["lemma3_a"] for r in rep.checks["rows"])
    assert rep.checks["fillings"] == 2


def test_budget_cut_is_not_a_proof():
    rep = machine_check("lemma3_c", budget=20)
    assert rep.verdict == "budget_exhausted"
    assert rep.verdict != EXPECTED["lemma3_c"][0]


def test_unknown_statement():
    with pytest.raises(ValueError):
        machine_check("no_such_statement")
    assert "prop2_edge_e" in STATEMENTS


def test_seed_and_patch_P():
    s = seed_three()
    assert len(s) == 3 and s.gap_units(CENTRE) == 22
    P = fill_to_patch_P(s)
    assert len(P) == 14 and P.gap_units(CENTRE) == 0
    assert len(s) == 3
    tips = sum(t.angle_units[t.vertices.index(CENTRE)] for t in P.tiles)
    assert tips == 28
    with pytest.raises(ValueError):
        fill_to_patch_P(TilingState(14))


def test_fill_rejects_non_tips():
    s = TilingState(14)
    s.place(Placement("T", Isometry(0, True, CENTRE)))
    with pytest.raises(ValueError):
        fill_to_patch_P(s)


def test_patch_P_symmetry():
    # the rotations about the centre, and no reflection (the tips are chiral)
    syms = state_symmetries(patch_P())
    assert len(syms) == 14 and not any(g.reflect for g in syms)


def test_grow_forced_identity_and_stop():
    P = patch_P()
    assert [t.placement.key() for t in grow_forced(P, 14).tiles] == \
        [t.placement.key() for t in P.tiles]
    with pytest.raises(AmbiguousStep) as exc:
        grow_forced(P, 15)
    assert exc.value.count == 2
    assert exc.value.point == next_point(P)


def test_enumerate_plain_multiple():
    state, p = FIXTURES["lemma2"].build()
    rep = enumerate_fillings(WedgeTask(state, p, AngleUnit(8, 14)))
    # without looking past p several closures exist
    assert rep.verdict == "multiple"
    d = rep.to_dict()
    assert d["verdict"] == "multiple" and d["tiles"] is None
