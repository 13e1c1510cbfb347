import pytest

from seedtiling.exactgeom import CycloNumber, Isometry
from seedtiling.generators import periodic_columns, spiral
from seedtiling.hilbert import hilbert_region, quadruple
from seedtiling.rules import (
    REASONS, RuleVerdict, find_translations, replay_r1, replay_r2, validate_r1, validate_r2,
    verify_curve,
)
from seedtiling.tiling import Placement, TilingState, decoration_graph

ZERO = CycloNumber.zero(14)


def _T(rot, reflect=False):
    return Placement("T", Isometry(rot, reflect, ZERO))


def test_verdict_invariants():
    assert set(REASONS) >= {"ok", "not_connected", "creates_branch", "closes_loop", "overlap"}
    with pytest.raises(ValueError):
        RuleVerdict(True, "overlap")
    with pytest.raises(ValueError):
        RuleVerdict(False, "bogus")


def test_r1_on_the_spiral():
    s = spiral(3)
    assert all(v.accepted for v in replay_r1(s.placements))
    rep = verify_curve(s)
    assert rep.ok and rep.component_count == 1 and len(rep.endpoints) == 2


def test_r1_rejections():
    s = TilingState(14)
    s.place(_T(0))
    assert validate_r1(s, _T(0)).reason == "overlap"
    assert validate_r1(s, _T(2)).reason == "not_connected"
    # neighbouring tips join arc to arc, so the fourteenth tip closes a loop
    v = replay_r1([_T(k) for k in range(14)])
    assert all(x.accepted for x in v[:13])
    assert v[13].reason == "closes_loop"


def test_r1_replay_matches_single_validation():
    placements = spiral(2).placements
    verdicts = replay_r1(placements)
    s = TilingState(14)
    for p, v in zip(placements, verdicts):
        assert validate_r1(s, p) == v
        s.place(p)


def test_columns_violate_r1_at_the_second_column():
    s = periodic_columns(3, 4)
    col = 2 * 4 + 1
    v = replay_r1(s.placements)
    assert all(x.accepted for x in v[:col])
    assert not v[col].accepted and v[col].reason == "not_connected"
    assert len(decoration_graph(s).components()) == 3


def test_column_translations_span_a_lattice():
    ts = find_translations(periodic_columns(3, 4))
    assert len(ts) >= 2
    a = ts[0].approx
    assert any(abs((a.conjugate() * t.approx).imag) > 1e-6 for t in ts[1:])


def test_spiral_has_no_translation():
    assert find_translations(spiral(3)) == []


def test_r2_accepts_hilbert_regions():
    for level in (0, 1, 2):
        s = hilbert_region(level)
        assert all(v.accepted for v in replay_r2(s.placements)), level
    assert all(v.accepted for v in replay_r2(quadruple("interior")))


def test_r2_needs_a_shared_connector():
    seq = quadruple("interior")
    s = TilingState(4)
    s.place(seq[0])
    far = Placement("hilbert", Isometry(0, False, CycloNumber(4, (30, 30))))
    assert validate_r2(s, far).reason == "not_connected"
    assert validate_r2(s, seq[0]).reason == "overlap"
