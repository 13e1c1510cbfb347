"""Acceptance checks, one test per criterion, at the required tolerances."""
import json
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

import mpmath

from seedtiling.exactgeom import CycloNumber, decode, encode, is_simple, reduce, sign_of_imag, sign_of_real
from seedtiling.generators import periodic_columns, spiral, spiral_sectors, spiral_tile_count, triangle_spiral
from seedtiling.hilbert import cell_visit_order, hilbert_region, verify_hilbert
from seedtiling.prototile import CATALOG, check_arc_endpoint_angles, closure, get_prototile
from seedtiling.prover import CENTRE, fill_to_patch_P, grow_forced, machine_check, patch_P, seed_three
from seedtiling.rules import find_translations, replay_r1, verify_curve
from seedtiling.tiling import decoration_graph, from_json, to_json

from test_hilbert import matches_oracle


def _timed(fn, *a, **kw):
    t0 = time.perf_counter()
    out = fn(*a, **kw)
    return out, time.perf_counter() - t0


def test_four_sevenths_gap_forces_four_tiles_and_smaller_gaps():
    rep, dt = _timed(machine_check, "lemma2")
    assert rep.verdict == "unique" and rep.tiles == 4
    assert dt < 10
    pre = {x["gap"]: x for x in rep.checks["prefixes"]}
    # 3pi/7, 2pi/7 and pi/7 are 6, 4 and 2 units of pi/14
    for gap, tiles in ((6, 3), (4, 2), (2, 1)):
        assert pre[gap]["verdict"] == "unique" and pre[gap]["tiles"] == tiles
        assert pre[gap]["matches"]


def test_forbidden_constellations_are_impossible():
    total = 0.0
    for name in ("lemma3_a", "lemma3_b", "lemma3_c", "lemma3_d"):
        rep, dt = _timed(machine_check, name)
        total += dt
        assert rep.verdict == "impossible", name
        assert not any("budget exhausted" in line for line in rep.log)
        if name == "lemma3_b":
            # the white tip alone closes p and leaves a gap of 4pi/7 that cannot close
            assert any("closed p with 1 tiles: region fails (8)" in line for line in rep.log)
    assert total < 60


def test_edge_continuation_of_P_is_forced():
    rep = machine_check("prop2_edge_e")
    rows = rep.checks["rows"]
    assert rep.verdict == "unique", f"{len(rep.completions)} survivors"
    assert sum("lemma3_a" in r["contains"] for r in rows) >= 2
    assert any("lemma3_d" in r["contains"] for r in rows)


def test_patch_P_and_forced_growth():
    P = fill_to_patch_P(seed_three())
    assert len(P) == 14 and P.gap_units(CENTRE) == 0
    tips = sum(t.angles[t.vertices.index(CENTRE)] for t in P.tiles)
    assert tips == 2
    big, dt = _timed(grow_forced, P, 1000)
    rep = verify_curve(big)
    assert rep.connected and rep.self_avoiding and rep.covers_all_tiles
    assert find_translations(big, max_multiplier=10) == []
    assert dt < 300


def test_spiral_equals_forced_growth_and_census():
    first = {s: len(v) for (s, r), v in spiral_sectors(12).items() if r == 0}
    assert sum(n != 1 for n in first.values()) == 3
    P = patch_P()
    for r in range(1, 13):
        want = spiral(r).placement_set()
        got = grow_forced(P, spiral_tile_count(r)).placement_set()
        assert got == want, r


def test_periodic_columns_negative_control():
    s = periodic_columns(3, 4)
    ts = find_translations(s)
    assert len(ts) >= 2
    a = ts[0].approx
    assert any(abs((a.conjugate() * t.approx).imag) > 1e-9 for t in ts)
    assert len(decoration_graph(s).components()) == 3
    v = replay_r1(s.placements)
    col = len(s) // 3
    assert all(x.accepted for x in v[:col]) and not v[col].accepted


def test_triangle_spiral():
    s = triangle_spiral(500)
    assert len(s) == 500
    assert all(v.accepted for v in replay_r1(s.placements))
    assert check_arc_endpoint_angles(get_prototile("triangle"))["angles"] == [Fraction(1)] * 2
    assert verify_curve(s).ok
    assert find_translations(s) == []


def test_hilbert_regions():
    for level in range(5):
        st = hilbert_region(level)
        rep, dt = _timed(verify_hilbert, st)
        assert rep.ok, (level, rep.failures)
        assert rep.distance_classes <= {1, 2, 4, 5}
        assert matches_oracle(cell_visit_order(st), 1 << (level + 1))
        if level == 4:
            assert dt < 120


def test_kernel_suite():
    rng = random.Random(2024)
    for i in range(10_000):
        n = (4, 14, 24)[i % 3]
        raw = [rng.randint(-5, 5) for _ in range(n)]
        a = reduce(raw, n)
        # zeta^(k+n) = zeta^k, and conjugation sends zeta^k to zeta^-k
        assert reduce([0] * n + raw, n) == a
        assert reduce([raw[-k % n] for k in range(n)], n) == a.conj()
        assert decode(encode(a)) == a
        with mpmath.workdps(40):
            v = sum(mpmath.mpf(c) * mpmath.expjpi(mpmath.mpf(2 * k) / n) for k, c in enumerate(raw))
        if abs(v.real) > 1e-6:
            assert sign_of_real(a) == (1 if v.real > 0 else -1)
        if abs(v.imag) > 1e-6:
            assert sign_of_imag(a) == (1 if v.imag > 0 else -1)
    for pid in CATALOG:
        tile = get_prototile(pid)
        assert closure(tile).is_zero() and is_simple(tile.vertices)


SVG_SCRIPT = (
    "import sys; from seedtiling.generators import spiral; "
    "from seedtiling.render import RenderOptions, render_svg; "
    "sys.stdout.write(render_svg(spiral(4), RenderOptions(sector_overlay=True)))"
)


def test_json_roundtrip_and_svg_stability():
    outputs = [spiral(4), periodic_columns(3, 4), triangle_spiral(120), hilbert_region(2),
               seed_three(), patch_P()]
    for st in outputs:
        doc = to_json(st)
        text = json.dumps(doc, sort_keys=True)
        assert json.dumps(to_json(from_json(json.loads(text))), sort_keys=True) == text
    runs = []
    for seed in ("1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        runs.append(subprocess.run([sys.executable, "-c", SVG_SCRIPT], env=env,
                                   capture_output=True, check=True).stdout)
    assert runs[0] == runs[1] and runs[0]
