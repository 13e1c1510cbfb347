import json
import re
from pathlib import Path

import pytest

import seedtiling
from seedtiling.cli import main
from seedtiling.exactgeom import CycloNumber, Isometry
from seedtiling.generators import periodic_columns, spiral
from seedtiling.hilbert import hilbert_region
from seedtiling.render import RenderOptions, render_svg
from seedtiling.tiling import Placement, TilingState, to_json


def test_single_tile_has_two_paths():
    s = TilingState(14)
    s.place(Placement("T", Isometry.identity(14)))
    svg = render_svg(s)
    assert svg.count("<path") == 2


def test_overlay_rays():
    svg = render_svg(spiral(5), RenderOptions(sector_overlay=True))
    assert len(re.findall(r'<line class="ray"', svg)) == 14


def test_path_and_stub_strokes_differ():
    opts = RenderOptions(highlight_path=True)
    svg = render_svg(hilbert_region(1), opts)
    path = re.findall(r'class="curve path" stroke="([^"]+)" stroke-width="([^"]+)"', svg)
    stub = re.findall(r'class="curve stub" stroke="([^"]+)" stroke-width="([^"]+)"', svg)
    assert path and stub
    assert set(path).isdisjoint(stub)


def test_svg_is_byte_stable():
    a = render_svg(spiral(3), RenderOptions(sector_overlay=True))
    b = render_svg(spiral(3), RenderOptions(sector_overlay=True))
    assert a == b


def test_empty_state_rejected():
    with pytest.raises(ValueError):
        render_svg(TilingState(14))


def test_only_the_cli_imports_the_renderer():
    pkg = Path(seedtiling.__file__).parent
    for f in pkg.glob("*.py"):
        if f.name in ("render.py", "cli.py"):
            continue
        assert ".render" not in f.read_text(), f.name


def _write(tmp_path, name, state):
    p = tmp_path / name
    p.write_text(json.dumps(to_json(state)))
    return str(p)


def test_cli_verify_exit_codes(tmp_path, capsys):
    good = _write(tmp_path, "spiral.json", spiral(3))
    bad = _write(tmp_path, "columns.json", periodic_columns(3, 4))
    assert main(["verify", good, "--rule", "r1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ok"] and doc["curve"]["connected"]
    assert main(["verify", bad, "--rule", "r1"]) != 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["rule"]["rejected"][0] == {"index": 9, "reason": "not_connected"}


def test_cli_prove(capsys):
    assert main(["prove", "lemma3_b"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "impossible"


def test_cli_generate_and_render(tmp_path):
    out = tmp_path / "h.json"
    assert main(["generate", "hilbert", "--level", "1", "-o", str(out)]) == 0
    assert main(["verify", str(out), "--rule", "r2", "--hilbert", "-o",
                 str(tmp_path / "r.json")]) == 0
    svg = tmp_path / "h.svg"
    assert main(["render", str(out), "--highlight-path", "-o", str(svg)]) == 0
    assert svg.read_text().startswith("<?xml")


def test_cli_seed_file(tmp_path, capsys):
    seed = tmp_path / "seed.json"
    s = TilingState(14)
    for k in (0, 5, 10):
        s.place(Placement("T", Isometry(k, False, CycloNumber.zero(14))))
    seed.write_text(json.dumps(to_json(s)))
    assert main(["generate", "patch-p", "--seed-file", str(seed), "-o",
                 str(tmp_path / "p.json")]) == 0
    assert len(json.loads((tmp_path / "p.json").read_text())["placements"]) == 14
    assert main(["prove", "wedge", "--seed-file", str(tmp_path / "p.json")]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "multiple"
    assert main(["generate", "grow", "-n", "15", "--seed-file", str(tmp_path / "p.json")]) == 1


def test_cli_dump_and_usage(capsys):
    assert main(["dump-prototile", "hilbert"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["id"] == "hilbert" and len(doc["boundary"]) == 4
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code != 0
