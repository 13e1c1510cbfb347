"""Write JSON patches and SVG drawings of the main constructions."""
import argparse
import json
from pathlib import Path

from seedtiling.generators import periodic_columns, spiral, triangle_spiral
from seedtiling.hilbert import hilbert_region
from seedtiling.prover import patch_P
from seedtiling.render import RenderOptions, render_svg
from seedtiling.tiling import to_json


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir", nargs="?", default="figures")
    ap.add_argument("--rows", type=int, default=6)
    ap.add_argument("--level", type=int, default=2)
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    jobs = {
        "spiral": (spiral(args.rows), RenderOptions(sector_overlay=True)),
        "columns": (periodic_columns(3, 4), RenderOptions()),
        "triangle": (triangle_spiral(300), RenderOptions(scale=120)),
        "hilbert": (hilbert_region(args.level), RenderOptions(highlight_path=True, scale=8)),
        "patch_P": (patch_P(), RenderOptions(scale=120)),
    }
    for name, (state, opts) in jobs.items():
        (out / f"{name}.json").write_text(json.dumps(to_json(state), indent=1) + "\n")
        (out / f"{name}.svg").write_text(render_svg(state, opts))
        print(f"{name}: {len(state)} tiles")


if __name__ == "__main__":
    main()
