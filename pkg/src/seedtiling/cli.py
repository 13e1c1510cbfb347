"""Command line front end.  Exit status 0 means every requested check held."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import generators, hilbert, prover, rules
from .prototile import CATALOG, get_prototile, prototile_doc
from .render import RenderOptions, render_svg
from .tiling import TilingState, from_json, to_json

GENERATORS = ("spiral", "columns", "triangle", "hilbert", "patch-p", "grow")


def _load(path) -> TilingState:
    with open(path) as fh:
        return from_json(json.load(fh))


def _emit(doc, out=None):
    text = json.dumps(doc, indent=1, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _seed(args) -> TilingState | None:
    return _load(args.seed_file) if args.seed_file else None


def cmd_generate(args) -> int:
    seed = _seed(args)
    if args.kind == "spiral":
        state = generators.spiral(args.rows)
    elif args.kind == "columns":
        state = generators.periodic_columns(args.cols, args.rows)
    elif args.kind == "triangle":
        state = generators.triangle_spiral(args.n)
    elif args.kind == "hilbert":
        state = hilbert.hilbert_region(args.level)
    elif args.kind == "patch-p":
        state = prover.fill_to_patch_P(seed) if seed else prover.patch_P()
    else:
        start = seed if seed is not None else prover.patch_P()
        try:
            state = prover.grow_forced(start, args.n)
        except prover.AmbiguousStep as exc:
            print(f"growth stopped: {exc}", file=sys.stderr)
            return 1
    if seed is not None and args.kind not in ("patch-p", "grow"):
        base = TilingState(seed.order)
        for t in seed.tiles + state.tiles:
            base.place(t.placement)
        state = base
    _emit(to_json(state), args.output)
    return 0


def _split(state: TilingState, seed: TilingState | None):
    """Placements of the file, with the seed tiles in front."""
    seq = [t.placement for t in state.tiles]
    if seed is None:
        return seq, 0
    return [t.placement for t in seed.tiles] + seq, len(seed)


def cmd_verify(args) -> int:
    state = _load(args.file)
    seed = _seed(args)
    seq, skip = _split(state, seed)
    doc, ok = {}, True
    if args.rule:
        replay = rules.replay_r1 if args.rule == "r1" else rules.replay_r2
        verdicts = replay(seq)[skip:]
        bad = [(i, v.reason) for i, v in enumerate(verdicts) if not v.accepted]
        doc["rule"] = {"rule": args.rule, "placements": len(verdicts),
                       "rejected": [{"index": i, "reason": r} for i, r in bad]}
        ok &= not bad
    full = TilingState(state.order)
    for p in seq:
        full.place(p, check=False)
    if args.hilbert:
        rep = hilbert.verify_hilbert(full)
        doc["hilbert"] = rep.to_dict()
        ok &= rep.ok
    elif args.rule or args.curve:
        rep = rules.verify_curve(full)
        doc["curve"] = rep.to_dict()
        ok &= rep.ok
    if args.translations:
        ts = rules.find_translations(full, max_multiplier=args.max_multiplier)
        doc["translations"] = [rules._pt(t) for t in ts]
        ok &= not ts
    doc["ok"] = bool(ok)
    _emit(doc, args.output)
    return 0 if ok else 1


def cmd_prove(args) -> int:
    if args.statement == "wedge":
        seed = _seed(args)
        if seed is None:
            print("prove wedge needs --seed-file", file=sys.stderr)
            return 2
        p = prover.next_point(seed)
        task = prover.WedgeTask(seed, p, prover.AngleUnit(seed.gap_units(p), seed.order),
                                region=args.region or 1.5, budget=args.budget)
        rep = prover.enumerate_fillings(task)
        _emit(rep.to_dict(), args.output)
        return 0 if rep.verdict != "budget_exhausted" else 1
    rep = prover.machine_check(args.statement, region=args.region, budget=args.budget)
    want, tiles = prover.EXPECTED[args.statement]
    doc = rep.to_dict()
    doc["expected"] = want
    _emit(doc, args.output)
    ok = rep.verdict == want and (tiles is None or rep.tiles == tiles)
    return 0 if ok and rep.checks.get("routes_agree", False) else 1


def cmd_render(args) -> int:
    if args.file:
        state = _load(args.file)
    elif args.seed_file:
        state = _load(args.seed_file)
    else:
        print("render needs a patch file or --seed-file", file=sys.stderr)
        return 2
    opts = RenderOptions(sector_overlay=args.overlay, highlight_path=args.highlight_path,
                         scale=args.scale)
    svg = render_svg(state, opts)
    if args.output:
        Path(args.output).write_text(svg)
    else:
        sys.stdout.write(svg)
    return 0


def cmd_dump(args) -> int:
    _emit(prototile_doc(get_prototile(args.id)), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="seedtiling")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed-file", help="JSON patch to start from")
        p.add_argument("-o", "--output")

    g = sub.add_parser("generate", help="build a patch and write it as JSON")
    g.add_argument("kind", choices=GENERATORS)
    g.add_argument("--rows", type=int, default=4)
    g.add_argument("--cols", type=int, default=3)
    g.add_argument("-n", type=int, default=100)
    g.add_argument("--level", type=int, default=1)
    common(g)
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="check rules and global properties of a patch")
    v.add_argument("file")
    v.add_argument("--rule", choices=("r1", "r2"))
    v.add_argument("--hilbert", action="store_true")
    v.add_argument("--curve", action="store_true")
    v.add_argument("--translations", action="store_true")
    v.add_argument("--max-multiplier", type=int, default=1)
    common(v)
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("prove", help="run a local forcing statement")
    p.add_argument("statement", choices=prover.STATEMENTS + ("wedge",))
    p.add_argument("--region", type=float)
    p.add_argument("--budget", type=int, default=200_000)
    common(p)
    p.set_defaults(func=cmd_prove)

    r = sub.add_parser("render", help="draw a patch as SVG")
    r.add_argument("file", nargs="?")
    r.add_argument("--overlay", action="store_true", help="draw the 14 sector rays")
    r.add_argument("--highlight-path", action="store_true")
    r.add_argument("--scale", type=float, default=40.0)
    common(r)
    r.set_defaults(func=cmd_render)

    d = sub.add_parser("dump-prototile", help="exact boundary and decoration of a tile")
    d.add_argument("id", choices=sorted(CATALOG))
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_dump)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
