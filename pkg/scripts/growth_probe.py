"""Grow from the central patch P by forced steps and report where and why
growth stops."""
import argparse

from seedtiling.prover import (
    AngleUnit, WedgeTask, enumerate_fillings, next_point, patch_P,
)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--region", type=float, nargs="+", default=[1.0, 1.5])
    args = ap.parse_args()
    P = patch_P()
    p = next_point(P)
    print(f"patch P: {len(P)} tiles, first open point {p.approx:.4f}, gap {P.gap_units(p)} units")
    for r in args.region:
        rep = enumerate_fillings(WedgeTask(P, p, AngleUnit(P.gap_units(p), P.order), region=r))
        print(f"region {r}: {rep.verdict}, {len(rep.completions)} surviving fillings, "
              f"{len(rep.rejected)} rejected, {rep.nodes_explored} nodes")
        for i, c in enumerate(rep.completions):
            desc = ", ".join(f"rot {q.iso.rot}{' refl' if q.iso.reflect else ''}" for q in c)
            print(f"  survivor {i}: {desc}")


if __name__ == "__main__":
    main()
