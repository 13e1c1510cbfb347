"""Run every local forcing statement and print one line per statement."""
import argparse
import json

from seedtiling.prover import EXPECTED, STATEMENTS, machine_check


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--json", help="write the full reports here")
    ap.add_argument("--region", type=float)
    args = ap.parse_args()
    reports = {}
    for name in STATEMENTS:
        rep = machine_check(name, region=args.region)
        want, tiles = EXPECTED[name]
        agree = rep.checks.get("routes_agree")
        mark = "ok " if rep.verdict == want and (tiles is None or rep.tiles == tiles) else "BAD"
        print(f"{mark} {name:14s} {rep.verdict:17s} tiles={rep.tiles} "
              f"nodes={rep.nodes_explored:6d} routes_agree={agree} {rep.seconds:6.2f}s")
        reports[name] = rep.to_dict()
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(reports, fh, indent=1)


if __name__ == "__main__":
    main()
