"""Exploratory three-variable probe of ||f^2/f_r - f|| at several truncations."""

import argparse
import json

from polyclosure.plane.rates import conjecture_probe_n3


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--w", type=float, default=0.5)
    ap.add_argument("--truncations", type=int, nargs="+", default=[12, 18, 24])
    a = ap.parse_args()
    schedule = [1 - 2.0 ** -k for k in range(3, 9)]
    for D in a.truncations:
        res = conjecture_probe_n3(a.w, schedule, truncation=D)
        vals = " ".join(f"{s['value']:.4g}" for s in res["samples"])
        print(f"D={D:3d} slope={res.get('slope', float('nan')):+.3f} verdict={res.get('verdict')} values: {vals}")
    print(json.dumps(res, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
