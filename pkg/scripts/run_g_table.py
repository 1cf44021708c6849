"""Coefficient-bound sweep for the g_lk series of the two case-D families."""

import argparse
import json
import pathlib

from polyclosure.core.textfmt import parse_polynomial
from polyclosure.plane.gseries import boundary_samples, check_coefficient_bound

FAMILIES = {"XY-1": "X1*X2 - 1", "w=1/2": "1 + 1/2*X + 1/2*Y + X*Y", "XY^2-1": "X1*X2^2 - 1"}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmax", type=int, default=50)
    ap.add_argument("--samples", type=int, default=64)
    ap.add_argument("--out", default="results/g_table.json")
    a = ap.parse_args()
    rows = []
    for name, text in FAMILIES.items():
        f = parse_polynomial(text, 2)
        for fact in (True, False):
            chk = check_coefficient_bound(f, k_max=a.kmax, samples=boundary_samples(a.samples), with_factorial=fact)
            rows.append({"family": name, "with_factorial": fact, "checked": chk.checked,
                         "violations": len(chk.violations), "max_ratio": chk.max_ratio})
            print(f"{name:8s} factorial={fact!s:5s} checked={chk.checked:5d} "
                  f"violations={len(chk.violations):4d} max_ratio={chk.max_ratio:.4f}")
    path = pathlib.Path(a.out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(rows, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
