"""Classify a small zoo of plane curves and print verdicts with evidence."""

import argparse

from polyclosure.core.textfmt import parse_polynomial
from polyclosure.plane.classify import classify_curve

ZOO = ["X1 - 1/2", "X1 - 1", "X2 + 1", "X1*X2 - 1", "X1 + X2 - 2", "1 + 1/2*X + 1/2*Y + X*Y",
       "X1^2*X2 - 1", "X1*X2 - 2", "X1^2 + X2^2 - 2", "X1 + X2 - 1", "X1 - X2", "X1 + X2 + 3"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=32)
    a = ap.parse_args()
    for text in ZOO:
        c = classify_curve(parse_polynomial(text, 2), samples=a.samples, seed=a.seed)
        extra = ""
        if c.M is not None:
            extra = f" |M|={len(c.M)}"
        print(f"{text:28s} -> {c.tag}{extra}   {c.evidence[-1] if c.evidence else ''}")


if __name__ == "__main__":
    main()
