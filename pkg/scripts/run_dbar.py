"""d-bar identity errors for the Cauchy transform under grid refinement."""

import argparse
import time

from polyclosure.analysis import STANDARD_TEST_FUNCTIONS, dbar_check


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--resolutions", type=int, nargs="+", default=[64, 128, 256])
    a = ap.parse_args()
    for name, v in sorted(STANDARD_TEST_FUNCTIONS.items()):
        prev = None
        for res in a.resolutions:
            t0 = time.time()
            rep = dbar_check(v, res)
            order = "" if prev is None or rep.max_error == 0 else f" observed order {__import__('math').log2(prev / rep.max_error):.2f}"
            print(f"{name:5s} N={res:4d} max error {rep.max_error:.3e} ({time.time() - t0:.1f} s){order}")
            prev = rep.max_error


if __name__ == "__main__":
    main()
