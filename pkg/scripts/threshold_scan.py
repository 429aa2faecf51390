"""Scan the contact threshold of the family (A s + K e^s) d phi + d theta on
s in [-L, 0] against the closed form K0 = max(0, -A e^L), and show how the
grid size affects the result."""

import argparse
import math

import sympy as sp

from spinalbook.forms import Chart, ChartForm, thurston_threshold


def closed_form(A: float, L: float) -> float:
    # A + K e^s > 0 on [-L, 0] iff K > -A e^L (for A < 0)
    return max(0.0, -A * math.exp(L))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--A", type=float, nargs="+", default=[-0.5, -1.0, -2.0, -3.0, 1.0])
    ap.add_argument("--L", type=float, nargs="+", default=[0.5, 1.0, 1.5])
    ap.add_argument("--grid", type=int, nargs="+", default=[5, 9, 17])
    ap.add_argument("--K-max", type=float, default=100.0)
    args = ap.parse_args()
    s = sp.Symbol("s", real=True)
    print(f"{'A':>6} {'L':>5} {'grid':>5} {'K0':>10} {'closed':>10} {'error':>9} {'evals':>6}")
    for A in args.A:
        for L in args.L:
            for n in args.grid:
                chart = Chart.build({"s": (-L, 0.0), "phi": (0, 2 * math.pi, True),
                                     "theta": (0, 2 * math.pi, True)}, n)
                th = thurston_threshold(lambda K: ChartForm(1, {(1,): A * s + K * sp.exp(s), (2,): 1}),
                                        chart, args.K_max)
                want = closed_form(A, L)
                got = math.nan if th.unbounded else th.value
                print(f"{A:6.2f} {L:5.2f} {n:5d} {got:10.5f} {want:10.5f} {got - want:9.1e} {th.evaluations:6d}")


if __name__ == "__main__":
    main()
