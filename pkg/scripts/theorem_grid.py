"""Sweep (a, b, alpha) over a rational grid and tabulate the classification.

For each accepted point the expansion is fitted and its omega_n compared
with the closed form; rejected points report the reason.  Output is CSV on
stdout, one row per grid point, in grid order regardless of --workers.

    python scripts/theorem_grid.py --order 10 --workers 4
"""
import argparse
import csv
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product

from orthogf.classify import Rejected, classify, identify_from_recursion, omega_formula
from orthogf.exact import format_rational
from orthogf.favard import fit
from orthogf.genfun import AbcRule, GFSpec, expand

VALUES = [Fraction(n, d) for n in range(-3, 4) for d in (1, 2, 4) if n % d or d == 1]


def run_point(args):
    a, b, alpha, order = args
    rule = AbcRule(a, b, 1)
    verdict = classify(rule, alpha, order)
    row = [format_rational(a), format_rational(b), format_rational(alpha), verdict.family]
    if isinstance(verdict, Rejected):
        return row + [verdict.reason, "", ""]
    rec = fit(expand(GFSpec(rule, alpha, order)))
    closed = all(rec.omega(n) == omega_formula(a, b, alpha, n) for n in range(1, order))
    same = identify_from_recursion(rec, alpha) == verdict
    return row + ["", str(closed), str(same)]


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--workers", type=int, default=1)
    args = p.parse_args()

    points = [
        (a, b, alpha, args.order)
        for a, b in product(sorted(set(VALUES)), repeat=2)
        if (a, b) != (0, 0)
        for alpha in (Fraction(1, 2), Fraction(1))
    ]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            rows = list(pool.map(run_point, points, chunksize=16))
    else:
        rows = [run_point(pt) for pt in points]

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["a", "b", "alpha", "family", "reason", "omega_closed_form", "identify_agrees"])
    w.writerows(rows)
    accepted = [r for r in rows if r[3] != "rejected"]
    bad = [r for r in accepted if r[5] != "True" or r[6] != "True"]
    print(f"# {len(rows)} points, {len(accepted)} accepted, {len(bad)} inconsistent", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
