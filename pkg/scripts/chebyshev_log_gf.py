"""Show that F(z) = 1 + ln(1/(1 - 2z)) with alpha = 1/2 generates monic Chebyshev T.

Prints both families side by side, the fitted recursion, and the exact
Gram diagonal under the arcsine moments.
"""
from fractions import Fraction

from orthogf.exact import format_rational
from orthogf.families import CHEBYSHEV_T, moment_oracle, polys_from_recursion, recursion_of
from orthogf.favard import fit
from orthogf.genfun import GFSpec, NamedRule, expand
from orthogf.orthocheck import verify_orthogonality

N = 8


def main():
    from_gf = expand(GFSpec(NamedRule("log", 2), Fraction(1, 2), N + 1))
    reference = polys_from_recursion(recursion_of(CHEBYSHEV_T, N + 1), N + 1)
    for n in range(N + 1):
        mark = "==" if from_gf[n] == reference[n] else "!="
        print(f"P_{n}: {from_gf[n]}  {mark}  {reference[n]}")

    rec = fit(from_gf)
    print("omega:", ", ".join(format_rational(w) for w in rec.omegas))
    print("arcsine moments:", ", ".join(format_rational(moment_oracle(CHEBYSHEV_T, k)) for k in range(2 * N + 1)))
    report = verify_orthogonality(from_gf.truncate(N), rec)
    print("orthogonal:", report.passed, "norms:", ", ".join(format_rational(d) for d in report.diagonal))


if __name__ == "__main__":
    main()
