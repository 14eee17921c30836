"""Decide which coefficient rules give orthogonal families, and name the family.

With d_n = c_n / c_{n-1}, orthogonality forces n d_n = a + b (n - 1) for
n >= 2, and then

    omega_n = alpha n ((n-1) b + 2a) / (((n-1) b + a)(n b + a)).

The accepted cases are b = 0, a > 0 (Hermite), a = 0, b > 0 (Chebyshev T)
and b > 0, lambda = a/b > -1/2 (ultraspherical).  Verdicts omit c, which
never changes the polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .exact import RationalLike, format_rational, parse_rational
from .favard import Recursion
from .genfun import CoeffRule, ZeroCoefficient, as_abc, coeffs_from_rule

HALF = Fraction(1, 2)

ZERO_COEFFICIENT = "zero_coefficient"
NONLINEAR_DN = "nonlinear_dn"
NONPOSITIVE_OMEGA = "nonpositive_omega"
NONZERO_BETA = "nonzero_beta"
ALPHA_NONPOSITIVE = "alpha_nonpositive"
LAMBDA_OUT_OF_RANGE = "lambda_out_of_range"
REASONS = (
    ZERO_COEFFICIENT,
    NONLINEAR_DN,
    NONPOSITIVE_OMEGA,
    NONZERO_BETA,
    ALPHA_NONPOSITIVE,
    LAMBDA_OUT_OF_RANGE,
)


class NonlinearDn(ArithmeticError):
    def __init__(self, n: int):
        super().__init__(f"n d_n is not linear in n at n={n}")
        self.n = n


class DegenerateParameters(ZeroDivisionError):
    def __init__(self, a, b, n):
        super().__init__(f"omega_{n} undefined for a={a}, b={b}")
        self.n = n


@dataclass(frozen=True)
class Hermite:
    a: Fraction
    scale_sq: Fraction
    family = "hermite"

    def to_json(self) -> dict:
        return {"family": self.family, "a": format_rational(self.a), "scale_sq": format_rational(self.scale_sq)}


@dataclass(frozen=True)
class Ultraspherical:
    lam: Fraction
    b: Fraction
    scale_sq: Fraction
    family = "ultraspherical"

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "lambda": format_rational(self.lam),
            "b": format_rational(self.b),
            "scale_sq": format_rational(self.scale_sq),
        }


@dataclass(frozen=True)
class ChebyshevT:
    b: Fraction
    scale_sq: Fraction
    family = "chebyshev_t"

    def to_json(self) -> dict:
        return {"family": self.family, "b": format_rational(self.b), "scale_sq": format_rational(self.scale_sq)}


@dataclass(frozen=True)
class Rejected:
    """``index`` is the offending n when there is one; ``value`` the offending
    omega_n for sign failures (None when omega_n is undefined)."""

    reason: str
    index: Optional[int] = None
    value: Optional[Fraction] = None
    family = "rejected"

    def __post_init__(self):
        if self.reason not in REASONS:
            raise ValueError(f"unknown rejection reason {self.reason!r}")

    def to_json(self) -> dict:
        out = {"family": self.family, "reason": self.reason}
        if self.index is not None:
            out["index"] = self.index
        if self.value is not None:
            out["value"] = format_rational(self.value)
        return out


Verdict = Union[Hermite, Ultraspherical, ChebyshevT, Rejected]


def is_accepted(v: Verdict) -> bool:
    return not isinstance(v, Rejected)


def verdict_from_json(data: dict) -> Verdict:
    fam = data["family"]
    q = parse_rational
    if fam == "hermite":
        return Hermite(q(data["a"]), q(data["scale_sq"]))
    if fam == "ultraspherical":
        return Ultraspherical(q(data["lambda"]), q(data["b"]), q(data["scale_sq"]))
    if fam == "chebyshev_t":
        return ChebyshevT(q(data["b"]), q(data["scale_sq"]))
    if fam == "rejected":
        value = data.get("value")
        return Rejected(data["reason"], data.get("index"), q(value) if value is not None else None)
    raise ValueError(f"unknown verdict family {fam!r}")


def fit_linear_dn(c: Sequence[RationalLike]) -> tuple[Fraction, Fraction]:
    """Solve n d_n = a + b (n - 1) from n = 2, 3 and check it for every n >= 4."""
    c = [parse_rational(v) for v in c]
    if len(c) < 5:
        raise ValueError("need c_0 .. c_4 at least")
    for n in range(1, len(c)):
        if c[n] == 0:
            raise ZeroCoefficient(n)
    nd = {n: n * c[n] / c[n - 1] for n in range(2, len(c))}
    b = nd[3] - nd[2]
    a = nd[2] - b
    for n in range(4, len(c)):
        if nd[n] != a + b * (n - 1):
            raise NonlinearDn(n)
    return a, b


def omega_formula(a: RationalLike, b: RationalLike, alpha: RationalLike, n: int) -> Fraction:
    a, b, alpha = parse_rational(a), parse_rational(b), parse_rational(alpha)
    if n < 1:
        raise ValueError("omega is indexed from 1")
    if n == 1:
        # the factor a cancels: omega_1 = alpha / d_2 = 2 alpha / (a + b)
        if a + b == 0:
            raise DegenerateParameters(a, b, n)
        return 2 * alpha / (a + b)
    den = ((n - 1) * b + a) * (n * b + a)
    if den == 0:
        raise DegenerateParameters(a, b, n)
    return alpha * n * ((n - 1) * b + 2 * a) / den


def _first_bad_omega(a, b, alpha, N) -> tuple[Optional[int], Optional[Fraction]]:
    for n in range(1, N):
        try:
            w = omega_formula(a, b, alpha, n)
        except DegenerateParameters:
            return n, None
        if w <= 0:
            return n, w
    return None, None


def _verdict_for_parameters(a: Fraction, b: Fraction, alpha: Fraction, N: int) -> Verdict:
    if b == 0:
        if a <= 0:
            n, w = _first_bad_omega(a, b, alpha, N)
            return Rejected(NONPOSITIVE_OMEGA, n, w)
        verdict: Verdict = Hermite(a, a / (2 * alpha))
    elif a == 0:
        if b < 0:
            n, w = _first_bad_omega(a, b, alpha, N)
            return Rejected(NONPOSITIVE_OMEGA, n, w)
        verdict = ChebyshevT(b, b / (4 * alpha))
    else:
        lam = a / b
        if b < 0 or lam <= -HALF:
            # b < 0 can keep omega_n positive far past any finite horizon,
            # so the parameter test decides; index/value are informational.
            n, w = _first_bad_omega(a, b, alpha, N)
            return Rejected(LAMBDA_OUT_OF_RANGE, n, w)
        verdict = Ultraspherical(lam, b, b / (4 * alpha))
    n, w = _first_bad_omega(a, b, alpha, N)
    if n is not None:
        # unreachable for admissible parameters; reported rather than mapped
        return Rejected(NONPOSITIVE_OMEGA, n, w)
    return verdict


def classify(rule: CoeffRule, alpha: RationalLike, N: int = 12) -> Verdict:
    """Verdict for the family generated by ``rule`` and ``alpha``, certified to order N.

    Parametric rules are judged on their (a, b) first; explicit rules must
    first survive the zero and linearity checks on c_0 .. c_N.
    """
    if N < 5:
        raise ValueError("classification needs N >= 5")
    alpha = parse_rational(alpha)
    if alpha <= 0:
        return Rejected(ALPHA_NONPOSITIVE)
    abc = as_abc(rule)
    if abc is not None:
        verdict = _verdict_for_parameters(abc.a, abc.b, alpha, N)
        if isinstance(verdict, Rejected):
            return verdict
    c = coeffs_from_rule(rule, N)
    try:
        a, b = fit_linear_dn(c)
    except ZeroCoefficient as e:
        return Rejected(ZERO_COEFFICIENT, e.n)
    except NonlinearDn as e:
        return Rejected(NONLINEAR_DN, e.n)
    if abc is not None and (a, b) != (abc.a, abc.b):
        raise AssertionError(f"rule {rule} reproduced as a={a}, b={b}")
    return _verdict_for_parameters(a, b, alpha, N)


def identify_from_recursion(rec: Recursion, alpha: RationalLike) -> Verdict:
    """Name the family from its recursion coefficients.

    The ratio rho = omega_2 / omega_1 = (1 + 2 lambda) / (2 + lambda) is
    scale free; rho = 2 is the Hermite limit and rho = 1/2 is lambda = 0.
    """
    alpha = parse_rational(alpha)
    if len(rec.omegas) < 3 or len(rec.betas) < 3:
        raise ValueError("identification needs omega_1 .. omega_3")
    if alpha <= 0:
        return Rejected(ALPHA_NONPOSITIVE)
    for n, beta in enumerate(rec.betas):
        if beta != 0:
            return Rejected(NONZERO_BETA, n)
    for n, w in enumerate(rec.omegas, start=1):
        if w <= 0:
            return Rejected(NONPOSITIVE_OMEGA, n, w)
    w1, w2 = rec.omega(1), rec.omega(2)
    rho = w2 / w1
    if rho == 2:
        a, b = 2 * alpha / w1, Fraction(0)
        verdict: Verdict = Hermite(a, a / (2 * alpha))
    elif rho == HALF:
        a, b = Fraction(0), alpha / w2
        verdict = ChebyshevT(b, b / (4 * alpha))
    elif rho > 2:
        return Rejected(LAMBDA_OUT_OF_RANGE, 2, w2)
    else:
        lam = (2 * rho - 1) / (2 - rho)
        b = 2 * alpha / ((1 + lam) * w1)
        a = lam * b
        verdict = Ultraspherical(lam, b, b / (4 * alpha))
    for n, w in enumerate(rec.omegas, start=1):
        if w != omega_formula(a, b, alpha, n):
            return Rejected(NONLINEAR_DN, n)
    return verdict
