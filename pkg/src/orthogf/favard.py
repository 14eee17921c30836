"""Three-term recursion fitting for monic families.

    x P_n = P_{n+1} + beta_n P_n + omega_n P_{n-1},    P_{-1} = 0.

``omegas[0]`` holds omega_1; omega_0 does not exist.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .exact import PolyX, RationalLike, format_rational, parse_rational
from .genfun import MonicFamily


class NotThreeTerm(ArithmeticError):
    """x P_n - P_{n+1} is not a combination of P_n and P_{n-1} alone."""

    def __init__(self, n: int, residual: PolyX):
        super().__init__(f"no three-term relation at n={n}; residual {residual}")
        self.n = n
        self.residual = residual


@dataclass(frozen=True)
class Recursion:
    betas: tuple[Fraction, ...]
    omegas: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "betas", tuple(parse_rational(v) for v in self.betas))
        object.__setattr__(self, "omegas", tuple(parse_rational(v) for v in self.omegas))

    def beta(self, n: int) -> Fraction:
        return self.betas[n]

    def omega(self, n: int) -> Fraction:
        if n < 1:
            raise IndexError("omega is indexed from 1")
        return self.omegas[n - 1]

    def scaled(self, r: RationalLike) -> "Recursion":
        """Coefficients of the family r^n P_n(x/r): beta -> r beta, omega -> r^2 omega."""
        r = parse_rational(r)
        return Recursion(tuple(r * b for b in self.betas), tuple(r * r * w for w in self.omegas))

    def to_json(self) -> dict:
        return {
            "betas": [format_rational(b) for b in self.betas],
            "omegas": [format_rational(w) for w in self.omegas],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Recursion":
        return cls(tuple(data["betas"]), tuple(data["omegas"]))


class Positivity(NamedTuple):
    ok: bool
    first_failure: Optional[int] = None


def fit(family: MonicFamily) -> Recursion:
    """Read beta_n, omega_n off the top of x P_n - P_{n+1} and check the rest vanishes.

    For a family P_0 .. P_N this yields beta_0 .. beta_{N-1} and
    omega_1 .. omega_{N-1}.
    """
    if len(family) < 3:
        raise ValueError("need at least P_0, P_1, P_2 to fit a recursion")
    betas, omegas = [], []
    for n in range(family.order):
        r = family[n].mul_x() - family[n + 1]
        beta = r.coeff(n)
        r = r - family[n] * beta
        betas.append(beta)
        if n >= 1:
            omega = r.coeff(n - 1)
            r = r - family[n - 1] * omega
            omegas.append(omega)
        if not r.is_zero():
            raise NotThreeTerm(n, r)
    return Recursion(tuple(betas), tuple(omegas))


def check_positive(rec: Recursion) -> Positivity:
    for n, w in enumerate(rec.omegas, start=1):
        if w <= 0:
            return Positivity(False, n)
    return Positivity(True)


def rescale(family: MonicFamily, r: RationalLike) -> MonicFamily:
    """Q_n(x) = r^n P_n(x / r)."""
    r = parse_rational(r)
    if r == 0:
        raise ValueError("rescale factor must be nonzero")
    out = []
    for n, p in enumerate(family.polys):
        out.append(PolyX(tuple(ck * r ** (n - k) for k, ck in enumerate(p.coeffs))))
    return MonicFamily(tuple(out))
