"""Reference monic families, their recursions, and moment oracles.

Normalisations: Hermite against the standard Gaussian, Charlier against
Poisson(1), the ultraspherical family against the symmetric beta weight
(1 - x^2)^(lambda - 1/2) on [-1, 1], normalised to a probability measure.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import PolyX, RationalLike, format_rational, parse_rational
from .favard import Recursion
from .genfun import MonicFamily

FAMILY_NAMES = ("hermite", "charlier", "legendre", "ultraspherical", "chebyshev_t", "chebyshev_u")


@dataclass(frozen=True)
class FamilyId:
    name: str
    lam: Optional[Fraction] = None

    def __post_init__(self):
        if self.name not in FAMILY_NAMES:
            raise ValueError(f"unknown family {self.name!r}; expected one of {FAMILY_NAMES}")
        if self.name == "ultraspherical":
            if self.lam is None:
                raise ValueError("ultraspherical family needs lambda")
            lam = parse_rational(self.lam)
            if lam <= Fraction(-1, 2) or lam == 0:
                raise ValueError(f"ultraspherical lambda must be > -1/2 and nonzero, got {lam}")
            object.__setattr__(self, "lam", lam)
        elif self.lam is not None:
            raise ValueError(f"family {self.name!r} takes no lambda")

    def weight_lambda(self) -> Optional[Fraction]:
        """lambda of the symmetric beta weight, or None for non-Jacobi families."""
        return {
            "legendre": Fraction(1, 2),
            "chebyshev_u": Fraction(1),
            "chebyshev_t": Fraction(0),
            "ultraspherical": self.lam,
        }.get(self.name)

    def to_json(self) -> dict:
        out = {"family": self.name}
        if self.lam is not None:
            out["lambda"] = format_rational(self.lam)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "FamilyId":
        lam = data.get("lambda")
        return cls(data["family"], parse_rational(lam) if lam is not None else None)


HERMITE = FamilyId("hermite")
CHARLIER = FamilyId("charlier")
LEGENDRE = FamilyId("legendre")
CHEBYSHEV_T = FamilyId("chebyshev_t")
CHEBYSHEV_U = FamilyId("chebyshev_u")


def ultraspherical(lam: RationalLike) -> FamilyId:
    return FamilyId("ultraspherical", parse_rational(lam))


def _ultraspherical_omega(lam: Fraction, n: int) -> Fraction:
    return Fraction(n * (n + 2 * lam - 1)) / (4 * (n + lam - 1) * (n + lam))


def recursion_of(fid: FamilyId, N: int) -> Recursion:
    """beta_0 .. beta_{N-1} and omega_1 .. omega_{N-1} for ``fid``."""
    if N < 2:
        raise ValueError("N must be at least 2")
    ns = range(1, N)
    if fid.name == "hermite":
        return Recursion((Fraction(0),) * N, tuple(Fraction(n) for n in ns))
    if fid.name == "charlier":
        return Recursion(tuple(Fraction(n + 1) for n in range(N)), tuple(Fraction(n) for n in ns))
    if fid.name == "legendre":
        omegas = tuple(Fraction(n * n, 4 * n * n - 1) for n in ns)
    elif fid.name == "chebyshev_t":
        omegas = tuple(Fraction(1, 2) if n == 1 else Fraction(1, 4) for n in ns)
    else:
        lam = fid.weight_lambda()
        omegas = tuple(_ultraspherical_omega(lam, n) for n in ns)
    return Recursion((Fraction(0),) * N, omegas)


def polys_from_recursion(rec: Recursion, N: int) -> MonicFamily:
    """Run P_{n+1} = (x - beta_n) P_n - omega_n P_{n-1} forward to P_N."""
    if len(rec.betas) < N or len(rec.omegas) < N - 1:
        raise ValueError(f"recursion too short for order {N}")
    polys = [PolyX.const(1)]
    prev = PolyX()
    for n in range(N):
        nxt = polys[-1].mul_x() - polys[-1] * rec.beta(n)
        if n >= 1:
            nxt = nxt - prev * rec.omega(n)
        prev = polys[-1]
        polys.append(nxt)
    return MonicFamily(tuple(polys))


def family_polys(fid: FamilyId, N: int) -> MonicFamily:
    return polys_from_recursion(recursion_of(fid, max(N, 2)), N)


def _bell_numbers(k: int) -> list[int]:
    # Bell triangle: each row starts with the last entry of the previous row.
    bells = [1]
    row = [1]
    for _ in range(k):
        new = [row[-1]]
        for v in row:
            new.append(new[-1] + v)
        row = new
        bells.append(row[0])
    return bells


def moment_oracle(fid: FamilyId, k: int) -> Fraction:
    """k-th moment of the normalised orthogonality measure, computed without
    the recursion."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if fid.name == "charlier":
        return Fraction(_bell_numbers(k)[k])
    if k % 2:
        return Fraction(0)
    j = k // 2
    m = Fraction(1)
    if fid.name == "hermite":
        for i in range(1, j + 1):
            m *= 2 * i - 1
        return m
    lam = fid.weight_lambda()
    for i in range(1, j + 1):
        m *= Fraction(2 * i - 1) / (2 * lam + 2 * i)
    return m
