"""Exact orthogonality checks through moments of the Jacobi matrix."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exact import format_rational, parse_rational
from .favard import Recursion
from .genfun import MonicFamily


@dataclass(frozen=True)
class MomentSeq:
    moments: tuple[Fraction, ...]

    def __post_init__(self):
        moms = tuple(parse_rational(m) for m in self.moments)
        if not moms or moms[0] != 1:
            raise ValueError("moment sequence must start with m_0 = 1")
        object.__setattr__(self, "moments", moms)

    def __getitem__(self, k: int) -> Fraction:
        return self.moments[k]

    def __len__(self) -> int:
        return len(self.moments)


def moments_from_recursion(rec: Recursion, K: int, size: Optional[int] = None) -> MomentSeq:
    """m_0 .. m_K as the (0, 0) entries of powers of the Jacobi matrix.

    J has beta on the diagonal, 1 below and omega above, so J^k e_0 is a
    walk from index 0.  A walk of length k <= K that returns to 0 never
    passes index K // 2, hence the default truncation ``size = K // 2 + 1``.
    Needs omega_1 .. omega_{K//2} and beta_0 .. beta_{(K-1)//2}.
    """
    if K < 0:
        raise ValueError("K must be non-negative")
    half = K // 2
    need_b = (K + 1) // 2
    if len(rec.omegas) < half or len(rec.betas) < need_b:
        raise ValueError(
            f"moments through m_{K} need omega_1..omega_{half} and "
            f"beta_0..beta_{need_b - 1}"
        )
    s = half + 1 if size is None else size
    if s < half + 1:
        raise ValueError(f"truncation size {s} too small for m_{K}")
    if len(rec.omegas) < s - 1 or len(rec.betas) < s - 1:
        raise ValueError(f"recursion too short for truncation size {s}")
    # beta at the last index is never reached by a returning walk when K is even.
    betas = list(rec.betas[:s]) + [Fraction(0)] * (s - len(rec.betas[:s]))
    omegas = list(rec.omegas[: s - 1])

    v = [Fraction(0)] * s
    v[0] = Fraction(1)
    out = [Fraction(1)]
    for _ in range(K):
        w = [betas[i] * v[i] for i in range(s)]
        for i in range(s - 1):
            w[i + 1] += v[i]
            w[i] += omegas[i] * v[i + 1]
        v = w
        out.append(v[0])
    return MomentSeq(tuple(out))


def gram(family: MonicFamily, mom: MomentSeq) -> list[list[Fraction]]:
    """G[j][k] = sum_{r,s} [x^r]P_j [x^s]P_k m_{r+s}."""
    N = family.order
    if len(mom) < 2 * N + 1:
        raise ValueError(f"Gram matrix of order {N} needs moments through m_{2 * N}")
    G = [[Fraction(0)] * (N + 1) for _ in range(N + 1)]
    for j in range(N + 1):
        pj = family[j].coeffs
        # <P_j, x^s> for each s, then contract with P_k
        proj = [sum((a * mom[r + s] for r, a in enumerate(pj)), Fraction(0)) for s in range(N + 1)]
        for k in range(j, N + 1):
            val = sum((b * proj[s] for s, b in enumerate(family[k].coeffs)), Fraction(0))
            G[j][k] = G[k][j] = val
    return G


@dataclass(frozen=True)
class OrthoReport:
    passed: bool
    order: int
    diagonal: tuple[Fraction, ...] = ()
    first_failure: Optional[tuple[int, int]] = None
    value: Optional[Fraction] = None
    check: Optional[str] = field(default=None, compare=False)

    def to_json(self) -> dict:
        if self.passed:
            return {
                "pass": True,
                "order": self.order,
                "diagonal": [format_rational(d) for d in self.diagonal],
            }
        return {
            "pass": False,
            "first_failure": list(self.first_failure),
            "value": format_rational(self.value),
        }

    @classmethod
    def from_json(cls, data: dict) -> "OrthoReport":
        if data["pass"]:
            return cls(True, data["order"], tuple(parse_rational(d) for d in data["diagonal"]))
        j, k = data["first_failure"]
        return cls(False, data.get("order", -1), first_failure=(j, k), value=parse_rational(data["value"]))


def verify_orthogonality(family: MonicFamily, rec: Recursion) -> OrthoReport:
    """Check the Gram matrix of ``family`` under the measure with recursion ``rec``.

    Asserts zero off-diagonal, diagonal_n = omega_1 ... omega_n, and a
    positive diagonal.  ``rec`` must reach omega_N for a family P_0 .. P_N.
    """
    N = family.order
    mom = moments_from_recursion(rec, 2 * N)
    G = gram(family, mom)
    for j in range(N + 1):
        for k in range(j + 1, N + 1):
            if G[j][k] != 0:
                return OrthoReport(False, N, first_failure=(j, k), value=G[j][k], check="off_diagonal")
    norm = Fraction(1)
    for n in range(N + 1):
        if n >= 1:
            norm *= rec.omega(n)
        if G[n][n] != norm:
            return OrthoReport(False, N, first_failure=(n, n), value=G[n][n], check="norm_product")
    for n in range(N + 1):
        if G[n][n] <= 0:
            return OrthoReport(False, N, first_failure=(n, n), value=G[n][n], check="positivity")
    return OrthoReport(True, N, tuple(G[n][n] for n in range(N + 1)))
