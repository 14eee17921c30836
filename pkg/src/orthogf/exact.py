"""Exact arithmetic kernel: rationals, polynomials in x, truncated series in z.

Rationals are :class:`fractions.Fraction`, which already stores a reduced
numerator over a positive denominator, so equality is structural.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class OrderMismatch(ValueError):
    """Raised when two truncated series of different orders are combined."""


def parse_rational(s: RationalLike) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.

    Only the exact integer-ratio syntax is accepted; decimals such as
    ``"0.5"`` are rejected so that no value ever passes through a float.
    """
    if isinstance(s, Fraction):
        return s
    if isinstance(s, bool):
        raise ValueError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str) or not _RATIONAL_RE.match(s.strip()):
        raise ValueError(f"malformed rational {s!r}; expected 'p/q' or 'p'")
    num, _, den = s.strip().partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {s!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _trim(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class PolyX:
    """Univariate polynomial in x, coefficients in ascending degree.

    The zero polynomial is the empty tuple; trailing zeros are always trimmed.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def const(cls, c: RationalLike) -> "PolyX":
        return cls((parse_rational(c),))

    @classmethod
    def x(cls) -> "PolyX":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> "PolyX":
        return cls((Fraction(0),) * k + (parse_rational(c),))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other: "PolyX") -> "PolyX":
        return poly_add(self, other)

    def __neg__(self) -> "PolyX":
        return PolyX(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "PolyX") -> "PolyX":
        return poly_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, PolyX):
            return poly_mul(self, other)
        s = parse_rational(other)
        return PolyX(tuple(s * c for c in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, x0: RationalLike) -> Fraction:
        return poly_eval(self, parse_rational(x0))

    def mul_x(self) -> "PolyX":
        """Multiply by x (shift coefficients up one degree)."""
        if not self.coeffs:
            return self
        return PolyX((Fraction(0),) + self.coeffs)

    def reflect(self) -> "PolyX":
        """Return p(-x)."""
        return PolyX(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)))

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[RationalLike]) -> "PolyX":
        return cls(tuple(parse_rational(c) for c in data))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_add(p: PolyX, q: PolyX) -> PolyX:
    n = max(len(p.coeffs), len(q.coeffs))
    return PolyX(tuple(p.coeff(k) + q.coeff(k) for k in range(n)))


def poly_mul(p: PolyX, q: PolyX) -> PolyX:
    if p.is_zero() or q.is_zero():
        return PolyX()
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return PolyX(tuple(out))


def poly_eval(p: PolyX, x0: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
    return acc


@dataclass(frozen=True)
class SeriesZ:
    """Power series in z truncated after z^order, with PolyX coefficients."""

    order: int
    coeffs: tuple[PolyX, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"series of order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def from_polys(cls, polys: Sequence[PolyX], order: int) -> "SeriesZ":
        """Build a series from leading coefficients, zero-padding up to ``order``."""
        polys = list(polys)[: order + 1]
        polys += [PolyX()] * (order + 1 - len(polys))
        return cls(order, tuple(polys))

    @classmethod
    def one(cls, order: int) -> "SeriesZ":
        return cls.from_polys([PolyX.const(1)], order)

    def __getitem__(self, n: int) -> PolyX:
        return self.coeffs[n]

    def __add__(self, other: "SeriesZ") -> "SeriesZ":
        _check_order(self, other)
        return SeriesZ(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "SeriesZ") -> "SeriesZ":
        return series_mul(self, other)


def _check_order(f: SeriesZ, g: SeriesZ) -> None:
    if f.order != g.order:
        raise OrderMismatch(f"series orders differ: {f.order} vs {g.order}")


def series_mul(f: SeriesZ, g: SeriesZ) -> SeriesZ:
    """Cauchy product, truncated at the shared order."""
    _check_order(f, g)
    N = f.order
    out = []
    for n in range(N + 1):
        acc = PolyX()
        for k in range(n + 1):
            if f.coeffs[k].is_zero() or g.coeffs[n - k].is_zero():
                continue
            acc = acc + f.coeffs[k] * g.coeffs[n - k]
        out.append(acc)
    return SeriesZ(N, tuple(out))


def substitute_quadratic(c: Sequence[RationalLike], alpha: RationalLike, N: int) -> SeriesZ:
    """Expand ``sum_k c[k] (x z - alpha z^2)^k`` through z^N.

    Horner on the outer series: acc <- c[k] + q * acc with q = x z - alpha z^2.
    Since q has no constant term, terms k > N never reach z^N.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    if len(c) < N + 1:
        raise ValueError(f"need at least {N + 1} coefficients, got {len(c)}")
    c = [parse_rational(v) for v in c[: N + 1]]
    if c[0] != 1:
        raise ValueError("c[0] must equal 1")
    alpha = parse_rational(alpha)
    q = SeriesZ.from_polys([PolyX(), PolyX.x(), PolyX.const(-alpha)], N)
    acc = SeriesZ.from_polys([PolyX.const(c[N])], N)
    for k in range(N - 1, -1, -1):
        acc = q * acc + SeriesZ.from_polys([PolyX.const(c[k])], N)
    return acc
