"""Coefficient rules for F, and expansion of F(xz - alpha z^2) into a monic family.

A rule fixes the Taylor coefficients c_0 = 1, c_1, c_2, ... of F.  The
parametric form ``AbcRule(a, b, c)`` encodes

    c_1 = c,    c_n = (a + (n - 1) b) / n * c_{n-1}    (n >= 2),

which is the only shape that can give an orthogonal family.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exact import (
    PolyX,
    RationalLike,
    format_rational,
    parse_rational,
    substitute_quadratic,
)

NAMED_FORMS = ("exp", "geometric", "log")


class ZeroCoefficient(ArithmeticError):
    """c_n vanishes, so P_n is undefined."""

    def __init__(self, n: int):
        super().__init__(f"coefficient c_{n} is zero; P_{n} is undefined")
        self.n = n


@dataclass(frozen=True)
class AbcRule:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, parse_rational(getattr(self, name)))
        if self.c == 0:
            raise ValueError("c must be nonzero")
        if self.a == 0 and self.b == 0:
            raise ValueError("a and b cannot both be zero")

    def to_json(self) -> dict:
        return {
            "kind": "abc",
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "c": format_rational(self.c),
        }


@dataclass(frozen=True)
class ExplicitRule:
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(parse_rational(v) for v in self.values)
        if not vals or vals[0] != 1:
            raise ValueError("explicit coefficients must start with c_0 = 1")
        object.__setattr__(self, "values", vals)

    def to_json(self) -> dict:
        return {"kind": "explicit", "values": [format_rational(v) for v in self.values]}


@dataclass(frozen=True)
class NamedRule:
    """Sugar for the three canonical F: ``exp`` is e^{az}, ``geometric`` is
    (1 - bz)^{-1}, ``log`` is 1 + ln(1/(1 - bz))."""

    name: str
    param: Fraction

    def __post_init__(self):
        if self.name not in NAMED_FORMS:
            raise ValueError(f"unknown named form {self.name!r}; expected one of {NAMED_FORMS}")
        object.__setattr__(self, "param", parse_rational(self.param))
        if self.param == 0:
            raise ValueError(f"parameter of named form {self.name!r} must be nonzero")

    def to_abc(self) -> AbcRule:
        p = self.param
        if self.name == "exp":
            return AbcRule(p, Fraction(0), p)
        if self.name == "geometric":
            return AbcRule(p, p, p)
        return AbcRule(Fraction(0), p, p)

    def to_json(self) -> dict:
        key = "a" if self.name == "exp" else "b"
        return {"kind": "named", "name": self.name, key: format_rational(self.param)}


CoeffRule = Union[AbcRule, ExplicitRule, NamedRule]


def as_abc(rule: CoeffRule) -> AbcRule | None:
    """The (a, b, c) form of a parametric rule, or None for explicit rules."""
    if isinstance(rule, AbcRule):
        return rule
    if isinstance(rule, NamedRule):
        return rule.to_abc()
    return None


def rule_from_json(data: dict) -> CoeffRule:
    kind = data.get("kind")
    if kind == "abc":
        return AbcRule(data["a"], data["b"], data["c"])
    if kind == "explicit":
        return ExplicitRule(tuple(data["values"]))
    if kind == "named":
        name = data["name"]
        key = "a" if name == "exp" else "b"
        if key not in data:
            raise ValueError(f"named form {name!r} needs parameter {key!r}")
        return NamedRule(name, data[key])
    raise ValueError(f"unknown rule kind {kind!r}")


def coeffs_from_rule(rule: CoeffRule, N: int) -> list[Fraction]:
    """c_0 .. c_N for ``rule``."""
    if isinstance(rule, ExplicitRule):
        if len(rule.values) < N + 1:
            raise ValueError(
                f"explicit rule has {len(rule.values)} coefficients, need {N + 1}"
            )
        return list(rule.values[: N + 1])
    abc = as_abc(rule)
    out = [Fraction(1)]
    if N >= 1:
        out.append(abc.c)
    for n in range(2, N + 1):
        out.append((abc.a + (n - 1) * abc.b) / n * out[-1])
    return out


def shift_rule(rule: CoeffRule, C: RationalLike) -> CoeffRule:
    """Rule for F_C(z) = 1 + C (F(z) - 1), i.e. c_n -> C c_n for n >= 1."""
    C = parse_rational(C)
    if C == 0:
        raise ValueError("shift constant must be nonzero")
    if C == 1:
        return rule
    if isinstance(rule, ExplicitRule):
        return ExplicitRule(rule.values[:1] + tuple(C * v for v in rule.values[1:]))
    abc = as_abc(rule)
    return AbcRule(abc.a, abc.b, C * abc.c)


def closed_form_coeffs(a: RationalLike, b: RationalLike, c: RationalLike, N: int) -> list[Fraction]:
    """Taylor coefficients of the closed-form F for parameters (a, b, c).

    Each branch runs its own series recurrence rather than the product
    formula used by :func:`coeffs_from_rule`:

    * a, b != 0:  1 + (c/a) ((1 - bz)^(-a/b) - 1), binomial series
    * a == 0:     1 + (c/b) ln(1/(1 - bz)), logarithmic series
    * b == 0:     1 + (c/a) (e^(az) - 1), exponential series
    """
    a, b, c = parse_rational(a), parse_rational(b), parse_rational(c)
    if a == 0 and b == 0:
        raise ValueError("a and b cannot both be zero")
    if c == 0:
        raise ValueError("c must be nonzero")
    out = [Fraction(1)]
    if b == 0:
        term = Fraction(1)  # a^n / n!
        for n in range(1, N + 1):
            term = term * a / n
            out.append(c / a * term)
    elif a == 0:
        power = Fraction(1)  # b^n
        for n in range(1, N + 1):
            power *= b
            out.append(c / b * power / n)
    else:
        s = a / b
        term = Fraction(1)  # [z^n] (1 - bz)^(-s) = (s)_n b^n / n!
        for n in range(1, N + 1):
            term = term * (s + n - 1) / n * b
            out.append(c / a * term)
    return out


@dataclass(frozen=True)
class GFSpec:
    rule: CoeffRule
    alpha: Fraction
    order: int = 12

    def __post_init__(self):
        object.__setattr__(self, "alpha", parse_rational(self.alpha))
        if self.order < 2:
            raise ValueError("order must be at least 2")

    def with_order(self, order: int) -> "GFSpec":
        return GFSpec(self.rule, self.alpha, order)

    def to_json(self) -> dict:
        return {
            "alpha": format_rational(self.alpha),
            "order": self.order,
            "rule": self.rule.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "GFSpec":
        return cls(rule_from_json(data["rule"]), data["alpha"], int(data.get("order", 12)))


@dataclass(frozen=True)
class MonicFamily:
    """P_0 .. P_N with P_0 = 1 and each P_n monic of degree n."""

    polys: tuple[PolyX, ...]

    def __post_init__(self):
        polys = tuple(self.polys)
        object.__setattr__(self, "polys", polys)
        if not polys:
            raise ValueError("empty family")
        for n, p in enumerate(polys):
            if p.degree != n or p.lead != 1:
                raise ValueError(f"P_{n} = {p} is not monic of degree {n}")

    @property
    def order(self) -> int:
        return len(self.polys) - 1

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, n: int) -> PolyX:
        return self.polys[n]

    def truncate(self, order: int) -> "MonicFamily":
        return MonicFamily(self.polys[: order + 1])

    def to_json(self) -> dict:
        return {"order": self.order, "polys": [p.to_json() for p in self.polys]}

    @classmethod
    def from_json(cls, data) -> "MonicFamily":
        if isinstance(data, dict):
            data = data["polys"]
        return cls(tuple(PolyX.from_json(p) for p in data))


def expand(spec: GFSpec) -> MonicFamily:
    """P_n = [z^n] F(xz - alpha z^2) / c_n for n = 0 .. order."""
    if spec.alpha == 0:
        raise ValueError("alpha must be nonzero for expansion")
    N = spec.order
    c = coeffs_from_rule(spec.rule, N)
    for n in range(1, N + 1):
        if c[n] == 0:
            raise ZeroCoefficient(n)
    series = substitute_quadratic(c, spec.alpha, N)
    return MonicFamily(tuple(series[n] * (1 / c[n]) for n in range(N + 1)))
