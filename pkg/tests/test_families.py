
import pytest

from conftest import F
from orthogf.classify import omega_formula
from orthogf.exact import PolyX
from orthogf.families import (
    CHARLIER,
    CHEBYSHEV_T,
    CHEBYSHEV_U,
    HERMITE,
    LEGENDRE,
    FamilyId,
    moment_oracle,
    polys_from_recursion,
    recursion_of,
    ultraspherical,
)
from orthogf.favard import Recursion, fit
from orthogf.orthocheck import moments_from_recursion

ALL_FAMILIES = [HERMITE, CHARLIER, LEGENDRE, CHEBYSHEV_T, CHEBYSHEV_U, ultraspherical(F("3/2")), ultraspherical(F("-1/4"))]


def P(*coeffs):
    return PolyX(tuple(F(c) for c in coeffs))


def test_hermite_recursion():
    rec = recursion_of(HERMITE, 4)
    assert rec.betas == (0, 0, 0, 0)
    assert rec.omegas == (1, 2, 3)


def test_legendre_recursion():
    assert recursion_of(LEGENDRE, 4).omegas == (F("1/3"), F("4/15"), F("9/35"))


def test_chebyshev_t_recursion():
    assert recursion_of(CHEBYSHEV_T, 4).omegas == (F("1/2"), F("1/4"), F("1/4"))


def test_polys_from_recursion():
    assert polys_from_recursion(recursion_of(HERMITE, 3), 3).polys == (P(1), P(0, 1), P(-1, 0, 1), P(0, -3, 0, 1))
    assert polys_from_recursion(recursion_of(CHEBYSHEV_T, 3), 3).polys == (
        P(1), P(0, 1), P("-1/2", 0, 1), P(0, "-3/4", 0, 1)
    )
    assert polys_from_recursion(Recursion((0, 0), (1,)), 2).polys == (P(1), P(0, 1), P(-1, 0, 1))


@pytest.mark.parametrize("fid", ALL_FAMILIES, ids=lambda f: f.name + (f"_{f.lam}" if f.lam else ""))
@pytest.mark.parametrize("N", [2, 5, 12])
def test_round_trip(fid, N):
    rec = recursion_of(fid, N)
    assert fit(polys_from_recursion(rec, N)) == rec


def test_named_special_cases_of_ultraspherical():
    assert recursion_of(LEGENDRE, 12) == recursion_of(ultraspherical(F("1/2")), 12)
    assert recursion_of(CHEBYSHEV_U, 12) == recursion_of(ultraspherical(1), 12)
    assert polys_from_recursion(recursion_of(LEGENDRE, 8), 8) == polys_from_recursion(
        recursion_of(ultraspherical(F("1/2")), 8), 8
    )


@pytest.mark.parametrize("lam", [F("-1/4"), F("1/2"), F(1), F("3/2")])
def test_ultraspherical_matches_omega_formula(lam):
    rec = recursion_of(ultraspherical(lam), 12)
    for n in range(1, 12):
        assert rec.omega(n) == omega_formula(lam, 1, F("1/4"), n)


@pytest.mark.parametrize("lam", ["0", "-1/2", "-1"])
def test_invalid_lambda(lam):
    with pytest.raises(ValueError):
        ultraspherical(F(lam))


def test_family_id_json():
    fid = FamilyId.from_json({"family": "ultraspherical", "lambda": "3/2"})
    assert fid == ultraspherical(F("3/2"))
    assert FamilyId.from_json(fid.to_json()) == fid
    assert HERMITE.to_json() == {"family": "hermite"}
    with pytest.raises(ValueError):
        FamilyId("laguerre")


def test_moment_oracles():
    assert [moment_oracle(HERMITE, k) for k in (2, 4, 6)] == [1, 3, 15]
    assert [moment_oracle(CHEBYSHEV_T, k) for k in (2, 4, 6)] == [F("1/2"), F("3/8"), F("5/16")]
    assert [moment_oracle(CHARLIER, k) for k in range(1, 6)] == [1, 2, 5, 15, 52]
    # uniform and semicircle
    assert moment_oracle(LEGENDRE, 2) == F("1/3")
    assert moment_oracle(CHEBYSHEV_U, 4) == F("1/8")


def test_ultraspherical_oracle_matches_integration():
    # normalised integrals of x^k (1 - x^2) on [-1, 1], computed symbolically
    assert [moment_oracle(ultraspherical(F("3/2")), k) for k in range(0, 9, 2)] == [
        1, F("1/5"), F("3/35"), F("1/21"), F("1/33")
    ]


@pytest.mark.parametrize("fid", ALL_FAMILIES, ids=lambda f: f.name + (f"_{f.lam}" if f.lam else ""))
def test_oracle_agrees_with_jacobi_moments(fid):
    K = 12
    moms = moments_from_recursion(recursion_of(fid, K), K)
    assert list(moms.moments) == [moment_oracle(fid, k) for k in range(K + 1)]
