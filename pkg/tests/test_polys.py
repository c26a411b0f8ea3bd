"""Polynomials, minimal polynomials over Q, and integrality certificates."""

from fractions import Fraction

import pytest

from hopfkit import CycScalar, Poly, euler_phi, is_algebraic_integer, min_poly_scalar
from hopfkit.rng import DeterministicRng


def test_poly_basics():
    p = Poly([1, 2, 1])
    q = Poly([1, 1])
    assert p.degree == 2 and q.degree == 1
    assert q * q == p
    assert divmod(p, q) == (q, Poly.zero())
    assert p.gcd(q) == q
    assert Poly.zero().is_zero() and Poly.zero().degree == -1


def test_poly_trailing_zeros_trimmed():
    assert Poly([1, 0, 0]).degree == 0
    assert Poly([0, 0, 0]).is_zero()


def test_poly_evaluate_compose():
    p = Poly([1, 1, 1])  # 1 + x + x^2
    assert p.evaluate(CycScalar.from_rational(2)) == 7
    assert p.compose(Poly([0, 2])) == Poly([1, 2, 4])  # p(2x)


def test_min_poly_rational():
    assert min_poly_scalar(CycScalar.from_rational(5)) == Poly([-5, 1])


def test_min_poly_zeta3_is_cyclotomic():
    assert min_poly_scalar(CycScalar.zeta(3)) == Poly([1, 1, 1])


def test_min_poly_one_plus_zeta3():
    # oracle: expand (x - a)(x - abar) in Q(zeta_3) with abar = 1 + zeta_3^2
    a = 1 + CycScalar.zeta(3)
    abar = 1 + CycScalar.zeta(3) ** 2
    oracle = Poly([a * abar, -(a + abar), 1])
    assert oracle == Poly([1, -1, 1])  # x^2 - x + 1, coefficients collapse to Q
    assert min_poly_scalar(a) == oracle


def test_min_poly_annihilates_subject():
    rng = DeterministicRng(99)
    for order in (3, 4, 5, 8, 12):
        phi = euler_phi(order)
        for _ in range(5):
            a = CycScalar.from_coords(
                order, [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(phi)]
            )
            m = min_poly_scalar(a)
            assert m.is_monic()
            assert m.evaluate(a).is_zero()


def test_min_poly_is_irreducible_over_q():
    # tie the two kernels together: re-factoring a minimal polynomial must
    # return it unchanged as a single irreducible factor
    from hopfkit import factor_rational

    for a in (CycScalar.zeta(5) + CycScalar.zeta(5, 4), 1 + CycScalar.zeta(3), CycScalar.zeta(8)):
        m = min_poly_scalar(a)
        assert factor_rational(m) == [(m, 1)]


def test_integrality_certificates():
    c = is_algebraic_integer(CycScalar.from_rational(3))
    assert c.is_integer and c.minimal_polynomial == Poly([-3, 1])
    c = is_algebraic_integer(CycScalar.from_rational(Fraction(1, 2)))
    assert not c.is_integer and c.minimal_polynomial == Poly([Fraction(-1, 2), 1])


def test_golden_conjugate_is_integral():
    # zeta_5 + zeta_5^4 = 2 cos(72 deg); oracle: its Galois mate is
    # zeta_5^2 + zeta_5^3, and sum/product give x^2 + x - 1 exactly
    a = CycScalar.zeta(5) + CycScalar.zeta(5, 4)
    mate = CycScalar.zeta(5, 2) + CycScalar.zeta(5, 3)
    oracle = Poly([a * mate, -(a + mate), 1])
    assert oracle == Poly([-1, 1, 1])
    cert = is_algebraic_integer(a)
    assert cert.is_integer
    assert cert.minimal_polynomial == oracle
    assert cert.recheck()


@pytest.mark.parametrize("order", [1, 2, 3, 4, 6, 8])
def test_integrality_brute_force_oracle(order):
    # elements (m/n) zeta^k: after basis reduction, integral iff the rational
    # coordinates all have denominator 1
    for k in range(order if order > 1 else 1):
        for m in range(-4, 5):
            for n in (1, 2, 3):
                a = Fraction(m, n) * CycScalar.zeta(order, k)
                cert = is_algebraic_integer(a)
                expected = all(q.denominator == 1 for q in a.coords)
                assert cert.is_integer == expected, (order, k, m, n)
