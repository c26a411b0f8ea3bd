"""Factorization over Q and over cyclotomic fields, and rational reconstruction."""

from fractions import Fraction
from itertools import product
from math import isqrt

import pytest

from hopfkit import CycScalar, Poly, cyclotomic_coeffs, factor_over_cyclotomic, factor_rational, rational_reconstruction
from hopfkit.rng import DeterministicRng


def _product_with_lead(p: Poly, factors) -> Poly:
    out = Poly([p.leading()])
    for f, mult in factors:
        out = out * f**mult
    return out


def test_factor_x2_minus_1():
    factors = factor_rational(Poly([-1, 0, 1]))
    assert [(str(f), m) for f, m in factors] == [("x - 1", 1), ("x + 1", 1)]


def test_factor_x6_minus_1_is_product_of_cyclotomics():
    p = Poly([-1, 0, 0, 0, 0, 0, 1])
    factors = factor_rational(p)
    # oracle: x^6 - 1 = prod_{d | 6} Phi_d
    expected = {tuple(Fraction(c) for c in cyclotomic_coeffs(d)) for d in (1, 2, 3, 6)}
    got = {tuple(c.as_fraction() for c in f.coeffs) for f, _ in factors}
    assert got == expected
    assert all(m == 1 for _, m in factors)
    assert _product_with_lead(p, factors) == p


def test_x4_x2_1_irreducible_by_exhaustion():
    p = Poly([1, 0, -1, 0, 1])
    factors = factor_rational(p)
    assert len(factors) == 1 and factors[0][1] == 1 and factors[0][0] == p
    # oracle: no monic integer quadratic factor x^2 + b x + c with coefficients
    # within the root bound works (roots are on the unit circle, so |c| <= 1,
    # |b| <= 2), and no rational root exists
    for b, c in product(range(-2, 3), range(-1, 2)):
        q = Poly([c, b, 1])
        _, r = divmod(p, q)
        assert not r.is_zero(), (b, c)
    for num in (1, -1):
        assert not p.evaluate(CycScalar.from_rational(num)).is_zero()


def test_multiplicities_and_content():
    p = Poly([Fraction(3)]) * Poly([1, -1]) ** 2 * Poly([2, 1]) ** 3
    factors = factor_rational(p)
    assert [(str(f), m) for f, m in factors] == [("x - 1", 2), ("x + 2", 3)]
    assert _product_with_lead(p, factors) == p


def test_factor_constant_and_linear():
    assert factor_rational(Poly([5])) == []
    assert factor_rational(Poly([2, 4])) == [(Poly([Fraction(1, 2), 1]), 1)]


def test_factor_round_trip_randomized():
    rng = DeterministicRng(2024)
    for _ in range(15):
        parts = []
        for _ in range(rng.randint(1, 3)):
            deg = rng.randint(1, 3)
            coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(deg)] + [Fraction(1)]
            parts.append(Poly(coeffs))
        p = Poly([Fraction(rng.randint(1, 3))])
        for f in parts:
            p = p * f
        factors = factor_rational(p)
        assert _product_with_lead(p, factors) == p
        # every reported factor is itself irreducible: re-factoring returns one factor
        for f, _ in factors:
            again = factor_rational(f)
            assert len(again) == 1 and again[0] == (f, 1)


def test_swinnerton_dyer_style_recombination():
    # x^4 - 10x^2 + 1 (min poly of sqrt2 + sqrt3) splits into quadratics mod
    # every prime, so Zassenhaus recombination must reassemble the true factors
    p = Poly([1, 0, -10, 0, 1])
    assert factor_rational(p) == [(p, 1)]
    q = p * Poly([-3, 0, 1])
    factors = factor_rational(q)
    assert sorted((f.degree, m) for f, m in factors) == [(2, 1), (4, 1)]
    assert (p, 1) in factors and (Poly([-3, 0, 1]), 1) in factors


def test_factor_over_cyclotomic_cube_roots():
    factors = factor_over_cyclotomic(Poly([1, 1, 1]), 3)
    assert all(f.degree == 1 for f in factors)
    z = CycScalar.zeta(3)
    roots = [str(-f[0]) for f in factors]
    assert sorted(roots) == sorted([str(z), str(z**2)])


def test_factor_over_cyclotomic_sqrt2():
    factors = factor_over_cyclotomic(Poly([-2, 0, 1]), 8)
    assert len(factors) == 2 and all(f.degree == 1 for f in factors)
    for f in factors:
        root = -f[0]
        assert root * root == 2  # oracle: sqrt(2) = zeta_8 + zeta_8^-1 squared
    product_poly = factors[0] * factors[1]
    assert product_poly == Poly([-2, 0, 1])


def test_factor_over_cyclotomic_linear_input():
    assert factor_over_cyclotomic(Poly([-7, 1]), 12) == [Poly([-7, 1])]


def test_phi12_splits_over_zeta12():
    factors = factor_over_cyclotomic(Poly([1, 0, -1, 0, 1]), 12)
    assert len(factors) == 4 and all(f.degree == 1 for f in factors)
    z = CycScalar.zeta(12)
    roots = {str(-f[0]) for f in factors}
    assert roots == {str(z), str(z**5), str(z**7), str(z**11)}


def test_factor_over_cyclotomic_requires_squarefree():
    with pytest.raises(ValueError):
        factor_over_cyclotomic(Poly([1, 2, 1]), 4)


def _reconstruction_oracle(residue: int, modulus: int):
    bound = isqrt(modulus // 2)
    hits = set()
    for d in range(1, bound + 1):
        for n in range(-bound, bound + 1):
            if (n - residue * d) % modulus == 0:
                hits.add(Fraction(n, d))
    return hits


def test_rational_reconstruction_examples():
    # no pair within |n|, d <= sqrt(13/2): failure
    assert rational_reconstruction(4, 13) is None
    assert _reconstruction_oracle(4, 13) == set()
    # 2 * 51 = 102 = 1 mod 101
    assert rational_reconstruction(51, 101) == Fraction(1, 2)
    assert _reconstruction_oracle(51, 101) == {Fraction(1, 2)}
    # 8 exceeds sqrt(101/2) ~ 7.1, so the bound admits nothing
    assert rational_reconstruction(8, 101) is None
    assert _reconstruction_oracle(8, 101) == set()


def test_rational_reconstruction_round_trip():
    m = 1_000_003  # prime
    for n, d in [(1, 2), (-3, 5), (22, 7), (-100, 9), (0, 1), (355, 113)]:
        residue = (n * pow(d, -1, m)) % m
        assert rational_reconstruction(residue, m) == Fraction(n, d)


def test_rational_reconstruction_validates_modulus():
    with pytest.raises(ValueError):
        rational_reconstruction(0, 1)
