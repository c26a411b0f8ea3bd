#!/usr/bin/env python3
"""Exact cyclotomic arithmetic, minimal polynomials, integrality certificates.

Everything here is exact: no floats anywhere.  A scalar lives in Q(zeta_N)
and is a vector of Fractions over the power basis of zeta_N.
"""

from fractions import Fraction

from hopfkit import CycScalar, format_scalar, is_algebraic_integer, min_poly_scalar

print("== roots of unity ==")
i = CycScalar.zeta(4)
print("zeta_4^2          =", i * i)
z3 = CycScalar.zeta(3)
print("zeta_3 + zeta_3^2 =", z3 + z3**2)

print()
print("== mixed orders lift into the compositum automatically ==")
w = CycScalar.zeta(4) * CycScalar.zeta(3)
print("zeta_4 * zeta_3 lives at order", w.order, "and equals", format_scalar(w))
print("its 12th power    =", w**12)

print()
print("== sqrt(2) inside Q(zeta_8) ==")
s = CycScalar.zeta(8) + CycScalar.zeta(8, 7)
print("zeta_8 + zeta_8^-1 =", s, "   squared:", s * s)

print()
print("== minimal polynomials over Q ==")
for value, label in [
    (CycScalar.from_rational(5), "5"),
    (z3, "zeta_3"),
    (1 + z3, "1 + zeta_3"),
    (CycScalar.zeta(5) + CycScalar.zeta(5, 4), "zeta_5 + zeta_5^4 (the golden conjugate)"),
]:
    print(f"  min poly of {label}: {min_poly_scalar(value)}")

print()
print("== algebraic integrality certificates ==")
for value, label in [
    (CycScalar.from_rational(3), "3"),
    (CycScalar.from_rational(Fraction(1, 2)), "1/2"),
    (CycScalar.zeta(5) + CycScalar.zeta(5, 4), "zeta_5 + zeta_5^4"),
    (Fraction(3, 2) * CycScalar.zeta(4), "(3/2) zeta_4"),
]:
    cert = is_algebraic_integer(value)
    verdict = "IS" if cert.is_integer else "is NOT"
    print(f"  {label} {verdict} an algebraic integer (min poly: {cert.minimal_polynomial})")
