#!/usr/bin/env python3
"""Polynomial factorization over Q (Zassenhaus chain) and over Q(zeta_N)
(Trager's norm method), plus rational reconstruction from a residue."""

from hopfkit import Poly, factor_over_cyclotomic, factor_rational, rational_reconstruction

print("== factorization over Q ==")
for coeffs, label in [
    ([-1, 0, 1], "x^2 - 1"),
    ([-1, 0, 0, 0, 0, 0, 1], "x^6 - 1"),
    ([1, 0, -1, 0, 1], "x^4 - x^2 + 1"),
    ([4, 0, -5, 0, 1], "x^4 - 5x^2 + 4"),
]:
    factors = factor_rational(Poly(coeffs))
    shown = " * ".join(f"({f})" + (f"^{m}" if m > 1 else "") for f, m in factors)
    print(f"  {label:16s} = {shown if shown else '(constant)'}")

print()
print("== the same inputs over cyclotomic fields ==")
for coeffs, order, label in [
    ([1, 1, 1], 3, "x^2 + x + 1 over Q(zeta_3)"),
    ([-2, 0, 1], 8, "x^2 - 2     over Q(zeta_8)"),
    ([1, 0, -1, 0, 1], 12, "x^4 - x^2 + 1 over Q(zeta_12)"),
]:
    factors = factor_over_cyclotomic(Poly(coeffs), order)
    print(f"  {label} = " + " * ".join(f"({f})" for f in factors))

print()
print("== rational reconstruction (used to terminate Hensel lifting) ==")
for residue, modulus in [(51, 101), (8, 101), (4, 13)]:
    got = rational_reconstruction(residue, modulus)
    print(f"  residue {residue} mod {modulus} -> {got if got is not None else 'no admissible fraction'}")
