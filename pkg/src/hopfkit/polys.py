"""Dense univariate polynomials over the exact scalars.

Coefficients are :class:`~hopfkit.scalars.CycScalar` (rationals are the
order-1 case), stored low-to-high with no trailing zeros; the zero polynomial
has an empty coefficient tuple and degree -1.  On top of the ring/field
operations this module provides minimal polynomials of cyclotomic scalars over
Q and the algebraic-integrality certificate built from them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .scalars import CycScalar, ONE, ZERO, as_scalar


class Poly:
    """A polynomial with exact cyclotomic (or rational) coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((ONE,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((ZERO, ONE))

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "Poly":
        return cls([0] * k + [coeff])

    # -- basic queries --------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> CycScalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, k: int) -> CycScalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def rational_coeffs(self) -> list[Fraction]:
        """Coefficients as Fractions; raises if any coefficient is irrational."""
        return [c.as_fraction() for c in self.coeffs]

    def has_integer_coeffs(self) -> bool:
        return all(c.is_integer() for c in self.coeffs)

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        out = list(self.coeffs) + [ZERO] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] - c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly(())
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, x in enumerate(self.coeffs):
                if not x.is_zero():
                    for j, y in enumerate(other.coeffs):
                        if not y.is_zero():
                            out[i + j] = out[i + j] + x * y
            return Poly(out)
        s = as_scalar(other)
        return Poly([c * s for c in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        q = [ZERO] * max(0, len(r) - db)
        inv_lead = other.coeffs[-1].inverse()
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] * inv_lead
            if not c.is_zero():
                q[i - db] = c
                for j, bc in enumerate(other.coeffs):
                    r[i - db + j] = r[i - db + j] - c * bc
        return Poly(q), Poly(r)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division was not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        if self.is_monic():
            return self
        inv = self.coeffs[-1].inverse()
        return Poly([c * inv for c in self.coeffs])

    def derivative(self) -> "Poly":
        return Poly([c * k for k, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x) -> CycScalar:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly((c,))
        return acc

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor (Euclid over the coefficient field)."""
        a, b = self, other
        while not b.is_zero():
            b = b.monic()
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def is_squarefree(self) -> bool:
        if self.degree <= 1:
            return not self.is_zero()
        return self.gcd(self.derivative()).degree == 0

    # -- presentation ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)})"

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(p: Poly, var: str = "x") -> str:
    """Human-readable form, highest power first; cyclotomic coefficients are
    parenthesized in the scalar literal grammar."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c.is_zero():
            continue
        if c.is_rational():
            q = c.as_fraction()
            neg, mag = q < 0, abs(q)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
        else:
            neg = False
            body = f"({c})" if k == 0 else f"({c})*" + (var if k == 1 else f"{var}^{k}")
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


# -- minimal polynomials and integrality ------------------------------------------


def min_poly_scalar(a: CycScalar) -> Poly:
    """Monic minimal polynomial of a cyclotomic scalar over Q, found as the
    least-degree monic linear dependency among 1, a, a^2, ... by exact
    Gaussian elimination on the power-basis coordinates."""
    order = a.order
    # pivot rows in reduced form together with their expression over the powers
    rows: list[tuple[list[Fraction], list[Fraction]]] = []
    pivots: list[int] = []
    power = ONE
    k = 0
    while True:
        vec = power.lift(order)
        combo = [Fraction(0)] * (k + 1)
        combo[k] = Fraction(1)
        # reduce against existing pivots
        for (rvec, rcombo), piv in zip(rows, pivots):
            f = vec[piv]
            if f:
                for i, c in enumerate(rvec):
                    if c:
                        vec[i] -= f * c
                for i, c in enumerate(rcombo):
                    if c:
                        if i >= len(combo):
                            combo.extend([Fraction(0)] * (i + 1 - len(combo)))
                        combo[i] -= f * c
        piv = next((i for i, c in enumerate(vec) if c), None)
        if piv is None:
            # sum_{i<=k} combo[i] a^i = 0 with combo[k] = 1 untouched by the
            # reductions, so x^k + sum_{i<k} combo[i] x^i annihilates a
            coeffs = [combo[i] for i in range(k)] + [Fraction(1)]
            return Poly(coeffs)
        inv = 1 / vec[piv]
        vec = [c * inv for c in vec]
        combo = [c * inv for c in combo]
        rows.append((vec, combo))
        pivots.append(piv)
        power = power * a
        k += 1


@dataclass(frozen=True)
class IntegralityCertificate:
    """Certifies whether a scalar is an algebraic integer: its monic minimal
    polynomial over Q, and whether every coefficient is a rational integer."""

    subject: CycScalar
    minimal_polynomial: Poly
    is_integer: bool

    def recheck(self) -> bool:
        """Re-derive the verdict from the witness data."""
        p = self.minimal_polynomial
        return (
            p.is_monic()
            and p.evaluate(self.subject).is_zero()
            and (p.has_integer_coeffs() == self.is_integer)
        )


def is_algebraic_integer(a: CycScalar) -> IntegralityCertificate:
    """Certificate with is_integer true iff the minimal polynomial of ``a``
    over Q has integer coefficients."""
    m = min_poly_scalar(a)
    return IntegralityCertificate(subject=a, minimal_polynomial=m, is_integer=m.has_integer_coeffs())
