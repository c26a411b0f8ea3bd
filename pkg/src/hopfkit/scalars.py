"""Exact scalars: arbitrary-precision rationals and cyclotomic field elements.

Rationals are plain ``fractions.Fraction``.  A :class:`CycScalar` of order N is
an element of Q(zeta_N), stored by its coordinates over the power basis
{1, z, z^2, ..., z^(phi(N)-1)} with z a fixed primitive N-th root of unity;
coordinates are kept reduced modulo the N-th cyclotomic polynomial.  All
arithmetic is exact.  Scalars of different orders combine by lifting both into
Q(zeta_lcm); a value whose non-constant coordinates vanish is normalized down
to order 1, so purely rational work never pays the cyclotomic overhead.

The scalar literal grammar used by file formats and reports:

    signed rational       -3, 5/2
    cyclotomic term       3/2*z^2, z, -z^3     (z denotes zeta_N, N from context)
    sums                  3/2*z^2 - 1

Values are immutable; every operation is a pure function.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import ParseError

_ZERO = Fraction(0)
_ONE = Fraction(1)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _int_poly_exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # exact long division of integer polynomials; den is monic
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("division was not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Integer coefficients (constant term first) of the n-th cyclotomic
    polynomial, computed by dividing x^n - 1 by all lower Phi_d with d | n."""
    if n < 1:
        raise ValueError("cyclotomic_coeffs needs n >= 1")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _int_poly_exact_div(poly, cyclotomic_coeffs(d))
    return tuple(poly)


def _reduce_mod_cyclotomic(coeffs: list[Fraction], order: int) -> list[Fraction]:
    """Remainder of a coefficient list (low-to-high) modulo Phi_order,
    padded/truncated to exactly phi(order) coordinates."""
    phi = euler_phi(order)
    mod = cyclotomic_coeffs(order)
    c = list(coeffs)
    for i in range(len(c) - 1, phi - 1, -1):
        t = c[i]
        if t:
            c[i] = _ZERO
            for j in range(phi):
                if mod[j]:
                    c[i - phi + j] -= t * mod[j]
    del c[phi:]
    while len(c) < phi:
        c.append(_ZERO)
    return c


class CycScalar:
    """An exact element of the cyclotomic field Q(zeta_order)."""

    __slots__ = ("order", "coords")

    def __init__(self, order: int, coords: tuple[Fraction, ...]):
        # trusted constructor: length must already equal phi(order) and a
        # rational value must already have been collapsed to order 1
        self.order = order
        self.coords = coords

    # -- construction -----------------------------------------------------

    @staticmethod
    def _make(order: int, coords: list[Fraction]) -> "CycScalar":
        if order > 1:
            for c in coords[1:]:
                if c:
                    return CycScalar(order, tuple(coords))
            return CycScalar(1, (coords[0],))
        return CycScalar(1, (coords[0],))

    @classmethod
    def from_rational(cls, value: Fraction | int) -> "CycScalar":
        return cls(1, (Fraction(value),))

    @classmethod
    def from_coords(cls, order: int, coords) -> "CycScalar":
        """Build from any coefficient sequence over powers of zeta_order
        (arbitrary length; reduced modulo the cyclotomic polynomial)."""
        if order < 1:
            raise ValueError("order must be >= 1")
        cs = [Fraction(c) for c in coords]
        return cls._make(order, _reduce_mod_cyclotomic(cs, order))

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CycScalar":
        """zeta_order ** power."""
        if order < 1:
            raise ValueError("order must be >= 1")
        power %= order
        coeffs = [_ZERO] * power + [_ONE]
        return cls._make(order, _reduce_mod_cyclotomic(coeffs, order))

    # -- predicates and conversions ---------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return self.order == 1

    def as_fraction(self) -> Fraction:
        if self.order != 1:
            raise ValueError(f"{self!r} is not rational")
        return self.coords[0]

    def is_integer(self) -> bool:
        return self.order == 1 and self.coords[0].denominator == 1

    def __bool__(self) -> bool:
        return any(self.coords)

    # -- order lifting ------------------------------------------------------

    def lift(self, order: int) -> list[Fraction]:
        """Coordinates of this value in Q(zeta_order); self.order must divide order."""
        if order == self.order:
            return list(self.coords)
        if order % self.order != 0:
            raise ValueError(f"cannot lift order {self.order} into order {order}")
        k = order // self.order
        out = [_ZERO] * ((len(self.coords) - 1) * k + 1)
        for i, c in enumerate(self.coords):
            if c:
                out[i * k] = c
        return _reduce_mod_cyclotomic(out, order)

    def _common(self, other: "CycScalar") -> tuple[int, list[Fraction], list[Fraction]]:
        if self.order == other.order:
            return self.order, list(self.coords), list(other.coords)
        n = lcm(self.order, other.order)
        return n, self.lift(n), other.lift(n)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "CycScalar":
        if isinstance(value, CycScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return CycScalar(1, (Fraction(value),))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "CycScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == 1 and other.order == 1:
            return CycScalar(1, (self.coords[0] + other.coords[0],))
        n, a, b = self._common(other)
        return self._make(n, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> "CycScalar":
        return CycScalar(self.order, tuple(-c for c in self.coords))

    def __sub__(self, other) -> "CycScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == 1 and other.order == 1:
            return CycScalar(1, (self.coords[0] - other.coords[0],))
        n, a, b = self._common(other)
        return self._make(n, [x - y for x, y in zip(a, b)])

    def __rsub__(self, other) -> "CycScalar":
        return (-self) + other

    def __mul__(self, other) -> "CycScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == 1 and other.order == 1:
            return CycScalar(1, (self.coords[0] * other.coords[0],))
        if self.order == 1:
            q = self.coords[0]
            if not q:
                return CycScalar(1, (_ZERO,))
            return self._make(other.order, [q * c for c in other.coords])
        if other.order == 1:
            q = other.coords[0]
            if not q:
                return CycScalar(1, (_ZERO,))
            return self._make(self.order, [q * c for c in self.coords])
        n, a, b = self._common(other)
        prod = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self._make(n, _reduce_mod_cyclotomic(prod, n))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero cyclotomic scalar")
        if self.order == 1:
            return CycScalar(1, (1 / self.coords[0],))
        # extended Euclid against Phi_order: t * self == gcd (a nonzero constant)
        n = self.order
        r0 = [Fraction(c) for c in cyclotomic_coeffs(n)]
        r1 = list(self.coords)
        t0: list[Fraction] = [_ZERO]
        t1: list[Fraction] = [_ONE]
        while any(r1):
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, _frac_poly_sub(t0, _frac_poly_mul(q, t1))
        g = _frac_poly_trim(r0)
        if len(g) != 1:
            raise ArithmeticError("cyclotomic modulus not coprime to element")
        inv_g = 1 / g[0]
        coeffs = _reduce_mod_cyclotomic([c * inv_g for c in t0], n)
        return self._make(n, coeffs)

    def __truediv__(self, other) -> "CycScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == 1 and other.order == 1:
            if not other.coords[0]:
                raise ZeroDivisionError("division by zero cyclotomic scalar")
            return CycScalar(1, (self.coords[0] / other.coords[0],))
        return self * other.inverse()

    def __rtruediv__(self, other) -> "CycScalar":
        num = self._coerce(other)
        if num is NotImplemented:
            return NotImplemented
        return num * self.inverse()

    def __pow__(self, exponent: int) -> "CycScalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycScalar(1, (_ONE,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == other.order:
            return self.coords == other.coords
        n, a, b = self._common(other)
        return a == b

    __hash__ = None  # type: ignore[assignment]  # values of equal worth may live at different orders

    def sort_key(self, order: int) -> tuple[Fraction, ...]:
        """Deterministic comparison key: coordinates lifted to a common order."""
        return tuple(self.lift(order))

    # -- presentation ---------------------------------------------------------

    def __repr__(self) -> str:
        if self.order == 1:
            return f"CycScalar({self.coords[0]})"
        return f"CycScalar(zeta_{self.order}: {format_scalar(self)})"

    def __str__(self) -> str:
        return format_scalar(self)


ZERO = CycScalar(1, (_ZERO,))
ONE = CycScalar(1, (_ONE,))


def as_scalar(value) -> CycScalar:
    """Coerce an int / Fraction / CycScalar to a CycScalar."""
    if isinstance(value, CycScalar):
        return value
    return CycScalar(1, (Fraction(value),))


def cyc_arith(a: CycScalar, b: CycScalar, op: str) -> CycScalar:
    """Named dispatch for the four field operations ('add', 'sub', 'mul',
    'div'); the operators on CycScalar are the usual entry point."""
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}; expected add, sub, mul, or div")


# -- rational coefficient-list helpers (private, used for field inversion) ----

def _frac_poly_trim(c: list[Fraction]) -> list[Fraction]:
    n = len(c)
    while n > 0 and not c[n - 1]:
        n -= 1
    return c[:n]


def _frac_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if len(a) < len(b):
        a = a + [_ZERO] * (len(b) - len(a))
    out = list(a)
    for i, c in enumerate(b):
        out[i] -= c
    return _frac_poly_trim(out)


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _frac_poly_trim(out)


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    b = _frac_poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [_ZERO] * max(0, len(r) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for i in range(len(r) - 1, len(b) - 2, -1):
        c = r[i] * inv_lead
        if c:
            q[i - len(b) + 1] = c
            for j in range(len(b)):
                r[i - len(b) + 1 + j] -= c * b[j]
    return _frac_poly_trim(q), _frac_poly_trim(r)


# -- literal grammar -----------------------------------------------------------

_RATIONAL_RE = re.compile(r"^(\d+)(?:/(\d+))?$")
_TERM_RE = re.compile(r"^(?:(\d+(?:/\d+)?)\*)?z(?:\^(\d+))?$")


def format_scalar(a: CycScalar) -> str:
    """Render in the literal grammar, highest power first: e.g. ``3/2*z^2 - 1``."""
    if a.order == 1:
        return str(a.coords[0])
    parts: list[str] = []
    for i in range(len(a.coords) - 1, -1, -1):
        c = a.coords[i]
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = "z" if i == 1 else f"z^{i}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    if not parts:
        return "0"
    return "".join(parts)


def parse_scalar(text: str, order: int) -> CycScalar:
    """Parse the literal grammar; ``z`` denotes zeta_order."""
    s = text.strip()
    if not s:
        raise ParseError("empty scalar literal")
    # split into signed terms
    terms: list[tuple[int, str]] = []
    sign, buf = 1, []
    first = True
    i = 0
    while i < len(s):
        ch = s[i]
        if ch in "+-" and not first:
            body = "".join(buf).strip()
            if not body:
                raise ParseError(f"misplaced sign in scalar literal {text!r}")
            terms.append((sign, body))
            sign, buf = (1 if ch == "+" else -1), []
        elif ch in "+-" and first:
            sign = 1 if ch == "+" else -1
        else:
            buf.append(ch)
        if ch not in " \t":
            first = False
        i += 1
    body = "".join(buf).strip()
    if not body:
        raise ParseError(f"trailing sign in scalar literal {text!r}")
    terms.append((sign, body))

    accum: dict[int, Fraction] = {}
    for sgn, term in terms:
        term = term.replace(" ", "")
        m = _RATIONAL_RE.match(term)
        if m:
            num = int(m.group(1))
            den = int(m.group(2)) if m.group(2) else 1
            if den == 0:
                raise ParseError(f"zero denominator in scalar literal {text!r}")
            accum[0] = accum.get(0, _ZERO) + sgn * Fraction(num, den)
            continue
        m = _TERM_RE.match(term)
        if m:
            coeff = _ONE
            if m.group(1):
                if "/" in m.group(1):
                    n_, d_ = m.group(1).split("/")
                    if int(d_) == 0:
                        raise ParseError(f"zero denominator in scalar literal {text!r}")
                    coeff = Fraction(int(n_), int(d_))
                else:
                    coeff = Fraction(int(m.group(1)))
            k = int(m.group(2)) if m.group(2) else 1
            k %= order
            accum[k] = accum.get(k, _ZERO) + sgn * coeff
            continue
        raise ParseError(f"bad term {term!r} in scalar literal {text!r}")

    top = max(accum) if accum else 0
    coeffs = [accum.get(k, _ZERO) for k in range(top + 1)]
    return CycScalar.from_coords(order, coeffs)
