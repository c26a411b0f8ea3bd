"""Univariate polynomial factorization over Q and over cyclotomic fields.

The rational kernel is the classic Zassenhaus chain:

    Yun squarefree decomposition
      -> reduction mod a good prime p > 2^30 (p dividing neither the leading
         coefficient nor the discriminant)
      -> distinct-degree + equal-degree splitting in GF(p)[x]
      -> linear multifactor Hensel lifting past the Mignotte coefficient bound
      -> exhaustive subset recombination (factor counts stay tiny at desk scale)

Factorization over Q(zeta_N) uses Trager's norm method: shift by an integer
multiple of zeta_N until the resultant norm is squarefree, factor the norm
over Q, and pull the factors back through gcds over the cyclotomic field.
Everything is exact; returned factors are monic.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt, lcm

from .polys import Poly
from .rng import DeterministicRng
from .scalars import CycScalar

# ---------------------------------------------------------------------------
# rational reconstruction


def rational_reconstruction(residue: int, modulus: int) -> Fraction | None:
    """Recover n/d from its image mod ``modulus``, with |n|, d <= sqrt(modulus/2).

    Returns None when no admissible pair exists.  The bound makes the answer
    unique when it exists (2 B^2 <= modulus), and the half-extended Euclidean
    scan below finds it.
    """
    if modulus <= 1:
        raise ValueError("modulus must be > 1")
    bound = isqrt(modulus // 2)
    if bound == 0:
        return None
    r0, r1 = modulus, residue % modulus
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    n, d = r1, s1
    if d < 0:
        n, d = -n, -d
    if d == 0 or d > bound or abs(n) > bound or gcd(abs(n), d) != 1:
        return None
    if (n - residue * d) % modulus != 0:
        return None
    return Fraction(n, d)


# ---------------------------------------------------------------------------
# primality and prime selection

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _next_prime(n: int) -> int:
    n += 1
    if n % 2 == 0:
        n += 1
    while not _is_prime(n):
        n += 2
    return n


# ---------------------------------------------------------------------------
# integer / rational coefficient-list helpers (low-to-high)


def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _q_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    r = list(a)
    db = len(b) - 1
    q = [Fraction(0)] * max(0, len(r) - db)
    inv = 1 / b[-1]
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] * inv
        if c:
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] -= c * b[j]
    return _trim(q), _trim(r)


def _q_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _q_divmod(a, b)[1]
    if a:
        inv = 1 / a[-1]
        a = [c * inv for c in a]
    return a


def _q_derivative(a: list[Fraction]) -> list[Fraction]:
    return _trim([k * c for k, c in enumerate(a)][1:])


def resultant_q(a: list[Fraction], b: list[Fraction]) -> Fraction:
    """Resultant of two rational polynomials via the Euclidean remainder chain."""
    a, b = _trim(list(a)), _trim(list(b))
    if not a or not b:
        return Fraction(0)
    res = Fraction(1)
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return res * b[0] ** da
        r = _q_divmod(a, b)[1]
        dr = len(r) - 1 if r else -1
        if not r:
            return Fraction(0)
        if (da * db) % 2 == 1:
            res = -res
        res *= b[-1] ** (da - dr)
        a, b = b, r


# ---------------------------------------------------------------------------
# GF(p) polynomial arithmetic (coefficient lists of ints in [0, p))


def _gf_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_monic(a: list[int], p: int) -> list[int]:
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _gf_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    return _gf_trim(out)


def _gf_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    r = list(a)
    db = len(b) - 1
    q = [0] * max(0, len(r) - db)
    inv = pow(b[-1], -1, p)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] * inv % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return _gf_trim(q), _gf_trim(r)


def _gf_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _gf_trim(list(a)), _gf_trim(list(b))
    while b:
        a, b = b, _gf_divmod(a, b, p)[1]
    return _gf_monic(a, p)


def _gf_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _gf_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _gf_divmod(_gf_mul(result, base, p), mod, p)[1]
        base = _gf_divmod(_gf_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _gf_ext_inverse(a: list[int], mod: list[int], p: int) -> list[int]:
    """Inverse of a modulo mod in GF(p)[x] (they must be coprime)."""
    r0, r1 = list(mod), _gf_divmod(a, mod, p)[1]
    t0: list[int] = []
    t1: list[int] = [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        qt = _gf_mul(q, t1, p)
        t = [(x - y) % p for x, y in zip(t0 + [0] * max(0, len(qt) - len(t0)), qt + [0] * max(0, len(t0) - len(qt)))]
        t0, t1 = t1, _gf_trim(t)
    if len(r0) != 1:
        raise ArithmeticError("elements not coprime in GF(p)[x]")
    inv = pow(r0[0], -1, p)
    return _gf_trim([c * inv % p for c in t0])


# ---------------------------------------------------------------------------
# factorization of a squarefree monic polynomial in GF(p)[x]


def _gf_factor_squarefree(f: list[int], p: int, rng: DeterministicRng) -> list[list[int]]:
    """Distinct-degree then equal-degree (Cantor-Zassenhaus) splitting; input
    monic squarefree; output monic irreducibles sorted for determinism."""
    factors: list[list[int]] = []
    v = list(f)
    h = [0, 1]  # x
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = _gf_powmod(h, p, v, p)
        diff = list(h)
        if len(diff) < 2:
            diff = diff + [0] * (2 - len(diff))
        diff[1] = (diff[1] - 1) % p
        g = _gf_gcd(_gf_trim(diff), v, p)
        if len(g) - 1 > 0:
            factors.extend(_gf_equal_degree(g, d, p, rng))
            v = _gf_divmod(v, g, p)[0]
            h = _gf_divmod(h, v, p)[1]
    if len(v) - 1 > 0:
        factors.append(_gf_monic(v, p))
    factors.sort(key=lambda fac: (len(fac), fac))
    return factors


def _gf_equal_degree(g: list[int], d: int, p: int, rng: DeterministicRng) -> list[list[int]]:
    """Split a product of distinct irreducibles, all of degree d."""
    n = len(g) - 1
    if n == d:
        return [_gf_monic(g, p)]
    e = (p**d - 1) // 2
    while True:
        r = [rng.below(p) for _ in range(n)]
        _gf_trim(r)
        if len(r) < 2:
            continue
        s = _gf_powmod(r, e, g, p)
        s = list(s) if s else [0]
        s[0] = (s[0] - 1) % p
        t = _gf_gcd(_gf_trim(s), g, p)
        if 0 < len(t) - 1 < n:
            rest = _gf_divmod(g, t, p)[0]
            return _gf_equal_degree(t, d, p, rng) + _gf_equal_degree(rest, d, p, rng)


# ---------------------------------------------------------------------------
# Hensel lifting and recombination over Z


def _balanced(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _z_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def _z_divmod_monic(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    r = list(a)
    db = len(b) - 1
    q = [0] * max(0, len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] -= c * b[j]
    return _trim(q), _trim(r)


def _hensel_lift(f: list[int], factors_p: list[list[int]], p: int, bound: int) -> tuple[list[list[int]], int]:
    """Lift a coprime monic factorization of f fom mod p to mod p^k > 2*bound.

    Linear multifactor lifting: with u_i = prod_{j != i} g_j and sigma_i the
    inverse of u_i modulo (g_i, p), the defect E = (f - prod G_i)/p^k is
    absorbed by G_i += p^k * ((E mod p) * sigma_i mod g_i).
    """
    sigmas = []
    for i, g in enumerate(factors_p):
        u = [1]
        for j, other in enumerate(factors_p):
            if j != i:
                u = _gf_mul(u, other, p)
        sigmas.append(_gf_ext_inverse(u, g, p))

    lifted = [list(g) for g in factors_p]
    pk = p
    while pk <= 2 * bound:
        prod = [1]
        for g in lifted:
            prod = _z_mul(prod, g)
        defect = [x - y for x, y in zip(f + [0] * max(0, len(prod) - len(f)), prod + [0] * max(0, len(f) - len(prod)))]
        e = [(c // pk) % p for c in defect]
        _gf_trim(e)
        new = []
        for g0, g, sigma in zip(factors_p, lifted, sigmas):
            delta = _gf_divmod(_gf_mul(e, sigma, p), g0, p)[1]
            gg = list(g) + [0] * max(0, len(delta) - len(g))
            for idx, c in enumerate(delta):
                gg[idx] += pk * _balanced(c, p)
            new.append(gg)
        lifted = new
        pk *= p
    # keep coefficients balanced mod p^k
    return [[_balanced(c, pk) for c in g] for g in lifted], pk


def _mignotte_bound(f: list[int]) -> int:
    n = len(f) - 1
    norm2 = isqrt(sum(c * c for c in f)) + 1
    return (1 << max(n - 1, 1)) * norm2


def _factor_squarefree_monic_z(f: list[int]) -> list[list[int]]:
    """Irreducible monic integer factors of a monic squarefree integer polynomial."""
    n = len(f) - 1
    if n <= 1:
        return [list(f)] if n == 1 else []
    disc = resultant_q([Fraction(c) for c in f], [Fraction(c) for c in _q_derivative([Fraction(c) for c in f])])
    disc_int = disc.numerator  # denominator is 1 for integer input
    p = 1 << 30
    while True:
        p = _next_prime(p)
        if disc_int % p != 0:
            break
    rng = DeterministicRng(0xFAC7 ^ p)
    fp = _gf_monic([c % p for c in f], p)
    modular = _gf_factor_squarefree(fp, p, rng)
    if len(modular) == 1:
        return [list(f)]
    lifted, pk = _hensel_lift(f, modular, p, _mignotte_bound(f))

    result: list[list[int]] = []
    pool = list(range(len(lifted)))
    remaining = list(f)
    size = 1
    while 2 * size <= len(pool):
        found = True
        while found:
            found = False
            for subset in combinations(pool, size):
                prod = [1]
                for i in subset:
                    prod = _z_mul(prod, lifted[i])
                cand = [_balanced(c, pk) for c in prod]
                _trim(cand)
                quot, rem = _z_divmod_monic(remaining, cand)
                if not rem:
                    result.append(cand)
                    remaining = quot
                    pool = [i for i in pool if i not in subset]
                    found = True
                    break
            if 2 * size > len(pool):
                break
        size += 1
    if len(remaining) - 1 > 0:
        result.append(remaining)
    result.sort(key=lambda fac: (len(fac), fac))
    return result


# ---------------------------------------------------------------------------
# squarefree decomposition (Yun) over Q


def _yun(f: list[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Monic squarefree decomposition: f = prod a_i^i with the a_i pairwise
    coprime and squarefree; constant parts dropped."""
    parts: list[tuple[list[Fraction], int]] = []
    g = _q_gcd(f, _q_derivative(f))
    if len(g) - 1 == 0:
        return [(list(f), 1)]
    w = _q_divmod(f, g)[0]
    y = _q_divmod(_q_derivative(f), g)[0]
    i = 1
    while len(w) - 1 > 0:
        z = [a - b for a, b in zip(y + [Fraction(0)] * max(0, len(_q_derivative(w)) - len(y)),
                                   _q_derivative(w) + [Fraction(0)] * max(0, len(y) - len(_q_derivative(w))))]
        _trim(z)
        a = _q_gcd(w, z)
        if len(a) - 1 > 0:
            parts.append((a, i))
        w = _q_divmod(w, a)[0]
        y = _q_divmod(z, a)[0]
        i += 1
    return parts


# ---------------------------------------------------------------------------
# public: factorization over Q


def factor_rational(p: Poly) -> list[tuple[Poly, int]]:
    """Factor a rational polynomial into monic irreducibles with multiplicity.

    The product of the factors (with multiplicity) times the leading
    coefficient of ``p`` reproduces ``p`` exactly.  Constants factor into
    nothing.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    coeffs = [c.as_fraction() for c in p.coeffs]
    if len(coeffs) - 1 == 0:
        return []
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]

    out: list[tuple[Poly, int]] = []
    for part, mult in _yun(monic):
        # clear denominators: g(y) = L^n * part(y / L) is integer and monic
        L = 1
        for c in part:
            L = lcm(L, c.denominator)
        n = len(part) - 1
        g = [int(c * L ** (n - k)) for k, c in enumerate(part)]
        for h in _factor_squarefree_monic_z(g):
            # map back: monic rational factor is h(L x) / L^deg(h)
            m = len(h) - 1
            factor = [Fraction(c) * Fraction(L, 1) ** k / Fraction(L) ** m for k, c in enumerate(h)]
            out.append((Poly(factor), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[1], [c.as_fraction() for c in fm[0].coeffs]))
    return out


# ---------------------------------------------------------------------------
# public: factorization over Q(zeta_N) (Trager's norm method)


def _norm_by_interpolation(p_rat: list[Fraction], shift: int, order: int) -> list[Fraction]:
    """Res_y(Phi_order(y), p(x - shift*y)) as a polynomial in x, computed by
    evaluation at deg(p)*phi + 1 integer points and Lagrange interpolation.
    The y-leading coefficient of p(x - s y) is a nonzero constant, so no
    evaluation point degenerates."""
    from .scalars import cyclotomic_coeffs, euler_phi

    phi = euler_phi(order)
    mod = [Fraction(c) for c in cyclotomic_coeffs(order)]
    n = len(p_rat) - 1
    degree = n * phi
    xs = range(degree + 1)
    values = []
    for t in xs:
        # q_t(y) = p(t - shift*y)
        q = [Fraction(0)]
        base = [Fraction(t), Fraction(-shift)]
        for c in reversed(p_rat):
            q = _q_poly_mul(q, base)
            if not q:
                q = [Fraction(0)]
            q[0] += c
            _trim(q)
        if not q:
            q = []
        values.append(resultant_q(mod, q))
    return _lagrange(list(xs), values)


def _q_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def _lagrange(xs: list[int], ys: list[Fraction]) -> list[Fraction]:
    acc = [Fraction(0)]
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        num = [yi]
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                num = _q_poly_mul(num, [Fraction(-xj), Fraction(1)])
                den *= xi - xj
        term = [c / den for c in num]
        acc = [a + b for a, b in zip(acc + [Fraction(0)] * max(0, len(term) - len(acc)),
                                     term + [Fraction(0)] * max(0, len(acc) - len(term)))]
    return _trim(acc)


def factor_over_cyclotomic(p: Poly, order: int) -> list[Poly]:
    """Factor a squarefree rational polynomial into monic irreducibles over
    Q(zeta_order).  The factors multiply back to p / lc(p)."""
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    p_rat = [c.as_fraction() for c in p.coeffs]
    if len(p_rat) - 1 == 0:
        return []
    lead = p_rat[-1]
    monic = Poly([c / lead for c in p_rat])
    if monic.degree == 1:
        return [monic]
    if not monic.is_squarefree():
        raise ValueError("factor_over_cyclotomic expects squarefree input")
    from .scalars import euler_phi

    if euler_phi(order) == 1:
        return [f for f, _ in factor_rational(monic)]

    zeta = CycScalar.zeta(order)
    monic_rat = monic.rational_coeffs()
    for shift in _shift_candidates():
        norm = _norm_by_interpolation(monic_rat, shift, order)
        if len(_q_gcd(norm, _q_derivative(norm))) - 1 == 0:
            break
    else:  # pragma: no cover - candidate stream is unbounded
        raise ArithmeticError("no squarefree norm shift found")

    result: list[Poly] = []
    for q, _ in factor_rational(Poly(norm)):
        # pull back: gcd(p(x), q(x + shift*zeta)) over Q(zeta_order)
        shifted = q.compose(Poly([zeta * shift, 1]))
        h = monic.gcd(shifted)
        if h.degree >= 1:
            result.append(h.monic())
    total = Poly.one()
    for h in result:
        total = total * h
    if total != monic:
        raise ArithmeticError("cyclotomic factors do not multiply back to the input")
    return result


def _shift_candidates():
    yield 1
    k = 1
    while True:
        yield -k
        k += 1
        yield k
