"""Structure-constant model of a finite-dimensional Hopf algebra.

A :class:`HopfData` stores five dense tensors over a fixed basis b_0..b_{d-1}:

    mult[i][j][k]     b_i b_j = sum_k mult[i][j][k] b_k
    unit[k]           1 = sum_k unit[k] b_k
    comult[i][j][k]   Delta(b_k) = sum_{i,j} comult[i][j][k] b_i (x) b_j
    counit[k]         eps(b_k)
    antipode[i][j]    S(b_j) = sum_i antipode[i][j] b_i

Elements of H are coordinate tuples over the basis; elements of the dual H*
are coordinate tuples over the dual basis, paired by the coordinate dot
product.  Dualization transposes the picture: with these conventions the dual
Hopf algebra simply swaps mult with comult and unit with counit and
transposes the antipode, so dualizing twice is the identity on the nose.

Axiom checking is exhaustive over basis tuples; contraction loops skip zero
entries, which keeps the group-flavored example families (whose structure
constants are 0/1) fast.  All values are immutable after construction and all
operations are pure functions.
"""

from __future__ import annotations

from math import lcm
from typing import Sequence

from .errors import ParseError
from .linalg import Vector, vec_eq
from .report import VerificationReport
from .scalars import CycScalar, ONE, ZERO, as_scalar, format_scalar, parse_scalar


def format_vector(v: Sequence[CycScalar]) -> str:
    return "(" + ", ".join(format_scalar(as_scalar(e)) for e in v) + ")"


class HopfData:
    """Immutable structure-constant data for a Hopf algebra over Q(zeta_N)."""

    def __init__(self, name: str, dim: int, mult, unit, comult, counit, antipode,
                 cyclotomic_order: int = 1):
        if dim < 1:
            raise ValueError("dim must be >= 1")
        self.name = name
        self.dim = dim
        self.cyclotomic_order = cyclotomic_order
        self.mult = tuple(
            tuple(tuple(as_scalar(c) for c in row) for row in plane) for plane in mult
        )
        self.unit = tuple(as_scalar(c) for c in unit)
        self.comult = tuple(
            tuple(tuple(as_scalar(c) for c in row) for row in plane) for plane in comult
        )
        self.counit = tuple(as_scalar(c) for c in counit)
        self.antipode = tuple(tuple(as_scalar(c) for c in row) for row in antipode)
        self._validate_shapes()
        self._mult_nz: list[list[tuple[tuple[int, CycScalar], ...]]] | None = None
        self._comult_nz: list[tuple[tuple[int, int, CycScalar], ...]] | None = None
        self._antipode_nz: list[tuple[tuple[int, CycScalar], ...]] | None = None

    def _validate_shapes(self) -> None:
        d = self.dim
        if len(self.mult) != d or any(len(p) != d for p in self.mult) or any(
            len(r) != d for p in self.mult for r in p
        ):
            raise ValueError("dimension mismatch in multiplication tensor")
        if len(self.comult) != d or any(len(p) != d for p in self.comult) or any(
            len(r) != d for p in self.comult for r in p
        ):
            raise ValueError("dimension mismatch in comultiplication tensor")
        if len(self.unit) != d or len(self.counit) != d:
            raise ValueError("dimension mismatch in unit/counit vector")
        if len(self.antipode) != d or any(len(r) != d for r in self.antipode):
            raise ValueError("dimension mismatch in antipode matrix")

    # -- cached sparse views ------------------------------------------------

    @property
    def mult_nz(self) -> list[list[tuple[tuple[int, CycScalar], ...]]]:
        if self._mult_nz is None:
            self._mult_nz = [
                [
                    tuple((k, c) for k, c in enumerate(self.mult[i][j]) if not c.is_zero())
                    for j in range(self.dim)
                ]
                for i in range(self.dim)
            ]
        return self._mult_nz

    @property
    def comult_nz(self) -> list[tuple[tuple[int, int, CycScalar], ...]]:
        if self._comult_nz is None:
            d = self.dim
            buckets: list[list[tuple[int, int, CycScalar]]] = [[] for _ in range(d)]
            for i in range(d):
                plane = self.comult[i]
                for j in range(d):
                    row = plane[j]
                    for k in range(d):
                        c = row[k]
                        if not c.is_zero():
                            buckets[k].append((i, j, c))
            self._comult_nz = [tuple(b) for b in buckets]
        return self._comult_nz

    @property
    def antipode_nz(self) -> list[tuple[tuple[int, CycScalar], ...]]:
        if self._antipode_nz is None:
            d = self.dim
            self._antipode_nz = [
                tuple((i, self.antipode[i][j]) for i in range(d) if not self.antipode[i][j].is_zero())
                for j in range(d)
            ]
        return self._antipode_nz

    # -- element-level helpers -------------------------------------------------

    def unit_vector(self) -> Vector:
        return self.unit

    def counit_vector(self) -> Vector:
        return self.counit

    def basis_vector(self, k: int) -> Vector:
        return tuple(ONE if i == k else ZERO for i in range(self.dim))

    def multiply(self, x: Sequence[CycScalar], y: Sequence[CycScalar]) -> Vector:
        d = self.dim
        out = [ZERO] * d
        nz = self.mult_nz
        for i in range(d):
            xi = x[i]
            if xi.is_zero():
                continue
            row = nz[i]
            for j in range(d):
                terms = row[j]
                if not terms:
                    continue
                yj = y[j]
                if yj.is_zero():
                    continue
                f = xi * yj
                for k, c in terms:
                    out[k] = out[k] + (f if c is ONE else f * c)
        return tuple(out)

    def apply_antipode(self, x: Sequence[CycScalar]) -> Vector:
        out = [ZERO] * self.dim
        for j, xj in enumerate(x):
            if xj.is_zero():
                continue
            for i, c in self.antipode_nz[j]:
                out[i] = out[i] + xj * c
        return tuple(out)

    def apply_dual_antipode(self, phi: Sequence[CycScalar]) -> Vector:
        """S* phi = phi o S; coordinates (S*phi)_i = sum_j antipode[j][i] phi_j."""
        out = [ZERO] * self.dim
        for j, pj in enumerate(phi):
            if pj.is_zero():
                continue
            row = self.antipode[j]
            for i in range(self.dim):
                c = row[i]
                if not c.is_zero():
                    out[i] = out[i] + pj * c
        return tuple(out)

    def counit_of(self, x: Sequence[CycScalar]) -> CycScalar:
        acc = ZERO
        for e, xk in zip(self.counit, x):
            if not (e.is_zero() or xk.is_zero()):
                acc = acc + e * xk
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, HopfData):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.mult == other.mult
            and self.unit == other.unit
            and self.comult == other.comult
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"HopfData({self.name!r}, dim={self.dim}, cyclotomic={self.cyclotomic_order})"


# ---------------------------------------------------------------------------
# the evaluation pairing, convolution, and the two hit actions


def pair(phi: Sequence[CycScalar], h: Sequence[CycScalar]) -> CycScalar:
    """<phi, h>: coordinate dot product of a dual vector with an algebra vector."""
    if len(phi) != len(h):
        raise ValueError("dimension mismatch in pairing")
    acc = ZERO
    for p, x in zip(phi, h):
        if not (p.is_zero() or x.is_zero()):
            acc = acc + p * x
    return acc


def convolve(phi: Sequence[CycScalar], psi: Sequence[CycScalar], H: HopfData) -> Vector:
    """Product in H*: (phi psi)(h) = sum phi(h_(1)) psi(h_(2))."""
    if len(phi) != H.dim or len(psi) != H.dim:
        raise ValueError("dimension mismatch in convolution")
    out = [ZERO] * H.dim
    for k, terms in enumerate(H.comult_nz):
        acc = ZERO
        for i, j, c in terms:
            p, q = phi[i], psi[j]
            if not (p.is_zero() or q.is_zero()):
                acc = acc + c * p * q
        out[k] = acc
    return tuple(out)


def hit_act_alg_on_dual(h: Sequence[CycScalar], phi: Sequence[CycScalar], H: HopfData) -> Vector:
    """The action of H on H* defined by <h phi, h'> = <phi, h' h>."""
    if len(h) != H.dim or len(phi) != H.dim:
        raise ValueError("dimension mismatch in hit action")
    d = H.dim
    out = [ZERO] * d
    nz = H.mult_nz
    for r in range(d):
        acc = ZERO
        row = nz[r]
        for i in range(d):
            hi = h[i]
            if hi.is_zero():
                continue
            for k, c in row[i]:
                pk = phi[k]
                if not pk.is_zero():
                    acc = acc + hi * c * pk
        out[r] = acc
    return tuple(out)


def hit_act_dual_on_alg(phi: Sequence[CycScalar], h: Sequence[CycScalar], H: HopfData) -> Vector:
    """The dual action of H* on H: phi h = sum h_(1) <phi, h_(2)>; it satisfies
    <psi, phi h> = <psi phi, h> for every psi."""
    if len(h) != H.dim or len(phi) != H.dim:
        raise ValueError("dimension mismatch in hit action")
    out = [ZERO] * H.dim
    for k, hk in enumerate(h):
        if hk.is_zero():
            continue
        for a, b, c in H.comult_nz[k]:
            pb = phi[b]
            if not pb.is_zero():
                out[a] = out[a] + hk * c * pb
    return tuple(out)


# ---------------------------------------------------------------------------
# dualization


def dualize(H: HopfData) -> HopfData:
    """The dual Hopf algebra on the dual basis.

    With this module's index conventions the dual multiplication tensor is the
    comultiplication tensor unchanged (and vice versa), the unit and counit
    vectors swap, and the antipode transposes; dualize(dualize(H)) == H
    entry-for-entry.
    """
    d = H.dim
    antipode_t = tuple(tuple(H.antipode[j][i] for j in range(d)) for i in range(d))
    return HopfData(
        name=f"dual({H.name})",
        dim=d,
        mult=H.comult,
        unit=H.counit,
        comult=H.mult,
        counit=H.unit,
        antipode=antipode_t,
        cyclotomic_order=H.cyclotomic_order,
    )


# ---------------------------------------------------------------------------
# axiom verification


def _acc_add(acc: dict, key, value: CycScalar) -> None:
    cur = acc.get(key)
    acc[key] = value if cur is None else cur + value


def _acc_equal(a: dict, b: dict) -> bool:
    for key, value in a.items():
        other = b.get(key)
        if other is None:
            if not value.is_zero():
                return False
        elif not (value - other).is_zero():
            return False
    for key, value in b.items():
        if key not in a and not value.is_zero():
            return False
    return True


def check_axioms(H: HopfData) -> VerificationReport:
    """Exhaustively verify the Hopf axioms as exact tensor-contraction
    identities; one report item per axiom."""
    report = VerificationReport(subject=H.name, dim=H.dim, suite="axioms")
    d = H.dim
    mult_nz = H.mult_nz
    comult_nz = H.comult_nz
    anti_nz = H.antipode_nz

    # associativity: (b_i b_j) b_k == b_i (b_j b_k)
    failure = ""
    for i in range(d):
        for j in range(d):
            left_ij = mult_nz[i][j]
            for k in range(d):
                lhs: dict[int, CycScalar] = {}
                for l, c in left_ij:
                    for r, c2 in mult_nz[l][k]:
                        _acc_add(lhs, r, c * c2)
                rhs: dict[int, CycScalar] = {}
                for l, c in mult_nz[j][k]:
                    for r, c2 in mult_nz[i][l]:
                        _acc_add(rhs, r, c * c2)
                if not _acc_equal(lhs, rhs):
                    failure = f"(b{i} b{j}) b{k} != b{i} (b{j} b{k})"
                    break
            if failure:
                break
        if failure:
            break
    report.add("assoc", "multiplication is associative on all basis triples", not failure, failure)

    # unit: 1 b_j == b_j == b_j 1
    failure = ""
    one = H.unit
    for j in range(d):
        bj = H.basis_vector(j)
        if not vec_eq(H.multiply(one, bj), bj) or not vec_eq(H.multiply(bj, one), bj):
            failure = f"unit fails on b{j}"
            break
    report.add("unit", "the unit vector is a two-sided multiplicative identity", not failure, failure)

    # coassociativity: (Delta x id) Delta == (id x Delta) Delta
    failure = ""
    for k in range(d):
        lhs3: dict[tuple[int, int, int], CycScalar] = {}
        rhs3: dict[tuple[int, int, int], CycScalar] = {}
        for a, b, c in comult_nz[k]:
            for p, q, c2 in comult_nz[a]:
                _acc_add(lhs3, (p, q, b), c * c2)
            for p, q, c2 in comult_nz[b]:
                _acc_add(rhs3, (a, p, q), c * c2)
        if not _acc_equal(lhs3, rhs3):
            failure = f"coassociativity fails on b{k}"
            break
    report.add("coassoc", "comultiplication is coassociative on all basis vectors", not failure, failure)

    # counit: (eps x id) Delta == id == (id x eps) Delta
    failure = ""
    eps = H.counit
    for k in range(d):
        left = [ZERO] * d
        right = [ZERO] * d
        for a, b, c in comult_nz[k]:
            if not eps[a].is_zero():
                left[b] = left[b] + eps[a] * c
            if not eps[b].is_zero():
                right[a] = right[a] + eps[b] * c
        target = H.basis_vector(k)
        if not (vec_eq(tuple(left), target) and vec_eq(tuple(right), target)):
            failure = f"counit fails on b{k}"
            break
    report.add("counit", "the counit is a two-sided counit for the comultiplication", not failure, failure)

    # Delta is an algebra map: Delta(b_i b_j) == Delta(b_i) Delta(b_j), Delta(1) = 1 (x) 1
    failure = ""
    for i in range(d):
        for j in range(d):
            lhs2: dict[tuple[int, int], CycScalar] = {}
            for k, c in mult_nz[i][j]:
                for a, b, c2 in comult_nz[k]:
                    _acc_add(lhs2, (a, b), c * c2)
            rhs2: dict[tuple[int, int], CycScalar] = {}
            for a1, b1, c1 in comult_nz[i]:
                for a2, b2, c2 in comult_nz[j]:
                    f = c1 * c2
                    for p, cp in mult_nz[a1][a2]:
                        for q, cq in mult_nz[b1][b2]:
                            _acc_add(rhs2, (p, q), f * cp * cq)
            if not _acc_equal(lhs2, rhs2):
                failure = f"Delta(b{i} b{j}) != Delta(b{i}) Delta(b{j})"
                break
        if failure:
            break
    if not failure:
        lhs2 = {}
        for k, uk in enumerate(H.unit):
            if uk.is_zero():
                continue
            for a, b, c in comult_nz[k]:
                _acc_add(lhs2, (a, b), uk * c)
        rhs2 = {}
        for a, ua in enumerate(H.unit):
            if ua.is_zero():
                continue
            for b, ub in enumerate(H.unit):
                if not ub.is_zero():
                    _acc_add(rhs2, (a, b), ua * ub)
        if not _acc_equal(lhs2, rhs2):
            failure = "Delta(1) != 1 (x) 1"
    report.add("comult-alg-map", "comultiplication is an algebra map", not failure, failure)

    # eps is an algebra map: eps(b_i b_j) == eps(b_i) eps(b_j), eps(1) = 1
    failure = ""
    for i in range(d):
        for j in range(d):
            acc = ZERO
            for k, c in mult_nz[i][j]:
                if not eps[k].is_zero():
                    acc = acc + c * eps[k]
            if not (acc - eps[i] * eps[j]).is_zero():
                failure = f"eps(b{i} b{j}) != eps(b{i}) eps(b{j})"
                break
        if failure:
            break
    if not failure and not (H.counit_of(H.unit) - ONE).is_zero():
        failure = "eps(1) != 1"
    report.add("counit-alg-map", "counit is an algebra map", not failure, failure)

    # antipode: sum S(h_(1)) h_(2) == eps(h) 1 == sum h_(1) S(h_(2))
    left_fail = ""
    right_fail = ""
    for k in range(d):
        left = [ZERO] * d
        right = [ZERO] * d
        for a, b, c in comult_nz[k]:
            for i, cs in anti_nz[a]:
                for r, cm in mult_nz[i][b]:
                    left[r] = left[r] + c * cs * cm
            for i, cs in anti_nz[b]:
                for r, cm in mult_nz[a][i]:
                    right[r] = right[r] + c * cs * cm
        target = tuple(eps[k] * u for u in H.unit)
        if not left_fail and not vec_eq(tuple(left), target):
            left_fail = f"sum S(b{k}_(1)) b{k}_(2) != eps(b{k}) 1"
        if not right_fail and not vec_eq(tuple(right), target):
            right_fail = f"sum b{k}_(1) S(b{k}_(2)) != eps(b{k}) 1"
        if left_fail and right_fail:
            break
    report.add("antipode-left", "m(S (x) id)Delta == unit . counit", not left_fail, left_fail)
    report.add("antipode-right", "m(id (x) S)Delta == unit . counit", not right_fail, right_fail)

    return report


# ---------------------------------------------------------------------------
# the .hopf text format


_SECTIONS = ("MULT", "COMULT", "UNIT", "COUNIT", "ANTIPODE")


def parse_hopf(text: str) -> HopfData:
    """Parse the `.hopf` text format (sparse structure-constant lines)."""
    name: str | None = None
    dim: int | None = None
    order = 1
    section: str | None = None
    entries: dict[str, dict[tuple[int, ...], CycScalar]] = {s: {} for s in _SECTIONS}
    index_counts = {"MULT": 3, "COMULT": 3, "UNIT": 1, "COUNIT": 1, "ANTIPODE": 2}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "hopf":
            name = line[len("hopf"):].strip()
            continue
        if head == "dim":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError("dim expects one integer", lineno)
            dim = int(tokens[1])
            continue
        if head == "cyclotomic":
            if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) < 1:
                raise ParseError("cyclotomic expects one positive integer", lineno)
            order = int(tokens[1])
            continue
        if head in _SECTIONS:
            if len(tokens) != 1:
                raise ParseError(f"unexpected tokens after section name {head}", lineno)
            section = head
            continue
        if section is None:
            raise ParseError(f"unexpected line outside any section: {line!r}", lineno)
        if dim is None:
            raise ParseError("dim must be declared before section data", lineno)
        n_idx = index_counts[section]
        if len(tokens) < n_idx + 1:
            raise ParseError(f"{section} lines need {n_idx} indices and a scalar", lineno)
        try:
            idx = tuple(int(t) for t in tokens[:n_idx])
        except ValueError:
            raise ParseError(f"bad index in {section} line", lineno) from None
        if any(not (0 <= i < dim) for i in idx):
            raise ParseError(f"index out of range 0..{dim - 1}", lineno)
        scalar_text = line.split(None, n_idx)[n_idx]
        try:
            value = parse_scalar(scalar_text, order)
        except ParseError as exc:
            raise ParseError(f"bad scalar literal: {exc}", lineno) from None
        if idx in entries[section]:
            raise ParseError(f"duplicate {section} entry {idx}", lineno)
        entries[section][idx] = value

    if name is None:
        raise ParseError("missing 'hopf <name>' header")
    if dim is None:
        raise ParseError("missing 'dim <d>' header")

    d = dim
    mult = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    for (i, j, k), v in entries["MULT"].items():
        mult[i][j][k] = v
    comult = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    for (i, j, k), v in entries["COMULT"].items():
        comult[i][j][k] = v
    unit = [ZERO] * d
    for (k,), v in entries["UNIT"].items():
        unit[k] = v
    counit = [ZERO] * d
    for (k,), v in entries["COUNIT"].items():
        counit[k] = v
    antipode = [[ZERO] * d for _ in range(d)]
    for (i, j), v in entries["ANTIPODE"].items():
        antipode[i][j] = v

    return HopfData(name, d, mult, unit, comult, counit, antipode, cyclotomic_order=order)


def format_hopf(H: HopfData) -> str:
    """Render to the `.hopf` text format; round-trips exactly."""
    order = H.cyclotomic_order
    for group in (H.unit, H.counit):
        for c in group:
            order = lcm(order, c.order)
    for plane in (*H.mult, *H.comult):
        for row in plane:
            for c in row:
                order = lcm(order, c.order)
    for row in H.antipode:
        for c in row:
            order = lcm(order, c.order)

    def lit(c: CycScalar) -> str:
        lifted = CycScalar.from_coords(order, c.lift(order)) if c.order != order else c
        return format_scalar(lifted) if lifted.order != 1 else str(lifted.as_fraction())

    lines = [f"hopf {H.name}", f"dim {H.dim}", f"cyclotomic {order}"]
    d = H.dim
    lines.append("MULT")
    for i in range(d):
        for j in range(d):
            for k in range(d):
                c = H.mult[i][j][k]
                if not c.is_zero():
                    lines.append(f"{i} {j} {k} {lit(c)}")
    lines.append("COMULT")
    for i in range(d):
        for j in range(d):
            for k in range(d):
                c = H.comult[i][j][k]
                if not c.is_zero():
                    lines.append(f"{i} {j} {k} {lit(c)}")
    lines.append("UNIT")
    for k in range(d):
        if not H.unit[k].is_zero():
            lines.append(f"{k} {lit(H.unit[k])}")
    lines.append("COUNIT")
    for k in range(d):
        if not H.counit[k].is_zero():
            lines.append(f"{k} {lit(H.counit[k])}")
    lines.append("ANTIPODE")
    for i in range(d):
        for j in range(d):
            c = H.antipode[i][j]
            if not c.is_zero():
                lines.append(f"{i} {j} {lit(c)}")
    return "\n".join(lines) + "\n"
