"""The center, centrally primitive idempotents, and block degrees.

The splitting runs entirely over Q(zeta_N): draw a small random integer
combination z of the center basis; accept it when its minimal polynomial on
Z(H) is squarefree of degree dim Z(H); factor that polynomial over Q and push
each irreducible factor to linear factors over Q(zeta_N); the Lagrange
interpolation idempotents of z at the resulting eigenvalues are the centrally
primitive idempotents.  Every claimed property (orthogonality, idempotence,
sum = 1, centrality, square block traces) is then verified exactly; a
non-splitting factor is the hard error "field too small".

Blocks are ordered by degree, then lexicographically by idempotent
coordinates, so labels are stable for a given seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt, lcm

from .errors import FieldTooSmallError, HopfkitError, RetriesExhaustedError
from .factor import factor_over_cyclotomic, factor_rational
from .hopf import HopfData, format_vector
from .integrals import compute_integrals
from .linalg import Matrix, Vector, kernel_basis, vec_eq, vec_scale, zero_vector
from .polys import Poly
from .rng import DeterministicRng
from .scalars import CycScalar, ONE, ZERO

_RETRY_LIMIT = 32
_COEFF_RANGE = (-3, 3)


@dataclass
class BlockDecomposition:
    """Centrally primitive idempotents e_V with their block degrees dim V."""

    center_basis: list[Vector]
    idempotents: list[Vector]
    degrees: list[int]
    labels: list[str]

    @property
    def count(self) -> int:
        return len(self.idempotents)


def center(H: HopfData) -> list[Vector]:
    """Exact basis of Z(H) = {z : z b_i = b_i z for all i}."""
    d = H.dim
    nz = H.mult_nz
    rows: list[list[CycScalar]] = []
    for i in range(d):
        coeff = [[ZERO] * d for _ in range(d)]  # coeff[r][k] for z b_i - b_i z
        for k in range(d):
            for r, c in nz[k][i]:
                coeff[r][k] = coeff[r][k] + c
            for r, c in nz[i][k]:
                coeff[r][k] = coeff[r][k] - c
        for r in range(d):
            if any(not c.is_zero() for c in coeff[r]):
                rows.append(coeff[r])
    if not rows:
        return [H.basis_vector(k) for k in range(d)]
    return kernel_basis(Matrix(rows))


def _min_poly_on_center(H: HopfData, z: Vector, bound: int) -> Poly | None:
    """Monic minimal polynomial of multiplication-by-z, via the first linear
    dependency among the powers 1, z, z^2, ... (at most ``bound`` of them)."""
    from .linalg import IncrementalDependency

    tracker = IncrementalDependency()
    cur = H.unit
    for _ in range(bound + 1):
        dep = tracker.add(cur)
        if dep is not None:
            return Poly(list(dep) + [ONE])
        cur = H.multiply(cur, z)
    return None


def _structure_is_rational(H: HopfData) -> bool:
    tensors = [c for plane in H.mult for row in plane for c in row]
    tensors += [c for plane in H.comult for row in plane for c in row]
    tensors += list(H.unit) + list(H.counit) + [c for row in H.antipode for c in row]
    return all(c.is_rational() for c in tensors)


def primitive_idempotents(H: HopfData, order: int | None = None, seed: int = 0) -> BlockDecomposition:
    """Split Z(H) into centrally primitive idempotents over Q(zeta_order).

    Requires semisimple H with rational structure constants (all built-in
    families).  Raises FieldTooSmallError when an eigenvalue of the splitting
    element lives outside Q(zeta_order), RetriesExhaustedError when no good
    splitting element is found.
    """
    if order is None:
        order = H.cyclotomic_order
    if not _structure_is_rational(H):
        raise HopfkitError(
            "primitive_idempotents needs rational structure constants; "
            "rebase the input or split by other means"
        )
    compute_integrals(H)  # certifies semisimplicity (raises otherwise)

    zbasis = center(H)
    r = len(zbasis)
    if r == 0:
        raise HopfkitError("empty center; input is corrupt")

    rng = DeterministicRng(seed)
    min_poly: Poly | None = None
    z: Vector | None = None
    for attempt in range(_RETRY_LIMIT):
        # start from the documented {-3..3} range and widen on misses: the
        # splitting element needs r distinct eigenvalues, and for large
        # commutative centers a 7-value coefficient range cannot deliver that
        width = _COEFF_RANGE[1] if attempt < 2 else _COEFF_RANGE[1] + r * attempt
        coeffs = [rng.randint(-width, width) for _ in range(r)]
        cand = zero_vector(H.dim)
        for c, vec in zip(coeffs, zbasis):
            if c:
                cand = tuple(x + c * y for x, y in zip(cand, vec))
        m = _min_poly_on_center(H, cand, r)
        if m is not None and m.degree == r and m.is_squarefree():
            min_poly, z = m, cand
            break
    if min_poly is None or z is None:
        raise RetriesExhaustedError(
            f"no splitting element found for {H.name} in {_RETRY_LIMIT} draws"
        )

    # eigenvalues of z in Q(zeta_order)
    eigenvalues: list[CycScalar] = []
    for factor, _ in factor_rational(min_poly):
        if factor.degree == 1:
            eigenvalues.append(-factor[0])
            continue
        for linear in factor_over_cyclotomic(factor, order):
            if linear.degree != 1:
                raise FieldTooSmallError(
                    f"a degree-{factor.degree} central eigenvalue of {H.name} does not split "
                    f"over Q(zeta_{order}); increase the cyclotomic order"
                )
            eigenvalues.append(-linear[0])

    # Lagrange idempotents e_i = prod_{j != i} (z - mu_j) / (mu_i - mu_j), evaluated in H
    idempotents: list[Vector] = []
    for i, mu_i in enumerate(eigenvalues):
        num = H.unit
        denom = ONE
        for j, mu_j in enumerate(eigenvalues):
            if j == i:
                continue
            shifted = tuple(x - mu_j * u for x, u in zip(z, H.unit))
            num = H.multiply(num, shifted)
            denom = denom * (mu_i - mu_j)
        idempotents.append(vec_scale(num, denom.inverse()))

    _verify_idempotent_system(H, idempotents)
    degrees = block_degrees(H, idempotents)

    common = 1
    for e in idempotents:
        for c in e:
            common = lcm(common, c.order)
    order_key = [
        (deg, tuple(key for c in e for key in c.sort_key(common)))
        for deg, e in zip(degrees, idempotents)
    ]
    perm = sorted(range(len(idempotents)), key=lambda t: order_key[t])
    idempotents = [idempotents[t] for t in perm]
    degrees = [degrees[t] for t in perm]
    labels = [f"V{t}" for t in range(len(idempotents))]
    return BlockDecomposition(
        center_basis=zbasis, idempotents=idempotents, degrees=degrees, labels=labels
    )


def _verify_idempotent_system(H: HopfData, idempotents: list[Vector]) -> None:
    total = zero_vector(H.dim)
    for i, e in enumerate(idempotents):
        total = tuple(x + y for x, y in zip(total, e))
        for j, f in enumerate(idempotents):
            prod = H.multiply(e, f)
            expected = e if i == j else zero_vector(H.dim)
            if not vec_eq(prod, expected):
                raise HopfkitError(
                    f"idempotent orthogonality failed at blocks {i}, {j}: {format_vector(prod)}"
                )
    if not vec_eq(total, H.unit):
        raise HopfkitError("idempotents do not sum to the unit")
    for i, e in enumerate(idempotents):
        for k in range(H.dim):
            bk = H.basis_vector(k)
            if not vec_eq(H.multiply(e, bk), H.multiply(bk, e)):
                raise HopfkitError(f"idempotent {i} is not central")


def block_degrees(H: HopfData, idempotents: list[Vector]) -> list[int]:
    """Degrees dim V from the trace of left multiplication by e_V on H, which
    must be the perfect square (dim V)^2."""
    d = H.dim
    # diag_contrib[a] = sum_k mult[a][k][k]
    diag = [ZERO] * d
    for a in range(d):
        acc = ZERO
        plane = H.mult[a]
        for k in range(d):
            c = plane[k][k]
            if not c.is_zero():
                acc = acc + c
        diag[a] = acc
    degrees = []
    for i, e in enumerate(idempotents):
        t = ZERO
        for a, ea in enumerate(e):
            if not (ea.is_zero() or diag[a].is_zero()):
                t = t + ea * diag[a]
        if not t.is_rational():
            raise HopfkitError(f"non-square block trace at block {i}: {t}")
        q = t.as_fraction()
        if q.denominator != 1 or q < 0:
            raise HopfkitError(f"non-square block trace at block {i}: {q}")
        root = isqrt(q.numerator)
        if root * root != q.numerator:
            raise HopfkitError(f"non-square block trace at block {i}: {q}")
        degrees.append(root)
    return degrees


def blocks_report(H: HopfData, blocks: BlockDecomposition) -> "VerificationReport":
    """Re-verify every BlockDecomposition invariant as a report."""
    from .report import VerificationReport

    report = VerificationReport(subject=H.name, dim=H.dim, suite="wedderburn")
    ok = True
    try:
        _verify_idempotent_system(H, blocks.idempotents)
    except HopfkitError as exc:
        ok = False
        report.add("idempotent-system", "orthogonal central idempotents summing to 1", False, str(exc))
    if ok:
        report.add("idempotent-system", "orthogonal central idempotents summing to 1", True, "")
    report.add(
        "block-count",
        "number of blocks equals dim Z(H)",
        blocks.count == len(blocks.center_basis),
        f"{blocks.count} blocks, dim Z = {len(blocks.center_basis)}",
    )
    total = sum(deg * deg for deg in blocks.degrees)
    report.add(
        "sum-of-squares",
        "sum of squared degrees equals dim H",
        total == H.dim,
        f"sum d^2 = {total}, dim H = {H.dim}",
    )
    squares_ok = True
    witness = ""
    try:
        recomputed = block_degrees(H, blocks.idempotents)
        if recomputed != blocks.degrees:
            squares_ok = False
            witness = f"recomputed degrees {recomputed} != stored {blocks.degrees}"
    except HopfkitError as exc:
        squares_ok = False
        witness = str(exc)
    report.add("block-traces", "trace of left multiplication by e_V equals (dim V)^2", squares_ok, witness)
    return report
