"""Finite-dimensional bialgebras and Hopf algebras as exact structure tensors.

All structure maps are matrices in the conventions of :mod:`hopflab.exactmath`:
mult is n x n^2 (for H (x) H -> H), comult is n^2 x n, unit n x 1, counit
1 x n, antipode n x n. Verification is literal matrix equality, never
numeric tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .exactmath import (
    FieldSpec, Matrix, NoSolutionError, Scalar,
    compose, invert, kron, reorder_tensor, solve_linear,
)
from .wiring import build_matrix


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    witness: Optional[str] = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Report:
    subject: str
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failing(self):
        return [c for c in self.checks if not c.ok]

    def first_failure(self) -> Optional[CheckResult]:
        for c in self.checks:
            if not c.ok:
                return c
        return None

    def __str__(self):
        lines = [f"report: {self.subject}"]
        for c in self.checks:
            mark = "ok  " if c.ok else "FAIL"
            extra = f"  [{c.witness}]" if (not c.ok and c.witness) else ""
            lines.append(f"  {mark} {c.name}{extra}")
        return "\n".join(lines)


def matrix_check(name: str, lhs: Matrix, rhs: Matrix) -> CheckResult:
    """Exact equality check with a (row, col) witness on failure."""
    if (lhs.rows, lhs.cols) != (rhs.rows, rhs.cols):
        return CheckResult(name, False, f"shape {lhs.rows}x{lhs.cols} vs {rhs.rows}x{rhs.cols}")
    if lhs == rhs:
        return CheckResult(name, True)
    for i in range(lhs.rows):
        for j in range(lhs.cols):
            if lhs[i, j] != rhs[i, j]:
                return CheckResult(name, False, f"entry ({i},{j})")
    return CheckResult(name, False, "unreachable")


@dataclass(frozen=True)
class BialgebraData:
    field: FieldSpec
    dim: int
    basis_labels: tuple
    mult: Matrix      # n x n^2
    unit: Matrix      # n x 1
    comult: Matrix    # n^2 x n
    counit: Matrix    # 1 x n

    def __post_init__(self):
        n = self.dim
        shapes = {
            "mult": (self.mult, n, n * n),
            "unit": (self.unit, n, 1),
            "comult": (self.comult, n * n, n),
            "counit": (self.counit, 1, n),
        }
        for name, (m, r, c) in shapes.items():
            if (m.rows, m.cols) != (r, c):
                raise ValueError(f"{name} must be {r}x{c}, got {m.rows}x{m.cols}")
        if len(self.basis_labels) != n:
            raise ValueError("basis label count must match the dimension")

    # -- convenience -------------------------------------------------------

    def idmat(self) -> Matrix:
        return Matrix.identity(self.field, self.dim)

    def swap(self) -> Matrix:
        return reorder_tensor(self.field, [self.dim, self.dim], [1, 0])

    def left_mult(self, x: Matrix) -> Matrix:
        """Left multiplication by a column vector x: h |-> x * h."""
        return self.mult @ kron(x, self.idmat())

    def right_mult(self, x: Matrix) -> Matrix:
        """Right multiplication by a column vector x: h |-> h * x."""
        return self.mult @ kron(self.idmat(), x)

    def basis_vector(self, i: int) -> Matrix:
        return Matrix.basis_column(self.field, self.dim, i)

    def multiply(self, x: Matrix, y: Matrix) -> Matrix:
        return self.mult @ kron(x, y)

    def comult_iterated(self, k: int) -> Matrix:
        """(Delta (x) id^(k-1)) ... Delta : H -> H^(x)(k+1)."""
        out = Matrix.identity(self.field, self.dim)
        for t in range(k):
            out = kron(self.comult, Matrix.identity(self.field, self.dim ** t)) @ out
        return out

    def tensor_square_mult(self) -> Matrix:
        """Multiplication of H (x) H: (m (x) m) (id (x) swap (x) id)."""
        n = self.dim
        mid = reorder_tensor(self.field, [n, n, n, n], [0, 2, 1, 3])
        return kron(self.mult, self.mult) @ mid


@dataclass(frozen=True)
class HopfAlgebraData:
    bialgebra: BialgebraData
    antipode: Matrix
    antipode_inverse: Matrix

    def __post_init__(self):
        n = self.bialgebra.dim
        for name, m in (("antipode", self.antipode), ("antipode_inverse", self.antipode_inverse)):
            if (m.rows, m.cols) != (n, n):
                raise ValueError(f"{name} must be {n}x{n}")

    @property
    def field(self) -> FieldSpec:
        return self.bialgebra.field

    @property
    def dim(self) -> int:
        return self.bialgebra.dim

    @property
    def basis_labels(self):
        return self.bialgebra.basis_labels

    @property
    def mult(self) -> Matrix:
        return self.bialgebra.mult

    @property
    def unit(self) -> Matrix:
        return self.bialgebra.unit

    @property
    def comult(self) -> Matrix:
        return self.bialgebra.comult

    @property
    def counit(self) -> Matrix:
        return self.bialgebra.counit

    def idmat(self) -> Matrix:
        return self.bialgebra.idmat()

    def basis_vector(self, i: int) -> Matrix:
        return self.bialgebra.basis_vector(i)


@dataclass(frozen=True)
class HopfMorphism:
    source: HopfAlgebraData   # K
    target: HopfAlgebraData   # H
    matrix: Matrix            # dim H x dim K

    def __post_init__(self):
        if (self.matrix.rows, self.matrix.cols) != (self.target.dim, self.source.dim):
            raise ValueError("morphism matrix has the wrong shape")


def identity_morphism(h: HopfAlgebraData) -> HopfMorphism:
    return HopfMorphism(h, h, h.idmat())


def compose_morphisms(outer: HopfMorphism, inner: HopfMorphism) -> HopfMorphism:
    """outer after inner: K --inner--> H --outer--> H'."""
    if inner.target is not outer.source and inner.target != outer.source:
        raise ValueError("morphisms are not composable")
    return HopfMorphism(inner.source, outer.target, outer.matrix @ inner.matrix)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def verify_bialgebra(b: BialgebraData) -> Report:
    n = b.dim
    field = b.field
    idm = b.idmat()
    one = Matrix.identity(b.field, 1)
    # large intermediate spaces (H^3, H^4) are walked sparsely
    assoc_l = build_matrix(field, [n, n, n],
                           lambda w: w.apply(0, 2, b.mult, [n]).apply(0, 2, b.mult, [n]))
    assoc_r = build_matrix(field, [n, n, n],
                           lambda w: w.apply(1, 2, b.mult, [n]).apply(0, 2, b.mult, [n]))
    coassoc_l = build_matrix(field, [n],
                             lambda w: w.apply(0, 1, b.comult, [n, n]).apply(0, 1, b.comult, [n, n]))
    coassoc_r = build_matrix(field, [n],
                             lambda w: w.apply(0, 1, b.comult, [n, n]).apply(1, 1, b.comult, [n, n]))

    def comult_of_product(w):
        return (
            w.apply(0, 1, b.comult, [n, n])
            .apply(2, 1, b.comult, [n, n])
            .permute([0, 2, 1, 3])
            .apply(0, 2, b.mult, [n])
            .apply(1, 2, b.mult, [n])
        )

    checks = [
        matrix_check("assoc", assoc_l, assoc_r),
        matrix_check("unit_left", b.mult @ kron(b.unit, idm), idm),
        matrix_check("unit_right", b.mult @ kron(idm, b.unit), idm),
        matrix_check(
            "comult_algebra_map",
            b.comult @ b.mult,
            build_matrix(field, [n, n], comult_of_product),
        ),
        matrix_check("counit_algebra_map", b.counit @ b.mult, kron(b.counit, b.counit)),
        matrix_check("comult_unit", b.comult @ b.unit, kron(b.unit, b.unit)),
        matrix_check("counit_unit", b.counit @ b.unit, one),
        matrix_check("coassoc", coassoc_l, coassoc_r),
        matrix_check("counit_left", kron(b.counit, idm) @ b.comult, idm),
        matrix_check("counit_right", kron(idm, b.counit) @ b.comult, idm),
    ]
    return Report("bialgebra", tuple(checks))


def verify_hopf(h: HopfAlgebraData) -> Report:
    b = h.bialgebra
    idm = b.idmat()
    unit_counit = b.unit @ b.counit
    checks = list(verify_bialgebra(b).checks)
    checks += [
        matrix_check("antipode_left", b.mult @ kron(h.antipode, idm) @ b.comult, unit_counit),
        matrix_check("antipode_right", b.mult @ kron(idm, h.antipode) @ b.comult, unit_counit),
        matrix_check("antipode_inverse", h.antipode @ h.antipode_inverse, idm),
        matrix_check("antipode_inverse_other_side", h.antipode_inverse @ h.antipode, idm),
    ]
    return Report("hopf", tuple(checks))


def verify_morphism(phi: HopfMorphism) -> Report:
    k, h, p = phi.source, phi.target, phi.matrix
    checks = [
        matrix_check("respects_mult", p @ k.mult, h.mult @ kron(p, p)),
        matrix_check("respects_unit", p @ k.unit, h.unit),
        matrix_check("respects_comult", h.comult @ p, kron(p, p) @ k.comult),
        matrix_check("respects_counit", h.counit @ p, k.counit),
        matrix_check("respects_antipode", h.antipode @ p, p @ k.antipode),
    ]
    return Report("hopf morphism", tuple(checks))


def antihomomorphism_report(h: HopfAlgebraData) -> Report:
    """S reverses multiplication and comultiplication."""
    b = h.bialgebra
    s = h.antipode
    sw = b.swap()
    checks = [
        matrix_check("antipode_antimult", s @ b.mult, b.mult @ kron(s, s) @ sw),
        matrix_check("antipode_anticomult", b.comult @ s, sw @ kron(s, s) @ b.comult),
        matrix_check("antipode_unit", s @ b.unit, b.unit),
        matrix_check("antipode_counit", b.counit @ s, b.counit),
    ]
    return Report("antipode antihomomorphism", tuple(checks))


# ---------------------------------------------------------------------------
# antipode by convolution inversion
# ---------------------------------------------------------------------------

def _convolution_system(b: BialgebraData, opposite: bool) -> Matrix:
    """Matrix of the linear map S |-> m (S (x) id) Delta (or the opposite
    convolution m swap (S (x) id) Delta), acting on S flattened row-major."""
    n = b.dim
    field = b.field
    mult = b.mult @ b.swap() if opposite else b.mult
    # result[d, j] = sum_{a,b,c} Delta[(a,b), j] * S[c,a] * mult[d, (c,b)]
    # unknowns S[c,a] at flat index c*n + a
    sys = Matrix.zeros(field, n * n, n * n)
    for j in range(n):
        for a in range(n):
            for bb in range(n):
                dd = b.comult[a * n + bb, j]
                if dd.is_zero():
                    continue
                for c in range(n):
                    for d in range(n):
                        mv = mult[d, c * n + bb]
                        if mv.is_zero():
                            continue
                        cur = sys[d * n + j, c * n + a]
                        sys.set(d * n + j, c * n + a, cur + dd * mv)
    return sys


def solve_antipode(b: BialgebraData):
    """Solve for the antipode as the convolution inverse of the identity.

    Returns (S, S_inverse); raises NoSolutionError("no antipode") when the
    convolution system is unsolvable or the candidate fails the two-sided
    antipode identities.
    """
    n = b.dim
    field = b.field
    target = Matrix.zeros(field, n * n, 1)
    ue = b.unit @ b.counit
    for d in range(n):
        for j in range(n):
            target.entries[(d * n + j)] = ue[d, j]
    try:
        flat = solve_linear(_convolution_system(b, opposite=False), target)
    except NoSolutionError:
        raise NoSolutionError("no antipode") from None
    s = Matrix(field, n, n, list(flat.entries))
    idm = b.idmat()
    if b.mult @ kron(idm, s) @ b.comult != ue:
        raise NoSolutionError("no antipode")
    # S^{-1} is the antipode of the co-opposite structure: solve the opposite
    # convolution m swap (S' (x) id) Delta = unit counit
    try:
        flat_inv = solve_linear(_convolution_system(b, opposite=True), target)
    except NoSolutionError:
        raise NoSolutionError("no antipode") from None
    s_inv = Matrix(field, n, n, list(flat_inv.entries))
    if s @ s_inv != idm or s_inv @ s != idm:
        # fall back to the matrix inverse; finite-dimensional antipodes are bijective
        s_inv = invert(s)
    return s, s_inv


def hopf_from_bialgebra(b: BialgebraData, antipode: Optional[Matrix] = None) -> HopfAlgebraData:
    """Attach the (computed) antipode; a supplied antipode must agree with the
    solved one."""
    s, s_inv = solve_antipode(b)
    if antipode is not None and antipode != s:
        raise ValueError("supplied antipode disagrees with the convolution inverse")
    return HopfAlgebraData(b, s, s_inv)


# ---------------------------------------------------------------------------
# duals
# ---------------------------------------------------------------------------

def dual_hopf(h: HopfAlgebraData) -> HopfAlgebraData:
    """Dual Hopf algebra in the dual basis; applying it twice returns the
    original data on the nose."""
    b = h.bialgebra
    labels = tuple(f"{l}*" for l in b.basis_labels)
    db = BialgebraData(
        field=b.field,
        dim=b.dim,
        basis_labels=labels,
        mult=b.comult.transpose(),
        unit=b.counit.transpose(),
        comult=b.mult.transpose(),
        counit=b.unit.transpose(),
    )
    return HopfAlgebraData(db, h.antipode.transpose(), h.antipode_inverse.transpose())
