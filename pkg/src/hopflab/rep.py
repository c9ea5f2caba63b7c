"""Modules, comodules, and Yetter-Drinfeld modules over a fixed Hopf algebra.

A ModuleRep stores the action matrix H (x) V -> V, a ComoduleRep the coaction
V -> H (x) V. The ambient category of vector spaces is treated as strict:
associators and unitors are identity reindexings under the lexicographic
tensor basis, so tensor products of representations are plain Kronecker
assemblies.
"""

from __future__ import annotations

from dataclasses import dataclass
import random

from .exactmath import (
    FieldSpec, Matrix, NoSolutionError, Scalar,
    compose, invert, kernel, kron, reorder_tensor,
)
from .hopf import CheckResult, HopfAlgebraData, Report, matrix_check
from .wiring import build_matrix

ISO_SEARCH_SEED = 7
ISO_SEARCH_TRIALS = 40


@dataclass(frozen=True)
class ModuleRep:
    algebra: HopfAlgebraData
    dim: int
    action: Matrix  # dim x (n * dim)

    def __post_init__(self):
        n = self.algebra.dim
        if (self.action.rows, self.action.cols) != (self.dim, n * self.dim):
            raise ValueError("action matrix has the wrong shape")

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    def idmat(self) -> Matrix:
        return Matrix.identity(self.field, self.dim)

    def act_by(self, x: Matrix) -> Matrix:
        """Action of the algebra element with coordinate column x."""
        return self.action @ kron(x, self.idmat())

    def act_basis(self, i: int) -> Matrix:
        return self.act_by(Matrix.basis_column(self.field, self.algebra.dim, i))


@dataclass(frozen=True)
class ComoduleRep:
    algebra: HopfAlgebraData
    dim: int
    coaction: Matrix  # (n * dim) x dim

    def __post_init__(self):
        n = self.algebra.dim
        if (self.coaction.rows, self.coaction.cols) != (n * self.dim, self.dim):
            raise ValueError("coaction matrix has the wrong shape")

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    def idmat(self) -> Matrix:
        return Matrix.identity(self.field, self.dim)


@dataclass(frozen=True)
class YDModule:
    module: ModuleRep
    comodule: ComoduleRep

    def __post_init__(self):
        if self.module.algebra != self.comodule.algebra:
            raise ValueError("module and comodule sides live over different Hopf algebras")
        if self.module.dim != self.comodule.dim:
            raise ValueError("module and comodule sides have different dimensions")

    @property
    def algebra(self) -> HopfAlgebraData:
        return self.module.algebra

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def field(self) -> FieldSpec:
        return self.module.field

    @property
    def action(self) -> Matrix:
        return self.module.action

    @property
    def coaction(self) -> Matrix:
        return self.comodule.coaction


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def trivial_module(h: HopfAlgebraData, dim: int = 1) -> ModuleRep:
    """Action through the counit."""
    return ModuleRep(h, dim, kron(h.counit, Matrix.identity(h.field, dim)))


def regular_module(h: HopfAlgebraData) -> ModuleRep:
    return ModuleRep(h, h.dim, h.mult)


def trivial_comodule(h: HopfAlgebraData, dim: int = 1) -> ComoduleRep:
    return ComoduleRep(h, dim, kron(h.unit, Matrix.identity(h.field, dim)))


def regular_comodule(h: HopfAlgebraData) -> ComoduleRep:
    return ComoduleRep(h, h.dim, h.comult)


def trivial_yd(h: HopfAlgebraData, dim: int = 1) -> YDModule:
    return YDModule(trivial_module(h, dim), trivial_comodule(h, dim))


def adjoint_yd(h: HopfAlgebraData) -> YDModule:
    """H with regular action and adjoint coaction h |-> h1 S(h3) (x) h2."""
    n = h.dim
    field = h.field
    coact = build_matrix(
        field, [n],
        lambda w: (
            w.apply(0, 1, h.comult, [n, n])
            .apply(1, 1, h.comult, [n, n])
            .apply(2, 1, h.antipode, [n])
            .permute([0, 2, 1])
            .apply(0, 2, h.mult, [n])
        ),
    )
    return YDModule(regular_module(h), ComoduleRep(h, n, coact))


def conjugate_module(v: ModuleRep, p: Matrix) -> ModuleRep:
    """Transport the action along an invertible base change p: V -> V'."""
    return ModuleRep(v.algebra, v.dim, p @ v.action @ kron(v.algebra.idmat(), invert(p)))


def conjugate_yd(v: YDModule, p: Matrix) -> YDModule:
    pinv = invert(p)
    mod = ModuleRep(v.algebra, v.dim, p @ v.action @ kron(v.algebra.idmat(), pinv))
    com = ComoduleRep(v.algebra, v.dim, kron(v.algebra.idmat(), p) @ v.coaction @ pinv)
    return YDModule(mod, com)


def direct_sum_modules(vs) -> ModuleRep:
    vs = list(vs)
    h = vs[0].algebra
    field = h.field
    n = h.dim
    total = sum(v.dim for v in vs)
    out = Matrix.zeros(field, total, n * total)
    off = 0
    for v in vs:
        for i in range(v.dim):
            for b in range(n):
                for j in range(v.dim):
                    val = v.action[i, b * v.dim + j]
                    if not val.is_zero():
                        out.set(off + i, b * total + off + j, val)
        off += v.dim
    return ModuleRep(h, total, out)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def verify_module(v: ModuleRep) -> Report:
    h = v.algebra
    idv = v.idmat()
    idh = h.idmat()
    checks = [
        matrix_check(
            "action_assoc",
            v.action @ kron(h.mult, idv),
            v.action @ kron(idh, v.action),
        ),
        matrix_check("action_unit", v.action @ kron(h.unit, idv), idv),
    ]
    return Report("module", tuple(checks))


def verify_comodule(v: ComoduleRep) -> Report:
    h = v.algebra
    idv = v.idmat()
    idh = h.idmat()
    checks = [
        matrix_check(
            "coaction_coassoc",
            kron(h.comult, idv) @ v.coaction,
            kron(idh, v.coaction) @ v.coaction,
        ),
        matrix_check("coaction_counit", kron(h.counit, idv) @ v.coaction, idv),
    ]
    return Report("comodule", tuple(checks))


def yd_condition_sides(v: YDModule):
    """Both sides of delta(h w) = h1 w^(-1) S(h3) (x) h2 w^(0) as matrices
    H (x) V -> H (x) V."""
    h = v.algebra
    n, d = h.dim, v.dim
    field = v.field
    lhs = v.coaction @ v.action
    rhs = build_matrix(
        field, [n, d],
        lambda w: (
            w.apply(0, 1, h.comult, [n, n])          # h1 h2 w
            .apply(1, 1, h.comult, [n, n])           # h1 h2 h3 w
            .apply(2, 1, h.antipode, [n])            # h1 h2 S(h3) w
            .apply(3, 1, v.coaction, [n, d])         # h1 h2 S(h3) w- w0
            .permute([0, 3, 2, 1, 4])                # h1 w- S(h3) h2 w0
            .apply(0, 2, h.mult, [n])
            .apply(0, 2, h.mult, [n])                # (h1 w- S(h3)) h2 w0
            .apply(1, 2, v.action, [d])              # ... (x) h2 w0
        ),
    )
    return lhs, rhs


def yd_condition_alt_sides(v: YDModule):
    """Both sides of h1 w^(-1) (x) h2 w^(0) = (h1 w)^(-1) h2 (x) (h1 w)^(0)."""
    h = v.algebra
    n, d = h.dim, v.dim
    field = v.field
    lhs = build_matrix(
        field, [n, d],
        lambda w: (
            w.apply(0, 1, h.comult, [n, n])
            .apply(2, 1, v.coaction, [n, d])
            .permute([0, 2, 1, 3])
            .apply(0, 2, h.mult, [n])
            .apply(1, 2, v.action, [d])
        ),
    )
    rhs = build_matrix(
        field, [n, d],
        lambda w: (
            w.apply(0, 1, h.comult, [n, n])
            .permute([0, 2, 1])
            .apply(0, 2, v.action, [d])
            .apply(0, 1, v.coaction, [n, d])
            .permute([0, 2, 1])
            .apply(0, 2, h.mult, [n])
        ),
    )
    return lhs, rhs


def verify_yd(v: YDModule) -> Report:
    checks = list(verify_module(v.module).checks) + list(verify_comodule(v.comodule).checks)
    lhs, rhs = yd_condition_sides(v)
    checks.append(matrix_check("yd_compatibility", lhs, rhs))
    lhs2, rhs2 = yd_condition_alt_sides(v)
    checks.append(matrix_check("yd_compatibility_alt", lhs2, rhs2))
    return Report("yetter-drinfeld module", tuple(checks))


def kron_list(field, mats, dims) -> Matrix:
    """Kronecker product where None stands for the identity of the given size."""
    out = None
    for m, d in zip(mats, dims):
        factor = m if m is not None else Matrix.identity(field, d)
        out = factor if out is None else kron(out, factor)
    return out


# ---------------------------------------------------------------------------
# tensor products, braiding, duals
# ---------------------------------------------------------------------------

def tensor_modules(v: ModuleRep, w: ModuleRep) -> ModuleRep:
    """h (v (x) w) = h1 v (x) h2 w."""
    if v.algebra != w.algebra:
        raise ValueError("modules over different algebras")
    h = v.algebra
    n = h.dim
    field = h.field
    act = build_matrix(
        field, [n, v.dim, w.dim],
        lambda x: (
            x.apply(0, 1, h.comult, [n, n])
            .permute([0, 2, 1, 3])
            .apply(0, 2, v.action, [v.dim])
            .apply(1, 2, w.action, [w.dim])
        ),
    )
    return ModuleRep(h, v.dim * w.dim, act)


def tensor_comodules(v: ComoduleRep, w: ComoduleRep) -> ComoduleRep:
    """delta(v (x) w) = v^(-1) w^(-1) (x) v^(0) (x) w^(0)."""
    if v.algebra != w.algebra:
        raise ValueError("comodules over different algebras")
    h = v.algebra
    n = h.dim
    field = h.field
    coact = build_matrix(
        field, [v.dim, w.dim],
        lambda x: (
            x.apply(0, 1, v.coaction, [n, v.dim])
            .apply(2, 1, w.coaction, [n, w.dim])
            .permute([0, 2, 1, 3])
            .apply(0, 2, h.mult, [n])
        ),
    )
    return ComoduleRep(h, v.dim * w.dim, coact)


def tensor_yd(v: YDModule, w: YDModule) -> YDModule:
    return YDModule(
        tensor_modules(v.module, w.module),
        tensor_comodules(v.comodule, w.comodule),
    )


def yd_braiding(v: YDModule, w: ModuleRep) -> Matrix:
    """Psi(v (x) w) = v^(-1) w (x) v^(0): V (x) W -> W (x) V.

    Only the coaction of v and the action of w enter, so w may be any module.
    """
    if v.algebra != w.algebra:
        raise ValueError("mismatched algebras")
    n = v.algebra.dim
    field = v.field
    return build_matrix(
        field, [v.dim, w.dim],
        lambda x: (
            x.apply(0, 1, v.coaction, [n, v.dim])
            .permute([0, 2, 1])
            .apply(0, 2, w.action, [w.dim])
        ),
    )


def yd_braiding_of(v: YDModule, w: YDModule) -> Matrix:
    return yd_braiding(v, w.module)


def left_dual_module(v: ModuleRep):
    """(V*, ev, coev) with (h f)(x) = f(S(h) x); both triangles hold exactly."""
    h = v.algebra
    n, d = h.dim, v.dim
    field = v.field
    act = Matrix.zeros(field, d, n * d)
    for b in range(n):
        mb = v.act_by(h.antipode @ Matrix.basis_column(field, n, b))
        for j1 in range(d):
            for j2 in range(d):
                val = mb[j1, j2]
                if not val.is_zero():
                    act.set(j2, b * d + j1, val)
    dual = ModuleRep(h, d, act)
    ev = Matrix.zeros(field, 1, d * d)
    coev = Matrix.zeros(field, d * d, 1)
    one = Scalar.one(field)
    for i in range(d):
        ev.set(0, i * d + i, one)
        coev.set(i * d + i, 0, one)
    return dual, ev, coev


def module_hom_space(v: ModuleRep, w: ModuleRep) -> list:
    """Deterministic basis of the space of H-linear maps V -> W."""
    if v.algebra != w.algebra:
        raise ValueError("modules over different algebras")
    h = v.algebra
    n = h.dim
    field = v.field
    rows = []
    # F act_b^V = act_b^W F for every basis element; unknown F flattened row-major
    for b in range(n):
        mv = v.act_basis(b)
        mw = w.act_basis(b)
        for i in range(w.dim):
            for j in range(v.dim):
                row = [Scalar.zero(field)] * (w.dim * v.dim)
                for k in range(v.dim):
                    row[i * v.dim + k] = row[i * v.dim + k] + mv[k, j]
                for k in range(w.dim):
                    row[k * v.dim + j] = row[k * v.dim + j] - mw[i, k]
                rows.append(row)
    sys = Matrix(field, len(rows), w.dim * v.dim, [x for r in rows for x in r])
    null = kernel(sys)
    out = []
    for t in range(null.cols):
        out.append(Matrix(field, w.dim, v.dim, null.col(t)))
    return out


def comodule_hom_space(v: ComoduleRep, w: ComoduleRep) -> list:
    """Deterministic basis of comodule morphisms: (id (x) F) delta_V = delta_W F."""
    if v.algebra != w.algebra:
        raise ValueError("comodules over different algebras")
    h = v.algebra
    n = h.dim
    field = v.field
    rows = []
    for b in range(n):
        for i in range(w.dim):
            for j in range(v.dim):
                row = [Scalar.zero(field)] * (w.dim * v.dim)
                for k in range(v.dim):
                    row[i * v.dim + k] = row[i * v.dim + k] + v.coaction[b * v.dim + k, j]
                for k in range(w.dim):
                    row[k * v.dim + j] = row[k * v.dim + j] - w.coaction[b * w.dim + i, k]
                rows.append(row)
    sys = Matrix(field, len(rows), w.dim * v.dim, [x for r in rows for x in r])
    null = kernel(sys)
    return [Matrix(field, w.dim, v.dim, null.col(t)) for t in range(null.cols)]


def yd_hom_space(v: YDModule, w: YDModule) -> list:
    """Basis of maps that are simultaneously module and comodule morphisms."""
    h = v.algebra
    n = h.dim
    field = v.field
    rows = []
    for b in range(n):
        mv = v.module.act_basis(b)
        mw = w.module.act_basis(b)
        for i in range(w.dim):
            for j in range(v.dim):
                row = [Scalar.zero(field)] * (w.dim * v.dim)
                for k in range(v.dim):
                    row[i * v.dim + k] = row[i * v.dim + k] + mv[k, j]
                for k in range(w.dim):
                    row[k * v.dim + j] = row[k * v.dim + j] - mw[i, k]
                rows.append(row)
    # comodule condition: delta_W F = (id (x) F) delta_V
    for b in range(n):
        for i in range(w.dim):
            for j in range(v.dim):
                row = [Scalar.zero(field)] * (w.dim * v.dim)
                for k in range(w.dim):
                    row[k * v.dim + j] = row[k * v.dim + j] + w.coaction[b * w.dim + i, k]
                for k in range(v.dim):
                    row[i * v.dim + k] = row[i * v.dim + k] - v.coaction[b * v.dim + k, j]
                rows.append(row)
    sys = Matrix(field, len(rows), w.dim * v.dim, [x for r in rows for x in r])
    null = kernel(sys)
    return [Matrix(field, w.dim, v.dim, null.col(t)) for t in range(null.cols)]


def find_module_iso(v: ModuleRep, w: ModuleRep):
    """Search for an invertible H-linear map V -> W.

    Deterministic: tries hom-basis elements, then pairwise sums, then seeded
    random small-integer combinations (seed ISO_SEARCH_SEED). Returns None if
    nothing invertible is found.
    """
    if v.dim != w.dim:
        return None
    basis = module_hom_space(v, w)
    return _invertible_combination(basis, v.field)


def _invertible_combination(basis, field):
    if not basis:
        return None

    def try_mat(m):
        try:
            invert(m)
            return True
        except NoSolutionError:
            return False

    for m in basis:
        if try_mat(m):
            return m
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            m = basis[i] + basis[j]
            if try_mat(m):
                return m
    rng = random.Random(ISO_SEARCH_SEED)
    for _ in range(ISO_SEARCH_TRIALS):
        m = Matrix.zeros(field, basis[0].rows, basis[0].cols)
        for b in basis:
            m = m + b.scale(Scalar.from_rational(field, rng.randint(-3, 3)))
        if try_mat(m):
            return m
    return None
