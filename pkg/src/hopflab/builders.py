"""Constructors for the fixture zoo: group algebras, function algebras,
Taft algebras, one-dimensional Yetter-Drinfeld simples, Hopf algebras
internal to YD categories, and their bosonizations."""

from __future__ import annotations

from dataclasses import dataclass

from .exactmath import (
    FieldSpec, Matrix, Scalar, compose, invert, kron, qbinomial, qfactorial,
    reorder_tensor,
)
from .hopf import (
    BialgebraData, CheckResult, HopfAlgebraData, HopfMorphism, Report,
    hopf_from_bialgebra, matrix_check, verify_hopf,
)
from .rep import ComoduleRep, ModuleRep, YDModule, yd_braiding_of
from .wiring import Wire, build_matrix


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupTable:
    order: int
    table: tuple          # table[a][b] = index of product
    identity: int
    inverse: tuple

    def __post_init__(self):
        n = self.order
        t = self.table
        e = self.identity
        for a in range(n):
            if t[e][a] != a or t[a][e] != a:
                raise ValueError("identity fails")
            if t[a][self.inverse[a]] != e or t[self.inverse[a]][a] != e:
                raise ValueError("inverses fail")
            for b in range(n):
                for c in range(n):
                    if t[t[a][b]][c] != t[a][t[b][c]]:
                        raise ValueError("associativity fails")

    @staticmethod
    def from_table(table) -> "GroupTable":
        n = len(table)
        identity = next(
            e for e in range(n)
            if all(table[e][a] == a and table[a][e] == a for a in range(n))
        )
        inverse = tuple(
            next(b for b in range(n) if table[a][b] == identity) for a in range(n)
        )
        return GroupTable(n, tuple(tuple(r) for r in table), identity, inverse)

    @staticmethod
    def cyclic(n: int) -> "GroupTable":
        return GroupTable.from_table([[(a + b) % n for b in range(n)] for a in range(n)])

    @staticmethod
    def symmetric3() -> "GroupTable":
        perms = [
            (0, 1, 2), (1, 2, 0), (2, 0, 1),  # rotations e, c, c^2
            (0, 2, 1), (2, 1, 0), (1, 0, 2),  # transpositions
        ]
        index = {p: i for i, p in enumerate(perms)}

        def mul(p, q):  # (p*q)(x) = p(q(x))
            return tuple(p[q[x]] for x in range(3))

        return GroupTable.from_table(
            [[index[mul(perms[a], perms[b])] for b in range(len(perms))] for a in range(len(perms))]
        )


def group_algebra(g: GroupTable, field: FieldSpec) -> HopfAlgebraData:
    """Group-like basis: products follow the table, every e_a is group-like."""
    n = g.order
    zero = Scalar.zero(field)
    one = Scalar.one(field)
    mult = Matrix.zeros(field, n, n * n)
    comult = Matrix.zeros(field, n * n, n)
    counit = Matrix.zeros(field, 1, n)
    for a in range(n):
        counit.set(0, a, one)
        comult.set(a * n + a, a, one)
        for b in range(n):
            mult.set(g.table[a][b], a * n + b, one)
    unit = Matrix.basis_column(field, n, g.identity)
    labels = tuple(f"g{a}" for a in range(n))
    b = BialgebraData(field, n, labels, mult, unit, comult, counit)
    antipode = Matrix.zeros(field, n, n)
    for a in range(n):
        antipode.set(g.inverse[a], a, one)
    return HopfAlgebraData(b, antipode, antipode)  # S is an involution on group-likes


def function_algebra(g: GroupTable, field: FieldSpec) -> HopfAlgebraData:
    """k-valued functions on the group: the dual Hopf algebra of kG."""
    from .hopf import dual_hopf

    return dual_hopf(group_algebra(g, field))


# ---------------------------------------------------------------------------
# roots of unity and Taft algebras
# ---------------------------------------------------------------------------

def primitive_root(n: int):
    """(field, q) with q a primitive n-th root of unity."""
    field = FieldSpec.cyclotomic(n)
    if n == 1:
        return field, Scalar.one(field)
    if n == 2:
        return field, Scalar.from_rational(field, -1)
    return field, Scalar.generator(field)


def trivial_hopf(field: FieldSpec) -> HopfAlgebraData:
    one = Matrix.identity(field, 1)
    b = BialgebraData(field, 1, ("1",), one, one, one, one)
    return HopfAlgebraData(b, one, one)


def taft(n: int) -> HopfAlgebraData:
    """T_n(q) on the basis g^i x^k (index i*n + k), q a primitive n-th root
    of unity; relations g^n = 1, x^n = 0, g x = q x g."""
    field, q = primitive_root(n)
    dim = n * n

    def idx(i, k):
        return (i % n) * n + k

    zero = Scalar.zero(field)
    one = Scalar.one(field)
    mult = Matrix.zeros(field, dim, dim * dim)
    # (g^i x^k)(g^j x^l) = q^(-kj) g^(i+j) x^(k+l), truncating at x^n = 0
    for i in range(n):
        for k in range(n):
            for j in range(n):
                for l in range(n):
                    if k + l < n:
                        mult.set(idx(i + j, k + l), idx(i, k) * dim + idx(j, l), q ** (-k * j))
    unit = Matrix.basis_column(field, dim, idx(0, 0))
    counit = Matrix.zeros(field, 1, dim)
    for i in range(n):
        counit.set(0, idx(i, 0), one)
    labels = tuple(
        ("1" if (i, k) == (0, 0) else
         f"g^{i}" if k == 0 else f"x^{k}" if i == 0 else f"g^{i}x^{k}")
        for i in range(n) for k in range(n)
    )
    # comultiplication: Delta(g^i x^k) = (g (x) g)^i (x (x) 1 + g (x) x)^k,
    # expanded by honest multiplication in H (x) H (walked sparsely)
    def sq_multiply(u: Wire, v: Wire) -> Wire:
        return (
            u.tensor(v)
            .permute([0, 2, 1, 3])
            .apply(0, 2, mult, [dim])
            .apply(1, 2, mult, [dim])
        )

    delta_g = Wire.basis(field, (dim, dim), (idx(1, 0), idx(1, 0)))
    delta_x = Wire(field, (dim, dim), {
        (idx(0, 1), idx(0, 0)): one,
        (idx(1, 0), idx(0, 1)): one,
    })
    comult = Matrix.zeros(field, dim * dim, dim)
    for i in range(n):
        for k in range(n):
            val = Wire.basis(field, (dim, dim), (idx(0, 0), idx(0, 0)))
            for _ in range(k):
                val = sq_multiply(delta_x, val)
            for _ in range(i):
                val = sq_multiply(delta_g, val)
            for key, coeff in val.terms.items():
                comult.set(key[0] * dim + key[1], idx(i, k), coeff)
    bial = BialgebraData(field, dim, labels, mult, unit, comult, counit)
    return hopf_from_bialgebra(bial)


def taft_inclusion(n: int):
    """(iota, pi): the group algebra inclusion kC_n -> T_n(q) and the
    algebra retraction pi (g |-> g, x |-> 0) with pi iota = id."""
    t = taft(n)
    field = t.field
    k = group_algebra(GroupTable.cyclic(n), field)
    iota = Matrix.zeros(field, t.dim, n)
    one = Scalar.one(field)
    for i in range(n):
        iota.set(i * n + 0, i, one)
    pi = Matrix.zeros(field, n, t.dim)
    for i in range(n):
        pi.set(i, i * n + 0, one)
    return HopfMorphism(k, t, iota), pi


def unit_inclusion(h: HopfAlgebraData) -> HopfMorphism:
    """The unique Hopf morphism from the trivial Hopf algebra."""
    return HopfMorphism(trivial_hopf(h.field), h, h.unit)


def counit_projection(h: HopfAlgebraData) -> HopfMorphism:
    """The counit as a Hopf morphism onto the trivial Hopf algebra."""
    return HopfMorphism(h, trivial_hopf(h.field), h.counit)


def group_inclusion(sub: GroupTable, amb: GroupTable, embed, field: FieldSpec) -> HopfMorphism:
    """Hopf inclusion of group algebras along an injective homomorphism given
    as an index map."""
    ksub = group_algebra(sub, field)
    kamb = group_algebra(amb, field)
    m = Matrix.zeros(field, amb.order, sub.order)
    one = Scalar.one(field)
    for a in range(sub.order):
        m.set(embed[a], a, one)
    return HopfMorphism(ksub, kamb, m)


def cyclic_yd_simple(n: int, i: int, j: int, algebra: HopfAlgebraData = None) -> YDModule:
    """k_{i,j} over kC_n: one basis vector of degree g^i on which g acts by q^j."""
    if algebra is None:
        field, q = primitive_root(n)
        algebra = group_algebra(GroupTable.cyclic(n), field)
    else:
        field, q = algebra.field, primitive_root(n)[1]
    act = Matrix.zeros(field, 1, n)
    for a in range(n):
        act.set(0, a, q ** (j * a))
    coact = Matrix.zeros(field, n, 1)
    coact.set(i % n, 0, Scalar.one(field))
    return YDModule(ModuleRep(algebra, 1, act), ComoduleRep(algebra, 1, coact))


# ---------------------------------------------------------------------------
# Hopf algebras internal to YD categories, and bosonization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class YDHopfAlgebra:
    """Hopf algebra object B inside the YD category of K, with the braided
    bialgebra compatibility (the braiding replaces the plain swap)."""

    carrier: YDModule
    mult: Matrix     # d x d^2
    unit: Matrix     # d x 1
    comult: Matrix   # d^2 x d
    counit: Matrix   # 1 x d

    @property
    def base(self) -> HopfAlgebraData:
        return self.carrier.algebra

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @property
    def field(self):
        return self.carrier.field


def verify_yd_hopf(b: YDHopfAlgebra) -> Report:
    from .rep import tensor_yd, verify_yd

    d = b.dim
    field = b.field
    idb = Matrix.identity(field, d)
    one = Matrix.identity(field, 1)
    braid = yd_braiding_of(b.carrier, b.carrier)
    sq_mult = kron(b.mult, b.mult) @ kron(kron(idb, braid), idb)
    checks = list(verify_yd(b.carrier).checks)
    checks += [
        matrix_check("assoc", b.mult @ kron(b.mult, idb), b.mult @ kron(idb, b.mult)),
        matrix_check("unit_left", b.mult @ kron(b.unit, idb), idb),
        matrix_check("unit_right", b.mult @ kron(idb, b.unit), idb),
        matrix_check("coassoc", kron(b.comult, idb) @ b.comult, kron(idb, b.comult) @ b.comult),
        matrix_check("counit_left", kron(b.counit, idb) @ b.comult, idb),
        matrix_check("counit_right", kron(idb, b.counit) @ b.comult, idb),
        matrix_check("braided_bialgebra", b.comult @ b.mult, sq_mult @ kron(b.comult, b.comult)),
        matrix_check("counit_mult", b.counit @ b.mult, kron(b.counit, b.counit)),
        matrix_check("comult_unit", b.comult @ b.unit, kron(b.unit, b.unit)),
    ]
    # the structure maps are morphisms of YD modules
    tens = tensor_yd(b.carrier, b.carrier)
    k = b.base
    checks += [
        matrix_check("mult_module_map", b.mult @ tens.action,
                     b.carrier.action @ kron(k.idmat(), b.mult)),
        matrix_check("mult_comodule_map", b.carrier.coaction @ b.mult,
                     kron(k.idmat(), b.mult) @ tens.coaction),
        matrix_check("comult_module_map", b.comult @ b.carrier.action,
                     tens.action @ kron(k.idmat(), b.comult)),
        matrix_check("comult_comodule_map", tens.coaction @ b.comult,
                     kron(k.idmat(), b.comult) @ b.carrier.coaction),
    ]
    return Report("hopf algebra internal to the YD category", tuple(checks))


def nichols_line(n: int) -> YDHopfAlgebra:
    """k[x]/(x^n) on the YD simple k_{1,1} over kC_n: deg x = g, g x = q x,
    braided coproduct determined by x primitive."""
    field, q = primitive_root(n)
    kc = group_algebra(GroupTable.cyclic(n), field)
    d = n
    act = Matrix.zeros(field, d, n * d)
    coact = Matrix.zeros(field, n * d, d)
    one = Scalar.one(field)
    for s in range(d):
        coact.set((s % n) * d + s, s, one)
        for a in range(n):
            act.set(s, a * d + s, q ** (a * s))
    carrier = YDModule(ModuleRep(kc, d, act), ComoduleRep(kc, d, coact))
    mult = Matrix.zeros(field, d, d * d)
    for s in range(d):
        for t in range(d):
            if s + t < n:
                mult.set(s + t, s * d + t, one)
    unit = Matrix.basis_column(field, d, 0)
    counit = Matrix.zeros(field, 1, d)
    counit.set(0, 0, one)
    # braided coproduct: multiply out (x (x) 1 + 1 (x) x)^s in the braided
    # tensor-square algebra
    braid = yd_braiding_of(carrier, carrier)
    idb = Matrix.identity(field, d)
    sq_mult = kron(mult, mult) @ kron(kron(idb, braid), idb)
    delta_x = Matrix.zeros(field, d * d, 1)
    delta_x.set(1 * d + 0, 0, one)
    delta_x.set(0 * d + 1, 0, one)
    comult = Matrix.zeros(field, d * d, d)
    cur = Matrix.zeros(field, d * d, 1)
    cur.set(0, 0, one)
    for s in range(d):
        for r in range(d * d):
            comult.set(r, s, cur[r, 0])
        cur = sq_mult @ kron(delta_x, cur)
    return YDHopfAlgebra(carrier, mult, unit, comult, counit)


@dataclass(frozen=True)
class Biproduct:
    hopf: HopfAlgebraData          # H = B x| K on the basis b_s (x) k_a
    b_algebra: YDHopfAlgebra
    inclusion: HopfMorphism        # K -> H, k |-> 1 (x) k
    retraction: Matrix             # H -> K, b (x) k |-> eps_B(b) k

    @property
    def field(self):
        return self.hopf.field


def biproduct(b: YDHopfAlgebra) -> Biproduct:
    """Bosonization H = B x| K: smash-product algebra and cosmash coproduct.

    The antipode is solved by convolution inversion, never hand-coded.
    """
    rep = verify_yd_hopf(b)
    if not rep.ok:
        raise ValueError(f"not a Hopf algebra in the YD category: {rep.first_failure().name}")
    k = b.base
    field = b.field
    dB, nK = b.dim, k.dim
    dim = dB * nK

    idK = Matrix.identity(field, nK)

    # mult: (b (x) k)(c (x) l) = b (k1 . c) (x) k2 l
    mult = build_matrix(
        field, [dB, nK, dB, nK],
        lambda w: (
            w.apply(1, 1, k.comult, [nK, nK])
            .permute([0, 1, 3, 2, 4])
            .apply(1, 2, b.carrier.action, [dB])
            .apply(0, 2, b.mult, [dB])
            .apply(1, 2, k.mult, [nK])
        ),
    )
    unit = kron(b.unit, k.unit)
    # comult: (b (x) k) |-> (b1 (x) b2^(-1) k1) (x) (b2^(0) (x) k2)
    comult = build_matrix(
        field, [dB, nK],
        lambda w: (
            w.apply(0, 1, b.comult, [dB, dB])
            .apply(1, 1, b.carrier.coaction, [nK, dB])
            .apply(3, 1, k.comult, [nK, nK])
            .permute([0, 1, 3, 2, 4])
            .apply(1, 2, k.mult, [nK])
        ),
    )
    counit = kron(b.counit, k.counit)
    labels = tuple(
        f"{bl}|{kl}" for bl in (f"x^{s}" for s in range(dB)) for kl in k.basis_labels
    )
    bial = BialgebraData(field, dim, labels, mult, unit, comult, counit)
    hopf = hopf_from_bialgebra(bial)
    iota = kron(b.unit, idK)
    retr = kron(b.counit, idK)
    return Biproduct(hopf, b, HopfMorphism(k, hopf, iota), retr)


# ---------------------------------------------------------------------------
# the central monoid on B* for a bosonization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AHKResult:
    """The central monoid carried by B*, together with the identification
    onto the coinduced unit monoid and the adjunction it came from."""

    monoid: object               # CentralMonoid on the B* basis
    identification: Matrix       # B* -> CoInd(1), a central-monoid iso
    adjunction: object           # RestrictionAdjunction of the inclusion
    biproduct: Biproduct


def a_HK(bp: Biproduct) -> AHKResult:
    """The coinduced unit monoid of the inclusion K -> B x| K, transported
    onto the dual basis of B along g |-> (b |-> g(b (x) 1)) with inverse
    f |-> (b (x) k |-> f(S^{-1}(k) . b))."""
    from .adjoint import RestrictionAdjunction
    from .monoid import CentralMonoid, r_unit_monoid
    from .rep import ComoduleRep, ModuleRep, YDModule

    k = bp.b_algebra.base
    b = bp.b_algebra
    h = bp.hopf
    field = bp.field
    dB, nK = b.dim, k.dim
    hint = [kron(Matrix.basis_column(field, dB, s), k.unit) for s in range(dB)]
    adj = RestrictionAdjunction(bp.inclusion, basis_hint=hint)
    m = r_unit_monoid(adj)

    # identification J: B* -> CoInd(1) in subspace coordinates
    _, sub = adj.coinduce(_trivial_module_over(k))
    j_amb = Matrix.zeros(field, h.dim, dB)
    s_inv = k.antipode_inverse
    act_b = b.carrier.action
    for t in range(dB):
        for u in range(dB):
            for a in range(nK):
                acc = Scalar.zero(field)
                for c in range(nK):
                    sv = s_inv[c, a]
                    if not sv.is_zero():
                        av = act_b[t, c * dB + u]
                        if not av.is_zero():
                            acc = acc + sv * av
                if not acc.is_zero():
                    j_amb.set(u * nK + a, t, acc)
    j = sub.retraction @ j_amb
    if sub.inclusion @ j != j_amb:
        raise ArithmeticError("identification does not land in the coinduced subspace")
    j_inv = invert(j)

    idh = h.idmat()
    act = j_inv @ m.carrier.action @ kron(idh, j)
    coact = kron(idh, j_inv) @ m.carrier.coaction @ j
    carrier = YDModule(ModuleRep(h, dB, act), ComoduleRep(h, dB, coact))
    mul = j_inv @ m.mul @ kron(j, j)
    unit = j_inv @ m.unit
    monoid = CentralMonoid(carrier, mul, unit)
    return AHKResult(monoid, j, adj, bp)


def _trivial_module_over(k: HopfAlgebraData):
    from .rep import trivial_module

    return trivial_module(k)


def b_star_action_closed_form(bp: Biproduct) -> Matrix:
    """((b (x) k) . f)(c) = f(S^{-1}(k) . (c b)), assembled directly."""
    b = bp.b_algebra
    k = b.base
    field = bp.field
    dB, nK = b.dim, k.dim
    out = Matrix.zeros(field, dB, bp.hopf.dim * dB)
    s_inv = k.antipode_inverse
    for s in range(dB):
        for a in range(nK):
            col_h = s * nK + a
            for t in range(dB):
                for tp in range(dB):
                    acc = Scalar.zero(field)
                    for w in range(dB):
                        mv = b.mult[w, tp * dB + s]
                        if mv.is_zero():
                            continue
                        for c in range(nK):
                            sv = s_inv[c, a]
                            if not sv.is_zero():
                                av = b.carrier.action[t, c * dB + w]
                                if not av.is_zero():
                                    acc = acc + mv * sv * av
                    if not acc.is_zero():
                        out.set(tp, col_h * dB + t, acc)
    return out


def b_star_product_closed_form(bp: Biproduct) -> Matrix:
    """(f . g)(b) = f(S^{-1}((b_2)^(-1)) . b_1) g((b_2)^(0)), assembled
    directly from the braided coproduct and the coaction of B."""
    b = bp.b_algebra
    k = b.base
    field = bp.field
    dB, nK = b.dim, k.dim
    out = Matrix.zeros(field, dB, dB * dB)
    s_inv = k.antipode_inverse
    for r in range(dB):
        for s in range(dB):
            for w in range(dB):
                acc = Scalar.zero(field)
                for p in range(dB):
                    for q in range(dB):
                        dv = b.comult[p * dB + q, w]
                        if dv.is_zero():
                            continue
                        for a in range(nK):
                            cv = b.carrier.coaction[a * dB + s, q]
                            if cv.is_zero():
                                continue
                            for c in range(nK):
                                sv = s_inv[c, a]
                                if not sv.is_zero():
                                    av = b.carrier.action[r, c * dB + p]
                                    if not av.is_zero():
                                        acc = acc + dv * cv * sv * av
                if not acc.is_zero():
                    out.set(w, r * dB + s, acc)
    return out


def truncated_polynomial_iso(n: int):
    """theta: f_i |-> q^((i-1)i/2) / [i]_q! y^i identifying the Taft central
    monoid with k[y]/(y^n); returns (theta, mult of k[y]/(y^n))."""
    field, q = primitive_root(n)
    theta = Matrix.zeros(field, n, n)
    for i in range(n):
        coeff = (q ** (((i - 1) * i) // 2)) * qfactorial(i, q).inverse()
        theta.set(i, i, coeff)
    mult = Matrix.zeros(field, n, n * n)
    one = Scalar.one(field)
    for r in range(n):
        for s in range(n):
            if r + s < n:
                mult.set(r + s, r * n + s, one)
    return theta, mult


# ---------------------------------------------------------------------------
# the Taft identification
# ---------------------------------------------------------------------------

def taft_biproduct_bijection(n: int):
    """(taft_hopf, biproduct, P) where P: T -> B x| K is the Hopf-algebra
    identification g^i x^k |-> q^(i k) x^k (x) g^i, as a matrix."""
    t = taft(n)
    bp = biproduct(nichols_line(n))
    field, q = primitive_root(n)
    p = Matrix.zeros(field, bp.hopf.dim, t.dim)
    for i in range(n):
        for k in range(n):
            p.set(k * n + i, i * n + k, q ** (i * k))
    return t, bp, p


def transport_hopf(h: HopfAlgebraData, p: Matrix, labels=None) -> HopfAlgebraData:
    """Structure tensors conjugated along an invertible map p: H -> H'."""
    pinv = invert(p)
    b = BialgebraData(
        h.field, h.dim,
        labels if labels is not None else h.basis_labels,
        p @ h.mult @ kron(pinv, pinv),
        p @ h.unit,
        kron(p, p) @ h.comult @ pinv,
        h.counit @ pinv,
    )
    return HopfAlgebraData(b, p @ h.antipode @ pinv, p @ h.antipode_inverse @ pinv)
