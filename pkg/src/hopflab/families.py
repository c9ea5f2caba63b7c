"""Deterministic labelled object families used by the verification catalogs.

Checks in this package are extensional: a diagram "commutes" when its two
composite matrices agree on every member of a finite family. The family is
fixed per adjunction: simple modules, the regular module, one tensor
square, a dual, and seeded random base changes of direct sums.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .exactmath import Matrix, NoSolutionError, Scalar, invert
from .hopf import HopfAlgebraData, HopfMorphism
from .rep import (
    ComoduleRep, ModuleRep, YDModule,
    adjoint_yd, conjugate_module, conjugate_yd, direct_sum_modules,
    left_dual_module, regular_module, tensor_modules, tensor_yd,
    trivial_module, trivial_yd,
)


@dataclass
class ObjectFamily:
    """Labelled modules on both sides of a restriction adjunction, plus
    Yetter-Drinfeld versions where available."""

    h_modules: list          # (label, ModuleRep over H) -- the acting side
    k_modules: list          # (label, ModuleRep over K) -- the coinduced side
    yd_h: list               # (label, YDModule over H)
    yd_k: list               # (label, YDModule over K)
    seed: int = 0

    def pairs(self, xs, ys, limit=None):
        """Deterministic pairing: each list member appears at least once,
        and large objects get paired against small ones (reversed zip) to
        keep tensor dimensions moderate."""
        out = []
        m = max(len(xs), len(ys))
        for t in range(m):
            out.append((xs[t % len(xs)], ys[(len(ys) - 1 - t) % len(ys)]))
        first = (xs[0], ys[0])
        if first not in out:
            out.append(first)
        return out[:limit] if limit else out

    def triples(self, xs, ys, zs, limit=None):
        out = []
        m = max(len(xs), len(ys), len(zs))
        for t in range(m):
            out.append((
                xs[t % len(xs)],
                ys[(len(ys) - 1 - t) % len(ys)],
                zs[(t + 1) % len(zs)],
            ))
        return out[:limit] if limit else out


def seeded_invertible(field, dim: int, rng: random.Random) -> Matrix:
    """Small-entry invertible matrix; retries deterministically."""
    while True:
        m = Matrix(field, dim, dim, [
            Scalar.from_rational(field, rng.randint(-2, 2)) for _ in range(dim * dim)
        ])
        try:
            invert(m)
            return m
        except NoSolutionError:
            continue


def random_module(base_objects, rng: random.Random, max_summands=2) -> ModuleRep:
    """Seeded random module: a direct sum of family members conjugated by a
    random invertible base change (hence always a valid module)."""
    count = rng.randint(1, max_summands)
    parts = [base_objects[rng.randrange(len(base_objects))] for _ in range(count)]
    total = direct_sum_modules(parts)
    p = seeded_invertible(total.field, total.dim, rng)
    return conjugate_module(total, p)


def random_yd(base_objects, rng: random.Random) -> YDModule:
    parts = [base_objects[rng.randrange(len(base_objects))] for _ in range(rng.randint(1, 2))]
    out = parts[0]
    for v in parts[1:]:
        out = _yd_direct_sum(out, v)
    p = seeded_invertible(out.field, out.dim, rng)
    return conjugate_yd(out, p)


def _yd_direct_sum(v: YDModule, w: YDModule) -> YDModule:
    mod = direct_sum_modules([v.module, w.module])
    h = v.algebra
    n = h.dim
    field = v.field
    total = v.dim + w.dim
    coact = Matrix.zeros(field, n * total, total)
    for b in range(n):
        for i in range(v.dim):
            for j in range(v.dim):
                val = v.coaction[b * v.dim + i, j]
                if not val.is_zero():
                    coact.set(b * total + i, j, val)
        for i in range(w.dim):
            for j in range(w.dim):
                val = w.coaction[b * w.dim + i, j]
                if not val.is_zero():
                    coact.set(b * total + v.dim + i, v.dim + j, val)
    return YDModule(mod, ComoduleRep(h, total, coact))


def character_module(h: HopfAlgebraData, values) -> ModuleRep:
    """One-dimensional module from an algebra character given as a row of
    scalars on the basis."""
    act = Matrix(h.field, 1, h.dim, list(values))
    return ModuleRep(h, 1, act)


def taft_character(t: HopfAlgebraData, n: int, a: int) -> ModuleRep:
    """The 1-dimensional T_n(q)-module g |-> q^a, x |-> 0."""
    from .builders import primitive_root

    _, q = primitive_root(n)
    vals = []
    for i in range(n):
        for k in range(n):
            vals.append(q ** (a * i) if k == 0 else Scalar.zero(t.field))
    return character_module(t, vals)


def taft_family(n: int, seed: int = 0, samples: int = 3):
    """The deterministic family for the inclusion kC_n -> T_n(q):
    all simples k_{i,j}, the regular modules, one tensor square, a left
    dual, plus seeded random modules."""
    from .builders import cyclic_yd_simple, taft_inclusion

    iota, _ = taft_inclusion(n)
    t, kc = iota.target, iota.source
    rng = random.Random(seed)

    simples = [((i, j), cyclic_yd_simple(n, i, j, kc)) for i in range(n) for j in range(n)]
    yd_k = [(f"simple({i},{j})", v) for (i, j), v in simples]
    k_mods = [(f"simple(0,{j})", cyclic_yd_simple(n, 0, j, kc).module) for j in range(n)]
    k_mods.append(("regularK", regular_module(kc)))
    tensor_sq = tensor_modules(simples[1][1].module, simples[min(n, 2)][1].module)
    k_mods.append(("tensor_square", tensor_sq))
    base = [v.module for _, v in simples]
    for s in range(samples):
        k_mods.append((f"rand{s}", random_module(base, rng)))
    yd_base = [v for _, v in simples]
    yd_k += [(f"ydrand{s}", random_yd(yd_base, rng)) for s in range(min(samples, 2))]

    chars = [(f"char({a})", taft_character(t, n, a)) for a in range(min(n, 2))]
    from .adjoint import RestrictionAdjunction

    adj = RestrictionAdjunction(iota)
    v01 = adj.induce(cyclic_yd_simple(n, 0, 1, kc).module)[0]
    dual_v, _, _ = left_dual_module(v01)
    h_mods = [("trivH", trivial_module(t))] + chars + [
        ("ind(k01)", v01),
        ("dual(ind(k01))", dual_v),
        ("regularH", regular_module(t)),
        ("tensorH", tensor_modules(chars[-1][1], v01)),
    ]
    rngh = random.Random(seed + 1)
    h_base = [m for _, m in chars] + [v01]
    h_mods.append(("randH0", random_module(h_base, rngh)))

    yd_h = [("trivH", trivial_yd(t)), ("adjointH", adjoint_yd(t))]
    return adj, ObjectFamily(h_mods, k_mods, yd_h, yd_k, seed)


def small_family(phi: HopfMorphism, seed: int = 0, samples: int = 2):
    """Generic family for an arbitrary Hopf morphism: trivial and regular
    modules, a tensor square, and seeded random base changes."""
    from .adjoint import RestrictionAdjunction

    k, h = phi.source, phi.target
    rng = random.Random(seed)
    k_mods = [("trivK", trivial_module(k)), ("regularK", regular_module(k))]
    k_mods.append(("tensorK", tensor_modules(trivial_module(k), regular_module(k))))
    base_k = [trivial_module(k), regular_module(k)]
    for s in range(samples):
        k_mods.append((f"rand{s}", random_module([base_k[0]], rng)))
    h_mods = [("trivH", trivial_module(h)), ("regularH", regular_module(h))]
    rngh = random.Random(seed + 1)
    h_mods.append(("randH0", random_module([trivial_module(h)], rngh)))
    yd_h = [("trivH", trivial_yd(h)), ("adjointH", adjoint_yd(h))]
    yd_k = [("trivK", trivial_yd(k)), ("adjointK", adjoint_yd(k))]
    return RestrictionAdjunction(phi), ObjectFamily(h_mods, k_mods, yd_h, yd_k, seed)
