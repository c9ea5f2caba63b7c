"""Document format and command-line driver.

Documents are UTF-8 JSON with every scalar as a string in the exactmath
grammar; no floats anywhere. Saving is canonical (sorted keys, dense
entries, two-space indent, trailing newline), so save . load is the
identity on bytes for canonical files. Structure constants may be given
sparsely as [i, j, "coeff"] triples and are densified on load.

Exit codes: 0 all checks pass, 1 at least one mathematical check fails,
2 input or usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from importlib import resources

import jsonschema

from .exactmath import (
    FieldSpec, Matrix, Scalar, format_scalar, parse_scalar,
)
from .hopf import (
    BialgebraData, CheckResult, HopfAlgebraData, HopfMorphism, Report,
    hopf_from_bialgebra, verify_hopf, verify_morphism,
)
from .rep import (
    ComoduleRep, ModuleRep, YDModule, verify_comodule, verify_module, verify_yd,
)

DEFAULT_FIELD_ENV = "HOPFLAB_FIELD"


class DocumentError(ValueError):
    """Schema violation or cross-reference mismatch in a document."""


# ---------------------------------------------------------------------------
# schema validation
# ---------------------------------------------------------------------------

def _load_schemas():
    store = {}
    for name in ("document", "matrix", "field"):
        text = resources.files("hopflab.schemas").joinpath(f"{name}.schema.json").read_text()
        schema = json.loads(text)
        store[schema["$id"]] = schema
    return store


_SCHEMA_STORE = None


def validate_document(data) -> None:
    global _SCHEMA_STORE
    if _SCHEMA_STORE is None:
        _SCHEMA_STORE = _load_schemas()
    root = _SCHEMA_STORE["hopflab/document.schema.json"]
    resolver = jsonschema.validators.RefResolver(
        base_uri="hopflab/", referrer=root, store=_SCHEMA_STORE)
    validator = jsonschema.Draft202012Validator(root, resolver=resolver)
    errors = sorted(validator.iter_errors(data), key=lambda e: e.json_path)
    if errors:
        e = errors[0]
        raise DocumentError(f"{e.json_path}: {e.message}")


# ---------------------------------------------------------------------------
# field and matrix (de)serialization
# ---------------------------------------------------------------------------

def field_to_json(field: FieldSpec):
    if field.kind == "rational":
        return {"kind": "rational"}
    return {"kind": "cyclotomic", "order": field.order}


def field_from_json(data) -> FieldSpec:
    if data is None:
        env = os.environ.get(DEFAULT_FIELD_ENV)
        if env:
            return parse_field_text(env)
        raise DocumentError(
            f"document carries no 'field' and {DEFAULT_FIELD_ENV} is unset")
    if data["kind"] == "rational":
        return FieldSpec.make_rational()
    return FieldSpec.cyclotomic(data["order"])


def parse_field_text(text: str) -> FieldSpec:
    text = text.strip()
    if text == "rational":
        return FieldSpec.make_rational()
    if text.startswith("cyclotomic:"):
        return FieldSpec.cyclotomic(int(text.split(":", 1)[1]))
    raise DocumentError(f"cannot parse field {text!r}")


def matrix_to_json(m: Matrix):
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [
            [format_scalar(m[i, j]) for j in range(m.cols)] for i in range(m.rows)
        ],
    }


def matrix_from_json(data, field: FieldSpec, where: str) -> Matrix:
    rows, cols = data["rows"], data["cols"]
    out = Matrix.zeros(field, rows, cols)
    if "entries" in data:
        ent = data["entries"]
        if len(ent) != rows or any(len(r) != cols for r in ent):
            raise DocumentError(f"{where}: dense entries do not match the shape")
        for i, row in enumerate(ent):
            for j, text in enumerate(row):
                out.set(i, j, parse_scalar(text, field))
    else:
        for i, j, text in data["sparse"]:
            if i >= rows or j >= cols:
                raise DocumentError(f"{where}: sparse index ({i},{j}) out of range")
            out.set(i, j, parse_scalar(text, field))
    return out


# ---------------------------------------------------------------------------
# documents
# ---------------------------------------------------------------------------

def hopf_to_json(h: HopfAlgebraData):
    b = h.bialgebra
    return {
        "kind": "hopf",
        "field": field_to_json(b.field),
        "dim": b.dim,
        "basis_labels": list(b.basis_labels),
        "mult": matrix_to_json(b.mult),
        "unit": matrix_to_json(b.unit),
        "comult": matrix_to_json(b.comult),
        "counit": matrix_to_json(b.counit),
        "antipode": matrix_to_json(h.antipode),
    }


def hopf_from_json(data) -> HopfAlgebraData:
    field = field_from_json(data.get("field"))
    n = data["dim"]
    labels = tuple(data.get("basis_labels") or (f"e{i}" for i in range(n)))
    try:
        bial = BialgebraData(
            field, n, labels,
            matrix_from_json(data["mult"], field, "mult"),
            matrix_from_json(data["unit"], field, "unit"),
            matrix_from_json(data["comult"], field, "comult"),
            matrix_from_json(data["counit"], field, "counit"),
        )
    except KeyError as e:
        raise DocumentError(f"missing field {e.args[0]!r} in hopf document") from None
    antipode = None
    if "antipode" in data:
        antipode = matrix_from_json(data["antipode"], field, "antipode")
    return hopf_from_bialgebra(bial, antipode)


def morphism_to_json(phi: HopfMorphism):
    return {
        "kind": "morphism",
        "source": hopf_to_json(phi.source),
        "target": hopf_to_json(phi.target),
        "matrix": matrix_to_json(phi.matrix),
    }


def morphism_from_json(data) -> HopfMorphism:
    src = hopf_from_json(data["source"])
    tgt = hopf_from_json(data["target"])
    if src.field != tgt.field:
        raise DocumentError("field mismatch between source and target documents")
    return HopfMorphism(src, tgt, matrix_from_json(data["matrix"], src.field, "matrix"))


def module_to_json(v: ModuleRep):
    return {
        "kind": "module",
        "algebra": hopf_to_json(v.algebra),
        "dim": v.dim,
        "action": matrix_to_json(v.action),
    }


def module_from_json(data) -> ModuleRep:
    alg = hopf_from_json(data["algebra"])
    return ModuleRep(alg, data["dim"], matrix_from_json(data["action"], alg.field, "action"))


def comodule_to_json(v: ComoduleRep):
    return {
        "kind": "comodule",
        "algebra": hopf_to_json(v.algebra),
        "dim": v.dim,
        "coaction": matrix_to_json(v.coaction),
    }


def comodule_from_json(data) -> ComoduleRep:
    alg = hopf_from_json(data["algebra"])
    return ComoduleRep(alg, data["dim"], matrix_from_json(data["coaction"], alg.field, "coaction"))


def yd_to_json(v: YDModule):
    return {
        "kind": "yd",
        "algebra": hopf_to_json(v.algebra),
        "dim": v.dim,
        "action": matrix_to_json(v.action),
        "coaction": matrix_to_json(v.coaction),
    }


def yd_from_json(data) -> YDModule:
    alg = hopf_from_json(data["algebra"])
    field = alg.field
    return YDModule(
        ModuleRep(alg, data["dim"], matrix_from_json(data["action"], field, "action")),
        ComoduleRep(alg, data["dim"], matrix_from_json(data["coaction"], field, "coaction")),
    )


def monoid_to_json(m) -> dict:
    return {
        "kind": "monoid",
        "algebra": hopf_to_json(m.algebra),
        "dim": m.dim,
        "action": matrix_to_json(m.carrier.action),
        "coaction": matrix_to_json(m.carrier.coaction),
        "mul": matrix_to_json(m.mul),
        "unit": matrix_to_json(m.unit),
    }


def monoid_from_json(data):
    from .monoid import CentralMonoid

    alg = hopf_from_json(data["algebra"])
    field = alg.field
    carrier = YDModule(
        ModuleRep(alg, data["dim"], matrix_from_json(data["action"], field, "action")),
        ComoduleRep(alg, data["dim"], matrix_from_json(data["coaction"], field, "coaction")),
    )
    return CentralMonoid(
        carrier,
        matrix_from_json(data["mul"], field, "mul"),
        matrix_from_json(data["unit"], field, "unit"),
    )


def load_document(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as e:
            raise DocumentError(f"{path}: invalid JSON ({e})") from None
    validate_document(data)
    return data


def save_document(data, path: str) -> None:
    validate_document(data)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_json(data))


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def decode_document(data):
    kind = data["kind"]
    decoders = {
        "hopf": hopf_from_json,
        "morphism": morphism_from_json,
        "module": module_from_json,
        "comodule": comodule_from_json,
        "yd": yd_from_json,
        "monoid": monoid_from_json,
    }
    if kind == "report":
        return data
    return decoders[kind](data)


# ---------------------------------------------------------------------------
# suite runner
# ---------------------------------------------------------------------------

class SuiteResult:
    def __init__(self, subject: str, seed: int, samples: int):
        self.subject = subject
        self.seed = seed
        self.samples = samples
        self.checks = []       # (id, ok, witness)
        self.timings = []      # (section, seconds)

    def add_report(self, section: str, report: Report, elapsed: float) -> None:
        for c in report.checks:
            self.checks.append((f"{section}:{c.name}", c.ok, c.witness))
        self.timings.append((section, elapsed))

    def add_check(self, check_id: str, ok: bool, witness=None) -> None:
        self.checks.append((check_id, ok, witness))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def sorted_checks(self):
        return sorted(self.checks, key=lambda c: c[0])

    def to_json(self):
        return {
            "kind": "report",
            "subject": self.subject,
            "seed": self.seed,
            "samples": self.samples,
            "counts": {
                "total": len(self.checks),
                "passed": sum(1 for _, ok, _ in self.checks if ok),
                "failed": sum(1 for _, ok, _ in self.checks if not ok),
            },
            "checks": [
                {"id": cid, "ok": ok, "witness": witness}
                for cid, ok, witness in self.sorted_checks()
            ],
        }

    def to_text(self) -> str:
        lines = [f"suite report: {self.subject}",
                 f"seed={self.seed} samples={self.samples}"]
        timing = dict(self.timings)
        by_section = {}
        for cid, ok, witness in self.sorted_checks():
            section = cid.split(":", 1)[0]
            by_section.setdefault(section, []).append((cid, ok, witness))
        for section in sorted(by_section):
            entries = by_section[section]
            passed = sum(1 for _, ok, _ in entries if ok)
            secs = timing.get(section)
            stamp = f" ({secs:.2f}s)" if secs is not None else ""
            lines.append(f"[{section}] {passed}/{len(entries)} passed{stamp}")
            for cid, ok, witness in entries:
                if not ok:
                    extra = f"  [{witness}]" if witness else ""
                    lines.append(f"  FAIL {cid}{extra}")
        lines.append("RESULT: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines) + "\n"


def _detect_taft_inclusion(phi: HopfMorphism):
    from .builders import taft_inclusion

    n = phi.source.dim
    if phi.target.dim != n * n:
        return None
    try:
        iota, _ = taft_inclusion(n)
    except Exception:
        return None
    same = (
        iota.matrix == phi.matrix
        and iota.source.bialgebra == phi.source.bialgebra
        and iota.target.bialgebra == phi.target.bialgebra
    )
    return n if same else None


def run_suite(phi: HopfMorphism, seed: int = 0, samples: int = 3) -> SuiteResult:
    """Drive the verification catalogs for one Hopf morphism.

    Deterministic given (phi, seed, samples); the seed only feeds the
    random family members, never the fixture checks."""
    from . import adjoint as adjmod
    from .families import small_family, taft_family
    from .center import braided_square_report, center_theorem_crosscheck
    from .monoid import (
        crude_monadicity_check, em_projection_report, kleisli_projection_report,
        comparison_mmodule, monad_from_monoid, monad_morphism_report,
        r_unit_monoid, swap_generic_vs_carrier, verify_central_monoid,
        verify_monoidal_monad,
    )

    n_taft = _detect_taft_inclusion(phi)
    if n_taft is not None:
        adj, fam = taft_family(n_taft, seed=seed, samples=samples)
        subject = f"taft inclusion n={n_taft}"
    else:
        adj, fam = small_family(phi, seed=seed, samples=min(samples, 2))
        subject = f"morphism {phi.source.dim} -> {phi.target.dim}"
    out = SuiteResult(subject, seed, samples)

    def section(name, fn, *args):
        t0 = time.perf_counter()
        rep = fn(*args)
        out.add_report(name, rep, time.perf_counter() - t0)

    section("hopf.K", verify_hopf, phi.source)
    section("hopf.H", verify_hopf, phi.target)
    section("morphism", verify_morphism, phi)
    section("adjunction", adjmod.verify_adjunction_axioms, adj, fam)
    section("catalog.coind", adjmod.monoidal_catalog, adj, fam)
    section("catalog.ind", adjmod.opmonoidal_catalog, adj, fam)
    section("roundtrips", adjmod.projection_roundtrips, adj, fam)
    section("mates", adjmod.mate_report, adj, fam)

    has_db = adj.has_dual_basis()
    out.add_check("dual_basis:available", True,
                  None if has_db else "absent; coinduction-side sections skipped")
    small_h = [(l, m) for l, m in fam.h_modules if m.dim <= max(4, adj.K.dim)][:5]
    yd_small = [(l, v) for l, v in fam.yd_k if v.dim <= 3][:5]
    if has_db:
        section("center", center_theorem_crosscheck, adj, yd_small, small_h[:3])
        section("center.braided", braided_square_report, adj, yd_small[:3])
        t0 = time.perf_counter()
        m = r_unit_monoid(adj)
        out.add_report("monoid.central", verify_central_monoid(m, small_h),
                       time.perf_counter() - t0)
        section("monoid.swap", swap_generic_vs_carrier, adj, m, small_h)
        data = monad_from_monoid(m, small_h)
        section("monoid.monad", verify_monoidal_monad, data, small_h)
        section("monoid.morphism", monad_morphism_report, adj, m, small_h)
        section("em.kleisli", kleisli_projection_report, m, small_h[:3])
        nonfree_src = fam.k_modules[1][1] if len(fam.k_modules) > 1 else fam.k_modules[0][1]
        nonfree = comparison_mmodule(adj, m, nonfree_src)
        section("em.projection", em_projection_report, m, small_h[:2], [("comparison", nonfree)])
        d_small = [(l, m_) for l, m_ in fam.k_modules if m_.dim <= 3][:4]
        section("monadicity", crude_monadicity_check, adj, m, d_small, small_h[:3])
    return out


def emit_report(result: SuiteResult, fmt: str) -> str:
    if fmt == "json":
        return canonical_json(result.to_json())
    return result.to_text()


def write_csv(result: SuiteResult, path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "ok", "witness"])
        for cid, ok, witness in result.sorted_checks():
            writer.writerow([cid, "pass" if ok else "fail", witness or ""])


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _write_or_print(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    data = load_document(args.document)
    obj = decode_document(data)
    kind = data["kind"]
    if kind == "hopf":
        rep = verify_hopf(obj)
    elif kind == "morphism":
        rep = verify_morphism(obj)
    elif kind == "module":
        rep = verify_module(obj)
    elif kind == "comodule":
        rep = verify_comodule(obj)
    elif kind == "yd":
        rep = verify_yd(obj)
    elif kind == "monoid":
        from .monoid import verify_central_monoid
        from .rep import regular_module, trivial_module

        objs = [("trivial", trivial_module(obj.algebra)),
                ("regular", regular_module(obj.algebra))]
        rep = verify_central_monoid(obj, objs)
    else:
        raise DocumentError(f"cannot verify documents of kind {kind!r}")
    print(rep)
    return 0 if rep.ok else 1


def _example_document(name: str, args):
    from . import builders
    from .exactmath import FieldSpec

    if name == "taft":
        return hopf_to_json(builders.taft(args.n))
    if name == "cyclic-group":
        field = FieldSpec.cyclotomic(args.n)
        return hopf_to_json(builders.group_algebra(builders.GroupTable.cyclic(args.n), field))
    if name == "sym3-group":
        return hopf_to_json(builders.group_algebra(
            builders.GroupTable.symmetric3(), FieldSpec.make_rational()))
    if name == "cyclic-function":
        field = FieldSpec.cyclotomic(args.n)
        return hopf_to_json(builders.function_algebra(builders.GroupTable.cyclic(args.n), field))
    if name == "taft-inclusion":
        iota, _ = builders.taft_inclusion(args.n)
        return morphism_to_json(iota)
    if name == "unit-inclusion":
        return morphism_to_json(builders.unit_inclusion(builders.taft(args.n)))
    if name == "yd-simple":
        return yd_to_json(builders.cyclic_yd_simple(args.n, args.i, args.j))
    if name == "a-hk":
        res = builders.a_HK(builders.biproduct(builders.nichols_line(args.n)))
        return monoid_to_json(res.monoid)
    if name == "biproduct-taft":
        bp = builders.biproduct(builders.nichols_line(args.n))
        return hopf_to_json(bp.hopf)
    raise DocumentError(f"unknown example {name!r}")


def cmd_example(args) -> int:
    data = _example_document(args.name, args)
    _write_or_print(canonical_json(data), args.output)
    return 0


def cmd_transport(args) -> int:
    from .adjoint import CotensorAdjunction, RestrictionAdjunction

    phi = morphism_from_json(load_document(args.phi))
    obj_data = load_document(args.object)
    obj = decode_document(obj_data)
    if args.operation in ("induce", "coinduce"):
        if obj_data["kind"] != "module":
            raise DocumentError(f"{args.operation} expects a module document")
        if obj.algebra.bialgebra != phi.source.bialgebra:
            raise DocumentError("field mismatch: module is not over the morphism source")
        adj = RestrictionAdjunction(phi)
        mod = adj.induce(obj)[0] if args.operation == "induce" else adj.coinduce(obj)[0]
        _write_or_print(canonical_json(module_to_json(mod)), args.output)
        return 0
    if obj_data["kind"] != "comodule":
        raise DocumentError("cotensor expects a comodule document")
    if obj.algebra.bialgebra != phi.target.bialgebra:
        raise DocumentError("field mismatch: comodule is not over the morphism target")
    cadj = CotensorAdjunction(phi)
    mod, _ = cadj.cotensor(obj)
    _write_or_print(canonical_json(comodule_to_json(mod)), args.output)
    return 0


def cmd_center(args) -> int:
    from .adjoint import CotensorAdjunction, RestrictionAdjunction
    from .center import induced_yd_coind, induced_yd_cotensor, induced_yd_ind

    phi = morphism_from_json(load_document(args.phi))
    obj = decode_document(load_document(args.object))
    if not isinstance(obj, YDModule):
        raise DocumentError("center commands expect a yd document")
    if args.direction in ("ind", "coind"):
        adj = RestrictionAdjunction(phi)
        out = induced_yd_ind(adj, obj) if args.direction == "ind" else induced_yd_coind(adj, obj)
    else:
        out = induced_yd_cotensor(CotensorAdjunction(phi), obj)
    _write_or_print(canonical_json(yd_to_json(out)), args.output)
    return 0


def cmd_monoid(args) -> int:
    from .adjoint import RestrictionAdjunction
    from .monoid import (
        MModule, crude_monadicity_check, local_check, r_unit_monoid,
        verify_central_monoid,
    )
    from .rep import regular_module, trivial_module

    phi = morphism_from_json(load_document(args.phi))
    adj = RestrictionAdjunction(phi)
    m = r_unit_monoid(adj)
    if args.operation == "r-unit":
        _write_or_print(canonical_json(monoid_to_json(m)), args.output)
        return 0
    if args.operation == "local-check":
        as_module = MModule(m, m.module, m.mul)
        ok = local_check(as_module, m.carrier)
        print(f"local(R(1) over itself): {'pass' if ok else 'fail'}")
        return 0 if ok else 1
    if args.operation == "monadicity":
        objs = [("trivial", trivial_module(phi.target)),
                ("regular", regular_module(phi.target))]
        d_objs = [("trivial", trivial_module(phi.source)),
                  ("regular", regular_module(phi.source))]
        rep = crude_monadicity_check(adj, m, d_objs, objs)
        print(rep)
        return 0 if rep.ok else 1
    if args.operation == "verify":
        objs = [("trivial", trivial_module(phi.target)),
                ("regular", regular_module(phi.target))]
        rep = verify_central_monoid(m, objs)
        print(rep)
        return 0 if rep.ok else 1
    raise DocumentError(f"unknown monoid operation {args.operation!r}")


def cmd_suite(args) -> int:
    phi = morphism_from_json(load_document(args.phi))
    result = run_suite(phi, seed=args.seed, samples=args.samples)
    text = emit_report(result, args.format)
    _write_or_print(text, args.output)
    if args.csv:
        write_csv(result, args.csv)
    if args.figure:
        from .figures import render_report_figure

        render_report_figure(result, args.figure)
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hopflab",
        description="Exact verification engine for finite-dimensional Hopf algebras.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify", help="verify the axioms of a document")
    sp.add_argument("document")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("example", help="emit a built-in example document")
    sp.add_argument("name", choices=[
        "taft", "cyclic-group", "sym3-group", "cyclic-function",
        "taft-inclusion", "unit-inclusion", "yd-simple", "a-hk", "biproduct-taft",
    ])
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--i", type=int, default=0)
    sp.add_argument("--j", type=int, default=0)
    sp.add_argument("-o", "--output")
    sp.set_defaults(fn=cmd_example)

    for op in ("induce", "coinduce", "cotensor"):
        sp = sub.add_parser(op, help=f"{op} a (co)module along a morphism")
        sp.add_argument("--phi", required=True)
        sp.add_argument("--object", required=True)
        sp.add_argument("-o", "--output")
        sp.set_defaults(fn=cmd_transport, operation=op)

    sp = sub.add_parser("center", help="induced Yetter-Drinfeld structures")
    sp.add_argument("direction", choices=["ind", "coind", "cotensor"])
    sp.add_argument("--phi", required=True)
    sp.add_argument("--object", required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(fn=cmd_center)

    sp = sub.add_parser("monoid", help="central monoid operations")
    sp.add_argument("operation", choices=["r-unit", "verify", "local-check", "monadicity"])
    sp.add_argument("--phi", required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(fn=cmd_monoid)

    sp = sub.add_parser("suite", help="run the full verification suite")
    sp.add_argument("--phi", required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=3)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.add_argument("-o", "--output")
    sp.add_argument("--csv", help="also write the checks as a CSV file")
    sp.add_argument("--figure", help="also render a summary figure (PNG/PDF)")
    sp.set_defaults(fn=cmd_suite)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
