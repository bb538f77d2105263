"""The ``cdelab`` command-line driver.

Exit codes: 0 success, 2 input or schema error, 3 audit failure,
4 unsupported input (non-split algebra, degenerate parameter).
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from importlib import resources

import jsonschema

from . import __version__
from .algebra import Representation, extend_scalars, make_algebra, primitive_idempotents
from .category_o import duality_report
from .cde import cde_verify
from .errors import AuditError, CdeLabError, InputError, SchemaError, UnsupportedError
from .hecke import HeckeSpec, hecke_algebra, hecke_k_simples, symmetry_audit
from .lattices import exact_defect_valuation, lift_idempotent_trunc, series_to_ratfunc
from .scalars import FunctionField, parse_scalar

EXIT_OK, EXIT_INPUT, EXIT_AUDIT, EXIT_UNSUPPORTED = 0, 2, 3, 4

BUILTINS = {
    "trivial": {"field": {"cyclotomic_order": 1}, "dimension": 1, "unit": 1,
                "structure": [[[[1, "1"]]]], "labels": ["1"]},
    "hecke-a1": {"field": {"cyclotomic_order": 1}, "dimension": 2, "unit": 1,
                 "structure": [[[[1, "1"]], [[2, "1"]]], [[[2, "1"]], [[1, "-1 + t"], [2, "-2 + t"]]]],
                 "labels": ["1", "s"]},
}


@dataclass
class JobSpec:
    kind: str  # verify-cde | hecke-example | osl2-duality | lift-demo
    params: dict = field(default_factory=dict)
    output: str | None = None
    format: str = "json"


# -- algebra documents ---------------------------------------------------------


def _schema():
    return json.loads(resources.files("cdelab").joinpath("algebra.schema.json").read_text())


def _pointer(path):
    return "/" + "/".join(str(p) for p in path)


def _scalar(text, order, path):
    try:
        return parse_scalar(text if isinstance(text, str) else str(text), order)
    except InputError as exc:
        raise SchemaError(str(exc), _pointer(path)) from exc


def load_algebra_document(doc):
    """(algebra over R, list of K-simples or None) from a parsed JSON document."""
    try:
        jsonschema.validate(doc, _schema())
    except jsonschema.ValidationError as exc:
        raise SchemaError(exc.message, _pointer(exc.absolute_path)) from exc
    order = doc["field"]["cyclotomic_order"]
    d = doc["dimension"]
    if not 1 <= doc["unit"] <= d:
        raise SchemaError(f"unit index must lie in 1..{d}", "/unit")
    st = doc["structure"]
    if len(st) != d:
        raise SchemaError(f"expected {d} rows, got {len(st)}", "/structure")
    K = FunctionField(order)
    table = []
    for i, row in enumerate(st):
        if len(row) != d:
            raise SchemaError(f"expected {d} entries, got {len(row)}", _pointer(["structure", i]))
        trow = []
        for j, terms in enumerate(row):
            vec = [K.zero] * d
            for n, (k, c) in enumerate(terms):
                if not 1 <= k <= d:
                    raise SchemaError(f"basis index {k} outside 1..{d}", _pointer(["structure", i, j, n, 0]))
                x = _scalar(c, order, ["structure", i, j, n, 1])
                if not x.is_integral():
                    raise SchemaError(f"structure constant {c} is not regular at t=0",
                                      _pointer(["structure", i, j, n, 1]))
                vec[k - 1] = vec[k - 1] + x
            trow.append(vec)
        table.append(trow)
    labels = doc.get("labels")
    if labels is not None and len(labels) != d:
        raise SchemaError(f"expected {d} labels", "/labels")
    A = make_algebra(table, doc["unit"], "R", order, labels)
    simples = None
    if "K_simples" in doc:
        AK = extend_scalars(A, "K")
        simples = []
        for s, entry in enumerate(doc["K_simples"]):
            mats = entry["matrices"]
            if len(mats) != d:
                raise SchemaError(f"expected {d} action matrices", _pointer(["K_simples", s, "matrices"]))
            conv = [[[_scalar(x, order, ["K_simples", s, "matrices", b, r, c]) for c, x in enumerate(row)]
                     for r, row in enumerate(m)] for b, m in enumerate(mats)]
            simples.append(Representation(AK, conv, Representation.SIMPLE, entry.get("label", f"M{s + 1}")))
    return A, simples


def load_algebra(source):
    """An algebra document from a builtin name or a JSON file path."""
    if source in BUILTINS:
        return load_algebra_document(BUILTINS[source])
    try:
        with open(source, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg} (line {exc.lineno})") from exc
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from exc
    return load_algebra_document(doc)


# -- jobs ------------------------------------------------------------------------


def _verify(p):
    A, simples = load_algebra(p["input"])
    rep = cde_verify(A, simples, raise_on_failure=False)
    return rep.to_json(), rep.passed


def _hecke(p):
    spec = HeckeSpec.parse(p["type"], p["q"], p.get("cyclo", 1))
    A = hecke_algebra(spec)
    rep = cde_verify(A, hecke_k_simples(spec), raise_on_failure=False)
    out = rep.to_json()
    passed = rep.passed
    if spec.type == "A2":
        sym = symmetry_audit(spec, rep)
        out["audits"].append(sym.to_json())
        passed = passed and sym.passed
        out["passed"] = passed
    out["q"] = str(spec.q)
    out["q_at_zero"] = str(spec.q0)
    return out, passed


def _osl2(p):
    rep = duality_report(p["gamma"], p["depth"], deform=p.get("deform", True), raise_on_mismatch=False)
    out = rep.to_json()
    out["table"] = rep.table()
    return out, rep.passed


def _parse_idempotent(text, A):
    Abar = extend_scalars(A, "k")
    if text.startswith("primitive:"):
        try:
            i = int(text.split(":", 1)[1])
        except ValueError as exc:
            raise InputError(f"bad idempotent index in {text!r}") from exc
        elems = primitive_idempotents(Abar).elements
        if not 1 <= i <= len(elems):
            raise InputError(f"primitive idempotent index {i} outside 1..{len(elems)}")
        return elems[i - 1]
    parts = [s.strip() for s in text.split(",")]
    vals = []
    for s in parts:
        x = parse_scalar(s, A.order)
        if not x.is_constant():
            raise InputError(f"idempotent coordinate {s!r} must not involve t")
        vals.append(x.at_zero())
    return vals


def _lift(p):
    A, _ = load_algebra(p["input"])
    ebar = _parse_idempotent(p["idempotent"], A)
    N = p["precision"]
    e, steps = lift_idempotent_trunc(ebar, A, N)
    v = exact_defect_valuation(A, e)
    ok = v >= N
    return {
        "idempotent": [str(c) for c in ebar],
        "precision": N,
        "newton_steps": steps,
        "lift": [str(series_to_ratfunc(c)) for c in e],
        "defect_valuation": "inf" if v == float("inf") else v,
        "passed": ok,
    }, ok


JOBS = {"verify-cde": _verify, "hecke-example": _hecke, "osl2-duality": _osl2, "lift-demo": _lift}


def run_job(job):
    """(report dict, passed) for a job; library errors propagate."""
    if job.kind not in JOBS:
        raise InputError(f"unknown job kind {job.kind!r}")
    result, passed = JOBS[job.kind](job.params)
    report = {"job": {"kind": job.kind, "params": job.params}, "result": result, "version": __version__}
    return report, passed


def serialize(report):
    return json.dumps(report, sort_keys=True, indent=2, default=str) + "\n"


# -- tables ----------------------------------------------------------------------


def _matrix_lines(name, m):
    if not m:
        return [f"{name} = []"]
    w = max(len(str(x)) for r in m for x in r)
    lines = [f"{name} ="]
    lines += ["  [" + " ".join(str(x).rjust(w) for x in r) + "]" for r in m]
    return lines


def _audit_lines(audits):
    return [f"  [{'pass' if a['passed'] else 'FAIL'}] {a['name']}" for a in audits]


def render_table(report):
    res = report["result"]
    kind = report["job"]["kind"]
    lines = [f"cdelab {report['version']} - {kind}"]
    if kind in ("verify-cde", "hecke-example"):
        if "q" in res:
            lines.append(f"q = {res['q']}  (q at t=0: {res['q_at_zero']})")
        lines.append("K-simples: " + ", ".join(f"{s['label']} (dim {s['dimension']})" for s in res["K_simples"]))
        lines.append("k-simples:")
        lines += [f"  {i + 1}. {s['label']}" for i, s in enumerate(res["k_simples"])]
        for name in ("D", "C", "E"):
            lines += _matrix_lines(name, res[name])
        lines.append("audits:")
        lines += _audit_lines(res["audits"])
    elif kind == "osl2-duality":
        lines.append(res["table"])
        if res["audits"]:
            lines.append("audits:")
            lines += _audit_lines(res["audits"])
    else:
        lines.append(f"idempotent: {res['idempotent']}")
        lines.append(f"lift (mod t^{res['precision']}, {res['newton_steps']} Newton steps):")
        lines += [f"  {c}" for c in res["lift"]]
        lines.append(f"valuation of e^2 - e: {res['defect_valuation']}")
    lines.append("result: " + ("PASS" if res["passed"] else "FAIL"))
    return "\n".join(lines) + "\n"


# -- argument parsing ------------------------------------------------------------


def _gamma_list(values):
    out = []
    for v in values:
        for part in v.split(","):
            part = part.strip()
            if part:
                try:
                    out.append(int(part))
                except ValueError as exc:
                    raise InputError(f"gamma entries must be integers, got {part!r}") from exc
    if not out:
        raise InputError("--gamma needs at least one integer")
    return out


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--output", help="write the report here instead of stdout")
    parser = argparse.ArgumentParser(prog="cdelab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"cdelab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="decomposition and Cartan matrices of an algebra")
    p.add_argument("--input", required=True, help=f"JSON file or builtin ({', '.join(BUILTINS)})")

    p = sub.add_parser("hecke", parents=[common], help="Hecke algebra of type A1 or A2")
    p.add_argument("--type", required=True, choices=["A1", "A2"])
    p.add_argument("--q", required=True, help="parameter, e.g. 'z + t'")
    p.add_argument("--cyclo", type=int, default=1, help="cyclotomic order n of k = Q(zeta_n)")

    p = sub.add_parser("osl2", parents=[common], help="duality table in truncated category O for sl2")
    p.add_argument("--gamma", required=True, nargs="+", help="integer weights, e.g. 2 or 4,0")
    p.add_argument("--depth", required=True, type=int)
    p.add_argument("--no-deform", action="store_true", help="work with the undeformed window over k")

    p = sub.add_parser("lift", parents=[common], help="truncated lifting of an idempotent")
    p.add_argument("--input", required=True)
    p.add_argument("--idempotent", required=True, help="'c1,c2,...' over k or 'primitive:i'")
    p.add_argument("--precision", required=True, type=int)
    return parser


def job_from_args(args):
    if args.command == "verify":
        kind, params = "verify-cde", {"input": args.input}
    elif args.command == "hecke":
        kind, params = "hecke-example", {"type": args.type, "q": args.q, "cyclo": args.cyclo}
    elif args.command == "osl2":
        kind, params = "osl2-duality", {"gamma": _gamma_list(args.gamma), "depth": args.depth,
                                        "deform": not args.no_deform}
    else:
        kind, params = "lift-demo", {"input": args.input, "idempotent": args.idempotent,
                                     "precision": args.precision}
    return JobSpec(kind, params, args.output, args.format)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        job = job_from_args(args)
        report, passed = run_job(job)
    except InputError as exc:
        print(f"cdelab: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UnsupportedError as exc:
        print(f"cdelab: unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except AuditError as exc:
        print(f"cdelab: audit failed: {exc}", file=sys.stderr)
        return EXIT_AUDIT
    except CdeLabError as exc:
        print(f"cdelab: error: {exc}", file=sys.stderr)
        return EXIT_AUDIT
    text = serialize(report) if job.format == "json" else render_table(report)
    if job.output:
        try:
            with open(job.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cdelab: cannot write {job.output}: {exc.strerror}", file=sys.stderr)
            return EXIT_INPUT
    else:
        sys.stdout.write(text)
    if not passed:
        failed = [a["name"] for a in report["result"].get("audits", []) if not a["passed"]]
        print("cdelab: audit failed: " + (", ".join(failed) or "see report"), file=sys.stderr)
        return EXIT_AUDIT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
