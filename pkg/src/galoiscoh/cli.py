"""Command-line front end: every command reads one JSON document and writes one.

Exit codes: 0 ok, 1 invalid input, 2 verification failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import cohomology as _coh
from . import serialization as ser
from .abelian import ConsistencyError, smith_form
from .algebras import AlgebraError, center_basis, diagonal_isomorphism_check, is_simple
from .algebras import teichmuller_cocycle
from .categories import (CategoryError, deligne_diagonal, morita_trivial, pentagon_check)
from .cohomology import (CocycleError, ResourceLimitError, compute_cohomology, express_as_coboundary,
                         inflate, is_cocycle)
from .extensions import ExtensionError
from .fields import ZeroDivisionInField
from .gmodules import ModuleError, MorphismError
from .groups import GroupAxiomError, HomomorphismError

OK, INVALID, FAILED = "ok", "invalid-input", "verification-failed"
EXIT_CODES = {OK: 0, INVALID: 1, FAILED: 2}


@dataclass
class CommandResult:
    status: str
    payload: object = None
    diagnostics: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


class VerificationFailed(Exception):
    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload


INPUT_ERRORS = (ser.SchemaError, ModuleError, MorphismError, ExtensionError, CategoryError,
                AlgebraError, GroupAxiomError, HomomorphismError, CocycleError, ResourceLimitError,
                ZeroDivisionInField, ValueError, KeyError, TypeError, IndexError)


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _witness(w):
    return list(w) if isinstance(w, tuple) else w


# -- commands; each takes the parsed input document and the argparse namespace


def cmd_cohomology(doc, args):
    M = ser.read_module(ser._require(doc, "module"))
    n = ser._int(ser._require(doc, "degree"))
    H = compute_cohomology(M, n, args.max_table_entries)
    for z in H.generators:
        if not is_cocycle(z):
            raise VerificationFailed("generator is not a cocycle")
    return {"degree": n, "invariant_factors": list(H.structure.invariant_factors),
            "order": H.order, "generators": [ser.write_cochain(z) for z in H.generators]}


def cmd_inflate(doc, args):
    m = ser.read_morphism(ser._require(doc, "tower"))
    c = ser.read_cochain(ser._require(doc, "cochain"), m.source)
    _coh._guard(m.target, max(c.degree - 1, 0), args.max_table_entries)
    return ser.write_cochain(inflate(m, c))


def cmd_cocycle_check(doc, args):
    M = ser.read_module(ser._require(doc, "module"))
    c = ser.read_cochain(ser._require(doc, "cochain"), M)
    v = is_cocycle(c)
    if not v:
        raise VerificationFailed(f"cocycle condition fails at {v.witness}",
                                 {"cocycle": False, "witness": _witness(v.witness)})
    return {"cocycle": True}


def cmd_pentagon(doc, args):
    ext, omega = ser.read_raw_category(doc)
    v = pentagon_check(ext, omega)
    if not v:
        raise VerificationFailed(f"pentagon fails at {v.witness}",
                                 {"pentagon": False, "witness": _witness(v.witness)})
    return {"pentagon": True}


def cmd_crossed_product(doc, args):
    A, ext, cp = ser.read_algebra({"kind": "crossed", **doc})
    out = {"algebra": ser.write_algebra(A), "l_dimension": cp.l_dimension,
           "center_dimension": len(center_basis(A)), "simple": is_simple(A)}
    if "compare" in doc:
        other = ser.read_cochain(doc["compare"], ext.coefficients)
        tau = _coh.cohomologous(cp.beta, other)
        if tau is None:
            out["isomorphic"] = None
        else:
            v = diagonal_isomorphism_check(ext, cp.beta, other, tau)
            if not v:
                raise VerificationFailed(f"diagonal isomorphism fails at {v.witness}")
            out["isomorphic"] = True
            out["tau"] = ser.write_cochain(tau)
    return out


def cmd_teichmuller(doc, args):
    A, _, _ = ser.read_algebra(ser._require(doc, "algebra"))
    ext = ser.read_extension(doc["extension"]) if "extension" in doc else None
    if ext is None:
        from .algebras import default_extension
        ext = default_extension(A.field)
    lifts = ser.read_lifts(ser._require(doc, "lifts"), A, ext)
    omega = teichmuller_cocycle(A, lifts, ext)
    v = is_cocycle(omega)
    if not v:
        raise VerificationFailed(f"Teichmüller output is not a cocycle (fails at {v.witness})")
    tau = express_as_coboundary(omega, check=False)
    return {"extension": ser.write_extension(ext), "cocycle": ser.write_cochain(omega),
            "certificate": ser.write_cochain(tau) if tau is not None else None}


def cmd_deligne(doc, args):
    if isinstance(doc, list) and len(doc) == 2:
        first, second = doc
    else:
        first, second = ser._require(doc, "first"), ser._require(doc, "second")
    c1, c2 = ser.read_category(first), ser.read_category(second)
    c = deligne_diagonal(c1, c2)
    out = ser.write_category(c)
    tau = express_as_coboundary(c.omega, check=False)
    out["certificate"] = ser.write_cochain(tau) if tau is not None else None
    return out


def cmd_morita(doc, args):
    cat = ser.read_category(doc)
    probe_docs = list(doc.get("probes", [])) + [_load(p) for p in args.probe or []]
    probes = [ser.read_tower(p) for p in probe_docs]
    rep = morita_trivial(cat, probes)
    out = {"status": rep.status, "probes": len(probes)}
    if rep.trivial:
        out.update(level=rep.level, witness=ser.write_cochain(rep.witness),
                   category=ser.write_category(rep.category))
    return out


def cmd_snf(doc, args):
    M = ser._require(doc, "matrix", list)
    rows = doc.get("rows", len(M))
    cols = doc.get("cols", len(M[0]) if M else 0)
    for row in M:
        for x in row:
            ser._int(x)
    sf = smith_form(M, rows, cols)
    return {"S": [list(r) for r in sf.S], "U": [list(r) for r in sf.U],
            "V": [list(r) for r in sf.V], "diagonal": list(sf.diagonal)}


COMMANDS = {
    "cohomology": (cmd_cohomology, "H^n(G; M) for {\"module\", \"degree\"}"),
    "inflate": (cmd_inflate, "inflate {\"cochain\"} along {\"tower\"}"),
    "cocycle-check": (cmd_cocycle_check, "check {\"cochain\"} over {\"module\"}"),
    "pentagon": (cmd_pentagon, "pentagon identity for a category document"),
    "crossed-product": (cmd_crossed_product, "crossed product of {\"extension\", \"beta\"}"),
    "teichmuller": (cmd_teichmuller, "Teichmüller cocycle of {\"algebra\", \"lifts\"}"),
    "deligne": (cmd_deligne, "diagonal Deligne product of {\"first\", \"second\"}"),
    "morita": (cmd_morita, "probe a category for Morita triviality"),
    "snf": (cmd_snf, "Smith normal form of {\"matrix\"}"),
}


def _load(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def run(command: str, doc, args) -> CommandResult:
    fn = COMMANDS[command][0]
    try:
        return CommandResult(OK, fn(doc, args))
    except VerificationFailed as exc:
        return CommandResult(FAILED, exc.payload, [str(exc)])
    except (ConsistencyError, AssertionError) as exc:
        return CommandResult(FAILED, None, [f"internal consistency check failed: {exc}"])
    except INPUT_ERRORS as exc:
        payload = None
        w = getattr(exc, "witness", None)
        if w is not None and not hasattr(w, "degree"):
            payload = {"witness": _witness(w)}
        return CommandResult(INVALID, payload, [f"{type(exc).__name__}: {exc}"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="galoiscoh", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", "-i", default="-", help="input JSON file, '-' for stdin")
        p.add_argument("--output", "-o", default="-", help="output file, '-' for stdout")
        p.add_argument("--probe", action="append", help="tower JSON file (repeatable)")
        p.add_argument("--max-table-entries", type=int, default=None,
                       help="refuse cochain tables larger than this")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    saved = _coh.max_table_entries
    if args.max_table_entries is not None:
        _coh.max_table_entries = args.max_table_entries
    try:
        try:
            doc = _load(args.input)
        except (OSError, json.JSONDecodeError) as exc:
            result = CommandResult(INVALID, None, [f"cannot read input: {exc}"])
        else:
            try:
                result = run(args.command, doc, args)
            except (OSError, json.JSONDecodeError) as exc:
                result = CommandResult(INVALID, None, [f"cannot read probe: {exc}"])
    finally:
        _coh.max_table_entries = saved
    for line in result.diagnostics:
        print(f"{args.command}: {line}", file=sys.stderr)
    if result.payload is not None:
        text = dumps(result.payload)
        if args.output == "-":
            sys.stdout.write(text)
        else:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
