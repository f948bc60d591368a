"""Command-line front end.

Every subcommand parses its arguments, calls into the library and formats a
:class:`RunReport`.  Exit codes: 0 ok, 1 violation, 2 undetermined or
grid-limited (only with ``--strict``), 64 usage error.

Operands naming a structure accept a catalog id or alias, a named family
(``GroupAlgebraZ2``, ``LambdaK`` ...), a path to a JSON document, or an
expression built from ``op(..)``, ``cop(..)``, ``opcop(..)``, ``dual(..)``
and ``tensor(.., ..)``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import catalog as catalog_mod
from .antipode import hopf_census, solve_antipode
from .axioms import check_all
from .classify import distinctness_report, find_isomorphism, fingerprint
from .constructions import UnknownFamilyError, VariantKind, dual, named_family, tensor_product, variant
from .scalar import MalformedScalarError
from .search import (GridSpec, Nonexistent, SearchStatus, UnsupportedExtensionError,
                     admissible_counits, classify_odd_extensions, connected_decision,
                     enumerate_comultiplications)
from .structures import MissingStructureError, dumps, load_file, save_file

OK, VIOLATION, UNDETERMINED, USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    items: list = field(default_factory=list)      # (subject, verdict, detail)
    payload: dict = field(default_factory=dict)
    failures: int = 0
    undetermined: int = 0
    document: object = None                         # record printed by export/construct

    def add(self, subject, verdict, detail="", *, failed=False, open_=False):
        self.items.append((subject, verdict, detail))
        self.failures += failed
        self.undetermined += open_

    def exit_code(self, strict: bool) -> int:
        if self.failures:
            return VIOLATION
        if strict and self.undetermined:
            return UNDETERMINED
        return OK

    def as_dict(self, code: int) -> dict:
        return {
            "command": self.command,
            "items": [{"subject": s, "verdict": v, "detail": d} for s, v, d in self.items],
            "failures": self.failures,
            "undetermined": self.undetermined,
            "exit_code": code,
            "payload": self.payload,
        }

    def render(self) -> str:
        lines = [f"$ {self.command}"]
        for s, v, d in self.items:
            lines.append(f"{v:<12} {s}" + (f"  {d}" if d else ""))
        lines.append(f"{len(self.items)} item(s), {self.failures} failure(s), "
                     f"{self.undetermined} undetermined")
        return "\n".join(lines)


# -- operands ----------------------------------------------------------------------

_UNARY = {"op": VariantKind.OP, "cop": VariantKind.COP, "opcop": VariantKind.OPCOP}


def _split_args(text: str) -> list[str]:
    out, depth, start = [], 0, 0
    for n, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            out.append(text[start:n].strip())
            start = n + 1
    out.append(text[start:].strip())
    return out


def resolve(text: str, cat=None):
    """Turn an operand string into a record."""
    text = text.strip()
    head, sep, rest = text.partition("(")
    if sep and text.endswith(")") and head.lower() in (*_UNARY, "dual", "tensor"):
        args = [resolve(a, cat) for a in _split_args(rest[:-1])]
        kind = head.lower()
        if kind == "tensor":
            if len(args) != 2:
                raise UsageError(f"tensor takes two operands: {text}")
            return tensor_product(*args)
        if len(args) != 1:
            raise UsageError(f"{kind} takes one operand: {text}")
        return dual(args[0]) if kind == "dual" else variant(args[0], _UNARY[kind])
    path = Path(text)
    if path.suffix == ".json" or path.is_file():
        return _load(path)
    cat = cat or catalog_mod.default()
    if text in cat:
        return cat.get(text).data
    try:
        return named_family(text)
    except UnknownFamilyError:
        raise UsageError(f"unknown id: {text}") from None


def _load(path):
    try:
        return load_file(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    except ValueError as exc:
        raise UsageError(f"malformed document {path}: {exc}") from None


# -- subcommands -------------------------------------------------------------------

def _verify(args, rep):
    if args.all:
        targets = [e.data for e in catalog_mod.default().bialgebras()]
    elif args.id:
        targets = [resolve(args.id)]
    else:
        targets = [_load(Path(args.file))]
    for d in targets:
        try:
            reports = check_all(d, informational=False)
        except MissingStructureError as exc:
            raise UsageError(str(exc)) from None
        bad = [str(r.axiom) for r in reports if not r.holds]
        rep.add(d.id, "FAIL" if bad else "PASS", ", ".join(bad), failed=bool(bad))
    rep.payload["passes"] = sum(v == "PASS" for _, v, _ in rep.items)


def _antipode(args, rep):
    if args.census:
        cat = catalog_mod.default()
        per_dim = {}
        for dim in (2, 3, 4):
            census = hopf_census([e.data for e in cat.bialgebras(dim)])
            per_dim[dim] = census.found()
            for ident, res in sorted(census.rows.items()):
                if res.found:
                    rep.add(ident, "Found")
        rep.payload["found"] = {str(k): v for k, v in per_dim.items()}
        for dim, found in per_dim.items():
            rep.add(f"dim {dim}", "census", f"{len(found)} Found")
        return
    d = resolve(args.id)
    res = solve_antipode(d)
    detail = ""
    if res.found:
        detail = f"even={_rows(res.antipode.even)} odd={_rows(res.antipode.odd)}"
        rep.payload["antipode"] = {"even": _rows(res.antipode.even), "odd": _rows(res.antipode.odd)}
    elif res.certificate:
        detail = str(res.certificate)
        rep.payload["certificate"] = {"terms": [[str(c), lab] for c, lab in res.certificate.terms],
                                      "rhs": str(res.certificate.rhs)}
    else:
        detail = f"solution space of dimension {res.kernel_dim}"
    rep.add(d.id, str(res.status), detail, failed=not res.precondition_ok)


def _rows(block):
    return [[str(x) for x in row] for row in block]


def _fingerprint(args, rep):
    d = resolve(args.id)
    fp = fingerprint(d).as_dict()
    rep.payload["fingerprint"] = fp
    for k in sorted(fp):
        if k != "dual_level1":
            rep.add(k, "field", str(fp[k]))


def _iso(args, rep):
    a, b = resolve(args.a), resolve(args.b)
    if a.space != b.space:
        rep.add(f"{args.a} vs {args.b}", "NonIso", "dimensions differ")
        return
    res = find_isomorphism(a, b, grid=_grid(args), budget=args.budget)
    rep.payload["result"] = res.as_dict()
    detail = res.witness or res.detail
    if res.is_iso:
        detail = f"even={_rows(res.map.even)} odd={_rows(res.map.odd)}"
    rep.add(f"{args.a} vs {args.b}", str(res.status), detail,
            open_=res.status.value == "Undetermined")


def _grid(args):
    if getattr(args, "grid", None) is None:
        return None
    try:
        return GridSpec.parse(args.grid)
    except (ValueError, MalformedScalarError) as exc:
        raise UsageError(f"bad --grid: {exc}") from None


def _algebra(text):
    d = resolve(text)
    return d.with_changes(comult=None, counit=None, antipode=None) if d.is_bialgebra_record else d


def _search_comult(args, rep):
    alg = _algebra(args.algebra)
    res = enumerate_comultiplications(alg, grid=_grid(args), budget=args.budget)
    limited = res.status is SearchStatus.GRID_LIMITED
    rep.add(alg.id, str(res.status), f"{len(res.results)} comultiplication(s)", open_=limited)
    rep.payload["results"] = len(res.results)


def _counits(args, rep):
    alg = _algebra(args.algebra)
    res = admissible_counits(alg)
    values = [{str(b): str(c(b)) for b in alg.basis() if c(b)} for c in res.counits]
    rep.payload["counits"] = values
    rep.add(alg.id, str(res.status), f"{len(values)} counit(s)",
            open_=res.status is SearchStatus.GRID_LIMITED)
    for n, v in enumerate(values, 1):
        rep.add(f"counit {n}", "eps", ", ".join(f"{k}={x}" for k, x in v.items()))


def _extend(args, rep):
    try:
        reps = classify_odd_extensions(_algebra(args.even), args.odd)
    except UnsupportedExtensionError as exc:
        raise UsageError(str(exc)) from None
    rep.payload["classes"] = [d.id for d in reps]
    for d in reps:
        rep.add(d.id, "class")


def _connected(args, rep):
    if args.odd < 1:
        raise UsageError("--odd must be at least 1")
    res = connected_decision(args.odd)
    if isinstance(res, Nonexistent):
        rep.add(f"n1={args.odd}", "Nonexistent", f"{res.pair[0]}, {res.pair[1]}: {res.residual}")
        rep.payload["witness"] = str(res.residual)
    else:
        rep.add(f"n1={args.odd}", "Exists", f"antipode odd={_rows(res.antipode.odd)}")
        rep.payload["document"] = json.loads(dumps(res))


def _construct(args, rep):
    if args.kind == "tensor":
        if len(args.operands) != 2:
            raise UsageError("construct tensor takes two operands")
        data = tensor_product(resolve(args.operands[0]), resolve(args.operands[1]))
    else:
        if not args.id:
            raise UsageError(f"construct {args.kind} needs --id")
        data = resolve(f"{args.kind}({args.id})")
    rep.document = data
    rep.payload["document"] = json.loads(dumps(data))
    if args.out:
        save_file(data, args.out)
    rep.add(data.id, "built", str(args.out or ""))


def _export(args, rep):
    data = resolve(args.id)
    rep.document = data
    rep.payload["document"] = json.loads(dumps(data))
    if args.out:
        save_file(data, args.out)
    rep.add(data.id, "exported", str(args.out or ""))


def _import(args, rep):
    data = _load(Path(args.file))
    rep.payload["document"] = json.loads(dumps(data))
    if data.is_bialgebra_record:
        bad = [str(r.axiom) for r in check_all(data, informational=False) if not r.holds]
        rep.add(data.id, "FAIL" if bad else "PASS", ", ".join(bad), failed=bool(bad))
    else:
        rep.add(data.id, "loaded", "algebra-only record")
    if args.out:
        save_file(data, args.out)


def _distinct(args, rep):
    groups = {}
    for e in catalog_mod.default().bialgebras():
        if e.dim > 2:
            groups.setdefault(e.family, []).append(e.data)
    res = distinctness_report(groups, budget=args.budget)
    rep.payload = res.as_dict()
    for pair, r in sorted(res.iso.items()):
        rep.add(" ~ ".join(pair), "Iso", "", failed=True)
    for pair, detail in sorted(res.undetermined.items()):
        rep.add(" ~ ".join(pair), "Undetermined", detail, open_=True)
    rep.add("within-family pairs", "summary",
            f"{res.pairs} pairs, {len(res.non_iso)} NonIso by fingerprint")


# -- parser ------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    def flags(parser, default):
        parser.add_argument("--json", action="store_true", default=default,
                            help="machine-readable output")
        parser.add_argument("--strict", action="store_true", default=default,
                            help="exit 2 on Undetermined or grid-limited outcomes")
        return parser

    # the subcommand copies must not reset flags given before the subcommand
    common = flags(_Parser(add_help=False), argparse.SUPPRESS)
    p = flags(_Parser(prog="superhopf",
                      description="Exact checks for low-dimensional superbialgebras."), False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, func, help_):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.set_defaults(func=func)
        return s

    s = cmd("verify", _verify, "check the nine structural axioms")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--all", action="store_true")
    g.add_argument("--id")
    g.add_argument("--file")

    s = cmd("antipode", _antipode, "solve for the antipode")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--census", action="store_true")
    g.add_argument("--id")

    s = cmd("fingerprint", _fingerprint, "isomorphism invariants")
    s.add_argument("--id", required=True)

    s = cmd("iso", _iso, "search for an isomorphism")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--grid")
    s.add_argument("--budget", type=int, default=20000)

    s = cmd("search-comult", _search_comult, "enumerate comultiplications")
    s.add_argument("algebra")
    s.add_argument("--grid")
    s.add_argument("--budget", type=int, default=10 ** 6)

    s = cmd("counits", _counits, "admissible counits")
    s.add_argument("algebra")

    s = cmd("extend", _extend, "odd extensions of an even algebra")
    s.add_argument("even")
    s.add_argument("--odd", type=int, default=1)

    s = cmd("connected", _connected, "connected superbialgebras with n odd generators")
    s.add_argument("--odd", type=int, required=True)

    s = cmd("construct", _construct, "op, cop, dual or tensor product")
    s.add_argument("kind", choices=("op", "cop", "opcop", "dual", "tensor"))
    s.add_argument("operands", nargs="*")
    s.add_argument("--id")
    s.add_argument("--out")

    s = cmd("export", _export, "write a record as a JSON document")
    s.add_argument("--id", required=True)
    s.add_argument("--out")

    s = cmd("import", _import, "load and check a JSON document")
    s.add_argument("file")
    s.add_argument("--out")

    s = cmd("distinct", _distinct, "pairwise isomorphism report inside each catalog family")
    s.add_argument("--budget", type=int, default=20000)
    return p


def run(argv=None) -> tuple[RunReport | None, int]:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        rep = RunReport(command=" ".join(["superhopf", *argv]))
        args.func(args, rep)
    except UsageError as exc:
        return None, _usage(str(exc), "--json" in argv)
    except (catalog_mod.CatalogError, catalog_mod.UnknownIdError) as exc:
        return None, _usage(f"catalog: {exc}", "--json" in argv)
    code = rep.exit_code(args.strict)
    if args.json:
        print(json.dumps(rep.as_dict(code), indent=1, sort_keys=True))
    elif args.command in ("export", "construct") and not args.out:
        sys.stdout.write(dumps(rep.document))
    else:
        print(rep.render())
    return rep, code


def _usage(message, as_json):
    if as_json:
        print(json.dumps({"error": message, "exit_code": USAGE}, sort_keys=True))
    else:
        print(f"error: {message}", file=sys.stderr)
    return USAGE


def main(argv=None) -> int:
    return run(argv)[1]


if __name__ == "__main__":
    sys.exit(main())
