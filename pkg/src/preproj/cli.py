"""Command line front end.  Every command prints one JSON report on stdout.

Exit codes: 0 ok, 2 invalid input, 3 not applicable, 4 theorem violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from .errors import InvalidInput, PreprojError, Unclassifiable
from .lattice import SubsetI, kostant_partition, parse_int_list, root_from_dims, weight_multiplicity
from .linalg import RatMatrix, format_rational
from .maya import MayaSubset, hom_formula, identify_maya, maya_module, polytope_max, polytope_vertices
from .modules import (
    GradedRep,
    hom_space_basis,
    in_rep_w,
    module_to_json,
    parse_module_file,
    socle_basis,
    socle_dims,
)
from .selftest import run_selftest
from .tableaux import (
    Tableau,
    classify_report,
    g_count,
    generic_scalars,
    normalize_shape,
    signature,
    signature_to_json,
    ssyt_enumerate,
    tableau_to_json,
    type_t_module,
)

EXIT_CODES = {"ok": 0, "invalid-input": 2, "not-applicable": 3, "theorem-violation": 4}

FLAGS = ("n", "a", "b", "v", "w", "shape", "content", "set", "index", "seed", "module", "out")


@dataclass(frozen=True)
class CommandRequest:
    subcommand: str
    flags: dict[str, str] = field(default_factory=dict)
    pretty: bool = False


@dataclass
class RunReport:
    status: str
    payload: Any = None
    diagnostics: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_json(self) -> dict:
        return {"status": self.status, "payload": self.payload, "diagnostics": self.diagnostics}


# ---------------------------------------------------------------------------
# flag helpers
# ---------------------------------------------------------------------------


class _Flags:
    def __init__(self, command: str, flags: dict[str, str]):
        self.command = command
        self.flags = {k: v for k, v in flags.items() if v is not None}

    def has(self, name: str) -> bool:
        return name in self.flags

    def raw(self, name: str) -> str:
        if name not in self.flags:
            raise InvalidInput(f"{self.command}: missing required flag --{name}\n{usage()}")
        return self.flags[name]

    def int(self, name: str, default: int | None = None) -> int:
        if default is not None and name not in self.flags:
            return default
        try:
            return int(self.raw(name))
        except ValueError:
            raise InvalidInput(f"--{name} must be an integer") from None

    def ints(self, name: str) -> tuple[int, ...]:
        return parse_int_list(self.raw(name))

    def subset(self, name: str, n: int) -> SubsetI:
        return SubsetI.parse(n, self.raw(name))

    def module(self) -> GradedRep:
        path = Path(self.raw("module"))
        try:
            data = path.read_bytes()
        except OSError as exc:
            raise InvalidInput(f"cannot read module file: {exc}") from None
        return parse_module_file(data)


def _matrix(m: RatMatrix) -> list:
    return [[format_rational(x) for x in row] for row in m.entries]


def _content(f: _Flags) -> tuple[int, ...]:
    content = f.ints("content")
    if f.has("n") and f.int("n") != len(content):
        raise InvalidInput("--content must have --n entries")
    return content


def _tableau(f: _Flags) -> Tableau:
    shape, content = normalize_shape(f.ints("shape")), _content(f)
    tableaux = ssyt_enumerate(shape, content)
    index = f.int("index", 0)
    if not 0 <= index < len(tableaux):
        raise InvalidInput(f"--index {index} out of range ({len(tableaux)} tableaux)")
    return tableaux[index]


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _cmd_maya(f: _Flags) -> RunReport:
    n = f.int("n")
    a = MayaSubset(f.subset("a", n))
    m = maya_module(a)
    return RunReport("ok", {
        "subset": str(a),
        "dims": list(m.dims),
        "socle": list(socle_dims(m)),
        "module": module_to_json(m),
    })


def _cmd_hom(f: _Flags) -> RunReport:
    if f.has("module"):
        source = f.module()
        n = source.n
    else:
        n = f.int("n")
        source = maya_module(f.subset("a", n))
    if f.has("n") and f.int("n") != n:
        raise InvalidInput("--n does not match the module file")
    target = maya_module(f.subset("b", n))
    basis = hom_space_basis(source, target)
    return RunReport("ok", {"dim": len(basis), "basis": [[_matrix(p) for p in phi.phis] for phi in basis]})


def _cmd_hom_formula(f: _Flags) -> RunReport:
    n = f.int("n")
    return RunReport("ok", {"dim": hom_formula(f.subset("a", n), f.subset("b", n))})


def _cmd_socle(f: _Flags) -> RunReport:
    if f.has("module"):
        m = f.module()
    else:
        m = maya_module(f.subset("a", f.int("n")))
    payload = {
        "dims": list(socle_dims(m)),
        "basis": [[list(map(format_rational, col)) for col in b.columns()] for b in socle_basis(m)],
    }
    if f.has("w"):
        payload["in_rep_w"] = in_rep_w(m, f.ints("w"))
    return RunReport("ok", payload)


def _cmd_identify(f: _Flags) -> RunReport:
    a, iso = identify_maya(f.module(), seed=f.int("seed", 0))
    return RunReport("ok", {"subset": str(a), "isomorphism": [_matrix(p) for p in iso.phis]})


def _cmd_polytope(f: _Flags) -> RunReport:
    b = f.subset("b", f.int("n"))
    return RunReport("ok", {"points": [list(p.coords) for p in polytope_vertices(b).points]})


def _cmd_polytope_max(f: _Flags) -> RunReport:
    n = f.int("n")
    return RunReport("ok", {"max": polytope_max(f.subset("a", n), f.subset("b", n))})


def _cmd_ssyt(f: _Flags) -> RunReport:
    tableaux = ssyt_enumerate(f.ints("shape"), _content(f))
    return RunReport("ok", {"count": len(tableaux), "tableaux": [tableau_to_json(t) for t in tableaux]})


def _cmd_signature(f: _Flags) -> RunReport:
    t = _tableau(f)
    if f.has("set"):
        a = f.subset("set", t.n)
        return RunReport("ok", {"tableau": tableau_to_json(t), "signature": {str(a): g_count(t, a)}})
    return RunReport("ok", {"tableau": tableau_to_json(t), "signature": signature_to_json(signature(t))})


def _cmd_type_t(f: _Flags) -> RunReport:
    t = _tableau(f)
    scalars = generic_scalars(t, f.int("seed", 0))
    m = type_t_module(t, scalars)
    return RunReport("ok", {
        "tableau": tableau_to_json(t),
        "scalars": [
            {"from": [x.row, x.col], "to": [q.row, q.col], "value": format_rational(e)}
            for (x, q), e in scalars.items()
        ],
        "module": module_to_json(m),
    })


def _cmd_classify(f: _Flags) -> RunReport:
    m = f.module()
    try:
        result = classify_report(m, f.ints("shape"), _content(f), seed=f.int("seed", 0))
    except Unclassifiable as exc:
        return RunReport("not-applicable", {"signature": signature_to_json(exc.signature)}, [str(exc)])
    return RunReport(
        "ok",
        {
            "tableau": tableau_to_json(result.tableau),
            "signature": signature_to_json(result.signature),
            "degenerate": result.degenerate,
        },
        list(result.diagnostics),
    )


def _cmd_kostant(f: _Flags) -> RunReport:
    v = f.ints("v")
    if f.int("n") != len(v) + 1:
        raise InvalidInput("--v must have n-1 entries")
    return RunReport("ok", {"count": kostant_partition(root_from_dims(v))})


def _cmd_kostka(f: _Flags) -> RunReport:
    content = _content(f)
    shape = normalize_shape(f.ints("shape"))
    if len(shape) > len(content):
        raise InvalidInput("shape has more rows than content has entries")
    lam = shape + (0,) * (len(content) - len(shape))
    return RunReport("ok", {
        "count": weight_multiplicity(lam, content),
        "ssyt_count": len(ssyt_enumerate(shape, content)),
    })


def _cmd_selftest(f: _Flags) -> RunReport:
    max_n, seed = f.int("n", 4), f.int("seed", 0)
    if not 3 <= max_n <= 8:
        raise InvalidInput("selftest --n must lie in 3..8")
    results = run_selftest(max_n, seed)
    failed = sum(r.failed for r in results)
    payload = {
        "max_n": max_n,
        "seed": seed,
        "suites": [r.to_json() for r in results],
        "passed": sum(r.passed for r in results),
        "failed": failed,
    }
    diagnostics = [f"{r.name}: {x}" for r in results for x in r.failures]
    return RunReport("theorem-violation" if failed else "ok", payload, diagnostics)


COMMANDS: dict[str, tuple[Callable[[_Flags], RunReport], str]] = {
    "maya": (_cmd_maya, "Maya module N(A)  [--n --a]"),
    "hom": (_cmd_hom, "Hom(M, N(B)) by linear algebra  [--n --a | --module] --b"),
    "hom-formula": (_cmd_hom_formula, "dim Hom(N(A), N(B)) in closed form  [--n --a --b]"),
    "socle": (_cmd_socle, "socle dimensions and basis  [--module | --n --a] [--w]"),
    "identify": (_cmd_identify, "find A with M ~ N(A)  [--module] [--seed]"),
    "polytope": (_cmd_polytope, "points generating P(B)  [--n --b]"),
    "polytope-max": (_cmd_polytope_max, "max of <1_A, .> on P(B)  [--n --a --b]"),
    "ssyt": (_cmd_ssyt, "semistandard tableaux  [--shape --content]"),
    "signature": (_cmd_signature, "box-count signature of a tableau  [--shape --content --index] [--set]"),
    "type-t": (_cmd_type_t, "generic module of type T  [--shape --content --index] [--seed]"),
    "classify": (_cmd_classify, "tableau of a module  [--module --shape --content] [--seed]"),
    "kostant": (_cmd_kostant, "Kostant partition function of alpha_v  [--n --v]"),
    "kostka": (_cmd_kostka, "weight multiplicity and SSYT count  [--shape --content]"),
    "selftest": (_cmd_selftest, "run every invariant sweep  [--n MAX_N] [--seed]"),
}


def usage() -> str:
    lines = ["usage: preproj <command> [flags]", "commands:"]
    lines += [f"  {name:<13} {text}" for name, (_, text) in COMMANDS.items()]
    return "\n".join(lines)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise InvalidInput(f"{message}\n{usage()}")


def _parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="preproj", add_help=False)
    parser.add_argument("command")
    for name in FLAGS:
        parser.add_argument(f"--{name}")
    parser.add_argument("--pretty", action="store_true")
    return parser


def parse_request(argv: list[str]) -> CommandRequest:
    ns = _parser().parse_args(argv)
    flags = {name: getattr(ns, name) for name in FLAGS if getattr(ns, name) is not None}
    return CommandRequest(ns.command, flags, ns.pretty)


def dispatch(req: CommandRequest) -> RunReport:
    entry = COMMANDS.get(req.subcommand)
    if entry is None:
        return RunReport("invalid-input", None, [f"unknown command {req.subcommand!r}", usage()])
    try:
        return entry[0](_Flags(req.subcommand, req.flags))
    except PreprojError as exc:
        return RunReport(exc.status, None, [str(exc)])


def render_pretty(report: RunReport) -> str:
    lines = [f"status: {report.status}"]
    payload = report.payload if isinstance(report.payload, dict) else {}
    for key, value in payload.items():
        if key == "tableaux":
            lines.append(f"{key}:")
            for t in value:
                lines.extend("  " + " ".join(map(str, row)) for row in t["rows"])
                lines.append("")
        elif key == "tableau":
            lines.append(f"{key}:")
            lines.extend("  " + " ".join(map(str, row)) for row in value["rows"])
        elif key == "suites":
            for s in value:
                lines.append(f"  {s['name']:<24} pass {s['passed']:>6}  fail {s['failed']:>4}  {s['seconds']:.2f}s")
        else:
            lines.append(f"{key}: {json.dumps(value)}")
    lines.extend(f"! {d}" for d in report.diagnostics)
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if argv and argv[0] in ("-h", "--help", "help"):
        print(usage())
        return 0
    try:
        req = parse_request(argv)
    except InvalidInput as exc:
        report, req = RunReport("invalid-input", None, [str(exc)]), None
    else:
        report = dispatch(req)
    if req is not None and report.status == "ok" and "out" in req.flags:
        payload = report.payload
        out = payload.get("module", payload) if isinstance(payload, dict) else payload
        Path(req.flags["out"]).write_text(json.dumps(out) + "\n")
    if req is not None and req.pretty:
        print(render_pretty(report))
    else:
        print(json.dumps(report.to_json(), sort_keys=False))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
