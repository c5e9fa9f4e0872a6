"""``qlab`` command line: validate, concepts, kan, check and export.

Exit codes: 0 success, 1 law violation, 2 parse error or missing input,
3 presheaf enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Callable, Optional

from .closure import closure_space
from .errors import CapExceeded, QlabError, StructuralError
from .isbell import concept_lattice, infomorphism_to_continuous, isbell_closure
from .kan import kan_lattice
from .laws import (closure_suite, dist_suite, distributor_laws, functor_kan_laws, girard_suite, isbell_suite,
                   kan_suite, presheaf_suite, quantaloid_suite)
from .presheaf import CO, CONTRA, DEFAULT_CAP, enumerate_presheaves, estimate_presheaves
from .report import Report
from .serialize import (category_to_doc, distributor_to_doc, dumps, functor_to_doc, lattice_to_doc, to_dot)
from .workspace import Workspace, load_workspace, quantaloid_document, read_document, parse_workspace

EXIT_OK, EXIT_LAW, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3
SUITES = ("quantaloid", "dist", "presheaf", "closure", "isbell", "kan", "girard")
# Q-Dist is tabulated in full, so only categories with at most this many endo-matrices take part.
DIST_SUITE_LIMIT = 16
DIST_SUITE_MAX_CATEGORIES = 3


def _cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("QLAB_CAP")
    return int(env) if env else DEFAULT_CAP


def _out(text: str) -> None:
    sys.stdout.write(text)


def _err(text: str) -> None:
    sys.stderr.write(text.rstrip("\n") + "\n")


def _load(args) -> Workspace:
    """Load and validate the workspace; raises on parse errors or law failures."""
    ws = load_workspace(args.workspace, _cap(args))
    rep = ws.validate()
    if rep:
        raise _InvalidWorkspace(rep)
    return ws


class _InvalidWorkspace(Exception):
    def __init__(self, report: Report):
        super().__init__("workspace does not validate")
        self.report = report


# -- commands ---------------------------------------------------------------------

def cmd_validate(args) -> int:
    results, status = {}, EXIT_OK
    for path in args.paths:
        try:
            ws = parse_workspace(read_document(path), _cap(args))
        except (OSError, StructuralError) as exc:
            _err(f"{path}: {exc}")
            return EXIT_PARSE
        except CapExceeded as exc:
            _err(f"{path}: {exc}")
            return EXIT_CAP
        rep = ws.validate()
        results[path] = rep.to_json()
        for v in rep:
            _err(f"{path}: {v.describe()}")
        if rep:
            status = EXIT_LAW
    _out(dumps({"ok": status == EXIT_OK, "reports": results}))
    return status


def _lattice_cmd(args, build: Callable) -> int:
    ws = _load(args)
    if args.dist not in ws.distributors:
        _err(f"unknown distributor {args.dist!r}")
        return EXIT_PARSE
    lattice = build(ws.distributors[args.dist], _cap(args))
    if args.format == "dot":
        labels = {p.extent.label: f"c{i}" for i, p in enumerate(lattice.pairs)}
        _out(to_dot(lattice.category, labels, name=f"{lattice.kind}({args.dist})"))
    else:
        doc = lattice_to_doc(lattice)
        doc["distributor"] = args.dist
        _out(dumps(doc))
    return EXIT_OK


def cmd_concepts(args) -> int:
    return _lattice_cmd(args, concept_lattice)


def cmd_kan(args) -> int:
    return _lattice_cmd(args, kan_lattice)


def _dist_categories(ws: Workspace) -> list:
    chosen = []
    q = ws.quantaloid
    for A in ws.categories.values():
        matrices = math.prod(len(q.hom(A.t(x), A.t(y))) for x in A.objects for y in A.objects)
        if matrices <= DIST_SUITE_LIMIT and all(A != B for B in chosen):
            chosen.append(A)
    return chosen[:DIST_SUITE_MAX_CATEGORIES]


def _presheaf_suite(ws: Workspace, cap: int) -> Report:
    rep = Report(module="presheaf")
    for name, A in ws.categories.items():
        functors = [F for F in ws.functors.values() if F.source is A]
        P = enumerate_presheaves(A, CONTRA, cap)
        Pd = enumerate_presheaves(A, CO, cap)
        deep = max(estimate_presheaves(P, CONTRA), estimate_presheaves(Pd, CONTRA),
                   estimate_presheaves(P, CO), estimate_presheaves(Pd, CO)) <= cap
        if not deep:
            _err(f"presheaf: completeness of the presheaf categories of {name} skipped (above cap)")
        rep.extend(presheaf_suite(A, functors, cap, deep))
    return rep


def _closure_suite(ws: Workspace, cap: int) -> Report:
    spaces = list(ws.closure_spaces.values())
    spaces += [isbell_closure(phi, cap) for phi in ws.distributors.values()]
    maps = []
    for info in ws.infomorphisms.values():
        cm = infomorphism_to_continuous(info, cap)
        maps.append((cm.functor, cm.source, cm.target))
    for F in ws.functors.values():
        C = closure_space(F.source, lambda m: m, cap, name="id")
        D = closure_space(F.target, lambda m: m, cap, name="id")
        maps.append((F, C, D))
    return closure_suite(spaces, maps, cap)


def _lattice_within_cap(lattice, name: str, cap: int) -> bool:
    if estimate_presheaves(lattice.category, CONTRA) <= cap:
        return True
    _err(f"{lattice.kind}: completeness of the fixed-point lattice of {name} skipped (above cap)")
    return False


def _run_suite(ws: Workspace, suite: str, cap: int) -> Optional[Report]:
    """The suite's report, or ``None`` when it does not apply to the workspace."""
    q = ws.quantaloid
    if suite == "quantaloid":
        return quantaloid_suite(q)
    if suite == "dist":
        small = _dist_categories(ws)
        if len(small) < len(ws.categories):
            _err(f"dist: {len(ws.categories) - len(small)} categories left out of exhaustive distributor scans (size limit)")
        rep = dist_suite(small)
        rep.extend(distributor_laws(small, ws.functors.values()))
        return rep
    if suite == "presheaf":
        return _presheaf_suite(ws, cap)
    if suite == "closure":
        return _closure_suite(ws, cap)
    if suite == "isbell":
        rep = Report(module="isbell")
        for name, phi in ws.distributors.items():
            rep.extend(isbell_suite(phi, cap, _lattice_within_cap(concept_lattice(phi, cap), name, cap)))
        return rep
    if suite == "kan":
        rep = Report(module="kan")
        for name, phi in ws.distributors.items():
            rep.extend(kan_suite(phi, cap, _lattice_within_cap(kan_lattice(phi, cap), name, cap)))
        for F in ws.functors.values():
            rep.extend(functor_kan_laws(F, cap))
        return rep
    if suite == "girard":
        if not q.is_girard:
            return None
        return girard_suite(ws.distributors.values(), _dist_categories(ws), cap)
    raise ValueError(suite)


def cmd_check(args) -> int:
    ws = _load(args)
    cap = _cap(args)
    suites = SUITES if args.suite == "all" else (args.suite,)
    results, status = {}, EXIT_OK
    for suite in suites:
        try:
            rep = _run_suite(ws, suite, cap)
        except CapExceeded as exc:
            _err(f"{suite}: skipped, {exc}")
            results[suite] = {"status": "cap_exceeded", "violations": []}
            status = max(status, EXIT_CAP) if status != EXIT_LAW else status
            continue
        if rep is None:
            _err(f"{suite}: skipped, quantaloid {ws.quantaloid.name} is not Girard")
            results[suite] = {"status": "skipped", "violations": []}
            continue
        for v in rep:
            _err(v.describe())
        results[suite] = {"status": "ok" if rep.ok else "failed", "violations": rep.to_json()}
        if rep:
            status = EXIT_LAW
    _out(dumps({"ok": status == EXIT_OK, "suites": results}))
    return status


def export_document(ws: Workspace, name: str, fmt: str, cap: int) -> str:
    """Serialize a named object; ``P(A)``, ``Pd(A)``, ``M(phi)``, ``K(phi)`` are computed on demand."""
    names = {id(A): k for k, A in ws.categories.items()}
    if name == "quantaloid":
        if fmt == "dot":
            raise StructuralError("the quantaloid has no DOT form")
        return dumps(quantaloid_document(ws))
    for prefix, variance in (("P(", CONTRA), ("Pd(", CO)):
        if name.startswith(prefix) and name.endswith(")"):
            A = _category(ws, name[len(prefix):-1])
            P = enumerate_presheaves(A, variance, cap)
            return to_dot(P, name=name) if fmt == "dot" else dumps(category_to_doc(P))
    for prefix, build in (("M(", concept_lattice), ("K(", kan_lattice)):
        if name.startswith(prefix) and name.endswith(")"):
            key = name[len(prefix):-1]
            if key not in ws.distributors:
                raise StructuralError(f"unknown distributor {key!r}")
            lattice = build(ws.distributors[key], cap)
            if fmt == "dot":
                labels = {p.extent.label: f"c{i}" for i, p in enumerate(lattice.pairs)}
                return to_dot(lattice.category, labels, name=name)
            return dumps(lattice_to_doc(lattice))
    if name in ws.categories:
        A = ws.categories[name]
        return to_dot(A, name=name) if fmt == "dot" else dumps(category_to_doc(A))
    if fmt == "dot":
        raise StructuralError(f"{name!r} has no DOT form")
    if name in ws.functors:
        F = ws.functors[name]
        return dumps(functor_to_doc(F, names[id(F.source)], names[id(F.target)]))
    if name in ws.distributors:
        phi = ws.distributors[name]
        return dumps(distributor_to_doc(phi, names[id(phi.source)], names[id(phi.target)]))
    raise StructuralError(f"unknown name {name!r}")


def _category(ws: Workspace, key: str):
    if key not in ws.categories:
        raise StructuralError(f"unknown category {key!r}")
    return ws.categories[key]


def cmd_export(args) -> int:
    ws = _load(args)
    _out(export_document(ws, args.name, args.format, _cap(args)))
    return EXIT_OK


# -- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None,
                        help=f"presheaf enumeration cap (env QLAB_CAP, default {DEFAULT_CAP})")
    ws_opt = argparse.ArgumentParser(add_help=False)
    ws_opt.add_argument("--workspace", "-w", default="ctx",
                        help="workspace file or bundled name (ctx, l3, macneille)")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "dot"), default="json")

    parser = argparse.ArgumentParser(prog="qlab", description="Finite quantaloid-enriched category toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("validate", parents=[common], help="run every validator over workspace files")
    p.add_argument("paths", nargs="+")
    p.set_defaults(func=cmd_validate)
    p = sub.add_parser("concepts", parents=[common, ws_opt, fmt], help="fixed points of the Isbell closure")
    p.add_argument("dist")
    p.set_defaults(func=cmd_concepts)
    p = sub.add_parser("kan", parents=[common, ws_opt, fmt], help="fixed points of the Kan closure")
    p.add_argument("dist")
    p.set_defaults(func=cmd_kan)
    p = sub.add_parser("check", parents=[common, ws_opt], help="run law suites over the workspace")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.set_defaults(func=cmd_check)
    p = sub.add_parser("export", parents=[common, ws_opt, fmt], help="serialize a named or derived object")
    p.add_argument("name")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _InvalidWorkspace as exc:
        for v in exc.report:
            _err(v.describe())
        _out(dumps({"ok": False, "reports": {args.workspace: exc.report.to_json()}}))
        return EXIT_LAW
    except (OSError, StructuralError) as exc:
        _err(str(exc))
        return EXIT_PARSE
    except CapExceeded as exc:
        _err(str(exc))
        return EXIT_CAP
    except QlabError as exc:
        _err(str(exc))
        return EXIT_LAW


if __name__ == "__main__":
    sys.exit(main())
