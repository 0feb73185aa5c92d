"""The ``bredon`` command line.

Commands read one JSON input document (see :mod:`bredon.documents`) and
print a report as text or JSON.  Exit codes: 0 success, 2 input or
validation error, 3 the two independent routes disagree, 4 a verified
statement failed on this instance.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

import networkx as nx

from . import __version__
from .cog import (
    FINITE,
    cd_from_omega,
    check_acyclicity,
    develop,
    fixed_pair,
    lemma34_check,
    omega_partition,
    stabilizer_admissible,
    validate,
    verify_bredon,
    verify_decomposition,
)
from .coxeter import cd_building_formula, cross_check, spherical_poset, vcd_link_formula
from .documents import InputDocument, dump_document, load_document, parse_document
from .errors import BredonError, InputError
from .scomplex import face_label
from .zcohomology import pair_cohomology

SCHEMA_VERSION = 1
EXIT_OK, EXIT_INPUT, EXIT_ROUTES, EXIT_MISMATCH = 0, 2, 3, 4
THEOREMS = ("decomposition", "bredon", "lemma34", "acyclic")


class CommandError(Exception):
    def __init__(self, code: int, report: dict):
        super().__init__(code)
        self.code = code
        self.report = report


def _groups(d: dict) -> dict:
    return {str(n): g.to_dict() for n, g in sorted(d.items())}


# --- cd -----------------------------------------------------------------------

def cmd_cd(doc: InputDocument, jobs: int) -> dict:
    if doc.mode in ("coxeter", "graph_product"):
        M = doc.coxeter()
        dim, rows = cd_building_formula(M)
        return {"headline": dim, "formula": "building", "table": [r.to_dict() for r in rows]}

    scog = doc.complex_of_groups()
    validate(scog)
    partition = omega_partition(scog)
    dim, rows = cd_from_omega(scog.Q, partition)
    out = {"headline": dim, "formula": "omega", "table": [r.to_dict() for r in rows]}
    if scog.mode == FINITE:
        # the per-J fixed pairs must reach the same top degree
        dev = develop(scog)
        tops = {}
        for J in scog.Q.elements:
            nz = [n for n, g in pair_cohomology(fixed_pair(dev, J).pair).items() if g]
            tops[J] = max(nz) if nz else None
        fixed_dim = max((t for t in tops.values() if t is not None), default=0)
        out["fixed_pairs"] = [{"J": J, "top_degree": t} for J, t in tops.items()]
        out["fixed_pair_dimension"] = fixed_dim
        out["agree"] = fixed_dim == dim
        if not out["agree"]:
            raise CommandError(EXIT_ROUTES, out)
    return out


# --- vcd ----------------------------------------------------------------------

def cmd_vcd(doc: InputDocument, jobs: int) -> dict:
    if doc.mode not in ("coxeter", "graph_product"):
        raise InputError(f"vcd needs a coxeter or graph_product document, got {doc.mode}")
    M = doc.coxeter()
    link_dim, link_rows = vcd_link_formula(M)
    bld_dim, bld_rows = cd_building_formula(M)
    per_j = cross_check(M)
    out = {
        "headline": link_dim,
        "link_formula": {"dimension": link_dim, "table": [r.to_dict() for r in link_rows]},
        "building_formula": {"dimension": bld_dim, "table": [r.to_dict() for r in bld_rows]},
        "per_J_agreement": [{"J": list(J), "agree": ok} for J, ok in per_j],
        "spherical_subsets": len(spherical_poset(M).subsets),
        "agree": link_dim == bld_dim and all(ok for _, ok in per_j),
    }
    if not out["agree"]:
        raise CommandError(EXIT_ROUTES, out)
    return out


# --- verify -------------------------------------------------------------------

@lru_cache(maxsize=4)
def _development(text: str):
    doc = parse_document(json.loads(text))
    return develop(doc.complex_of_groups())


def _verify_one(text: str, theorem: str, J: str) -> dict:
    dev = _development(text)
    fp = fixed_pair(dev, J)
    if theorem == "decomposition":
        return verify_decomposition(dev, J, fp).to_dict()
    if theorem == "bredon":
        return verify_bredon(dev, J, fp).to_dict()
    return lemma34_check(dev, J, fp).to_dict()


def _fan_out(text: str, theorem: str, Js: list[str], jobs: int) -> list[dict]:
    if jobs <= 1 or len(Js) <= 1:
        return [_verify_one(text, theorem, J) for J in Js]
    with ProcessPoolExecutor(max_workers=min(jobs, len(Js))) as pool:
        return list(pool.map(_verify_one, [text] * len(Js), [theorem] * len(Js), Js))


def cmd_verify(doc: InputDocument, jobs: int, theorem: str) -> dict:
    if doc.mode != "finite_development":
        raise InputError(f"verify needs a finite_development document, got {doc.mode}")
    scog = doc.complex_of_groups()
    validate(scog)
    dev = develop(scog)
    if theorem == "acyclic":
        results = [v.to_dict() for v in check_acyclicity(dev)]
    else:
        text = dump_document(doc)
        results = _fan_out(text, theorem, list(scog.Q.elements), jobs)
    out = {
        "theorem": theorem,
        "results": results,
        "stabilizers_admissible": stabilizer_admissible(dev),
    }
    out["passed"] = all(r["passed"] for r in results) and out["stabilizers_admissible"]
    out["witnesses"] = [
        {"J": r["J"], "degree": row["degree"]}
        for r in results for row in r["degrees"] if not row["match"]
    ] + [{"J": r["J"], "check": name} for r in results for name, ok in r["checks"].items() if not ok]
    if not out["passed"]:
        raise CommandError(EXIT_MISMATCH, out)
    return out


# --- develop ------------------------------------------------------------------

def cmd_develop(doc: InputDocument, jobs: int, dump: bool = False) -> dict:
    if doc.mode != "finite_development":
        raise InputError(f"develop needs a finite_development document, got {doc.mode}")
    scog = doc.complex_of_groups()
    validate(scog)
    dev = develop(scog)
    X = dev.X
    f = X.f_vector()
    graph = nx.Graph()
    graph.add_nodes_from(X.vertex_order)
    graph.add_edges_from(X.faces_of_dim(1))
    out = {
        "group_order": scog.G.order,
        "vertices": f[0] if f else 0,
        "edges": f[1] if len(f) > 1 else 0,
        "f_vector": f,
        "dimension": X.dimension,
        "components": nx.number_connected_components(graph),
        "orbits": [
            {
                "J": J,
                "orbit_size": len(dev.coset_reps[J]),
                "stabilizer_order": scog.locals[J].order,
                "stabilizer_generators": [list(g) for g in scog.locals[J].generators],
            }
            for J in scog.Q.elements
        ],
    }
    if dump:
        out["faces"] = {str(k): [list(c) for c in X.faces_of_dim(k)] for k in range(X.dimension + 1)}
    return out


# --- rendering ----------------------------------------------------------------

def _render_group(g: dict) -> str:
    parts = []
    if g["betti"]:
        parts.append("Z" if g["betti"] == 1 else f"Z^{g['betti']}")
    parts += [f"Z/{t}" for t in g["torsion"]]
    return " + ".join(parts) or "0"


def _render_nonzero(d: dict, shift: str = "") -> str:
    if not d:
        return "-"
    return ", ".join(f"H^{shift}{n} = {_render_group(g)}" for n, g in d.items())


def render_text(command: str, report: dict) -> str:
    lines = [f"bredon {command}" + (f" [{report['name']}]" if report.get("name") else "")]
    if command == "cd":
        lines.append(f"dimension: {report['headline']}  (formula: {report['formula']})")
        for row in report["table"]:
            if "omega" in row:
                label = "{" + ",".join(row["omega"]) + "}"
                lines.append(f"  class {label}: {_render_nonzero(row['nonzero'])}")
            else:
                lines.append(f"  J = {{{','.join(row['J'])}}}: reduced {_render_nonzero(row['nonzero_reduced'])}")
        if "fixed_pairs" in report:
            for r in report["fixed_pairs"]:
                lines.append(f"  fixed pair at {r['J']}: top degree {r['top_degree']}")
            lines.append(f"fixed-pair dimension: {report['fixed_pair_dimension']}  agree: {report['agree']}")
    elif command == "vcd":
        lines.append(f"vcd: {report['headline']}  agree: {report['agree']}  "
                     f"spherical subsets: {report['spherical_subsets']}")
        for key in ("link_formula", "building_formula"):
            sub = report[key]
            lines.append(f"  {key} = {sub['dimension']}")
            for row in sub["table"]:
                lines.append(f"    J = {{{','.join(row['J'])}}}: reduced {_render_nonzero(row['nonzero_reduced'])}")
        bad = [r["J"] for r in report["per_J_agreement"] if not r["agree"]]
        lines.append(f"  per-J agreement: {len(report['per_J_agreement']) - len(bad)}/{len(report['per_J_agreement'])}")
    elif command == "verify":
        lines.append(f"theorem: {report['theorem']}  passed: {report['passed']}  "
                     f"stabilizers admissible: {report['stabilizers_admissible']}")
        for r in report["results"]:
            status = "pass" if r["passed"] else "FAIL"
            lines.append(f"  {r['J']}: {status}")
            for row in r["degrees"]:
                mark = "" if row["match"] else "  <-- mismatch"
                lines.append(f"    H^{row['degree']}: {_render_group(row['left'])} | "
                             f"{_render_group(row['right'])}{mark}")
            for name, ok in r["checks"].items():
                lines.append(f"    {name}: {ok}")
            for note in r["notes"]:
                lines.append(f"    {note}")
        for w in report["witnesses"]:
            lines.append(f"  witness: {w}")
    elif command == "develop":
        lines.append(f"|G| = {report['group_order']}  vertices: {report['vertices']}  "
                     f"edges: {report['edges']}  f-vector: {report['f_vector']}  "
                     f"components: {report['components']}")
        for o in report["orbits"]:
            lines.append(f"  orbit {o['J']}: size {o['orbit_size']}, stabilizer order {o['stabilizer_order']}, "
                         f"generators {o['stabilizer_generators']}")
        for k, faces in report.get("faces", {}).items():
            lines.append(f"  {k}-faces ({len(faces)}):")
            lines += [f"    {face_label(tuple(c))}" for c in faces]
    if "timing" in report:
        lines.append(f"time: {report['timing']['seconds']:.3f} s")
    return "\n".join(lines) + "\n"


# --- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="parallel per-J workers (default: available CPUs)")
    common.add_argument("--size-cap", type=int, default=argparse.SUPPRESS,
                        help="largest group the enumerator will build")

    p = argparse.ArgumentParser(prog="bredon", parents=[common],
                                description="Bredon and virtual cohomological dimension at finite scale.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_ in [("cd", "Bredon cohomological dimension"),
                        ("vcd", "virtual cohomological dimension of a Coxeter group, two routes"),
                        ("verify", "brute-force checks on a finite development"),
                        ("develop", "build and summarize a finite development")]:
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.add_argument("-i", "--input", required=True, help="JSON input document ('-' for stdin)")
        if name == "verify":
            sp.add_argument("--theorem", choices=THEOREMS, required=True)
        if name == "develop":
            sp.add_argument("--dump", action="store_true", help="include the full face list")
    return p


def _emit(fmt: str, command: str, report: dict, stream=None):
    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        stream.write(render_text(command, report))


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cap = getattr(args, "size_cap", None)
    if cap is None:
        return _run(args)
    # workers read the cap from the environment; restore it for in-process callers
    saved = os.environ.get("BREDON_SIZE_CAP")
    os.environ["BREDON_SIZE_CAP"] = str(cap)
    try:
        return _run(args)
    finally:
        if saved is None:
            del os.environ["BREDON_SIZE_CAP"]
        else:
            os.environ["BREDON_SIZE_CAP"] = saved


def _run(args) -> int:
    fmt = getattr(args, "format", "text")
    jobs = getattr(args, "jobs", None) or os.cpu_count() or 1
    start = time.perf_counter()
    head = {"schema_version": SCHEMA_VERSION, "command": args.command}
    code = EXIT_OK
    try:
        doc = load_document(args.input)
        head["mode"] = doc.mode
        if doc.name:
            head["name"] = doc.name
        if args.command == "cd":
            body = cmd_cd(doc, jobs)
        elif args.command == "vcd":
            body = cmd_vcd(doc, jobs)
        elif args.command == "verify":
            body = cmd_verify(doc, jobs, args.theorem)
        else:
            body = cmd_develop(doc, jobs, args.dump)
    except CommandError as exc:
        body, code = exc.report, exc.code
    except BredonError as exc:
        err = {**head, "error": {"type": type(exc).__name__, "message": str(exc), "exit_code": EXIT_INPUT}}
        if fmt == "json":
            _emit("json", args.command, err)
        sys.stderr.write(json.dumps(err["error"], sort_keys=True) + "\n")
        return EXIT_INPUT
    report = {**head, **body, "exit_code": code,
              "timing": {"seconds": round(time.perf_counter() - start, 6)}}
    _emit(fmt, args.command, report)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
