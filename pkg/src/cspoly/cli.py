"""Command-line front end: generate, info, rigidity, localh, verify.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .complex import ComplexError, SimplicialComplex, graph, is_prime, missing_faces, simplex
from .constructions import (
    cross_polytope_boundary,
    cs_swartz_operation,
    random_script,
    stellar_subdivision_map,
    swartz_demo_instance,
)
from .enumerative import check_ellh_identity, f_vector, g_number, h_polynomial, local_h
from .geometry import GeometryError, realize_cross_polytope, realize_script, realize_simplex
from .rigidity import (
    is_infinitesimally_rigid,
    motions_basis,
    rank,
    rigidity_matrix,
    spans_space,
    stress_basis,
    symmetric_stress_basis,
)
from .serialize import (
    ComplexDocument,
    FormatError,
    complex_to_doc,
    doc_to_complex,
    doc_to_subdivision,
    dumps,
    format_rational,
    loads,
    stresses_to_doc,
    subdivision_to_doc,
)
from .symmetry import CsValidationError, validate_cs
from .verify import ConfigError, load_config, run_all

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2

GENERATE_KINDS = ("simplex", "cross", "stacked", "symmetric-stacked", "swartz-demo", "stellar")


class UsageError(Exception):
    pass


def _positive_dim(text: str) -> int:
    d = int(text)
    if d < 2:
        raise argparse.ArgumentTypeError("dimension must be at least 2")
    return d


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice")

    parser = argparse.ArgumentParser(prog="cspoly", description=__doc__.splitlines()[0])
    verbs = parser.add_subparsers(dest="verb", required=True)

    gen = verbs.add_parser("generate", parents=[common], help="write a complex (with coordinates when geometric)")
    gen.add_argument("kind", choices=GENERATE_KINDS)
    gen.add_argument("--d", type=_positive_dim, default=4, help="ambient dimension")
    gen.add_argument("--steps", type=int, default=1, help="number of stackings")
    gen.add_argument("--base", choices=("simplex", "cross"), default="simplex", help="base for 'stellar'")
    gen.add_argument("-o", "--out", type=Path, help="output file (default: stdout)")

    info = verbs.add_parser("info", parents=[common], help="face numbers, primality, missing faces")
    info.add_argument("path", type=Path)
    info.add_argument("--canonical", action="store_true", help="print the canonical re-serialization only")

    rig = verbs.add_parser("rigidity", parents=[common], help="rank, rigidity and stresses of a realized complex")
    rig.add_argument("path", type=Path)
    rig.add_argument("--stresses", action="store_true", help="dump a stress basis")
    rig.add_argument("--motions", action="store_true", help="dump an infinitesimal motion basis")
    rig.add_argument("--symmetric", action="store_true", help="dump a symmetric stress basis")

    loc = verbs.add_parser("localh", parents=[common], help="local h-polynomials of a subdivision")
    loc.add_argument("path", type=Path)

    ver = verbs.add_parser("verify", parents=[common], help="run the check suite")
    ver.add_argument("config", type=Path, nargs="?", help="JSON config (default suite when omitted)")
    ver.add_argument("--jobs", type=int, default=None, help="run independent checks in parallel")
    ver.add_argument("--failure-dir", type=Path, default=None, help="write failing instances here")
    return parser


def _read_json(path: Path) -> Any:
    try:
        return loads(path.read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _bool(x: bool) -> str:
    return "true" if x else "false"


# -- verbs -----------------------------------------------------------------


def cmd_generate(args: argparse.Namespace) -> int:
    d, seed = args.d, args.seed
    if args.steps < 0:
        raise UsageError("--steps must be non-negative")
    if args.kind == "stellar":
        if args.base == "cross":
            base = cross_polytope_boundary(d).complex
            face = base.facets[0]
        else:
            face = tuple(range(d))
            base = simplex(face)
        _emit(dumps(subdivision_to_doc(stellar_subdivision_map(base, face))), args.out)
        return EXIT_OK
    if args.kind == "swartz-demo":
        if d < 4:
            raise UsageError("swartz-demo needs --d >= 4")
        c, v0, tau = swartz_demo_instance(d)
        out = cs_swartz_operation(c, v0, tau)
        doc = ComplexDocument(out.complex, f"swartz-demo-{d}", out.alpha)
        _emit(dumps(complex_to_doc(doc)), args.out)
        return EXIT_OK
    if args.kind == "simplex":
        p, name = realize_simplex(d, seed), f"simplex-{d}"
    elif args.kind == "cross":
        p, name = realize_cross_polytope(d, seed), f"cross-{d}"
    else:
        kind = "cross" if args.kind == "symmetric-stacked" else "simplex"
        script = random_script(kind, d, args.steps, seed)
        p = realize_script(script, seed)
        name = f"{args.kind}-{d}-{args.steps}-seed{seed}"
    doc = ComplexDocument(p.complex, name, p.alpha, p.embedding)
    _emit(dumps(complex_to_doc(doc)), args.out)
    return EXIT_OK


def _info_record(doc: ComplexDocument) -> dict[str, Any]:
    delta: SimplicialComplex = doc.complex
    d = delta.dim + 1
    pure = delta.is_pure()
    record: dict[str, Any] = {"name": doc.name, "f_vector": list(f_vector(delta)), "pure": pure}
    if pure:
        record["h_polynomial"] = list(h_polynomial(delta))
        record["g"] = {str(r): g_number(delta, r) for r in range(d // 2 + 1)}
        record["prime"] = is_prime(delta)
    # size d + 1 only occurs for the simplex boundary, whose vertex set is missing
    record["missing_faces"] = [list(t) for t in missing_faces(delta, d + 1)]
    if doc.involution is not None:
        try:
            validate_cs(delta, doc.involution)
            record["cs"] = "valid"
        except CsValidationError as exc:
            record["cs"] = f"invalid: {exc}"
    return record


def cmd_info(args: argparse.Namespace) -> int:
    doc = doc_to_complex(_read_json(args.path))
    if args.canonical:
        sys.stdout.write(dumps(complex_to_doc(doc)))
        return EXIT_OK
    record = _info_record(doc)
    if args.json:
        print(json.dumps(record))
        return EXIT_OK
    if doc.name:
        print(f"name: {doc.name}")
    print(f"f-vector: {tuple(record['f_vector'])}")
    print(f"pure: {_bool(record['pure'])}")
    if record["pure"]:
        print(f"h-polynomial: {tuple(record['h_polynomial'])}")
        for r, g in record["g"].items():
            print(f"g_{r} = {g}")
        print(f"prime: {_bool(record['prime'])}")
    print(f"missing faces ({len(record['missing_faces'])}): {record['missing_faces']}")
    if "cs" in record:
        print(f"cs: {record['cs']}")
    return EXIT_OK


def cmd_rigidity(args: argparse.Namespace) -> int:
    doc = doc_to_complex(_read_json(args.path))
    if doc.embedding is None:
        raise UsageError("no embedding: the file has no coordinates")
    g = graph(doc.complex)
    emb = doc.embedding
    m = rigidity_matrix(g, emb)
    basis = stress_basis(m)
    record: dict[str, Any] = {
        "rank": rank(m),
        "spanning": spans_space(g, emb),
        "rigid": spans_space(g, emb) and is_infinitesimally_rigid(g, emb),
        "dim_S": basis.dim,
    }
    sym = None
    if doc.involution is not None:
        sym = symmetric_stress_basis(basis, doc.involution)
        record["dim_S_sym"] = len(sym)
    if args.stresses:
        record["stresses"] = stresses_to_doc(basis)
    if args.symmetric:
        if sym is None:
            raise UsageError("--symmetric needs an involution in the file")
        record["symmetric_stresses"] = stresses_to_doc(type(basis)(basis.edges, tuple(sym)))
    if args.motions:
        record["motions"] = [
            {str(v): [format_rational(x) for x in vec] for v, vec in mo.items()} for mo in motions_basis(g, emb)
        ]
    if args.json:
        print(json.dumps(record))
        return EXIT_OK
    print(f"rank: {record['rank']}")
    line = f"rigid: {_bool(record['rigid'])}, dim S = {record['dim_S']}"
    if "dim_S_sym" in record:
        line += f", dim S_sym = {record['dim_S_sym']}"
    print(line)
    for key in ("stresses", "symmetric_stresses", "motions"):
        if key in record:
            print(f"{key}:")
            for item in record[key]:
                print(f"  {json.dumps(item)}")
    return EXIT_OK


def cmd_localh(args: argparse.Namespace) -> int:
    sub = doc_to_subdivision(_read_json(args.path))
    sub.validate()
    faces = [f for f in sub.base.all_faces() if f]
    table = {f: local_h(sub, f) for f in faces}
    nonzero = {f: ell for f, ell in table.items() if any(ell)}
    holds = check_ellh_identity(sub)
    if args.json:
        print(json.dumps({
            "local_h": [{"face": list(f), "ell": list(ell)} for f, ell in nonzero.items()],
            "ellh_identity": holds,
        }))
    else:
        for f, ell in nonzero.items():
            print(f"l_{list(f)} = {ell}")
        print(f"ell-h identity: {_bool(holds)}")
    return EXIT_OK if holds else EXIT_CHECK_FAILED


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = load_config(args.config)
    if args.jobs is not None:
        cfg.jobs = args.jobs
    if args.failure_dir is not None:
        cfg.failure_dir = str(args.failure_dir)
    cfg.__post_init__()
    reports = run_all(cfg)
    if args.json:
        print(json.dumps([r.to_json() for r in reports]))
    else:
        for r in reports:
            print(r.summary())
    return EXIT_OK if all(r.ok for r in reports) else EXIT_CHECK_FAILED


COMMANDS = {
    "generate": cmd_generate,
    "info": cmd_info,
    "rigidity": cmd_rigidity,
    "localh": cmd_localh,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.verb](args)
    except (UsageError, FormatError, ConfigError, ComplexError, GeometryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
