"""Command-line interface.

Exit codes depend only on the verdict, never on ``--json``:

0  success (identity holds, algebra simple, analysis done)
1  parse, usage or domain error
2  the Leibniz identity fails (counterexample found)
3  not simple
4  simplicity inconclusive
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import report
from .algebra import (
    LeibnizAlgebra,
    center,
    classify,
    derived_series,
    ideal_closure,
    is_ideal,
    leibniz_kernel,
    liezation,
    lower_central_series,
    squares_left_annihilate,
    squares_right_annihilate,
    verify_leibniz,
)
from .chains import quasi_noetherian_witness, stabilization_index, validate_chain
from .derivations import (
    LinearMap,
    central_derivation_space,
    derivation_space,
    extend_by_central_derivation,
    extract_theta,
    is_central_characteristic,
    is_characteristic,
    is_split_extension,
)
from .errors import LeibalgError
from .exactla import Matrix
from .families import build_example_4_9, build_truncated_4_10
from .io import emit_algebra, parse_algebra
from .simple import Verdict, is_simple

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_NOT_SIMPLE = 3
EXIT_INCONCLUSIVE = 4

VERDICT_EXIT = {
    Verdict.SIMPLE: EXIT_OK,
    Verdict.NOT_SIMPLE: EXIT_NOT_SIMPLE,
    Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- argument helpers ---------------------------------------------------------


def _rational(token: str) -> Fraction:
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {token!r}") from None


def parse_vectors(spec: str, dim: int) -> list[tuple]:
    """``"1,0,0;0,1/2,0"`` -> list of vectors.  An empty spec is the zero subspace."""
    out = []
    for chunk in spec.split(";"):
        if not chunk.strip():
            continue
        vec = tuple(_rational(t) for t in chunk.split(","))
        if len(vec) != dim:
            raise UsageError(f"vector {chunk.strip()!r} has {len(vec)} entries, algebra has dimension {dim}")
        out.append(vec)
    return out


def parse_matrix(spec: str, dim: int) -> Matrix:
    """Rows separated by ``;``, entries by ``,``; column j is the image of e_j."""
    rows = [tuple(_rational(t) for t in r.split(",")) for r in spec.split(";") if r.strip()]
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise UsageError(f"derivation matrix must be {dim}x{dim}")
    return Matrix.from_rows(rows)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8-sig", newline="") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(args) -> LeibnizAlgebra:
    return parse_algebra(_read(args.file))


# -- subcommands --------------------------------------------------------------
# Each returns (algebra or None, results dict, exit code, text lines).


def cmd_validate(args):
    g = _load(args)
    check = verify_leibniz(g, "lemma17" if args.lemma17 else "full", args.identity)
    res = {
        "identity": check.identity.value,
        "mode": check.mode,
        "ok": check.ok,
        "counterexample": report.triple(check.counterexample),
        "fell_back": check.fell_back,
        "triples_checked": check.triples_checked,
        "squares_left_annihilate": squares_left_annihilate(g),
        "squares_right_annihilate": squares_right_annihilate(g),
    }
    if check.ok:
        text = [f"{check.identity.value} Leibniz identity holds ({check.triples_checked} triples, {check.mode})"]
    else:
        x, y, z = report.triple(check.counterexample)
        text = [f"{check.identity.value} Leibniz identity fails at (x,y,z) = ({x},{y},{z})"]
    if check.fell_back:
        text.append("squares do not annihilate; full scan used")
    return g, res, EXIT_OK if check.ok else EXIT_COUNTEREXAMPLE, text


def cmd_analyze(args):
    g = _load(args)
    cls = classify(g)
    ds, lcs = derived_series(g), lower_central_series(g)
    centers = {side: center(g, side) for side in ("left", "right", "both")}
    leib = leibniz_kernel(g)
    res = {
        "classification": dataclasses.asdict(cls),
        "derived_series": report.series(ds),
        "lower_central_series": report.series(lcs),
        "centers": {k: report.subspace(v) for k, v in centers.items()},
        "center_dims": {k: v.dim for k, v in centers.items()},
        "leibniz_kernel": report.subspace(leib),
        "leibniz_kernel_dim": leib.dim,
        "liezation_dim": liezation(g).dim,
    }
    text = [
        f"derived dims: {list(ds.dims)}",
        f"lower central dims: {list(lcs.dims)}",
        f"abelian={cls.abelian} nilpotent={cls.nilpotent} class={cls.nilpotency_class} "
        f"solvable={cls.solvable} length={cls.derived_length}",
        f"center dims: left={centers['left'].dim} right={centers['right'].dim} two-sided={centers['both'].dim}",
        f"Leib dim: {leib.dim}, Liezation dim: {g.dim - leib.dim}",
    ]
    return g, res, EXIT_OK, text


def cmd_ideal(args):
    g = _load(args)
    s = g.span(parse_vectors(args.span, g.dim))
    two = is_ideal(g, s)
    res = {
        "subspace": report.subspace(s),
        "is_left_ideal": is_ideal(g, s, "left"),
        "is_right_ideal": is_ideal(g, s, "right"),
        "is_ideal": two,
        "closure": {side: report.subspace(ideal_closure(g, s, side)) for side in ("left", "right", "two_sided")},
        "characteristic": is_characteristic(g, s) if two else None,
        "central_characteristic": is_central_characteristic(g, s) if two else None,
    }
    text = [f"two-sided ideal: {two}", f"closure dim: {ideal_closure(g, s).dim}"]
    if two:
        text.append(f"characteristic: {res['characteristic']}, central-characteristic: {res['central_characteristic']}")
    return g, res, EXIT_OK, text


def cmd_derivations(args):
    g = _load(args)
    ds = central_derivation_space(g) if args.central else derivation_space(g)
    res = {"flavor": ds.flavor, "dim": ds.dim, "basis": [report.matrix(d.matrix) for d in ds.basis]}
    text = [f"{'central ' if args.central else ''}derivations: dim {ds.dim}"]
    for d in ds.basis:
        text.append("  " + "; ".join(",".join(str(x) for x in row) for row in d.matrix.rows))
    return g, res, EXIT_OK, text


def cmd_simple(args):
    g = _load(args)
    result = is_simple(g, seed=args.seed)
    res = {
        "verdict": result.verdict.value,
        "witness": None if result.witness is None else report.subspace(result.witness),
        "reason": result.reason,
    }
    text = [f"{result.verdict.value}: {result.reason}"]
    if result.witness is not None:
        text.append(f"witness ideal: {res['witness']}")
    return g, res, VERDICT_EXIT[result.verdict], text


def cmd_chain(args):
    g = _load(args)
    specs = [t for arg in args.terms for t in arg.split("|")]
    chain = validate_chain(g, [g.span(parse_vectors(t, g.dim)) for t in specs])
    w = quasi_noetherian_witness(chain)
    q = stabilization_index(chain)
    res = {
        "terms": [report.subspace(t) for t in chain.terms],
        "dims": [t.dim for t in chain.terms],
        "union": report.subspace(chain.union),
        "stabilization_index": q,
        "m_left": w.m_left,
        "m_right": w.m_right,
    }
    text = [f"chain dims: {res['dims']}", f"stabilizes at: {q}", f"witness (m_left, m_right) = ({w.m_left}, {w.m_right})"]
    return g, res, EXIT_OK, text


def cmd_split(args):
    g = _load(args)
    i_part = g.span(parse_vectors(args.i, g.dim))
    j_part = g.span(parse_vectors(args.j, g.dim))
    split = is_split_extension(g, i_part, j_part)
    res = {"is_split_extension": split, "theta": None}
    text = [f"split extension: {split}"]
    if split:
        theta = extract_theta(g, i_part, j_part)
        res["theta"] = [{"a": report.vector(a), "matrix": report.matrix(d.matrix)} for a, d in theta]
        text.append(f"theta: {len(theta)} derivations of I, homomorphism verified")
    return g, res, EXIT_OK, text


def cmd_extend(args):
    g = _load(args)
    d = LinearMap(g, parse_matrix(args.derivation, g.dim))
    ext = extend_by_central_derivation(g, d)
    doc = emit_algebra(ext)
    return ext, {"document": doc}, EXIT_OK, [doc.rstrip("\n")]


def cmd_family(args):
    if args.family == "4.9":
        g = build_example_4_9()
    else:
        if args.dim is None:
            raise UsageError("family 4.10 needs --dim D")
        g = build_truncated_4_10(args.dim)
    doc = emit_algebra(g)
    return g, {"document": doc}, EXIT_OK, [doc.rstrip("\n")]


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print a JSON report")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for the irreducibility test (default 0)")

    parser = _Parser(prog="leibalg", description="Exact computations with Leibniz algebras over Q.", parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def add(name, func, help_, file=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if file:
            p.add_argument("file", metavar="FILE", help="algebra document, or - for stdin")
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "check the Leibniz identity")
    p.add_argument("--lemma17", action="store_true", help="use the reduced triple scan when squares annihilate")
    p.add_argument("--identity", choices=("left", "right"), default="left")

    add("analyze", cmd_analyze, "series, centers, Leibniz kernel")

    p = add("ideal", cmd_ideal, "ideal tests for a spanned subspace")
    p.add_argument("--span", required=True, metavar="SPEC", help="vectors separated by ';', entries by ','")

    p = add("derivations", cmd_derivations, "basis of the derivation algebra")
    p.add_argument("--central", action="store_true")

    add("simple", cmd_simple, "three-valued simplicity test")

    p = add("chain", cmd_chain, "validate an ideal chain and find its witness")
    p.add_argument("--terms", required=True, action="append", metavar="SPEC", help="one chain term; repeat, or separate terms with '|'")

    p = add("split", cmd_split, "split extension test and theta extraction")
    p.add_argument("--i", required=True, metavar="SPEC")
    p.add_argument("--j", required=True, metavar="SPEC")

    p = add("extend", cmd_extend, "extend by a central derivation")
    p.add_argument("--derivation", required=True, metavar="MATRIX", help="rows separated by ';'; column j is the image of e_j")

    p = add("family", cmd_family, "emit a generator document", file=False)
    p.add_argument("family", choices=("4.9", "4.10"))
    p.add_argument("--dim", type=int)
    return parser


def _emit(payload: dict, text: list[str], as_json: bool, stream) -> None:
    if as_json:
        stream.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        stream.write("\n".join(text) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    command = None
    try:
        args = build_parser().parse_args(argv)
        as_json = getattr(args, "json", False)
        args.seed = getattr(args, "seed", 0)
        command = args.command
        g, results, code, text = args.func(args)
    except (UsageError, LeibalgError) as exc:
        payload = report.error_report(command, exc)
        if as_json:
            _emit(payload, [], True, sys.stdout)
        else:
            sys.stderr.write(f"leibalg: error: {payload['error']['message'] if not hasattr(exc, 'line') else exc}\n")
        return EXIT_ERROR
    if command in ("extend", "family") and not as_json:
        sys.stdout.write(results["document"])
        return code
    _emit(report.make_report(command, g, results), text, as_json, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
