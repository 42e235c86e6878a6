"""JSON-ready serialization of results.

Rationals become ``"p/q"`` strings (``str(Fraction)``, so integers carry no
denominator) and subspaces become their RREF basis rows.  No floats are
ever produced.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import __version__
from .algebra import AnchoredSubspace, LeibnizAlgebra, SeriesReport
from .errors import LeibalgError, ParseError
from .exactla import Matrix, Subspace

TOOL = "leibalg"


def rational(x) -> str:
    return str(Fraction(x))


def vector(v: Sequence) -> list[str]:
    return [rational(x) for x in v]


def subspace(s: AnchoredSubspace | Subspace) -> list[list[str]]:
    return [vector(b) for b in s.basis]


def matrix(m: Matrix) -> list[list[str]]:
    return [vector(r) for r in m.rows]


def series(s: SeriesReport) -> dict:
    return {"dims": list(s.dims), "terms": [subspace(t) for t in s.terms], "stabilized": s.stabilized}


def triple(t) -> list[str] | None:
    return None if t is None else [f"e{i + 1}" for i in t]


def make_report(command: str, g: LeibnizAlgebra | None, results: dict) -> dict:
    return {
        "tool": TOOL,
        "version": __version__,
        "command": command,
        "algebra": None if g is None else {"name": g.name, "dim": g.dim},
        "results": results,
    }


def error_report(command: str | None, exc: BaseException) -> dict:
    err = {"type": type(exc).__name__, "message": getattr(exc, "message", None) or str(exc)}
    if isinstance(exc, ParseError):
        err["line"] = exc.line
        err["column"] = exc.column
    index = getattr(exc, "index", None)
    if isinstance(exc, LeibalgError) and index is not None:
        err["index"] = index
    return {"tool": TOOL, "version": __version__, "command": command, "error": err}
