"""Command line front end.

Input documents are line oriented::

    dim 2
    X1: 0 1 ; 0 0
    X2: 2 3 ; 0 2

Rows are separated by ``;`` and entries by whitespace; entries are rationals
``p`` or ``p/q``.  A ``/`` surrounded by whitespace also ends a line, so the
whole document fits on one line.  ``#`` starts a comment.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import algebra
from .classify import Decomposable, Label, classify, construct, iso_criterion
from .errors import ParseError, SuperJordanError
from .exactmath import Mat, format_rational, parse_rational
from .modtheory import (
    Representation,
    check_representation,
    decompose_with_bases,
    isomorphism,
    t_eigenvalues,
)
from .sampling import THREE_DIM, TWO_DIM, random_conjugate, random_label


@dataclass(frozen=True)
class InputDocument:
    dim: int
    X1: Mat
    X2: Mat

    def representation(self) -> Representation:
        return Representation(self.X1, self.X2)


_SEPARATOR = re.compile(r"(?<=\s)/(?=\s)|(?<=\s)/$|^/(?=\s)")
_TOKEN = re.compile(r"\S+")


def _logical_lines(text: str):
    """Yield (line number, start column, segment) with comments stripped."""
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        start = 0
        for m in _SEPARATOR.finditer(line):
            yield lineno, start, line[start:m.start()]
            start = m.end()
        yield lineno, start, line[start:]


def _parse_matrix(body: str, lineno: int, col0: int, dim: int, name: str) -> Mat:
    rows = []
    offset = 0
    for chunk in body.split(";"):
        row = []
        for m in _TOKEN.finditer(chunk):
            try:
                row.append(parse_rational(m.group()))
            except ValueError:
                raise ParseError(f"malformed entry {m.group()!r} in {name}", lineno, col0 + offset + m.start() + 1) from None
        if len(row) != dim:
            raise ParseError(f"{name}: row {len(rows) + 1} has {len(row)} entries, expected {dim}",
                             lineno, col0 + offset + 1)
        rows.append(row)
        offset += len(chunk) + 1
    if len(rows) != dim:
        raise ParseError(f"{name}: {len(rows)} rows, expected {dim}", lineno, col0 + 1)
    return Mat(rows, dim)


def parse_input(text: str) -> InputDocument:
    dim = None
    mats = {}
    for lineno, start, seg in _logical_lines(text):
        stripped = seg.strip()
        if not stripped:
            continue
        col = start + (len(seg) - len(seg.lstrip())) + 1
        m = re.fullmatch(r"dim\s+(\S+)", stripped)
        if m:
            if dim is not None:
                raise ParseError("duplicate dim line", lineno, col)
            if not re.fullmatch(r"\d+", m.group(1)):
                raise ParseError(f"dimension must be a positive integer, got {m.group(1)!r}", lineno, col)
            dim = int(m.group(1))
            if dim < 1:
                raise ParseError("dimension must be at least 1", lineno, col)
            continue
        m = re.match(r"(X1|X2)\s*:", stripped)
        if not m:
            raise ParseError(f"expected 'dim N', 'X1:' or 'X2:', got {stripped!r}", lineno, col)
        name = m.group(1)
        if dim is None:
            raise ParseError(f"{name} given before the dim line", lineno, col)
        if name in mats:
            raise ParseError(f"duplicate {name}", lineno, col)
        mats[name] = _parse_matrix(stripped[m.end():], lineno, col + m.end(), dim, name)
    if dim is None:
        raise ParseError("missing dim line")
    for name in ("X1", "X2"):
        if name not in mats:
            raise ParseError(f"missing {name}")
    return InputDocument(dim, mats["X1"], mats["X2"])


def format_document(R: Representation) -> str:
    def mat(M):
        return " ; ".join(" ".join(format_rational(x) for x in row) for row in M.data)

    return f"dim {R.n}\nX1: {mat(R.X1)}\nX2: {mat(R.X2)}\n"


# ---------------------------------------------------------------------------
# reports


@dataclass
class Report:
    command: str
    verdict: str
    payload: dict = field(default_factory=dict)
    ok: bool = True

    def to_json(self) -> str:
        return json.dumps({"command": self.command, "verdict": self.verdict, "ok": self.ok,
                           "payload": self.payload}, indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"command: {self.command}", f"verdict: {self.verdict}"]
        lines.extend(_text_lines(self.payload, 0))
        return "\n".join(lines)


def _text_lines(obj, depth):
    pad = "  " * depth
    out = []
    for key, val in obj.items():
        if isinstance(val, dict):
            out.append(f"{pad}{key}:")
            out.extend(_text_lines(val, depth + 1))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            out.append(f"{pad}{key}:")
            for i, item in enumerate(val, 1):
                out.append(f"{pad}  [{i}]")
                out.extend(_text_lines(item, depth + 2))
        elif isinstance(val, list):
            out.append(f"{pad}{key}: " + ", ".join(_scalar(v) for v in val))
        else:
            out.append(f"{pad}{key}: {_scalar(val)}")
    return out


def _scalar(v):
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _mat_rows(M: Mat) -> list:
    return [[format_rational(x) for x in row] for row in M.data]


def _vec(v) -> list:
    return [format_rational(Fraction(x)) for x in v]


# ---------------------------------------------------------------------------
# commands


def cmd_check(doc: InputDocument) -> Report:
    rep = check_representation(doc.X1, doc.X2)
    if rep.valid:
        return Report("check", "valid", {"dim": doc.dim})
    i, j, x = rep.witness
    return Report("check", "relation violated",
                  {"dim": doc.dim, "relation": rep.relation,
                   "witness": {"row": i + 1, "column": j + 1, "value": format_rational(x)}}, ok=False)


def cmd_classify(doc: InputDocument) -> Report:
    result = classify(doc.representation())
    if isinstance(result, Decomposable):
        return Report("classify", "decomposable", {"summands": [str(s) for s in result.summands]})
    return Report("classify", str(result), {"dim": result.dim})


def cmd_decompose(doc: InputDocument) -> Report:
    R = doc.representation()
    summands = []
    for W, sub in decompose_with_bases(R):
        summands.append({
            "dim": sub.n,
            "T_eigenvalue": format_rational(t_eigenvalues(sub)[0]),
            "basis": [_vec(v) for v in W.basis],
            "X1": _mat_rows(sub.X1),
            "X2": _mat_rows(sub.X2),
        })
    return Report("decompose", f"{len(summands)} summand(s)",
                  {"dims": [s["dim"] for s in summands], "summands": summands})


def cmd_iso(a: InputDocument, b: InputDocument) -> Report:
    H = isomorphism(a.representation(), b.representation())
    if H is None:
        return Report("iso", "not isomorphic", {"isomorphic": False})
    return Report("iso", "isomorphic", {"isomorphic": True, "intertwiner": _mat_rows(H)})


def cmd_construct(text: str) -> Report:
    L = Label.parse(text)
    R = construct(L)
    return Report("construct", str(L), {"dim": R.n, "X1": _mat_rows(R.X1), "X2": _mat_rows(R.X2),
                                        "document": format_document(R).strip().replace("\n", " / ")})


def cmd_nf(word: str) -> Report:
    try:
        value = algebra.reduce_word(word)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return Report("nf", algebra.format_element(value), {"word": word.strip()})


def cmd_selftest(bmax: int = 6, cmax: int = 6, nmax: int = 8, samples: int = 20, seed: int = 0) -> Report:
    rows = []
    ok = True
    for lam in (Fraction(0), Fraction(1), Fraction(-3, 2)):
        for c in algebra.check_identities(bmax, cmax, nmax, lam).checks:
            rows.append({"check": c.name, "lambda": format_rational(lam), "cases": c.cases,
                         "passed": c.passed, **({"counterexample": c.counterexample} if c.counterexample else {})})
            ok &= c.passed
    emb = algebra.embedding_check(8)
    rows.append({"check": "y1 -> t, y2 -> s is multiplicative", "cases": emb.pairs, "passed": emb.passed})
    ok &= emb.passed
    mons = algebra.monomials_up_to(8)
    rt = all(algebra.expand_right_module(algebra.right_module_generators(m)) == algebra.PBWElement.monomial(*m)
             for m in mons)
    rows.append({"check": "right module generators round trip", "cases": len(mons), "passed": rt})
    ok &= rt
    rng = random.Random(seed)
    failures = 0
    names = list(TWO_DIM) + list(THREE_DIM)
    for i in range(samples):
        L = random_label(rng, names[i % len(names)])
        got = classify(random_conjugate(rng, construct(L)))
        if isinstance(got, Decomposable) or not iso_criterion(L, got):
            failures += 1
    rows.append({"check": "classification round trip", "cases": samples, "passed": failures == 0})
    ok &= failures == 0
    return Report("selftest", "pass" if ok else "fail",
                  {"bounds": {"bmax": bmax, "cmax": cmax, "nmax": nmax}, "checks": rows}, ok=ok)


# ---------------------------------------------------------------------------
# entry point


def _read(path: str) -> InputDocument:
    if path == "-":
        return parse_input(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_input(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="superjordan", description="Modules over the super Jordan plane.")
    p.add_argument("--json", action="store_true", help="emit a JSON object instead of text")
    sub = p.add_subparsers(dest="command", required=True)
    for name, helptext in (("check", "check the defining relations"),
                           ("classify", "canonical label or summand labels"),
                           ("decompose", "indecomposable summands with bases")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("file", help="input document, or - for stdin")
    sp = sub.add_parser("iso", help="decide isomorphism of two modules")
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    sp = sub.add_parser("construct", help="matrices of a labeled module")
    sp.add_argument("label")
    sp = sub.add_parser("nf", help="normal form of a word in x1, x2")
    sp.add_argument("word")
    sp = sub.add_parser("selftest", help="run the identity suite and sample round trips")
    sp.add_argument("--bmax", type=int, default=6)
    sp.add_argument("--cmax", type=int, default=6)
    sp.add_argument("--nmax", type=int, default=8)
    sp.add_argument("--samples", type=int, default=20)
    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a JSON object instead of text")
    return p


def run_command(args) -> Report:
    c = args.command
    if c == "check":
        return cmd_check(_read(args.file))
    if c == "classify":
        return cmd_classify(_read(args.file))
    if c == "decompose":
        return cmd_decompose(_read(args.file))
    if c == "iso":
        return cmd_iso(_read(args.file_a), _read(args.file_b))
    if c == "construct":
        return cmd_construct(args.label)
    if c == "nf":
        return cmd_nf(args.word)
    if c == "selftest":
        if min(args.bmax, args.cmax, args.nmax) < 1:
            raise ParseError("selftest bounds must be at least 1")
        return cmd_selftest(args.bmax, args.cmax, args.nmax, args.samples)
    raise ParseError(f"unknown command {c!r}")  # pragma: no cover


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run_command(args)
    except SuperJordanError as exc:
        if args.json:
            print(json.dumps({"command": args.command, "error": exc.name, "message": str(exc)}, indent=2))
        print(f"error: {exc.name}: {exc}", file=sys.stderr)
        return 2
    print(report.to_json() if args.json else report.to_text())
    return 0 if report.ok else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
