"""JSON file formats for algebras, 2-tensors, matrices and bilinear forms.

All rationals are written as strings "p/q" ("p" alone for integers); floats
are rejected.  Files store only nonzero entries.  Basis indices in files are
1-based to match how bracket tables are usually printed.

Schemas:

  algebra:  {"dim": n, "basis": ["e1", ...],
             "brackets": [{"left": "e1", "right": "e2",
                           "value": [["1", "e1"], ...]}, ...]}
  tensor2:  {"kind": "tensor2", "dim": n, "algebra": "<optional name>",
             "terms": [{"i": 1, "j": 2, "c": "3/2"}, ...]}
  matrix:   {"kind": "matrix", "rows": n, "cols": n,
             "entries": [{"i": 1, "j": 2, "c": "-1"}, ...]}

A bilinear form is stored as a matrix of its values on basis pairs.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .linalg import Matrix, TwoTensor, ZERO
from .algebra import LeibnizAlgebra


class ParseError(Exception):
    pass


def parse_rational(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ParseError(f"rational must be a 'p/q' string, got {s!r}")
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {s!r}: {exc}") from None


def format_rational(q: Fraction) -> str:
    return str(q)


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None


def _dump_json(obj, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def load_algebra(path, check=True) -> LeibnizAlgebra:
    data = _load_json(path)
    try:
        dim = int(data["dim"])
        basis = list(data["basis"])
        brackets = data.get("brackets", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{path}: malformed algebra file ({exc})") from None
    if dim < 0 or len(basis) != dim:
        raise ParseError(f"{path}: basis names do not match dim")
    index = {name: i for i, name in enumerate(basis)}
    if len(index) != dim:
        raise ParseError(f"{path}: duplicate basis names")
    cube = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    for entry in brackets:
        try:
            left, right, value = entry["left"], entry["right"], entry["value"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"{path}: malformed bracket entry ({exc})") from None
        for name in (left, right):
            if name not in index:
                raise ParseError(f"{path}: unknown basis name {name!r}")
        for coeff, name in value:
            if name not in index:
                raise ParseError(f"{path}: unknown basis name {name!r}")
            cube[index[left]][index[right]][index[name]] += parse_rational(coeff)
    return LeibnizAlgebra.from_cube(cube, basis, check=check)


def save_algebra(alg: LeibnizAlgebra, path):
    brackets = []
    for i in range(alg.dim):
        for j in range(alg.dim):
            value = [[format_rational(c), alg.basis_names[k]]
                     for k, c in enumerate(alg.sc[i][j]) if c != 0]
            if value:
                brackets.append({"left": alg.basis_names[i],
                                 "right": alg.basis_names[j],
                                 "value": value})
    _dump_json({"dim": alg.dim, "basis": list(alg.basis_names),
                "brackets": brackets}, path)


def load_tensor2(path, expect_dim=None) -> TwoTensor:
    data = _load_json(path)
    if data.get("kind", "tensor2") != "tensor2":
        raise ParseError(f"{path}: expected a tensor2 file")
    try:
        dim = int(data["dim"])
    except (KeyError, ValueError) as exc:
        raise ParseError(f"{path}: malformed tensor file ({exc})") from None
    if expect_dim is not None and dim != expect_dim:
        raise ParseError(f"{path}: tensor dim {dim} does not match algebra "
                         f"dim {expect_dim}")
    grid = [[ZERO] * dim for _ in range(dim)]
    for term in data.get("terms", []):
        try:
            i, j = int(term["i"]), int(term["j"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"{path}: malformed term ({exc})") from None
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise ParseError(f"{path}: index ({i},{j}) outside 1..{dim}")
        grid[i - 1][j - 1] += parse_rational(term["c"])
    return TwoTensor.from_grid(grid)


def save_tensor2(t: TwoTensor, path, algebra=""):
    terms = [{"i": i + 1, "j": j + 1, "c": format_rational(c)}
             for i, row in enumerate(t.coeff) for j, c in enumerate(row) if c != 0]
    data = {"kind": "tensor2", "dim": t.dim, "terms": terms}
    if algebra:
        data["algebra"] = algebra
    _dump_json(data, path)


def load_matrix(path, expect_dim=None) -> Matrix:
    data = _load_json(path)
    if data.get("kind", "matrix") not in ("matrix", "form"):
        raise ParseError(f"{path}: expected a matrix or form file")
    try:
        rows, cols = int(data["rows"]), int(data["cols"])
    except (KeyError, ValueError) as exc:
        raise ParseError(f"{path}: malformed matrix file ({exc})") from None
    if expect_dim is not None and (rows, cols) != (expect_dim, expect_dim):
        raise ParseError(f"{path}: matrix shape {rows}x{cols} does not match "
                         f"algebra dim {expect_dim}")
    grid = [[ZERO] * cols for _ in range(rows)]
    for entry in data.get("entries", []):
        try:
            i, j = int(entry["i"]), int(entry["j"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"{path}: malformed entry ({exc})") from None
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise ParseError(f"{path}: index ({i},{j}) out of range")
        grid[i - 1][j - 1] += parse_rational(entry["c"])
    return Matrix.from_rows(grid)


def save_matrix(m: Matrix, path, kind="matrix"):
    entries = [{"i": i + 1, "j": j + 1, "c": format_rational(c)}
               for i, row in enumerate(m.entries) for j, c in enumerate(row)
               if c != 0]
    _dump_json({"kind": kind, "rows": m.rows, "cols": m.cols,
                "entries": entries}, path)


def parse_vector(text, dim) -> tuple:
    """Comma-separated rationals, e.g. '1,0,-1/2,0'."""
    parts = [p for p in text.split(",")]
    if len(parts) != dim:
        raise ParseError(f"vector needs {dim} comma-separated entries, "
                         f"got {len(parts)}")
    return tuple(parse_rational(p) for p in parts)
