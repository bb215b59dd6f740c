"""Square matrices over the tropical or supertropical semiring."""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .semiring import (
    NEG_INF,
    TROP_ONE,
    ZERO,
    ST_ONE,
    SupertropScalar,
    TropScalar,
    format_scalar,
    hat,
    nu,
    parse_scalar,
)

Scalar = TropScalar | SupertropScalar


class DimensionError(ValueError):
    pass


class MatrixParseError(ValueError):
    pass


class Matrix:
    """Immutable ``n x n`` matrix; all entries share one scalar class."""

    __slots__ = ("n", "rows", "scalar_type")

    def __init__(self, rows: Sequence[Sequence[Scalar]]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n < 1:
            raise DimensionError("a matrix needs n >= 1")
        if any(len(r) != n for r in rows):
            raise DimensionError("matrix must be square")
        kind = type(rows[0][0])
        if kind not in (TropScalar, SupertropScalar):
            raise TypeError(f"unsupported entry type {kind.__name__}")
        if any(type(x) is not kind for r in rows for x in r):
            raise TypeError("mixed scalar kinds in one matrix")
        self.n = n
        self.rows = rows
        self.scalar_type = kind

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __mul__(self, other: Matrix) -> Matrix:
        return mat_mul(self, other)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_scalar(x) for x in r) for r in self.rows)
        return f"Matrix([{body}])"

    @property
    def kind(self) -> str:
        return "st" if self.scalar_type is SupertropScalar else "trop"

    def entries(self) -> Iterable[tuple[int, int, Scalar]]:
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                yield i, j, x

    def map(self, f) -> Matrix:
        return Matrix([[f(x) for x in r] for r in self.rows])

    @classmethod
    def identity(cls, n: int, kind: str = "st") -> Matrix:
        one, zero = (ST_ONE, ZERO) if kind == "st" else (TROP_ONE, NEG_INF)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, kind: str = "st") -> Matrix:
        zero = ZERO if kind == "st" else NEG_INF
        return cls([[zero] * n for _ in range(n)])


def _check_dims(A: Matrix, B: Matrix) -> None:
    if A.n != B.n:
        raise DimensionError(f"dimension mismatch: {A.n} vs {B.n}")
    if A.scalar_type is not B.scalar_type:
        raise TypeError("cannot combine tropical and supertropical matrices")


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    """Semiring matrix product ``(AB)_ij = sum_k A_ik * B_kj``."""
    _check_dims(A, B)
    zero = A.scalar_type.zero()
    cols = tuple(zip(*B.rows))
    out = []
    for r in A.rows:
        row = []
        for c in cols:
            acc = zero
            for x, y in zip(r, c):
                acc = acc + x * y
            row.append(acc)
        out.append(row)
    res = object.__new__(Matrix)
    res.n = A.n
    res.rows = tuple(tuple(r) for r in out)
    res.scalar_type = A.scalar_type
    return res


def nu_matrix(A: Matrix) -> Matrix:
    if A.scalar_type is not SupertropScalar:
        raise TypeError("ghost projection needs a supertropical matrix")
    return A.map(nu)


def nu_equiv_matrix(A: Matrix, B: Matrix) -> bool:
    _check_dims(A, B)
    return nu_matrix(A) == nu_matrix(B)


def hat_matrix(A: Matrix) -> Matrix:
    """Ghost-free matrix nu-equivalent to ``A``."""
    if A.scalar_type is not SupertropScalar:
        raise TypeError("lift needs a supertropical matrix")
    return A.map(hat)


def to_supertropical(A: Matrix) -> Matrix:
    if A.scalar_type is SupertropScalar:
        return A
    return Matrix([[ZERO if x.value is None else SupertropScalar(1, x.value) for x in r] for r in A.rows])


def to_tropical(A: Matrix) -> Matrix:
    """Drop ghost tags (the tropical image of ``nu(A)``)."""
    if A.scalar_type is TropScalar:
        return A
    return Matrix([[NEG_INF if x.is_zero else TropScalar(x.mag) for x in r] for r in A.rows])


def matrix_to_obj(A: Matrix) -> dict:
    return {"n": A.n, "rows": [[format_scalar(x) for x in r] for r in A.rows]}


def format_matrix(A: Matrix) -> str:
    """Canonical text of the matrix file format (stable, newline-terminated)."""
    return json.dumps(matrix_to_obj(A), sort_keys=True) + "\n"


def matrix_from_obj(obj, kind: str = "st") -> Matrix:
    if not isinstance(obj, dict) or set(obj) != {"n", "rows"}:
        raise MatrixParseError("matrix object needs exactly the fields 'n' and 'rows'")
    n, rows = obj["n"], obj["rows"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise MatrixParseError(f"bad dimension {n!r}")
    if not isinstance(rows, list) or len(rows) != n:
        raise MatrixParseError(f"expected {n} rows")
    parsed = []
    for i, r in enumerate(rows):
        if not isinstance(r, list) or len(r) != n:
            raise MatrixParseError(f"row {i} must have {n} entries")
        try:
            parsed.append([parse_scalar(s, kind) if isinstance(s, str) else _bad(s) for s in r])
        except ValueError as exc:
            raise MatrixParseError(f"row {i}: {exc}") from None
    return Matrix(parsed)


def _bad(s):
    raise MatrixParseError(f"scalar entries must be strings, got {s!r}")


def parse_matrix(text: str, kind: str = "st") -> Matrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return matrix_from_obj(obj, kind)
