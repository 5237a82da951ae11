"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`; matrices are immutable and act on
column vectors, so the composite ``g o f`` is ``G @ F``.  Zero-sized matrices
(``0 x k`` and ``k x 0``) are ordinary values and stand for maps to or from the
zero space.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidInput

__all__ = [
    "RatMatrix",
    "parse_rational",
    "format_rational",
    "nullspace",
    "kernel_basis",
    "rank",
    "is_invertible",
    "inverse",
]

_ZERO = Fraction(0)


def _frac(x) -> Fraction:
    if type(x) is Fraction:
        return x
    return _ZERO if x == 0 else Fraction(x)


_RATIONAL_RE = re.compile(r"^([+-]?)(\d+)(?:/(\d+))?$")


def parse_rational(value: int | str) -> Fraction:
    """Parse an interchange scalar: an int, or a reduced string like ``"-3/7"``.

    Non-reduced fractions and zero denominators are rejected so that the text
    form of a value is unique.
    """
    if isinstance(value, bool):
        raise InvalidInput(f"boolean is not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise InvalidInput(f"not a rational: {value!r}")
    match = _RATIONAL_RE.match(value.strip())
    if match is None:
        raise InvalidInput(f"malformed rational {value!r}")
    sign, num, den = match.groups()
    p = int(num)
    if den is None:
        return Fraction(-p if sign == "-" else p)
    q = int(den)
    if q == 0:
        raise InvalidInput(f"zero denominator in {value!r}")
    frac = Fraction(p, q)
    if frac.denominator != q and p != 0:
        raise InvalidInput(f"rational {value!r} is not reduced")
    if p == 0 and q != 1:
        raise InvalidInput(f"rational {value!r} is not reduced")
    return -frac if sign == "-" else frac


def format_rational(q: Fraction) -> int | str:
    """Inverse of :func:`parse_rational`: integers stay ints, others become ``"p/q"``."""
    if q.denominator == 1:
        return int(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InvalidInput("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise InvalidInput(
                f"entries do not form a {self.rows}x{self.cols} grid"
            )

    # construction ---------------------------------------------------------

    @classmethod
    def from_rows(cls, data: Sequence[Sequence], cols: int | None = None) -> RatMatrix:
        """Build from nested rows.  ``cols`` is needed only when there are no rows."""
        rows = tuple(tuple(_frac(x) for x in row) for row in data)
        if cols is None:
            if not rows:
                raise InvalidInput("column count required for a matrix with no rows")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> RatMatrix:
        return cls.from_rows(
            [[col[r] for col in columns] for r in range(rows)], cols=len(columns)
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        zero = Fraction(0)
        return cls(rows, cols, tuple((zero,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, size: int) -> RatMatrix:
        one, zero = Fraction(1), Fraction(0)
        return cls(
            size,
            size,
            tuple(tuple(one if r == c else zero for c in range(size)) for r in range(size)),
        )

    # access ---------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        r, c = idx
        return self.entries[r][c]

    def column(self, c: int) -> tuple[Fraction, ...]:
        return tuple(row[c] for row in self.entries)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(c) for c in range(self.cols)]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self.entries]

    # arithmetic -----------------------------------------------------------

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise InvalidInput(f"cannot multiply {self.shape} by {other.shape}")
        other_cols = other.columns()
        out = []
        for row in self.entries:
            nz = [(k, x) for k, x in enumerate(row) if x]
            out.append(
                tuple(sum((x * col[k] for k, x in nz if col[k]), _ZERO) for col in other_cols)
            )
        return RatMatrix(self.rows, other.cols, tuple(out))

    def apply(self, vector: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(vector) != self.cols:
            raise InvalidInput("vector length does not match matrix columns")
        return tuple(sum((x * v for x, v in zip(row, vector)), Fraction(0)) for row in self.entries)

    def _elementwise(self, other: RatMatrix, op) -> RatMatrix:
        if self.shape != other.shape:
            raise InvalidInput(f"shape mismatch {self.shape} vs {other.shape}")
        return RatMatrix(
            self.rows,
            self.cols,
            tuple(tuple(op(a, b) for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __add__(self, other: RatMatrix) -> RatMatrix:
        return self._elementwise(other, lambda a, b: a + b)

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        return self._elementwise(other, lambda a, b: a - b)

    def __neg__(self) -> RatMatrix:
        return self.scale(-1)

    def scale(self, factor) -> RatMatrix:
        f = Fraction(factor)
        return RatMatrix(self.rows, self.cols, tuple(tuple(f * x for x in row) for row in self.entries))

    def transpose(self) -> RatMatrix:
        return RatMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    @property
    def T(self) -> RatMatrix:
        return self.transpose()

    def vstack(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.cols:
            raise InvalidInput("vstack needs equal column counts")
        return RatMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------


def _rref_sparse(rows: Iterable[dict[int, Fraction]]) -> dict[int, dict[int, Fraction]]:
    """Reduced row echelon form of sparse rows, keyed by pivot column.

    Rows are consumed one at a time and the basis kept fully reduced, so each
    incoming row needs one pass over its own pivot-column entries.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        r = {c: Fraction(x) for c, x in row.items() if x}
        for c in [c for c in r if c in pivots]:
            coef = r.get(c)
            if not coef:
                continue
            for k, x in pivots[c].items():
                val = r.get(k, 0) - coef * x
                if val:
                    r[k] = val
                else:
                    r.pop(k, None)
        if not r:
            continue
        p = min(r)
        inv = 1 / r[p]
        r = {k: x * inv for k, x in r.items()}
        for prow in pivots.values():
            coef = prow.get(p)
            if coef:
                for k, x in r.items():
                    val = prow.get(k, 0) - coef * x
                    if val:
                        prow[k] = val
                    else:
                        prow.pop(k, None)
        pivots[p] = r
    return pivots


def nullspace(rows: Iterable[dict[int, Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : row . x = 0 for every row}`` for sparse rows over ``ncols`` unknowns.

    One basis vector per free column, in increasing column order, with a 1 in
    that free position.
    """
    pivots = _rref_sparse(rows)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for pc, prow in pivots.items():
            coef = prow.get(free)
            if coef:
                vec[pc] = -coef
        basis.append(vec)
    return basis


def _sparse_rows(m: RatMatrix) -> list[dict[int, Fraction]]:
    return [{c: x for c, x in enumerate(row) if x} for row in m.entries]


def kernel_basis(m: RatMatrix) -> RatMatrix:
    """Matrix whose columns are a basis of the null space of ``m``."""
    vecs = nullspace(_sparse_rows(m), m.cols)
    return RatMatrix.from_columns(vecs, m.cols)


def rank(m: RatMatrix) -> int:
    return len(_rref_sparse(_sparse_rows(m)))


def is_invertible(m: RatMatrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def inverse(m: RatMatrix) -> RatMatrix:
    """Inverse by Gauss-Jordan on ``[m | I]``."""
    if m.rows != m.cols:
        raise InvalidInput("only square matrices are invertible")
    size = m.rows
    augmented = [
        {**{c: x for c, x in enumerate(row) if x}, size + r: Fraction(1)}
        for r, row in enumerate(m.entries)
    ]
    pivots = _rref_sparse(augmented)
    if any(c not in pivots for c in range(size)):
        raise InvalidInput("matrix is singular")
    return RatMatrix.from_rows(
        [[pivots[r].get(size + c, Fraction(0)) for c in range(size)] for r in range(size)],
        cols=size,
    )
