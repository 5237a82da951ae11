"""Semistandard tableaux, modules of type T, and classification by Hom signatures.

A box ``X`` of a tableau has a row ``r(X)`` and a content ``c(X)`` (its entry).
A module of type ``T`` has basis vectors ``w^X_j`` for ``r(X) <= j < c(X)``;
leftward arrows move along a box, ``w^X_j -> w^X_{j-1}``, and rightward arrows
send ``w^X_j`` to ``sum_Q e(X, Q) w^Q_{j+1}`` over the boxes ``Q`` with

    r(X) < r(Q) <= c(X) < c(Q)

That orientation of the pair condition makes the preprojective relation hold
for every choice of the scalars ``e``; see :func:`admissible_pairs`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, NamedTuple, Sequence

from .errors import InvalidInput, NotApplicable, TheoremViolation, Unclassifiable
from .lattice import SubsetI, admissible_subsets, connected_subsets, root_from_dims
from .linalg import RatMatrix
from .maya import maya_module
from .modules import GradedRep, check_preprojective, hom_dim, in_rep_w, socle_dims

__all__ = [
    "Box",
    "Tableau",
    "Classification",
    "normalize_shape",
    "partitions",
    "ssyt_enumerate",
    "ssyt_all",
    "admissible_pairs",
    "g_count",
    "signature",
    "type_t_module",
    "type_t_basis",
    "generic_scalars",
    "constant_scalars",
    "consecutive_row_scalars",
    "f_value",
    "f_signature",
    "shape_to_w",
    "classify",
    "classify_report",
    "tableau_to_json",
    "tableau_from_json",
    "signature_to_json",
]


class Box(NamedTuple):
    row: int
    col: int
    content: int


def normalize_shape(shape: Sequence[int]) -> tuple[int, ...]:
    out = tuple(int(x) for x in shape)
    if any(x < 0 for x in out) or any(a < b for a, b in zip(out, out[1:])):
        raise InvalidInput(f"shape {out} is not a partition")
    while out and out[-1] == 0:
        out = out[:-1]
    return out


@dataclass(frozen=True)
class Tableau:
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        lengths = [len(r) for r in rows]
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise InvalidInput(f"row lengths {lengths} are not weakly decreasing")
        for r, row in enumerate(rows, start=1):
            if any(not 1 <= x <= self.n for x in row):
                raise InvalidInput(f"row {r} has entries outside 1..{self.n}")
            if any(a > b for a, b in zip(row, row[1:])):
                raise InvalidInput(f"row {r} is not weakly increasing")
        for upper, lower in zip(rows, rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise InvalidInput("columns are not strictly increasing")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def content(self) -> tuple[int, ...]:
        counts = [0] * self.n
        for row in self.rows:
            for x in row:
                counts[x - 1] += 1
        return tuple(counts)

    def boxes(self) -> list[Box]:
        """Boxes in reading order: top row first, left to right."""
        return [
            Box(r, c, x)
            for r, row in enumerate(self.rows, start=1)
            for c, x in enumerate(row, start=1)
        ]

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def __str__(self) -> str:
        return "/".join(" ".join(str(x) for x in row) for row in self.rows)


def partitions(total: int, max_parts: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` with at most ``max_parts`` parts, largest first."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, max_parts - 1, first):
            yield (first, *rest)


def _strips(current: tuple[int, ...], shape: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    # horizontal strips of ``size`` boxes added to ``current`` inside ``shape``
    def rec(r: int, remaining: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if r == len(shape):
            if remaining == 0:
                yield tuple(acc)
            return
        cap = shape[r] if r == 0 else min(shape[r], current[r - 1])
        for new in range(current[r], min(cap, current[r] + remaining) + 1):
            acc.append(new)
            yield from rec(r + 1, remaining - (new - current[r]), acc)
            acc.pop()

    yield from rec(0, size, [])


def _fill(shape: tuple[int, ...], content: Sequence[int]) -> Iterator[list[list[int]]]:
    n = len(content)

    def rec(value: int, current: tuple[int, ...], rows: list[list[int]]):
        if value > n:
            if current == shape:
                yield [list(r) for r in rows]
            return
        for nxt in _strips(current, shape, content[value - 1]):
            for r, (a, b) in enumerate(zip(current, nxt)):
                rows[r].extend([value] * (b - a))
            yield from rec(value + 1, nxt, rows)
            for r, (a, b) in enumerate(zip(current, nxt)):
                del rows[r][len(rows[r]) - (b - a):]

    yield from rec(1, (0,) * len(shape), [[] for _ in shape])


def ssyt_enumerate(shape: Sequence[int], content: Sequence[int]) -> list[Tableau]:
    """All SSYT of the given shape in which ``e`` appears ``content[e-1]`` times.

    Ordered lexicographically by reading word.  Negative content entries give
    the empty list.
    """
    shape = normalize_shape(shape)
    content = tuple(int(x) for x in content)
    n = len(content)
    if any(x < 0 for x in content) or sum(content) != sum(shape) or len(shape) > n:
        return []
    found = [Tableau(n, tuple(tuple(r) for r in rows)) for rows in _fill(shape, content)]
    return sorted(found, key=Tableau.reading_word)


def ssyt_all(shape: Sequence[int], n: int) -> list[Tableau]:
    """Every SSYT of the given shape with entries in ``1..n``."""
    shape = normalize_shape(shape)
    total = sum(shape)
    out = []

    def compositions(k: int, parts: int) -> Iterator[tuple[int, ...]]:
        if parts == 1:
            yield (k,)
            return
        for first in range(k + 1):
            for rest in compositions(k - first, parts - 1):
                yield (first, *rest)

    for content in compositions(total, n):
        out.extend(ssyt_enumerate(shape, content))
    return out


def _check_connected(a: SubsetI) -> None:
    if not a.is_connected():
        raise InvalidInput(f"{{{a}}} is not a connected subset")


def g_count(t: Tableau, a: SubsetI) -> int:
    """Boxes ``X`` with ``r(X) <= i < c(X) <= t`` for ``A = {t-i+1, ..., t}``."""
    _check_connected(a)
    i, top = len(a), a.elements[-1]
    return sum(1 for x in t.boxes() if x.row <= i < x.content <= top)


def signature(t: Tableau) -> dict[SubsetI, int]:
    return {a: g_count(t, a) for a in connected_subsets(t.n, admissible_only=True)}


def admissible_pairs(t: Tableau) -> list[tuple[Box, Box]]:
    """Ordered box pairs ``(X, Q)`` with ``r(X) < r(Q) <= c(X) < c(Q)``."""
    boxes = t.boxes()
    return [
        (x, q)
        for x in boxes
        for q in boxes
        if x.row < q.row <= x.content < q.content
    ]


def generic_scalars(t: Tableau, seed: int) -> dict[tuple[Box, Box], Fraction]:
    rng = random.Random(seed)
    return {pair: Fraction(rng.randint(1, 10**6)) for pair in admissible_pairs(t)}


def constant_scalars(t: Tableau, value=0) -> dict[tuple[Box, Box], Fraction]:
    return {pair: Fraction(value) for pair in admissible_pairs(t)}


def consecutive_row_scalars(t: Tableau) -> dict[tuple[Box, Box], Fraction]:
    """1 on pairs in adjacent rows, 0 elsewhere."""
    return {
        (x, q): Fraction(1 if q.row == x.row + 1 else 0) for x, q in admissible_pairs(t)
    }


def type_t_basis(t: Tableau) -> list[list[tuple[Box, int]]]:
    """Labels ``(X, j)`` of the basis of ``M_j``, boxes in reading order."""
    boxes = t.boxes()
    return [[(x, j) for x in boxes if x.row <= j < x.content] for j in range(1, t.n)]


def type_t_module(t: Tableau, scalars: Mapping[tuple[Box, Box], object]) -> GradedRep:
    pairs = admissible_pairs(t)
    if set(scalars) != set(pairs):
        raise InvalidInput("scalars must be given on exactly the admissible box pairs")
    if t.n < 2:
        raise InvalidInput("tableaux need n >= 2")
    n = t.n
    basis = type_t_basis(t)
    index = [{label: pos for pos, label in enumerate(col)} for col in basis]
    targets: dict[Box, list[tuple[Box, Fraction]]] = {}
    for x, q in pairs:
        targets.setdefault(x, []).append((q, Fraction(scalars[(x, q)])))

    right = []
    for j in range(1, n - 1):
        src, tgt = basis[j - 1], index[j]
        rows = [[0] * len(src) for _ in range(len(tgt))]
        for c, (x, _) in enumerate(src):
            for q, e in targets.get(x, ()):
                r = tgt.get((q, j + 1))
                if r is not None:
                    rows[r][c] += e
        right.append(RatMatrix.from_rows(rows, cols=len(src)))
    left = []
    for j in range(2, n):
        src, tgt = basis[j - 1], index[j - 2]
        rows = [[0] * len(src) for _ in range(len(tgt))]
        for c, (x, _) in enumerate(src):
            r = tgt.get((x, j - 1))
            if r is not None:
                rows[r][c] = 1
        left.append(RatMatrix.from_rows(rows, cols=len(src)))
    m = GradedRep(n, tuple(len(col) for col in basis), right, left)
    assert check_preprojective(m)
    return m


def f_value(m: GradedRep, a: SubsetI) -> int:
    """``dim Hom(M, N(A))`` for a connected admissible ``A``."""
    _check_connected(a)
    return hom_dim(m, maya_module(a))


def f_signature(m: GradedRep) -> dict[SubsetI, int]:
    return {a: f_value(m, a) for a in connected_subsets(m.n, admissible_only=True)}


def shape_to_w(shape: Sequence[int], n: int) -> tuple[int, ...]:
    """``w_i = lambda_i - lambda_{i+1}`` for ``i = 1..n-1``."""
    lam = normalize_shape(shape)
    if len(lam) > n:
        raise InvalidInput(f"shape {lam} has more than {n} rows")
    lam = lam + (0,) * (n + 1 - len(lam))
    return tuple(lam[i] - lam[i + 1] for i in range(n - 1))


@dataclass(frozen=True)
class Classification:
    tableau: Tableau
    signature: dict[SubsetI, int]
    degenerate: bool = False
    diagnostics: tuple[str, ...] = field(default_factory=tuple)


def _validate_weights(m: GradedRep, shape: Sequence[int], content: Sequence[int]) -> tuple[int, ...]:
    if len(content) != m.n:
        raise InvalidInput(f"content must have {m.n} entries")
    lam = normalize_shape(shape)
    w = shape_to_w(lam, m.n)
    lam = lam + (0,) * (m.n - len(lam))
    alpha = root_from_dims(m.dims).coords
    if tuple(a - b for a, b in zip(lam, content)) != alpha:
        raise InvalidInput(
            f"dimension vector {m.dims} does not match lambda - mu for shape {lam}, content {tuple(content)}"
        )
    return w


def classify(m: GradedRep, shape: Sequence[int], content: Sequence[int]) -> Tableau:
    """The tableau whose box counts equal the Hom dimensions of ``m`` into the
    connected Maya modules.

    Raises:
        InvalidInput: the dimension vector does not match ``lambda - mu``.
        NotApplicable: the socle exceeds the bound coming from ``shape``.
        Unclassifiable: no tableau has the module's signature.
        TheoremViolation: several tableaux share it.
    """
    w = _validate_weights(m, shape, content)
    if not in_rep_w(m, w):
        raise NotApplicable(f"socle {socle_dims(m)} exceeds the bound w = {w}")
    sig = f_signature(m)
    matches = [t for t in ssyt_enumerate(shape, content) if signature(t) == sig]
    if not matches:
        raise Unclassifiable(
            "no tableau has signature " + ", ".join(f"{{{a}}}:{k}" for a, k in sig.items()),
            signature=sig,
        )
    if len(matches) > 1:
        raise TheoremViolation(f"{len(matches)} tableaux share signature {sig}")
    return matches[0]


def classify_report(
    m: GradedRep, shape: Sequence[int], content: Sequence[int], seed: int = 0
) -> Classification:
    """:func:`classify` plus a degeneracy check.

    The match is flagged degenerate when the socle, or the Hom dimension into
    some Maya module, exceeds that of a generic module of the matched type:
    such a module lies in the closure of the type-T locus but not in it.
    """
    t = classify(m, shape, content)
    generic = type_t_module(t, generic_scalars(t, seed))
    notes = []
    soc_m, soc_g = socle_dims(m), socle_dims(generic)
    if soc_m != soc_g:
        notes.append(f"socle {soc_m} differs from generic {soc_g}")
    for a in admissible_subsets(m.n):
        target = maya_module(a)
        hm, hg = hom_dim(m, target), hom_dim(generic, target)
        if hm != hg:
            notes.append(f"dim Hom(M, N({{{a}}})) = {hm}, generic value {hg}")
    return Classification(t, signature(t), bool(notes), tuple(notes))


def tableau_to_json(t: Tableau) -> dict:
    return {"shape": list(t.shape), "rows": [list(r) for r in t.rows]}


def tableau_from_json(data: dict, n: int) -> Tableau:
    if not isinstance(data, dict) or "rows" not in data:
        raise InvalidInput("tableau must be an object with 'rows'")
    t = Tableau(n, tuple(tuple(r) for r in data["rows"]))
    if "shape" in data and normalize_shape(data["shape"]) != t.shape:
        raise InvalidInput("tableau shape does not match its rows")
    return t


def signature_to_json(sig: Mapping[SubsetI, int]) -> dict[str, int]:
    return {str(a): k for a, k in sig.items()}
