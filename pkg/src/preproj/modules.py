"""Finite-dimensional modules over the type A_{n-1} preprojective algebra.

A module is a graded space ``M_1 + ... + M_{n-1}`` with rightward maps
``(j -> j+1)`` and leftward maps ``(j -> j-1)`` satisfying, at every vertex,

    (j+1 -> j)(j -> j+1) = (j-1 -> j)(j -> j-1)

with the maps ``(1 -> 0)`` and ``(n-1 -> n)`` taken to be zero.  The relation
is used exactly as written, without a sign.

Vertices are 1-based in every public function.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInput
from .linalg import (
    RatMatrix,
    format_rational,
    inverse,
    is_invertible,
    kernel_basis,
    nullspace,
    parse_rational,
)

__all__ = [
    "GradedRep",
    "Intertwiner",
    "check_preprojective",
    "relation_failures",
    "socle_basis",
    "socle_dims",
    "hom_space_basis",
    "hom_dim",
    "in_rep_w",
    "conjugate",
    "random_basis_change",
    "direct_sum",
    "simple_module",
    "zero_module",
    "module_to_json",
    "module_from_json",
    "parse_module_file",
    "serialize_module",
]


@dataclass(frozen=True)
class GradedRep:
    """A graded representation of the doubled A_{n-1} quiver.

    ``right[j-1]`` is ``(j -> j+1)`` for ``j = 1..n-2`` and ``left[j-2]`` is
    ``(j -> j-1)`` for ``j = 2..n-1``.  Use :meth:`right_map` and
    :meth:`left_map` for 1-based access including the zero boundary maps.
    Construction checks shapes only; see :func:`check_preprojective`.
    """

    n: int
    dims: tuple[int, ...]
    right: tuple[RatMatrix, ...]
    left: tuple[RatMatrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "right", tuple(self.right))
        object.__setattr__(self, "left", tuple(self.left))
        n, dims = self.n, self.dims
        if n < 2:
            raise InvalidInput("n must be at least 2")
        if len(dims) != n - 1:
            raise InvalidInput(f"expected {n - 1} dimensions, got {len(dims)}")
        if any(d < 0 for d in dims):
            raise InvalidInput(f"negative dimension in {dims}")
        if len(self.right) != n - 2 or len(self.left) != n - 2:
            raise InvalidInput(f"expected {n - 2} maps in each direction")
        for j in range(1, n - 1):
            r = self.right[j - 1]
            if r.shape != (dims[j], dims[j - 1]):
                raise InvalidInput(
                    f"map ({j} -> {j + 1}) has shape {r.shape}, expected {(dims[j], dims[j - 1])}"
                )
            l = self.left[j - 1]
            if l.shape != (dims[j - 1], dims[j]):
                raise InvalidInput(
                    f"map ({j + 1} -> {j}) has shape {l.shape}, expected {(dims[j - 1], dims[j])}"
                )

    def dim(self, j: int) -> int:
        """``dim M_j``; zero outside ``1..n-1``."""
        return self.dims[j - 1] if 1 <= j <= self.n - 1 else 0

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def right_map(self, j: int) -> RatMatrix:
        """``(j -> j+1)``; the zero map ``M_{n-1} -> 0`` at ``j = n-1``."""
        if j == self.n - 1:
            return RatMatrix.zeros(0, self.dim(j))
        return self.right[j - 1]

    def left_map(self, j: int) -> RatMatrix:
        """``(j -> j-1)``; the zero map ``M_1 -> 0`` at ``j = 1``."""
        if j == 1:
            return RatMatrix.zeros(0, self.dim(1))
        return self.left[j - 2]


def relation_failures(m: GradedRep) -> list[int]:
    """Vertices where the preprojective relation fails."""
    bad = []
    for j in range(1, m.n):
        d = m.dim(j)
        up = RatMatrix.zeros(d, d) if j == m.n - 1 else m.left_map(j + 1) @ m.right_map(j)
        down = RatMatrix.zeros(d, d) if j == 1 else m.right_map(j - 1) @ m.left_map(j)
        if up != down:
            bad.append(j)
    return bad


def check_preprojective(m: GradedRep) -> bool:
    return not relation_failures(m)


def socle_basis(m: GradedRep) -> list[RatMatrix]:
    """Per vertex, a matrix whose columns span ``ker(j -> j+1) & ker(j -> j-1)``."""
    return [kernel_basis(m.right_map(j).vstack(m.left_map(j))) for j in range(1, m.n)]


def socle_dims(m: GradedRep) -> tuple[int, ...]:
    return tuple(b.cols for b in socle_basis(m))


def in_rep_w(m: GradedRep, w: Sequence[int]) -> bool:
    """Whether ``dim soc_j(M) <= w_j`` at every vertex."""
    if len(w) != m.n - 1:
        raise InvalidInput(f"w must have length {m.n - 1}")
    return all(s <= b for s, b in zip(socle_dims(m), w))


@dataclass(frozen=True)
class Intertwiner:
    """A family ``phi_j : M_j -> N_j`` of matrices."""

    source: GradedRep
    target: GradedRep
    phis: tuple[RatMatrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "phis", tuple(self.phis))
        src, tgt = self.source, self.target
        if src.n != tgt.n:
            raise InvalidInput("source and target have different n")
        if len(self.phis) != src.n - 1:
            raise InvalidInput(f"expected {src.n - 1} component maps")
        for j, phi in enumerate(self.phis, start=1):
            if phi.shape != (tgt.dim(j), src.dim(j)):
                raise InvalidInput(f"component {j} has shape {phi.shape}")

    def phi(self, j: int) -> RatMatrix:
        return self.phis[j - 1]

    def failures(self) -> list[tuple[str, int]]:
        """Commutation squares that fail, as ``("right" | "left", vertex)``."""
        src, tgt = self.source, self.target
        bad = []
        for j in range(1, src.n - 1):
            if self.phi(j + 1) @ src.right_map(j) != tgt.right_map(j) @ self.phi(j):
                bad.append(("right", j))
        for j in range(2, src.n):
            if self.phi(j - 1) @ src.left_map(j) != tgt.left_map(j) @ self.phi(j):
                bad.append(("left", j))
        return bad

    def is_homomorphism(self) -> bool:
        return not self.failures()

    def is_isomorphism(self) -> bool:
        return self.is_homomorphism() and all(is_invertible(p) for p in self.phis)

    def vector(self) -> tuple[Fraction, ...]:
        """All matrix entries, component by component, row-major."""
        return tuple(x for p in self.phis for row in p.entries for x in row)

    def compose(self, other: Intertwiner) -> Intertwiner:
        """``self o other``."""
        return Intertwiner(other.source, self.target, [a @ b for a, b in zip(self.phis, other.phis)])


def _linear_combination(source, target, basis: Sequence[Intertwiner], coeffs) -> Intertwiner:
    phis = []
    for j in range(source.n - 1):
        acc = RatMatrix.zeros(target.dims[j], source.dims[j])
        for c, b in zip(coeffs, basis):
            if c:
                acc = acc + b.phis[j].scale(c)
        phis.append(acc)
    return Intertwiner(source, target, phis)


def hom_space_basis(m: GradedRep, n_: GradedRep) -> list[Intertwiner]:
    """Basis of ``Hom(M, N)`` as the null space of the intertwiner equations.

    The unknowns are the entries of every ``phi_j``; each commutation square
    contributes one linear equation per entry of the square.
    """
    if m.n != n_.n:
        raise InvalidInput(f"modules have different n ({m.n} vs {n_.n})")
    n = m.n
    offsets = [0]
    for j in range(1, n):
        offsets.append(offsets[-1] + n_.dim(j) * m.dim(j))
    nvars = offsets[-1]

    def var(j: int, row: int, col: int) -> int:
        return offsets[j - 1] + row * m.dim(j) + col

    rows: list[dict[int, Fraction]] = []

    def square(j_src: int, j_tgt: int, map_m: RatMatrix, map_n: RatMatrix) -> None:
        # phi_{j_tgt} @ map_m - map_n @ phi_{j_src} = 0, entry (p, q)
        for p in range(n_.dim(j_tgt)):
            for q in range(m.dim(j_src)):
                eq: dict[int, Fraction] = {}
                for k in range(m.dim(j_tgt)):
                    c = map_m[k, q]
                    if c:
                        v = var(j_tgt, p, k)
                        eq[v] = eq.get(v, 0) + c
                for k in range(n_.dim(j_src)):
                    c = map_n[p, k]
                    if c:
                        v = var(j_src, k, q)
                        eq[v] = eq.get(v, 0) - c
                if eq:
                    rows.append(eq)

    for j in range(1, n - 1):
        square(j, j + 1, m.right_map(j), n_.right_map(j))
    for j in range(2, n):
        square(j, j - 1, m.left_map(j), n_.left_map(j))

    basis = []
    for vec in nullspace(rows, nvars):
        phis = []
        for j in range(1, n):
            r, c = n_.dim(j), m.dim(j)
            start = offsets[j - 1]
            phis.append(RatMatrix.from_rows([vec[start + a * c: start + (a + 1) * c] for a in range(r)], cols=c))
        basis.append(Intertwiner(m, n_, phis))
    return basis


def hom_dim(m: GradedRep, n_: GradedRep) -> int:
    return len(hom_space_basis(m, n_))


def zero_module(n: int) -> GradedRep:
    return GradedRep(
        n,
        (0,) * (n - 1),
        [RatMatrix.zeros(0, 0)] * (n - 2),
        [RatMatrix.zeros(0, 0)] * (n - 2),
    )


def simple_module(n: int, i: int) -> GradedRep:
    """The one-dimensional module ``S_i``."""
    if not 1 <= i <= n - 1:
        raise InvalidInput(f"vertex {i} out of range for n={n}")
    dims = tuple(1 if j == i else 0 for j in range(1, n))
    right = [RatMatrix.zeros(dims[j], dims[j - 1]) for j in range(1, n - 1)]
    left = [RatMatrix.zeros(dims[j - 1], dims[j]) for j in range(1, n - 1)]
    return GradedRep(n, dims, right, left)


def _block_diag(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    rows = [list(r) + [0] * b.cols for r in a.entries]
    rows += [[0] * a.cols + list(r) for r in b.entries]
    return RatMatrix.from_rows(rows, cols=a.cols + b.cols)


def direct_sum(m: GradedRep, other: GradedRep) -> GradedRep:
    if m.n != other.n:
        raise InvalidInput("direct sum needs equal n")
    dims = tuple(a + b for a, b in zip(m.dims, other.dims))
    right = [_block_diag(a, b) for a, b in zip(m.right, other.right)]
    left = [_block_diag(a, b) for a, b in zip(m.left, other.left)]
    return GradedRep(m.n, dims, right, left)


def conjugate(m: GradedRep, conjugators: Sequence[RatMatrix]) -> tuple[GradedRep, Intertwiner]:
    """Transport ``m`` along invertible ``P_j``; returns the new module and the iso ``m -> new``."""
    if len(conjugators) != m.n - 1:
        raise InvalidInput("one conjugator per vertex required")
    inverses = [inverse(p) for p in conjugators]
    right = [conjugators[j] @ m.right[j - 1] @ inverses[j - 1] for j in range(1, m.n - 1)]
    left = [conjugators[j - 1] @ m.left[j - 1] @ inverses[j] for j in range(1, m.n - 1)]
    new = GradedRep(m.n, m.dims, right, left)
    return new, Intertwiner(m, new, conjugators)


def _scrambler(size: int, rng: random.Random) -> RatMatrix:
    # unit upper times unit lower triangular: always invertible
    upper = [[1 if r == c else (rng.randint(-3, 3) if c > r else 0) for c in range(size)] for r in range(size)]
    lower = [[1 if r == c else (rng.randint(-3, 3) if c < r else 0) for c in range(size)] for r in range(size)]
    return RatMatrix.from_rows(upper, cols=size) @ RatMatrix.from_rows(lower, cols=size)


def random_basis_change(m: GradedRep, seed: int) -> GradedRep:
    """An isomorphic copy of ``m`` in a seeded random basis."""
    rng = random.Random(seed)
    new, _ = conjugate(m, [_scrambler(d, rng) for d in m.dims])
    return new


# ---------------------------------------------------------------------------
# interchange format
# ---------------------------------------------------------------------------


def _matrix_to_json(m: RatMatrix) -> list:
    if m.rows == 0 or m.cols == 0:
        return []
    return [[format_rational(x) for x in row] for row in m.entries]


def _matrix_from_json(data, rows: int, cols: int, label: str) -> RatMatrix:
    if not isinstance(data, list):
        raise InvalidInput(f"{label}: matrix must be a list of rows")
    if rows == 0 or cols == 0:
        if data and not (len(data) == rows and all(r == [] for r in data)):
            raise InvalidInput(f"{label}: expected an empty matrix")
        return RatMatrix.zeros(rows, cols)
    if len(data) != rows or any(not isinstance(r, list) or len(r) != cols for r in data):
        raise InvalidInput(f"{label}: expected a {rows}x{cols} matrix")
    return RatMatrix.from_rows([[parse_rational(x) for x in r] for r in data], cols=cols)


def module_to_json(m: GradedRep) -> dict:
    return {
        "n": m.n,
        "dims": list(m.dims),
        "right": [_matrix_to_json(r) for r in m.right],
        "left": [_matrix_to_json(l) for l in m.left],
    }


def module_from_json(data: dict, check: bool = True) -> GradedRep:
    """Validate and build a module from its JSON object.

    ``right[k]`` is ``(k+1 -> k+2)`` and ``left[k]`` is ``(k+2 -> k+1)``.
    """
    if not isinstance(data, dict):
        raise InvalidInput("module must be a JSON object")
    missing = {"n", "dims", "right", "left"} - set(data)
    if missing:
        raise InvalidInput(f"module is missing keys {sorted(missing)}")
    n, dims = data["n"], data["dims"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidInput("n must be an integer >= 2")
    if not isinstance(dims, list) or len(dims) != n - 1 or any(
        not isinstance(d, int) or isinstance(d, bool) or d < 0 for d in dims
    ):
        raise InvalidInput(f"dims must be {n - 1} non-negative integers")
    for key in ("right", "left"):
        if not isinstance(data[key], list) or len(data[key]) != n - 2:
            raise InvalidInput(f"{key} must list {n - 2} matrices")
    right = [
        _matrix_from_json(data["right"][k], dims[k + 1], dims[k], f"right[{k}] ({k + 1} -> {k + 2})")
        for k in range(n - 2)
    ]
    left = [
        _matrix_from_json(data["left"][k], dims[k], dims[k + 1], f"left[{k}] ({k + 2} -> {k + 1})")
        for k in range(n - 2)
    ]
    m = GradedRep(n, tuple(dims), right, left)
    if check:
        bad = relation_failures(m)
        if bad:
            raise InvalidInput(f"preprojective relation fails at vertex {bad[0]}")
    return m


def serialize_module(m: GradedRep) -> str:
    return json.dumps(module_to_json(m))


def parse_module_file(text: bytes | str) -> GradedRep:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InvalidInput(f"module file is not UTF-8: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"malformed JSON: {exc}") from None
    return module_from_json(data)
