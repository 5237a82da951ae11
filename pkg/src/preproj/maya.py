"""Maya modules: the modules with one-dimensional socle.

For an admissible subset ``A = {a_1 < ... < a_i}`` the Maya module ``N(A)`` has
basis ``w_{j,k}`` for ``k = 1..i`` and ``j = k..a_k - 1``, with

    (j -> j-1) w_{j,k} = w_{j-1,k}        (j -> j+1) w_{j,k} = w_{j+1,k+1}

and zero whenever the target vector does not exist.  Inside ``N(A)_j`` the
basis vectors are ordered by increasing row index ``k``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import InconsistentInput, InvalidInput, NotApplicable, TheoremViolation
from .lattice import (
    RootVector,
    SubsetI,
    all_subsets,
    dominance_leq,
    initial_segment,
    subset_from_dims,
)
from .linalg import RatMatrix, is_invertible
from .modules import GradedRep, Intertwiner, check_preprojective, hom_space_basis, socle_dims

__all__ = [
    "MayaSubset",
    "TruncPermutahedron",
    "maya_subset",
    "maya_basis",
    "maya_module",
    "maya_dims",
    "socle_dim_conditions",
    "identify_maya",
    "hom_formula",
    "hom_formula_rows",
    "hom_basis_maya",
    "polytope_vertices",
    "polytope_max",
    "max_intersection",
]

RANDOM_ATTEMPTS = 20


@dataclass(frozen=True)
class MayaSubset:
    """An admissible subset: proper, nonempty and not ``{1, ..., i}``."""

    a: SubsetI

    def __post_init__(self):
        if not self.a.is_admissible():
            raise InvalidInput(f"{{{self.a}}} does not label a Maya module (n={self.a.n})")

    @property
    def n(self) -> int:
        return self.a.n

    @property
    def i(self) -> int:
        return len(self.a)

    def __str__(self) -> str:
        return str(self.a)


def maya_subset(a: MayaSubset | SubsetI) -> MayaSubset:
    return a if isinstance(a, MayaSubset) else MayaSubset(a)


def maya_basis(a: MayaSubset | SubsetI) -> list[list[tuple[int, int]]]:
    """Labels ``(j, k)`` of the basis vectors of ``N(A)_j`` in storage order, per vertex."""
    a = maya_subset(a)
    return [
        [(j, k) for k in range(1, a.i + 1) if k <= j < a.a[k]]
        for j in range(1, a.n)
    ]


def maya_dims(a: MayaSubset | SubsetI) -> tuple[int, ...]:
    """``dim N(A)_j = #{r : r <= j < a_r}``."""
    return tuple(len(col) for col in maya_basis(a))


def maya_module(a: MayaSubset | SubsetI) -> GradedRep:
    a = maya_subset(a)
    n = a.n
    basis = maya_basis(a)
    index = [{label: pos for pos, label in enumerate(col)} for col in basis]

    def arrow(j_src: int, j_tgt: int, shift: int) -> RatMatrix:
        src, tgt = basis[j_src - 1], index[j_tgt - 1]
        rows = [[0] * len(src) for _ in range(len(tgt))]
        for c, (_, k) in enumerate(src):
            r = tgt.get((j_tgt, k + shift))
            if r is not None:
                rows[r][c] = 1
        return RatMatrix.from_rows(rows, cols=len(src))

    right = [arrow(j, j + 1, 1) for j in range(1, n - 1)]
    left = [arrow(j + 1, j, 0) for j in range(1, n - 1)]
    m = GradedRep(n, tuple(len(col) for col in basis), right, left)
    assert check_preprojective(m)
    return m


def socle_dim_conditions(v: Sequence[int], i: int) -> bool:
    """Dimension-vector test for a module with socle ``S_i``.

    With ``v_0 = v_n = 0``: ``v_{j+1} - v_j`` is 0 or 1 for ``0 <= j < i`` and
    ``v_{j-1} - v_j`` is 0 or 1 for ``i < j <= n``.
    """
    n = len(v) + 1
    if not 1 <= i <= n - 1:
        raise InvalidInput(f"vertex {i} out of range for n={n}")
    ext = (0, *v, 0)
    left_ok = all(ext[j + 1] - ext[j] in (0, 1) for j in range(0, i))
    right_ok = all(ext[j - 1] - ext[j] in (0, 1) for j in range(i + 1, n + 1))
    return left_ok and right_ok


def identify_maya(m: GradedRep, seed: int = 0) -> tuple[MayaSubset, Intertwiner]:
    """Find ``A`` with ``M ~ N(A)`` and an explicit isomorphism ``M -> N(A)``.

    Raises:
        NotApplicable: the socle is not one-dimensional.
        InconsistentInput: the dimension vector is impossible for that socle.
        TheoremViolation: no invertible homomorphism was found.
    """
    soc = socle_dims(m)
    if sum(soc) != 1:
        raise NotApplicable(f"socle has dimension vector {soc}, not a single simple")
    i = soc.index(1) + 1
    if not socle_dim_conditions(m.dims, i):
        raise InconsistentInput(f"dimension vector {m.dims} cannot carry socle S_{i}")
    a = MayaSubset(subset_from_dims(m.dims, i))
    target = maya_module(a)
    basis = hom_space_basis(m, target)
    for phi in basis:
        if all(is_invertible(p) for p in phi.phis):
            return a, phi
    rng = random.Random(seed)
    for _ in range(RANDOM_ATTEMPTS if basis else 0):
        coeffs = [rng.randint(1, 10**6) for _ in basis]
        phis = []
        for j in range(m.n - 1):
            acc = RatMatrix.zeros(target.dims[j], m.dims[j])
            for c, b in zip(coeffs, basis):
                acc = acc + b.phis[j].scale(c)
            phis.append(acc)
        if all(is_invertible(p) for p in phis):
            return a, Intertwiner(m, target, phis)
    raise TheoremViolation(
        f"no isomorphism onto N({{{a}}}) found among {len(basis)} basis maps "
        f"and {RANDOM_ATTEMPTS} random combinations"
    )


def _same_n(a: SubsetI, b: SubsetI) -> None:
    if a.n != b.n:
        raise InvalidInput(f"subsets live in different ranges (n={a.n} vs n={b.n})")


def hom_formula_rows(a: MayaSubset | SubsetI, b: MayaSubset | SubsetI) -> list[int]:
    """The rows ``r`` of ``N(A)`` that map onto the bottom row of ``N(B)``."""
    a, b = maya_subset(a), maya_subset(b)
    _same_n(a.a, b.a)
    i, j = a.i, b.i
    return [
        r
        for r in range(1, i + 1)
        if r <= j < a.a[r] and all(a.a[r - l] <= b.a[j - l] for l in range(r))
    ]


def hom_formula(a: MayaSubset | SubsetI, b: MayaSubset | SubsetI) -> int:
    """``dim Hom(N(A), N(B))`` in closed form."""
    return len(hom_formula_rows(a, b))


def hom_basis_maya(a: MayaSubset | SubsetI, b: MayaSubset | SubsetI) -> list[Intertwiner]:
    """The maps ``phi_r``: row ``r - l`` of ``N(A)`` goes to row ``j - l`` of ``N(B)``."""
    a, b = maya_subset(a), maya_subset(b)
    src, tgt = maya_module(a), maya_module(b)
    src_basis = maya_basis(a)
    tgt_index = [{label: pos for pos, label in enumerate(col)} for col in maya_basis(b)]
    j = b.i
    out = []
    for r in hom_formula_rows(a, b):
        phis = []
        for vertex in range(1, a.n):
            col = src_basis[vertex - 1]
            rows = [[0] * len(col) for _ in range(tgt.dim(vertex))]
            for c, (k, row) in enumerate(col):
                l = r - row
                if l >= 0 and k >= j - l:
                    rows[tgt_index[vertex - 1][(k, j - l)]][c] = 1
            phis.append(RatMatrix.from_rows(rows, cols=len(col)))
        out.append(Intertwiner(src, tgt, phis))
    return out


@dataclass(frozen=True)
class TruncPermutahedron:
    """Generating points ``1_C - 1_{1..j}`` over ``C <= B``; the hull is never formed.

    Here ``C <= B`` is the elementwise order ``c_k <= b_k``, so ``0`` (from
    ``C = {1..j}``) is always a point and ``1_B - 1_{1..j}`` is the top one.
    In root-lattice terms this is ``C - B`` in the positive cone.
    """

    b: SubsetI
    points: tuple[RootVector, ...]


def _below(b: SubsetI) -> list[SubsetI]:
    # c_k <= b_k for every k
    return [c for c in all_subsets(b.n, len(b)) if dominance_leq(b, c)]


def polytope_vertices(b: SubsetI) -> TruncPermutahedron:
    base = initial_segment(b.n, len(b)).indicator()
    points = tuple(
        RootVector(b.n, tuple(x - y for x, y in zip(c.indicator(), base))) for c in _below(b)
    )
    return TruncPermutahedron(b, points)


def polytope_max(a: SubsetI, b: SubsetI) -> int:
    """Maximum of ``p -> <1_A, p>`` over the truncated permutahedron of ``B``."""
    _same_n(a, b)
    ind = a.indicator()
    return max(sum(x * y for x, y in zip(ind, p.coords)) for p in polytope_vertices(b).points)


def max_intersection(a: SubsetI, b: SubsetI) -> int:
    """``max |C & A|`` over ``|C| = |B|`` with ``C <= B``."""
    _same_n(a, b)
    aset = set(a.elements)
    return max(len(aset.intersection(c.elements)) for c in _below(b))
