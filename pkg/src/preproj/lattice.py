"""Root lattice of SL_n, subsets of {1..n}, dominance order and weight counting."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import InvalidInput

__all__ = [
    "RootVector",
    "SubsetI",
    "WeightData",
    "simple_root",
    "fundamental_weight",
    "root_from_dims",
    "subset_diff",
    "dominance_leq",
    "dominance_leq_elementwise",
    "initial_segment",
    "all_subsets",
    "admissible_subsets",
    "subset_from_dims",
    "connected_subsets",
    "weights_from",
    "positive_roots",
    "kostant_partition",
    "weight_multiplicity",
    "parse_int_list",
]


def parse_int_list(text: str) -> tuple[int, ...]:
    """Parse ``"3,6,7"`` into ``(3, 6, 7)``; the empty string gives ``()``."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InvalidInput(f"expected comma-separated integers, got {text!r}") from None


@dataclass(frozen=True)
class RootVector:
    """A vector of Z^n whose coordinates sum to zero."""

    n: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.n:
            raise InvalidInput(f"expected {self.n} coordinates, got {len(self.coords)}")
        if sum(self.coords) != 0:
            raise InvalidInput(f"coordinates {self.coords} do not sum to zero")

    def __add__(self, other: RootVector) -> RootVector:
        return RootVector(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: RootVector) -> RootVector:
        return RootVector(self.n, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def simple_coefficients(self) -> tuple[int, ...]:
        """Coefficients ``c`` with ``self = sum c_k alpha_k`` (prefix sums)."""
        return tuple(itertools.accumulate(self.coords))[:-1]

    def in_positive_cone(self) -> bool:
        return all(c >= 0 for c in self.simple_coefficients())

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.coords)


def simple_root(n: int, i: int) -> RootVector:
    if not 1 <= i <= n - 1:
        raise InvalidInput(f"simple root index {i} out of range for n={n}")
    coords = [0] * n
    coords[i - 1], coords[i] = 1, -1
    return RootVector(n, tuple(coords))


def fundamental_weight(n: int, i: int) -> tuple[int, ...]:
    return tuple(1 if k < i else 0 for k in range(n))


def root_from_dims(v: Sequence[int]) -> RootVector:
    """``alpha_v = sum_j v_j alpha_j`` for a dimension vector of length n-1."""
    n = len(v) + 1
    padded = (0, *v, 0)
    return RootVector(n, tuple(padded[k] - padded[k - 1] for k in range(1, n + 1)))


@dataclass(frozen=True, order=True)
class SubsetI:
    """A subset of ``{1, ..., n}`` stored as a strictly increasing tuple."""

    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(self.elements)
        object.__setattr__(self, "elements", els)
        if self.n < 1:
            raise InvalidInput("n must be positive")
        if any(b <= a for a, b in zip(els, els[1:])):
            raise InvalidInput(f"elements {els} are not strictly increasing")
        if els and (els[0] < 1 or els[-1] > self.n):
            raise InvalidInput(f"elements {els} not inside 1..{self.n}")

    @classmethod
    def parse(cls, n: int, text: str) -> SubsetI:
        return cls(n, parse_int_list(text))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __getitem__(self, k: int) -> int:
        """1-based access: ``A[k]`` is ``a_k``."""
        if not 1 <= k <= len(self.elements):
            raise IndexError(k)
        return self.elements[k - 1]

    def indicator(self) -> tuple[int, ...]:
        s = set(self.elements)
        return tuple(1 if k in s else 0 for k in range(1, self.n + 1))

    def is_initial(self) -> bool:
        return self.elements == tuple(range(1, len(self.elements) + 1))

    def is_connected(self) -> bool:
        els = self.elements
        return bool(els) and els[-1] - els[0] + 1 == len(els)

    def is_admissible(self) -> bool:
        """Proper, nonempty and different from ``{1, ..., i}``."""
        return 0 < len(self.elements) < self.n and not self.is_initial()

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.elements)


def _check_comparable(a: SubsetI, b: SubsetI) -> None:
    if a.n != b.n:
        raise InvalidInput(f"subsets live in different ranges (n={a.n} vs n={b.n})")
    if len(a) != len(b):
        raise InvalidInput(f"subsets have different sizes ({len(a)} vs {len(b)})")


def initial_segment(n: int, i: int) -> SubsetI:
    return SubsetI(n, tuple(range(1, i + 1)))


def subset_diff(a: SubsetI, b: SubsetI) -> RootVector:
    """``A - B := 1_A - 1_B``."""
    _check_comparable(a, b)
    return RootVector(a.n, tuple(x - y for x, y in zip(a.indicator(), b.indicator())))


def dominance_leq(c: SubsetI, b: SubsetI) -> bool:
    """``C <= B``, i.e. every prefix sum of ``1_B - 1_C`` is non-negative."""
    return subset_diff(b, c).in_positive_cone()


def dominance_leq_elementwise(c: SubsetI, b: SubsetI) -> bool:
    """Equivalent test: ``b_k <= c_k`` for every k."""
    _check_comparable(c, b)
    return all(y <= x for x, y in zip(c.elements, b.elements))


def all_subsets(n: int, size: int) -> list[SubsetI]:
    return [SubsetI(n, combo) for combo in itertools.combinations(range(1, n + 1), size)]


def admissible_subsets(n: int) -> list[SubsetI]:
    """Every subset that labels a Maya module, ordered by size then lexicographically."""
    return [s for i in range(1, n) for s in all_subsets(n, i) if not s.is_initial()]


def subset_from_dims(v: Sequence[int], i: int) -> SubsetI:
    """Recover ``A`` from ``sum v_j alpha_j = 1_{1..i} - 1_A``.

    With ``x_j`` the coordinates of ``alpha_v``, ``A`` is ``{j <= i : x_j = 0}``
    together with ``{j > i : x_j = -1}``.
    """
    from .maya import socle_dim_conditions

    n = len(v) + 1
    if not socle_dim_conditions(v, i):
        raise InvalidInput(f"dimension vector {tuple(v)} violates the socle conditions at vertex {i}")
    x = root_from_dims(v).coords
    elements = [j for j in range(1, i + 1) if x[j - 1] == 0]
    elements += [j for j in range(i + 1, n + 1) if x[j - 1] == -1]
    a = SubsetI(n, tuple(elements))
    if len(a) != i or a.is_initial():
        raise InvalidInput(f"dimension vector {tuple(v)} does not come from an admissible subset")
    return a


def connected_subsets(n: int, admissible_only: bool = False) -> list[SubsetI]:
    """Intervals ``{t-i+1, ..., t}`` ordered by size ``i`` then by ``t``.

    With ``admissible_only`` the intervals ``{1..i}`` (which includes the full
    set) are dropped.
    """
    if n < 2:
        raise InvalidInput("n must be at least 2")
    out = []
    for i in range(1, n + 1):
        for t in range(i, n + 1):
            if admissible_only and t == i:
                continue
            out.append(SubsetI(n, tuple(range(t - i + 1, t + 1))))
    return out


@dataclass(frozen=True)
class WeightData:
    n: int
    w: tuple[int, ...]
    lam: tuple[int, ...]
    mu: tuple[int, ...]


def weights_from(w: Sequence[int], v: Sequence[int]) -> WeightData:
    """``lambda = sum w_i omega_i`` and ``mu = lambda - alpha_v`` as n-tuples."""
    if len(w) != len(v):
        raise InvalidInput("w and v must both have length n-1")
    n = len(w) + 1
    lam = tuple(sum(w[k:]) for k in range(n - 1)) + (0,)
    alpha = root_from_dims(v).coords
    mu = tuple(a - b for a, b in zip(lam, alpha))
    return WeightData(n, tuple(w), lam, mu)


def positive_roots(n: int) -> list[tuple[int, ...]]:
    """Positive roots ``e_a - e_b`` (a < b) in simple-root coordinates.

    The order is fixed: by ``a``, then by ``b``.
    """
    roots = []
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            roots.append(tuple(1 if a <= k < b else 0 for k in range(1, n)))
    return roots


@lru_cache(maxsize=None)
def _count_partitions(remaining: tuple[int, ...], idx: int, roots: tuple[tuple[int, ...], ...]) -> int:
    # ways to write ``remaining`` using only roots[0..idx]
    if not any(remaining):
        return 1
    if idx < 0:
        return 0
    total = _count_partitions(remaining, idx - 1, roots)
    root = roots[idx]
    reduced = tuple(r - c for r, c in zip(remaining, root))
    if all(r >= 0 for r in reduced):
        total += _count_partitions(reduced, idx, roots)
    return total


def kostant_partition(alpha: RootVector) -> int:
    """Number of multisets of positive roots summing to ``alpha``."""
    coeffs = alpha.simple_coefficients()
    if any(c < 0 for c in coeffs):
        return 0
    roots = tuple(positive_roots(alpha.n))
    return _count_partitions(coeffs, len(roots) - 1, roots)


def _permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def weight_multiplicity(lam: Sequence[int], mu: Sequence[int]) -> int:
    """``dim V(lambda)_mu`` from Kostant's multiplicity formula.

    Sums ``sgn(s) * P(s(lambda + rho) - (mu + rho))`` over all permutations
    ``s`` of the coordinates, with ``rho = (n-1, ..., 1, 0)``.
    """
    n = len(lam)
    if len(mu) != n:
        raise InvalidInput("lambda and mu must have the same length")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise InvalidInput(f"lambda {tuple(lam)} is not weakly decreasing")
    if sum(lam) != sum(mu):
        return 0
    shifted = [x + n - 1 - k for k, x in enumerate(lam)]
    target = [x + n - 1 - k for k, x in enumerate(mu)]
    total = 0
    for perm in itertools.permutations(range(n)):
        diff = tuple(shifted[perm[k]] - target[k] for k in range(n))
        count = kostant_partition(RootVector(n, diff))
        if count:
            total += _permutation_sign(perm) * count
    return total

