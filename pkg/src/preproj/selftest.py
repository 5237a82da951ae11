"""Sweeps that re-check every closed formula against linear algebra or brute force."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .errors import PreprojError
from .lattice import (
    SubsetI,
    admissible_subsets,
    all_subsets,
    dominance_leq,
    dominance_leq_elementwise,
    initial_segment,
    kostant_partition,
    positive_roots,
    root_from_dims,
    subset_diff,
    subset_from_dims,
    weight_multiplicity,
)
from .linalg import RatMatrix, rank
from .maya import (
    hom_basis_maya,
    hom_formula,
    identify_maya,
    max_intersection,
    maya_dims,
    maya_module,
    polytope_max,
    socle_dim_conditions,
)
from .modules import check_preprojective, hom_space_basis, in_rep_w, random_basis_change, socle_dims
from .tableaux import (
    classify,
    constant_scalars,
    f_signature,
    generic_scalars,
    partitions,
    shape_to_w,
    signature,
    ssyt_all,
    ssyt_enumerate,
    type_t_module,
)

MAX_RESAMPLES = 5


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, label: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 10:
                self.failures.append(label)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "seconds": round(self.seconds, 3),
            "failures": self.failures,
        }


def brute_force_kostant(coeffs: tuple[int, ...]) -> int:
    """Count multiplicity vectors over positive roots by exhaustive search."""
    n = len(coeffs) + 1
    roots = positive_roots(n)
    bounds = [min(c for c, r in zip(coeffs, root) if r) for root in roots]
    count = 0
    for mult in itertools.product(*(range(b + 1) for b in bounds)):
        total = [0] * (n - 1)
        for m, root in zip(mult, roots):
            if m:
                for k, r in enumerate(root):
                    total[k] += m * r
        if tuple(total) == tuple(coeffs):
            count += 1
    return count


def _tableaux(max_n: int, max_size: int) -> Iterator:
    for n in range(2, max_n + 1):
        for size in range(max_size + 1):
            for lam in partitions(size, n):
                for t in ssyt_all(lam, n):
                    yield t


def suite_maya_construction(max_n: int, seed: int) -> SuiteResult:
    res = SuiteResult("maya-construction")
    for n in range(3, max_n + 1):
        for a in admissible_subsets(n):
            i = len(a)
            m = maya_module(a)
            indicator = tuple(1 if j == i else 0 for j in range(1, n))
            dims = maya_dims(a)
            ok = (
                check_preprojective(m)
                and socle_dims(m) == indicator
                and root_from_dims(dims) == subset_diff(initial_segment(n, i), a)
                and socle_dim_conditions(dims, i)
                and subset_from_dims(dims, i) == a
            )
            res.record(ok, f"A={{{a}}}")
    return res


def suite_dominance(max_n: int, seed: int) -> SuiteResult:
    res = SuiteResult("dominance-order")
    for n in range(2, max_n + 1):
        for i in range(1, n + 1):
            subs = all_subsets(n, i)
            for c, b in itertools.product(subs, subs):
                res.record(dominance_leq(c, b) == dominance_leq_elementwise(c, b), f"C={{{c}}} B={{{b}}}")
    return res


def suite_hom_formula(max_n: int, seed: int) -> SuiteResult:
    res = SuiteResult("hom-formula-vs-oracle")
    for n in range(3, max_n + 1):
        subs = admissible_subsets(n)
        mods = {a: maya_module(a) for a in subs}
        for a, b in itertools.product(subs, subs):
            oracle = hom_space_basis(mods[a], mods[b])
            ours = hom_basis_maya(a, b)
            dim = hom_formula(a, b)
            ok = len(oracle) == dim == len(ours) and all(phi.is_homomorphism() for phi in ours)
            if ok and dim:
                ours_rank = rank(RatMatrix.from_rows([p.vector() for p in ours]))
                joint = rank(RatMatrix.from_rows([p.vector() for p in ours + oracle]))
                ok = ours_rank == dim == joint
            res.record(ok, f"A={{{a}}} B={{{b}}}")
    return res


def suite_polytope(max_n: int, seed: int) -> SuiteResult:
    res = SuiteResult("polytope-identity")
    for n in range(3, max_n + 1):
        subs = admissible_subsets(n)
        for a, b in itertools.product(subs, subs):
            dim = hom_formula(a, b)
            ok = polytope_max(a, b) == dim
            if len(a) <= len(b):
                s = len(set(a.elements) & set(range(1, len(b) + 1)))
                ok = ok and max_intersection(a, b) - s == dim
            res.record(ok, f"A={{{a}}} B={{{b}}}")
    return res


def suite_uniqueness(max_n: int, seed: int) -> SuiteResult:
    res = SuiteResult("uniqueness")
    for n in range(3, max_n + 1):
        for a in admissible_subsets(n):
            for s in range(seed, seed + 3):
                scrambled = random_basis_change(maya_module(a), s)
                try:
                    found, iso = identify_maya(scrambled, seed=s)
                    ok = found.a == a and iso.is_isomorphism()
                except PreprojError:
                    ok = False
                res.record(ok, f"A={{{a}}} seed={s}")
    return res


def suite_type_t_relations(max_n: int, seed: int) -> SuiteResult:
    res = SuiteResult("type-t-relations")
    for t in _tableaux(min(max_n, 4), 6):
        for scalars in (constant_scalars(t, 0), constant_scalars(t, 1), generic_scalars(t, seed)):
            res.record(check_preprojective(type_t_module(t, scalars)), f"T={t}")
    return res


def suite_hom_t(max_n: int, seed: int) -> SuiteResult:
    res = SuiteResult("hom-type-t")
    for t in _tableaux(min(max_n, 4), 6):
        g = signature(t)
        ok = False
        for s in range(seed, seed + MAX_RESAMPLES + 1):
            m = type_t_module(t, generic_scalars(t, s))
            if f_signature(m) == g and in_rep_w(m, shape_to_w(t.shape, t.n)):
                ok = True
                break
        degenerate = f_signature(type_t_module(t, constant_scalars(t, 0)))
        ok = ok and all(degenerate[a] >= g[a] for a in g)
        res.record(ok, f"T={t}")
    return res


def suite_signatures(max_n: int, seed: int) -> SuiteResult:
    res = SuiteResult("signature-injectivity")
    for n in range(2, min(max_n, 4) + 1):
        for size in range(8):
            for lam in partitions(size, n):
                groups: dict[tuple, list] = {}
                for t in ssyt_all(lam, n):
                    groups.setdefault(t.content, []).append(tuple(signature(t).values()))
                for mu, sigs in groups.items():
                    res.record(len(set(sigs)) == len(sigs), f"lambda={lam} mu={mu}")
    return res


def suite_classify(max_n: int, seed: int) -> SuiteResult:
    res = SuiteResult("classify-roundtrip")
    for t in _tableaux(min(max_n, 4), 6):
        m = type_t_module(t, generic_scalars(t, seed))
        try:
            ok = classify(m, t.shape, t.content) == t
        except PreprojError:
            ok = False
        res.record(ok, f"T={t}")
    return res


def suite_kostant(max_n: int, seed: int) -> SuiteResult:
    res = SuiteResult("kostant-vs-brute-force")
    for n in range(2, min(max_n, 5) + 1):
        for v in itertools.product(range(7), repeat=n - 1):
            if sum(v) > 6:
                continue
            res.record(kostant_partition(root_from_dims(v)) == brute_force_kostant(v), f"v={v}")
    return res


def suite_multiplicity(max_n: int, seed: int) -> SuiteResult:
    res = SuiteResult("weight-multiplicity")
    for n in range(2, min(max_n, 4) + 1):
        for size in range(7):
            for lam in partitions(size, n):
                lam_n = lam + (0,) * (n - len(lam))
                for mu in itertools.product(range(size + 1), repeat=n):
                    if sum(mu) != size:
                        continue
                    ok = len(ssyt_enumerate(lam_n, mu)) == weight_multiplicity(lam_n, mu)
                    res.record(ok, f"lambda={lam_n} mu={mu}")
    return res


SUITES: list[Callable[[int, int], SuiteResult]] = [
    suite_maya_construction,
    suite_dominance,
    suite_hom_formula,
    suite_polytope,
    suite_uniqueness,
    suite_type_t_relations,
    suite_hom_t,
    suite_signatures,
    suite_classify,
    suite_kostant,
    suite_multiplicity,
]


def run_selftest(max_n: int = 4, seed: int = 0) -> list[SuiteResult]:
    """Run every suite up to ``max_n``; tableau suites cap at n = 4, Kostant at n = 5."""
    results = []
    for suite in SUITES:
        start = time.perf_counter()
        res = suite(max_n, seed)
        res.seconds = time.perf_counter() - start
        results.append(res)
    return results
