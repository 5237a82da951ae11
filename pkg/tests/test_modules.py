import json

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from conftest import subset
from preproj.errors import InvalidInput
from preproj.lattice import admissible_subsets
from preproj.linalg import RatMatrix
from preproj.maya import maya_module
from preproj.modules import (
    GradedRep,
    check_preprojective,
    conjugate,
    direct_sum,
    hom_dim,
    hom_space_basis,
    in_rep_w,
    module_from_json,
    module_to_json,
    random_basis_change,
    relation_failures,
    simple_module,
    socle_basis,
    socle_dims,
    zero_module,
)


def mat(rows, cols=None):
    return RatMatrix.from_rows(rows, cols=cols)


def bad_module():
    # n=3, dims (1,1), both arrows 1: (2->1)(1->2) = 1 but the boundary side is 0
    return GradedRep(3, (1, 1), [mat([[1]])], [mat([[1]])])


def sympy_hom_dim(m, n_):
    """Hom dimension from symbolic unknowns and sympy's rank."""
    phis = [
        sympy.Matrix(n_.dim(j), m.dim(j), lambda r, c, j=j: sympy.Symbol(f"p{j}_{r}_{c}"))
        for j in range(1, m.n)
    ]
    symbols = [s for p in phis for s in p]
    if not symbols:
        return 0

    def sm(x):
        return sympy.Matrix(x.rows, x.cols, [sympy.Rational(v.numerator, v.denominator) for row in x.entries for v in row])

    eqs = []
    for j in range(1, m.n - 1):
        eqs += list(phis[j] * sm(m.right_map(j)) - sm(n_.right_map(j)) * phis[j - 1])
    for j in range(2, m.n):
        eqs += list(phis[j - 2] * sm(m.left_map(j)) - sm(n_.left_map(j)) * phis[j - 1])
    eqs = [e for e in eqs if e != 0]
    if not eqs:
        return len(symbols)
    system, _ = sympy.linear_eq_to_matrix(eqs, symbols)
    return len(symbols) - system.rank()


def test_relation_checker_examples():
    assert check_preprojective(maya_module(subset(7, 3, 6, 7)))
    assert not check_preprojective(bad_module())
    assert relation_failures(bad_module()) == [1, 2]
    assert check_preprojective(zero_module(5))


def test_shape_validation():
    with pytest.raises(InvalidInput):
        GradedRep(3, (1, 1), [mat([[1, 0]])], [mat([[1]])])
    with pytest.raises(InvalidInput):
        GradedRep(3, (1,), [], [])


def test_socle_examples():
    assert socle_dims(maya_module(subset(7, 3, 6, 7))) == (0, 0, 1, 0, 0, 0)
    s1 = simple_module(3, 1)
    assert socle_dims(direct_sum(s1, s1)) == (2, 0)
    n23 = maya_module(subset(3, 2, 3))
    assert socle_dims(n23) == (0, 1)
    # spanned by w_{2,2}, the only basis vector at vertex 2
    assert socle_basis(n23)[1] == mat([[1]])


def test_hom_examples():
    assert hom_dim(maya_module(subset(3, 3)), maya_module(subset(3, 2, 3))) == 1
    assert hom_dim(simple_module(3, 1), simple_module(3, 1)) == 1
    assert hom_dim(simple_module(3, 1), simple_module(3, 2)) == 0
    assert hom_dim(zero_module(4), maya_module(subset(4, 2, 4))) == 0


def test_hom_rejects_mismatched_n():
    with pytest.raises(InvalidInput):
        hom_space_basis(simple_module(3, 1), simple_module(4, 1))


@pytest.mark.parametrize("n", [3, 4])
def test_hom_oracle_agrees_with_sympy(n):
    subs = admissible_subsets(n)
    for a in subs:
        for b in subs:
            m, t = maya_module(a), maya_module(b)
            assert hom_dim(m, t) == sympy_hom_dim(m, t), (a, b)


def test_hom_basis_elements_are_intertwiners():
    subs = admissible_subsets(5)
    for a in subs[::3]:
        for b in subs[::2]:
            for phi in hom_space_basis(maya_module(a), maya_module(b)):
                assert phi.is_homomorphism()


def test_in_rep_w_examples():
    assert in_rep_w(maya_module(subset(3, 2, 3)), (1, 1))
    s1 = simple_module(3, 1)
    assert not in_rep_w(direct_sum(s1, s1), (1, 1))
    assert in_rep_w(zero_module(3), (0, 0))


def test_random_basis_change_examples():
    assert random_basis_change(zero_module(4), 7) == zero_module(4)
    m = maya_module(subset(5, 2, 4, 5))
    same, iso = conjugate(m, [RatMatrix.identity(d) for d in m.dims])
    assert same == m and iso.is_isomorphism()
    n3 = maya_module(subset(3, 3))
    assert hom_dim(random_basis_change(n3, 11), n3) == 1


def test_random_basis_change_is_deterministic():
    m = maya_module(subset(6, 2, 4, 6))
    assert random_basis_change(m, 3) == random_basis_change(m, 3)
    assert random_basis_change(m, 3) != m


subsets6 = st.sampled_from(admissible_subsets(6))


@given(subsets6, subsets6, st.integers(0, 10**6), st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_hom_dim_is_isomorphism_invariant(a, b, s1, s2):
    m, t = maya_module(a), maya_module(b)
    scrambled = random_basis_change(m, s1)
    assert check_preprojective(scrambled)
    assert hom_dim(scrambled, random_basis_change(t, s2)) == hom_dim(m, t)


@given(subsets6, subsets6)
@settings(max_examples=40, deadline=None)
def test_socle_is_additive_and_bounded(a, b):
    m, t = maya_module(a), maya_module(b)
    s = direct_sum(m, t)
    assert check_preprojective(s)
    assert socle_dims(s) == tuple(x + y for x, y in zip(socle_dims(m), socle_dims(t)))
    assert all(x <= d for x, d in zip(socle_dims(s), s.dims))


def test_conjugate_gives_isomorphism():
    m = maya_module(subset(6, 3, 5, 6))
    new, iso = conjugate(m, [mat([[2, 1], [1, 1]]) if d == 2 else RatMatrix.identity(d) for d in m.dims])
    assert iso.is_isomorphism()
    assert check_preprojective(new)


def test_json_round_trip():
    for a in admissible_subsets(5):
        m = random_basis_change(maya_module(a), 1)
        assert module_from_json(json.loads(json.dumps(module_to_json(m)))) == m


def test_json_empty_matrices():
    m = maya_module(subset(3, 1, 3))  # S_2: vertex 1 is empty
    data = module_to_json(m)
    assert data == {"n": 3, "dims": [0, 1], "right": [[]], "left": [[]]}
    assert module_from_json(data) == m
