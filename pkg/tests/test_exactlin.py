from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieideal.exactlin import (
    Inertia,
    Mat,
    Subspace,
    inertia,
    intersect,
    nullspace,
    orthogonal_complement,
    rank,
    rat,
    rref,
    subspace_sum,
)

rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


def small_matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(rationals, min_size=c, max_size=c), min_size=r, max_size=r
            ).map(lambda rows: Mat(rows, cols=c))
        )
    )


def test_rat_parsing():
    assert rat("3/4") == Fraction(3, 4)
    assert rat("-7") == Fraction(-7)
    assert rat(Fraction(1, 2)) == Fraction(1, 2)
    assert str(rat("2/4")) == "1/2"


def test_rref_identity():
    m, pivots = rref(Mat.identity(3))
    assert m == Mat.identity(3)
    assert pivots == (0, 1, 2)


def test_rref_zero():
    m, pivots = rref(Mat.zero(2, 2))
    assert m == Mat.zero(2, 2)
    assert pivots == ()


def test_rref_rank_one():
    m, pivots = rref(Mat([[2, 4], [1, 2]]))
    assert m == Mat([[1, 2], [0, 0]])
    assert pivots == (0,)


def test_rref_fractional_entries():
    m, pivots = rref(Mat([["1/2", "1/3"], ["1/4", "1/5"]]))
    assert m == Mat.identity(2)
    assert pivots == (0, 1)


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rref_idempotent(m):
    r1, p1 = rref(m)
    r2, p2 = rref(r1)
    assert r1 == r2
    assert p1 == p2


def test_nullspace_identity_is_zero():
    assert nullspace(Mat.identity(4)).dim == 0


def test_nullspace_zero_matrix_is_full():
    ns = nullspace(Mat.zero(2, 3))
    assert ns == Subspace.full(3)


def test_nullspace_single_constraint():
    ns = nullspace(Mat([[1, 1, 0]]))
    assert ns.dim == 2
    for v in ns.basis_vectors():
        assert v[0] + v[1] == 0


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_nullspace_solves_and_ranks(m):
    ns = nullspace(m)
    for v in ns.basis_vectors():
        assert not any(m.apply(v))
    assert rank(m) + ns.dim == m.cols


def vectors(n):
    return st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=0, max_size=4)


@settings(max_examples=50, deadline=None)
@given(vectors(4), vectors(4))
def test_sum_intersect_dimension_formula(us, vs):
    u = Subspace.span(4, us)
    v = Subspace.span(4, vs)
    total = subspace_sum(u, v)
    meet = intersect(u, v)
    assert u.dim + v.dim == total.dim + meet.dim
    assert total.contains(u) and total.contains(v)
    assert u.contains(meet) and v.contains(meet)


def test_sum_with_zero_is_identity():
    u = Subspace.span(3, [[1, 2, 3], [0, 1, 1]])
    assert subspace_sum(u, Subspace.zero(3)) == u


def test_intersect_idempotent():
    u = Subspace.span(3, [[1, 0, 2], [0, 1, 1]])
    assert intersect(u, u) == u


def test_membership_and_coordinates():
    u = Subspace.span(3, [[1, 0, 1], [0, 1, 2]])
    assert u.contains_vector([1, 1, 3])
    assert not u.contains_vector([0, 0, 1])
    coords = u.coordinates((Fraction(2), Fraction(-1), Fraction(0)))
    assert coords == (Fraction(2), Fraction(-1))
    assert u.coordinates((Fraction(0), Fraction(0), Fraction(1))) is None


def test_orthogonal_complement_in_sl2_killing():
    killing = Mat([[8, 0, 0], [0, 0, 4], [0, 4, 0]])
    h_line = Subspace.span(3, [[1, 0, 0]])
    comp = orthogonal_complement(killing, h_line)
    assert comp == Subspace.span(3, [[0, 1, 0], [0, 0, 1]])


@settings(max_examples=40, deadline=None)
@given(vectors(3))
def test_orthogonal_complement_dimension_lower_bound(us):
    b = Mat.identity(3)  # nondegenerate, so equality holds
    u = Subspace.span(3, us)
    comp = orthogonal_complement(b, u)
    assert u.dim + comp.dim == 3


def test_orthogonal_complement_degenerate_form_overcounts():
    b = Mat([[1, 0], [0, 0]])
    u = Subspace.span(2, [[0, 1]])
    comp = orthogonal_complement(b, u)
    assert u.dim + comp.dim >= 2
    assert comp == Subspace.full(2)


def test_inertia_identity():
    assert inertia(Mat.identity(3)) == Inertia(3, 0, 0)


def test_inertia_killing_sl2():
    assert inertia(Mat([[8, 0, 0], [0, 0, 4], [0, 4, 0]])) == Inertia(2, 1, 0)


def test_inertia_killing_so3():
    assert inertia(Mat.identity(3).scale(-2)) == Inertia(0, 3, 0)


def test_inertia_restricted_to_subspace():
    b = Mat([[1, 0, 0], [0, -1, 0], [0, 0, 0]])
    assert inertia(b, Subspace.span(3, [[1, 0, 0]])) == Inertia(1, 0, 0)
    assert inertia(b, Subspace.span(3, [[0, 1, 0], [0, 0, 1]])) == Inertia(0, 1, 1)


def test_inertia_off_diagonal_pivot():
    # all-zero diagonal forces the off-diagonal congruence trick
    b = Mat([[0, 1], [1, 0]])
    assert inertia(b) == Inertia(1, 1, 0)


def test_inertia_rejects_asymmetric():
    with pytest.raises(ValueError):
        inertia(Mat([[0, 1], [2, 0]]))


def symmetric_matrices(n):
    return st.lists(
        st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(lambda rows: Mat([[rows[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)]))


def invertible_matrices(n):
    return st.lists(
        st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n
    ).map(lambda rows: Mat(rows)).filter(lambda m: rank(m) == n)


@settings(max_examples=40, deadline=None)
@given(symmetric_matrices(3), invertible_matrices(3))
def test_inertia_congruence_invariant(b, p):
    congruent = p.transpose() * b * p
    assert inertia(congruent) == inertia(b)


def test_inertia_against_charpoly_sign_count():
    # symmetric => all eigenvalues real => Descartes' rule counts them exactly
    import random

    import sympy

    def descartes_inertia(rows, n):
        lam = sympy.symbols("lam")
        coeffs = sympy.Matrix(rows).charpoly(lam).all_coeffs()
        zero = 0
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
            zero += 1
        signs = [c for c in coeffs if c != 0]
        plus = sum(1 for x, y in zip(signs, signs[1:]) if (x > 0) != (y > 0))
        return Inertia(plus, n - zero - plus, zero)

    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 5)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = rng.randint(-4, 4)
        assert inertia(Mat(rows, cols=n)) == descartes_inertia(rows, n)


def test_mat_multiplication_and_apply():
    a = Mat([[1, 2], [3, 4]])
    b = Mat([["1/2", 0], [1, 1]])
    assert a * b == Mat([["5/2", 2], ["11/2", 4]])
    assert a.apply((Fraction(1), Fraction(1))) == (Fraction(3), Fraction(7))


def test_subspace_canonical_equality():
    u = Subspace.span(3, [[2, 0, 4], [1, 1, 1]])
    v = Subspace.span(3, [[1, 1, 1], [3, 1, 5], [1, 0, 2]])
    assert u == v
    assert hash(u) == hash(v)
