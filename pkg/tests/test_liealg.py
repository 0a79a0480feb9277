from fractions import Fraction

import pytest

from lieideal import catalog
from lieideal.exactlin import Mat, Subspace, inertia
from lieideal.liealg import (
    InternalCheckError,
    LieAlgebra,
    LinMap,
    Subalgebra,
    bracket_spaces,
    center,
    centralizer,
    derived_series,
    derived_subalgebra,
    direct_sum,
    full_subalgebra,
    generated_subalgebra,
    is_automorphism,
    is_homomorphism,
    is_ideal,
    is_perfect,
    is_semisimple,
    killing_form,
    lower_central_series,
    normalizer,
    quotient,
    radical,
    sub_radical,
    sub_to_algebra,
    subalgebra,
    validate,
)


@pytest.fixture(scope="module")
def heis():
    return catalog.get("heisenberg3").algebra


@pytest.fixture(scope="module")
def sl2():
    return catalog.get("sl2").algebra


@pytest.fixture(scope="module")
def aff1():
    return catalog.get("aff1").algebra


# --- validation -------------------------------------------------------------


def test_validate_abelian():
    assert validate(catalog.abelian(3)).ok


def test_validate_heisenberg(heis):
    assert validate(heis).ok


def test_validate_antisymmetry_violation():
    n = 2
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    c[0][1][0] = Fraction(1)
    c[1][0][0] = Fraction(1)  # should be -1
    report = validate(LieAlgebra(c))
    assert not report.ok
    assert report.antisymmetry_failure == (0, 1, 0)


def test_validate_jacobi_violation():
    g = LieAlgebra.from_brackets(3, {(0, 1): {2: 1}, (0, 2): {0: 1}})
    report = validate(g)
    assert not report.ok
    assert report.jacobi_failure == (0, 1, 2)


# --- brackets ---------------------------------------------------------------


def test_bracket_of_vector_with_itself_is_zero(sl2):
    x = (Fraction(1), Fraction(2), Fraction(-3))
    assert sl2.bracket(x, x) == sl2.zero_vector()


def test_heisenberg_defining_bracket(heis):
    assert heis.bracket(heis.basis_vector(0), heis.basis_vector(1)) == heis.basis_vector(2)


def test_adjoint_of_cartan_element(sl2):
    ad_h = sl2.adjoint_matrix(sl2.basis_vector(0)).matrix
    assert ad_h == Mat([[0, 0, 0], [0, 2, 0], [0, 0, -2]])


def test_bracket_bilinear(sl2):
    x = (Fraction(1), Fraction(0), Fraction(2))
    y = (Fraction(0), Fraction(1), Fraction(1))
    z = (Fraction(3), Fraction(-1), Fraction(0))
    lhs = sl2.bracket(x, tuple(a + b for a, b in zip(y, z)))
    rhs = tuple(a + b for a, b in zip(sl2.bracket(x, y), sl2.bracket(x, z)))
    assert lhs == rhs


def test_bracket_spaces_zero_and_full(heis, sl2):
    full3 = Subspace.full(3)
    assert bracket_spaces(heis, full3, Subspace.zero(3)).dim == 0
    assert bracket_spaces(heis, full3, full3) == Subspace.span(3, [[0, 0, 1]])
    assert bracket_spaces(sl2, full3, full3) == full3


# --- subalgebras ------------------------------------------------------------


def test_subalgebra_rejects_non_closed(sl2):
    with pytest.raises(ValueError):
        subalgebra(sl2, [[0, 1, 0], [0, 0, 1]])  # span(E, F) brackets to H


def test_generated_subalgebra_closes(sl2):
    gen = generated_subalgebra(sl2, [[0, 1, 0], [0, 0, 1]])
    assert gen.dim == 3


def test_derived_and_perfect(sl2, heis):
    assert derived_subalgebra(full_subalgebra(sl2)).dim == 3
    assert is_perfect(full_subalgebra(sl2))
    assert derived_subalgebra(full_subalgebra(catalog.abelian(2))).dim == 0
    assert not is_perfect(full_subalgebra(heis))


def test_sl2_rad2_perfect_killing_degenerate():
    g = catalog.get("sl2_rad2").algebra
    assert is_perfect(full_subalgebra(g))
    assert not inertia(killing_form(g).matrix).is_nondegenerate()


# --- center / centralizer / normalizer --------------------------------------


def test_center_heisenberg(heis):
    assert center(heis).space == Subspace.span(3, [[0, 0, 1]])


def test_centralizer_of_x_in_heisenberg(heis):
    h = subalgebra(heis, [[1, 0, 0]])
    assert centralizer(heis, h).space == Subspace.span(3, [[1, 0, 0], [0, 0, 1]])


def test_normalizer_in_heisenberg(heis):
    h = subalgebra(heis, [[1, 0, 0]])
    assert normalizer(heis, h).space == Subspace.span(3, [[1, 0, 0], [0, 0, 1]])


def test_normalizer_of_cartan_is_itself(sl2):
    h = subalgebra(sl2, [[1, 0, 0]])
    assert normalizer(sl2, h).space == h.space


def test_normalizer_contains_h_and_h_is_ideal_in_it():
    for name in catalog.list_names():
        g = catalog.get(name).algebra
        dsub = derived_subalgebra(full_subalgebra(g))
        n = normalizer(g, dsub)
        assert n.space.contains(dsub.space)
        assert is_ideal(n, dsub)


# --- ideals -----------------------------------------------------------------


def test_ideal_examples(heis, aff1):
    assert is_ideal(aff1, subalgebra(aff1, [[0, 1]]))
    assert not is_ideal(heis, subalgebra(heis, [[1, 0, 0]]))


def test_derived_is_always_ideal():
    for name in catalog.list_names():
        g = catalog.get(name).algebra
        assert is_ideal(g, derived_subalgebra(full_subalgebra(g)))


# --- killing form -----------------------------------------------------------


def test_killing_abelian_is_zero():
    assert killing_form(catalog.abelian(3)).matrix == Mat.zero(3, 3)


def test_killing_sl2(sl2):
    assert killing_form(sl2).matrix == Mat([[8, 0, 0], [0, 0, 4], [0, 4, 0]])


def test_killing_so3():
    assert killing_form(catalog.get("so3").algebra).matrix == Mat.identity(3).scale(-2)


def test_killing_ad_invariance_on_catalog():
    # K([x,y],z) + K(y,[x,z]) = 0 on all basis triples
    for name in catalog.list_names():
        g = catalog.get(name).algebra
        k = killing_form(g)
        basis = [g.basis_vector(i) for i in range(g.dim)]
        for x in basis:
            for y in basis:
                for z in basis:
                    assert k.value(g.bracket(x, y), z) + k.value(y, g.bracket(x, z)) == 0


# --- radical ----------------------------------------------------------------


def test_radical_sl2_is_zero(sl2):
    assert radical(sl2).dim == 0
    assert is_semisimple(sl2)


def test_radical_solvable_is_everything():
    g = catalog.get("upper_triangular(3)").algebra
    assert radical(g).dim == 6


def test_radical_gl2_is_scalars():
    g = catalog.get("gl2").algebra
    assert radical(g).space == Subspace.span(4, [[0, 0, 0, 1]])


def test_radical_semisimplicity_tests_agree_everywhere():
    for name in catalog.list_names():
        g = catalog.get(name).algebra
        rad = radical(g)  # raises InternalCheckError if the two tests disagree
        assert (rad.dim == 0) == inertia(killing_form(g).matrix).is_nondegenerate()


# --- quotients --------------------------------------------------------------


def test_quotient_by_zero_is_identity(sl2):
    q, proj = quotient(sl2, subalgebra(sl2, []))
    assert q.c == sl2.c
    assert proj.matrix == Mat.identity(3)


def test_quotient_aff1_by_derived(aff1):
    q, proj = quotient(aff1, subalgebra(aff1, [[0, 1]]))
    assert q.dim == 1
    assert q.c == catalog.abelian(1).c


def test_quotient_heisenberg_by_center(heis):
    q, proj = quotient(heis, subalgebra(heis, [[0, 0, 1]]))
    assert q.dim == 2
    assert q.c == catalog.abelian(2).c


def test_quotient_projection_is_surjective_hom_with_kernel_ideal(heis):
    ideal = subalgebra(heis, [[0, 0, 1]])
    q, proj = quotient(heis, ideal)
    assert is_homomorphism(proj)
    assert proj.kernel() == ideal.space
    assert proj.image() == Subspace.full(q.dim)


def test_quotient_rejects_non_ideal(heis):
    with pytest.raises(ValueError):
        quotient(heis, subalgebra(heis, [[1, 0, 0]]))


# --- sums and series --------------------------------------------------------


def test_direct_sum_of_lines_is_abelian_plane():
    g, e1, e2 = direct_sum(catalog.abelian(1), catalog.abelian(1))
    assert g.c == catalog.abelian(2).c
    assert e1.image() == Subspace.span(2, [[1, 0]])
    assert e2.image() == Subspace.span(2, [[0, 1]])


def test_direct_sum_center(aff1):
    g, _, _ = direct_sum(aff1, catalog.abelian(1))
    assert center(g).space == Subspace.span(3, [[0, 0, 1]])


def test_solvable_series_of_upper_triangular():
    g = catalog.get("upper_triangular(3)").algebra
    series = derived_series(g)
    assert [s.dim for s in series] == [6, 3, 1, 0]


def test_lower_central_series_of_heisenberg(heis):
    series = lower_central_series(heis)
    assert [s.dim for s in series] == [3, 1, 0]
    # strictly decreasing until stable
    assert all(a.dim > b.dim for a, b in zip(series, series[1:]))


def test_lower_central_series_stalls_on_non_nilpotent(aff1):
    series = lower_central_series(aff1)
    assert [s.dim for s in series] == [2, 1]


def test_validate_constructed_algebras(sl2, heis):
    g, _, _ = direct_sum(sl2, heis)
    assert validate(g).ok
    q, _ = quotient(heis, subalgebra(heis, [[0, 0, 1]]))
    assert validate(q).ok


# --- homomorphisms ----------------------------------------------------------


def test_identity_is_automorphism(sl2):
    assert is_automorphism(LinMap(sl2, sl2, Mat.identity(3)))


def test_negative_transpose_is_involutive_automorphism(sl2):
    theta = catalog.get("sl2").tagged_maps["cartan_involution"]
    assert is_automorphism(theta)
    assert theta.matrix * theta.matrix == Mat.identity(3)


def test_coordinate_swap_is_not_homomorphism(heis):
    f = LinMap(heis, heis, Mat([[0, 1, 0], [1, 0, 0], [0, 0, 1]]))
    assert not is_homomorphism(f)


# --- subalgebra restriction -------------------------------------------------


def test_sub_to_algebra_roundtrip(sl2):
    h = subalgebra(sl2, [[1, 0, 0], [0, 1, 0]])  # borel
    algebra, incl = sub_to_algebra(h)
    assert algebra.dim == 2
    assert validate(algebra).ok
    assert is_homomorphism(incl)
    assert incl.image() == h.space


def test_sub_radical_of_factor():
    sl2 = catalog.get("sl2").algebra
    g, e1, e2 = direct_sum(sl2, catalog.abelian(1))
    h = Subalgebra(g, e1.image())
    assert sub_radical(h).dim == 0
    assert sub_radical(full_subalgebra(g)) == e2.image()
