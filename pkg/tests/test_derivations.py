from fractions import Fraction

import pytest

from lieideal import catalog
from lieideal.derivations import (
    derivation_algebra,
    derivation_tower,
    holomorph,
    is_characteristic,
    is_complete,
    is_derivation,
    leibniz_defect,
    theorem_derived_check,
)
from lieideal.exactlin import Echelon, Mat, Subspace, nullspace
from lieideal.liealg import (
    Subalgebra,
    center,
    derived_subalgebra,
    direct_sum,
    full_subalgebra,
    is_homomorphism,
    is_ideal,
    subalgebra,
    validate,
)


def leibniz_holds(g, f):
    # independent substitution check, written out against the bracket itself
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = f.apply(g.bracket(g.basis_vector(i), g.basis_vector(j)))
            rhs = tuple(
                a + b
                for a, b in zip(
                    g.bracket(f.apply(g.basis_vector(i)), g.basis_vector(j)),
                    g.bracket(g.basis_vector(i), f.apply(g.basis_vector(j))),
                )
            )
            if lhs != rhs:
                return False
    return True


def test_dimension_abelian():
    for n in (1, 2, 3, 4):
        assert derivation_algebra(catalog.abelian(n)).dim == n * n


def test_dimension_heisenberg_and_trace_constraint():
    g = catalog.get("heisenberg3").algebra
    da = derivation_algebra(g)
    assert da.dim == 6
    # f(z) = (a11 + a22) z is forced
    for f in da.realization:
        m = f.matrix
        image_z = f.apply(g.basis_vector(2))
        assert image_z == tuple(
            (m.entries[0][0] + m.entries[1][1]) * x for x in g.basis_vector(2)
        )


def test_dimension_sl2_all_inner():
    da = derivation_algebra(catalog.get("sl2").algebra)
    assert da.dim == 3
    assert da.inner.dim == 3


def test_every_basis_derivation_satisfies_leibniz():
    for name in catalog.list_names():
        g = catalog.get(name).algebra
        da = derivation_algebra(g)
        for f in da.realization:
            assert leibniz_holds(g, f)
            assert leibniz_defect(g, f.matrix) is None


def test_abstract_structure_matches_realization_commutators():
    g = catalog.get("upper_triangular(3)").algebra
    da = derivation_algebra(g)
    d = da.dim
    for a in range(d):
        for b in range(d):
            comm = (
                da.realization[a].matrix * da.realization[b].matrix
                - da.realization[b].matrix * da.realization[a].matrix
            )
            assert da.coordinates_of(comm) == da.algebra.bracket_basis(a, b)


def test_inner_derivations_form_an_ideal():
    for name in ("heisenberg3", "gl2", "sl2_rad2", "upper_triangular(3)"):
        g = catalog.get(name).algebra
        da = derivation_algebra(g)
        inner_sub = Subalgebra(da.algebra, da.inner)
        assert is_ideal(da.algebra, inner_sub)


def test_non_derivation_detected():
    g = catalog.get("heisenberg3").algebra
    swap = Mat([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert not is_derivation(g, swap)


def test_is_complete_examples():
    assert is_complete(catalog.get("sl2").algebra)
    assert is_complete(catalog.get("aff1").algebra)
    assert not is_complete(catalog.get("heisenberg3").algebra)
    assert not is_complete(catalog.get("sl2_rad2").algebra)


# --- holomorph ---------------------------------------------------------------


def test_holomorph_of_line_is_nonabelian_plane():
    g, emb_h, emb_d = holomorph(catalog.abelian(1))
    assert g.dim == 2
    assert validate(g).ok
    # [(0,f),(X,0)] = (f(X),0) with f the identity map on the line
    assert g.bracket(g.basis_vector(1), g.basis_vector(0)) == g.basis_vector(0)


def test_holomorph_bracket_formula_on_sl2():
    h = catalog.get("sl2").algebra
    g, emb_h, emb_d = holomorph(h)
    assert g.dim == 6
    da = derivation_algebra(h)
    for a, f in enumerate(da.realization):
        for i in range(h.dim):
            x_emb = emb_h.apply(h.basis_vector(i))
            f_emb = emb_d.apply(da.algebra.basis_vector(a))
            # [(X,0),(0,f)] = (-f(X), 0)
            expected = emb_h.apply(tuple(-v for v in f.apply(h.basis_vector(i))))
            assert g.bracket(x_emb, f_emb) == expected


def test_holomorph_base_is_ideal_for_every_catalog_algebra():
    for name in catalog.list_names():
        h = catalog.get(name).algebra
        g, emb_h, emb_d = holomorph(h)
        base = Subalgebra(g, emb_h.image())
        assert is_ideal(g, base)
        # derivation part is a subalgebra but need not be an ideal
        Subalgebra(g, emb_d.image())


def test_holomorph_of_complete_algebra_doubles_it():
    # for complete h, D(h) = ad_h, so H(h) = h x h as a vector space
    h = catalog.get("aff1").algebra
    g, _, _ = holomorph(h)
    assert g.dim == 4


# --- towers -----------------------------------------------------------------


def test_tower_of_complete_algebras_stabilizes_immediately():
    for name in ("aff1", "sl2", "so3", "sl2_sum_aff1"):
        tower = derivation_tower(catalog.get(name).algebra)
        assert tower.stabilized_at == 0
        assert len(tower.stages) == 1


def test_tower_of_sl2_rad2_gains_one_stage():
    tower = derivation_tower(catalog.get("sl2_rad2").algebra)
    assert tower.stabilized_at == 1
    assert [s.dim for s in tower.stages] == [5, 6]
    emb = tower.embeddings[0]
    assert is_homomorphism(emb)
    assert emb.kernel().dim == 0


def test_tower_rejects_centered_algebra():
    with pytest.raises(ValueError):
        derivation_tower(catalog.get("heisenberg3").algebra)


def test_tower_budget_report():
    tower = derivation_tower(catalog.get("sl2_rad2").algebra, max_steps=0)
    assert tower.exceeded_budget
    assert tower.stabilized_at is None


def test_theorem_derived_check_examples():
    for name in ("sl2", "aff1"):
        check = theorem_derived_check(catalog.get(name).algebra)
        assert check.lhs_complete and check.rhs_ideal
    g, _, _ = direct_sum(catalog.get("sl2").algebra, catalog.get("aff1").algebra)
    check = theorem_derived_check(g)
    assert check.lhs_complete and check.rhs_ideal


def test_derivations_of_derivation_algebra_vanishing_on_inner_are_zero():
    # consequence of the bracket identity when the base is centerless
    for name in ("sl2", "aff1", "sl2_rad2"):
        g = catalog.get(name).algebra
        assert center(g).dim == 0
        da1 = derivation_algebra(g)
        d1 = da1.algebra
        da2 = derivation_algebra(d1)
        d = d1.dim
        ech = Echelon(d * d)
        for row in da2.span.constraint_matrix().entries:
            ech.add(enumerate(row))
        for v in da1.inner.basis_vectors():
            for r in range(d):
                ech.add(((r * d + c, v[c]) for c in range(d) if v[c]))
        assert len(ech.nullspace_rows()) == 0


# --- characteristic ideals ---------------------------------------------------


def test_derived_subalgebra_is_characteristic_everywhere():
    for name in catalog.list_names():
        g = catalog.get(name).algebra
        assert is_characteristic(g, derived_subalgebra(full_subalgebra(g)))


def test_center_of_heisenberg_is_characteristic():
    g = catalog.get("heisenberg3").algebra
    assert is_characteristic(g, subalgebra(g, [[0, 0, 1]]))


def test_aff1_factor_is_not_characteristic():
    aff1 = catalog.get("aff1").algebra
    k, emb_aff, _ = direct_sum(aff1, catalog.abelian(1))
    h = Subalgebra(k, emb_aff.image())
    assert is_ideal(k, h)
    assert not is_characteristic(k, h)


def test_is_characteristic_requires_ideal():
    g = catalog.get("heisenberg3").algebra
    with pytest.raises(ValueError):
        is_characteristic(g, subalgebra(g, [[1, 0, 0]]))
