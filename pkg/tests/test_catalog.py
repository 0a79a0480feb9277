import pytest

from lieideal import catalog
from lieideal.derivations import derivation_algebra, is_complete
from lieideal.liealg import (
    center,
    derived_subalgebra,
    full_subalgebra,
    is_perfect,
    radical,
    validate,
)


def test_list_names_all_load():
    for name in catalog.list_names():
        entry = catalog.get(name)
        assert entry.name == name
        assert validate(entry.algebra).ok


def test_unknown_name_raises():
    with pytest.raises(catalog.CatalogError):
        catalog.get("e8")


def test_abelian_parametric():
    assert catalog.get("abelian(4)").algebra.dim == 4
    with pytest.raises(catalog.CatalogError):
        catalog.abelian(0)


@pytest.mark.parametrize("name", catalog.list_names())
def test_expected_facts_recompute(name):
    # goldens are regression locks; every one must re-derive
    entry = catalog.get(name)
    g = entry.algebra
    expected = entry.expected
    full = full_subalgebra(g)
    assert expected["dim"] == g.dim
    assert expected["dim_center"] == center(g).dim
    assert expected["dim_derived"] == derived_subalgebra(full).dim
    assert expected["dim_radical"] == radical(g).dim
    assert expected["dim_derivations"] == derivation_algebra(g).dim
    assert expected["perfect"] == is_perfect(full)
    assert expected["complete"] == is_complete(g)
    assert expected["semisimple"] == (radical(g).dim == 0)


def test_tagged_subalgebras_are_closed():
    from lieideal.liealg import Subalgebra

    for name in catalog.list_names():
        entry = catalog.get(name)
        for tag, space in entry.tagged_subalgebras.items():
            Subalgebra(entry.algebra, space)  # raises if not closed


# --- file format ------------------------------------------------------------


def test_roundtrip_every_catalog_entry(tmp_path):
    for name in catalog.list_names():
        g = catalog.get(name).algebra
        path = tmp_path / f"{name.replace('(', '_').replace(')', '')}.lie"
        catalog.save(g, str(path))
        loaded = catalog.load(str(path))
        assert loaded.c == g.c
        assert loaded.name == g.name


def test_single_bracket_file_is_heisenberg():
    g = catalog.loads("dim 3\nbracket 0 1 2 1\n")
    assert g.c == catalog.get("heisenberg3").algebra.c


def test_rational_values_roundtrip():
    text = "dim 2\nbracket 0 1 1 -3/2\n"
    g = catalog.loads(text)
    assert str(g.c[0][1][1]) == "-3/2"
    assert catalog.dumps(g) == text


def test_comments_and_blank_lines():
    g = catalog.loads("# a comment\n\ndim 2\nname demo\nbracket 0 1 1 1  # inline\n")
    assert g.name == "demo"
    assert g.dim == 2


def test_non_jacobi_file_rejected_with_triple():
    text = "dim 3\nbracket 0 1 2 1\nbracket 0 2 0 1\n"
    with pytest.raises(catalog.ParseError) as exc:
        catalog.loads(text)
    assert "(0, 1, 2)" in str(exc.value)


def test_parse_error_carries_line_number():
    with pytest.raises(catalog.ParseError) as exc:
        catalog.loads("dim 2\nbracket 0 1 1\n")
    assert exc.value.line == 2


def test_lower_triangle_entries_forbidden():
    with pytest.raises(catalog.ParseError):
        catalog.loads("dim 2\nbracket 1 0 0 1\n")


def test_duplicate_entry_rejected():
    with pytest.raises(catalog.ParseError):
        catalog.loads("dim 2\nbracket 0 1 1 1\nbracket 0 1 1 2\n")


def test_unknown_field_rejected():
    with pytest.raises(catalog.ParseError):
        catalog.loads("dim 2\nflavor strange\n")


def test_missing_dim_rejected():
    with pytest.raises(catalog.ParseError):
        catalog.loads("name nothing\n")


def test_bracket_before_dim_rejected():
    with pytest.raises(catalog.ParseError):
        catalog.loads("bracket 0 1 1 1\ndim 2\n")


def test_index_out_of_range_rejected():
    with pytest.raises(catalog.ParseError):
        catalog.loads("dim 2\nbracket 0 1 5 1\n")
