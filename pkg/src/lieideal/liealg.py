"""Lie algebras over Q by structure constants.

An algebra is its dimension plus the dense tensor c[i][j][k] with
[e_i, e_j] = sum_k c[i][j][k] e_k.  Both (i,j) and (j,i) slots are populated.
Subalgebras are canonical subspaces of the parent's coordinate space that are
verified bracket-closed on construction; nothing is ever closed silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactlin import (
    Echelon,
    Inertia,
    Mat,
    Scalar,
    Subspace,
    Vector,
    inertia,
    nullspace,
    orthogonal_complement,
    rat,
    zero_vec,
)


class InternalCheckError(AssertionError):
    """Two independent computations of the same fact disagreed: a bug."""


class LieAlgebra:
    """Finite-dimensional Lie algebra given by its structure tensor."""

    __slots__ = ("dim", "c", "name", "_nz", "_hash")

    def __init__(
        self,
        c: Sequence[Sequence[Sequence[Scalar]]],
        name: str | None = None,
    ):
        dim = len(c)
        tensor = tuple(
            tuple(tuple(rat(x) for x in row) for row in plane) for plane in c
        )
        for plane in tensor:
            if len(plane) != dim or any(len(row) != dim for row in plane):
                raise ValueError("structure tensor is not dim x dim x dim")
        self.dim = dim
        self.c = tensor
        self.name = name
        # sparse view: _nz[i][j] = ((k, c_ijk), ...) over nonzero entries
        self._nz = tuple(
            tuple(
                tuple((k, v) for k, v in enumerate(row) if v) for row in plane
            )
            for plane in tensor
        )
        self._hash: int | None = None

    @staticmethod
    def from_brackets(
        dim: int,
        brackets: Mapping[tuple[int, int], Mapping[int, Scalar]],
        name: str | None = None,
    ) -> "LieAlgebra":
        """Build from sparse [e_i, e_j] data, filling (j, i) by antisymmetry."""
        c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), row in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index ({i},{j}) out of range")
            for k, v in row.items():
                q = rat(v)
                c[i][j][k] += q
                c[j][i][k] -= q
        return LieAlgebra(c, name=name)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LieAlgebra) and self.c == other.c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.c)
        return self._hash

    def __repr__(self) -> str:
        label = self.name or "LieAlgebra"
        return f"<{label} dim={self.dim}>"

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector dimension mismatch")
        out = [Fraction(0)] * self.dim
        nz = self._nz
        for i, xi in enumerate(x):
            if not xi:
                continue
            nzi = nz[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                s = xi * yj
                for k, v in nzi[j]:
                    out[k] += s * v
        return tuple(out)

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.c[i][j]

    def adjoint_matrix(self, x: Sequence[Fraction]) -> "LinMap":
        """ad_x as a linear map y -> [x, y]."""
        cols = []
        n = self.dim
        for j in range(n):
            col = [Fraction(0)] * n
            for i, xi in enumerate(x):
                if xi:
                    for k, v in self._nz[i][j]:
                        col[k] += xi * v
            cols.append(col)
        return LinMap(self, self, Mat.from_columns(cols, rows=n))

    def zero_vector(self) -> Vector:
        return zero_vec(self.dim)

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(1 if j == i else 0) for j in range(self.dim))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    antisymmetry_failure: tuple[int, int, int] | None = None
    jacobi_failure: tuple[int, int, int] | None = None

    def message(self) -> str:
        if self.ok:
            return "valid Lie algebra (antisymmetry and Jacobi hold)"
        if self.antisymmetry_failure is not None:
            return f"antisymmetry fails at (i,j,k)={self.antisymmetry_failure}"
        return f"Jacobi identity fails at triple (i,j,k)={self.jacobi_failure}"


def validate(g: LieAlgebra) -> ValidationReport:
    """Check antisymmetry and the Jacobi identity on all basis triples."""
    n = g.dim
    c = g.c
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if c[i][j][k] != -c[j][i][k]:
                    return ValidationReport(False, antisymmetry_failure=(i, j, k))
    nz = g._nz
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                acc: dict[int, Fraction] = {}
                for a, b, cc in ((i, j, k), (j, k, i), (k, i, j)):
                    # [[e_a, e_b], e_c]
                    for m, v in nz[a][b]:
                        for t, w in nz[m][cc]:
                            acc[t] = acc.get(t, Fraction(0)) + v * w
                if any(acc.values()):
                    return ValidationReport(False, jacobi_failure=(i, j, k))
    return ValidationReport(True)


def validate_or_raise(g: LieAlgebra) -> LieAlgebra:
    report = validate(g)
    if not report.ok:
        raise ValueError(report.message())
    return g


@dataclass(frozen=True)
class LinMap:
    """Linear map between the coordinate spaces of two algebras."""

    source: LieAlgebra
    target: LieAlgebra
    matrix: Mat

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match map "
                f"{self.source.dim} -> {self.target.dim}"
            )

    def apply(self, v: Sequence[Fraction]) -> Vector:
        return self.matrix.apply(v)

    def image(self) -> Subspace:
        return Subspace.span(
            self.target.dim, [self.matrix.column(j) for j in range(self.source.dim)]
        )

    def kernel(self) -> Subspace:
        return nullspace(self.matrix)

    def compose(self, other: "LinMap") -> "LinMap":
        if other.target != self.source:
            raise ValueError("composition type mismatch")
        return LinMap(other.source, self.target, self.matrix * other.matrix)


@dataclass(frozen=True)
class SymForm:
    """Symmetric bilinear form on an algebra's coordinate space."""

    ambient: LieAlgebra
    matrix: Mat

    def __post_init__(self):
        if not self.matrix.is_symmetric():
            raise ValueError("form matrix is not symmetric")
        if self.matrix.rows != self.ambient.dim:
            raise ValueError("form/algebra dimension mismatch")

    def value(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        acc = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                row = self.matrix.entries[i]
                for j, yj in enumerate(y):
                    if yj and row[j]:
                        acc += xi * row[j] * yj
        return acc

    def inertia_on(self, u: Subspace | None = None) -> Inertia:
        return inertia(self.matrix, u)

    def complement(self, u: Subspace) -> Subspace:
        return orthogonal_complement(self.matrix, u)


class Subalgebra:
    """A bracket-closed subspace of a parent algebra.

    The constructor rejects subspaces that are not closed; use
    generated_subalgebra to take closures explicitly.
    """

    __slots__ = ("parent", "space")

    def __init__(self, parent: LieAlgebra, space: Subspace):
        if space.ambient_dim != parent.dim:
            raise ValueError("subspace ambient dimension != algebra dimension")
        rows = space.basis.entries
        for a in range(len(rows)):
            for b in range(a + 1, len(rows)):
                v = parent.bracket(rows[a], rows[b])
                if not space.contains_vector(v):
                    raise ValueError(
                        f"subspace is not bracket-closed: [basis {a}, basis {b}] escapes"
                    )
        self.parent = parent
        self.space = space

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_vectors(self) -> tuple[Vector, ...]:
        return self.space.basis.entries

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subalgebra)
            and self.parent == other.parent
            and self.space == other.space
        )

    def __hash__(self) -> int:
        return hash((self.parent, self.space))

    def __repr__(self) -> str:
        return f"<Subalgebra dim {self.dim} of {self.parent!r}>"


def subalgebra(parent: LieAlgebra, vectors: Iterable[Sequence[Scalar]]) -> Subalgebra:
    return Subalgebra(parent, Subspace.span(parent.dim, vectors))


def full_subalgebra(g: LieAlgebra) -> Subalgebra:
    return Subalgebra(g, Subspace.full(g.dim))


def zero_subalgebra(g: LieAlgebra) -> Subalgebra:
    return Subalgebra(g, Subspace.zero(g.dim))


def generated_subalgebra(parent: LieAlgebra, vectors: Iterable[Sequence[Scalar]]) -> Subalgebra:
    """Smallest bracket-closed subspace containing the given vectors."""
    space = Subspace.span(parent.dim, vectors)
    while True:
        rows = space.basis.entries
        new = [
            parent.bracket(rows[a], rows[b])
            for a in range(len(rows))
            for b in range(a + 1, len(rows))
        ]
        grown = Subspace.span(parent.dim, list(rows) + new)
        if grown.dim == space.dim:
            return Subalgebra(parent, space)
        space = grown


def bracket_spaces(g: LieAlgebra, u: Subspace, v: Subspace) -> Subspace:
    """Span of all [x, y] with x in u, y in v."""
    if u.ambient_dim != g.dim or v.ambient_dim != g.dim:
        raise ValueError("subspace ambient dimension != algebra dimension")
    products = [
        g.bracket(x, y) for x in u.basis.entries for y in v.basis.entries
    ]
    return Subspace.span(g.dim, products)


def derived_subalgebra(h: Subalgebra) -> Subalgebra:
    return Subalgebra(h.parent, bracket_spaces(h.parent, h.space, h.space))


def is_perfect(h: Subalgebra | LieAlgebra) -> bool:
    h = as_subalgebra(h)
    return bracket_spaces(h.parent, h.space, h.space) == h.space


def as_subalgebra(g: Subalgebra | LieAlgebra) -> Subalgebra:
    if isinstance(g, Subalgebra):
        return g
    return full_subalgebra(g)


def is_ideal(ambient: LieAlgebra | Subalgebra, h: Subalgebra) -> bool:
    """[ambient, h] contained in h.  Requires h inside the ambient space."""
    amb = as_subalgebra(ambient)
    if h.parent != amb.parent:
        raise ValueError("subalgebras live in different parent algebras")
    if not amb.space.contains(h.space):
        raise ValueError("h is not contained in the ambient subalgebra")
    image = bracket_spaces(amb.parent, amb.space, h.space)
    return h.space.contains(image)


def center(g: LieAlgebra) -> Subalgebra:
    """Kernel of all adjoint maps at once."""
    ech = Echelon(g.dim)
    for i in range(g.dim):
        ad = g.adjoint_matrix(g.basis_vector(i)).matrix
        for row in ad.entries:
            ech.add(enumerate(row))
    return Subalgebra(g, Subspace.span(g.dim, ech.nullspace_rows()))


def centralizer(g: LieAlgebra, h: Subalgebra) -> Subalgebra:
    """{x : [x, y] = 0 for all y in h}, one stacked nullspace solve."""
    if h.parent != g:
        raise ValueError("subalgebra of a different algebra")
    ech = Echelon(g.dim)
    for y in h.basis_vectors():
        ad = g.adjoint_matrix(y).matrix  # [x, y] = -ad_y x; same kernel
        for row in ad.entries:
            ech.add(enumerate(row))
    return Subalgebra(g, Subspace.span(g.dim, ech.nullspace_rows()))


def normalizer(g: LieAlgebra, h: Subalgebra) -> Subalgebra:
    """{x : [x, h] inside h}; closure under brackets is checked on build."""
    if h.parent != g:
        raise ValueError("subalgebra of a different algebra")
    constraint = h.space.constraint_matrix()
    ech = Echelon(g.dim)
    for y in h.basis_vectors():
        ad = g.adjoint_matrix(y).matrix
        residual = constraint * ad  # rows: membership defect of [x, y]
        for row in residual.entries:
            ech.add(enumerate(row))
    return Subalgebra(g, Subspace.span(g.dim, ech.nullspace_rows()))


def killing_form(g: LieAlgebra) -> SymForm:
    """B(x, y) = trace(ad_x ad_y)."""
    n = g.dim
    ads = [g.adjoint_matrix(g.basis_vector(i)).matrix for i in range(n)]
    K = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        ai = ads[i]
        for j in range(i, n):
            aj = ads[j]
            acc = Fraction(0)
            for a in range(n):
                ra = ai.entries[a]
                for b in range(n):
                    if ra[b]:
                        w = aj.entries[b][a]
                        if w:
                            acc += ra[b] * w
            K[i][j] = acc
            K[j][i] = acc
    return SymForm(g, Mat(K, cols=n))


def derived_series(g: LieAlgebra, start: Subspace | None = None) -> list[Subspace]:
    """Strictly decreasing series U, [U,U], [[U,U],[U,U]], ... until stable."""
    u = start if start is not None else Subspace.full(g.dim)
    series = [u]
    while True:
        nxt = bracket_spaces(g, series[-1], series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def lower_central_series(g: LieAlgebra, start: Subspace | None = None) -> list[Subspace]:
    u = start if start is not None else Subspace.full(g.dim)
    series = [u]
    while True:
        nxt = bracket_spaces(g, u, series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def is_solvable_space(g: LieAlgebra, u: Subspace) -> bool:
    return derived_series(g, u)[-1].dim == 0


def radical(g: LieAlgebra) -> Subalgebra:
    """Maximal solvable ideal, via the Killing-orthogonal complement of [g,g].

    Valid in characteristic zero.  The result is cross-checked: it must be a
    solvable ideal and the quotient's Killing form must be nondegenerate, and
    the two semisimplicity tests (radical = 0, Killing nondegenerate) must
    agree.  Any mismatch is an internal bug, not a property of the input.
    """
    k = killing_form(g)
    derived = bracket_spaces(g, Subspace.full(g.dim), Subspace.full(g.dim))
    rad_space = orthogonal_complement(k.matrix, derived)
    rad = Subalgebra(g, rad_space)
    if not is_solvable_space(g, rad_space):
        raise InternalCheckError("radical candidate is not solvable")
    if not is_ideal(g, rad):
        raise InternalCheckError("radical candidate is not an ideal")
    killing_nondeg = inertia(k.matrix).is_nondegenerate()
    if killing_nondeg != (rad_space.dim == 0):
        raise InternalCheckError(
            "semisimplicity tests disagree: Killing nondegeneracy vs radical"
        )
    if rad_space.dim and rad_space.dim < g.dim:
        q, _ = quotient(g, rad)
        if not inertia(killing_form(q).matrix).is_nondegenerate():
            raise InternalCheckError("quotient by radical is not semisimple")
    return rad


def is_semisimple(g: LieAlgebra) -> bool:
    return radical(g).dim == 0


def quotient(g: LieAlgebra, ideal: Subalgebra) -> tuple[LieAlgebra, LinMap]:
    """Quotient algebra on the complement of the ideal's pivot coordinates.

    Returns the quotient and the projection, a surjective homomorphism whose
    kernel is exactly the ideal.
    """
    if ideal.parent != g:
        raise ValueError("ideal of a different algebra")
    if not is_ideal(g, ideal):
        raise ValueError("subalgebra is not an ideal; cannot form the quotient")
    n = g.dim
    pivots = set(ideal.space.pivots)
    coords = [j for j in range(n) if j not in pivots]
    m = len(coords)
    proj_rows = []
    for j in range(n):
        resid = ideal.space.residual(g.basis_vector(j))
        proj_rows.append([resid[c] for c in coords])
    proj = Mat(proj_rows, cols=m).transpose()  # m x n

    def project(v: Sequence[Fraction]) -> Vector:
        return proj.apply(v)

    c = [[[Fraction(0)] * m for _ in range(m)] for _ in range(m)]
    for a in range(m):
        for b in range(m):
            w = project(g.bracket(g.basis_vector(coords[a]), g.basis_vector(coords[b])))
            c[a][b] = list(w)
    q = LieAlgebra(c, name=None if g.name is None else f"{g.name}/ideal")
    validate_or_raise(q)
    return q, LinMap(g, q, proj)


def direct_sum(g1: LieAlgebra, g2: LieAlgebra) -> tuple[LieAlgebra, LinMap, LinMap]:
    """Block sum with zero cross-brackets, plus the two embeddings."""
    n1, n2 = g1.dim, g2.dim
    n = n1 + n2
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            row = g1.c[i][j]
            for k in range(n1):
                if row[k]:
                    c[i][j][k] = row[k]
    for i in range(n2):
        for j in range(n2):
            row = g2.c[i][j]
            for k in range(n2):
                if row[k]:
                    c[n1 + i][n1 + j][n1 + k] = row[k]
    name = None
    if g1.name and g2.name:
        name = f"{g1.name}+{g2.name}"
    g = LieAlgebra(c, name=name)
    e1 = Mat([[1 if i == j else 0 for j in range(n1)] for i in range(n)], cols=n1)
    e2 = Mat(
        [[1 if i == n1 + j else 0 for j in range(n2)] for i in range(n)], cols=n2
    )
    return g, LinMap(g1, g, e1), LinMap(g2, g, e2)


def is_homomorphism(f: LinMap) -> bool:
    """f([x, y]) = [f(x), f(y)] on all basis pairs."""
    src, tgt = f.source, f.target
    for i in range(src.dim):
        fi = f.matrix.column(i)
        for j in range(i + 1, src.dim):
            lhs = f.apply(src.bracket_basis(i, j))
            rhs = tgt.bracket(fi, f.matrix.column(j))
            if lhs != rhs:
                return False
    return True


def is_automorphism(f: LinMap) -> bool:
    if f.source != f.target:
        return False
    if f.kernel().dim != 0:
        return False
    return is_homomorphism(f)


def sub_to_algebra(h: Subalgebra) -> tuple[LieAlgebra, LinMap]:
    """The subalgebra as an abstract algebra in its RREF basis, with inclusion."""
    parent = h.parent
    rows = h.basis_vectors()
    r = len(rows)
    c = [[[Fraction(0)] * r for _ in range(r)] for _ in range(r)]
    for a in range(r):
        for b in range(r):
            if a == b:
                continue
            v = parent.bracket(rows[a], rows[b])
            coords = h.space.coordinates(v)
            if coords is None:
                raise InternalCheckError("closed subalgebra bracket escaped the span")
            c[a][b] = list(coords)
    algebra = LieAlgebra(c)
    incl = Mat.from_columns([list(row) for row in rows], rows=parent.dim)
    return algebra, LinMap(algebra, parent, incl)


def sub_radical(h: Subalgebra) -> Subspace:
    """Radical of the subalgebra, as a subspace of the parent's coordinates."""
    if h.dim == 0:
        return Subspace.zero(h.parent.dim)
    algebra, incl = sub_to_algebra(h)
    rad = radical(algebra)
    vectors = [incl.apply(v) for v in rad.basis_vectors()]
    return Subspace.span(h.parent.dim, vectors)


__all__ = [
    "InternalCheckError",
    "LieAlgebra",
    "LinMap",
    "SymForm",
    "Subalgebra",
    "ValidationReport",
    "as_subalgebra",
    "bracket_spaces",
    "center",
    "centralizer",
    "derived_series",
    "derived_subalgebra",
    "direct_sum",
    "full_subalgebra",
    "generated_subalgebra",
    "is_automorphism",
    "is_homomorphism",
    "is_ideal",
    "is_perfect",
    "is_semisimple",
    "is_solvable_space",
    "killing_form",
    "lower_central_series",
    "normalizer",
    "quotient",
    "radical",
    "sub_radical",
    "sub_to_algebra",
    "subalgebra",
    "validate",
    "validate_or_raise",
    "zero_subalgebra",
]
