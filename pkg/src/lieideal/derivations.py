"""Derivation algebras, holomorphs, and the derivation tower.

A derivation of g is an endomorphism f with f([x,y]) = [f(x),y] + [x,f(y)].
The solver treats the n^2 matrix entries of f (row-major) as unknowns and
takes the exact kernel of the stacked Leibniz constraints over all basis
pairs.  The canonical RREF kernel basis fixes the structure constants of
D(g) deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactlin import Echelon, Mat, Subspace, Vector
from .liealg import (
    InternalCheckError,
    LieAlgebra,
    LinMap,
    Subalgebra,
    center,
    is_ideal,
    validate_or_raise,
)


@dataclass(frozen=True)
class DerivationAlgebra:
    """D(base): abstract structure constants plus the matrix realization.

    ``span`` is the solution space of the Leibniz system in flattened
    (row-major) endomorphism coordinates; the realization maps are its RREF
    basis reshaped to matrices.
    """

    base: LieAlgebra
    algebra: LieAlgebra
    realization: tuple[LinMap, ...]
    inner: Subspace
    span: Subspace

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def coordinates_of(self, endo: Mat) -> Vector:
        """Coordinates of an endomorphism in the derivation basis.

        Raises if the matrix is not a derivation (not in the span).
        """
        n = self.base.dim
        flat = tuple(endo.entries[a][b] for a in range(n) for b in range(n))
        coords = self.span.coordinates(flat)
        if coords is None:
            raise ValueError("endomorphism is not in the derivation span")
        return coords

    def adjoint_coordinates(self, x) -> Vector:
        """Coordinates of ad_x inside D(base)."""
        return self.coordinates_of(self.base.adjoint_matrix(x).matrix)


def _leibniz_kernel(g: LieAlgebra) -> list[Vector]:
    """Kernel of the Leibniz system; unknowns f_ab at index a*n + b."""
    n = g.dim
    nz = g._nz
    ech = Echelon(n * n)
    for i in range(n):
        for j in range(i + 1, n):
            # one equation per output coordinate k:
            #   sum_m c_ijm f_km - sum_a c_ajk f_ai - sum_b c_ibk f_bj = 0
            rows: list[dict[int, Fraction]] = [dict() for _ in range(n)]
            for m, v in nz[i][j]:
                for k in range(n):
                    key = k * n + m
                    rows[k][key] = rows[k].get(key, Fraction(0)) + v
            for a in range(n):
                for k, v in nz[a][j]:
                    key = a * n + i
                    rows[k][key] = rows[k].get(key, Fraction(0)) - v
            for b in range(n):
                for k, v in nz[i][b]:
                    key = b * n + j
                    rows[k][key] = rows[k].get(key, Fraction(0)) - v
            for row in rows:
                if row:
                    ech.add(row.items())
    return ech.nullspace_rows()


@lru_cache(maxsize=None)
def derivation_algebra(g: LieAlgebra) -> DerivationAlgebra:
    """Solve the Leibniz system and package D(g).

    The abstract bracket is the commutator of the realization matrices,
    re-expressed in the canonical kernel basis; the inner subspace is the
    span of the adjoint maps' coordinates.
    """
    n = g.dim
    kernel = Subspace.span(n * n, _leibniz_kernel(g))
    d = kernel.dim
    mats = [
        Mat([row[a * n : (a + 1) * n] for a in range(n)], cols=n)
        for row in kernel.basis.entries
    ]
    realization = tuple(LinMap(g, g, m) for m in mats)

    def coords(mat: Mat) -> Vector:
        flat = tuple(mat.entries[a][b] for a in range(n) for b in range(n))
        c = kernel.coordinates(flat)
        if c is None:
            raise InternalCheckError("derivation commutator escaped the solution span")
        return c

    c = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for a in range(d):
        for b in range(a + 1, d):
            comm = mats[a] * mats[b] - mats[b] * mats[a]
            w = coords(comm)
            c[a][b] = list(w)
            c[b][a] = [-x for x in w]
    algebra = validate_or_raise(
        LieAlgebra(c, name=None if g.name is None else f"D({g.name})")
    )
    inner_rows = []
    for i in range(n):
        ad = g.adjoint_matrix(g.basis_vector(i)).matrix
        inner_rows.append(coords(ad))
    inner = Subspace.span(d, inner_rows)
    return DerivationAlgebra(
        base=g, algebra=algebra, realization=realization, inner=inner, span=kernel
    )


def leibniz_defect(g: LieAlgebra, f: Mat) -> Vector | None:
    """First nonzero f([ei,ej]) - [f ei, ej] - [ei, f ej], or None if f derives."""
    n = g.dim
    for i in range(n):
        fi = f.column(i)
        for j in range(i + 1, n):
            lhs = f.apply(g.bracket_basis(i, j))
            rhs1 = g.bracket(fi, g.basis_vector(j))
            rhs2 = g.bracket(g.basis_vector(i), f.column(j))
            defect = tuple(a - b - c for a, b, c in zip(lhs, rhs1, rhs2))
            if any(defect):
                return defect
    return None


def is_derivation(g: LieAlgebra, f: Mat) -> bool:
    return leibniz_defect(g, f) is None


def is_complete(g: LieAlgebra) -> bool:
    """Trivial center and every derivation inner."""
    if center(g).dim != 0:
        return False
    da = derivation_algebra(g)
    return da.inner.dim == da.dim


def holomorph(h: LieAlgebra) -> tuple[LieAlgebra, LinMap, LinMap]:
    """Semidirect product of h with its derivation algebra.

    Coordinates: the first dim(h) axes carry h, the rest carry D(h).  The
    bracket is [(X,f),(Y,g)] = ([X,Y] + f(Y) - g(X), [f,g]); the h part is
    an ideal, the derivation part a subalgebra.
    """
    da = derivation_algebra(h)
    n, d = h.dim, da.dim
    N = n + d
    c = [[[Fraction(0)] * N for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for j in range(n):
            row = h.c[i][j]
            for k in range(n):
                if row[k]:
                    c[i][j][k] = row[k]
    for a in range(d):
        mat = da.realization[a].matrix
        for j in range(n):
            col = mat.column(j)
            for k in range(n):
                if col[k]:
                    c[n + a][j][k] = col[k]
                    c[j][n + a][k] = -col[k]
    for a in range(d):
        for b in range(d):
            row = da.algebra.c[a][b]
            for k in range(d):
                if row[k]:
                    c[n + a][n + b][n + k] = row[k]
    name = None if h.name is None else f"H({h.name})"
    g = validate_or_raise(LieAlgebra(c, name=name))
    embed_h = LinMap(h, g, Mat([[1 if i == j else 0 for j in range(n)] for i in range(N)], cols=n))
    embed_d = LinMap(
        da.algebra,
        g,
        Mat([[1 if i == n + j else 0 for j in range(d)] for i in range(N)], cols=d),
    )
    h_part = Subalgebra(g, embed_h.image())
    if not is_ideal(g, h_part):
        raise InternalCheckError("holomorph base part is not an ideal")
    Subalgebra(g, embed_d.image())  # raises if not bracket-closed
    return g, embed_h, embed_d


@dataclass(frozen=True)
class TowerReport:
    """Stages g, D(g), D^2(g), ... with the adjoint embeddings between them.

    stabilized_at is the index of the first complete stage, or None when the
    step budget ran out first.
    """

    stages: tuple[LieAlgebra, ...]
    embeddings: tuple[LinMap, ...]
    stabilized_at: int | None

    @property
    def exceeded_budget(self) -> bool:
        return self.stabilized_at is None


def derivation_tower(g: LieAlgebra, max_steps: int | None = None) -> TowerReport:
    """Iterate D until a complete stage appears or the budget runs out.

    Requires trivial center; each stage is embedded in the next through its
    adjoint representation (faithful, by centerlessness) and every stage is
    re-checked centerless, which the tower theorem guarantees.
    """
    if center(g).dim != 0:
        raise ValueError("derivation tower needs a centerless algebra")
    if max_steps is None:
        max_steps = g.dim * g.dim + 1
    stages = [g]
    embeddings: list[LinMap] = []
    for _ in range(max_steps):
        current = stages[-1]
        if is_complete(current):
            return TowerReport(tuple(stages), tuple(embeddings), len(stages) - 1)
        da = derivation_algebra(current)
        nxt = da.algebra
        if center(nxt).dim != 0:
            raise InternalCheckError("derivation algebra of a centerless algebra has center")
        cols = [
            da.adjoint_coordinates(current.basis_vector(i))
            for i in range(current.dim)
        ]
        emb = LinMap(current, nxt, Mat.from_columns(cols, rows=nxt.dim))
        _check_tower_embedding(emb)
        stages.append(nxt)
        embeddings.append(emb)
    if is_complete(stages[-1]):
        return TowerReport(tuple(stages), tuple(embeddings), len(stages) - 1)
    return TowerReport(tuple(stages), tuple(embeddings), None)


def _check_tower_embedding(emb: LinMap) -> None:
    from .liealg import is_homomorphism

    if emb.kernel().dim != 0:
        raise InternalCheckError("tower embedding is not injective")
    if not is_homomorphism(emb):
        raise InternalCheckError("tower embedding is not a homomorphism")
    image = Subalgebra(emb.target, emb.image())
    if not is_ideal(emb.target, image):
        raise InternalCheckError("tower embedding image is not an ideal")


@dataclass(frozen=True)
class DerivedTowerCheck:
    """Both sides of: D(g) is complete iff g is an ideal of D^2(g)."""

    lhs_complete: bool
    rhs_ideal: bool

    @property
    def consistent(self) -> bool:
        return self.lhs_complete == self.rhs_ideal


def theorem_derived_check(g: LieAlgebra) -> DerivedTowerCheck:
    if center(g).dim != 0:
        raise ValueError("check needs a centerless algebra")
    da1 = derivation_algebra(g)
    d1 = da1.algebra
    da2 = derivation_algebra(d1)
    d2 = da2.algebra
    lhs = is_complete(d1)
    image_rows = []
    for i in range(g.dim):
        inner1 = da1.adjoint_coordinates(g.basis_vector(i))
        inner2 = da2.adjoint_coordinates(inner1)
        image_rows.append(inner2)
    image = Subalgebra(d2, Subspace.span(d2.dim, image_rows))
    rhs = is_ideal(d2, image)
    return DerivedTowerCheck(lhs_complete=lhs, rhs_ideal=rhs)


def is_characteristic(g: LieAlgebra, h: Subalgebra) -> bool:
    """Every derivation of g maps h into h.  h must be an ideal of g."""
    if h.parent != g:
        raise ValueError("subalgebra of a different algebra")
    if not is_ideal(g, h):
        raise ValueError("is_characteristic needs an ideal")
    da = derivation_algebra(g)
    for f in da.realization:
        for u in h.basis_vectors():
            if not h.space.contains_vector(f.apply(u)):
                return False
    return True
