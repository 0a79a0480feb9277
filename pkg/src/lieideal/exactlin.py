"""Exact linear algebra over the rationals.

Everything in here is exact: scalars are ``fractions.Fraction``, matrices are
dense grids of them, and subspaces are kept in reduced row-echelon form so
that equality of subspaces is literal equality of their basis matrices.  The
row-reduction engine works on gcd-normalized integer rows internally, which
keeps entries small and avoids per-operation rational normalization in the
hot paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Rat = Fraction
Vector = tuple[Fraction, ...]

Scalar = Union[Fraction, int, str]


def rat(x: Scalar) -> Fraction:
    """Coerce an int, Fraction, or string like "3/4" to an exact rational."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vec(*coords: Scalar) -> Vector:
    return tuple(rat(c) for c in coords)


def zero_vec(n: int) -> Vector:
    return (Fraction(0),) * n


class Mat:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, entries: Iterable[Iterable[Scalar]], cols: int | None = None):
        rows = tuple(tuple(rat(x) for x in row) for row in entries)
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        self.rows = len(rows)
        self.cols = cols
        self.entries = rows
        self._hash: int | None = None

    @staticmethod
    def zero(rows: int, cols: int) -> "Mat":
        return Mat([[0] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @staticmethod
    def from_columns(columns: Sequence[Sequence[Scalar]], rows: int | None = None) -> "Mat":
        cols = [tuple(rat(x) for x in c) for c in columns]
        if cols:
            rows = len(cols[0])
        if rows is None:
            raise ValueError("empty matrix needs an explicit row count")
        return Mat([[c[i] for c in cols] for i in range(rows)], cols=len(cols))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Mat)
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.cols, self.entries))
        return self._hash

    def _check_same_shape(self, other: "Mat") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        return Mat(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
            cols=self.cols,
        )

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        return Mat(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
            cols=self.cols,
        )

    def __neg__(self) -> "Mat":
        return Mat([[-a for a in r] for r in self.entries], cols=self.cols)

    def scale(self, s: Scalar) -> "Mat":
        s = rat(s)
        return Mat([[s * a for a in r] for r in self.entries], cols=self.cols)

    def __mul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} * {other.shape}")
        ot = other.entries
        out = []
        for r in self.entries:
            row = [Fraction(0)] * other.cols
            for k, a in enumerate(r):
                if a:
                    orow = ot[k]
                    for j in range(other.cols):
                        if orow[j]:
                            row[j] += a * orow[j]
            out.append(row)
        return Mat(out, cols=other.cols)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != cols {self.cols}")
        out = [Fraction(0)] * self.rows
        for i, r in enumerate(self.entries):
            acc = Fraction(0)
            for a, x in zip(r, v):
                if a and x:
                    acc += a * x
            out[i] = acc
        return tuple(out)

    def transpose(self) -> "Mat":
        return Mat(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def stack(self, other: "Mat") -> "Mat":
        if self.cols != other.cols:
            raise ValueError("column count mismatch in stack")
        return Mat(self.entries + other.entries, cols=self.cols)

    def is_zero(self) -> bool:
        return all(not x for r in self.entries for x in r)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.entries)
        return f"Mat[{self.rows}x{self.cols}: {body}]"


# ---------------------------------------------------------------------------
# integer row-reduction engine
# ---------------------------------------------------------------------------
#
# Rows are sparse dicts {column: nonzero int}, gcd-normalized.  We build a
# row-echelon form incrementally (pivot column -> row), then back-substitute
# once at the end.  Incoming rows never touch pivot rows, so accumulating a
# few thousand sparse equations stays cheap.


def _int_row(coeffs: Iterable[tuple[int, Fraction]]) -> dict[int, int]:
    """Clear denominators and divide by the content, as a sparse dict."""
    items = [(c, v) for c, v in coeffs if v]
    if not items:
        return {}
    den = 1
    for _, v in items:
        den = den * v.denominator // gcd(den, v.denominator)
    nums = [(c, int(v * den)) for c, v in items]
    g = 0
    for _, n in nums:
        g = gcd(g, n)
    return {c: n // g for c, n in nums}


def _reduce_row(row: dict[int, int], pivots: dict[int, dict[int, int]]) -> dict[int, int]:
    """Eliminate row against the current echelon rows; row becomes primitive."""
    while row:
        lead = min(row)
        prow = pivots.get(lead)
        if prow is None:
            g = 0
            for v in row.values():
                g = gcd(g, v)
            if g > 1:
                row = {c: v // g for c, v in row.items()}
            return row
        a, b = prow[lead], row[lead]
        new: dict[int, int] = {}
        for c, v in row.items():
            w = v * a - prow.get(c, 0) * b
            if w:
                new[c] = w
        for c, v in prow.items():
            if c not in row:
                w = -v * b
                if w:
                    new[c] = w
        row = new
    return {}


class Echelon:
    """Incremental integer row-echelon form of a growing equation system."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, int]] = {}

    def add(self, coeffs: Iterable[tuple[int, Fraction]]) -> None:
        row = _reduce_row(_int_row(coeffs), self.pivots)
        if row:
            self.pivots[min(row)] = row

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rref_rows(self) -> tuple[list[int], list[dict[int, Fraction]]]:
        """Back-substitute and normalize: pivot columns and Fraction rows."""
        piv_cols = sorted(self.pivots)
        reduced: dict[int, dict[int, int]] = {}
        for c in reversed(piv_cols):
            row = dict(self.pivots[c])
            for c2 in list(row):
                if c2 != c and c2 in reduced:
                    prow = reduced[c2]
                    a, b = prow[c2], row[c2]
                    new: dict[int, int] = {}
                    for cc, v in row.items():
                        w = v * a - prow.get(cc, 0) * b
                        if w:
                            new[cc] = w
                    for cc, v in prow.items():
                        if cc not in row:
                            w = -v * b
                            if w:
                                new[cc] = w
                    row = new
            g = 0
            for v in row.values():
                g = gcd(g, v)
            if g > 1:
                row = {cc: v // g for cc, v in row.items()}
            reduced[c] = row
        out = []
        for c in piv_cols:
            row = reduced[c]
            p = row[c]
            out.append({cc: Fraction(v, p) for cc, v in row.items()})
        return piv_cols, out

    def nullspace_rows(self) -> list[Vector]:
        """Basis vectors of the solution space, one per free column."""
        piv_cols, rows = self.rref_rows()
        piv_index = {c: i for i, c in enumerate(piv_cols)}
        free = [c for c in range(self.ncols) if c not in piv_index]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for c in piv_cols:
                coeff = rows[piv_index[c]].get(f)
                if coeff:
                    v[c] = -coeff
            basis.append(tuple(v))
        return basis


def rref(m: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row-echelon form and pivot columns (increasing)."""
    ech = Echelon(m.cols)
    for r in m.entries:
        ech.add(enumerate(r))
    piv_cols, rows = ech.rref_rows()
    out = []
    for row in rows:
        out.append([row.get(j, Fraction(0)) for j in range(m.cols)])
    while len(out) < m.rows:
        out.append([Fraction(0)] * m.cols)
    return Mat(out, cols=m.cols), tuple(piv_cols)


def rank(m: Mat) -> int:
    ech = Echelon(m.cols)
    for r in m.entries:
        ech.add(enumerate(r))
    return ech.rank


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n, held as its unique RREF basis.

    Two subspaces are equal iff they are the same set of vectors, which by
    canonicality is iff their basis matrices compare equal.
    """

    ambient_dim: int
    basis: Mat
    pivots: tuple[int, ...]

    @staticmethod
    def span(ambient_dim: int, vectors: Iterable[Sequence[Scalar]]) -> "Subspace":
        ech = Echelon(ambient_dim)
        for v in vectors:
            row = [rat(x) for x in v]
            if len(row) != ambient_dim:
                raise ValueError(f"vector length {len(row)} != ambient {ambient_dim}")
            ech.add(enumerate(row))
        piv_cols, rows = ech.rref_rows()
        basis = Mat(
            [[r.get(j, Fraction(0)) for j in range(ambient_dim)] for r in rows],
            cols=ambient_dim,
        )
        return Subspace(ambient_dim, basis, tuple(piv_cols))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Mat([], cols=ambient_dim), ())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Mat.identity(ambient_dim), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_vectors(self) -> tuple[Vector, ...]:
        return self.basis.entries

    def residual(self, v: Sequence[Fraction]) -> Vector:
        """v minus its unique combination of basis rows; zero iff v is a member."""
        if len(v) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        work = list(v)
        for i, p in enumerate(self.pivots):
            c = work[p]
            if c:
                brow = self.basis.entries[i]
                for j in range(self.ambient_dim):
                    if brow[j]:
                        work[j] -= c * brow[j]
        return tuple(work)

    def contains_vector(self, v: Sequence[Fraction]) -> bool:
        return not any(self.residual(v))

    def coordinates(self, v: Sequence[Fraction]) -> Vector | None:
        """Coefficients of v in the RREF basis, or None if v is not a member."""
        if any(self.residual(v)):
            return None
        return tuple(v[p] for p in self.pivots)

    def contains(self, other: "Subspace | Sequence[Fraction]") -> bool:
        if isinstance(other, Subspace):
            if other.ambient_dim != self.ambient_dim:
                raise ValueError("ambient dimension mismatch")
            return all(self.contains_vector(r) for r in other.basis.entries)
        return self.contains_vector(other)

    def constraint_matrix(self) -> Mat:
        """A matrix whose kernel is exactly this subspace (the residual map)."""
        n = self.ambient_dim
        rows = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        for i, p in enumerate(self.pivots):
            brow = self.basis.entries[i]
            for r in range(n):
                if brow[r]:
                    rows[r][p] -= brow[r]
        return Mat(rows, cols=n)

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


def nullspace(m: Mat) -> Subspace:
    """Exact kernel {v : m v = 0} as a canonical subspace."""
    ech = Echelon(m.cols)
    for r in m.entries:
        ech.add(enumerate(r))
    return Subspace.span(m.cols, ech.nullspace_rows())


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return Subspace.span(u.ambient_dim, u.basis.entries + v.basis.entries)


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """Intersection, via the kernel of the stacked membership constraints."""
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    stacked = u.constraint_matrix().stack(v.constraint_matrix())
    return nullspace(stacked)


def orthogonal_complement(b: Mat, u: Subspace) -> Subspace:
    """{v : b(v, u_i) = 0 for all basis u_i}; b is a symmetric form's matrix."""
    if b.rows != u.ambient_dim or b.cols != u.ambient_dim:
        raise ValueError("form/ambient dimension mismatch")
    if u.dim == 0:
        return Subspace.full(u.ambient_dim)
    constraints = Mat([b.apply(row) for row in u.basis.entries], cols=u.ambient_dim)
    return nullspace(constraints)


@dataclass(frozen=True)
class Inertia:
    """Sylvester inertia (n_plus, n_minus, n_zero) of a symmetric form."""

    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def dim(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero

    def is_positive_definite(self) -> bool:
        return self.n_minus == 0 and self.n_zero == 0

    def is_negative_definite(self) -> bool:
        return self.n_plus == 0 and self.n_zero == 0

    def is_nondegenerate(self) -> bool:
        return self.n_zero == 0


def inertia(b: Mat, u: Subspace | None = None) -> Inertia:
    """Inertia of the symmetric form b restricted to u (default: everything).

    Exact symmetric congruence elimination.  When every remaining diagonal
    entry vanishes but some off-diagonal a_jk does not, the congruence
    e_j -> e_j + e_k manufactures the nonzero diagonal pivot 2*a_jk.
    """
    if not b.is_symmetric():
        raise ValueError("form matrix is not symmetric")
    if u is None:
        u = Subspace.full(b.rows)
    if u.ambient_dim != b.rows:
        raise ValueError("form/ambient dimension mismatch")
    r = u.dim
    ub = [b.apply(row) for row in u.basis.entries]
    m = [[_dot(u.basis.entries[i], ub[j]) for j in range(r)] for i in range(r)]
    n_plus = n_minus = n_zero = 0
    i = 0
    while i < r:
        k = next((k for k in range(i, r) if m[k][k]), None)
        if k is None:
            jk = next(
                ((j, l) for j in range(i, r) for l in range(j + 1, r) if m[j][l]),
                None,
            )
            if jk is None:
                n_zero += r - i
                break
            j, l = jk
            for t in range(r):
                m[j][t] += m[l][t]
            for t in range(r):
                m[t][j] += m[t][l]
            k = j
        if k != i:
            m[i], m[k] = m[k], m[i]
            for t in range(r):
                m[t][i], m[t][k] = m[t][k], m[t][i]
        d = m[i][i]
        if d > 0:
            n_plus += 1
        else:
            n_minus += 1
        for t in range(i + 1, r):
            c = m[t][i]
            if c:
                f = c / d
                for s in range(r):
                    m[t][s] -= f * m[i][s]
                for s in range(r):
                    m[s][t] -= f * m[s][i]
        i += 1
    return Inertia(n_plus, n_minus, n_zero)


def _dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    acc = Fraction(0)
    for a, b in zip(x, y):
        if a and b:
            acc += a * b
    return acc


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    if len(x) != len(y):
        raise ValueError("length mismatch")
    return _dot(x, y)
