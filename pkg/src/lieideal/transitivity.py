"""Subideal decisions with certificates and the ideal-transitivity criteria.

The subideal test runs the descending ideal-closure series: starting from the
ambient algebra, repeatedly replace the ambient by the smallest of its ideals
containing h.  The series is weakly decreasing and stabilizes within dim(g)
steps; it reaches h exactly when h is a subideal, and a positive answer is
returned only as an independently re-verified chain of ideals.

The remaining operations package the structural criteria under which a
subideal is forced to be an honest ideal (perfectness, completeness of the
subalgebra with centerless middle, radical placement, skew-symmetry with
respect to a definite form, Cartan eigenspace containment) together with the
self-normalizing-normalizer consequence.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .exactlin import Inertia, Mat, Subspace, Vector, intersect, subspace_sum
from .liealg import (
    InternalCheckError,
    LieAlgebra,
    LinMap,
    Subalgebra,
    SymForm,
    as_subalgebra,
    bracket_spaces,
    center,
    centralizer,
    direct_sum,
    derived_subalgebra,
    full_subalgebra,
    is_automorphism,
    is_ideal,
    is_perfect,
    killing_form,
    normalizer,
    quotient,
    sub_radical,
    validate_or_raise,
)


class HypothesisError(ValueError):
    """A theorem's hypothesis failed to verify; the check does not apply."""


class TheoremViolationError(InternalCheckError):
    """A proven statement came out false on verified inputs: a bug."""


# ---------------------------------------------------------------------------
# subideal machinery
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdealChain:
    """Nested subalgebras h = l_0 <| l_1 <| ... <| l_n = ambient."""

    links: tuple[Subalgebra, ...]

    def __post_init__(self):
        if not self.links:
            raise ValueError("empty chain")

    @property
    def parent(self) -> LieAlgebra:
        return self.links[0].parent

    def verify(self) -> bool:
        """Re-check every consecutive pair with the plain ideal test."""
        for inner, outer in zip(self.links, self.links[1:]):
            if not outer.space.contains(inner.space):
                return False
            if not is_ideal(outer, inner):
                return False
        return True

    def __len__(self) -> int:
        return len(self.links)

    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.links)


def ideal_closure(ambient: LieAlgebra | Subalgebra, h: Subalgebra) -> Subalgebra:
    """Smallest ideal of the ambient algebra containing h.

    Iterates S <- S + [ambient, S] until stable; monotone, so any ideal
    containing h contains every iterate.
    """
    amb = as_subalgebra(ambient)
    if h.parent != amb.parent:
        raise ValueError("subalgebras live in different parent algebras")
    if not amb.space.contains(h.space):
        raise ValueError("h is not contained in the ambient subalgebra")
    g = amb.parent
    space = h.space
    while True:
        grown = subspace_sum(space, bracket_spaces(g, amb.space, space))
        if grown.dim == space.dim:
            return Subalgebra(g, space)
        space = grown


@dataclass(frozen=True)
class SubidealVerdict:
    """Outcome of the subideal decision.

    A positive verdict carries a verified chain; a negative one carries the
    floor the closure series stabilized at (an ideal-closure fixed point
    strictly above h).
    """

    is_subideal: bool
    chain: IdealChain | None
    floor: Subalgebra | None

    def __bool__(self) -> bool:
        return self.is_subideal


def subideal_chain(ambient: LieAlgebra | Subalgebra, h: Subalgebra) -> SubidealVerdict:
    """Decide whether h is a subideal of the ambient algebra.

    Series: l_0 = ambient, l_{i+1} = ideal closure of h inside l_i.  Each
    step is an ideal of the previous one, so when the series bottoms out at
    h the reversed series is the desired chain.  If it stabilizes strictly
    above h, no chain exists.
    """
    amb = as_subalgebra(ambient)
    series = [amb]
    while True:
        current = series[-1]
        nxt = ideal_closure(current, h)
        if nxt.dim == current.dim:
            break
        series.append(nxt)
        if len(series) > amb.parent.dim + 2:
            raise InternalCheckError("closure series failed to stabilize")
    floor = series[-1]
    if floor.space == h.space:
        chain = IdealChain(tuple(reversed(series)))
        if not chain.verify():
            raise InternalCheckError("closure series produced an invalid chain")
        return SubidealVerdict(True, chain, None)
    return SubidealVerdict(False, None, floor)


def check_perfect_transitivity(
    ambient: LieAlgebra | Subalgebra, h: Subalgebra
) -> IdealChain:
    """Perfect subideals are ideals; returns the witnessing chain.

    Raises HypothesisError when h is not perfect or not a subideal, and
    TheoremViolationError if the conclusion ever fails (it cannot, short of
    an implementation bug).
    """
    if not is_perfect(h):
        raise HypothesisError("h is not perfect")
    verdict = subideal_chain(ambient, h)
    if not verdict:
        raise HypothesisError("h is not a subideal of the ambient algebra")
    if not is_ideal(ambient, h):
        raise TheoremViolationError(
            f"perfect subideal is not an ideal: chain dims {verdict.chain.dims()}"
        )
    return verdict.chain


# ---------------------------------------------------------------------------
# the constructive converse
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CounterexampleCertificate:
    """Extension in which a non-perfect h is a subideal but not an ideal.

    ambient is the holomorph of k = h (+) h/[h,h]; the chain embeds h two
    ideals deep; the witness pair brackets to a value provably outside h.
    """

    ambient: LieAlgebra
    chain: IdealChain
    witness_pair: tuple[Vector, Vector]
    escaping_value: Vector

    def verify(self) -> bool:
        if not self.chain.verify():
            return False
        h_space = self.chain.links[0].space
        x, y = self.witness_pair
        value = self.ambient.bracket(x, y)
        if value != self.escaping_value:
            return False
        return not h_space.contains_vector(value)


def counterexample_extension(h: LieAlgebra) -> CounterexampleCertificate:
    """Build the standard extension witnessing that a non-perfect h fails
    ideal transitivity.

    k is h plus the abelianization of h as a direct sum; projecting the h
    part onto the abelianization is a derivation f of k, and inside the
    holomorph of k the bracket of (a suitable element of h) with f lands in
    the abelianization coordinates, outside h.
    """
    from .derivations import derivation_algebra, holomorph, is_derivation

    hsub = full_subalgebra(h)
    derived = derived_subalgebra(hsub)
    if derived.space.dim == h.dim:
        raise HypothesisError("h is perfect; no counterexample extension exists")
    q, proj = quotient(h, derived)
    k, emb_h, emb_q = direct_sum(h, q)
    nh, nq = h.dim, q.dim
    nk = nh + nq
    # f(X, Y) = (0, proj(X)) as a matrix on k
    f_rows = [[Fraction(0)] * nk for _ in range(nk)]
    for a in range(nq):
        for b in range(nh):
            f_rows[nh + a][b] = proj.matrix.entries[a][b]
    f_mat = Mat(f_rows, cols=nk)
    if not is_derivation(k, f_mat):
        raise InternalCheckError("projection onto the abelianization is not a derivation")
    big, emb_k, emb_d = holomorph(k)
    da = derivation_algebra(k)
    f_coords = da.coordinates_of(f_mat)
    # X_o in h with nonzero abelianization image: some basis vector works
    xo_index = next(
        i for i in range(nh) if any(proj.matrix.column(i))
    )
    xo_in_big = emb_k.apply(emb_h.apply(h.basis_vector(xo_index)))
    f_in_big = emb_d.apply(f_coords)
    h_in_big = Subalgebra(
        big, Subspace.span(big.dim, [emb_k.apply(emb_h.apply(v)) for v in _basis(h)])
    )
    k_in_big = Subalgebra(big, emb_k.image())
    chain = IdealChain((h_in_big, k_in_big, full_subalgebra(big)))
    escaping = big.bracket(xo_in_big, f_in_big)
    cert = CounterexampleCertificate(
        ambient=big,
        chain=chain,
        witness_pair=(xo_in_big, f_in_big),
        escaping_value=escaping,
    )
    if not cert.verify():
        raise InternalCheckError("counterexample certificate failed verification")
    return cert


def _basis(g: LieAlgebra) -> list[Vector]:
    return [g.basis_vector(i) for i in range(g.dim)]


# ---------------------------------------------------------------------------
# complete subideals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CompleteSubidealReport:
    ideal_in_g: bool
    centralizer_in_k: Subalgebra
    decomposition_ok: bool


def check_complete_subideal(
    h: Subalgebra, k: Subalgebra, g: LieAlgebra
) -> CompleteSubidealReport:
    """Complete h with h <| k <| g and centerless k forces h <| g.

    Also verifies the decomposition k = h (+) c_k(h): spanning, transverse,
    and with vanishing cross-bracket.
    """
    from .derivations import is_complete

    from .liealg import sub_to_algebra

    if h.parent != g or k.parent != g:
        raise ValueError("subalgebras live in a different parent algebra")
    if not k.space.contains(h.space):
        raise HypothesisError("h is not contained in k")
    h_alg, _ = sub_to_algebra(h)
    if not is_complete(h_alg):
        raise HypothesisError("h is not complete")
    if not (is_ideal(k, h) and is_ideal(g, k)):
        raise HypothesisError("h <| k <| g does not hold")
    k_alg, k_incl = sub_to_algebra(k)
    if center(k_alg).dim != 0:
        raise HypothesisError("k does not have trivial center")
    if not is_ideal(g, h):
        raise TheoremViolationError("complete subideal with centerless middle is not an ideal")
    # centralizer of h inside k, in the parent's coordinates
    h_in_k = Subalgebra(
        k_alg,
        Subspace.span(
            k_alg.dim,
            [k.space.coordinates(v) for v in h.basis_vectors()],
        ),
    )
    c_in_k = centralizer(k_alg, h_in_k)
    c_vectors = [k_incl.apply(v) for v in c_in_k.basis_vectors()]
    c_sub = Subalgebra(g, Subspace.span(g.dim, c_vectors))
    sum_ok = subspace_sum(h.space, c_sub.space) == k.space
    transverse = intersect(h.space, c_sub.space).dim == 0
    cross_zero = bracket_spaces(g, h.space, c_sub.space).dim == 0
    ok = sum_ok and transverse and cross_zero
    if not ok:
        raise TheoremViolationError("k = h (+) c_k(h) decomposition failed")
    return CompleteSubidealReport(True, c_sub, ok)


# ---------------------------------------------------------------------------
# radical criteria
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadicalIntersectionReport:
    radical_h: Subspace
    radical_g_meet_h: Subspace

    @property
    def ok(self) -> bool:
        return self.radical_h == self.radical_g_meet_h


def check_radical_intersection(
    ambient: LieAlgebra | Subalgebra, h: Subalgebra
) -> RadicalIntersectionReport:
    """r_h = r_g /\\ h for subideals h of g."""
    amb = as_subalgebra(ambient)
    if not subideal_chain(amb, h):
        raise HypothesisError("h is not a subideal of the ambient algebra")
    rh = sub_radical(h)
    rg = sub_radical(amb)
    report = RadicalIntersectionReport(rh, intersect(rg, h.space))
    if not report.ok:
        raise TheoremViolationError(
            f"radical identity failed: dim r_h = {report.radical_h.dim}, "
            f"dim (r_g /\\ h) = {report.radical_g_meet_h.dim}"
        )
    return report


@dataclass(frozen=True)
class LeviCriterionReport:
    ideal: bool
    radical_ideal: bool
    radical_bracket: bool

    @property
    def agree(self) -> bool:
        return self.ideal == self.radical_ideal == self.radical_bracket


def levi_criterion(ambient: LieAlgebra | Subalgebra, h: Subalgebra) -> LeviCriterionReport:
    """For subideals h, 'h ideal', 'r_h ideal', and '[r_h, g] in h' coincide."""
    amb = as_subalgebra(ambient)
    if not subideal_chain(amb, h):
        raise HypothesisError("h is not a subideal of the ambient algebra")
    g = amb.parent
    rh = sub_radical(h)
    a = is_ideal(amb, h)
    image_rh = bracket_spaces(g, amb.space, rh)
    b = rh.contains(image_rh)
    c = h.space.contains(image_rh)
    report = LeviCriterionReport(a, b, c)
    if not report.agree:
        raise TheoremViolationError(
            f"radical criteria disagree on a subideal: {report}"
        )
    return report


# ---------------------------------------------------------------------------
# bilinear-form criteria
# ---------------------------------------------------------------------------


def adjoint_is_skew(g: LieAlgebra, form: SymForm, x) -> bool:
    """B([x,y], z) + B(y, [x,z]) = 0, as the matrix identity ad_x^T B + B ad_x = 0."""
    ad = g.adjoint_matrix(x).matrix
    lhs = ad.transpose() * form.matrix + form.matrix * ad
    return lhs.is_zero()


def verify_skew_form_hypotheses(
    g: LieAlgebra, form: SymForm, h: Subalgebra
) -> tuple[Inertia, Inertia]:
    """Hypotheses of the definite-form criterion; raises HypothesisError.

    (i) the form is nondegenerate on h and positive definite on the
    orthogonal complement of h; (ii) ad_x is skew for every x in h.
    """
    if form.ambient != g:
        raise ValueError("form on a different algebra")
    on_h = form.inertia_on(h.space)
    if not on_h.is_nondegenerate():
        raise HypothesisError("form is degenerate on h")
    m = form.complement(h.space)
    on_m = form.inertia_on(m)
    if not (on_m.is_positive_definite() and on_m.dim == m.dim):
        raise HypothesisError("form is not positive definite on the complement of h")
    for x in h.basis_vectors():
        if not adjoint_is_skew(g, form, x):
            raise HypothesisError("some ad_x with x in h is not skew for the form")
    return on_h, on_m


@dataclass(frozen=True)
class EquivalenceReport:
    """subideal <=> ideal equivalence on one embedding."""

    subideal: bool
    ideal: bool

    @property
    def consistent(self) -> bool:
        return self.subideal == self.ideal


def check_skew_form_criterion(
    g: LieAlgebra, form: SymForm, h: Subalgebra, k: Subalgebra
) -> EquivalenceReport:
    """Under the verified form hypotheses, h subideal of k iff h ideal of k."""
    if not k.space.contains(h.space):
        raise ValueError("h is not contained in k")
    verify_skew_form_hypotheses(g, form, h)
    sub = bool(subideal_chain(k, h))
    idl = is_ideal(k, h)
    report = EquivalenceReport(sub, idl)
    if not report.consistent:
        raise TheoremViolationError(
            f"definite-form criterion violated: subideal={sub}, ideal={idl}"
        )
    return report


# ---------------------------------------------------------------------------
# Cartan involutions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CartanDecomposition:
    compact_part: Subalgebra  # +1 eigenspace, a subalgebra
    noncompact_part: Subspace  # -1 eigenspace
    form: SymForm  # <x, y> = -B(x, theta y), positive definite


def cartan_eigenspaces(g: LieAlgebra, theta: LinMap) -> CartanDecomposition:
    """Eigenspace decomposition of a Cartan involution, fully verified.

    Checks: theta is an automorphism squaring to the identity on a
    semisimple algebra, the twisted form is positive definite, eigenspaces
    bracket correctly ([u,p] in p, [p,p] in u), and the Killing form is
    negative definite on u and positive definite on p.
    """
    if theta.source != g or theta.target != g:
        raise ValueError("involution on a different algebra")
    if not is_automorphism(theta):
        raise HypothesisError("theta is not an automorphism")
    n = g.dim
    if theta.matrix * theta.matrix != Mat.identity(n):
        raise HypothesisError("theta does not square to the identity")
    kform = killing_form(g)
    if not kform.inertia_on().is_nondegenerate():
        raise HypothesisError("Killing form is degenerate; algebra is not semisimple")
    twisted = (kform.matrix * theta.matrix).scale(-1)
    if not twisted.is_symmetric():
        raise HypothesisError("twisted form -B(x, theta y) is not symmetric")
    tw_inertia = SymForm(g, twisted).inertia_on()
    if not (tw_inertia.is_positive_definite() and tw_inertia.dim == n):
        raise HypothesisError("twisted form is not positive definite: not a Cartan involution")
    from .exactlin import nullspace

    u = nullspace(theta.matrix - Mat.identity(n))
    p = nullspace(theta.matrix + Mat.identity(n))
    if u.dim + p.dim != n:
        raise HypothesisError("eigenspaces do not span; theta is not diagonalizable over Q")
    usub = Subalgebra(g, u)  # raises if not bracket-closed
    if not p.contains(bracket_spaces(g, u, p)):
        raise InternalCheckError("[u, p] escapes p")
    if not u.contains(bracket_spaces(g, p, p)):
        raise InternalCheckError("[p, p] escapes u")
    for x in u.basis.entries:
        for y in p.basis.entries:
            if kform.value(x, y):
                raise InternalCheckError("u and p are not Killing-orthogonal")
    on_u = kform.inertia_on(u)
    if u.dim and not on_u.is_negative_definite():
        raise InternalCheckError("Killing form is not negative definite on u")
    on_p = kform.inertia_on(p)
    if p.dim and not on_p.is_positive_definite():
        raise InternalCheckError("Killing form is not positive definite on p")
    return CartanDecomposition(usub, p, SymForm(g, twisted))


def check_cartan_criterion(
    g: LieAlgebra, theta: LinMap, h: Subalgebra, k: Subalgebra
) -> EquivalenceReport:
    """Subalgebras containing a Cartan eigenspace: subideal of k iff ideal of k."""
    decomp = cartan_eigenspaces(g, theta)
    if not (
        h.space.contains(decomp.compact_part.space)
        or h.space.contains(decomp.noncompact_part)
    ):
        raise HypothesisError("h contains neither Cartan eigenspace")
    if not k.space.contains(h.space):
        raise ValueError("h is not contained in k")
    sub = bool(subideal_chain(k, h))
    idl = is_ideal(k, h)
    report = EquivalenceReport(sub, idl)
    if not report.consistent:
        raise TheoremViolationError(
            f"Cartan eigenspace criterion violated: subideal={sub}, ideal={idl}"
        )
    return report


# ---------------------------------------------------------------------------
# normalizer towers and self-normalization
# ---------------------------------------------------------------------------


def normalizer_tower(g: LieAlgebra, h: Subalgebra) -> list[Subalgebra]:
    """h, N(h), N(N(h)), ... until the tower stabilizes."""
    if h.parent != g:
        raise ValueError("subalgebra of a different algebra")
    tower = [h]
    while True:
        nxt = normalizer(g, tower[-1])
        if nxt.space == tower[-1].space:
            return tower
        tower.append(nxt)
        if len(tower) > g.dim + 1:
            raise InternalCheckError("normalizer tower failed to stabilize")


def is_self_normalizing(g: LieAlgebra, h: Subalgebra) -> bool:
    return normalizer(g, h).space == h.space


@dataclass(frozen=True)
class SelfNormalizingReport:
    hypothesis: str
    normalizer_of_h: Subalgebra
    self_normalizing: bool


SELF_NORM_TAGS = ("perfect", "central_radical", "skew_form", "compact", "compactly_embedded", "cartan")


def check_self_normalizing_theorem(
    g: LieAlgebra,
    h: Subalgebra,
    hypothesis: str,
    form: SymForm | None = None,
    involution: LinMap | None = None,
) -> SelfNormalizingReport:
    """Verify one hypothesis tag, then check N_g(h) is self-normalizing.

    Tags: 'perfect' (h perfect); 'central_radical' (r_h inside z(g));
    'skew_form' (the definite-form hypotheses for the supplied form);
    'compact' (supplied positive-definite form with every ad_x of g skew);
    'compactly_embedded' (same, but only ad_x for x in h);
    'cartan' (h contains an eigenspace of the supplied involution).
    """
    if hypothesis == "perfect":
        if not is_perfect(h):
            raise HypothesisError("h is not perfect")
    elif hypothesis == "central_radical":
        rh = sub_radical(h)
        if not center(g).space.contains(rh):
            raise HypothesisError("radical of h is not inside the center of g")
    elif hypothesis == "skew_form":
        if form is None:
            raise ValueError("skew_form hypothesis needs a form")
        verify_skew_form_hypotheses(g, form, h)
    elif hypothesis == "compact":
        if form is None:
            raise ValueError("compact hypothesis needs a form")
        full_inertia = form.inertia_on()
        if not (full_inertia.is_positive_definite() and full_inertia.dim == g.dim):
            raise HypothesisError("supplied form is not positive definite")
        for i in range(g.dim):
            if not adjoint_is_skew(g, form, g.basis_vector(i)):
                raise HypothesisError("algebra is not compact type for the supplied form")
    elif hypothesis == "compactly_embedded":
        if form is None:
            raise ValueError("compactly_embedded hypothesis needs a form")
        full_inertia = form.inertia_on()
        if not (full_inertia.is_positive_definite() and full_inertia.dim == g.dim):
            raise HypothesisError("supplied form is not positive definite")
        for x in h.basis_vectors():
            if not adjoint_is_skew(g, form, x):
                raise HypothesisError("h is not compactly embedded for the supplied form")
    elif hypothesis == "cartan":
        if involution is None:
            raise ValueError("cartan hypothesis needs an involution")
        decomp = cartan_eigenspaces(g, involution)
        if not (
            h.space.contains(decomp.compact_part.space)
            or h.space.contains(decomp.noncompact_part)
        ):
            raise HypothesisError("h contains neither Cartan eigenspace")
    else:
        raise ValueError(f"unknown hypothesis tag {hypothesis!r}")
    n_h = normalizer(g, h)
    ok = is_self_normalizing(g, n_h)
    if not ok:
        raise TheoremViolationError(
            f"normalizer is not self-normalizing under hypothesis {hypothesis!r}"
        )
    return SelfNormalizingReport(hypothesis, n_h, ok)


# ---------------------------------------------------------------------------
# exhaustive small-dimension oracle
# ---------------------------------------------------------------------------


def _grid_lines(n: int) -> list[Vector]:
    """One representative per {-1,0,1}-direction in Q^n."""
    lines = []
    seen: set[Vector] = set()
    for coords in itertools.product((-1, 0, 1), repeat=n):
        if not any(coords):
            continue
        vec = tuple(Fraction(x) for x in coords)
        first = next(x for x in vec if x)
        if first < 0:
            vec = tuple(-x for x in vec)
        if vec not in seen:
            seen.add(vec)
            lines.append(vec)
    return lines


def enumerate_grid_subalgebras(
    g: LieAlgebra, extra_vectors: list[Vector] | None = None
) -> list[Subalgebra]:
    """All bracket-closed spans of <= 2 grid directions, plus 0 and g itself.

    The grid is every +-1/0 coordinate direction; suitable only for dim <= 3
    where subalgebras relevant to small structure constants are spanned this
    way.  Extra candidate generators may be supplied.
    """
    if g.dim > 3:
        raise ValueError("grid enumeration is limited to dimension <= 3")
    lines = _grid_lines(g.dim)
    if extra_vectors:
        lines = lines + [tuple(v) for v in extra_vectors]
    spaces: set[Subspace] = {Subspace.zero(g.dim), Subspace.full(g.dim)}
    for r in (1, 2):
        for combo in itertools.combinations(lines, r):
            spaces.add(Subspace.span(g.dim, combo))
    out = []
    for space in spaces:
        try:
            out.append(Subalgebra(g, space))
        except ValueError:
            continue
    return out


def subideal_oracle(
    g: LieAlgebra, h: Subalgebra, extra_vectors: list[Vector] | None = None
) -> bool:
    """Chain-existence search over enumerated subalgebras, for dim <= 3.

    Breadth-first over 'is an ideal of' edges from h up to g; independent of
    the closure-series decision procedure.
    """
    candidates = enumerate_grid_subalgebras(g, extra_vectors)
    full = Subspace.full(g.dim)
    frontier = [h]
    seen = {h.space}
    while frontier:
        current = frontier.pop()
        if current.space == full:
            return True
        for cand in candidates:
            if cand.space in seen:
                continue
            if not cand.space.contains(current.space):
                continue
            if cand.space.dim <= current.space.dim:
                continue
            if is_ideal(cand, current):
                seen.add(cand.space)
                frontier.append(cand)
    return False


# ---------------------------------------------------------------------------
# randomized corpus generation
# ---------------------------------------------------------------------------


def random_solvable_algebra(
    rng: random.Random, matrix_size: int = 3, generators: int = 2, entry_bound: int = 2
) -> LieAlgebra:
    """Bracket closure of random upper-triangular matrices.

    Upper-triangular matrices form a solvable matrix Lie algebra, so the
    closure is solvable and Jacobi holds for free; the structure constants
    are read off in the closure's canonical basis.
    """
    n = matrix_size

    def random_upper() -> Mat:
        rows = [
            [
                Fraction(rng.randint(-entry_bound, entry_bound)) if j >= i else Fraction(0)
                for j in range(n)
            ]
            for i in range(n)
        ]
        return Mat(rows, cols=n)

    def flatten(m: Mat) -> Vector:
        return tuple(m.entries[i][j] for i in range(n) for j in range(n))

    def unflatten(v) -> Mat:
        return Mat([list(v[i * n : (i + 1) * n]) for i in range(n)], cols=n)

    mats = [random_upper() for _ in range(generators)]
    space = Subspace.span(n * n, [flatten(m) for m in mats])
    while True:
        basis = [unflatten(row) for row in space.basis.entries]
        products = [
            flatten(a * b - b * a) for a in basis for b in basis
        ]
        grown = subspace_sum(space, Subspace.span(n * n, products))
        if grown.dim == space.dim:
            break
        space = grown
    basis = [unflatten(row) for row in space.basis.entries]
    d = len(basis)
    c = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for a in range(d):
        for b in range(d):
            if a == b:
                continue
            comm = basis[a] * basis[b] - basis[b] * basis[a]
            coords = space.coordinates(flatten(comm))
            if coords is None:
                raise InternalCheckError("matrix closure bracket escaped its own span")
            c[a][b] = list(coords)
    return validate_or_raise(LieAlgebra(c, name=f"solvable(dim {d})"))
