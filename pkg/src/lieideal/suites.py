"""Theorem-verification corpora and the named acceptance suites.

Each suite runs a batch of checks over a deterministic corpus (catalog
algebras, constructed extensions, and seeded random solvable algebras) and
returns one CheckResult per check.  Suites:

  perfect   - perfect subideals are ideals (with chains); constructive
              counterexamples for every non-perfect catalog algebra;
              characteristic-ideal consequences
  complete  - derivation-tower theorem, the bracket identity
              [f, ad_X] = ad_{f(X)}, complete subideals with centerless middle
  radical   - r_h = r_g /\\ h and the three-way radical criterion on a
              randomized corpus of subideal pairs
  forms     - definite-form and Cartan-eigenspace criteria, with
              hypothesis-failure cases reported as skips
  selfnorm  - self-normalizing normalizers under each hypothesis tag
  oracle    - exhaustive small-dimension cross-check of the subideal
              decision, and frozen derivation-algebra dimensions
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import catalog
from .derivations import (
    derivation_algebra,
    derivation_tower,
    holomorph,
    is_characteristic,
    theorem_derived_check,
)
from .exactlin import Mat, Subspace
from .liealg import (
    LieAlgebra,
    LinMap,
    Subalgebra,
    SymForm,
    center,
    direct_sum,
    full_subalgebra,
    generated_subalgebra,
    is_ideal,
    radical,
)
from .transitivity import (
    HypothesisError,
    check_cartan_criterion,
    check_complete_subideal,
    check_perfect_transitivity,
    check_radical_intersection,
    check_self_normalizing_theorem,
    check_skew_form_criterion,
    cartan_eigenspaces,
    counterexample_extension,
    enumerate_grid_subalgebras,
    levi_criterion,
    random_solvable_algebra,
    subideal_chain,
    subideal_oracle,
)

SUITE_NAMES = ("perfect", "complete", "radical", "forms", "selfnorm", "oracle")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    status: str  # pass | fail | hypothesis-not-satisfied | error
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status in ("pass", "hypothesis-not-satisfied")


def _run_check(suite: str, name: str, fn) -> CheckResult:
    try:
        detail = fn()
    except HypothesisError as exc:
        return CheckResult(suite, name, "hypothesis-not-satisfied", str(exc))
    except AssertionError as exc:
        return CheckResult(suite, name, "fail", str(exc))
    except Exception as exc:  # noqa: BLE001 - reported, not raised
        return CheckResult(suite, name, "error", f"{type(exc).__name__}: {exc}")
    return CheckResult(suite, name, "pass", detail or "")


# ---------------------------------------------------------------------------
# corpus construction
# ---------------------------------------------------------------------------


def _basis(g: LieAlgebra) -> list:
    return [g.basis_vector(i) for i in range(g.dim)]


@dataclass(frozen=True)
class ChainInstance:
    """An embedding h <| k <| g with both subalgebras in g's coordinates."""

    label: str
    g: LieAlgebra
    h_sub: Subalgebra
    k_sub: Subalgebra


def perfect_specimens() -> dict[str, LieAlgebra]:
    sl2 = catalog.get("sl2").algebra
    so3 = catalog.get("so3").algebra
    mixed, _, _ = direct_sum(sl2, so3)
    return {
        "sl2": sl2,
        "so3": so3,
        "sl2_rad2": catalog.get("sl2_rad2").algebra,
        "sl2_sum_so3": mixed,
    }


_HOLOMORPH_PARTNERS = ("abelian(1)", "abelian(2)", "aff1", "heisenberg3", "sl2")

_SUM_PARTNERS = (
    ("abelian(1)", "abelian(1)"),
    ("abelian(1)", "aff1"),
    ("abelian(2)", "abelian(1)"),
    ("abelian(2)", "sl2"),
    ("abelian(3)", "aff1"),
    ("aff1", "abelian(1)"),
    ("aff1", "aff1"),
    ("aff1", "so3"),
    ("heisenberg3", "abelian(1)"),
    ("heisenberg3", "aff1"),
    ("sl2", "abelian(1)"),
    ("sl2", "so3"),
    ("so3", "abelian(2)"),
    ("gl2", "abelian(1)"),
    ("sl2_rad2", "aff1"),
)


def chain_instances(h_label: str, h: LieAlgebra) -> list[ChainInstance]:
    """At least twenty embeddings h <| k <| g for a perfect specimen h.

    k is h plus a catalog partner; g is either the holomorph of k or a
    further direct sum.
    """
    out = []
    for pname in _HOLOMORPH_PARTNERS:
        partner = catalog.get(pname).algebra
        k, emb_h, _ = direct_sum(h, partner)
        g, emb_k, _ = holomorph(k)
        h_vecs = [emb_k.apply(emb_h.apply(v)) for v in _basis(h)]
        h_sub = Subalgebra(g, Subspace.span(g.dim, h_vecs))
        k_sub = Subalgebra(g, emb_k.image())
        out.append(ChainInstance(f"{h_label} in H({h_label}+{pname})", g, h_sub, k_sub))
    for p1name, p2name in _SUM_PARTNERS:
        p1 = catalog.get(p1name).algebra
        p2 = catalog.get(p2name).algebra
        k, emb_h, _ = direct_sum(h, p1)
        g, emb_k, _ = direct_sum(k, p2)
        h_vecs = [emb_k.apply(emb_h.apply(v)) for v in _basis(h)]
        h_sub = Subalgebra(g, Subspace.span(g.dim, h_vecs))
        k_sub = Subalgebra(g, emb_k.image())
        out.append(
            ChainInstance(f"{h_label} in ({h_label}+{p1name})+{p2name}", g, h_sub, k_sub)
        )
    return out


NON_PERFECT_NAMES = (
    "abelian(1)",
    "abelian(2)",
    "abelian(3)",
    "abelian(4)",
    "heisenberg3",
    "aff1",
    "upper_triangular(3)",
)


def random_centerless_solvable(rng: random.Random, count: int) -> list[LieAlgebra]:
    """Seeded centerless solvable algebras of dimension <= 6 with small D(g)."""
    found: list[LieAlgebra] = []
    attempts = 0
    while len(found) < count and attempts < 200:
        attempts += 1
        g = random_solvable_algebra(rng, matrix_size=3, generators=2)
        if not (2 <= g.dim <= 6):
            continue
        if center(g).dim != 0:
            continue
        if derivation_algebra(g).dim > 12:
            continue
        found.append(g)
    return found


def radical_corpus(seed: int, min_random: int = 50) -> list[tuple[str, LieAlgebra, Subalgebra]]:
    """(label, g, subideal h) pairs: catalog pairs plus randomized instances."""
    pairs: list[tuple[str, LieAlgebra, Subalgebra]] = []

    def add_if_subideal(label: str, g: LieAlgebra, space: Subspace) -> bool:
        try:
            h = Subalgebra(g, space)
        except ValueError:
            return False
        if not subideal_chain(g, h):
            return False
        pairs.append((label, g, h))
        return True

    for name in catalog.list_names():
        entry = catalog.get(name)
        g = entry.algebra
        full = Subspace.full(g.dim)
        derived = Subspace.span(
            g.dim,
            [g.bracket(x, y) for x in _basis(g) for y in _basis(g)],
        )
        candidates: list[tuple[str, Subspace]] = [
            ("full", full),
            ("derived", derived),
            ("center", center(g).space),
            ("radical", radical(g).space),
        ]
        for tag, space in entry.tagged_subalgebras.items():
            candidates.append((tag, space))
        seen: set[Subspace] = set()
        for tag, space in candidates:
            if space in seen:
                continue
            seen.add(space)
            add_if_subideal(f"{name}:{tag}", g, space)

    rng = random.Random(seed)
    random_count = 0
    guard = 0
    catalog_mixins = ("sl2", "aff1", "so3")
    max_attempts = 20 * max(min_random, 1) + 100
    while random_count < min_random and guard < max_attempts:
        guard += 1
        base = random_solvable_algebra(rng, matrix_size=3, generators=2)
        if base.dim < 1:
            continue
        if rng.random() < 0.4:
            mixin = catalog.get(rng.choice(catalog_mixins)).algebra
            g, emb_base, emb_mix = direct_sum(base, mixin)
            spaces = [
                ("base_factor", emb_base.image()),
                ("mixin_factor", emb_mix.image()),
            ]
        else:
            g, emb_base = base, None
            spaces = []
        full = Subspace.full(g.dim)
        derived = Subspace.span(
            g.dim, [g.bracket(x, y) for x in _basis(g) for y in _basis(g)]
        )
        spaces += [("derived", derived), ("center", center(g).space), ("full", full)]
        coords = [rng.randint(-1, 1) for _ in range(g.dim)]
        if any(coords):
            gen = generated_subalgebra(g, [coords])
            spaces.append(("generated", gen.space))
        seen2: set[Subspace] = set()
        for tag, space in spaces:
            if space in seen2 or space.dim == 0:
                continue
            seen2.add(space)
            if add_if_subideal(f"random{guard}:{tag}", g, space):
                random_count += 1
    if random_count < min_random:
        raise RuntimeError(
            f"random corpus generation stalled: {random_count} < {min_random}"
        )
    return pairs


# ---------------------------------------------------------------------------
# suite: perfect (criteria 1-3)
# ---------------------------------------------------------------------------


def suite_perfect(seed: int = 0) -> list[CheckResult]:
    results = []
    all_instances: list[ChainInstance] = []
    for label, h in perfect_specimens().items():
        instances = chain_instances(label, h)
        all_instances.extend(instances)

        def run(instances=instances, label=label):
            assert len(instances) >= 20, f"only {len(instances)} chains for {label}"
            for inst in instances:
                chain = check_perfect_transitivity(inst.g, inst.h_sub)
                assert is_ideal(inst.g, inst.h_sub), inst.label
                assert chain.verify(), inst.label
            return f"{len(instances)} chains, all ideals"

        results.append(_run_check("perfect", f"forward transitivity [{label}]", run))

    for name in NON_PERFECT_NAMES:

        def run(name=name):
            cert = counterexample_extension(catalog.get(name).algebra)
            assert cert.verify(), "certificate failed re-verification"
            assert cert.chain.verify(), "chain failed re-verification"
            h_space = cert.chain.links[0].space
            assert not h_space.contains_vector(cert.escaping_value)
            return (
                f"ambient dim {cert.ambient.dim}, chain dims {cert.chain.dims()}"
            )

        results.append(_run_check("perfect", f"counterexample [{name}]", run))

    def run_characteristic():
        for inst in all_instances:
            assert is_characteristic(inst.g, inst.h_sub), inst.label
        return f"{len(all_instances)} ambient algebras, derivations preserve h"

    results.append(_run_check("perfect", "characteristic ideals", run_characteristic))

    def run_non_characteristic():
        aff1 = catalog.get("aff1").algebra
        ab1 = catalog.get("abelian(1)").algebra
        k, emb_aff, _ = direct_sum(aff1, ab1)
        h = Subalgebra(k, emb_aff.image())
        assert is_ideal(k, h)
        assert not is_characteristic(k, h), "expected a derivation moving aff1 out"
        return "aff1+abelian(1) has a derivation moving the aff1 factor"

    results.append(
        _run_check("perfect", "non-characteristic witness", run_non_characteristic)
    )
    return results


# ---------------------------------------------------------------------------
# suite: complete (criteria 4-6)
# ---------------------------------------------------------------------------


def tower_corpus(seed: int) -> list[tuple[str, LieAlgebra]]:
    sl2 = catalog.get("sl2").algebra
    aff1 = catalog.get("aff1").algebra
    so3 = catalog.get("so3").algebra
    # almost abelian with distinct weights: centerless, tower gains a stage
    almost_abelian = LieAlgebra.from_brackets(
        3, {(0, 1): {1: 1}, (0, 2): {2: 2}}, name="almost_abelian(1,2)"
    )
    out = [
        ("sl2", sl2),
        ("aff1", aff1),
        ("so3", so3),
        ("sl2_sum_aff1", catalog.get("sl2_sum_aff1").algebra),
        ("sl2_rad2", catalog.get("sl2_rad2").algebra),
        ("almost_abelian(1,2)", almost_abelian),
    ]
    rng = random.Random(seed)
    for idx, g in enumerate(random_centerless_solvable(rng, 2)):
        out.append((f"random_solvable_{idx}(dim {g.dim})", g))
    return out


def suite_complete(seed: int = 0) -> list[CheckResult]:
    results = []
    corpus = tower_corpus(seed)

    for label, g in corpus:

        def run(g=g):
            check = theorem_derived_check(g)
            assert check.consistent, (
                f"tower theorem sides disagree: complete={check.lhs_complete}, "
                f"ideal={check.rhs_ideal}"
            )
            tower = derivation_tower(g)
            assert not tower.exceeded_budget, "tower did not stabilize in budget"
            return (
                f"complete(D)={check.lhs_complete}, stabilized at stage "
                f"{tower.stabilized_at}, dims {tuple(s.dim for s in tower.stages)}"
            )

        results.append(_run_check("complete", f"derivation tower [{label}]", run))

    lemma_algebras = [(name, catalog.get(name).algebra) for name in catalog.list_names()]
    lemma_algebras += corpus

    def run_lemma():
        count = 0
        for label, g in lemma_algebras:
            da = derivation_algebra(g)
            ads = [g.adjoint_matrix(v).matrix for v in _basis(g)]
            for f in da.realization:
                fm = f.matrix
                for i, ad in enumerate(ads):
                    lhs = fm * ad - ad * fm
                    rhs = g.adjoint_matrix(fm.column(i)).matrix
                    assert lhs == rhs, f"[f, ad_X] != ad_f(X) on {label}"
                    count += 1
        return f"{count} matrix identities verified"

    results.append(_run_check("complete", "adjoint bracket identity", run_lemma))

    complete_h = ("aff1", "sl2", "so3")
    centerless_partners = (
        "aff1",
        "sl2",
        "so3",
        "sl2_rad2",
        "sl2_sum_aff1",
        "so3_sum_so3",
    )

    def run_complete_subideal():
        count = 0
        for h_name in complete_h:
            h = catalog.get(h_name).algebra
            for p_name in centerless_partners:
                partner = catalog.get(p_name).algebra
                k, emb_h, _ = direct_sum(h, partner)
                g, emb_k, _ = holomorph(k)
                h_sub = Subalgebra(
                    g,
                    Subspace.span(
                        g.dim, [emb_k.apply(emb_h.apply(v)) for v in _basis(h)]
                    ),
                )
                k_sub = Subalgebra(g, emb_k.image())
                report = check_complete_subideal(h_sub, k_sub, g)
                assert report.ideal_in_g and report.decomposition_ok
                assert report.centralizer_in_k.dim == k_sub.dim - h_sub.dim
                count += 1
        assert count >= 10
        return f"{count} instances: ideal and k = h (+) c_k(h) verified"

    results.append(_run_check("complete", "complete subideals", run_complete_subideal))
    return results


# ---------------------------------------------------------------------------
# suite: radical (criteria 7-8)
# ---------------------------------------------------------------------------


def suite_radical(seed: int = 0, min_random: int = 50) -> list[CheckResult]:
    results = []
    corpus = radical_corpus(seed, min_random)

    def run_intersection():
        for label, g, h in corpus:
            report = check_radical_intersection(g, h)
            assert report.ok, label
        return f"{len(corpus)} subideal pairs (seed {seed})"

    results.append(_run_check("radical", "radical intersection identity", run_intersection))

    def run_levi():
        for label, g, h in corpus:
            report = levi_criterion(g, h)
            assert report.agree, label
        return f"{len(corpus)} subideal pairs, three-way agreement"

    results.append(_run_check("radical", "radical ideal criteria", run_levi))
    return results


# ---------------------------------------------------------------------------
# suite: forms (criteria 9-10)
# ---------------------------------------------------------------------------


def _form_cases() -> list[tuple[str, LieAlgebra, SymForm, Subspace, Subspace, bool]]:
    """(label, g, form, h_space, k_space, hypotheses_should_hold)."""
    cases = []
    so3_entry = catalog.get("so3")
    so3 = so3_entry.algebra
    b3 = so3_entry.tagged_forms["minus_killing"]
    full3 = Subspace.full(3)
    axis = so3_entry.tagged_subalgebras["axis"]
    cases.append(("so3 axis in so3", so3, b3, axis, full3, True))
    cases.append(("so3 full in so3", so3, b3, full3, full3, True))

    so6 = catalog.get("so3_sum_so3").algebra
    b6 = SymForm(so6, Mat.identity(6).scale(2))
    first = Subspace.span(6, [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]])
    diag = Subspace.span(
        6, [[1, 0, 0, 1, 0, 0], [0, 1, 0, 0, 1, 0], [0, 0, 1, 0, 0, 1]]
    )
    axis6 = Subspace.span(6, [[0, 0, 1, 0, 0, 0]])
    full6 = Subspace.full(6)
    cases.append(("so3 factor in so3+so3", so6, b6, first, full6, True))
    cases.append(("diagonal so3 in so3+so3", so6, b6, diag, full6, True))
    cases.append(("axis in so3+so3", so6, b6, axis6, full6, True))
    cases.append(("axis in so3 factor", so6, b6, axis6, first, True))

    sl2_entry = catalog.get("sl2")
    sl2 = sl2_entry.algebra
    killing = sl2_entry.tagged_forms["killing"]
    compact_form = sl2_entry.tagged_forms["compact_embedding"]
    cartan = sl2_entry.tagged_subalgebras["cartan"]
    compact_line = sl2_entry.tagged_subalgebras["compact_line"]
    full_sl2 = Subspace.full(3)
    cases.append(("compact line in sl2", sl2, compact_form, compact_line, full_sl2, True))
    cases.append(("sl2 in sl2 (killing)", sl2, killing, full_sl2, full_sl2, True))
    # Killing on the Cartan line: complement has inertia (1,1,0): must skip
    cases.append(("cartan line in sl2 (killing)", sl2, killing, cartan, full_sl2, False))
    # the compact-embedding form does not make ad_H skew: must skip
    cases.append(("sl2 in sl2 (compact form)", sl2, compact_form, full_sl2, full_sl2, False))
    return cases


def suite_forms(seed: int = 0) -> list[CheckResult]:
    results = []

    for label, g, form, h_space, k_space, should_hold in _form_cases():

        def run(g=g, form=form, h_space=h_space, k_space=k_space, should_hold=should_hold):
            h = Subalgebra(g, h_space)
            k = Subalgebra(g, k_space)
            try:
                report = check_skew_form_criterion(g, form, h, k)
            except HypothesisError:
                assert not should_hold, "hypotheses unexpectedly failed"
                raise
            assert should_hold, "hypotheses unexpectedly verified"
            assert report.consistent
            return f"subideal={report.subideal}, ideal={report.ideal}"

        results.append(_run_check("forms", f"definite form [{label}]", run))

    def run_cartan_sl2():
        entry = catalog.get("sl2")
        g = entry.algebra
        theta = entry.tagged_maps["cartan_involution"]
        decomp = cartan_eigenspaces(g, theta)
        assert decomp.compact_part.space == Subspace.span(3, [[0, 1, -1]])
        assert decomp.noncompact_part == Subspace.span(3, [[1, 0, 0], [0, 1, 1]])
        killing = entry.tagged_forms["killing"]
        on_u = killing.inertia_on(decomp.compact_part.space)
        on_p = killing.inertia_on(decomp.noncompact_part)
        assert (on_u.n_plus, on_u.n_minus, on_u.n_zero) == (0, 1, 0)
        assert (on_p.n_plus, on_p.n_minus, on_p.n_zero) == (2, 0, 0)
        full = full_subalgebra(g)
        rep = check_cartan_criterion(g, theta, decomp.compact_part, full)
        assert rep.consistent and not rep.ideal
        rep2 = check_cartan_criterion(g, theta, full, full)
        assert rep2.consistent and rep2.ideal
        return "u = span(E-F), p = span(H, E+F), inertias (0,1,0)/(2,0,0)"

    results.append(_run_check("forms", "cartan eigenspaces [sl2]", run_cartan_sl2))

    def run_cartan_identity_rejected():
        g = catalog.get("sl2").algebra
        ident = LinMap(g, g, Mat.identity(3))
        try:
            cartan_eigenspaces(g, ident)
        except HypothesisError:
            return "identity on sl2 rejected: twisted form indefinite"
        raise AssertionError("identity involution on sl2 was not rejected")

    results.append(
        _run_check("forms", "cartan involution rejection [sl2]", run_cartan_identity_rejected)
    )

    def run_cartan_so3():
        entry = catalog.get("so3")
        g = entry.algebra
        theta = entry.tagged_maps["cartan_involution"]
        decomp = cartan_eigenspaces(g, theta)
        assert decomp.compact_part.dim == 3 and decomp.noncompact_part.dim == 0
        return "compact form: u = so3, p = 0"

    results.append(_run_check("forms", "cartan eigenspaces [so3]", run_cartan_so3))

    def run_cartan_mixed():
        sl2 = catalog.get("sl2").algebra
        so3 = catalog.get("so3").algebra
        g, e1, e2 = direct_sum(sl2, so3)
        th1 = catalog.get("sl2").tagged_maps["cartan_involution"].matrix
        rows = [[Fraction(0)] * 6 for _ in range(6)]
        for i in range(3):
            for j in range(3):
                rows[i][j] = th1.entries[i][j]
            rows[3 + i][3 + i] = Fraction(1)
        theta = LinMap(g, g, Mat(rows, cols=6))
        h_space = Subspace.span(
            6, [[0, 1, -1, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]]
        )
        h = Subalgebra(g, h_space)
        rep = check_cartan_criterion(g, theta, h, full_subalgebra(g))
        assert rep.consistent and not rep.subideal
        return "u-containing subalgebra of sl2+so3: neither subideal nor ideal"

    results.append(_run_check("forms", "cartan criterion [sl2+so3]", run_cartan_mixed))
    return results


# ---------------------------------------------------------------------------
# suite: selfnorm (criterion 11)
# ---------------------------------------------------------------------------


def suite_selfnorm(seed: int = 0) -> list[CheckResult]:
    results = []
    sl2_entry = catalog.get("sl2")
    sl2 = sl2_entry.algebra
    gl2_entry = catalog.get("gl2")
    heis_entry = catalog.get("heisenberg3")
    heis = heis_entry.algebra
    so3_entry = catalog.get("so3")
    so3 = so3_entry.algebra
    sl2_ab1, e_sl2, e_ab1 = direct_sum(sl2, catalog.get("abelian(1)").algebra)

    cases: list[tuple[str, dict, bool]] = [
        (
            "perfect: sl2 in gl2",
            dict(
                g=gl2_entry.algebra,
                h=Subalgebra(gl2_entry.algebra, gl2_entry.tagged_subalgebras["sl2"]),
                hypothesis="perfect",
            ),
            True,
        ),
        (
            "perfect: sl2 factor in sl2+abelian(1)",
            dict(
                g=sl2_ab1,
                h=Subalgebra(sl2_ab1, e_sl2.image()),
                hypothesis="perfect",
            ),
            True,
        ),
        (
            "central radical: center of heisenberg3",
            dict(
                g=heis,
                h=Subalgebra(heis, heis_entry.tagged_subalgebras["center"]),
                hypothesis="central_radical",
            ),
            True,
        ),
        (
            "central radical: abelian factor of sl2+abelian(1)",
            dict(
                g=sl2_ab1,
                h=Subalgebra(sl2_ab1, e_ab1.image()),
                hypothesis="central_radical",
            ),
            True,
        ),
        (
            "central radical: xz plane of heisenberg3 (expected skip)",
            dict(
                g=heis,
                h=Subalgebra(heis, heis_entry.tagged_subalgebras["xz_plane"]),
                hypothesis="central_radical",
            ),
            False,
        ),
        (
            "skew form: axis of so3",
            dict(
                g=so3,
                h=Subalgebra(so3, so3_entry.tagged_subalgebras["axis"]),
                hypothesis="skew_form",
                form=so3_entry.tagged_forms["minus_killing"],
            ),
            True,
        ),
        (
            "compact: axis of so3",
            dict(
                g=so3,
                h=Subalgebra(so3, so3_entry.tagged_subalgebras["axis"]),
                hypothesis="compact",
                form=so3_entry.tagged_forms["minus_killing"],
            ),
            True,
        ),
        (
            "compactly embedded: compact line of sl2",
            dict(
                g=sl2,
                h=Subalgebra(sl2, sl2_entry.tagged_subalgebras["compact_line"]),
                hypothesis="compactly_embedded",
                form=sl2_entry.tagged_forms["compact_embedding"],
            ),
            True,
        ),
        (
            "cartan: compact line of sl2",
            dict(
                g=sl2,
                h=Subalgebra(sl2, sl2_entry.tagged_subalgebras["compact_line"]),
                hypothesis="cartan",
                involution=sl2_entry.tagged_maps["cartan_involution"],
            ),
            True,
        ),
    ]

    verified_tags = set()
    for label, kwargs, should_hold in cases:

        def run(kwargs=kwargs, should_hold=should_hold):
            try:
                report = check_self_normalizing_theorem(**kwargs)
            except HypothesisError:
                assert not should_hold, "hypothesis unexpectedly failed"
                raise
            assert should_hold, "hypothesis unexpectedly verified"
            assert report.self_normalizing
            verified_tags.add(kwargs["hypothesis"])
            return (
                f"N has dim {report.normalizer_of_h.dim}; self-normalizing"
            )

        results.append(_run_check("selfnorm", f"self-normalizing [{label}]", run))

    def run_coverage():
        needed = {"perfect", "central_radical", "compactly_embedded", "cartan"}
        missing = needed - verified_tags
        assert not missing, f"no verifying instance for tags {sorted(missing)}"
        return f"verified tags: {sorted(verified_tags)}"

    results.append(_run_check("selfnorm", "hypothesis tag coverage", run_coverage))
    return results


# ---------------------------------------------------------------------------
# suite: oracle (criterion 12)
# ---------------------------------------------------------------------------


def suite_oracle(seed: int = 0) -> list[CheckResult]:
    results = []
    algebras: list[tuple[str, LieAlgebra]] = [
        (name, catalog.get(name).algebra)
        for name in ("abelian(1)", "abelian(2)", "abelian(3)", "heisenberg3", "aff1", "sl2", "so3")
    ]
    rng = random.Random(seed)
    added = 0
    guard = 0
    while added < 3 and guard < 100:
        guard += 1
        g = random_solvable_algebra(rng, matrix_size=3, generators=2)
        if 1 <= g.dim <= 3:
            algebras.append((f"random_solvable_{added}(dim {g.dim})", g))
            added += 1

    for label, g in algebras:

        def run(g=g):
            count = 0
            for h in enumerate_grid_subalgebras(g):
                verdict = subideal_chain(g, h)
                extra = []
                if verdict:
                    for link in verdict.chain.links:
                        extra.extend(link.space.basis.entries)
                oracle = subideal_oracle(g, h, extra)
                assert bool(verdict) == oracle, (
                    f"verdict {bool(verdict)} != oracle {oracle} at dim {h.dim}"
                )
                count += 1
            return f"{count} subalgebras, verdicts agree"

        results.append(_run_check("oracle", f"subideal oracle [{label}]", run))

    def run_derivation_dims():
        expected = {
            "abelian(1)": 1,
            "abelian(2)": 4,
            "abelian(3)": 9,
            "abelian(4)": 16,
            "heisenberg3": 6,
            "sl2": 3,
        }
        for name, dim in expected.items():
            da = derivation_algebra(catalog.get(name).algebra)
            assert da.dim == dim, f"dim D({name}) = {da.dim}, expected {dim}"
        return f"{len(expected)} frozen derivation dimensions match"

    results.append(_run_check("oracle", "derivation dimensions", run_derivation_dims))
    return results


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------


_SUITE_FUNCS = {
    "perfect": lambda seed, min_random: suite_perfect(seed),
    "complete": lambda seed, min_random: suite_complete(seed),
    "radical": lambda seed, min_random: suite_radical(seed, min_random),
    "forms": lambda seed, min_random: suite_forms(seed),
    "selfnorm": lambda seed, min_random: suite_selfnorm(seed),
    "oracle": lambda seed, min_random: suite_oracle(seed),
}


def run_suites(
    names: list[str] | tuple[str, ...] = SUITE_NAMES,
    seed: int = 0,
    min_random: int = 50,
) -> list[CheckResult]:
    results = []
    for name in names:
        if name not in _SUITE_FUNCS:
            raise ValueError(f"unknown suite {name!r}")
        results.extend(_SUITE_FUNCS[name](seed, min_random))
    return results
