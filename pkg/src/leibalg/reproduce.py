"""Batch verification driver: every checkable claim as a report entry.

Each claim is a named, deterministic check (given the field list and the
seed); running the suite produces one report line per claim plus a summary.
Closed-field statements are exercised through exact finite-field proxies:
the square / non-square conditions governing the families are natural over
GF(p), and the classification is field dependent by design.

Claims may be executed concurrently by callers; report lines are emitted
in fixed claim-id order regardless of completion order.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from . import catalog, constraints, maximal, randomgen, series
from .core import LeibnizAlgebra
from .errors import ConstraintViolated, LeibalgError
from .fields import GF, QQ, Field
from .formats import parse_relations
from .linalg import Subspace


class ClaimFailed(LeibalgError):
    """A verification claim did not hold; the message is the evidence."""


class ClaimSkipped(LeibalgError):
    """A claim does not apply in this configuration; the message says why."""


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    run: Callable[[], str]


@dataclass(frozen=True)
class ReportEntry:
    claim_id: str
    description: str
    verdict: str  # "pass" | "fail" | "skipped"
    evidence: str
    elapsed_ms: int


def run_claims(claims: list[Claim]) -> list[ReportEntry]:
    entries = []
    for claim in claims:
        start = time.perf_counter()
        try:
            evidence = claim.run()
            verdict = "pass"
        except ClaimSkipped as exc:
            verdict, evidence = "skipped", str(exc)
        except LeibalgError as exc:
            verdict, evidence = "fail", f"{type(exc).__name__}: {exc}"
        except AssertionError as exc:
            verdict, evidence = "fail", f"assertion failed: {exc}"
        elapsed_ms = int((time.perf_counter() - start) * 1000)
        entries.append(
            ReportEntry(claim.claim_id, claim.description, verdict, evidence, elapsed_ms)
        )
    return entries


def render_report(entries: list[ReportEntry], include_timing: bool = True) -> str:
    lines = []
    for e in entries:
        timing = f" ({e.elapsed_ms} ms)" if include_timing else ""
        lines.append(f"{e.verdict.upper():7s} {e.claim_id}{timing}: {e.evidence}")
    passed = sum(1 for e in entries if e.verdict == "pass")
    failed = sum(1 for e in entries if e.verdict == "fail")
    skipped = sum(1 for e in entries if e.verdict == "skipped")
    lines.append(f"summary: {passed} passed, {failed} failed, {skipped} skipped")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# claim helpers
# ---------------------------------------------------------------------------

def reference_cyclic_plane(field: Field) -> LeibnizAlgebra:
    """The three-dimensional algebra with the single product r*r = s."""
    return LeibnizAlgebra.from_table(3, field, [(1, 1, {2: 1})], labels=("r", "s", "t"))


def build_table8(field: Field, c, g, f, rhat, shat) -> LeibnizAlgebra:
    """The row/column-swapped twin of the A1 six-dimensional family.

    Closure: dhat = 0, gamma = f, d = 2f, fhat = -3f, subject to
    shat*g = rhat*fhat and -f != fhat.
    """
    c, g, f = field(c), field(g), field(f)
    rhat, shat = field(rhat), field(shat)
    gamma = f
    d = 2 * f
    return LeibnizAlgebra.from_table(
        6,
        field,
        [
            (1, 2, {3: 1}),
            (2, 1, {3: -1}),
            (1, 3, {4: rhat.inv()}),
            (3, 1, {4: -rhat.inv()}),
            (2, 3, {5: shat.inv()}),
            (3, 2, {5: -shat.inv()}),
            (3, 3, {6: gamma}),
            (1, 4, {6: rhat * c}),
            (4, 1, {6: -(rhat * c)}),
            (1, 5, {6: shat * d}),
            (2, 4, {6: rhat * f}),
            (4, 2, {6: shat * g}),
            (2, 5, {6: shat * g}),
            (5, 2, {6: -(shat * g)}),
        ],
        labels=("t", "u", "w", "rx", "sy", "z"),
    )


def forced_cc1_table(field: Field, tau, lam, eps) -> LeibnizAlgebra:
    """The coclass-one table built raw, bypassing catalog constraints."""
    return LeibnizAlgebra.from_table(
        3,
        field,
        [
            (1, 1, {3: 1}),
            (2, 2, {3: field(tau)}),
            (1, 2, {3: field(lam)}),
            (2, 1, {3: field(eps)}),
        ],
        labels=("x", "y", "z"),
    )


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ClaimFailed(message)


def _span_of_labels(algebra: LeibnizAlgebra, *indices: int) -> Subspace:
    return algebra.subspace([algebra.basis_vector(i) for i in indices])


def enumerate_subspaces(space: Subspace, min_dim: int, cap: int = 200) -> list[Subspace]:
    """All subspaces of a given subspace with dim >= min_dim (capped count).

    Grown breadth-first by extending known subspaces with ambient vectors of
    the input space; deterministic order.
    """
    field = space.field
    n = space.ambient_dim
    vectors = _all_vectors_of(space)
    levels = [[Subspace.zero(field, n)]]
    seen = {levels[0][0]}
    out = []
    while levels[-1]:
        nxt = []
        for sub in levels[-1]:
            for v in vectors:
                if sub.contains(v):
                    continue
                grown = sub.sum_with(Subspace.span(field, n, [v]))
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
                    if grown.dim >= min_dim:
                        out.append(grown)
                    if len(out) >= cap:
                        return out
        levels.append(nxt)
    return out


def _all_vectors_of(space: Subspace) -> list:
    import itertools

    field = space.field
    p = field.modulus
    out = []
    for combo in itertools.product(range(p), repeat=space.dim):
        if any(combo):
            out.append(space.linear_combination([field(c) for c in combo]))
    return out


def run_structural_suite(field: Field, count: int, max_dim: int, seed: int) -> str:
    """Randomized structural property suite on seeded nilpotent towers.

    Checks, per algebra: equal strict-step counts of the two central series;
    the derived subalgebra equals both the Frattini shortcut and the
    intersection of maximal subalgebras; cyclicity iff the derived
    subalgebra has codimension one; under the series-profile property the
    next-to-last upper term equals the Frattini subalgebra; central ideals
    of dimension > 1 drop the coclass; codimension-one centers split off a
    two-dimensional ideal.
    """
    rng = random.Random(seed)
    splits = 0
    central_ideals = 0
    p2_holds = 0
    for _ in range(count):
        dim = rng.randrange(2, max_dim + 1)
        algebra = randomgen.random_nilpotent_algebra(rng, field, dim)
        _require(not algebra.check_leibniz(), "random tower violated the identity")
        prof = series.nilpotency_data(algebra)
        _require(prof.nilpotent, "random tower must be nilpotent")
        _require(
            len(prof.lower_dims) == len(prof.upper_dims),
            f"series step counts differ: {prof.lower_dims} vs {prof.upper_dims}",
        )
        derived = algebra.derived()
        _require(series.frattini(algebra) == derived, "frattini shortcut mismatch")
        _require(
            maximal.frattini_by_intersection(algebra) == derived,
            "intersection of maximals differs from the derived subalgebra",
        )
        cyclic, witness = series.is_cyclic(algebra)
        _require(
            cyclic == (derived.dim == algebra.dim - 1),
            "cyclicity must match codimension-one derived subalgebra",
        )
        if cyclic and algebra.dim > 0:
            _require(witness is not None, "cyclic algebras carry a witness")
        p2, _ = maximal.check_p2(algebra)
        if p2 and prof.cls is not None and prof.cls >= 1:
            p2_holds += 1
            upper = series.upper_central_series(algebra)
            z_prev = upper[prof.cls - 1] if prof.cls - 1 < len(upper) else upper[-1]
            _require(
                z_prev == series.frattini(algebra),
                "under the series-profile property the next-to-last upper "
                "term must equal the Frattini subalgebra",
            )
        center = algebra.center()
        for ideal in enumerate_subspaces(center, 2):
            central_ideals += 1
            q = algebra.quotient(ideal).algebra
            qprof = series.nilpotency_data(q)
            _require(
                qprof.coclass is not None and prof.coclass is not None,
                "quotients of nilpotent algebras are nilpotent",
            )
            _require(
                qprof.coclass <= prof.coclass,
                "coclass may not grow under quotients",
            )
            _require(
                qprof.coclass <= prof.coclass - 1,
                f"central ideal of dim {ideal.dim} must drop the coclass",
            )
        if center.dim == algebra.dim - 1:
            i_space, j_space = algebra.split_codim1_center()
            _require(i_space.dim == 2, "split part must be two-dimensional")
            _require(
                i_space.sum_with(j_space).dim == algebra.dim,
                "split parts must fill the algebra",
            )
            splits += 1
    return (
        f"{count} towers over {field}: series step counts equal, "
        f"frattini = derived = intersection of maximals, cyclicity matches "
        f"codim-1 derived; {p2_holds} with the series-profile property had "
        f"next-to-last upper term = frattini; {central_ideals} central ideals "
        f"dropped the coclass; {splits} codim-1-center splits verified"
    )


# ---------------------------------------------------------------------------
# the claim suite
# ---------------------------------------------------------------------------

def build_claims(field_primes: list[int], seed: int) -> list[Claim]:
    claims: list[Claim] = []
    fields = [GF(p) for p in field_primes]

    def add(claim_id: str, description: str, fn: Callable[[], str]) -> None:
        claims.append(Claim(claim_id, description, fn))

    # 1. identity suite over every requested field
    for entry in catalog.list_catalog():
        for field in fields:
            add(
                f"identity.{entry.name}@{field}",
                f"{entry.name} instantiates over {field} and satisfies the "
                "defining identity",
                _identity_claim(entry.name, field),
            )

    # 2. the cyclic four-dimensional example
    for field in fields:
        add(
            f"example4.structure@{field}",
            "cyclic example: center span{x4}, second center span{x3,x4}, "
            "class 4, coclass 0, a single maximal subalgebra",
            _example4_claim(field),
        )

    # 3. coclass-one positive direction
    add(
        "cc1.p1@GF(3)",
        "coclass-one family with non-square discriminant has P1 over GF(3)",
        _cc1_positive_claim(GF(3), tau=1, lam=0, eps=0),
    )
    add(
        "cc1.p1@GF(5)",
        "coclass-one family with non-square discriminant has P1 over GF(5)",
        _cc1_positive_claim(GF(5), tau=1, lam=1, eps=0),
    )

    # 4. coclass-one negative direction
    add(
        "cc1.reject@GF(5)",
        "square discriminant parameters are rejected by validation",
        _cc1_reject_claim,
    )
    add(
        "cc1.forced@GF(5)",
        "force-built square-discriminant table fails P1 with a concrete pair",
        _cc1_forced_claim,
    )

    # 5. coclass-two, dimension four
    for p in (3, 5):
        field = GF(p)
        add(
            f"cc2dim4.cc2_split4@{field}",
            "split coclass-two algebra has P1 and maximal normal form r*r = s",
            _cc2dim4_claim(field, "cc2_split4", {}),
        )
        for alpha in (0, 1, 2):
            if (alpha - (p - 1)) % p == 0:
                continue  # alpha = -1 in this field
            add(
                f"cc2dim4.A18(alpha={alpha})@{field}",
                "four-dimensional non-split family has P1 and maximal normal "
                "form r*r = s",
                _cc2dim4_claim(field, "A18", {"alpha": alpha}),
            )
        add(
            f"cc2dim4.A19@{field}",
            "four-dimensional non-split algebra has P1 and maximal normal "
            "form r*r = s",
            _cc2dim4_claim(field, "A19", {}),
        )

    # 6. coclass-two, dimension six
    add(
        "cc2dim6.A1@GF(5)",
        "six-dimensional family: P1, coclass 2, second center of dim 3",
        _cc2dim6_claim(GF(5), "A1_6dim"),
    )
    add(
        "cc2dim6.A1@GF(7)",
        "six-dimensional family: P1, coclass 2, second center of dim 3",
        _cc2dim6_claim(GF(7), "A1_6dim"),
    )
    add(
        "cc2dim6.A3@GF(5)",
        "six-dimensional skew family: P1, coclass 2, second center of dim 3",
        _cc2dim6_claim(GF(5), "A3_6dim"),
    )
    add(
        "cc2dim6.table8@GF(5)",
        "the row/column-swapped twin table is isomorphic to the A1 family",
        _table8_claim,
    )

    # 7. counterexamples
    add(
        "counterexample.p2.cex_fourdim_A1@GF(3)",
        "four-dimensional counterexample fails the series-profile property "
        "with an abelian/non-abelian witness pair",
        _cex_p2_claim,
    )
    add(
        "counterexample.p1.cex_A8@GF(3)",
        "five-dimensional counterexample fails the isomorphism property; "
        "the witness pair has square-ideal dims 1 vs 0",
        _cex_p1_claim,
    )

    # 8. constraint derivations
    add(
        "relations.table6",
        "sampling confirms the three closure relations of the generic "
        "six-dimensional table, both directions",
        _relations_table6_claim(seed),
    )
    add(
        "relations.table1",
        "sampling confirms bhat = -b, chat = -c, gamma = 0 for the "
        "four-dimensional symbolic table, both directions",
        _relations_table1_claim(seed),
    )

    # 9. randomized structural suite
    add(
        "structural.random@GF(2)",
        "randomized structural property suite over GF(2)",
        lambda: run_structural_suite(GF(2), count=100, max_dim=5, seed=seed),
    )
    add(
        "structural.random@GF(3)",
        "randomized structural property suite over GF(3)",
        lambda: run_structural_suite(GF(3), count=100, max_dim=5, seed=seed + 1),
    )

    # 10. field dependence
    add(
        "field_dependence.holmes_iii",
        "the non-square family instantiates over GF(5) but is rejected for "
        "every rational parameter whose negation is a square",
        _holmes_field_dependence_claim,
    )
    return claims


def _identity_claim(name: str, field: Field):
    def run() -> str:
        params = catalog.sample_params(name, field)
        if params is None:
            raise ClaimSkipped(f"constraints unsatisfiable over {field}")
        algebra = catalog.instantiate(name, field, params)
        _require(not algebra.check_leibniz(), "identity residuals must be empty")
        shown = {k: str(v) for k, v in sorted(params.items())}
        return f"instantiated with {shown}; all identity residuals vanish"

    return run


def _example4_claim(field: Field):
    def run() -> str:
        algebra = catalog.instantiate("cyclic_example4", field, {})
        _require(algebra.center() == _span_of_labels(algebra, 3), "center must be span{x4}")
        upper = series.upper_central_series(algebra)
        _require(upper[2] == _span_of_labels(algebra, 2, 3), "second center must be span{x3,x4}")
        prof = series.nilpotency_data(algebra)
        _require(prof.cls == 4 and prof.coclass == 0, f"class/coclass {prof.cls}/{prof.coclass}")
        maxes = maximal.enumerate_maximal(algebra)
        _require(len(maxes) == 1, f"expected a single maximal subalgebra, got {len(maxes)}")
        ok, _ = maximal.check_p1(algebra)
        _require(ok, "P1 must hold trivially")
        return "center, second center, class 4, coclass 0, one maximal subalgebra"

    return run


def _cc1_positive_claim(field: Field, tau: int, lam: int, eps: int):
    def run() -> str:
        params = {"tau": tau, "lambda": lam, "epsilon": eps}
        algebra = catalog.instantiate("cc1_case2", field, params)
        p = field.modulus
        maxes = maximal.enumerate_maximal(algebra)
        expected = (p * p - 1) // (p - 1)
        _require(len(maxes) == expected, f"{len(maxes)} maximals, expected {expected}")
        ok, witness = maximal.check_p1(algebra)
        _require(ok, f"P1 failed: {witness}")
        disc = (field(lam) + field(eps)) ** 2 - 4 * field(tau)
        return (
            f"discriminant {disc} is a non-square; all {expected} maximal "
            "subalgebras pairwise isomorphic"
        )

    return run


def _cc1_reject_claim() -> str:
    reports = catalog.validate_params(
        "cc1_case2", GF(5), {"tau": 1, "lambda": 1, "epsilon": 1}
    )
    bad = [r for r in reports if not r.ok]
    _require(
        any(r.name == "discriminant_nonsquare" for r in bad),
        "square discriminant must be reported",
    )
    try:
        catalog.instantiate("cc1_case2", GF(5), {"tau": 1, "lambda": 1, "epsilon": 1})
    except ConstraintViolated as exc:
        return f"rejected as expected: {exc}"
    raise ClaimFailed("instantiation must reject a square discriminant")


def _cc1_forced_claim() -> str:
    algebra = forced_cc1_table(GF(5), tau=1, lam=1, eps=1)
    _require(not algebra.check_leibniz(), "the forced table is still an algebra")
    ok, witness = maximal.check_p1(algebra)
    _require(not ok, "P1 must fail for a square discriminant")
    assert witness is not None
    return (
        f"non-isomorphic pair: tags {witness.a.hyperplane_tag} vs "
        f"{witness.b.hyperplane_tag} ({witness.detail})"
    )


def _cc2dim4_claim(field: Field, name: str, params: dict):
    def run() -> str:
        algebra = catalog.instantiate(name, field, params)
        prof = series.nilpotency_data(algebra)
        _require(prof.coclass == 2, f"coclass {prof.coclass}, expected 2")
        ok, witness = maximal.check_p1(algebra)
        _require(ok, f"P1 failed: {witness}")
        ref = reference_cyclic_plane(field)
        maxes = maximal.enumerate_maximal(algebra)
        for m in maxes:
            verdict = maximal.is_isomorphic(m.induced, ref)
            _require(
                verdict.status == "yes",
                f"maximal {m.hyperplane_tag} not isomorphic to the r*r = s form",
            )
        return (
            f"coclass 2, P1 holds, all {len(maxes)} maximal subalgebras "
            "isomorphic to the reference r*r = s algebra"
        )

    return run


def _cc2dim6_claim(field: Field, name: str):
    def run() -> str:
        params = catalog.sample_params(name, field)
        if params is None:
            raise ClaimSkipped(f"constraints unsatisfiable over {field}")
        algebra = catalog.instantiate(name, field, params)
        prof = series.nilpotency_data(algebra)
        _require(prof.coclass == 2, f"coclass {prof.coclass}, expected 2")
        upper = series.upper_central_series(algebra)
        _require(upper[2].dim == 3, f"second center dim {upper[2].dim}, expected 3")
        ok, witness = maximal.check_p1(algebra)
        _require(ok, f"P1 failed: {witness}")
        maxes = maximal.enumerate_maximal(algebra)
        return f"coclass 2, dim Z2 = 3, P1 over {len(maxes)} maximal subalgebras"

    return run


def _table8_claim() -> str:
    field = GF(5)
    t8 = build_table8(field, c=1, g=1, f=1, rhat=1, shat=2)
    _require(not t8.check_leibniz(), "the twin table satisfies the identity")
    a1 = catalog.instantiate(
        "A1_6dim", field, {"c": -1, "g": -1, "d": -1, "shat": 1, "rhat": 2}
    )
    verdict = maximal.is_isomorphic(t8, a1)
    _require(verdict.status == "yes", f"expected an isomorphism, got {verdict.status}")
    return "explicit isomorphism found between the twin table and the A1 family"


def _cex_p2_claim() -> str:
    algebra = catalog.instantiate("cex_fourdim_A1", GF(3), {})
    ok, witness = maximal.check_p2(algebra)
    _require(not ok, "the counterexample must fail the series-profile property")
    assert witness is not None
    abelian_flags = {
        witness.a.hyperplane_tag: witness.a.induced.derived().is_zero(),
        witness.b.hyperplane_tag: witness.b.induced.derived().is_zero(),
    }
    _require(
        sorted(abelian_flags.values()) == [False, True],
        f"witness pair must be one abelian and one non-abelian: {abelian_flags}",
    )
    return f"witness pair {sorted(abelian_flags.items())}; {witness.detail}"


def _cex_p1_claim() -> str:
    algebra = catalog.instantiate("cex_A8", GF(3), {})
    ok, witness = maximal.check_p1(algebra)
    _require(not ok, "the counterexample must fail the isomorphism property")
    assert witness is not None
    leib_a = witness.a.induced.leib_ideal().dim
    leib_b = witness.b.induced.leib_ideal().dim
    _require(
        sorted((leib_a, leib_b)) == [0, 1],
        f"witness pair must have square-ideal dims 1 vs 0, got {leib_a}, {leib_b}",
    )
    return (
        f"witness tags {witness.a.hyperplane_tag} vs {witness.b.hyperplane_tag}: "
        f"square-ideal dims {leib_a} vs {leib_b} ({witness.detail})"
    )


def _relations_table6_claim(seed: int):
    def run() -> str:
        p = catalog.parametric_table6()
        relations = parse_relations(
            "gamma - d + f\ngamma + d + fhat\ngamma - dhat - f\n",
            catalog.TABLE6_VARIABLES,
        )
        report = constraints.verify_implied_relations(
            p, relations, trials=100, field=GF(101), seed=seed
        )
        _require(report.ok, f"relation verification failed: {report}")
        return (
            f"100 locus samples annihilate every constraint and each single "
            f"relation violation breaks one (seed {seed})"
        )

    return run


def _relations_table1_claim(seed: int):
    def run() -> str:
        p = catalog.parametric_table1()
        relations = parse_relations(
            "bhat + b\nchat + c\ngamma\n", catalog.TABLE1_VARIABLES
        )
        report = constraints.verify_implied_relations(
            p, relations, trials=100, field=GF(101), seed=seed
        )
        _require(report.ok, f"relation verification failed: {report}")
        return (
            f"100 locus samples annihilate every constraint and each single "
            f"relation violation breaks one (seed {seed})"
        )

    return run


def _holmes_field_dependence_claim() -> str:
    algebra = catalog.instantiate("holmes_iii", GF(5), {"gamma": 2})
    _require(algebra.dim == 6, "six-dimensional instantiation expected")
    rejected = []
    for gamma in ("-1", "-4", "-9/4", "-25"):
        reports = catalog.validate_params("holmes_iii", QQ, {"gamma": gamma})
        _require(
            not all(r.ok for r in reports),
            f"gamma = {gamma} must be rejected over the rationals",
        )
        rejected.append(gamma)
    ok_reports = catalog.validate_params("holmes_iii", QQ, {"gamma": 2})
    _require(all(r.ok for r in ok_reports), "gamma = 2 stays valid over the rationals")
    return (
        "instantiated over GF(5) with gamma = 2; rational gammas "
        f"{rejected} all rejected because -gamma is a square"
    )
