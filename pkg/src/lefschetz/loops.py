"""Relator-representing loops and the presentation-to-fibration pipeline.

A relator r = a_{i1}^{m1} ... a_{id}^{md} over the first n standard
generators is represented by a simple loop on the genus n + d - 1
surface: its class is

    (b_1 ... b_{i1-1}) a_{i1}^{m1} b_{h1} a_{i2}^{m2} b_{h2} ...
        b_{h_{d-1}} a_{id}^{md} (b_1 ... b_{id})^{-1}

where h_1 < h_2 < ... are fresh handle indices above n, one per gap
between consecutive syllables.  Killing every b and every a above n
projects the loop class back onto r, which is the correctness test the
whole pipeline rides on.  Doing this for all relators of a presentation
with n generators, k relators and total syllable length l uses
h = n + l - k handles; on any even-genus surface of genus >= 2h the
loops fit and the chain curve B_{2h} meets each of them once.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import words as W
from .monodromy import (
    CExponentReport,
    Factorization,
    FiberSumSpec,
    base_factorization,
    fiber_sum,
    resolve_c_exponent,
)
from .pi1 import input_from_fiber_sum, pi1_presentation
from .presentations import (
    DEFAULT_HOM_BUDGET,
    DEFAULT_TIETZE_BUDGET,
    GroupPresentation,
    IsoEvidence,
    TietzeResult,
    iso_evidence,
    tietze_simplify,
)
from .finite_groups import FiniteGroupTable, get_target
from .surface import (
    WILDCARD_CHAIN,
    CurveRef,
    SurfaceModel,
    Witness,
    curve_catalog,
    make_curve,
)
from .words import Word


@dataclass(frozen=True)
class LoopPlan:
    """Loops representing the relators of a presentation, plus handle use."""

    n: int
    k: int
    total_syllables: int
    h: int
    loops: tuple[CurveRef, ...]
    handle_map: tuple[tuple[str, tuple[int, ...]], ...]


def embed_relator(model: SurfaceModel, relator: Word) -> Word:
    """Rewrite a relator over x_1..x_n as a word in a_1..a_n."""
    return W.reduce((model.a_index(g + 1), e) for g, e in relator.letters)


def kill_substitution(model: SurfaceModel, n: int) -> dict[int, Word]:
    """Kill every b and every a above index n; fix a_1..a_n."""
    sub = {}
    for i in range(1, model.genus + 1):
        sub[model.b_index(i)] = Word()
        sub[model.a_index(i)] = model.a(i) if i <= n else Word()
    return sub


def relator_loops(relators: tuple[Word, ...], n: int) -> LoopPlan:
    """Build one loop per relator, allocating fresh handle indices.

    Relators must be nonempty, cyclically reduced words over the first
    n generators (indices 0..n-1).
    """
    total = sum(W.syllable_length(r) for r in relators)
    k = len(relators)
    h = n + total - k
    model = SurfaceModel(max(h, 1))
    loops = []
    handle_map = []
    next_handle = n + 1
    for idx, rel in enumerate(relators, start=1):
        if not rel:
            raise ValueError(f"relator {idx} is empty")
        if W.cyclic_reduce(rel) != rel:
            raise ValueError(f"relator {idx} is not cyclically reduced")
        if rel.max_generator() >= n:
            raise ValueError(f"relator {idx} uses a generator above {n}")
        syllables = rel.letters
        first = syllables[0].gen + 1
        last = syllables[-1].gen + 1
        raw: list[tuple[int, int]] = []
        raw.extend((model.b_index(i), 1) for i in range(1, first))
        handles = []
        for pos, (gen, exp) in enumerate(syllables):
            if pos:
                handle = next_handle
                next_handle += 1
                handles.append(handle)
                raw.append((model.b_index(handle), 1))
            raw.append((model.a_index(gen + 1), exp))
        raw.extend((model.b_index(i), -1) for i in range(last, 0, -1))
        word = W.reduce(raw)
        label = f"R_{idx}"
        loops.append(
            make_curve(
                label,
                word,
                model.genus,
                witnesses=(Witness(f"B_{2 * h}"),),
                provenance="constructed",
            )
        )
        handle_map.append((label, tuple(handles)))
    return LoopPlan(
        n=n,
        k=k,
        total_syllables=total,
        h=h,
        loops=tuple(loops),
        handle_map=tuple(handle_map),
    )


# ---------------------------------------------------------------------------
# special loop families


def abelian_commutator_loop(genus: int, n: int, k: int, i: int, j: int) -> CurveRef:
    """Loop representing [x_i, x_j] on the genus 2n+2k+1 surface.

    Class: a_i a_j a_i^-1 (b_i..b_j) a_j^-1 b_{n+k+1}^-1 (b_i..b_j)^-1.
    Meets the odd-genus auxiliary curve "a" once.
    """
    if not 1 <= i < j <= n + k:
        raise ValueError("need 1 <= i < j <= n+k")
    model = SurfaceModel(genus)
    run = model.b_run(i, j)
    word = (
        model.a(i)
        * model.a(j)
        * model.a(i, -1)
        * run
        * model.a(j, -1)
        * model.b(n + k + 1, -1)
        * run.inverse()
    )
    return make_curve(
        f"R_{i}{j}", word, genus, witnesses=(Witness("a"),), provenance="paper"
    )


def abelian_torsion_loop(genus: int, n: int, s: int, m: int) -> CurveRef:
    """Loop representing x_{n+s}^m: class a_{n+s}^m b_{n+s}^-1, meets B_{n+s} once."""
    model = SurfaceModel(genus)
    word = model.a(n + s, m) * model.b(n + s, -1)
    return make_curve(
        f"T_{s}", word, genus, witnesses=(Witness(f"B_{n + s}"),), provenance="paper"
    )


def nonorientable_loop(g: int) -> CurveRef:
    """Loop a_1^2 ... a_g^2 (b_1...b_g)^-1 on the genus-2g surface; meets B_g once."""
    model = SurfaceModel(2 * g)
    word = Word()
    for i in range(1, g + 1):
        word = word * model.a(i, 2)
    word = word * model.b_run(1, g, invert=True)
    return make_curve(
        "R", word, 2 * g, witnesses=(Witness(f"B_{g}"),), provenance="paper"
    )


def sl2z_loop() -> CurveRef:
    """Simple loop of class a_1^2 a_2^3 b_2^-1 b_1^-1 on the genus-4 surface."""
    model = SurfaceModel(4)
    word = model.a(1, 2) * model.a(2, 3) * model.b(2, -1) * model.b(1, -1)
    return make_curve(
        "R", word, 4, witnesses=(Witness(WILDCARD_CHAIN),), provenance="paper"
    )


def special_loops(family: str, **params) -> list[CurveRef]:
    """The hand-built loop families: abelian(n, torsions), nonorientable(g), sl2z."""
    if family == "abelian":
        n = params["n"]
        torsions = tuple(params["torsions"])
        k = len(torsions)
        if n + k < 3:
            raise ValueError("abelian family needs n + k >= 3")
        if any(m < 2 for m in torsions):
            raise ValueError("torsion coefficients must be >= 2")
        genus = 2 * n + 2 * k + 1
        loops = [
            abelian_commutator_loop(genus, n, k, i, j)
            for i in range(1, n + k + 1)
            for j in range(i + 1, n + k + 1)
        ]
        loops += [
            abelian_torsion_loop(genus, n, s, m)
            for s, m in enumerate(torsions, start=1)
        ]
        return loops
    if family == "nonorientable":
        g = params["g"]
        if g < 2:
            raise ValueError("nonorientable family needs g >= 2")
        return [nonorientable_loop(g)]
    if family == "sl2z":
        return [sl2z_loop()]
    raise ValueError(f"unknown loop family {family!r}")


# ---------------------------------------------------------------------------
# fiber-sum plans


def free_group_spec(n: int, genus: int) -> FiberSumSpec:
    """Fiber-sum plan whose total space has free fundamental group of rank n.

    Uses an identity copy plus copies conjugated by the twists along
    b_1..b_g and a_{n+1}..a_{g/2}; needs even genus >= 2n.
    """
    if genus % 2 != 0 or genus < 2 * n:
        raise ValueError("need even genus >= 2n")
    catalog = curve_catalog(genus)
    r = genus // 2
    extras = [catalog[f"b_{i}"] for i in range(1, genus + 1)]
    extras += [catalog[f"a_{s}"] for s in range(n + 1, r + 1)]
    base = base_factorization(genus, curves=catalog)
    return FiberSumSpec(base=base, conjugators=(None, *extras))


def free_group_copy_count(n: int, genus: int) -> int:
    """1 + g + (g/2 - n) copies, the 1 + 3r - n of the even-genus count."""
    return 1 + genus + (genus // 2 - n)


def abelian_group_spec(
    n: int, torsions: tuple[int, ...], curve_config: dict[str, CurveRef]
) -> FiberSumSpec:
    """Plan for Z^n + Z_{m_1} + ... + Z_{m_k} at genus 2n+2k+1.

    The genus is odd, so the base factorization needs the configured
    auxiliary curves "a" and "b"; the commutator loops are witnessed
    against "a".
    """
    k = len(torsions)
    genus = 2 * n + 2 * k + 1
    catalog = curve_catalog(genus, curve_config)
    base = base_factorization(genus, curves=catalog)
    extras = [catalog[f"b_{i}"] for i in range(1, genus + 1)]
    extras += special_loops("abelian", n=n, torsions=torsions)
    return FiberSumSpec(base=base, conjugators=(None, *extras))


def abelian_copy_count(genus: int, n: int, k: int) -> int:
    """Published copy count for the abelian plan: g+1+k+(n+k)(n+k+1)/2."""
    return genus + 1 + k + (n + k) * (n + k + 1) // 2


def nonorientable_spec(g: int) -> FiberSumSpec:
    """Plan for the fundamental group of the nonorientable genus-g surface."""
    genus = 2 * g
    catalog = curve_catalog(genus)
    base = base_factorization(genus, curves=catalog)
    extras = [catalog[f"b_{i}"] for i in range(1, g + 1)]
    extras.append(nonorientable_loop(g))
    return FiberSumSpec(base=base, conjugators=(None, *extras))


def sl2z_spec() -> FiberSumSpec:
    """Genus-4 plan whose total space group matches ⟨x,y | x^2 y^3, x^4⟩."""
    genus = 4
    catalog = curve_catalog(genus)
    base = base_factorization(genus, curves=catalog)
    extras = [catalog[f"b_{i}"] for i in range(1, genus + 1)]
    extras.append(sl2z_loop())
    # the order-4 relator has a single syllable, so its generic loop
    # a_1^4 b_1^-1 needs no extra handles
    power_loop = relator_loops((Word.gen(0, 4),), 2).loops[0]
    extras.append(power_loop.at_genus(genus))
    return FiberSumSpec(base=base, conjugators=(None, *extras))


# ---------------------------------------------------------------------------
# the end-to-end pipeline


class ProjectionError(AssertionError):
    """A constructed loop failed to project back onto its relator."""


@dataclass
class CompileResult:
    source: GroupPresentation
    genus: int
    h: int
    copies: int
    c_exponent: CExponentReport
    plan: LoopPlan
    spec: FiberSumSpec
    factorization: Factorization
    pi1_raw: GroupPresentation
    tietze: TietzeResult
    evidence: IsoEvidence

    @property
    def simplified(self) -> GroupPresentation:
        return self.tietze.presentation

    @property
    def verdict(self) -> str:
        return self.evidence.verdict


def normalize_presentation(pres: GroupPresentation) -> GroupPresentation:
    """Cyclically reduce the relators (dropping any that die)."""
    return GroupPresentation(
        pres.generators, tuple(W.cyclic_reduce(r) for r in pres.relators)
    )


def default_genus(h: int) -> int:
    return max(2 * h, 4)


def compile_presentation(
    pres: GroupPresentation,
    genus: int | None = None,
    *,
    c_exponent: int | str = "auto",
    targets: list[FiniteGroupTable] | None = None,
    tietze_budget: int = DEFAULT_TIETZE_BUDGET,
    hom_budget: int = DEFAULT_HOM_BUDGET,
) -> CompileResult:
    """Compile a presentation into a fibration plan and verify the result.

    Builds the loop plan for the relators, assembles the fiber sum with
    the b_i, excess a_s and relator-loop conjugators, extracts and
    simplifies the total space presentation, and compares it against
    the input with decidable invariants.  Even genus >= 2(n + l - k)
    required; the default is max(2(n+l-k), 4).
    """
    if not pres.generators:
        raise ValueError("presentation needs at least one generator")
    source = normalize_presentation(pres)
    n = source.rank
    k = len(source.relators)
    total = source.total_syllables()
    h = n + total - k
    if genus is None:
        genus = default_genus(h)
    if genus % 2 != 0:
        raise ValueError("odd target genus is not supported; pick an even genus")
    if genus < 2 * h:
        raise ValueError(f"genus {genus} is below the bound 2(n+l-k) = {2 * h}")

    plan = relator_loops(source.relators, n)
    catalog = curve_catalog(genus)
    exponent_report = resolve_c_exponent(genus, catalog)
    if c_exponent != "auto":
        exponent = int(c_exponent)
        exponent_report = CExponentReport(
            genus=genus,
            passes=exponent_report.passes,
            resolved=exponent,
            ambiguous=exponent_report.ambiguous,
            warning=f"exponent {exponent} forced by caller",
        )
    base = base_factorization(genus, exponent_report.resolved, catalog)

    r = genus // 2
    extras: list[CurveRef] = [catalog[f"b_{i}"] for i in range(1, genus + 1)]
    extras += [catalog[f"a_{s}"] for s in range(n + 1, r + 1)]
    extras += [loop.at_genus(genus) for loop in plan.loops]
    spec = FiberSumSpec(base=base, conjugators=(None, *extras))

    model = SurfaceModel(genus)
    kill = kill_substitution(model, n)
    for loop, relator in zip(plan.loops, source.relators):
        projected = W.substitute(loop.at_genus(genus).word, kill)
        if projected != embed_relator(model, relator):
            raise ProjectionError(
                f"loop {loop.label} does not project onto its relator"
            )

    factorization = fiber_sum(spec)
    pi1_raw = pi1_presentation(input_from_fiber_sum(spec))
    tietze = tietze_simplify(pi1_raw, tietze_budget)
    if targets is None:
        targets = [get_target("S3"), get_target("Z4")]
    evidence = iso_evidence(
        source,
        tietze.presentation,
        targets,
        hom_budget=hom_budget,
        tietze_budget=tietze_budget,
    )
    return CompileResult(
        source=source,
        genus=genus,
        h=h,
        copies=spec.copies,
        c_exponent=exponent_report,
        plan=plan,
        spec=spec,
        factorization=factorization,
        pi1_raw=pi1_raw,
        tietze=tietze,
        evidence=evidence,
    )
