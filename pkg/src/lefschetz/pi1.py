"""Fundamental group of a fiber-sum total space, as a presentation.

For a factorization of the identity that admits a section, the
fundamental group of the total space is the surface group divided by
the normal closure of the vanishing cycles.  For a fiber sum with
copies conjugated by twists along curves d_j, each meeting some base
cycle transversely in a single point, the twisted cycle relators
collapse to the single relators d_j = 1; that single-intersection fact
must be witnessed on each extra curve.  Copies conjugated by products
of standard-generator twists are instead materialized: their cycle
words are rewritten through the twist substitution and added as
relators.

Relator words are emitted up to conjugacy, which is harmless inside a
normal closure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import words as W
from .monodromy import FiberSumSpec, twist_substitution
from .presentations import GroupPresentation
from .surface import (
    WILDCARD_CHAIN,
    CurveRef,
    SurfaceModel,
    surface_relator,
)
from .words import Word


class WitnessError(ValueError):
    """An extra curve lacks a usable single-intersection witness."""


@dataclass
class Pi1Input:
    """Everything the presentation builder consumes.

    base_cycles: the distinct vanishing cycles of the plain copies.
    extras: curves conjugating whole copies, each needing a witness
        against some base cycle.
    substituted_blocks: one generator->word map per twist-product copy;
        the base cycles are rewritten through each map.
    """

    genus: int
    base_cycles: list[CurveRef]
    extras: list[CurveRef] = field(default_factory=list)
    substituted_blocks: list[dict[int, Word]] = field(default_factory=list)
    has_section: bool = True


@dataclass(frozen=True)
class WitnessReport:
    ok: bool
    violations: tuple[str, ...] = ()


def validate_witnesses(plan: Pi1Input) -> WitnessReport:
    """Check every extra carries a single-intersection witness against a
    base cycle (the wildcard target matches any chain curve B_j)."""
    base_labels = {c.label for c in plan.base_cycles}
    chain_present = any(label.startswith("B_") for label in base_labels)
    violations = []
    for extra in plan.extras:
        usable = False
        for witness in extra.witnesses:
            if witness.target in base_labels:
                usable = True
                break
            if witness.target == WILDCARD_CHAIN and chain_present:
                usable = True
                break
        if not usable:
            violations.append(
                f"extra curve {extra.label!r} has no single-intersection "
                "witness against a base cycle"
            )
    return WitnessReport(ok=not violations, violations=tuple(violations))


def input_from_fiber_sum(spec: FiberSumSpec) -> Pi1Input:
    """Translate a fiber-sum description into presentation input."""
    base = spec.base
    if not base.has_section:
        raise ValueError("fundamental group reduction needs a section")
    seen = set()
    cycles = []
    for factor in base.factors:
        if factor.conjugator:
            raise ValueError("base factorization must be unconjugated")
        if factor.curve.label not in seen:
            seen.add(factor.curve.label)
            cycles.append(factor.curve)
    plan = Pi1Input(genus=base.genus, base_cycles=cycles)
    model = SurfaceModel(base.genus)
    for conj in spec.conjugators:
        if conj is None or (isinstance(conj, tuple) and not conj):
            continue
        if isinstance(conj, CurveRef):
            plan.extras.append(conj)
        else:
            sub = W.identity_substitution(model.alphabet_size)
            for label, power in conj:
                sub = W.compose_substitutions(
                    sub, twist_substitution(model, label, power)
                )
            plan.substituted_blocks.append(sub)
    return plan


def pi1_presentation(plan: Pi1Input) -> GroupPresentation:
    """Presentation of the total space group on the standard generators."""
    report = validate_witnesses(plan)
    if not report.ok:
        raise WitnessError("; ".join(report.violations))
    model = SurfaceModel(plan.genus)
    relators: list[Word] = [surface_relator(plan.genus)]
    relators.extend(c.word for c in plan.base_cycles)
    relators.extend(c.word for c in plan.extras)
    for sub in plan.substituted_blocks:
        relators.extend(W.substitute(c.word, sub) for c in plan.base_cycles)
    return GroupPresentation(model.generator_names(), tuple(relators))
