"""Positive Dehn-twist factorizations and their homology representation.

A factorization is an ordered list of twist factors; the list order is
the order in which the twists are performed.  Each factor is a catalog
curve, optionally decorated with a conjugator (an ordered product of
twists along cataloged curves), standing for the twist along the image
of the curve under that product.

On first homology a twist along a curve of class v acts by the
transvection x -> x + <x, v> v.  The matrix of a factorization is
accumulated so that the identity factorization of the chain curves
(``base_factorization``) maps to the identity matrix; that requirement
pins the orientation convention once and for all.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from . import words as W
from .intmat import Matrix, identity, matmul, transpose
from .surface import (
    CurveRef,
    SurfaceModel,
    curve_catalog,
    make_curve,
    require_odd_genus_curves,
    symplectic_pairing,
)
from .words import Word


@dataclass(frozen=True)
class TwistFactor:
    """Twist along curve, conjugated by the twist product ``conjugator``.

    Conjugator entries are (curve label, integer power) pairs resolved
    against the owning factorization's curve table; an empty conjugator
    means the plain twist.
    """

    curve: CurveRef
    conjugator: tuple[tuple[str, int], ...] = ()


@dataclass(frozen=True)
class Factorization:
    genus: int
    factors: tuple[TwistFactor, ...]
    has_section: bool = False
    curves: tuple[tuple[str, CurveRef], ...] = ()

    def curve_table(self) -> dict[str, CurveRef]:
        return dict(self.curves)

    def __len__(self) -> int:
        return len(self.factors)


# a fiber-sum conjugator: identity, a curve (twist about it), or an ordered
# product of powers of twists along standard generator curves
Conjugator = Union[None, CurveRef, tuple[tuple[str, int], ...]]


@dataclass(frozen=True)
class FiberSumSpec:
    base: Factorization
    conjugators: tuple[Conjugator, ...]

    def __post_init__(self):
        if not self.conjugators:
            raise ValueError("fiber sum needs at least one copy")

    @property
    def copies(self) -> int:
        return len(self.conjugators)


# ---------------------------------------------------------------------------
# the base identity factorization


def base_factorization(
    genus: int,
    c_exponent: int = 2,
    curves: dict[str, CurveRef] | None = None,
) -> Factorization:
    """The built-in positive-twist factorization of the identity.

    For even genus the factor sequence is (c^e, B_g, ..., B_1, B_0)
    twice, where e is ``c_exponent``; for odd genus it is
    (a^2, b^2, B_g, ..., B_0) twice, which requires the configured
    curves "a" and "b".  Both carry a section, so the fundamental-group
    reduction applies to every fiber sum built from them.
    """
    if genus < 2:
        raise ValueError("base factorization needs genus >= 2")
    if c_exponent not in (1, 2):
        raise ValueError("c exponent must be 1 or 2")
    catalog = curves if curves is not None else curve_catalog(genus)
    factors: list[TwistFactor] = []
    if genus % 2 == 0:
        half = [catalog["c"]] * c_exponent
    else:
        require_odd_genus_curves(catalog, genus)
        half = [catalog["a"], catalog["a"], catalog["b"], catalog["b"]]
    half += [catalog[f"B_{j}"] for j in range(genus, -1, -1)]
    factors = [TwistFactor(c) for c in half + half]
    return Factorization(
        genus=genus,
        factors=tuple(factors),
        has_section=True,
        curves=tuple(sorted(catalog.items())),
    )


def factors_per_copy(genus: int, c_exponent: int = 2) -> int:
    """Twist count of one copy of the base factorization."""
    if genus % 2 == 0:
        return 2 * (genus + 1 + c_exponent)
    return 2 * (genus + 5)


@dataclass(frozen=True)
class CExponentReport:
    """Outcome of resolving the exponent of the separating-curve twist.

    The homology check cannot separate the two candidates when the
    curve c is null-homologous (its transvection is trivial); in that
    case both candidates pass, ``ambiguous`` is set, and the published
    exponent 2 is kept with a warning.
    """

    genus: int
    passes: dict[int, bool]
    resolved: int
    ambiguous: bool
    warning: str | None


def resolve_c_exponent(genus: int, curves: dict[str, CurveRef] | None = None) -> CExponentReport:
    """Pick the c exponent whose base factorization is homologically trivial."""
    if genus % 2 != 0 or genus < 2:
        raise ValueError("c exponent resolution applies to even genus >= 2")
    catalog = curves if curves is not None else curve_catalog(genus)
    ident = identity(2 * genus)
    passes = {
        e: homology_image(base_factorization(genus, e, catalog)) == ident
        for e in (1, 2)
    }
    passing = [e for e, ok in passes.items() if ok]
    if len(passing) == 1:
        return CExponentReport(genus, passes, passing[0], ambiguous=False, warning=None)
    warning = (
        "homology passes for both exponents (the separating curve is "
        "null-homologous); keeping exponent 2"
        if len(passing) == 2
        else "homology passes for neither exponent; keeping exponent 2"
    )
    return CExponentReport(genus, passes, 2, ambiguous=True, warning=warning)


# ---------------------------------------------------------------------------
# twist actions


def twist_substitution(model: SurfaceModel, label: str, power: int) -> dict[int, Word]:
    """Action of the n-th power of the twist along a generator curve on pi_1.

    The twist along b_i sends a_i to b_i^n a_i; the twist along a_i
    sends b_i to a_i^-n b_i.  All other generators are fixed.  The signs
    make the abelianized map equal to the homology transvection, and the
    left multiplication makes the map fix the surface relator
    prod [a_j, b_j] on the nose (right multiplication would not even
    preserve its free-group conjugacy class).
    """
    sub = W.identity_substitution(model.alphabet_size)
    kind, _, num = label.partition("_")
    if kind not in ("a", "b") or not num.isdigit():
        raise ValueError(f"{label!r} is not a standard generator curve")
    i = int(num)
    if power == 0:
        return sub
    if kind == "b":
        sub[model.a_index(i)] = model.b(i, power) * model.a(i)
    else:
        sub[model.b_index(i)] = model.a(i, -power) * model.b(i)
    return sub


def substitution_abelianized(model: SurfaceModel, sub: Mapping[int, Word]) -> Matrix:
    """Matrix (columns = images of basis vectors) of an abelianized map."""
    n = model.alphabet_size
    cols = [W.exponent_vector(sub[g], n) for g in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def transvection(v: Sequence[int], power: int = 1) -> Matrix:
    """Matrix of x -> x + power * <x, v> v (columns act on the left)."""
    n = len(v)
    out = identity(n)
    basis = [[1 if k == j else 0 for k in range(n)] for j in range(n)]
    for j in range(n):
        coeff = power * symplectic_pairing(basis[j], v)
        if coeff:
            for i in range(n):
                out[i][j] += coeff * v[i]
    return out


def _conjugated_class(
    factor: TwistFactor, table: Mapping[str, CurveRef]
) -> tuple[int, ...]:
    """Homology class of the conjugated curve f(c)."""
    vec = list(factor.curve.homology)
    # the composite matrix of entries [(l1,p1),(l2,p2)] is T1 @ T2, so the
    # vector meets the last entry first -- same accumulation as homology_image
    for label, power in reversed(factor.conjugator):
        axis = table[label].homology
        coeff = power * symplectic_pairing(vec, axis)
        if coeff:
            vec = [x + coeff * a for x, a in zip(vec, axis)]
    return tuple(vec)


def homology_image(factorization: Factorization) -> Matrix:
    """Product of the factor transvections on first homology.

    Accumulated as M = M @ T(factor) over the factor list, the
    convention under which the base identity factorization maps to the
    identity matrix.
    """
    table = factorization.curve_table()
    out = identity(2 * factorization.genus)
    for factor in factorization.factors:
        out = matmul(out, transvection(_conjugated_class(factor, table)))
    return out


def is_symplectic(matrix: Matrix, genus: int) -> bool:
    from .surface import pairing_matrix

    j = pairing_matrix(genus)
    return matmul(matmul(transpose(matrix), j), matrix) == j


# ---------------------------------------------------------------------------
# fiber sums


def _substituted_copy(
    base: Factorization, entries: tuple[tuple[str, int], ...]
) -> list[TwistFactor]:
    """Copy of the base with every cycle word rewritten by the twist product."""
    model = SurfaceModel(base.genus)
    sub = W.identity_substitution(model.alphabet_size)
    # fold so the last entry's substitution is applied to words first,
    # mirroring the matrix accumulation of homology_image
    for label, power in entries:
        sub = W.compose_substitutions(sub, twist_substitution(model, label, power))
    out = []
    for factor in base.factors:
        if factor.conjugator:
            raise ValueError("cannot rewrite an already conjugated factor")
        word = W.substitute(factor.curve.word, sub)
        tag = "".join(f"t({label})^{power}" for label, power in entries)
        curve = make_curve(
            label=f"{tag}({factor.curve.label})",
            word=word,
            genus=base.genus,
            provenance="constructed",
        )
        out.append(TwistFactor(curve))
    return out


def fiber_sum(spec: FiberSumSpec) -> Factorization:
    """Concatenate conjugated copies of the base factorization.

    Identity entries repeat the base unchanged.  Curve entries record
    the conjugator symbolically on each factor (the fundamental-group
    reduction consumes the curve without expanding the twisted cycles).
    Twist-product entries rewrite every cycle word through the word
    substitution of the product.
    """
    base = spec.base
    table = base.curve_table()
    factors: list[TwistFactor] = []
    for conj in spec.conjugators:
        if conj is None or (isinstance(conj, tuple) and not conj):
            factors.extend(base.factors)
        elif isinstance(conj, CurveRef):
            if conj.label not in table:
                table[conj.label] = conj
            for factor in base.factors:
                factors.append(
                    TwistFactor(
                        curve=factor.curve,
                        conjugator=factor.conjugator + ((conj.label, 1),),
                    )
                )
        else:
            factors.extend(_substituted_copy(base, tuple(conj)))
    return Factorization(
        genus=base.genus,
        factors=tuple(factors),
        has_section=base.has_section,
        curves=tuple(sorted(table.items())),
    )


def euler_characteristic(genus: int, singular_fibers: int) -> int:
    """Euler characteristic of a fibration total space: 4 - 4g + s."""
    if singular_fibers < 0:
        raise ValueError("negative singular fiber count")
    return 4 - 4 * genus + singular_fibers


# ---------------------------------------------------------------------------
# export


def export_factorization(factorization: Factorization) -> dict:
    """JSON-ready form: genus, has_section, then the ordered factors."""
    from .presentations import serialize_word

    names = SurfaceModel(factorization.genus).generator_names()
    table = factorization.curve_table()
    factors = []
    for factor in factorization.factors:
        label = factor.curve.label
        curve_repr = label if label in table else serialize_word(factor.curve.word, names)
        factors.append(
            {
                "curve": curve_repr,
                "conjugator": [[lab, power] for lab, power in factor.conjugator],
            }
        )
    return {
        "genus": factorization.genus,
        "has_section": factorization.has_section,
        "factors": factors,
    }


def export_factorization_json(factorization: Factorization) -> str:
    return json.dumps(export_factorization(factorization), indent=2)
