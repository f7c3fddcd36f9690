"""The genus-g surface group model and its curve catalog.

The fundamental group of the closed orientable genus-g surface is
generated by a_1, b_1, ..., a_g, b_g with the single relation
prod_i [a_i, b_i] = 1.  On top of that alphabet this module builds the
catalog of simple closed curves (the chain curves B_0..B_g and, for
even genus, the separating curve c) whose right Dehn twists make up the
base monodromy factorization, together with their homology classes and
the single-intersection facts the fiber-sum machinery relies on.

Intersection facts are recorded as trusted witnesses, never computed:
a witness (target, 1) asserts that the curve meets the named catalog
curve transversely in one point.  The wildcard target "B_*" asserts a
single intersection with some chain curve without fixing the index.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import words as W
from .words import Word

WILDCARD_CHAIN = "B_*"


@dataclass(frozen=True)
class SurfaceModel:
    """Alphabet bookkeeping for the standard generators of genus g."""

    genus: int

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("genus must be at least 1")

    @property
    def alphabet_size(self) -> int:
        return 2 * self.genus

    def a_index(self, i: int) -> int:
        """Index of a_i, 1-based i."""
        if not 1 <= i <= self.genus:
            raise IndexError(f"a_{i} out of range for genus {self.genus}")
        return 2 * (i - 1)

    def b_index(self, i: int) -> int:
        if not 1 <= i <= self.genus:
            raise IndexError(f"b_{i} out of range for genus {self.genus}")
        return 2 * (i - 1) + 1

    def generator_names(self) -> tuple[str, ...]:
        names = []
        for i in range(1, self.genus + 1):
            names.append(f"a_{i}")
            names.append(f"b_{i}")
        return tuple(names)

    def a(self, i: int, exp: int = 1) -> Word:
        return Word.gen(self.a_index(i), exp)

    def b(self, i: int, exp: int = 1) -> Word:
        return Word.gen(self.b_index(i), exp)

    def b_run(self, lo: int, hi: int, invert: bool = False) -> Word:
        """b_lo b_{lo+1} ... b_hi, or its inverse; empty when lo > hi."""
        word = W.reduce((self.b_index(i), 1) for i in range(lo, hi + 1))
        return word.inverse() if invert else word


@dataclass(frozen=True)
class Witness:
    """Trusted assertion of a single transverse intersection."""

    target: str
    count: int = 1

    def __post_init__(self):
        if self.count != 1:
            raise ValueError("only single-intersection witnesses are supported")


@dataclass(frozen=True)
class CurveRef:
    """A simple closed curve: label, class in pi_1 up to conjugacy,
    homology vector, and its intersection witnesses."""

    label: str
    word: Word
    homology: tuple[int, ...] = field(init=False, default=())
    witnesses: tuple[Witness, ...] = ()
    provenance: str = "constructed"
    genus: int = 0

    def __post_init__(self):
        if self.provenance not in ("paper", "constructed", "user"):
            raise ValueError(f"bad provenance {self.provenance!r}")
        if self.genus < 1:
            raise ValueError("curve needs a positive ambient genus")
        vec = W.exponent_vector(self.word, 2 * self.genus)
        object.__setattr__(self, "homology", vec)

    def at_genus(self, genus: int) -> "CurveRef":
        """Re-embed the curve on a larger surface (same word, padded class)."""
        if genus < self.genus:
            raise ValueError("cannot re-embed on a smaller surface")
        if genus == self.genus:
            return self
        return CurveRef(
            label=self.label,
            word=self.word,
            witnesses=self.witnesses,
            provenance=self.provenance,
            genus=genus,
        )


def make_curve(
    label: str,
    word: Word,
    genus: int,
    witnesses: tuple[Witness, ...] = (),
    provenance: str = "constructed",
) -> CurveRef:
    return CurveRef(
        label=label, word=word, witnesses=witnesses, provenance=provenance, genus=genus
    )


def surface_relator(genus: int) -> Word:
    """prod_{i=1..g} [a_i, b_i], the defining relation of the surface group."""
    model = SurfaceModel(genus)
    word = Word()
    for i in range(1, genus + 1):
        word = word * W.commutator(model.a(i), model.b(i))
    return word


def commutator_chain(model: SurfaceModel, k: int) -> Word:
    """c_k = [a_1,b_1]...[a_k,b_k], the separating curve bounding the
    first k handles (basepath conjugators taken trivial)."""
    word = Word()
    for i in range(1, k + 1):
        word = word * W.commutator(model.a(i), model.b(i))
    return word


def curve_catalog(genus: int, config: dict[str, CurveRef] | None = None) -> dict[str, CurveRef]:
    """Catalog of the standard curves on the genus-g surface, g >= 2.

    Contains the generator curves a_i and b_i, the chain curves
    B_0..B_g, for even g the separating curve c, and for odd g the
    auxiliary curves "a" and "b" when supplied through ``config``
    (their words are not derivable here, so they are configuration
    inputs).
    """
    if genus < 2:
        raise ValueError("curve catalog needs genus >= 2")
    model = SurfaceModel(genus)
    g = genus
    catalog: dict[str, CurveRef] = {}

    for i in range(1, g + 1):
        catalog[f"a_{i}"] = make_curve(
            f"a_{i}",
            model.a(i),
            g,
            witnesses=(Witness(WILDCARD_CHAIN),),
            provenance="paper",
        )
        catalog[f"b_{i}"] = make_curve(
            f"b_{i}",
            model.b(i),
            g,
            witnesses=(Witness(WILDCARD_CHAIN), Witness(WILDCARD_CHAIN)),
            provenance="paper",
        )

    catalog["B_0"] = make_curve("B_0", model.b_run(1, g), g, provenance="paper")
    for k in range(1, (g + 1) // 2 + 1):
        # B_{2k-1} = a_k b_k ... b_{g+1-k} c_{g+1-k} a_{g+1-k}
        word = (
            model.a(k)
            * model.b_run(k, g + 1 - k)
            * commutator_chain(model, g + 1 - k)
            * model.a(g + 1 - k)
        )
        catalog[f"B_{2 * k - 1}"] = make_curve(f"B_{2*k-1}", word, g, provenance="paper")
    for k in range(1, g // 2 + 1):
        # B_{2k} = a_k b_{k+1} ... b_{g-k} c_{g-k} a_{g+1-k}
        word = (
            model.a(k)
            * model.b_run(k + 1, g - k)
            * commutator_chain(model, g - k)
            * model.a(g + 1 - k)
        )
        catalog[f"B_{2 * k}"] = make_curve(f"B_{2*k}", word, g, provenance="paper")

    if g % 2 == 0:
        catalog["c"] = make_curve(
            "c", commutator_chain(model, g // 2), g, provenance="paper"
        )
    if config:
        for label, curve in config.items():
            if curve.genus != g:
                raise ValueError(
                    f"configured curve {label!r} lives on genus {curve.genus}, "
                    f"catalog is genus {g}"
                )
            catalog[label] = curve
    return catalog


def require_odd_genus_curves(catalog: dict[str, CurveRef], genus: int):
    if genus % 2 == 1 and ("a" not in catalog or "b" not in catalog):
        raise KeyError(
            f"odd genus {genus} needs configured curves 'a' and 'b'; "
            "supply them via a curve configuration file"
        )


def homology_class(model: SurfaceModel, word: Word) -> tuple[int, ...]:
    """Abelianized class of a word, in the a_1,b_1,...,a_g,b_g basis."""
    if word.max_generator() >= model.alphabet_size:
        raise IndexError("word uses generators outside the surface alphabet")
    return W.exponent_vector(word, model.alphabet_size)


def symplectic_pairing(u, v) -> int:
    """Algebraic intersection number sum_i (u_ai v_bi - u_bi v_ai)."""
    if len(u) != len(v) or len(u) % 2 != 0:
        raise ValueError("pairing needs two vectors of equal even length")
    total = 0
    for i in range(0, len(u), 2):
        total += u[i] * v[i + 1] - u[i + 1] * v[i]
    return total


def pairing_matrix(genus: int) -> list[list[int]]:
    """Gram matrix J of the intersection pairing, <u, v> = u^T J v."""
    n = 2 * genus
    j = [[0] * n for _ in range(n)]
    for i in range(0, n, 2):
        j[i][i + 1] = 1
        j[i + 1][i] = -1
    return j


# ---------------------------------------------------------------------------
# user curve configuration (needed for odd genus and extra loop families)


def parse_curve_word(text: str, model: SurfaceModel) -> Word:
    """Parse a word over the surface alphabet, e.g. ``"a_1 b_2^-1"``."""
    from .presentations import ParseError, parse_presentation

    names = model.generator_names()
    pres = parse_presentation(f"{', '.join(names)} | {text}")
    if len(pres.relators) != 1:
        raise ParseError("expected a single word", 1, 1)
    return pres.relators[0]


def load_curve_config(data, genus: int) -> dict[str, CurveRef]:
    """Build user CurveRef entries from a JSON config (path, text or dict).

    Schema::

        {"curves": [{"label": "a", "word": "a_4", "witnesses": [["B_7", 1]]}]}
    """
    if isinstance(data, str):
        try:
            parsed = json.loads(data)
        except json.JSONDecodeError:
            with open(data, "r", encoding="utf-8") as fh:
                parsed = json.load(fh)
    else:
        parsed = data
    model = SurfaceModel(genus)
    out: dict[str, CurveRef] = {}
    for entry in parsed.get("curves", []):
        label = entry["label"]
        word = parse_curve_word(entry["word"], model)
        witnesses = tuple(
            Witness(target=t, count=c) for t, c in entry.get("witnesses", [])
        )
        out[label] = make_curve(label, word, genus, witnesses, provenance="user")
    return out
