"""Finite group presentations: text syntax, abelianization, Tietze
simplification, homomorphism counting and isomorphism evidence.

The text syntax is

    presentation := gens "|" rels?
    gens         := name ("," name)*
    rels         := word ("," word)*
    word         := factor+
    factor       := name ("^" integer)?

where names match ``[A-Za-z][A-Za-z0-9_]*``, whitespace is insignificant,
integers may be negative and ``^0`` is rejected.  Example::

    x, y | x^2 y^3, x^4
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from . import words as W
from .finite_groups import FiniteGroupTable
from .snf import smith_normal_form
from .words import Word

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
INT_RE = re.compile(r"-?\d+")

DEFAULT_TIETZE_BUDGET = 10**5
DEFAULT_HOM_BUDGET = 10**8


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class BudgetExceeded(RuntimeError):
    """A step or evaluation budget would be (or was) exceeded."""


@dataclass(frozen=True)
class GroupPresentation:
    """Generator names plus freely reduced relator words.

    Relators that reduce to the identity are dropped; an empty relator
    list presents a free group.
    """

    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        seen = set()
        for name in self.generators:
            if not NAME_RE.fullmatch(name):
                raise ValueError(f"bad generator name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate generator {name!r}")
            seen.add(name)
        n = len(self.generators)
        cleaned = []
        for rel in self.relators:
            reduced = W.reduce(rel.letters, alphabet_size=n)
            if reduced:
                cleaned.append(reduced)
        object.__setattr__(self, "relators", tuple(cleaned))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def relation_matrix(self) -> list[list[int]]:
        n = len(self.generators)
        return [list(W.exponent_vector(r, n)) for r in self.relators]

    def total_syllables(self) -> int:
        return sum(W.syllable_length(r) for r in self.relators)


def _tokens(text: str):
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        for kind, regex in (("name", NAME_RE), ("int", INT_RE)):
            m = regex.match(text, i)
            if m:
                yield kind, m.group(), line, col
                col += len(m.group())
                i = m.end()
                break
        else:
            if ch in ",|^":
                yield ch, ch, line, col
                col += 1
                i += 1
            else:
                raise ParseError(f"unexpected character {ch!r}", line, col)
    yield "end", "", line, col


def parse_presentation(text: str) -> GroupPresentation:
    """Parse presentation text such as ``"x, y | x^2 y^3, x^4"``."""
    toks = list(_tokens(text))
    pos = 0

    def peek():
        return toks[pos]

    def take(kind):
        nonlocal pos
        tok = toks[pos]
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2], tok[3])
        pos += 1
        return tok

    gens: list[str] = []
    if peek()[0] == "name":
        gens.append(take("name")[1])
        while peek()[0] == ",":
            take(",")
            gens.append(take("name")[1])
    index = {name: i for i, name in enumerate(gens)}
    if len(index) != len(gens):
        dup = next(g for i, g in enumerate(gens) if g in gens[:i])
        raise ParseError(f"duplicate generator {dup!r}", toks[0][2], toks[0][3])

    take("|")

    def parse_word() -> Word:
        raw: list[tuple[int, int]] = []
        while peek()[0] == "name":
            kind, name, line, col = take("name")
            if name not in index:
                raise ParseError(f"unknown generator {name!r}", line, col)
            exp = 1
            if peek()[0] == "^":
                take("^")
                tok = take("int")
                exp = int(tok[1])
                if exp == 0:
                    raise ParseError("zero exponent", tok[2], tok[3])
            raw.append((index[name], exp))
        if not raw:
            tok = peek()
            raise ParseError("empty relator word", tok[2], tok[3])
        return W.reduce(raw)

    relators: list[Word] = []
    if peek()[0] == "name":
        relators.append(parse_word())
        while peek()[0] == ",":
            take(",")
            relators.append(parse_word())
    tok = peek()
    if tok[0] != "end":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2], tok[3])
    return GroupPresentation(tuple(gens), tuple(relators))


def serialize_word(word: Word, names: tuple[str, ...] | list[str]) -> str:
    parts = []
    for gen, exp in word.letters:
        parts.append(names[gen] if exp == 1 else f"{names[gen]}^{exp}")
    return " ".join(parts)


def serialize_presentation(pres: GroupPresentation) -> str:
    gens = ", ".join(pres.generators)
    rels = ", ".join(serialize_word(r, pres.generators) for r in pres.relators)
    return f"{gens} | {rels}" if rels else f"{gens} |"


# ---------------------------------------------------------------------------
# abelianization


@dataclass(frozen=True)
class AbelianInvariants:
    """Free rank plus torsion coefficients m_1 | m_2 | ... (each >= 2)."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        prev = None
        for m in self.torsion:
            if m < 2:
                raise ValueError("torsion coefficient below 2")
            if prev is not None and m % prev != 0:
                raise ValueError("torsion coefficients must form a divisor chain")
            prev = m

    def minimal_generators(self) -> int:
        return self.free_rank + len(self.torsion)

    def describe(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z_{m}" for m in self.torsion)
        return " + ".join(parts) if parts else "0"


def abelianization(pres: GroupPresentation) -> AbelianInvariants:
    """Invariants of the abelianized group, via Smith normal form."""
    matrix = pres.relation_matrix()
    if not matrix:
        return AbelianInvariants(free_rank=pres.rank)
    snf = smith_normal_form(matrix)
    torsion = tuple(d for d in snf.factors if d > 1)
    return AbelianInvariants(free_rank=pres.rank - snf.rank, torsion=torsion)


# ---------------------------------------------------------------------------
# Tietze simplification


@dataclass(frozen=True)
class TietzeResult:
    presentation: GroupPresentation
    steps: int
    exhausted: bool


def _eliminable(rel: Word) -> list[int]:
    """Generators occurring in rel exactly once, with exponent +-1."""
    counts: dict[int, int] = {}
    for gen, exp in rel.letters:
        counts[gen] = counts.get(gen, 0) + abs(exp)
    return sorted(g for g, c in counts.items() if c == 1)


def _solve(rel: Word, gen: int) -> Word:
    """Solve rel = 1 for gen, which occurs exactly once with exponent +-1."""
    idx = next(i for i, let in enumerate(rel.letters) if let.gen == gen)
    before = Word(rel.letters[:idx])
    after = Word(rel.letters[idx + 1 :])
    if rel.letters[idx].exp == 1:
        # before * g * after = 1  =>  g = before^-1 after^-1
        return before.inverse() * after.inverse()
    # before * g^-1 * after = 1  =>  g = after * before
    return after * before


def tietze_simplify(
    pres: GroupPresentation, budget: int = DEFAULT_TIETZE_BUDGET
) -> TietzeResult:
    """Simplify a presentation without changing the group.

    Applies, until stable or the step budget runs out: free and cyclic
    reduction of relators, deletion of empty and duplicate relators
    (duplicates up to rotation and inversion), and elimination of any
    generator that occurs in some relator exactly once with exponent
    +-1.  The shortest enabling relator is used first, ties broken by
    the lowest generator index.
    """
    names = list(pres.generators)
    relators = [W.cyclic_reduce(r) for r in pres.relators]
    steps = 0
    exhausted = False

    def spend() -> bool:
        nonlocal steps, exhausted
        if steps >= budget:
            exhausted = True
            return False
        steps += 1
        return True

    changed = True
    while changed and not exhausted:
        changed = False

        kept: list[Word] = []
        seen_keys = set()
        for rel in relators:
            reduced = W.cyclic_reduce(rel)
            if reduced is not rel and reduced != rel:
                if not spend():
                    kept.append(rel)
                    continue
                changed = True
                rel = reduced
            if not rel:
                if spend():
                    changed = True
                    continue
                kept.append(rel)
                continue
            key = W.cyclic_canonical_key(rel)
            if key in seen_keys:
                if spend():
                    changed = True
                    continue
                kept.append(rel)
                continue
            seen_keys.add(key)
            kept.append(rel)
        relators = kept
        if exhausted:
            break

        candidates = [
            (len(rel), gen, i)
            for i, rel in enumerate(relators)
            for gen in _eliminable(rel)
        ]
        if not candidates:
            continue
        _, gen, rel_idx = min(candidates)
        if not spend():
            break
        image = _solve(relators[rel_idx], gen)
        sub = W.identity_substitution(len(names))
        sub[gen] = image
        remaining = [r for i, r in enumerate(relators) if i != rel_idx]
        substituted = [W.substitute(r, sub) for r in remaining]
        # drop the generator and reindex everything above it
        shift = {g: (g if g < gen else g - 1) for g in range(len(names)) if g != gen}
        relators = [
            W.reduce((shift[g], e) for g, e in r.letters) for r in substituted
        ]
        del names[gen]
        changed = True

    result = GroupPresentation(tuple(names), tuple(relators))
    return TietzeResult(presentation=result, steps=steps, exhausted=exhausted)


# ---------------------------------------------------------------------------
# homomorphism counting


def _evaluate(word: Word, images: tuple[int, ...], group: FiniteGroupTable) -> int:
    out = group.identity
    product = group.product
    for gen, exp in word.letters:
        out = product[out][group.power(images[gen], exp)]
    return out


def count_homomorphisms(
    pres: GroupPresentation,
    group: FiniteGroupTable,
    budget: int = DEFAULT_HOM_BUDGET,
) -> int:
    """Exact number of homomorphisms into a finite group.

    Counts all homomorphisms (not only surjections) by exhausting the
    generator image tuples and checking every relator.  Raises
    BudgetExceeded before starting when the relator-evaluation count
    would pass the budget; simplify the presentation first if that
    happens.
    """
    n = pres.rank
    order = group.order
    tuples = order**n
    if not pres.relators:
        if tuples > budget:
            raise BudgetExceeded(
                f"{tuples} image tuples exceed budget {budget} for {group.name}"
            )
        return tuples
    cost = tuples * len(pres.relators)
    if cost > budget:
        raise BudgetExceeded(
            f"{cost} relator evaluations exceed budget {budget} for {group.name}"
        )
    identity = group.identity
    relators = pres.relators
    count = 0
    for images in itertools.product(range(order), repeat=n):
        for rel in relators:
            if _evaluate(rel, images, group) != identity:
                break
        else:
            count += 1
    return count


# ---------------------------------------------------------------------------
# isomorphism evidence


@dataclass(frozen=True)
class IsoEvidence:
    """Decidable-invariant comparison of two presentations.

    A "consistent" verdict never proves isomorphism; "refuted" is a
    proof of non-isomorphism.
    """

    abelian_match: bool
    abelian_left: AbelianInvariants
    abelian_right: AbelianInvariants
    hom_counts: tuple[tuple[str, int, int], ...]
    verdict: str = field(init=False, default="")

    def __post_init__(self):
        ok = self.abelian_match and all(a == b for _, a, b in self.hom_counts)
        object.__setattr__(self, "verdict", "consistent" if ok else "refuted")


def iso_evidence(
    left: GroupPresentation,
    right: GroupPresentation,
    targets: list[FiniteGroupTable],
    hom_budget: int = DEFAULT_HOM_BUDGET,
    tietze_budget: int = DEFAULT_TIETZE_BUDGET,
    simplify: bool = True,
) -> IsoEvidence:
    """Compare abelianizations and homomorphism counts into the targets."""
    if simplify:
        left_s = tietze_simplify(left, tietze_budget).presentation
        right_s = tietze_simplify(right, tietze_budget).presentation
    else:
        left_s, right_s = left, right
    ab_left = abelianization(left_s)
    ab_right = abelianization(right_s)
    counts = tuple(
        (
            g.name,
            count_homomorphisms(left_s, g, hom_budget),
            count_homomorphisms(right_s, g, hom_budget),
        )
        for g in targets
    )
    return IsoEvidence(
        abelian_match=ab_left == ab_right,
        abelian_left=ab_left,
        abelian_right=ab_right,
        hom_counts=counts,
    )
