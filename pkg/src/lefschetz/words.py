"""Free-group word algebra over an indexed generator alphabet.

Words are kept in syllable form: a tuple of (generator, exponent) pairs
with nonzero exponents in which adjacent pairs never share a generator.
The empty tuple is the identity.  Syllable form makes the syllable
length of a reduced word just ``len(word.letters)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple


class Letter(NamedTuple):
    """One maximal generator power x_gen^exp, exp != 0."""

    gen: int
    exp: int


@dataclass(frozen=True)
class Word:
    """A freely reduced word in syllable-merged canonical form."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for i, let in enumerate(self.letters):
            if let.exp == 0:
                raise ValueError("zero exponent in canonical word")
            if let.gen < 0:
                raise ValueError("negative generator index")
            if i and self.letters[i - 1].gen == let.gen:
                raise ValueError("unmerged syllables in canonical word")

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return Word()
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __len__(self) -> int:
        """Total letter length, the sum of |exponent| over syllables."""
        return sum(abs(let.exp) for let in self.letters)

    def inverse(self) -> "Word":
        return Word(tuple(Letter(g, -e) for g, e in reversed(self.letters)))

    def __invert__(self) -> "Word":
        return self.inverse()

    def max_generator(self) -> int:
        """Largest generator index used, or -1 for the identity."""
        return max((let.gen for let in self.letters), default=-1)

    @staticmethod
    def gen(g: int, e: int = 1) -> "Word":
        return Word((Letter(g, e),)) if e else Word()


def reduce(raw: Iterable[tuple[int, int]], alphabet_size: int | None = None) -> Word:
    """Freely reduce a raw letter sequence into canonical syllable form.

    Merges adjacent same-generator letters, drops zero exponents and
    cancels cascades, e.g. x y^-1 y x^-1 collapses to the identity.
    Idempotent on canonical input.
    """
    out: list[Letter] = []
    for gen, exp in raw:
        if gen < 0 or (alphabet_size is not None and gen >= alphabet_size):
            raise IndexError(f"generator index {gen} out of range")
        if exp == 0:
            continue
        if out and out[-1].gen == gen:
            merged = out[-1].exp + exp
            out.pop()
            if merged:
                out.append(Letter(gen, merged))
        else:
            out.append(Letter(gen, exp))
    return Word(tuple(out))


def multiply(u: Word, v: Word) -> Word:
    return reduce(tuple(u.letters) + tuple(v.letters))


def invert(u: Word) -> Word:
    return u.inverse()


def conjugate(u: Word, by: Word) -> Word:
    """u^by = by^-1 u by."""
    return reduce(tuple(by.inverse().letters) + tuple(u.letters) + tuple(by.letters))


def commutator(x: Word, y: Word) -> Word:
    """[x, y] = x^-1 y^-1 x y."""
    return reduce(
        tuple(x.inverse().letters)
        + tuple(y.inverse().letters)
        + tuple(x.letters)
        + tuple(y.letters)
    )


def cyclic_reduce(w: Word) -> Word:
    """Shortest syllable form within the conjugacy class of w.

    Repeatedly merges the first and last syllables when they share a
    generator (conjugating by a power of that generator), dropping the
    pair when the exponents cancel.
    """
    letters = list(w.letters)
    while len(letters) >= 2 and letters[0].gen == letters[-1].gen:
        gen = letters[0].gen
        total = letters[0].exp + letters[-1].exp
        letters = letters[1:-1]
        if total:
            # interior is nonempty and starts with a different generator,
            # so the merged syllable leaves the word canonical and cyclically
            # reduced
            letters.insert(0, Letter(gen, total))
            break
    return Word(tuple(letters))


def syllable_length(w: Word) -> int:
    """Number of maximal generator-power blocks of a reduced word."""
    return len(w.letters)


def substitute(w: Word, images: Mapping[int, Word]) -> Word:
    """Homomorphic image of w under generator -> word, freely reduced.

    Every generator occurring in w must have an image; identity entries
    are represented by single-generator words mapping to themselves.
    """
    raw: list[tuple[int, int]] = []
    for gen, exp in w.letters:
        try:
            image = images[gen]
        except KeyError:
            raise KeyError(f"no image for generator {gen}") from None
        if len(image.letters) == 1:
            g, e = image.letters[0]
            raw.append((g, e * exp))
            continue
        block = image.letters if exp > 0 else image.inverse().letters
        for _ in range(abs(exp)):
            raw.extend(block)
    return reduce(raw)


def compose_substitutions(
    outer: Mapping[int, Word], inner: Mapping[int, Word]
) -> dict[int, Word]:
    """Map sending g to substitute(inner[g], outer)."""
    return {g: substitute(w, outer) for g, w in inner.items()}


def identity_substitution(alphabet_size: int) -> dict[int, Word]:
    return {g: Word.gen(g) for g in range(alphabet_size)}


def exponent_vector(w: Word, alphabet_size: int) -> tuple[int, ...]:
    """Total exponent sum per generator (the abelianized class of w)."""
    vec = [0] * alphabet_size
    for gen, exp in w.letters:
        if gen >= alphabet_size:
            raise IndexError(f"generator index {gen} out of range")
        vec[gen] += exp
    return tuple(vec)


def cyclic_canonical_key(w: Word) -> tuple[Letter, ...]:
    """Canonical representative of w up to cyclic rotation and inversion.

    Used to detect duplicate relators; two words get the same key iff
    one is a cyclic rotation of the other or of its inverse.
    """
    base = cyclic_reduce(w)
    candidates = []
    for word in (base, base.inverse()):
        lets = word.letters
        n = len(lets)
        if n == 0:
            return ()
        for shift in range(n):
            rotated = lets[shift:] + lets[:shift]
            candidates.append(rotated)
    return min(candidates)
