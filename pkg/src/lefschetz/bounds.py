"""The fiber-genus invariant of a finitely presented group: calculators
for the known exact values, the family bounds, and the Euler/signature
(Kotschick) inequality ranges.

For a group G, write g(G) for the least fiber genus of a Lefschetz
fibration with a section whose total space has fundamental group G.
For a presentation with n generators, k relators and total relator
syllable length l, the complexity d = n + l - k gives the general upper
bound g(G) <= 2d; minimal generator counts and the first Betti number
give lower bounds g(G) >= m/2 and g(G) >= b_1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .presentations import GroupPresentation, abelianization


def presentation_complexity(pres: GroupPresentation) -> int:
    """d = n + total syllable length - k (relators taken as given)."""
    return pres.rank + pres.total_syllables() - len(pres.relators)


@dataclass(frozen=True)
class GenusBounds:
    lower: int
    upper: int
    exact: int | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")
        if self.exact is not None and not (self.lower == self.upper == self.exact):
            raise ValueError("exact value must pin both bounds")


@dataclass(frozen=True)
class Family:
    """A group family descriptor for the genus calculators."""

    variant: str
    params: tuple = ()

    # -- constructors -------------------------------------------------
    @staticmethod
    def trivial() -> "Family":
        return Family("trivial")

    @staticmethod
    def z_times_z() -> "Family":
        return Family("z_times_z")

    @staticmethod
    def z() -> "Family":
        return Family("z")

    @staticmethod
    def z_plus_zn(n: int) -> "Family":
        if n < 2:
            raise ValueError("need n >= 2")
        return Family("z_plus_zn", (n,))

    @staticmethod
    def zm_plus_zn(m: int, n: int) -> "Family":
        if m < 2 or n < 2:
            raise ValueError("need m, n >= 2")
        return Family("zm_plus_zn", (m, n))

    @staticmethod
    def zn(n: int) -> "Family":
        if n < 2:
            raise ValueError("need n >= 2")
        return Family("zn", (n,))

    @staticmethod
    def surface(g: int) -> "Family":
        if g < 0:
            raise ValueError("need g >= 0")
        return Family("surface", (g,))

    @staticmethod
    def free(n: int) -> "Family":
        if n < 1:
            raise ValueError("need n >= 1")
        return Family("free", (n,))

    @staticmethod
    def free_times_cyclic(n: int, m: int) -> "Family":
        if n < 1 or m < 2:
            raise ValueError("need n >= 1 and m >= 2")
        return Family("free_times_cyclic", (n, m))

    @staticmethod
    def abelian(n: int, torsions: tuple[int, ...]) -> "Family":
        if n < 0 or any(m < 2 for m in torsions):
            raise ValueError("need n >= 0 and torsion coefficients >= 2")
        if n + len(torsions) < 3:
            raise ValueError("abelian bounds need n + k >= 3")
        return Family("abelian", (n, tuple(torsions)))

    @staticmethod
    def nonorientable(g: int) -> "Family":
        if g < 1:
            raise ValueError("need g >= 1")
        return Family("nonorientable", (g,))

    @staticmethod
    def braid(n: int) -> "Family":
        if n < 2:
            raise ValueError("need n >= 2")
        return Family("braid", (n,))

    @staticmethod
    def sl2z() -> "Family":
        return Family("sl2z")

    @staticmethod
    def presentation(pres: GroupPresentation) -> "Family":
        return Family("presentation", (pres,))


def genus_bounds(family: Family) -> GenusBounds:
    """Genus bounds for a family descriptor.

    Exact values: trivial -> 0, Z x Z -> 1, the genus-g surface group
    -> g, and Z, Z + Z_n, Z_m + Z_n, Z_n, N_1 -> 2.  The remaining
    families get the interval bounds listed in the notes; a raw
    presentation gets lower = max(ceil(b1/2), ceil(m/2)) from its
    abelianization and upper = 2d.
    """
    v, p = family.variant, family.params
    if v == "trivial":
        return GenusBounds(0, 0, 0, ("only the trivial group has genus 0",))
    if v == "z_times_z":
        return GenusBounds(1, 1, 1, ("only Z x Z has genus 1",))
    if v == "z":
        return GenusBounds(2, 2, 2, ("realized by a genus-2 fiber sum",))
    if v == "z_plus_zn":
        return GenusBounds(2, 2, 2, ("realized by a genus-2 fiber sum",))
    if v == "zm_plus_zn":
        return GenusBounds(2, 2, 2, ("realized by a genus-2 fiber sum",))
    if v == "zn":
        return GenusBounds(2, 2, 2, ("realized by a genus-2 fiber sum",))
    if v == "surface":
        g = p[0]
        if g == 0:
            return GenusBounds(0, 0, 0, ("trivial group",))
        return GenusBounds(g, g, g, ("surface groups attain the m/2 bound",))
    if v == "free":
        n = p[0]
        return GenusBounds(n, 2 * n, None, ("lower: Lagrangian cup-product bound",))
    if v == "free_times_cyclic":
        n, m = p
        return GenusBounds(
            n + 1, 2 * n + 2, None, (f"free rank {n} with Z_{m}: covering bound",)
        )
    if v == "abelian":
        n, torsions = p
        k = len(torsions)
        return GenusBounds(
            math.ceil((n + k + 1) / 2),
            2 * n + 2 * k + 1,
            None,
            ("upper: commutator and torsion loops at genus 2n+2k+1",),
        )
    if v == "nonorientable":
        g = p[0]
        if g == 1:
            return GenusBounds(2, 2, 2, ("pi_1(N_1) = Z_2",))
        return GenusBounds(
            math.ceil((g + 1) / 2), 2 * g, None, ("upper: squares loop at genus 2g",)
        )
    if v == "braid":
        n = p[0]
        return GenusBounds(2, 2 * n + 1, None, ("upper: genus 2n+1 construction",))
    if v == "sl2z":
        return GenusBounds(
            2, 4, None, ("genus-4 construction improves the general bound 6",)
        )
    if v == "presentation":
        pres = p[0]
        invariants = abelianization(pres)
        b1 = invariants.free_rank
        m_hat = invariants.minimal_generators()
        lower = max(math.ceil(b1 / 2), math.ceil(m_hat / 2))
        upper = 2 * presentation_complexity(pres)
        notes = (
            f"lower from b1 = {b1} and abelianization generators {m_hat}",
            f"upper 2d with d = {presentation_complexity(pres)}",
        )
        return GenusBounds(lower, max(lower, upper), None, notes)
    raise ValueError(f"unknown family {v!r}")


# ---------------------------------------------------------------------------
# the symbolic bounds table


@dataclass(frozen=True)
class BoundsRow:
    family: str
    params: str
    lower: str
    upper: str
    exact: str
    note: str


def bounds_table() -> list[BoundsRow]:
    """The known-values table, with symbolic parameters."""
    return [
        BoundsRow("trivial", "", "0", "0", "0", "only group of genus 0"),
        BoundsRow("ZxZ", "", "1", "1", "1", "only group of genus 1"),
        BoundsRow("Z", "", "2", "2", "2", "genus-2 fiber sum"),
        BoundsRow("Z+Z_n", "n>=2", "2", "2", "2", "genus-2 fiber sum"),
        BoundsRow("Z_m+Z_n", "m,n>=2", "2", "2", "2", "genus-2 fiber sum"),
        BoundsRow("Z_n", "n>=2", "2", "2", "2", "genus-2 fiber sum"),
        BoundsRow("surface", "g", "g", "g", "g", "m/2 bound is attained"),
        BoundsRow("N_1", "", "2", "2", "2", "pi_1(N_1) = Z_2"),
        BoundsRow("free", "n", "n", "2n", "", "lower: epimorphism bound"),
        BoundsRow("free*Z_m", "n, m>=2", "n+1", "2n+2", "", "covering-space bound"),
        BoundsRow(
            "abelian",
            "n, k",
            "ceil((n+k+1)/2)",
            "2n+2k+1",
            "",
            "commutator and torsion loops",
        ),
        BoundsRow(
            "nonorientable", "g>=2", "ceil((g+1)/2)", "2g", "", "squares loop at 2g"
        ),
        BoundsRow("braid", "n", "2", "2n+1", "", "loops at genus 2n+1"),
        BoundsRow("SL2Z", "", "2", "4", "", "genus-4 construction beats 2d = 6"),
    ]


def bounds_table_csv() -> str:
    lines = ["family,params,lower,upper,exact,note"]
    for row in bounds_table():
        fields = [row.family, row.params, row.lower, row.upper, row.exact, row.note]
        quoted = [f'"{f}"' if "," in f else f for f in fields]
        lines.append(",".join(quoted))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Euler characteristic / signature invariant ranges


@dataclass(frozen=True)
class KotschickBounds:
    """Ranges for q = inf chi(X) and p = inf (chi(X) - |sigma(X)|).

    q sits in [2 - 2 b1 + b2, 2(1 - d)].  The guaranteed lower bound
    for p uses the genus upper bound (2 - 4g is decreasing in g); the
    value from the genus lower bound is reported in the notes since it
    applies only if the genus attains it.  An empty q interval means
    the supplied presentation data (its d) cannot be optimal.
    """

    q_lower: int
    q_upper: int
    p_lower: int
    p_upper: int
    feasible: bool
    notes: tuple[str, ...] = ()


def kotschick_bounds(
    b1: int, b2: int, d: int, genus: GenusBounds
) -> KotschickBounds:
    if b1 < 0 or b2 < 0:
        raise ValueError("Betti numbers must be nonnegative")
    q_lower = 2 - 2 * b1 + b2
    q_upper = 2 * (1 - d)
    genus_for_bound = genus.exact if genus.exact is not None else genus.upper
    p_candidates = {
        "betti": 2 - 2 * b1,
        "genus": 2 - 4 * genus_for_bound,
    }
    p_lower = max(p_candidates.values())
    p_upper = q_upper
    notes = [
        f"p >= 2 - 2 b1 = {p_candidates['betti']}",
        f"p >= 2 - 4 g with g <= {genus_for_bound}: {p_candidates['genus']} (guaranteed)",
    ]
    if genus.exact is None:
        optimistic = 2 - 4 * genus.lower
        notes.append(
            f"2 - 4 g = {optimistic} if the genus attains its lower bound {genus.lower}"
        )
    feasible = q_lower <= q_upper
    if not feasible:
        notes.append(
            "q interval is empty: the supplied presentation complexity d is "
            "not optimal for this group"
        )
    return KotschickBounds(
        q_lower=q_lower,
        q_upper=q_upper,
        p_lower=p_lower,
        p_upper=p_upper,
        feasible=feasible,
        notes=tuple(notes),
    )
