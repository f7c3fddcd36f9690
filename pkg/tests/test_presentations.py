"""Parser, serializer, abelianization, Tietze and homomorphism counting."""

import itertools
import random

import pytest

from lefschetz import words as W
from lefschetz.finite_groups import get_target, symmetric_group
from lefschetz.presentations import (
    AbelianInvariants,
    BudgetExceeded,
    GroupPresentation,
    ParseError,
    abelianization,
    count_homomorphisms,
    iso_evidence,
    parse_presentation,
    serialize_presentation,
    tietze_simplify,
)
from lefschetz.words import Word


class TestParser:
    def test_basic(self):
        pres = parse_presentation("x, y | x^2 y^3, x^4")
        assert pres.generators == ("x", "y")
        assert pres.relators == (
            W.reduce([(0, 2), (1, 3)]),
            W.reduce([(0, 4)]),
        )

    def test_free_group(self):
        pres = parse_presentation("x |")
        assert pres.generators == ("x",)
        assert pres.relators == ()

    def test_torus_relator(self):
        pres = parse_presentation("a, b | a^-1 b^-1 a b")
        assert pres.relators == (W.commutator(Word.gen(0), Word.gen(1)),)

    def test_unknown_generator(self):
        with pytest.raises(ParseError, match="unknown generator"):
            parse_presentation("x | x y")

    def test_zero_exponent(self):
        with pytest.raises(ParseError, match="zero exponent"):
            parse_presentation("x | x^0")

    def test_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            parse_presentation("x |\n x^0")
        assert err.value.line == 2

    def test_missing_bar(self):
        with pytest.raises(ParseError):
            parse_presentation("x, y")

    def test_duplicate_generator(self):
        with pytest.raises(ParseError):
            parse_presentation("x, x | x^2")

    def test_relators_are_reduced(self):
        pres = parse_presentation("x, y | x y y^-1 x")
        assert pres.relators == (Word.gen(0, 2),)

    def test_trivial_relator_dropped(self):
        pres = parse_presentation("x | x x^-1")
        assert pres.relators == ()

    def test_whitespace_insignificant(self):
        a = parse_presentation("x,y|x^2y^3")
        b = parse_presentation(" x , y |  x^2   y^3 ")
        assert a == b

    def test_round_trip_examples(self):
        for text in ("x, y | x^2 y^3, x^4", "x |", "a, b | a^-1 b^-1 a b"):
            pres = parse_presentation(text)
            assert parse_presentation(serialize_presentation(pres)) == pres

    def test_round_trip_fuzz(self):
        rng = random.Random(3)
        for _ in range(100):
            n = rng.randint(1, 4)
            gens = tuple(f"g{i}" for i in range(n))
            relators = []
            for _ in range(rng.randint(0, 3)):
                pairs = [
                    (rng.randrange(n), rng.choice([-3, -2, -1, 1, 2, 3]))
                    for _ in range(rng.randint(1, 6))
                ]
                relators.append(W.reduce(pairs))
            pres = GroupPresentation(gens, tuple(relators))
            assert parse_presentation(serialize_presentation(pres)) == pres


class TestAbelianization:
    def test_cyclic(self):
        for n in (2, 3, 12):
            pres = parse_presentation(f"x | x^{n}")
            assert abelianization(pres) == AbelianInvariants(0, (n,))

    def test_sl2z(self):
        pres = parse_presentation("x, y | x^2 y^3, x^4")
        assert abelianization(pres) == AbelianInvariants(0, (12,))

    def test_free(self):
        for n in (1, 2, 5):
            gens = ", ".join(f"x{i}" for i in range(n))
            pres = parse_presentation(f"{gens} |")
            assert abelianization(pres) == AbelianInvariants(n)

    def test_torsion_chain_validated(self):
        with pytest.raises(ValueError):
            AbelianInvariants(0, (4, 6))

    def test_describe(self):
        assert AbelianInvariants(2, (2,)).describe() == "Z^2 + Z_2"
        assert AbelianInvariants(0).describe() == "0"


class TestTietze:
    def test_commuting_pair_with_dead_generator(self):
        pres = parse_presentation("a, b | b, a b a^-1 b^-1")
        result = tietze_simplify(pres)
        assert result.presentation.generators == ("a",)
        assert result.presentation.relators == ()
        assert not result.exhausted

    def test_single_relator_generator(self):
        result = tietze_simplify(parse_presentation("x | x"))
        assert result.presentation == GroupPresentation((), ())

    def test_budget_flag(self):
        pres = parse_presentation("a, b | b, a b a^-1 b^-1")
        result = tietze_simplify(pres, budget=1)
        assert result.exhausted

    def test_duplicate_relators_removed(self):
        pres = parse_presentation("x, y | x y, y x, y^-1 x^-1")
        result = tietze_simplify(pres)
        assert len(result.presentation.relators) == 0
        assert len(result.presentation.generators) == 1


def random_presentation(rng, max_gens=3, max_relators=3, max_syllables=4):
    n = rng.randint(1, max_gens)
    gens = tuple(f"x{i}" for i in range(n))
    relators = []
    for _ in range(rng.randint(0, max_relators)):
        pairs = [
            (rng.randrange(n), rng.choice([-2, -1, 1, 2]))
            for _ in range(rng.randint(1, max_syllables))
        ]
        relators.append(W.reduce(pairs))
    return GroupPresentation(gens, tuple(relators))


class TestTietzeInvariance:
    def test_fuzz_abelianization_and_hom_counts(self):
        rng = random.Random(2024)
        s3 = get_target("S3")
        z4 = get_target("Z4")
        for _ in range(200):
            pres = random_presentation(rng)
            simplified = tietze_simplify(pres).presentation
            assert abelianization(pres) == abelianization(simplified)
            for target in (s3, z4):
                assert count_homomorphisms(pres, target) == count_homomorphisms(
                    simplified, target
                )


class TestHomCounting:
    def test_trivial_presentation(self):
        trivial = GroupPresentation((), ())
        for name in ("S3", "Z4", "A4"):
            assert count_homomorphisms(trivial, get_target(name)) == 1

    def test_involution_into_s3(self):
        pres = parse_presentation("x | x^2")
        assert count_homomorphisms(pres, get_target("S3")) == 4

    def test_commuting_pairs_s3(self):
        pres = parse_presentation("a, b | a^-1 b^-1 a b")
        # oracle: enumerate commuting pairs directly off the table
        s3 = get_target("S3")
        oracle = sum(
            1
            for x in range(6)
            for y in range(6)
            if s3.product[x][y] == s3.product[y][x]
        )
        assert count_homomorphisms(pres, s3) == oracle == 18

    def test_free_group_counts(self):
        for n in (1, 2, 3):
            gens = ", ".join(f"x{i}" for i in range(n))
            pres = parse_presentation(f"{gens} |")
            for name in ("S3", "Z4"):
                g = get_target(name)
                assert count_homomorphisms(pres, g) == g.order**n

    def test_budget(self):
        pres = parse_presentation("x, y, z | x^2")
        with pytest.raises(BudgetExceeded):
            count_homomorphisms(pres, get_target("S4"), budget=100)

    def test_s3_self_count_oracle(self):
        # pairs of S3 elements satisfying x^2 = y^3 = (xy)^2 = 1
        s3 = symmetric_group(3)
        count = 0
        for x, y in itertools.product(range(6), repeat=2):
            if (
                s3.power(x, 2) == s3.identity
                and s3.power(y, 3) == s3.identity
                and s3.power(s3.product[x][y], 2) == s3.identity
            ):
                count += 1
        assert count == 10
        pres = parse_presentation("x, y | x^2, y^3, x y x y")
        assert count_homomorphisms(pres, s3) == 10


class TestIsoEvidence:
    def test_reflexive(self):
        pres = parse_presentation("x | x^3")
        ev = iso_evidence(pres, pres, [get_target("S3")])
        assert ev.verdict == "consistent"

    def test_refuted_by_abelianization(self):
        p = parse_presentation("x | x^2")
        q = parse_presentation("x | x^3")
        ev = iso_evidence(p, q, [get_target("S3")])
        assert ev.verdict == "refuted"
        assert not ev.abelian_match

    def test_refuted_z2_vs_z(self):
        p = parse_presentation("x, y | x^-1 y^-1 x y")
        q = parse_presentation("x |")
        ev = iso_evidence(p, q, [get_target("Z4")])
        assert ev.verdict == "refuted"

    def test_hom_count_refutes_nonisomorphic_pair(self):
        s3_pres = parse_presentation("x, y | x^2, y^3, x y x y")
        z6_pres = parse_presentation("x | x^6")
        ev = iso_evidence(s3_pres, z6_pres, [get_target("S3")])
        assert ev.verdict == "refuted"
