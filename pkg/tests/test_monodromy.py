"""Factorizations, transvections and fiber sums."""

import json
import random

import pytest

from lefschetz import words as W
from lefschetz.intmat import identity, matmul
from lefschetz.monodromy import (
    Factorization,
    FiberSumSpec,
    TwistFactor,
    base_factorization,
    euler_characteristic,
    export_factorization,
    export_factorization_json,
    factors_per_copy,
    fiber_sum,
    homology_image,
    is_symplectic,
    resolve_c_exponent,
    substitution_abelianized,
    transvection,
    twist_substitution,
)
from lefschetz.surface import SurfaceModel, curve_catalog, make_curve, surface_relator
from lefschetz.words import Word


class TestBaseFactorization:
    def test_counts_genus_two(self):
        assert len(base_factorization(2, 2)) == 10
        assert len(base_factorization(2, 1)) == 8

    def test_per_copy_counts(self):
        # exponent 2 gives 2g+6 twists, exponent 1 gives 2g+4
        for g in (2, 4, 6):
            assert factors_per_copy(g, 2) == 2 * g + 6
            assert factors_per_copy(g, 1) == 2 * g + 4
            for e in (1, 2):
                assert len(base_factorization(g, e)) == factors_per_copy(g, e)

    def test_odd_genus_needs_config(self):
        with pytest.raises(KeyError):
            base_factorization(3)

    def test_has_section(self):
        assert base_factorization(2).has_section

    def test_factor_order(self):
        factors = base_factorization(2, 2).factors
        labels = [f.curve.label for f in factors]
        assert labels == ["c", "c", "B_2", "B_1", "B_0"] * 2


class TestHomologyIdentity:
    def test_identity_even_genera(self):
        for g in (2, 4, 6, 8):
            report = resolve_c_exponent(g)
            image = homology_image(base_factorization(g, report.resolved))
            assert image == identity(2 * g)

    def test_resolution_report(self):
        reports = [resolve_c_exponent(g) for g in (2, 4, 6, 8)]
        assert len({r.resolved for r in reports}) == 1
        for r in reports:
            assert r.passes[r.resolved]
            if r.ambiguous:
                assert r.warning

    def test_empty_factorization(self):
        empty = Factorization(genus=2, factors=(), has_section=False)
        assert homology_image(empty) == identity(4)

    def test_single_twist_along_a1(self):
        catalog = curve_catalog(2)
        f = Factorization(
            genus=2,
            factors=(TwistFactor(catalog["a_1"]),),
            curves=tuple(sorted(catalog.items())),
        )
        image = homology_image(f)
        # b_1 maps to b_1 - a_1, matching the substitution b_1 -> b_1 a_1^-1
        b1 = [image[i][1] for i in range(4)]
        assert b1 == [-1, 1, 0, 0]


class TestTwistSubstitution:
    def test_zero_power_is_identity(self):
        model = SurfaceModel(2)
        sub = twist_substitution(model, "b_1", 0)
        assert all(sub[g] == Word.gen(g) for g in range(4))

    def test_b_twist_direction(self):
        model = SurfaceModel(2)
        sub = twist_substitution(model, "b_1", 3)
        assert sub[model.a_index(1)] == model.b(1, 3) * model.a(1)

    def test_a_twist_direction(self):
        model = SurfaceModel(2)
        sub = twist_substitution(model, "a_1", 2)
        assert sub[model.b_index(1)] == model.a(1, -2) * model.b(1)

    def test_twist_fixes_surface_relator_exactly(self):
        for g in (2, 3):
            model = SurfaceModel(g)
            rel = surface_relator(g)
            for i in range(1, g + 1):
                for label in (f"a_{i}", f"b_{i}"):
                    for power in (-2, 1, 3):
                        sub = twist_substitution(model, label, power)
                        assert W.substitute(rel, sub) == rel

    def test_rejects_nonstandard_label(self):
        with pytest.raises(ValueError):
            twist_substitution(SurfaceModel(2), "B_1", 1)

    def test_abelianizes_to_transvection(self):
        for g in range(1, 7):
            model = SurfaceModel(g)
            catalog = curve_catalog(g) if g >= 2 else None
            for i in range(1, g + 1):
                for label, klass in ((f"a_{i}", model.a(i)), (f"b_{i}", model.b(i))):
                    for power in (-2, -1, 1, 2, 3):
                        sub = twist_substitution(model, label, power)
                        vec = W.exponent_vector(klass, 2 * g)
                        assert substitution_abelianized(model, sub) == transvection(
                            vec, power
                        )

    def test_inverse_powers_cancel(self):
        model = SurfaceModel(3)
        for label in ("a_2", "b_3"):
            forward = twist_substitution(model, label, 4)
            backward = twist_substitution(model, label, -4)
            composed = W.compose_substitutions(backward, forward)
            assert all(composed[g] == Word.gen(g) for g in range(6))

    def test_surface_relator_image_conjugate(self):
        # the twist fixes the relator's conjugacy class
        model = SurfaceModel(2)
        rel = surface_relator(2)
        image = W.substitute(rel, twist_substitution(model, "b_1", 1))
        assert W.cyclic_canonical_key(image) == W.cyclic_canonical_key(rel)


class TestSymplectic:
    def test_transvections_are_symplectic(self):
        catalog = curve_catalog(3)
        for curve in catalog.values():
            assert is_symplectic(transvection(curve.homology), 3)

    def test_random_factorizations(self):
        rng = random.Random(99)
        genus = 3
        catalog = curve_catalog(genus)
        labels = sorted(catalog)
        standard = [f"a_{i}" for i in range(1, genus + 1)] + [
            f"b_{i}" for i in range(1, genus + 1)
        ]
        for _ in range(100):
            factors = []
            for _ in range(rng.randint(1, 6)):
                curve = catalog[rng.choice(labels)]
                conj = tuple(
                    (rng.choice(standard), rng.choice([-2, -1, 1, 2]))
                    for _ in range(rng.randint(0, 2))
                )
                factors.append(TwistFactor(curve, conj))
            f = Factorization(
                genus=genus,
                factors=tuple(factors),
                curves=tuple(sorted(catalog.items())),
            )
            assert is_symplectic(homology_image(f), genus)


class TestFiberSum:
    def test_identity_copy_unchanged(self):
        base = base_factorization(2)
        spec = FiberSumSpec(base=base, conjugators=(None,))
        assert fiber_sum(spec).factors == base.factors

    def test_substitution_copy(self):
        base = base_factorization(2)
        spec = FiberSumSpec(base=base, conjugators=(None, (("b_1", 2),)))
        out = fiber_sum(spec)
        assert len(out) == 20
        model = SurfaceModel(2)
        sub = twist_substitution(model, "b_1", 2)
        rewritten = out.factors[10:]
        for factor, original in zip(rewritten, base.factors):
            assert factor.curve.word == W.substitute(original.curve.word, sub)

    def test_curve_copy_symbolic(self):
        base = base_factorization(2)
        catalog = base.curve_table()
        spec = FiberSumSpec(base=base, conjugators=(None, catalog["b_1"]))
        out = fiber_sum(spec)
        for factor in out.factors[10:]:
            assert factor.conjugator == (("b_1", 1),)
            assert factor.curve.word == catalog[factor.curve.label].word

    def test_factor_count_additive(self):
        base = base_factorization(4)
        catalog = base.curve_table()
        extras = (None, catalog["b_1"], catalog["b_2"], (("a_1", 1),))
        out = fiber_sum(FiberSumSpec(base=base, conjugators=extras))
        assert len(out) == 4 * len(base)

    def test_homology_is_product_of_conjugated_blocks(self):
        base = base_factorization(2)
        catalog = base.curve_table()
        spec = FiberSumSpec(
            base=base, conjugators=(None, catalog["b_1"], (("a_1", 2),))
        )
        total = homology_image(fiber_sum(spec))
        base_image = homology_image(base)  # the identity
        blocks = [base_image]
        t_b1 = transvection(catalog["b_1"].homology)
        t_b1_inv = transvection(catalog["b_1"].homology, -1)
        blocks.append(matmul(matmul(t_b1, base_image), t_b1_inv))
        t_a1 = transvection(catalog["a_1"].homology, 2)
        t_a1_inv = transvection(catalog["a_1"].homology, -2)
        blocks.append(matmul(matmul(t_a1, base_image), t_a1_inv))
        product = identity(4)
        for block in blocks:
            product = matmul(product, block)
        assert total == product

    def test_needs_at_least_one_copy(self):
        with pytest.raises(ValueError):
            FiberSumSpec(base=base_factorization(2), conjugators=())


class TestEuler:
    def test_torus_times_sphere(self):
        assert euler_characteristic(1, 0) == 0

    def test_sphere_times_sphere(self):
        assert euler_characteristic(0, 0) == 4

    def test_rejects_negative_fibers(self):
        with pytest.raises(ValueError):
            euler_characteristic(2, -1)


class TestExport:
    def test_schema_and_field_order(self):
        base = base_factorization(2, 2)
        payload = export_factorization(base)
        assert list(payload) == ["genus", "has_section", "factors"]
        assert payload["genus"] == 2
        assert payload["has_section"] is True
        assert payload["factors"][0] == {"curve": "c", "conjugator": []}

    def test_deterministic_json(self):
        base = base_factorization(4)
        spec = FiberSumSpec(
            base=base, conjugators=(None, base.curve_table()["b_2"])
        )
        out = fiber_sum(spec)
        assert export_factorization_json(out) == export_factorization_json(out)
        parsed = json.loads(export_factorization_json(out))
        assert parsed["factors"][len(base)]["conjugator"] == [["b_2", 1]]

    def test_rewritten_words_serialize(self):
        base = base_factorization(2)
        out = fiber_sum(FiberSumSpec(base=base, conjugators=(None, (("b_1", 1),))))
        payload = export_factorization(out)
        rewritten = payload["factors"][10:]
        # rewritten cycles have no catalog label, so they export as words
        assert any(" " in f["curve"] or f["curve"].startswith("b_") for f in rewritten)
