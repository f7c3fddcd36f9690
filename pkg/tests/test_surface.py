"""Surface model, curve catalog and the intersection pairing."""

import random

import pytest
from hypothesis import given, strategies as st

from lefschetz import words as W
from lefschetz.presentations import serialize_word
from lefschetz.surface import (
    CurveRef,
    SurfaceModel,
    Witness,
    curve_catalog,
    homology_class,
    load_curve_config,
    make_curve,
    surface_relator,
    symplectic_pairing,
)
from lefschetz.words import Word


class TestSurfaceRelator:
    def test_torus(self):
        assert surface_relator(1) == W.commutator(Word.gen(0), Word.gen(1))

    def test_genus_two_length(self):
        rel = surface_relator(2)
        assert len(rel) == 8
        m = SurfaceModel(2)
        assert rel == W.commutator(m.a(1), m.b(1)) * W.commutator(m.a(2), m.b(2))

    def test_abelianizes_to_zero(self):
        for g in range(1, 7):
            assert homology_class(SurfaceModel(g), surface_relator(g)) == (0,) * (2 * g)


class TestCatalog:
    def test_needs_genus_two(self):
        with pytest.raises(ValueError):
            curve_catalog(1)

    def test_b0_word(self):
        m = SurfaceModel(2)
        assert curve_catalog(2)["B_0"].word == m.b(1) * m.b(2)

    def test_b1_word_genus_two(self):
        m = SurfaceModel(2)
        c2 = W.commutator(m.a(1), m.b(1)) * W.commutator(m.a(2), m.b(2))
        expected = m.a(1) * m.b(1) * m.b(2) * c2 * m.a(2)
        assert curve_catalog(2)["B_1"].word == expected

    def test_b1_homology_genus_two(self):
        assert curve_catalog(2)["B_1"].homology == (1, 1, 1, 1)

    def test_entry_labels(self):
        for g in (2, 3, 4, 5):
            catalog = curve_catalog(g)
            for i in range(1, g + 1):
                assert f"a_{i}" in catalog and f"b_{i}" in catalog
            for j in range(g + 1):
                assert f"B_{j}" in catalog
            assert ("c" in catalog) == (g % 2 == 0)

    def test_homology_matches_word(self):
        for g in range(2, 9):
            model = SurfaceModel(g)
            for curve in curve_catalog(g).values():
                assert curve.homology == homology_class(model, curve.word)

    def test_witnesses(self):
        catalog = curve_catalog(3)
        assert len(catalog["b_1"].witnesses) == 2
        assert len(catalog["a_2"].witnesses) == 1

    def test_b0_has_no_a_letters(self):
        # killing every b (and any a) sends B_0 to the identity
        for g in (2, 3, 4):
            model = SurfaceModel(g)
            sub = {model.b_index(i): Word() for i in range(1, g + 1)}
            sub.update({model.a_index(i): Word() for i in range(1, g + 1)})
            assert W.substitute(curve_catalog(g)["B_0"].word, sub) == Word()

    def test_golden_words_genus_three(self):
        catalog = curve_catalog(3)
        names = SurfaceModel(3).generator_names()
        serialized = {
            label: serialize_word(catalog[label].word, names)
            for label in ("B_0", "B_1", "B_2", "B_3")
        }
        assert serialized == {
            "B_0": "b_1 b_2 b_3",
            "B_1": "a_1 b_1 b_2 b_3 a_1^-1 b_1^-1 a_1 b_1 a_2^-1 b_2^-1 a_2 b_2 "
            "a_3^-1 b_3^-1 a_3 b_3 a_3",
            "B_2": "a_1 b_2 a_1^-1 b_1^-1 a_1 b_1 a_2^-1 b_2^-1 a_2 b_2 a_3",
            "B_3": "a_2 b_2 a_1^-1 b_1^-1 a_1 b_1 a_2^-1 b_2^-1 a_2 b_2 a_2",
        }

    def test_golden_words_genus_two(self):
        catalog = curve_catalog(2)
        names = SurfaceModel(2).generator_names()
        serialized = {
            label: serialize_word(catalog[label].word, names)
            for label in ("B_0", "B_1", "B_2", "c")
        }
        assert serialized == {
            "B_0": "b_1 b_2",
            "B_1": "a_1 b_1 b_2 a_1^-1 b_1^-1 a_1 b_1 a_2^-1 b_2^-1 a_2 b_2 a_2",
            "B_2": "b_1^-1 a_1 b_1 a_2",
            "c": "a_1^-1 b_1^-1 a_1 b_1",
        }

    def test_stable_across_runs(self):
        assert curve_catalog(4) == curve_catalog(4)


class TestPairing:
    def test_dual_pair(self):
        assert symplectic_pairing((1, 0, 0, 0), (0, 1, 0, 0)) == 1

    def test_disjoint_classes(self):
        assert symplectic_pairing((1, 0, 0, 0), (0, 0, 1, 0)) == 0

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            symplectic_pairing((1, 0), (1, 0, 0, 0))

    vectors = st.lists(st.integers(-5, 5), min_size=6, max_size=6)

    @given(vectors)
    def test_isotropic(self, u):
        assert symplectic_pairing(u, u) == 0

    @given(vectors, vectors)
    def test_antisymmetric(self, u, v):
        assert symplectic_pairing(u, v) == -symplectic_pairing(v, u)

    @given(vectors, vectors, vectors)
    def test_bilinear(self, u, v, w):
        s = [x + y for x, y in zip(v, w)]
        assert symplectic_pairing(u, s) == symplectic_pairing(u, v) + symplectic_pairing(u, w)


class TestCurveRef:
    def test_homology_is_derived(self):
        curve = make_curve("x", Word.gen(0, 2), genus=2)
        assert curve.homology == (2, 0, 0, 0)

    def test_at_genus_pads(self):
        curve = make_curve("x", Word.gen(0), genus=2)
        padded = curve.at_genus(4)
        assert padded.homology == (1, 0, 0, 0, 0, 0, 0, 0)
        assert padded.word == curve.word

    def test_at_genus_rejects_shrinking(self):
        curve = make_curve("x", Word.gen(0), genus=3)
        with pytest.raises(ValueError):
            curve.at_genus(2)

    def test_witness_counts(self):
        with pytest.raises(ValueError):
            Witness("B_1", count=2)


class TestConfig:
    def test_load(self):
        config = load_curve_config(
            {
                "curves": [
                    {"label": "a", "word": "a_4", "witnesses": [["B_7", 1]]},
                    {"label": "b", "word": "b_4"},
                ]
            },
            genus=7,
        )
        assert set(config) == {"a", "b"}
        assert config["a"].provenance == "user"
        assert config["a"].witnesses == (Witness("B_7"),)
        assert config["b"].word == SurfaceModel(7).b(4)

    def test_catalog_merges_config(self):
        config = load_curve_config(
            {"curves": [{"label": "a", "word": "a_2"}]}, genus=3
        )
        catalog = curve_catalog(3, config)
        assert catalog["a"].word == SurfaceModel(3).a(2)
