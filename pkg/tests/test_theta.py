import itertools

import pytest
from hypothesis import given, strategies as st

from codekit import (
    ANTIMORPHISM,
    MORPHISM,
    Alphabet,
    FiniteLanguage,
    RegularLanguage,
    ThetaMap,
    WordError,
    is_theta_invariant,
)
from codekit.families import AB, ABC, CYCLE_ANTI, MIRROR, SWAP_ANTI, SWAP_AUTO

from corpus import ABCD, CD_SWAP_ANTI, CORPUS_FINITE, THETA_MAPS_AB


class TestConstruction:
    def test_unlisted_letters_fixed(self):
        t = ThetaMap(ABC, {"a": "b", "b": "a"}, MORPHISM)
        assert t.mapping == {"a": "b", "b": "a", "c": "c"}

    def test_non_bijection_rejected(self):
        with pytest.raises(WordError):
            ThetaMap(AB, {"a": "b"}, MORPHISM)  # b also maps to b

    def test_foreign_letter_rejected(self):
        with pytest.raises(WordError):
            ThetaMap(AB, {"a": "c"}, MORPHISM)


class TestApply:
    def test_swap_antimorphism_fixes_ab(self):
        assert SWAP_ANTI.apply("ab") == "ab"

    def test_four_letter_antimorphism(self):
        assert CD_SWAP_ANTI.apply("abcd") == "cdba"
        assert CD_SWAP_ANTI.apply("cd") == "cd"

    def test_identity(self):
        t = ThetaMap.identity(AB)
        for w in ("", "a", "abba"):
            assert t.apply(w) == w

    def test_length_preserved(self):
        for t in THETA_MAPS_AB:
            assert len(t.apply("abbab")) == 5

    def test_foreign_word_rejected(self):
        with pytest.raises(WordError):
            SWAP_ANTI.apply("abc")


class TestOrder:
    def test_swap_morphism_order_two(self):
        assert SWAP_AUTO.order == 2

    def test_identity_order_one(self):
        assert ThetaMap.identity(AB).order == 1

    def test_three_cycle_antimorphism_order_six(self):
        assert CYCLE_ANTI.order == 6

    def test_three_cycle_order_by_exhaustion(self):
        # Independent derivation: smallest power fixing every length-2 word.
        words = ["".join(p) for p in itertools.product("abc", repeat=2)]
        for power in range(1, 13):
            if all(CYCLE_ANTI.apply_power(w, power) == w for w in words):
                break
        assert power == CYCLE_ANTI.order == 6

    def test_mirror_order_two(self):
        assert MIRROR.order == 2

    def test_unary_alphabet_falls_back_to_permutation_order(self):
        single = Alphabet("a")
        assert ThetaMap(single, {}, ANTIMORPHISM).order == 1

    def test_order_is_minimal_on_words(self):
        samples = ["a", "ab", "abc", "cab", "bcaa"]
        for theta in (CYCLE_ANTI, ThetaMap(ABC, {"a": "b", "b": "c", "c": "a"}, MORPHISM)):
            k = theta.order
            for w in samples:
                assert theta.apply_power(w, k) == w
            for smaller in range(1, k):
                assert any(theta.apply_power(w, smaller) != w for w in samples)


class TestOrbit:
    def test_e4_marker_orbit(self):
        z = "a" * 7 + "bbaaaba" + "b" * 7
        expected = {z, "a" * 7 + "babbbaa" + "b" * 7}
        assert SWAP_ANTI.orbit(z).as_set() == expected

    def test_identity_orbit_is_singleton(self):
        assert ThetaMap.identity(AB).orbit("abab").words == ("abab",)

    def test_three_cycle_orbit_of_ab(self):
        assert CYCLE_ANTI.orbit("ab").as_set() == {"ab", "cb", "ca", "ba", "bc", "ac"}

    def test_orbit_members_share_length(self):
        for w in ("a", "ab", "abc"):
            assert {len(v) for v in CYCLE_ANTI.orbit(w)} == {len(w)}

    def test_negative_powers_wrap(self):
        w = "abc"
        assert CYCLE_ANTI.apply_power(w, -1) == CYCLE_ANTI.apply_power(w, CYCLE_ANTI.order - 1)


def _exhaustive_pairs(letters, max_len):
    words = [""] + [
        "".join(p)
        for n in range(1, max_len + 1)
        for p in itertools.product(letters, repeat=n)
    ]
    return words


class TestMorphismLaws:
    def test_products_up_to_length_six_exhaustive(self):
        # Every product u.v with |u|, |v| <= 3 over three letters.
        words = _exhaustive_pairs("abc", 3)
        morph = ThetaMap(ABC, {"a": "b", "b": "c", "c": "a"}, MORPHISM)
        for u in words:
            for v in words:
                assert morph.apply(u + v) == morph.apply(u) + morph.apply(v)
                assert CYCLE_ANTI.apply(u + v) == CYCLE_ANTI.apply(v) + CYCLE_ANTI.apply(u)

    @given(st.text(alphabet="ab", max_size=6), st.text(alphabet="ab", max_size=6))
    def test_laws_on_random_pairs(self, u, v):
        for t in THETA_MAPS_AB:
            if t.is_antimorphism:
                assert t.apply(u + v) == t.apply(v) + t.apply(u)
            else:
                assert t.apply(u + v) == t.apply(u) + t.apply(v)


class TestApplyRegular:
    def test_mirror_antimorphism_fixes_palindromic_code(self):
        # Every word of b|ab*a is a palindrome, so the mirror map fixes it.
        lang = RegularLanguage.from_regex("b|ab*a", AB)
        assert MIRROR.apply_regular(lang) == lang

    def test_swap_antimorphism_moves_palindromic_code(self):
        lang = RegularLanguage.from_regex("b|ab*a", AB)
        assert SWAP_ANTI.apply_regular(lang) == RegularLanguage.from_regex("a|ba*b", AB)

    def test_identity_fixes_everything(self):
        lang = RegularLanguage.from_regex("(a|b)*a", AB)
        assert ThetaMap.identity(AB).apply_regular(lang) == lang

    def test_mirror_reverses_singleton(self):
        lang = RegularLanguage.from_words(AB, ["ab"])
        assert MIRROR.apply_regular(lang) == RegularLanguage.from_words(AB, ["ba"])

    def test_agrees_with_apply_on_finite_languages(self):
        for x in CORPUS_FINITE:
            if x.alphabet != AB:
                continue
            for t in THETA_MAPS_AB:
                direct = RegularLanguage.from_finite(t.apply_language(x))
                lifted = t.apply_regular(RegularLanguage.from_finite(x))
                assert direct == lifted

    def test_invariant_generators_give_invariant_star(self):
        # A star generated by an invariant finite set is itself invariant.
        for t in THETA_MAPS_AB:
            for x in CORPUS_FINITE:
                if x.alphabet != AB:
                    continue
                closed = t.orbit_language(x)
                star = RegularLanguage.from_finite(closed).star()
                assert t.apply_regular(star) == star
                assert is_theta_invariant(star, t)
