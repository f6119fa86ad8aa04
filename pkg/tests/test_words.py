import pytest
from hypothesis import given, strategies as st

from codekit import Alphabet, FiniteLanguage, WordError, affix_sets, overlaps

from oracles import brute_overlaps

AB = Alphabet("ab")

words_ab = st.text(alphabet="ab", min_size=1, max_size=8)


class TestAlphabet:
    def test_order_and_membership(self):
        alpha = Alphabet("bca")
        assert list(alpha) == ["b", "c", "a"]
        assert "c" in alpha and "z" not in alpha
        assert alpha.index("a") == 2

    def test_word_key_orders_length_then_lex(self):
        alpha = Alphabet("ba")
        assert alpha.sort_words(["ab", "b", "a", "ba"]) == ["b", "a", "ba", "ab"]

    def test_rejects_bad_alphabets(self):
        with pytest.raises(WordError):
            Alphabet("")
        with pytest.raises(WordError):
            Alphabet("aa")
        with pytest.raises(WordError):
            Alphabet(["ab"])

    def test_cap_at_64_symbols(self):
        import string

        sixty_four = (string.ascii_letters + string.digits + "+/")[:64]
        Alphabet(sixty_four)
        with pytest.raises(WordError):
            Alphabet(sixty_four + "!")


class TestFiniteLanguage:
    def test_canonical_order_and_dedup(self):
        x = FiniteLanguage(AB, ["ba", "a", "ba", "ab", "b"])
        assert x.words == ("a", "b", "ab", "ba")

    def test_epsilon_rejected_unless_flagged(self):
        with pytest.raises(WordError):
            FiniteLanguage(AB, ["", "a"])
        x = FiniteLanguage(AB, ["", "a"], allow_epsilon=True)
        assert "" in x

    def test_foreign_letters_rejected(self):
        with pytest.raises(WordError):
            FiniteLanguage(AB, ["ac"])


class TestOverlaps:
    def test_ab_ba_overlap(self):
        # u = a, v = a gives a.ba == ab.a
        assert overlaps("ab", "ba") is True

    def test_disjoint_letters(self):
        assert overlaps("aa", "bb") is False

    def test_e4_marker_is_overlapping_free(self):
        z = "a" * 7 + "bbaaaba" + "b" * 7
        assert overlaps(z, z) is False

    def test_empty_words_rejected(self):
        with pytest.raises(WordError):
            overlaps("", "a")
        with pytest.raises(WordError):
            overlaps("a", "")

    @given(words_ab, words_ab)
    def test_matches_split_enumeration_oracle(self, w1, w2):
        assert overlaps(w1, w2) == brute_overlaps(w1, w2)

    @given(words_ab, words_ab)
    def test_reversal_symmetry(self, w1, w2):
        assert overlaps(w1, w2) == overlaps(w2[::-1], w1[::-1])


class TestAffixSets:
    def test_single_word(self):
        sets = affix_sets(FiniteLanguage(AB, ["ab"]))
        assert sets.prefixes.words == ("", "a", "ab")
        assert sets.suffixes.words == ("", "b", "ab")
        assert sets.factors.words == ("", "a", "b", "ab")

    def test_epsilon_language(self):
        sets = affix_sets(FiniteLanguage(AB, [""], allow_epsilon=True))
        assert sets.prefixes.words == sets.suffixes.words == sets.factors.words == ("",)

    def test_two_words(self):
        sets = affix_sets(FiniteLanguage(AB, ["aa", "b"]))
        assert sets.factors.words == ("", "a", "b", "aa")

    @given(st.sets(words_ab, min_size=1, max_size=5))
    def test_factor_closure_fixpoints(self, ws):
        x = FiniteLanguage(AB, ws)
        sets = affix_sets(x)
        assert affix_sets(sets.prefixes).factors == sets.factors
        assert affix_sets(sets.suffixes).factors == sets.factors

    @given(st.sets(words_ab, min_size=1, max_size=5))
    def test_prefix_count_bound(self, ws):
        x = FiniteLanguage(AB, ws)
        assert len(affix_sets(x).prefixes) <= 1 + sum(len(w) for w in x)

    @given(st.sets(words_ab, min_size=1, max_size=5))
    def test_containments(self, ws):
        x = FiniteLanguage(AB, ws)
        sets = affix_sets(x)
        assert x.as_set() <= sets.prefixes.as_set() <= sets.factors.as_set()
        assert x.as_set() <= sets.suffixes.as_set() <= sets.factors.as_set()
