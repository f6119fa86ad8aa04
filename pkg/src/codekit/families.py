"""Generators for the concrete code families used as the golden corpus.

Each family carries the map it is designed around and a frozen record of
its expected properties, so a test or a report can regenerate the set and
re-derive every claim. The three parameterized bifix families share one
construction: take all words of one length, remove those that extend a
designated middle set on either side, then add the middle set and its
two-sided extensions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import RegularLanguage
from .theta import ANTIMORPHISM, MORPHISM, ThetaMap
from .words import Alphabet, FiniteLanguage

AB = Alphabet("ab")
ABC = Alphabet("abc")

SWAP_ANTI = ThetaMap(AB, {"a": "b", "b": "a"}, ANTIMORPHISM)
SWAP_AUTO = ThetaMap(AB, {"a": "b", "b": "a"}, MORPHISM)
MIRROR = ThetaMap(AB, {}, ANTIMORPHISM)
CYCLE_ANTI = ThetaMap(ABC, {"a": "b", "b": "c", "c": "a"}, ANTIMORPHISM)

FAMILY_NAMES = (
    "uniform",
    "e00",
    "e2",
    "e21",
    "e22a",
    "e22b",
    "c72",
    "e3",
    "e33x",
    "e33z",
)


@dataclass(frozen=True)
class ExpectedProperties:
    is_code: bool
    prefix: bool
    suffix: bool
    complete: bool
    theta_invariant: bool

    @property
    def bifix(self) -> bool:
        return self.prefix and self.suffix


@dataclass(frozen=True)
class FamilySpec:
    name: str
    param: int | None = None


@dataclass(frozen=True)
class GeneratedFamily:
    spec: FamilySpec
    alphabet: Alphabet
    theta: ThetaMap
    words: FiniteLanguage | None
    regex: str | None
    expected: ExpectedProperties

    def language(self) -> RegularLanguage:
        if self.words is not None:
            return RegularLanguage.from_finite(self.words)
        return RegularLanguage.from_regex(self.regex, self.alphabet)


def _middle_set_code(alphabet: Alphabet, n: int, middle: set[str]) -> set[str]:
    """All length-n words not extending the middle set on either side, plus
    the middle set and its one-letter two-sided extensions."""
    letters = alphabet.letters
    length_n = set(alphabet.words_of_length(n))
    left_ext = {a + w for a in letters for w in middle}
    right_ext = {w + a for a in letters for w in middle}
    both_ext = {a + w + b for a in letters for w in middle for b in letters}
    return (length_n - (left_ext | right_ext)) | middle | both_ext


ALL_TRUE = ExpectedProperties(True, True, True, True, True)


def generate(spec: FamilySpec) -> GeneratedFamily:
    name, k = spec.name, spec.param

    def finite(alphabet, theta, words, expected):
        lang = FiniteLanguage(alphabet, words)
        return GeneratedFamily(spec, alphabet, theta, lang, None, expected)

    if name == "uniform":
        if k is None or k < 1:
            raise ValueError("uniform needs a length n >= 1")
        return finite(AB, SWAP_ANTI, AB.words_of_length(k), ALL_TRUE)

    if name == "e00":
        if k is None or k < 3:
            raise ValueError("e00 needs n >= 3")
        words = {"a" * i + "b" for i in range(1, k)}
        words |= {"b" * i + "a" for i in range(1, k)}
        words |= {"a" * k, "b" * k}
        expected = ExpectedProperties(
            is_code=True, prefix=True, suffix=False, complete=True, theta_invariant=True
        )
        return finite(AB, SWAP_AUTO, words, expected)

    if name == "e2":
        if k is None or k < 1:
            raise ValueError("e2 needs k >= 1")
        words = _middle_set_code(AB, 2 * k + 1, {"a" * k + "b" * k})
        return finite(AB, SWAP_ANTI, words, ALL_TRUE)

    if name == "e21":
        if k is None or k < 1:
            raise ValueError("e21 needs k >= 1")
        words = _middle_set_code(AB, 3 * k + 1, {"a" * k + "b" * k + "a" * k})
        return finite(AB, MIRROR, words, ALL_TRUE)

    if name == "e22a":
        if k is None or k < 1:
            raise ValueError("e22a needs k >= 1")
        middle = CYCLE_ANTI.orbit("a" * k + "b" * k).as_set()
        assert len(middle) == 6
        words = _middle_set_code(ABC, 2 * k + 1, set(middle))
        if k == 1:
            # At k = 1 the middle set is every two-letter word with distinct
            # letters, and middle words extend each other through the added
            # two-sided extensions (ab.ab equals a.ba.b), so the construction
            # yields a complete invariant set that is not a code.
            expected = ExpectedProperties(
                is_code=False, prefix=False, suffix=False,
                complete=True, theta_invariant=True,
            )
        else:
            expected = ALL_TRUE
        return finite(ABC, CYCLE_ANTI, words, expected)

    if name == "e22b":
        if k is None or k < 1:
            raise ValueError("e22b needs k >= 1")
        middle = CYCLE_ANTI.orbit("a" * k + "b" * k + "a" * k).as_set()
        assert len(middle) == 3
        words = _middle_set_code(ABC, 3 * k + 1, set(middle))
        return finite(ABC, CYCLE_ANTI, words, ALL_TRUE)

    if name == "c72":
        if k is not None:
            raise ValueError("c72 takes no parameter")
        words = {"aaa", "ab", "aaba", "aabb", "baa", "baba", "babb", "bba", "bbb"}
        return finite(AB, SWAP_ANTI, words, ALL_TRUE)

    if name == "e3":
        if k is not None:
            raise ValueError("e3 takes no parameter")
        words = {"aa", "ab", "aab", "abb", "bb"}
        expected = ExpectedProperties(
            is_code=True, prefix=False, suffix=False, complete=True, theta_invariant=True
        )
        return finite(AB, SWAP_ANTI, words, expected)

    if name == "e33x":
        if k is not None:
            raise ValueError("e33x takes no parameter")
        expected = ExpectedProperties(
            is_code=True, prefix=True, suffix=True, complete=False, theta_invariant=True
        )
        return finite(AB, MIRROR, {"aa", "b"}, expected)

    if name == "e33z":
        if k is not None:
            raise ValueError("e33z takes no parameter")
        return GeneratedFamily(spec, AB, MIRROR, None, "b|ab*a", ALL_TRUE)

    raise ValueError(f"unknown family {name!r}; families are {', '.join(FAMILY_NAMES)}")
