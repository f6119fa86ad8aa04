"""Alphabets, words, and finite languages.

Words are plain Python strings over a declared :class:`Alphabet`; the empty
word is ``""``. The alphabet fixes both the symbol set and the symbol order,
and every "shortest" or "first" selection in this package uses the induced
length-then-lexicographic order.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, NamedTuple

MAX_ALPHABET = 64

EPSILON = ""


class WordError(ValueError):
    """Raised for malformed alphabets, foreign letters, or empty-word misuse."""


class Alphabet:
    """An ordered, duplicate-free set of single-character symbols."""

    __slots__ = ("letters", "_index")

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        if not letters:
            raise WordError("alphabet must not be empty")
        if len(letters) > MAX_ALPHABET:
            raise WordError(f"alphabet capped at {MAX_ALPHABET} symbols")
        for a in letters:
            if not isinstance(a, str) or len(a) != 1:
                raise WordError(f"letters must be single characters, got {a!r}")
        if len(set(letters)) != len(letters):
            raise WordError("duplicate letters in alphabet")
        self.letters = letters
        self._index = {a: i for i, a in enumerate(letters)}

    def __contains__(self, letter: object) -> bool:
        return letter in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Alphabet({''.join(self.letters)!r})"

    def index(self, letter: str) -> int:
        try:
            return self._index[letter]
        except KeyError:
            raise WordError(f"letter {letter!r} is not in alphabet {self!r}") from None

    def check_word(self, word: str) -> str:
        """Return ``word`` unchanged, raising if it uses a foreign letter."""
        for ch in word:
            if ch not in self._index:
                raise WordError(f"letter {ch!r} of {word!r} is not in alphabet {self!r}")
        return word

    def word_key(self, word: str) -> tuple:
        """Sort key realizing the canonical length-then-lexicographic order."""
        return (len(word), tuple(self._index[ch] for ch in word))

    def sort_words(self, words: Iterable[str]) -> list[str]:
        return sorted(set(words), key=self.word_key)

    def words_of_length(self, n: int) -> Iterator[str]:
        for tup in itertools.product(self.letters, repeat=n):
            yield "".join(tup)

    def words_up_to(self, n: int) -> Iterator[str]:
        for length in range(n + 1):
            yield from self.words_of_length(length)


class FiniteLanguage:
    """A finite, duplicate-free set of words in canonical order.

    The empty word is rejected unless ``allow_epsilon=True``; code inputs
    must never contain it.
    """

    __slots__ = ("alphabet", "words", "_set")

    def __init__(self, alphabet: Alphabet, words: Iterable[str], *, allow_epsilon: bool = False):
        self.alphabet = alphabet
        checked = [alphabet.check_word(w) for w in words]
        if not allow_epsilon and any(w == EPSILON for w in checked):
            raise WordError("the empty word is not allowed in this language")
        self.words = tuple(alphabet.sort_words(checked))
        self._set = frozenset(self.words)

    def __iter__(self) -> Iterator[str]:
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: object) -> bool:
        return word in self._set

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteLanguage)
            and self.alphabet == other.alphabet
            and self._set == other._set
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self._set))

    def __repr__(self) -> str:
        shown = " ".join(w if w else "eps" for w in self.words[:8])
        more = " ..." if len(self.words) > 8 else ""
        return f"FiniteLanguage({''.join(self.alphabet.letters)!r}, {{{shown}{more}}})"

    def as_set(self) -> frozenset[str]:
        return self._set

    def max_word_length(self) -> int:
        return max((len(w) for w in self.words), default=0)

    def restrict_length(self, length: int) -> "FiniteLanguage":
        return FiniteLanguage(
            self.alphabet,
            (w for w in self.words if len(w) == length),
            allow_epsilon=True,
        )


class AffixSets(NamedTuple):
    prefixes: FiniteLanguage
    suffixes: FiniteLanguage
    factors: FiniteLanguage


def overlaps(w: str, w2: str) -> bool:
    """Decide whether the pair of nonempty words overlaps.

    The pair overlaps when a proper nonempty suffix of one word equals a
    proper nonempty prefix of the other. ``overlaps(w, w) == False`` means
    ``w`` is overlapping-free.
    """
    if not w or not w2:
        raise WordError("overlap is defined for nonempty words only")
    for size in range(1, min(len(w), len(w2))):
        if w[-size:] == w2[:size] or w2[-size:] == w[:size]:
            return True
    return False


def affix_sets(x: FiniteLanguage) -> AffixSets:
    """Prefix, suffix, and factor closures of a finite language.

    Each result contains the empty word whenever ``x`` is nonempty.
    """
    prefixes: set[str] = set()
    suffixes: set[str] = set()
    factors: set[str] = set()
    for w in x:
        for i in range(len(w) + 1):
            prefixes.add(w[:i])
            suffixes.add(w[i:])
            for j in range(i, len(w) + 1):
                factors.add(w[i:j])
    mk = lambda ws: FiniteLanguage(x.alphabet, ws, allow_epsilon=True)
    return AffixSets(mk(prefixes), mk(suffixes), mk(factors))
