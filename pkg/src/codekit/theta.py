"""Letter-permutation morphisms and antimorphisms of the free monoid.

A :class:`ThetaMap` is a bijection of the alphabet extended to all words,
either multiplicatively (``morphism``) or anti-multiplicatively
(``antimorphism``: the image of ``xy`` is ``image(y) + image(x)``). Over an
alphabet with at least two letters every power of odd exponent of an
antimorphism is again an antimorphism, so such a map can only have even
order; the order computation accounts for that parity constraint.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Iterator, Mapping

from .words import Alphabet, FiniteLanguage, WordError

MORPHISM = "morphism"
ANTIMORPHISM = "antimorphism"


class ThetaMap:
    """An (anti-)automorphism of the free monoid given by a letter permutation."""

    __slots__ = ("alphabet", "kind", "mapping", "_order")

    def __init__(self, alphabet: Alphabet, mapping: Mapping[str, str] | None = None,
                 kind: str = MORPHISM):
        if kind not in (MORPHISM, ANTIMORPHISM):
            raise ValueError(f"kind must be {MORPHISM!r} or {ANTIMORPHISM!r}, got {kind!r}")
        mapping = dict(mapping or {})
        for src, dst in mapping.items():
            if src not in alphabet or dst not in alphabet:
                raise WordError(f"mapping {src!r}->{dst!r} leaves the alphabet")
        # Unlisted letters map to themselves.
        full = {a: mapping.get(a, a) for a in alphabet}
        if len(set(full.values())) != len(alphabet):
            raise WordError("letter mapping is not a bijection of the alphabet")
        self.alphabet = alphabet
        self.kind = kind
        self.mapping = full
        self._order: int | None = None

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "ThetaMap":
        return cls(alphabet, {}, MORPHISM)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ThetaMap)
            and self.alphabet == other.alphabet
            and self.kind == other.kind
            and self.mapping == other.mapping
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.kind, tuple(sorted(self.mapping.items()))))

    def __repr__(self) -> str:
        pairs = " ".join(f"{a}->{b}" for a, b in self.mapping.items() if a != b) or "id"
        return f"ThetaMap({self.kind}, {pairs})"

    @property
    def is_antimorphism(self) -> bool:
        return self.kind == ANTIMORPHISM

    def apply(self, word: str) -> str:
        """Image of a word; the length is always preserved."""
        self.alphabet.check_word(word)
        if self.is_antimorphism:
            word = word[::-1]
        return "".join(self.mapping[ch] for ch in word)

    def __call__(self, word: str) -> str:
        return self.apply(word)

    def permutation_order(self) -> int:
        seen: set[str] = set()
        lengths = []
        for a in self.alphabet:
            if a in seen:
                continue
            size = 0
            cur = a
            while cur not in seen:
                seen.add(cur)
                cur = self.mapping[cur]
                size += 1
            lengths.append(size)
        return reduce(math.lcm, lengths, 1)

    @property
    def order(self) -> int:
        """Smallest k >= 1 with the k-th power equal to the identity morphism."""
        if self._order is None:
            p = self.permutation_order()
            if self.is_antimorphism and len(self.alphabet) >= 2 and p % 2 == 1:
                p *= 2
            self._order = p
        return self._order

    def apply_power(self, word: str, i: int) -> str:
        """Image under the i-th power; negative i wraps modulo the order."""
        for _ in range(i % self.order):
            word = self.apply(word)
        return word

    def iter_orbit(self, word: str) -> Iterator[str]:
        for i in range(self.order):
            yield word
            word = self.apply(word)

    def orbit(self, word: str) -> FiniteLanguage:
        """All distinct power images of a word, in canonical order."""
        return FiniteLanguage(self.alphabet, self.iter_orbit(word), allow_epsilon=True)

    def apply_language(self, lang: FiniteLanguage) -> FiniteLanguage:
        return FiniteLanguage(self.alphabet, (self.apply(w) for w in lang), allow_epsilon=True)

    def orbit_language(self, lang: FiniteLanguage) -> FiniteLanguage:
        """Union of all power images of a finite language."""
        out: set[str] = set()
        for w in lang:
            out.update(self.iter_orbit(w))
        return FiniteLanguage(lang.alphabet, out, allow_epsilon=True)

    def apply_regular(self, lang):
        """Image of a regular language, as a regular language.

        A morphism relabels the transitions; an antimorphism additionally
        reverses the automaton.
        """
        from .automata import RegularLanguage

        if not isinstance(lang, RegularLanguage):
            raise TypeError(f"expected a RegularLanguage, got {type(lang).__name__}")
        if lang.alphabet != self.alphabet:
            raise WordError("alphabet mismatch between map and language")
        out = lang.relabel(self.mapping)
        if self.is_antimorphism:
            out = out.reverse()
        return out
