"""Shared example languages, maps, and seeded random generators."""

from __future__ import annotations

import itertools
import random

from codekit import (
    ANTIMORPHISM,
    MORPHISM,
    Alphabet,
    FiniteLanguage,
    ThetaMap,
    sardinas_patterson_finite,
)
from codekit.families import AB, ABC, CYCLE_ANTI, MIRROR, SWAP_ANTI, SWAP_AUTO

E4_WORDS = ("aaaa", "aabb", "aabbbb", "aaaabb", "ba", "baaaa", "bbbba", "bbbb")

ABCD = Alphabet("abcd")
CD_SWAP_ANTI = ThetaMap(ABCD, {"c": "d", "d": "c"}, ANTIMORPHISM)

IDENTITY_AB = ThetaMap.identity(AB)


def e4_language() -> FiniteLanguage:
    return FiniteLanguage(AB, E4_WORDS)


def lang(letters: str, *words: str) -> FiniteLanguage:
    return FiniteLanguage(Alphabet(letters), words)


# Finite languages exercised across modules: paper sets, tiny codes, and
# tiny non-codes.
CORPUS_FINITE = [
    e4_language(),
    lang("ab", "a", "ab", "ba"),
    lang("ab", "a", "ba"),
    lang("ab", "aa", "b"),
    lang("ab", "a", "b"),
    lang("ab", "aa", "ab", "aab", "abb", "bb"),
    lang("ab", "ab"),
    lang("ab", "aa", "aaa"),
    lang("ab", "ab", "ba"),
    lang("ab", "aab", "ab", "b"),
    lang("ab", "abab", "ab"),
    lang("abc", "ab", "c", "ca"),
    lang("abc", "a", "bc", "abc"),
    lang("ab", "aa", "bb", "abab"),
    lang("ab", "b", "ba", "baa", "baaa"),
]

THETA_MAPS_AB = [
    SWAP_ANTI,
    SWAP_AUTO,
    MIRROR,
    IDENTITY_AB,
    ThetaMap(AB, {"a": "b", "b": "a"}, MORPHISM),
]


def random_theta(rng: random.Random, alphabet: Alphabet) -> ThetaMap:
    letters = list(alphabet.letters)
    image = letters[:]
    rng.shuffle(image)
    kind = rng.choice((MORPHISM, ANTIMORPHISM))
    return ThetaMap(alphabet, dict(zip(letters, image)), kind)


def random_invariant_set(
    rng: random.Random,
    alphabet: Alphabet,
    theta: ThetaMap,
    max_words: int,
    max_len: int,
) -> FiniteLanguage | None:
    """Orbit-closed random finite set, or None if the budget is exceeded."""
    seeds = rng.randint(1, max(1, max_words // 2))
    chosen: set[str] = set()
    for _ in range(seeds):
        length = rng.randint(1, max_len)
        word = "".join(rng.choice(alphabet.letters) for _ in range(length))
        chosen.update(theta.iter_orbit(word))
    if not chosen or len(chosen) > max_words:
        return None
    return FiniteLanguage(alphabet, chosen)


def random_invariant_noncodes(seed: int, count: int, alphabets=("ab", "abc")):
    """Deterministic stream of invariant finite non-codes (at most 6 words,
    word length at most 6)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        alphabet = Alphabet(rng.choice(alphabets))
        theta = random_theta(rng, alphabet)
        x = random_invariant_set(rng, alphabet, theta, max_words=6, max_len=6)
        if x is None or len(x) < 2:
            continue
        if sardinas_patterson_finite(x).is_code:
            continue
        out.append((x, theta))
    return out


def random_noncomplete_invariant_codes(seed: int, count: int):
    """Deterministic stream of small non-complete invariant codes, for
    completion runs."""
    from codekit import is_complete

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        alphabet = Alphabet(rng.choice(("ab", "abc")))
        theta = random_theta(rng, alphabet)
        x = random_invariant_set(rng, alphabet, theta, max_words=4, max_len=3)
        if x is None:
            continue
        if not sardinas_patterson_finite(x).is_code:
            continue
        if is_complete(x)[0]:
            continue
        out.append((x, theta))
    return out


def small_regex_asts(letters: str, max_nodes: int):
    """All regex ASTs up to a node budget; used for exhaustive law checks."""
    from codekit.automata import Concat, Empty, Eps, Lit, Star, Union

    by_size = {1: [Eps(), Empty()] + [Lit(ch) for ch in letters]}
    for size in range(2, max_nodes + 1):
        acc = []
        for inner in by_size[size - 1]:
            acc.append(Star(inner))
        for left_size in range(1, size - 1):
            for left in by_size[left_size]:
                for right in by_size[size - 1 - left_size]:
                    acc.append(Union(left, right))
                    acc.append(Concat(left, right))
        by_size[size] = acc
    return list(itertools.chain.from_iterable(by_size.values()))
