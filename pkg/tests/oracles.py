"""Brute-force reference implementations, kept independent of the package
internals so they can serve as oracles."""

from __future__ import annotations

import itertools
from fractions import Fraction

from codekit.automata import Concat, Empty, Eps, Lit, Plus, Star, Union


def enumerate_words(letters, max_len):
    """All words up to a length, in length-then-lex order."""
    out = []
    for n in range(max_len + 1):
        for tup in itertools.product(letters, repeat=n):
            out.append("".join(tup))
    return out


def regex_matches(ast, word, _memo=None):
    """Naive AST interpreter: concatenation tries every split."""
    memo = {} if _memo is None else _memo
    key = (id(ast), word)
    if key in memo:
        return memo[key]
    if isinstance(ast, Lit):
        res = word == ast.letter
    elif isinstance(ast, Eps):
        res = word == ""
    elif isinstance(ast, Empty):
        res = False
    elif isinstance(ast, Union):
        res = regex_matches(ast.left, word, memo) or regex_matches(ast.right, word, memo)
    elif isinstance(ast, Concat):
        res = any(
            regex_matches(ast.left, word[:i], memo)
            and regex_matches(ast.right, word[i:], memo)
            for i in range(len(word) + 1)
        )
    elif isinstance(ast, Star):
        res = word == "" or any(
            regex_matches(ast.inner, word[:i], memo)
            and regex_matches(ast, word[i:], memo)
            for i in range(1, len(word) + 1)
        )
    elif isinstance(ast, Plus):
        res = regex_matches(ast.inner, word, memo) or any(
            regex_matches(ast.inner, word[:i], memo)
            and regex_matches(ast, word[i:], memo)
            for i in range(1, len(word) + 1)
        )
    else:
        raise TypeError(ast)
    memo[key] = res
    return res


def star_member(word, words):
    """Dynamic program for membership in the star of a finite set."""
    xs = [x for x in set(words) if x]
    ok = [False] * (len(word) + 1)
    ok[0] = True
    for i in range(1, len(word) + 1):
        ok[i] = any(ok[i - len(x)] for x in xs if word[i - len(x):i] == x)
    return ok[len(word)]


def factorization_count(word, words, cap=4):
    """Number of ordered factorizations of a word over a finite set, capped."""
    xs = [x for x in set(words) if x]
    counts = [0] * (len(word) + 1)
    counts[0] = 1
    for i in range(1, len(word) + 1):
        total = 0
        for x in xs:
            if len(x) <= i and word[i - len(x):i] == x:
                total += counts[i - len(x)]
        counts[i] = min(total, cap)
    return counts[len(word)]


def double_factorization_upto(words, letters, max_len):
    """Shortest word (length-lex) with at least two factorizations, or None."""
    for w in enumerate_words(letters, max_len):
        if w and factorization_count(w, words) >= 2:
            return w
    return None


def brute_overlaps(w, w2):
    """Overlap by direct split enumeration from the defining equations."""
    assert w and w2
    for i in range(1, len(w)):
        # u of length i: u + w2 == w + v demands w2 to continue w past u
        shared = len(w) - i
        if 1 <= len(w2) - shared <= len(w2) - 1 and w2[:shared] == w[i:]:
            return True
    for i in range(1, len(w2)):
        shared = len(w2) - i
        if 1 <= len(w) - shared <= len(w) - 1 and w[:shared] == w2[i:]:
            return True
    return False


def factor_of_star(word, words):
    """Exact membership in the factor set of the star of a finite set.

    A factor either sits inside a single word or splits as a suffix, a
    star member, and a prefix.
    """
    xs = list(words)
    if any(word in x for x in xs):
        return True
    suffixes = {x[i:] for x in xs for i in range(len(x) + 1)} | {""}
    prefixes = {x[:i] for x in xs for i in range(len(x) + 1)} | {""}
    for i in range(len(word) + 1):
        if word[:i] not in suffixes:
            continue
        for j in range(i, len(word) + 1):
            if word[j:] in prefixes and star_member(word[i:j], xs):
                return True
    return False


def first_non_factor_of_star(words, letters, max_len):
    for w in enumerate_words(letters, max_len):
        if not factor_of_star(w, words):
            return w
    return None


def first_non_factor_of_set(words, letters, max_len):
    factors = {x[i:j] for x in words for i in range(len(x) + 1)
               for j in range(i, len(x) + 1)} | {""}
    for w in enumerate_words(letters, max_len):
        if w not in factors:
            return w
    return None


def dyadic_measure(words):
    """Independent uniform-measure oracle over a binary alphabet."""
    return sum(Fraction(1, 2 ** len(w)) for w in words)


def uniform_measure(words, k):
    return sum(Fraction(1, k ** len(w)) for w in words)
