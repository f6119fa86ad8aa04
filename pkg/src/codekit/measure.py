"""Positive Bernoulli distributions and exact language measures.

All arithmetic is over :class:`fractions.Fraction`; equality tests such as
"the measure is exactly 1" are meaningful. The measure of a regular language
is obtained by solving the linear system of per-state values on the trim
part of its DFA; a reachable region of the automaton that can never lose
probability mass certifies divergence instead.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union as TypeUnion

from .automata import RegularLanguage
from .words import Alphabet, FiniteLanguage, WordError

DIVERGENT = "divergent"
UNDETERMINED = "undetermined"

MeasureResult = TypeUnion[Fraction, str]

PARTIAL_SUM_LENGTH = 64


class BernoulliDist:
    """Positive letter probabilities summing exactly to 1."""

    __slots__ = ("alphabet", "weights")

    def __init__(self, alphabet: Alphabet, weights: Mapping[str, Fraction]):
        w = {a: Fraction(weights[a]) for a in alphabet}
        if set(weights) != set(alphabet.letters):
            raise WordError("distribution must weight exactly the alphabet letters")
        if any(v <= 0 for v in w.values()):
            raise WordError("letter probabilities must be positive")
        if sum(w.values()) != 1:
            raise WordError("letter probabilities must sum to 1")
        self.alphabet = alphabet
        self.weights = w

    @classmethod
    def uniform(cls, alphabet: Alphabet) -> "BernoulliDist":
        p = Fraction(1, len(alphabet))
        return cls(alphabet, {a: p for a in alphabet})

    def __getitem__(self, letter: str) -> Fraction:
        return self.weights[letter]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BernoulliDist)
            and self.alphabet == other.alphabet
            and self.weights == other.weights
        )

    def __repr__(self) -> str:
        inner = ", ".join(f"{a}={v}" for a, v in self.weights.items())
        return f"BernoulliDist({inner})"

    def word_probability(self, word: str) -> Fraction:
        p = Fraction(1)
        for ch in word:
            p *= self.weights[ch]
        return p

    def permuted(self, mapping: Mapping[str, str]) -> "BernoulliDist":
        """Push the distribution through a letter permutation."""
        full = {a: mapping.get(a, a) for a in self.alphabet}
        return BernoulliDist(self.alphabet, {full[a]: v for a, v in self.weights.items()})


def measure_finite(x: FiniteLanguage, dist: BernoulliDist) -> Fraction:
    if x.alphabet != dist.alphabet:
        raise WordError("alphabet mismatch between language and distribution")
    return sum((dist.word_probability(w) for w in x), Fraction(0))


def _solve_linear(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gaussian elimination over exact rationals; None if singular."""
    n = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [v - factor * p for v, p in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def _partial_sums(lang: RegularLanguage, dist: BernoulliDist, upto: int) -> list[Fraction]:
    """Exact mass of members of length at most n, for n = 0..upto."""
    n = lang.num_states
    mass = [Fraction(0)] * n
    mass[0] = Fraction(1)
    letters = lang.alphabet.letters
    total = Fraction(0)
    sums = []
    for _ in range(upto + 1):
        total += sum(mass[q] for q in lang.finals)
        sums.append(total)
        nxt = [Fraction(0)] * n
        for q, m in enumerate(mass):
            if m == 0:
                continue
            row = lang.trans[q]
            for ai, t in enumerate(row):
                nxt[t] += m * dist[letters[ai]]
        mass = nxt
    return sums


def measure_regular(lang: RegularLanguage, dist: BernoulliDist) -> MeasureResult:
    """Exact measure of a regular language, or a divergence verdict.

    Divergence holds exactly when some reachable state can never lose mass
    to the dead part of the automaton; otherwise the state-value system is
    solved over the live states and cross-checked against the partial sums
    of member masses up to length 64.
    """
    if lang.alphabet != dist.alphabet:
        raise WordError("alphabet mismatch between language and distribution")
    live = lang._live_states()
    if 0 not in live:
        return Fraction(0)

    # States that can reach a dead (never-accepting) state.
    n = lang.num_states
    dead = set(range(n)) - live
    rev: dict[int, set[int]] = {}
    for q, row in enumerate(lang.trans):
        for t in row:
            rev.setdefault(t, set()).add(q)
    leaky = set(dead)
    stack = list(dead)
    while stack:
        q = stack.pop()
        for p in rev.get(q, ()):
            if p not in leaky:
                leaky.add(p)
                stack.append(p)
    if any(q not in leaky for q in range(n)):
        return DIVERGENT

    letters = lang.alphabet.letters
    order = sorted(live)
    pos = {q: i for i, q in enumerate(order)}
    size = len(order)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    rhs = [Fraction(0)] * size
    for q in order:
        i = pos[q]
        matrix[i][i] += 1
        for ai, t in enumerate(lang.trans[q]):
            if t in live:
                matrix[i][pos[t]] -= dist[letters[ai]]
        if q in lang.finals:
            rhs[i] = Fraction(1)
    solution = _solve_linear(matrix, rhs)
    if solution is None:
        return UNDETERMINED
    if any(v < 0 for v in solution):
        return UNDETERMINED
    value = solution[pos[0]]
    sums = _partial_sums(lang, dist, PARTIAL_SUM_LENGTH)
    if any(s > value for s in sums):
        return UNDETERMINED
    if any(b < a for a, b in zip(sums, sums[1:])):
        return UNDETERMINED
    return value


def measure(lang, dist: BernoulliDist) -> MeasureResult:
    """Measure of a finite or regular language."""
    if isinstance(lang, FiniteLanguage):
        return measure_finite(lang, dist)
    return measure_regular(lang, dist)
