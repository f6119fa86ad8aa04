"""Regular-language engine.

Every language is held as its minimal complete DFA with a canonical state
numbering (breadth-first from the initial state, letters in alphabet order),
so two :class:`RegularLanguage` values are equal exactly when they denote the
same language over the same alphabet. NFAs (with epsilon moves) appear only
as construction intermediates; subset construction is guarded by a state cap
that raises :class:`StateCapExceeded` instead of thrashing.
"""

from __future__ import annotations

import heapq
import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .words import Alphabet, FiniteLanguage, WordError

DEFAULT_STATE_CAP = 1_000_000
STATE_CAP_ENV = "CODEKIT_STATE_CAP"

_state_cap = DEFAULT_STATE_CAP


class ResourceLimitError(RuntimeError):
    """A guarded computation exceeded its configured resource budget."""


class StateCapExceeded(ResourceLimitError):
    """Subset construction produced more states than the configured cap."""


def set_state_cap(cap: int) -> None:
    global _state_cap
    if cap < 1:
        raise ValueError("state cap must be positive")
    _state_cap = cap


def get_state_cap() -> int:
    return _state_cap


def state_cap_from_env() -> int:
    """Apply the CODEKIT_STATE_CAP environment override, returning the cap."""
    raw = os.environ.get(STATE_CAP_ENV)
    if raw:
        set_state_cap(int(raw))
    return _state_cap


# ---------------------------------------------------------------------------
# Regex ASTs


class RegexAst:
    __slots__ = ()


@dataclass(frozen=True)
class Lit(RegexAst):
    letter: str


@dataclass(frozen=True)
class Eps(RegexAst):
    pass


@dataclass(frozen=True)
class Empty(RegexAst):
    pass


@dataclass(frozen=True)
class Union(RegexAst):
    left: RegexAst
    right: RegexAst


@dataclass(frozen=True)
class Concat(RegexAst):
    left: RegexAst
    right: RegexAst


@dataclass(frozen=True)
class Star(RegexAst):
    inner: RegexAst


@dataclass(frozen=True)
class Plus(RegexAst):
    inner: RegexAst


class RegexSyntaxError(ValueError):
    pass


def parse_regex(text: str, alphabet: Alphabet) -> RegexAst:
    """Parse regex text: letters, juxtaposition, ``|``, ``*``, ``+``,
    parentheses, ``_`` for the empty word, ``~`` for the empty language."""
    pos = 0
    n = len(text)

    def skip_ws() -> None:
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def peek() -> str | None:
        skip_ws()
        return text[pos] if pos < n else None

    def parse_expr() -> RegexAst:
        nonlocal pos
        node = parse_term()
        while peek() == "|":
            pos += 1
            node = Union(node, parse_term())
        return node

    def parse_term() -> RegexAst:
        factors = []
        while True:
            ch = peek()
            if ch is None or ch in "|)":
                break
            factors.append(parse_factor())
        if not factors:
            raise RegexSyntaxError(f"empty term at position {pos} in {text!r}")
        node = factors[0]
        for f in factors[1:]:
            node = Concat(node, f)
        return node

    def parse_factor() -> RegexAst:
        nonlocal pos
        node = parse_atom()
        while peek() in ("*", "+"):
            node = Star(node) if text[pos] == "*" else Plus(node)
            pos += 1
        return node

    def parse_atom() -> RegexAst:
        nonlocal pos
        ch = peek()
        if ch is None:
            raise RegexSyntaxError(f"unexpected end of regex {text!r}")
        if ch == "(":
            pos += 1
            node = parse_expr()
            if peek() != ")":
                raise RegexSyntaxError(f"missing ')' in {text!r}")
            pos += 1
            return node
        if ch == "_":
            pos += 1
            return Eps()
        if ch == "~":
            pos += 1
            return Empty()
        if ch in alphabet:
            pos += 1
            return Lit(ch)
        raise RegexSyntaxError(f"unexpected character {ch!r} at position {pos} in {text!r}")

    node = parse_expr()
    if peek() is not None:
        raise RegexSyntaxError(f"trailing input at position {pos} in {text!r}")
    return node


def format_regex(ast: RegexAst) -> str:
    if isinstance(ast, Lit):
        return ast.letter
    if isinstance(ast, Eps):
        return "_"
    if isinstance(ast, Empty):
        return "~"
    if isinstance(ast, Union):
        return f"{format_regex(ast.left)}|{format_regex(ast.right)}"
    if isinstance(ast, Concat):
        left, right = ast.left, ast.right
        ls = format_regex(left)
        rs = format_regex(right)
        if isinstance(left, Union):
            ls = f"({ls})"
        if isinstance(right, Union):
            rs = f"({rs})"
        return ls + rs
    if isinstance(ast, (Star, Plus)):
        inner = format_regex(ast.inner)
        if isinstance(ast.inner, (Union, Concat)):
            inner = f"({inner})"
        return inner + ("*" if isinstance(ast, Star) else "+")
    raise TypeError(f"not a regex node: {ast!r}")


# ---------------------------------------------------------------------------
# NFAs (construction intermediates)


class Nfa:
    """Nondeterministic automaton; move labels are letters or None (epsilon)."""

    __slots__ = ("alphabet", "n_states", "moves", "initials", "finals")

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.n_states = 0
        self.moves: dict[tuple[int, str | None], set[int]] = {}
        self.initials: set[int] = set()
        self.finals: set[int] = set()

    def add_state(self) -> int:
        q = self.n_states
        self.n_states += 1
        return q

    def add_move(self, src: int, label: str | None, dst: int) -> None:
        if not (0 <= src < self.n_states and 0 <= dst < self.n_states):
            raise ValueError("move endpoints must be declared states")
        if label is not None and label not in self.alphabet:
            raise WordError(f"label {label!r} is not in the alphabet")
        self.moves.setdefault((src, label), set()).add(dst)

    def embed(self, other: "RegularLanguage") -> int:
        """Copy a DFA's states and moves into this NFA; returns the offset."""
        offset = self.n_states
        for _ in range(other.num_states):
            self.add_state()
        for q, row in enumerate(other.trans):
            for ai, t in enumerate(row):
                self.add_move(offset + q, self.alphabet.letters[ai], offset + t)
        return offset


def _epsilon_closure(moves, states: Iterable[int]) -> frozenset[int]:
    out = set(states)
    stack = list(out)
    while stack:
        q = stack.pop()
        for r in moves.get((q, None), ()):
            if r not in out:
                out.add(r)
                stack.append(r)
    return frozenset(out)


def _determinize(nfa: Nfa) -> tuple[list[tuple[int, ...]], set[int]]:
    cap = _state_cap
    letters = nfa.alphabet.letters
    moves = nfa.moves
    start = _epsilon_closure(moves, nfa.initials)
    index: dict[frozenset[int], int] = {start: 0}
    subsets = [start]
    trans: list[tuple[int, ...]] = []
    i = 0
    while i < len(subsets):
        subset = subsets[i]
        row = []
        for a in letters:
            nxt: set[int] = set()
            for q in subset:
                nxt.update(moves.get((q, a), ()))
            closed = _epsilon_closure(moves, nxt) if nxt else frozenset()
            j = index.get(closed)
            if j is None:
                if len(subsets) >= cap:
                    raise StateCapExceeded(
                        f"determinization exceeded the state cap of {cap}"
                    )
                j = len(subsets)
                index[closed] = j
                subsets.append(closed)
            row.append(j)
        trans.append(tuple(row))
        i += 1
    finals = {i for i, s in enumerate(subsets) if s & nfa.finals}
    return trans, finals


def _minimize(trans, finals) -> tuple[tuple[tuple[int, ...], ...], frozenset[int]]:
    """Moore refinement plus canonical breadth-first renumbering."""
    n = len(trans)
    cls = [1 if q in finals else 0 for q in range(n)]
    n_classes = len(set(cls))
    while True:
        sig_ids: dict[tuple, int] = {}
        new = [0] * n
        for q in range(n):
            sig = (cls[q], tuple(cls[t] for t in trans[q]))
            new[q] = sig_ids.setdefault(sig, len(sig_ids))
        if len(sig_ids) == n_classes:
            cls = new
            break
        n_classes = len(sig_ids)
        cls = new

    rep: dict[int, int] = {}
    for q in range(n):
        rep.setdefault(cls[q], q)
    start = cls[0]
    number = {start: 0}
    order = [start]
    i = 0
    while i < len(order):
        c = order[i]
        for t in trans[rep[c]]:
            tc = cls[t]
            if tc not in number:
                number[tc] = len(order)
                order.append(tc)
        i += 1
    out_trans = tuple(
        tuple(number[cls[t]] for t in trans[rep[c]]) for c in order
    )
    out_finals = frozenset(number[cls[q]] for q in finals)
    return out_trans, out_finals


# ---------------------------------------------------------------------------
# Regular languages


class RegularLanguage:
    """An immutable regular language held as a minimal complete DFA.

    The initial state is always 0; a dead (sink) state, when present, is
    just another state with no path to a final one. All operations allocate
    fresh values, so shared instances are safe under concurrent reads.
    """

    __slots__ = ("alphabet", "trans", "finals")

    def __init__(self, alphabet: Alphabet, trans, finals, *, _canonical: bool = False):
        if not _canonical:
            trans, finals = _minimize(trans, finals)
        self.alphabet = alphabet
        self.trans = trans
        self.finals = finals

    # -- factories ---------------------------------------------------------

    @classmethod
    def from_nfa(cls, nfa: Nfa) -> "RegularLanguage":
        trans, finals = _determinize(nfa)
        return cls(nfa.alphabet, trans, finals)

    @classmethod
    def from_finite(cls, lang: FiniteLanguage) -> "RegularLanguage":
        nfa = Nfa(lang.alphabet)
        root = nfa.add_state()
        nfa.initials.add(root)
        for w in lang:
            if w == "":
                nfa.finals.add(root)
                continue
            cur = root
            for ch in w:
                nxt = nfa.add_state()
                nfa.add_move(cur, ch, nxt)
                cur = nxt
            nfa.finals.add(cur)
        return cls.from_nfa(nfa)

    @classmethod
    def from_words(cls, alphabet: Alphabet, words: Iterable[str]) -> "RegularLanguage":
        return cls.from_finite(FiniteLanguage(alphabet, words, allow_epsilon=True))

    @classmethod
    def from_regex(cls, regex: "RegexAst | str", alphabet: Alphabet) -> "RegularLanguage":
        ast = parse_regex(regex, alphabet) if isinstance(regex, str) else regex
        nfa = Nfa(alphabet)
        start, end = _thompson(nfa, ast)
        nfa.initials.add(start)
        nfa.finals.add(end)
        return cls.from_nfa(nfa)

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "RegularLanguage":
        return cls.from_words(alphabet, ())

    @classmethod
    def epsilon(cls, alphabet: Alphabet) -> "RegularLanguage":
        return cls.from_words(alphabet, ("",))

    @classmethod
    def universe(cls, alphabet: Alphabet) -> "RegularLanguage":
        k = len(alphabet)
        return cls(alphabet, ((0,) * k,), frozenset({0}), _canonical=True)

    @classmethod
    def nonempty_words(cls, alphabet: Alphabet) -> "RegularLanguage":
        return cls.universe(alphabet).difference(cls.epsilon(alphabet))

    @classmethod
    def words_of_length_at_most(cls, alphabet: Alphabet, n: int) -> "RegularLanguage":
        k = len(alphabet)
        sink = n + 1
        trans = [tuple([min(q + 1, sink)] * k) for q in range(n + 1)]
        trans.append(tuple([sink] * k))
        return cls(alphabet, trans, frozenset(range(n + 1)))

    # -- basics ------------------------------------------------------------

    @property
    def num_states(self) -> int:
        return len(self.trans)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RegularLanguage)
            and self.alphabet == other.alphabet
            and self.trans == other.trans
            and self.finals == other.finals
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.trans, self.finals))

    def __repr__(self) -> str:
        return (
            f"<RegularLanguage over {''.join(self.alphabet.letters)!r}, "
            f"{self.num_states} states, {len(self.finals)} final>"
        )

    def accepts(self, word: str) -> bool:
        self.alphabet.check_word(word)
        q = 0
        for ch in word:
            q = self.trans[q][self.alphabet.index(ch)]
        return q in self.finals

    def __contains__(self, word: str) -> bool:
        return self.accepts(word)

    def minimize(self) -> "RegularLanguage":
        """Re-canonicalize; a fixed point since languages are kept minimal."""
        return RegularLanguage(self.alphabet, self.trans, self.finals)

    def _check_same_alphabet(self, other: "RegularLanguage") -> None:
        if self.alphabet != other.alphabet:
            raise WordError("alphabet mismatch between regular languages")

    def _live_states(self) -> frozenset[int]:
        rev: dict[int, set[int]] = {}
        for q, row in enumerate(self.trans):
            for t in row:
                rev.setdefault(t, set()).add(q)
        live = set(self.finals)
        stack = list(live)
        while stack:
            q = stack.pop()
            for p in rev.get(q, ()):
                if p not in live:
                    live.add(p)
                    stack.append(p)
        return frozenset(live)

    # -- boolean combinations (product construction) ------------------------

    def _product(self, other: "RegularLanguage", final_rule) -> "RegularLanguage":
        self._check_same_alphabet(other)
        k = len(self.alphabet)
        index: dict[tuple[int, int], int] = {(0, 0): 0}
        order = [(0, 0)]
        trans: list[tuple[int, ...]] = []
        i = 0
        while i < len(order):
            q1, q2 = order[i]
            row = []
            for a in range(k):
                pair = (self.trans[q1][a], other.trans[q2][a])
                j = index.get(pair)
                if j is None:
                    j = len(order)
                    index[pair] = j
                    order.append(pair)
                row.append(j)
            trans.append(tuple(row))
            i += 1
        finals = {
            i
            for i, (q1, q2) in enumerate(order)
            if final_rule(q1 in self.finals, q2 in other.finals)
        }
        return RegularLanguage(self.alphabet, trans, finals)

    def union(self, other: "RegularLanguage") -> "RegularLanguage":
        return self._product(other, lambda f1, f2: f1 or f2)

    def intersection(self, other: "RegularLanguage") -> "RegularLanguage":
        return self._product(other, lambda f1, f2: f1 and f2)

    def difference(self, other: "RegularLanguage") -> "RegularLanguage":
        return self._product(other, lambda f1, f2: f1 and not f2)

    def complement(self) -> "RegularLanguage":
        finals = frozenset(range(self.num_states)) - self.finals
        return RegularLanguage(self.alphabet, self.trans, finals)

    # -- catenative operations ----------------------------------------------

    def concat(self, other: "RegularLanguage") -> "RegularLanguage":
        self._check_same_alphabet(other)
        nfa = Nfa(self.alphabet)
        off1 = nfa.embed(self)
        off2 = nfa.embed(other)
        nfa.initials.add(off1)
        for f in self.finals:
            nfa.add_move(off1 + f, None, off2)
        nfa.finals.update(off2 + f for f in other.finals)
        return RegularLanguage.from_nfa(nfa)

    def star(self) -> "RegularLanguage":
        nfa = Nfa(self.alphabet)
        off = nfa.embed(self)
        hub = nfa.add_state()
        nfa.initials.add(hub)
        nfa.finals.add(hub)
        nfa.add_move(hub, None, off)
        for f in self.finals:
            nfa.add_move(off + f, None, hub)
        return RegularLanguage.from_nfa(nfa)

    def plus(self) -> "RegularLanguage":
        nfa = Nfa(self.alphabet)
        off = nfa.embed(self)
        nfa.initials.add(off)
        for f in self.finals:
            nfa.add_move(off + f, None, off)
            nfa.finals.add(off + f)
        return RegularLanguage.from_nfa(nfa)

    def reverse(self) -> "RegularLanguage":
        nfa = Nfa(self.alphabet)
        for _ in range(self.num_states):
            nfa.add_state()
        for q, row in enumerate(self.trans):
            for ai, t in enumerate(row):
                nfa.add_move(t, self.alphabet.letters[ai], q)
        nfa.initials.update(self.finals)
        nfa.finals.add(0)
        return RegularLanguage.from_nfa(nfa)

    def relabel(self, mapping: Mapping[str, str]) -> "RegularLanguage":
        """Apply a letter permutation to every transition label."""
        full = {a: mapping.get(a, a) for a in self.alphabet}
        if sorted(full.values()) != sorted(self.alphabet.letters):
            raise WordError("relabeling must permute the alphabet")
        idx = self.alphabet.index
        k = len(self.alphabet)
        trans = []
        for row in self.trans:
            new_row = [0] * k
            for ai, t in enumerate(row):
                new_row[idx(full[self.alphabet.letters[ai]])] = t
            trans.append(tuple(new_row))
        return RegularLanguage(self.alphabet, trans, self.finals)

    # -- closures and quotients ----------------------------------------------

    def _closure(self, all_initial: bool, all_final: bool) -> "RegularLanguage":
        trim = self._live_states()
        nfa = Nfa(self.alphabet)
        for _ in range(self.num_states):
            nfa.add_state()
        for q in trim:
            for ai, t in enumerate(self.trans[q]):
                if t in trim:
                    nfa.add_move(q, self.alphabet.letters[ai], t)
        if all_initial:
            nfa.initials.update(trim)
        elif 0 in trim:
            nfa.initials.add(0)
        nfa.finals.update(trim if all_final else (self.finals & trim))
        return RegularLanguage.from_nfa(nfa)

    def factor_closure(self) -> "RegularLanguage":
        return self._closure(all_initial=True, all_final=True)

    def prefix_closure(self) -> "RegularLanguage":
        return self._closure(all_initial=False, all_final=True)

    def suffix_closure(self) -> "RegularLanguage":
        return self._closure(all_initial=True, all_final=False)

    def left_quotient(self, other: "RegularLanguage") -> "RegularLanguage":
        """Words w such that uw is in this language for some u in ``other``."""
        self._check_same_alphabet(other)
        k = len(self.alphabet)
        seen = {(0, 0)}
        queue = deque([(0, 0)])
        starts: set[int] = set()
        while queue:
            q2, q1 = queue.popleft()
            if q2 in other.finals:
                starts.add(q1)
            for a in range(k):
                pair = (other.trans[q2][a], self.trans[q1][a])
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
        nfa = Nfa(self.alphabet)
        nfa.embed(self)
        nfa.initials.update(starts)
        nfa.finals.update(self.finals)
        return RegularLanguage.from_nfa(nfa)

    def right_quotient(self, other: "RegularLanguage") -> "RegularLanguage":
        """Words w such that wv is in this language for some v in ``other``."""
        self._check_same_alphabet(other)
        k = len(self.alphabet)
        n1, n2 = self.num_states, other.num_states
        rev: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for q1 in range(n1):
            for q2 in range(n2):
                for a in range(k):
                    dst = (self.trans[q1][a], other.trans[q2][a])
                    rev.setdefault(dst, []).append((q1, q2))
        coreach = {(f1, f2) for f1 in self.finals for f2 in other.finals}
        stack = list(coreach)
        while stack:
            pair = stack.pop()
            for src in rev.get(pair, ()):
                if src not in coreach:
                    coreach.add(src)
                    stack.append(src)
        finals = {q1 for q1 in range(n1) if (q1, 0) in coreach}
        return RegularLanguage(self.alphabet, self.trans, finals)

    # -- decisions and extraction --------------------------------------------

    def is_empty(self) -> bool:
        return not self.finals

    def is_universal(self) -> bool:
        return self.num_states == 1 and 0 in self.finals

    def is_finite(self) -> bool:
        trim = self._live_states()
        if 0 not in trim:
            return True
        color = {0: 1}
        stack: list[tuple[int, Iterator[int]]] = [(0, iter(self.trans[0]))]
        while stack:
            q, it = stack[-1]
            pushed = False
            for t in it:
                if t not in trim:
                    continue
                c = color.get(t, 0)
                if c == 1:
                    return False
                if c == 0:
                    color[t] = 1
                    stack.append((t, iter(self.trans[t])))
                    pushed = True
                    break
            if not pushed:
                color[q] = 2
                stack.pop()
        return True

    def shortest_word(self) -> str | None:
        """Length-then-lexicographically minimal member, or None if empty."""
        if 0 in self.finals:
            return ""
        live = self._live_states()
        if 0 not in live:
            return None
        letters = self.alphabet.letters
        parent: dict[int, tuple[int, int] | None] = {0: None}
        queue = deque([0])
        while queue:
            q = queue.popleft()
            for ai, t in enumerate(self.trans[q]):
                if t in parent or t not in live:
                    continue
                parent[t] = (q, ai)
                if t in self.finals:
                    chars: list[str] = []
                    cur: int | None = t
                    while parent[cur] is not None:
                        p, a = parent[cur]
                        chars.append(letters[a])
                        cur = p
                    return "".join(reversed(chars))
                queue.append(t)
        return None

    def words_up_to(self, max_len: int) -> list[str]:
        """All members of length at most ``max_len``, in canonical order."""
        live = self._live_states()
        out: list[str] = []
        if 0 not in live:
            return out
        letters = self.alphabet.letters

        def rec(q: int, prefix: str) -> None:
            if q in self.finals:
                out.append(prefix)
            if len(prefix) == max_len:
                return
            for ai, t in enumerate(self.trans[q]):
                if t in live:
                    rec(t, prefix + letters[ai])

        rec(0, "")
        return out

    def first_words(self, count: int) -> list[str]:
        """The ``count`` smallest members in canonical order."""
        live = self._live_states()
        if 0 not in live:
            return []
        letters = self.alphabet.letters
        out: list[str] = []
        heap: list[tuple[int, tuple[int, ...], int]] = [(0, (), 0)]
        while heap and len(out) < count:
            length, idxs, q = heapq.heappop(heap)
            if q in self.finals:
                out.append("".join(letters[i] for i in idxs))
            for ai, t in enumerate(self.trans[q]):
                if t in live:
                    heapq.heappush(heap, (length + 1, idxs + (ai,), t))
        return out

    def enumerate_finite(self) -> FiniteLanguage:
        """All members of a finite language; raises if infinite."""
        if not self.is_finite():
            raise ValueError("language is infinite")
        return FiniteLanguage(
            self.alphabet, self.words_up_to(self.num_states), allow_epsilon=True
        )

    def contains_language(self, other: "RegularLanguage") -> bool:
        return other.difference(self).is_empty()


def _thompson(nfa: Nfa, ast: RegexAst) -> tuple[int, int]:
    start, end = nfa.add_state(), nfa.add_state()
    if isinstance(ast, Lit):
        nfa.add_move(start, ast.letter, end)
    elif isinstance(ast, Eps):
        nfa.add_move(start, None, end)
    elif isinstance(ast, Empty):
        pass
    elif isinstance(ast, Union):
        for part in (ast.left, ast.right):
            s, e = _thompson(nfa, part)
            nfa.add_move(start, None, s)
            nfa.add_move(e, None, end)
    elif isinstance(ast, Concat):
        s1, e1 = _thompson(nfa, ast.left)
        s2, e2 = _thompson(nfa, ast.right)
        nfa.add_move(start, None, s1)
        nfa.add_move(e1, None, s2)
        nfa.add_move(e2, None, end)
    elif isinstance(ast, (Star, Plus)):
        s, e = _thompson(nfa, ast.inner)
        nfa.add_move(start, None, s)
        nfa.add_move(e, None, s)
        nfa.add_move(e, None, end)
        if isinstance(ast, Star):
            nfa.add_move(start, None, end)
    else:
        raise TypeError(f"not a regex node: {ast!r}")
    return start, end
