"""Text formats for code sets, letter maps, distributions, and automata.

Code-set files start with an ``alphabet:`` line, then carry either one word
per line (the token ``eps`` denotes the empty word where it is permitted)
or a single ``regex:`` line for an infinite regular set. ``#`` starts a
comment anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .automata import RegularLanguage
from .measure import BernoulliDist
from .theta import ANTIMORPHISM, MORPHISM, ThetaMap
from .words import Alphabet, FiniteLanguage


class FormatError(ValueError):
    pass


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


@dataclass(frozen=True)
class CodeSetFile:
    alphabet: Alphabet
    words: FiniteLanguage | None
    regex: str | None

    @property
    def is_finite(self) -> bool:
        return self.words is not None

    def language(self) -> RegularLanguage:
        if self.words is not None:
            return RegularLanguage.from_finite(self.words)
        return RegularLanguage.from_regex(self.regex, self.alphabet)


def parse_code_set(text: str, *, allow_epsilon: bool = False) -> CodeSetFile:
    lines = _content_lines(text)
    if not lines or not lines[0].startswith("alphabet:"):
        raise FormatError("code-set file must start with an 'alphabet:' line")
    alphabet = Alphabet(lines[0].split(":", 1)[1].strip())
    body = lines[1:]
    if body and body[0].startswith("regex:"):
        if len(body) > 1:
            raise FormatError("a regex file holds exactly one 'regex:' line")
        return CodeSetFile(alphabet, None, body[0].split(":", 1)[1].strip())
    words = ["" if tok == "eps" else tok for tok in body]
    return CodeSetFile(
        alphabet, FiniteLanguage(alphabet, words, allow_epsilon=allow_epsilon), None
    )


def format_code_set(
    alphabet: Alphabet,
    words: FiniteLanguage | None = None,
    regex: str | None = None,
    header: str | None = None,
) -> str:
    lines = []
    if header:
        lines.append(f"# {header}")
    lines.append(f"alphabet: {''.join(alphabet.letters)}")
    if regex is not None:
        lines.append(f"regex: {regex}")
    else:
        lines.extend(w if w else "eps" for w in words)
    return "\n".join(lines) + "\n"


def parse_theta_file(text: str, alphabet: Alphabet) -> ThetaMap:
    lines = _content_lines(text)
    if not lines or not lines[0].startswith("kind:"):
        raise FormatError("map file must start with a 'kind:' line")
    kind = lines[0].split(":", 1)[1].strip()
    if kind not in (MORPHISM, ANTIMORPHISM):
        raise FormatError(f"kind must be {MORPHISM} or {ANTIMORPHISM}, got {kind!r}")
    mapping = {}
    for line in lines[1:]:
        if "->" not in line:
            raise FormatError(f"expected 'a->b' line, got {line!r}")
        src, dst = (part.strip() for part in line.split("->", 1))
        if len(src) != 1 or len(dst) != 1:
            raise FormatError(f"map lines relate single letters, got {line!r}")
        if src in mapping:
            raise FormatError(f"letter {src!r} mapped twice")
        mapping[src] = dst
    return ThetaMap(alphabet, mapping, kind)


def format_theta_file(theta: ThetaMap) -> str:
    lines = [f"kind: {theta.kind}"]
    lines.extend(f"{a}->{b}" for a, b in theta.mapping.items() if a != b)
    return "\n".join(lines) + "\n"


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {text!r}") from exc


def parse_distribution(text: str, alphabet: Alphabet) -> BernoulliDist:
    lines = _content_lines(text)
    if lines == ["uniform"]:
        return BernoulliDist.uniform(alphabet)
    weights = {}
    for line in lines:
        if "=" not in line:
            raise FormatError(f"expected 'letter = p/q' line, got {line!r}")
        letter, value = (part.strip() for part in line.split("=", 1))
        if len(letter) != 1:
            raise FormatError(f"weights are per letter, got {line!r}")
        if letter in weights:
            raise FormatError(f"letter {letter!r} weighted twice")
        weights[letter] = _parse_fraction(value)
    return BernoulliDist(alphabet, weights)


def format_distribution(dist: BernoulliDist) -> str:
    return "\n".join(f"{a} = {v}" for a, v in dist.weights.items()) + "\n"


def dump_automaton(lang: RegularLanguage) -> str:
    """Line-oriented record dump of the minimal DFA, for goldens and debugging."""
    lines = [f"state {q}" for q in range(lang.num_states)]
    lines.append("init 0")
    lines.extend(f"final {q}" for q in sorted(lang.finals))
    letters = lang.alphabet.letters
    for q, row in enumerate(lang.trans):
        for ai, t in enumerate(row):
            lines.append(f"trans {q} {letters[ai]} {t}")
    return "\n".join(lines) + "\n"
