"""Embedding a non-complete invariant code into a complete invariant one.

The construction picks a word that is a factor of nothing in the generated
submonoid, normalizes it so its end letters differ, and wraps it into a
marker word: the witness sandwiched between a block of its last letter and
a block of its first letter, each as long as the witness itself. Members of
the marker's orbit can then only overlap in short single-letter blocks.
Adjoining every word that starts and ends with a marker but does not
decompose over the enlarged set yields a complete invariant code containing
the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import (
    PreconditionError,
    affix_class,
    as_regular,
    is_code_regular,
    is_complete,
    is_theta_invariant,
    sardinas_patterson_finite,
)
from .automata import RegularLanguage, ResourceLimitError
from .theta import ThetaMap
from .words import Alphabet, FiniteLanguage, overlaps

OVERLAP_FREE_CAP = 64


class NotACode(PreconditionError):
    pass


class NotInvariant(PreconditionError):
    pass


class AlreadyComplete(PreconditionError):
    pass


class VerificationFailed(RuntimeError):
    """A machine-checked postcondition of the construction failed.

    The construction's guarantees are proven facts, so a failure here
    signals an implementation defect, not a bad input.
    """

    def __init__(self, message: str, trace: "CompletionTrace | None" = None):
        super().__init__(message)
        self.trace = trace


@dataclass(frozen=True)
class CompletionChecks:
    is_code: bool
    theta_invariant: bool
    complete: bool
    contains_input: bool

    @property
    def all_passed(self) -> bool:
        return self.is_code and self.theta_invariant and self.complete and self.contains_input

    def items(self):
        return (
            ("code", self.is_code),
            ("theta_invariant", self.theta_invariant),
            ("complete", self.complete),
            ("contains_input", self.contains_input),
        )


@dataclass(frozen=True)
class CompletionTrace:
    witness: str
    marker: str
    markers: FiniteLanguage
    anchored: RegularLanguage
    filler: RegularLanguage
    completed: RegularLanguage
    checks: CompletionChecks


@dataclass(frozen=True)
class ConstructionReport:
    """Machine checks of the construction's three structural guarantees."""

    overlap_shape: bool
    no_internal_marker: bool
    marked_prefix: bool

    @property
    def all_ok(self) -> bool:
        return self.overlap_shape and self.no_internal_marker and self.marked_prefix

    def items(self):
        return (
            ("overlap_shape", self.overlap_shape),
            ("no_internal_marker", self.no_internal_marker),
            ("marked_prefix", self.marked_prefix),
        )


def find_witness(lang) -> str:
    """Shortest word that is a factor of nothing in the generated submonoid."""
    L = as_regular(lang)
    if len(L.alphabet) < 2:
        raise PreconditionError("completion needs an alphabet of at least two letters")
    non_factors = L.star().factor_closure().complement()
    witness = non_factors.shortest_word()
    if witness is None:
        raise AlreadyComplete("the language is already complete; no witness exists")
    return witness


def validate_witness(lang, witness: str) -> str:
    L = as_regular(lang)
    L.alphabet.check_word(witness)
    if L.star().factor_closure().accepts(witness):
        raise PreconditionError(
            f"witness {witness!r} is a factor of the generated submonoid"
        )
    return witness


def normalize_witness(witness: str, alphabet: Alphabet) -> str:
    """Force distinct end letters by wrapping, if needed.

    The wrap letters are the first alphabet letter differing from the last
    letter of the witness, then the first letter differing from that one;
    the result still contains the witness, so it stays a non-factor.
    """
    if len(witness) >= 2 and witness[0] != witness[-1]:
        return witness
    if not witness:
        raise PreconditionError("the empty word cannot be a witness")
    first = next(a for a in alphabet if a != witness[-1])
    second = next(a for a in alphabet if a != first)
    return first + witness + second


def extend_overlap_free(witness: str) -> str:
    """Prepend copies of the first letter until the witness is
    overlapping-free; end letters are preserved."""
    for _ in range(OVERLAP_FREE_CAP):
        if not overlaps(witness, witness):
            return witness
        witness = witness[0] + witness
    raise ResourceLimitError(
        f"could not reach an overlapping-free witness within {OVERLAP_FREE_CAP} steps"
    )


def make_marker(witness: str) -> str:
    """Wrap the witness in end-letter blocks; the result is three times as
    long as the witness."""
    if len(witness) < 2 or witness[0] == witness[-1]:
        raise PreconditionError("marker construction needs distinct end letters")
    n = len(witness)
    return witness[-1] * n + witness + witness[0] * n


def marker_family(marker: str, theta: ThetaMap) -> FiniteLanguage:
    """Orbit of the marker; every member must again be a wrapped witness."""
    family = theta.orbit(marker)
    n = len(marker) // 3
    witness_orbit = theta.orbit(marker[n : 2 * n]).as_set()
    for m in family:
        mid = m[n : 2 * n]
        head, tail = mid[0], mid[-1]
        if (
            len(m) != 3 * n
            or head == tail
            or m[:n] != tail * n
            or m[2 * n :] != head * n
            or mid not in witness_orbit
        ):
            raise AssertionError(
                f"internal error: orbit member {m!r} lost the marker shape"
            )
    return family


def anchored_language(markers: FiniteLanguage) -> RegularLanguage:
    """Words that both start and end with a marker."""
    z = RegularLanguage.from_finite(markers)
    everything = RegularLanguage.universe(markers.alphabet)
    return z.concat(everything).intersection(everything.concat(z))


def filler_language(anchored: RegularLanguage, x: RegularLanguage) -> RegularLanguage:
    """Anchored words with no decomposition into two or more pieces drawn
    from the anchored words and the input code."""
    pool = anchored.union(x)
    filler = anchored.difference(pool.concat(pool.plus()))
    # Every anchored word must decompose over input plus filler.
    if not x.union(filler).plus().contains_language(anchored):
        raise VerificationFailed(
            "anchored words do not decompose over the completed set"
        )
    return filler


def complete_code(
    lang,
    theta: ThetaMap,
    witness: str | None = None,
    overlap_free_witness: bool = False,
) -> CompletionTrace:
    """Full pipeline, ending in four machine-verified postconditions: the
    result is a code, invariant, complete, and contains the input."""
    L = as_regular(lang)
    if len(L.alphabet) < 2:
        raise PreconditionError("completion needs an alphabet of at least two letters")
    if L.accepts(""):
        raise PreconditionError("the empty word is not allowed in a code input")
    if isinstance(lang, FiniteLanguage):
        verdict = sardinas_patterson_finite(lang)
    else:
        verdict = is_code_regular(L)
    if not verdict.is_code:
        raise NotACode("completion input must be a code")
    if not is_theta_invariant(L, theta):
        raise NotInvariant(
            "completion input must be invariant under the map; "
            "take the orbit union first and re-test codeness"
        )
    if witness is None:
        witness = find_witness(L)
    else:
        witness = validate_witness(L, witness)
    witness = normalize_witness(witness, L.alphabet)
    if overlap_free_witness:
        witness = extend_overlap_free(witness)
    marker = make_marker(witness)
    markers = marker_family(marker, theta)
    anchored = anchored_language(markers)
    filler = filler_language(anchored, L)
    completed = L.union(filler)
    checks = CompletionChecks(
        is_code=is_code_regular(completed).is_code,
        theta_invariant=is_theta_invariant(completed, theta),
        complete=is_complete(completed)[0],
        contains_input=completed.contains_language(L),
    )
    trace = CompletionTrace(witness, marker, markers, anchored, filler, completed, checks)
    if not checks.all_passed:
        failed = ", ".join(name for name, ok in checks.items() if not ok)
        raise VerificationFailed(f"completion checks failed: {failed}", trace)
    return trace


def verify_construction(trace: CompletionTrace, lang) -> ConstructionReport:
    """Check the three structural facts behind the construction.

    (1) any overlap between two markers is a single-letter block no longer
    than the witness; (2) no marker occurs strictly inside a word of the
    form marker, input-submonoid word, marker; (3) the language of
    input-submonoid words followed by a marker is a prefix code.
    """
    L = as_regular(lang)
    n = len(trace.witness)
    markers = trace.markers

    overlap_shape = True
    for m1 in markers:
        for m2 in markers:
            for size in range(1, len(m1)):
                if m1[-size:] == m2[:size]:
                    block = m2[:size]
                    if size > n or len(set(block)) != 1:
                        overlap_shape = False

    z = RegularLanguage.from_finite(markers)
    aplus = RegularLanguage.nonempty_words(markers.alphabet)
    inner = aplus.concat(z).concat(aplus)
    sandwiched = z.concat(L.star()).concat(z)
    no_internal_marker = inner.intersection(sandwiched).is_empty()

    marked = L.star().concat(z)
    marked_prefix = affix_class(marked).prefix

    return ConstructionReport(overlap_shape, no_internal_marker, marked_prefix)
