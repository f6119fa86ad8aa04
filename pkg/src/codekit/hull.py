"""Free hulls and invariant free hulls of finite sets.

The hull of a finite set is computed by a stability closure: while the
generated submonoid violates the Schuetzenberger stability criterion, the
shortest violating word is adjoined (together with its orbit under the
declared map, so the submonoid stays invariant), and the generators are
re-reduced to the minimal generating set. The loop stops at a free,
invariant submonoid; each adjoined word belongs to every invariant free
submonoid containing the input, so the fixpoint is the smallest one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import PreconditionError, is_theta_invariant, sardinas_patterson_finite
from .automata import RegularLanguage, ResourceLimitError
from .theta import ThetaMap
from .words import FiniteLanguage

DEFAULT_CLOSURE_CAP = 1000


class HullDiagnosticError(RuntimeError):
    """Base extraction found a generator longer than its length bound."""


@dataclass(frozen=True)
class Submonoid:
    """A finitely generated submonoid: generators plus their star language."""

    generators: FiniteLanguage
    language: RegularLanguage

    @classmethod
    def generated_by(cls, generators: FiniteLanguage) -> "Submonoid":
        return cls(generators, RegularLanguage.from_finite(generators).star())

    def __contains__(self, word: str) -> bool:
        return self.language.accepts(word)


@dataclass(frozen=True)
class HullResult:
    base: FiniteLanguage
    theta_invariant: bool
    input_was_code: bool
    defect_ok: bool
    iterations: int


def submonoid_base(m: Submonoid) -> FiniteLanguage:
    """Minimal generating set: nonempty members with no proper splitting.

    Every base word divides into the generators, so extraction enumerates
    words up to the maximal generator length; anything longer left in the
    base language is a diagnostic failure, never silently dropped.
    """
    alphabet = m.generators.alphabet
    eps = RegularLanguage.epsilon(alphabet)
    nonempty = m.language.difference(eps)
    base_lang = nonempty.difference(nonempty.concat(nonempty))
    bound = m.generators.max_word_length()
    leftover = base_lang.difference(
        RegularLanguage.words_of_length_at_most(alphabet, bound)
    )
    if not leftover.is_empty():
        raise HullDiagnosticError(
            f"base word {leftover.shortest_word()!r} exceeds the generator bound {bound}"
        )
    return FiniteLanguage(alphabet, base_lang.words_up_to(bound))


def stability_witness(m: Submonoid) -> str | None:
    """Shortest word outside the submonoid that is both a left and a right
    completion of members to members; None exactly when the submonoid is
    free."""
    lang = m.language
    candidates = (
        lang.left_quotient(lang).intersection(lang.right_quotient(lang)).difference(lang)
    )
    return candidates.shortest_word()


def free_hull(x: FiniteLanguage, max_iterations: int = DEFAULT_CLOSURE_CAP) -> HullResult:
    """Base of the smallest free submonoid containing a finite set."""
    return theta_free_hull(x, ThetaMap.identity(x.alphabet), max_iterations)


def theta_free_hull(
    x: FiniteLanguage,
    theta: ThetaMap,
    max_iterations: int = DEFAULT_CLOSURE_CAP,
) -> HullResult:
    """Base of the smallest invariant free submonoid containing a finite set.

    The input must itself be invariant; callers holding an arbitrary set
    should first replace it by its orbit union and re-test codeness.
    """
    if "" in x:
        raise PreconditionError("the empty word is not allowed in a hull input")
    if not is_theta_invariant(x, theta):
        raise PreconditionError(
            "hull input must be invariant under the map; "
            "take the orbit union of the set first"
        )
    input_was_code = sardinas_patterson_finite(x).is_code
    alphabet = x.alphabet
    generators = theta.orbit_language(x)
    iterations = 0
    while True:
        iterations += 1
        if iterations > max_iterations:
            raise ResourceLimitError(
                f"hull closure exceeded {max_iterations} iterations"
            )
        m = Submonoid.generated_by(generators)
        witness = stability_witness(m)
        if witness is None:
            base = submonoid_base(m)
            break
        adjoined = set(submonoid_base(m))
        adjoined.update(theta.iter_orbit(witness))
        generators = FiniteLanguage(alphabet, adjoined)
    theta_invariant = theta.apply_language(base) == base
    defect_ok = True if input_was_code else len(base) <= len(x) - 1
    return HullResult(base, theta_invariant, input_was_code, defect_ok, iterations)
