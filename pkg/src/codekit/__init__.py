"""Decision procedures for variable-length codes that are invariant under a
letter-permutation morphism or antimorphism of the free monoid.

The package decides codeness (Sardinas-Patterson, finite and regular),
affix class, thinness, completeness, and invariance; computes exact
Bernoulli measures over rationals; builds invariant free hulls with their
defect bound; and embeds any non-complete invariant regular code into a
complete invariant one, machine-verifying the construction's guarantees.
"""

from .analysis import (
    AffixClass,
    CodeVerdict,
    CodeWitness,
    LengthLayer,
    PreconditionError,
    PrefixTree,
    affix_class,
    is_code_regular,
    is_complete,
    is_maximal_thin,
    is_theta_code,
    is_theta_invariant,
    is_thin,
    orbit_union,
    sardinas_patterson_finite,
    tree_theta_invariant,
    uniform_decomposition,
)
from .automata import (
    Nfa,
    RegexSyntaxError,
    RegularLanguage,
    ResourceLimitError,
    StateCapExceeded,
    parse_regex,
    set_state_cap,
)
from .completion import (
    AlreadyComplete,
    CompletionChecks,
    CompletionTrace,
    ConstructionReport,
    NotACode,
    NotInvariant,
    VerificationFailed,
    anchored_language,
    complete_code,
    extend_overlap_free,
    filler_language,
    find_witness,
    make_marker,
    marker_family,
    normalize_witness,
    validate_witness,
    verify_construction,
)
from .families import ExpectedProperties, FamilySpec, GeneratedFamily, generate
from .hull import (
    HullDiagnosticError,
    HullResult,
    Submonoid,
    free_hull,
    stability_witness,
    submonoid_base,
    theta_free_hull,
)
from .measure import (
    DIVERGENT,
    UNDETERMINED,
    BernoulliDist,
    measure,
    measure_finite,
    measure_regular,
)
from .theta import ANTIMORPHISM, MORPHISM, ThetaMap
from .words import (
    Alphabet,
    AffixSets,
    FiniteLanguage,
    WordError,
    affix_sets,
    overlaps,
)

__version__ = "0.1.0"
