"""Workbench for finitely presented monoids via string rewriting.

Normal forms and confluence, finite quotients with Cayley tables,
homomorphism kernels, identities and bounded witness search, Zimin-word
isoterm checks, and kernel-class commutativity evidence.
"""

from .errors import (
    AlphabetMismatch,
    BudgetExceeded,
    IdentitySyntaxError,
    MonoidLabError,
    NotConfluent,
    PatternError,
    PresentationSyntaxError,
    RelationViolated,
    WordSyntaxError,
)
from .finite import (
    FiniteMonoid,
    Homomorphism,
    build_finite,
    holds_in_finite,
    idempotents,
    image,
    make_hom,
)
from .identities import (
    FreePairResult,
    Identity,
    IsotermReport,
    Verdict,
    balanced_candidates,
    check_identity,
    evaluate,
    find_witness,
    free_pair_check,
    holds_in_naturals,
    isoterm_check,
    naturals_value,
    parse_identity,
    zimin_isoterm_check,
)
from .malcev import (
    ClassDescriptor,
    CommutativityVerdict,
    KernelClass,
    MalcevReport,
    class_commutative,
    classify,
    malcev_com_fin_evidence,
    match_class_descriptors,
    parse_descriptor,
)
from .presets import load_presentation, load_system, preset_names
from .rewriting import (
    CompletionResult,
    CriticalPair,
    Presentation,
    RewriteRule,
    RewriteSystem,
    critical_pairs,
    enumerate_normal_forms,
    is_locally_confluent,
    knuth_bendix,
    normal_form,
    orient,
    parse_presentation,
)
from .words import (
    GENERATORS,
    VARIABLES,
    Alphabet,
    ParikhVector,
    Substitution,
    Word,
    concat,
    is_balanced,
    parikh,
    parse_word,
    substitute,
    zimin,
    zimin_alphabet,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetMismatch",
    "BudgetExceeded",
    "ClassDescriptor",
    "CommutativityVerdict",
    "CompletionResult",
    "CriticalPair",
    "FiniteMonoid",
    "FreePairResult",
    "GENERATORS",
    "Homomorphism",
    "Identity",
    "IdentitySyntaxError",
    "IsotermReport",
    "KernelClass",
    "MalcevReport",
    "MonoidLabError",
    "NotConfluent",
    "ParikhVector",
    "PatternError",
    "Presentation",
    "PresentationSyntaxError",
    "RelationViolated",
    "RewriteRule",
    "RewriteSystem",
    "Substitution",
    "VARIABLES",
    "Verdict",
    "Word",
    "WordSyntaxError",
    "balanced_candidates",
    "build_finite",
    "check_identity",
    "class_commutative",
    "classify",
    "concat",
    "critical_pairs",
    "enumerate_normal_forms",
    "evaluate",
    "find_witness",
    "free_pair_check",
    "holds_in_finite",
    "holds_in_naturals",
    "idempotents",
    "image",
    "is_balanced",
    "is_locally_confluent",
    "isoterm_check",
    "knuth_bendix",
    "load_presentation",
    "load_system",
    "make_hom",
    "malcev_com_fin_evidence",
    "match_class_descriptors",
    "naturals_value",
    "normal_form",
    "orient",
    "parikh",
    "parse_descriptor",
    "parse_identity",
    "parse_presentation",
    "parse_word",
    "preset_names",
    "substitute",
    "zimin",
    "zimin_alphabet",
    "zimin_isoterm_check",
]
