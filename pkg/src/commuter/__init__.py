"""Slice diagrams over free monoidal signatures: canonical forms, a bounded
equational prover, duality-driven theorem checks, and two concrete models."""

from .core import (
    Diagram,
    MorGen,
    ObjectGen,
    Signature,
    Slice,
    Word,
    boundaries,
    codomain,
    compose,
    fmt_word,
    gen_diagram,
    identity,
    intermediate_words,
    tensor,
    well_typed,
    whisker,
)
from .errors import (
    BudgetError,
    CommuterError,
    MatchInvalidError,
    NotSwappableError,
    NumericError,
    ParseError,
    SearchExhausted,
    SignatureError,
    SizeError,
    TypingError,
)
from .exchange import (
    CanonicalForm,
    adjacent_swap,
    canonicalize,
    dependency_graph,
    interchange_equal,
    linearizations,
    swappable,
)
from .prover import (
    Match,
    ProofStep,
    ProofTrace,
    RewriteRule,
    SearchBudget,
    apply_rule,
    find_matches,
    prove_equal,
    replay,
    rules_from_signature,
)
from .rng import Lcg

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CanonicalForm",
    "CommuterError",
    "Diagram",
    "Lcg",
    "Match",
    "MatchInvalidError",
    "MorGen",
    "NotSwappableError",
    "NumericError",
    "ObjectGen",
    "ParseError",
    "ProofStep",
    "ProofTrace",
    "RewriteRule",
    "SearchBudget",
    "SearchExhausted",
    "Signature",
    "SignatureError",
    "SizeError",
    "Slice",
    "TypingError",
    "Word",
    "adjacent_swap",
    "apply_rule",
    "boundaries",
    "canonicalize",
    "codomain",
    "compose",
    "dependency_graph",
    "find_matches",
    "fmt_word",
    "gen_diagram",
    "identity",
    "interchange_equal",
    "intermediate_words",
    "linearizations",
    "prove_equal",
    "replay",
    "rules_from_signature",
    "swappable",
    "tensor",
    "well_typed",
    "whisker",
    "__version__",
]
