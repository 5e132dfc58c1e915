"""Word arithmetic, rewrite rules and equality search for the reduced braid group."""

from .certificate import Certificate, Step, StepError, apply_step, invert_step, replay
from .rules import RELATORS, RewriteRule, check_catalog, rule_catalog, splice
from .search import (DEFAULT_MAX_NODES, Budget, Distinct, Equivalent, SearchReport,
                     Unknown, default_max_len, equivalent, simplify)
from .words import (GENERATORS, IDENTITY, BraidWord, ParityTriple, WordSyntaxError,
                    concat, format_word, free_reduce, invert, parity, parse_word)

__all__ = [
    "BraidWord", "Budget", "Certificate", "DEFAULT_MAX_NODES", "Distinct", "Equivalent",
    "GENERATORS", "IDENTITY", "ParityTriple", "RELATORS", "RewriteRule", "SearchReport",
    "Step", "StepError", "Unknown", "WordSyntaxError", "apply_step", "check_catalog",
    "concat", "default_max_len", "equivalent", "format_word", "free_reduce", "invert",
    "invert_step", "parity", "parse_word", "replay", "rule_catalog", "simplify", "splice",
]
