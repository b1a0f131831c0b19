"""Exact integer computations in the involutive residuated lattices A(n, p).

The family glues a lexicographic-pair MV-chain onto a finite Lukasiewicz
chain.  resilat.core holds the element type and operations, resilat.terms
a small term language with an exhaustive window equation checker,
resilat.structure filters, quotients, and subalgebras, resilat.harness
the property suites S1-S16 with mutation testing, and resilat.cli the
command-line front end.
"""

from resilat.core import (
    AlgebraParams,
    ApElem,
    LexPair,
    ParamsMismatchError,
    UniverseError,
    ap_bot,
    ap_div,
    ap_inv,
    ap_join,
    ap_leq,
    ap_meet,
    ap_mul,
    ap_mult,
    ap_neg,
    ap_oplus,
    ap_pow,
    ap_top,
    ap_validate,
    boolean_term,
    parse_element,
    render_element,
)
from resilat.structure import Window

__version__ = "0.1.0"

__all__ = [
    "AlgebraParams",
    "ApElem",
    "LexPair",
    "ParamsMismatchError",
    "UniverseError",
    "Window",
    "ap_bot",
    "ap_div",
    "ap_inv",
    "ap_join",
    "ap_leq",
    "ap_meet",
    "ap_mul",
    "ap_mult",
    "ap_neg",
    "ap_oplus",
    "ap_pow",
    "ap_top",
    "ap_validate",
    "boolean_term",
    "parse_element",
    "render_element",
    "__version__",
]
