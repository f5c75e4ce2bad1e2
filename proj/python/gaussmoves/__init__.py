"""Gauss diagram rewriting: Reidemeister moves I-III and the forbidden moves.

Diagrams are passed as signed Gauss-code strings (e.g. ``"O1+U1+"``, the
empty string for the unknot); traces are passed as line-oriented text in the
same step grammar the command-line tool uses.
"""

from ._core import (
    MoveError,
    ParseError,
    ReplayError,
    UNKNOT_LENGTH_FACTOR,
    apply,
    canonical_form,
    equal,
    moves,
    odd_writhe,
    parse,
    random_diagram,
    render_ascii,
    render_dot,
    replay,
    trace_stats,
    transform,
    unknot,
    validate,
    writhe,
)

__all__ = [
    "MoveError",
    "ParseError",
    "ReplayError",
    "UNKNOT_LENGTH_FACTOR",
    "apply",
    "canonical_form",
    "equal",
    "moves",
    "odd_writhe",
    "parse",
    "random_diagram",
    "render_ascii",
    "render_dot",
    "replay",
    "trace_stats",
    "transform",
    "unknot",
    "validate",
    "writhe",
]
