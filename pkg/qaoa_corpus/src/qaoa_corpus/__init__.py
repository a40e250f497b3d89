"""Corpus generator: QAOA MAX-CUT circuits compiled to graph-state edge
lists, ready for the gspart partitioning toolkit."""

from .build import (
    DEFAULT_BETA,
    DEFAULT_GAMMA,
    CompilerUnavailable,
    CorpusEntry,
    build_corpus,
    build_qaoa_maxcut_graphstate,
)

__version__ = "0.1.0"

__all__ = [
    "CompilerUnavailable",
    "CorpusEntry",
    "DEFAULT_BETA",
    "DEFAULT_GAMMA",
    "build_corpus",
    "build_qaoa_maxcut_graphstate",
    "__version__",
]
