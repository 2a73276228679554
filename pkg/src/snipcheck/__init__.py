"""Corpus-analysis toolchain for rating the usability of Q&A code snippets.

Usability is a stage ladder: a snippet is *parsable* when a grammar
frontend builds a full syntax tree, then *compilable* (statically-typed
languages) or *runnable* (dynamic languages). Later stages run only on
snippets that passed parsing.
"""

__version__ = "0.1.0"

from snipcheck.model import Language, Post, PostType, Snippet

__all__ = ["Language", "Post", "PostType", "Snippet", "__version__"]
