"""Relational fixpoint semantics, Sorites models and sequent checking for
fundamental logic and its neighbours."""

from .engine import Budget, Invalid, Unknown, Valid, check, find_countermodel, gg_embedding_check, saturate
from .formula import And, Formula, Neg, Or, Sequent, SoritesParams, Var, parse, parse_sequent, to_text
from .frames import Frame, class_check, closure, enumerate_frames, fixpoints
from .lattice import Lattice, represent
from .semantics import Model, evaluate
from .sorites import build_pseudosymmetric, build_symmetric, verify_facts

__all__ = [
    "And", "Budget", "Formula", "Frame", "Invalid", "Lattice", "Model", "Neg", "Or", "Sequent",
    "SoritesParams", "Unknown", "Valid", "Var", "build_pseudosymmetric", "build_symmetric", "check",
    "class_check", "closure", "enumerate_frames", "evaluate", "find_countermodel", "fixpoints",
    "gg_embedding_check", "parse", "parse_sequent", "represent", "saturate", "to_text", "verify_facts",
]
