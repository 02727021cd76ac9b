"""Formula and term syntax, rewriting, evaluation and the Proto/Anti axiom tables."""

from .axioms import PROTO, ANTI_TRANSCRIBED, AxiomSchema, derive_anti_axiom, lookup, normalize
from .evaluate import Evaluator, PredSpec, eval_term, evaluate, term_member
from .parser import parse, parse_formula, parse_term, to_text
from .rewrite import contravaluate, dualize, nnf, term_complement
from .syntax import *  # noqa: F401,F403
