"""Chain-level cup-n products and mod-2 squaring operations on ordered
simplicial complexes, with exact summand counting and a small GF(2)
toolkit for cocycle/coboundary verification."""

from .cochains import Cochain, FormalSum, coboundary, differential, is_cocycle
from .counting import count_bounded, count_oracle, count_sq, table1
from .cup import (LoopBounds, SignExponents, Summand, bounded_index_tuples,
                  bounded_summands, cup_eval_bounded, cup_eval_oracle,
                  cup_product, full_index_tuples, lower_bound, oracle_summands,
                  sign_exponent, sign_exponents)
from .errors import (DimensionMismatch, FileFormatError, InvalidSimplex,
                     InvalidTuple, MalformedPair, NotACocycle, NotInComplex,
                     SupportNotInComplex)
from .mod2 import (Mod2Matrix, betti_mod2, coboundary_matrix, cocycle_basis,
                   is_coboundary_mod2, nontrivial_cocycle)
from .rings import Ring, Z, Z2
from .simplicial import (SimplicialComplex, as_simplex, degeneracy, dimension,
                         face, intersection, is_degenerate, union)
from .steenrod import (assembling_pairs, dz_parity, pair_based_cocycle_check,
                       segments, sq)
from .words import (IndexTuple, apply_minus, apply_plus, blocks, merge, split,
                    tuple_of_word, word_of)

__version__ = "0.1.0"

__all__ = [
    "Cochain", "FormalSum", "coboundary", "differential", "is_cocycle",
    "count_bounded", "count_oracle", "count_sq", "table1",
    "LoopBounds", "SignExponents", "Summand", "bounded_index_tuples",
    "bounded_summands", "cup_eval_bounded", "cup_eval_oracle", "cup_product",
    "full_index_tuples", "lower_bound", "oracle_summands", "sign_exponent",
    "sign_exponents",
    "DimensionMismatch", "FileFormatError", "InvalidSimplex", "InvalidTuple",
    "MalformedPair", "NotACocycle", "NotInComplex", "SupportNotInComplex",
    "Mod2Matrix", "betti_mod2", "coboundary_matrix", "cocycle_basis",
    "is_coboundary_mod2", "nontrivial_cocycle",
    "Ring", "Z", "Z2",
    "SimplicialComplex", "as_simplex", "degeneracy", "dimension", "face",
    "intersection", "is_degenerate", "union",
    "assembling_pairs", "dz_parity", "pair_based_cocycle_check", "segments",
    "sq",
    "IndexTuple", "apply_minus", "apply_plus", "blocks", "merge", "split",
    "tuple_of_word", "word_of",
]
