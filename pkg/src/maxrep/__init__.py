"""Maximal square and maximal k-repeating subsequences of a single string."""
from .errors import MaxrepError
from .krepeat import (constrained_k_repeating, enum_divisions, enum_sigma_starts,
                      extend_k_rep, is_sigma_split_point, maximal_k_repeating)
from .mcs import McsInstance, feasible_insertions, maximal_common_subsequence, mkcs_constrained
from .results import KRepResult, MaximalityVerdict
from .seqcore import (OccIndex, Seq, leftmost_embedding, next_pt, occ_positions, prev_pt,
                      rightmost_embedding)
from .square import compute_x1, compute_x2, leftmost_anchor, maximal_square_subsequence

__version__ = "0.1.0"
