"""Maximal square subsequence: seed sigma^{2e}, grow to YY, then to ZZ.

``compute_x1`` grows the half of sigma^e * sigma^e so that no square
containing it can be extended on the right or in the middle.
``compute_x2`` then grows it leftwards from the leftmost anchors of the
first (and, for odd occurrence counts, second) sigma.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import AnchorMismatch, PipelineInvariantViolated, SymbolTooRare
from .mcs import saturate
from .results import KRepResult, MaximalityVerdict
from .seqcore import Seq, _next_pt, as_seq, kfold_embedding


@dataclass
class SquarePipelineState:
    sigma: object
    ell: int
    e: int
    sigma_positions: list
    y_half: Optional[Seq] = None
    z_half: Optional[Seq] = None
    anchors: list = field(default_factory=list)


def choose_sigma(S, min_count: int = 2):
    """Smallest symbol occurring at least ``min_count`` times, or None."""
    occ = as_seq(S).occ
    for c in occ.alphabet:
        if occ.count(c) >= min_count:
            return c
    return None


def _positions(S: Seq, sigma) -> list:
    pos = S.occ.positions.get(sigma, [])
    if len(pos) < 2:
        raise SymbolTooRare(f"{sigma!r} occurs {len(pos)} time(s); at least 2 are needed")
    return pos


def compute_x1(S, sigma) -> Seq:
    """Half Y of X1 = YY: contains sigma^e, starts with sigma, not right/inner extendable."""
    S = as_seq(S)
    pos = _positions(S, sigma)
    n, ell = len(S), len(pos)
    e = ell // 2
    occ = S.occ
    # S[i_1, i_{e+1}) and S[i_{e+1}, n] as exclusive windows
    y = saturate([(occ, pos[0] - 1, pos[e]), (occ, pos[e] - 1, n + 1)], (sigma,) * e)
    if ell % 2 == 1 and _next_pt(occ, y, pos[e + 1] - 1) is not None:
        y = saturate([(occ, pos[0] - 1, pos[e + 1]), (occ, pos[e + 1] - 1, n + 1)], y)
    return Seq(y)


def leftmost_anchor(S, Y, i_t: int) -> Optional[int]:
    """Smallest j with Y a subsequence of S[i_t, j]."""
    S, Y = as_seq(S), as_seq(Y)
    if not Y or not 1 <= i_t <= len(S) or S.at(i_t) != Y.symbols[0]:
        raise AnchorMismatch(f"S[{i_t}] does not start Y")
    return _next_pt(S.occ, Y.symbols, i_t - 1)


def compute_x2(S, Y, sigma, state: Optional[SquarePipelineState] = None) -> Seq:
    """Half Z of the maximal square X2 = ZZ containing YY."""
    S, Y = as_seq(S), as_seq(Y)
    pos = _positions(S, sigma)
    n, occ = len(S), S.occ
    j1 = leftmost_anchor(S, Y, pos[0])
    if j1 is None:
        raise PipelineInvariantViolated("no leftmost anchor at the first sigma")
    anchors = [j1]
    z = saturate([(occ, 0, j1 + 1), (occ, j1, n + 1)], Y.symbols)
    if len(pos) % 2 == 1:
        j2 = leftmost_anchor(S, Y, pos[1])
        if j2 is None:
            raise PipelineInvariantViolated("no leftmost anchor at the second sigma")
        anchors.append(j2)
        if _next_pt(occ, z, j2) is not None:
            z = saturate([(occ, 0, j2 + 1), (occ, j2, n + 1)], z)
    if state is not None:
        state.anchors = anchors
    return Seq(z)


def square_pipeline(S, sigma) -> SquarePipelineState:
    S = as_seq(S)
    pos = _positions(S, sigma)
    state = SquarePipelineState(sigma, len(pos), len(pos) // 2, list(pos))
    state.y_half = compute_x1(S, sigma)
    state.z_half = compute_x2(S, state.y_half, sigma, state)
    return state


def maximal_square_subsequence(S, sigma=None, verify: bool = False) -> KRepResult:
    """A maximal square subsequence ZZ of S, returned with Z as ``unit``.

    ``sigma`` defaults to :func:`choose_sigma`.  With ``verify`` the result
    carries a single-insertion maximality verdict.
    """
    S = as_seq(S)
    if sigma is None:
        sigma = choose_sigma(S, 2)
    if sigma is None:
        # only singletons: the empty square is the sole square subsequence
        return KRepResult(Seq(), 2, None, [[], []],
                          verdict=MaximalityVerdict(True, True, None))
    state = square_pipeline(S, sigma)
    z = state.z_half
    result = KRepResult(z, 2, sigma, kfold_embedding(S, z, 2),
                        stats={"ell": state.ell, "e": state.e,
                               "y_half": state.y_half, "anchors": state.anchors})
    if verify:
        from .oracle import check_maximal_k_rep
        result.verdict = check_maximal_k_rep(S, z, 2)
    return result
