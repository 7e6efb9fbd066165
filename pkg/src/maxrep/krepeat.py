"""Maximal k-repeating subsequences by extending a seed around a pivot symbol.

A seed X = A sigma B (A free of sigma) is grown by visiting every sigma-start
for sigma^r, r = occ_X(sigma).  Where the start is a sigma-split point for
the current (A, B), B is saturated against the k blocks to the right of the
start symbols and then A against the k blocks to their left.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional, Sequence

from .errors import (EmptySeed, InvalidK, MalformedTuple, NotKRepeating,
                     SymbolNotInSeed, TooFewOccurrences)
from .mcs import saturate
from .results import KRepResult, MaximalityVerdict
from .seqcore import Seq, _next_pt, _prev_pt, as_seq, kfold_embedding


@dataclass(frozen=True)
class KRepProblem:
    S: Seq
    k: int
    sigma: object
    r: int

    @property
    def R(self) -> int:
        return self.S.occ.count(self.sigma) - self.k * self.r


def enum_divisions(h: int, d: int) -> Iterator[tuple]:
    """Every (d+1)-tuple of non-negative ints summing to h, first coordinate ascending."""
    if d <= 0:
        yield (h,)
        return
    for i in range(h + 1):
        for rest in enum_divisions(h - i, d - 1):
            yield (i,) + rest


def enum_sigma_starts(r: int, k: int, positions: Sequence[int]) -> Iterator[tuple]:
    """Stream every sigma-start for sigma^r, given the sorted sigma positions.

    Yields exactly C(R + k, k) tuples, R = len(positions) - k*r.
    """
    if r < 1 or k < 1:
        raise ValueError("r and k must be positive")
    R = len(positions) - k * r
    if R < 0:
        raise TooFewOccurrences(f"{len(positions)} occurrences < k*r = {k * r}")
    for sol in enum_divisions(R, k):
        out = []
        acc = 0
        for t in range(k):
            acc += sol[t]
            out.append(positions[t * r + acc])
        yield tuple(out)


def count_sigma_starts(r: int, k: int, occurrences: int) -> int:
    return comb(occurrences - k * r + k, k)


def _split_ok(occ, a: tuple, b: tuple, p: Sequence[int]) -> bool:
    nxt_prev = None
    for i, pi in enumerate(p):
        before = _prev_pt(occ, a, pi)
        after = _next_pt(occ, b, pi)
        if before is None or after is None:
            return False
        if i and not nxt_prev < before:
            return False
        nxt_prev = after
    return True


def is_sigma_split_point(S, A, B, sigma, p: Sequence[int]) -> bool:
    S = as_seq(S)
    if not p or any(not 1 <= q <= len(S) or S.at(q) != sigma for q in p):
        raise MalformedTuple(f"{tuple(p)} is not a tuple of {sigma!r} positions")
    if any(x >= y for x, y in zip(p, p[1:])):
        raise MalformedTuple(f"{tuple(p)} is not strictly increasing")
    return _split_ok(S.occ, as_seq(A).symbols, as_seq(B).symbols, p)


def _greedy_failure(S: Seq, X: Seq, k: int) -> str:
    cur = 0
    occ = S.occ
    for copy in range(1, k + 1):
        for idx, c in enumerate(X.symbols, 1):
            nxt = occ.next_after(c, cur)
            if nxt is None:
                return (f"copy {copy}, symbol {idx} ({c!r}) has no match after "
                        f"input position {cur}")
            cur = nxt
    return ""


def _extend(S: Seq, X: Seq, sigma, k: int):
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    if not X:
        raise EmptySeed("the seed must be non-empty")
    if sigma not in X.symbols:
        raise SymbolNotInSeed(f"{sigma!r} does not occur in the seed")
    failure = _greedy_failure(S, X, k)
    if failure:
        raise NotKRepeating(f"seed is not {k}-repeating: {failure}")

    n, occ = len(S), S.occ
    first = X.symbols.index(sigma)
    a = X.symbols[:first]
    b = X.symbols[first + 1:]
    problem = KRepProblem(S, k, sigma, X.symbols.count(sigma))
    starts = splits = 0
    for alpha in enum_sigma_starts(problem.r, k, occ.positions[sigma]):
        starts += 1
        if not _split_ok(occ, a, b, alpha):
            continue
        splits += 1
        ends = [_prev_pt(occ, a, alpha[i + 1]) for i in range(k - 1)] + [n + 1]
        b = tuple(saturate([(occ, alpha[i], ends[i]) for i in range(k)], b))
        lefts = [0] + [_next_pt(occ, b, alpha[i - 1]) for i in range(1, k)]
        a = tuple(saturate([(occ, lefts[i], alpha[i]) for i in range(k)], a))
    stats = {"r": problem.r, "R": problem.R, "starts_enumerated": starts,
             "split_points": splits}
    return Seq(a), Seq(b), stats


def extend_k_rep(S, X, sigma, k: int) -> Seq:
    """A maximal k-repeating subsequence of S that contains the seed X."""
    a, b, _ = _extend(as_seq(S), as_seq(X), sigma, k)
    return a + Seq((sigma,)) + b


def most_frequent_symbol(S, min_count: int = 1):
    """Most frequent symbol, ties to the smallest; None below ``min_count``."""
    occ = as_seq(S).occ
    best = None
    for c in occ.alphabet:
        if best is None or occ.count(c) > occ.count(best):
            best = c
    if best is None or occ.count(best) < min_count:
        return None
    return best


def _finish(S: Seq, unit: Seq, k: int, sigma, a, b, stats, verify: bool) -> KRepResult:
    result = KRepResult(unit, k, sigma, kfold_embedding(S, unit, k), a, b, stats=stats)
    if verify:
        from .oracle import check_maximal_k_rep
        result.verdict = check_maximal_k_rep(S, unit, k)
    return result


def constrained_k_repeating(S, X, k: int, sigma=None, verify: bool = False) -> KRepResult:
    """Maximal k-repeating subsequence containing X; sigma defaults to X's most frequent symbol."""
    S, X = as_seq(S), as_seq(X)
    if sigma is None:
        sigma = most_frequent_symbol(X)
    a, b, stats = _extend(S, X, sigma, k)
    return _finish(S, a + Seq((sigma,)) + b, k, sigma, a, b, stats, verify)


def maximal_k_repeating(S, k: int, sigma=None, verify: bool = False) -> KRepResult:
    """One maximal k-repeating subsequence of S, seeded with sigma^{floor(l/k)}."""
    S = as_seq(S)
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    if k == 1:
        return _finish(S, S, 1, None, None, None, {}, verify)
    if sigma is None:
        sigma = most_frequent_symbol(S, k)
    if sigma is None:
        return KRepResult(Seq(), k, None, [[] for _ in range(k)],
                          verdict=MaximalityVerdict(True, True, None))
    ell = S.occ.count(sigma)
    if ell < k:
        raise TooFewOccurrences(f"{sigma!r} occurs {ell} < k = {k} times")
    seed = Seq((sigma,) * (ell // k))
    a, b, stats = _extend(S, seed, sigma, k)
    stats["seed_unit"] = seed
    return _finish(S, a + Seq((sigma,)) + b, k, sigma, a, b, stats, verify)
