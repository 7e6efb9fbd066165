"""Brute-force verifiers used as ground truth for every solver output.

Nothing here calls the solvers or :class:`~maxrep.seqcore.OccIndex`; the
checks run on raw symbol tuples.  Exhaustive enumerators carry hard size
guards and raise :class:`InstanceTooLarge` instead of running unbounded.

Maximality is tested by single-symbol insertions only.  This is sound
because k-repeating subsequences are closed under taking subsequences: a
proper k-repeating supersequence Y of X contains some one-symbol extension
X' of X, and X'^k is a subsequence of Y^k, hence of S.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional

import numpy as np

from .errors import InstanceTooLarge, NotKRepeating
from .results import MaximalityVerdict
from .seqcore import Seq, as_seq

SIGMA_START_LIMIT = 10**6


def _embeds(pattern, host) -> bool:
    it = iter(host)
    return all(c in it for c in pattern)


def check_k_repeating(S, X, k: int) -> tuple[bool, Optional[list[list[int]]]]:
    """Greedy two-pointer match of X^k against S.

    Returns ``(True, blocks)`` with the leftmost embedding cut into k blocks
    of 1-based positions, or ``(False, None)``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    s = as_seq(S).symbols
    x = as_seq(X).symbols
    target = x * k
    pos = []
    i = 0
    for c in target:
        while i < len(s) and s[i] != c:
            i += 1
        if i == len(s):
            return False, None
        pos.append(i + 1)
        i += 1
    m = len(x)
    return True, [pos[t * m:(t + 1) * m] for t in range(k)]


def witness_is_valid(S, X, k: int, witness) -> bool:
    """Check that ``witness`` is k ordered, increasing blocks each spelling X in S."""
    s = as_seq(S).symbols
    x = as_seq(X).symbols
    if witness is None or len(witness) != k:
        return False
    last = 0
    for block in witness:
        if len(block) != len(x):
            return False
        for p, c in zip(block, x):
            if not (last < p <= len(s)) or s[p - 1] != c:
                return False
            last = p
    return True


def _insertion_table(s: tuple, x: tuple, k: int):
    """Boolean matrix ok[c, g]: inserting alphabet[c] at gap g keeps X k-repeating."""
    alphabet = sorted(set(s))
    if not alphabet:
        return alphabet, np.zeros((0, len(x) + 1), dtype=bool)
    ids = {c: i for i, c in enumerate(alphabet)}
    n, m = len(s), len(alphabet)
    nxt = np.full((n + 2, m), n + 1, dtype=np.int64)
    for p in range(n, 0, -1):
        nxt[p - 1] = nxt[p]
        nxt[p - 1, ids[s[p - 1]]] = p
    xi = [ids[c] for c in x]
    gaps = np.arange(len(x) + 1)
    cand = np.arange(m)[:, None]
    pos = np.zeros((m, len(x) + 1), dtype=np.int64)
    for _ in range(k):
        for t in range(len(x) + 1):
            before = xi[t] if t < len(x) else 0
            after = xi[t - 1] if t > 0 else 0
            sym = np.where(gaps > t, before, np.where(gaps == t, cand, after))
            pos = nxt[pos, sym]
    return alphabet, pos <= n


def check_maximal_k_rep(S, X, k: int) -> MaximalityVerdict:
    """Maximality of the k-repeating subsequence X of S under single insertions."""
    s = as_seq(S).symbols
    x = as_seq(X).symbols
    ok, _ = check_k_repeating(s, x, k)
    if not ok:
        raise NotKRepeating(f"candidate is not a {k}-repeating subsequence")
    alphabet, table = _insertion_table(s, x, k)
    hits = np.argwhere(table.T)  # rows ordered by gap, then symbol
    if len(hits):
        gap, c = hits[0]
        return MaximalityVerdict(True, False, (int(gap), alphabet[c]))
    return MaximalityVerdict(True, True, None)


def check_maximal_k_rep_naive(S, X, k: int) -> MaximalityVerdict:
    """Same verdict as :func:`check_maximal_k_rep`, by explicit re-matching."""
    s = as_seq(S).symbols
    x = as_seq(X).symbols
    if not _embeds(x * k, s):
        raise NotKRepeating(f"candidate is not a {k}-repeating subsequence")
    for gap in range(len(x) + 1):
        for c in sorted(set(s)):
            y = x[:gap] + (c,) + x[gap:]
            if _embeds(y * k, s):
                return MaximalityVerdict(True, False, (gap, c))
    return MaximalityVerdict(True, True, None)


def is_sigma_start(S, sigma, r: int, p) -> bool:
    s = as_seq(S).symbols
    n = len(s)
    if not all(1 <= a < b <= n for a, b in zip(p, p[1:])) or not p:
        return False
    if not 1 <= p[0] <= n or any(s[q - 1] != sigma for q in p):
        return False
    bounds = list(p) + [n + 1]
    return all(_embeds((sigma,) * r, s[bounds[j] - 1:bounds[j + 1] - 1])
               for j in range(len(p)))


def brute_sigma_starts(S, sigma, r: int, k: int) -> set[tuple]:
    s = as_seq(S).symbols
    occ = [i for i, c in enumerate(s, 1) if c == sigma]
    if comb(len(occ), k) > SIGMA_START_LIMIT:
        raise InstanceTooLarge(f"C({len(occ)},{k}) candidate tuples exceed {SIGMA_START_LIMIT}")
    return {p for p in combinations(occ, k) if is_sigma_start(s, sigma, r, p)}


def _size_guard(n: int, k: int):
    limit = 14 if k <= 2 else 12
    if n > limit:
        raise InstanceTooLarge(f"n={n} exceeds exhaustive limit {limit} for k={k}")


def all_k_repeating(S, k: int) -> set[Seq]:
    """Every distinct X with X^k a subsequence of S (prefix-closed search)."""
    s = as_seq(S).symbols
    _size_guard(len(s), k)
    alphabet = sorted(set(s))
    found = {()}
    stack = [()]
    while stack:
        x = stack.pop()
        if (len(x) + 1) * k > len(s):
            continue
        for c in alphabet:
            y = x + (c,)
            if y not in found and _embeds(y * k, s):
                found.add(y)
                stack.append(y)
    return {Seq(x) for x in found}


def brute_all_maximal(S, k: int) -> set[Seq]:
    """All maximal k-repeating subsequences of S (the repeated units, not X^k)."""
    krep = all_k_repeating(S, k)
    keys = {x.symbols for x in krep}
    alphabet = sorted(set(as_seq(S).symbols))
    maximal = set()
    for x in krep:
        t = x.symbols
        if not any(t[:g] + (c,) + t[g:] in keys
                   for g in range(len(t) + 1) for c in alphabet):
            maximal.add(x)
    return maximal


@dataclass(frozen=True)
class McsVerdict:
    contains_constraint: bool
    is_common: bool
    is_maximal: bool
    counterexample: Optional[tuple] = None  # (gap, symbol)

    @property
    def ok(self) -> bool:
        return self.contains_constraint and self.is_common and self.is_maximal

    def as_dict(self) -> dict:
        ce = None
        if self.counterexample is not None:
            ce = {"gap": self.counterexample[0], "symbol": self.counterexample[1]}
        return {"contains_constraint": self.contains_constraint,
                "is_common": self.is_common, "is_maximal": self.is_maximal,
                "counterexample": ce}


def verify_mcs_output(hosts, constraint, M) -> McsVerdict:
    hs = [as_seq(h).symbols for h in hosts]
    c = as_seq(constraint).symbols
    m = as_seq(M).symbols
    contains = _embeds(c, m)
    common = all(_embeds(m, h) for h in hs)
    if not common:
        return McsVerdict(contains, False, False)
    symbols = sorted(set(hs[0]).intersection(*hs[1:]))
    for gap in range(len(m) + 1):
        for sym in symbols:
            y = m[:gap] + (sym,) + m[gap:]
            if all(_embeds(y, h) for h in hs):
                return McsVerdict(contains, True, False, (gap, sym))
    return McsVerdict(contains, True, True)


def lcs_length(a, b) -> int:
    """Bit-parallel LCS length (one machine-free big-int row per symbol of a)."""
    a = as_seq(a).symbols
    b = as_seq(b).symbols
    if not a or not b:
        return 0
    masks: dict = {}
    for j, c in enumerate(b):
        masks[c] = masks.get(c, 0) | (1 << j)
    full = (1 << len(b)) - 1
    v = full
    for c in a:
        u = v & masks.get(c, 0)
        v = ((v + u) | (v - u)) & full
    return len(b) - bin(v).count("1")


def lss_oracle(S) -> int:
    """Length of a longest square subsequence, via the best cut point."""
    s = as_seq(S).symbols
    if len(s) > 600:
        raise InstanceTooLarge(f"n={len(s)} exceeds the cubic oracle budget of 600")
    return max(2 * lcs_length(s[:i], s[i:]) for i in range(len(s) + 1))
