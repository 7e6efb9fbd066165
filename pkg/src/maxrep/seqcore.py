"""Sequences, occurrence indexes and greedy subsequence embeddings.

All public positions are 1-based.  A position ``0`` or ``len(S) + 1`` is
accepted where a sentinel is natural (the open lower bound of a prefix
window, or the open upper bound of a suffix window).
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Optional, Sequence


class Seq:
    """Immutable symbol sequence.

    Built from a ``str`` (unicode code points), ``bytes`` (symbols are the
    integers 0..255) or any iterable of hashable, mutually comparable symbols.
    """

    def __init__(self, symbols: Iterable[Hashable] = ()):
        if isinstance(symbols, Seq):
            symbols = symbols.symbols
        self.symbols = tuple(symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator:
        return iter(self.symbols)

    def __eq__(self, other) -> bool:
        if isinstance(other, Seq):
            return self.symbols == other.symbols
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __add__(self, other: "Seq") -> "Seq":
        return Seq(self.symbols + as_seq(other).symbols)

    def __mul__(self, times: int) -> "Seq":
        return Seq(self.symbols * times)

    def __bool__(self) -> bool:
        return bool(self.symbols)

    def __repr__(self) -> str:
        return f"Seq({self.text!r})"

    def __str__(self) -> str:
        return self.text

    @property
    def is_bytes(self) -> bool:
        return bool(self.symbols) and isinstance(self.symbols[0], int)

    @property
    def text(self):
        """Render back to ``str`` (or ``bytes`` for integer symbols)."""
        if self.is_bytes:
            return bytes(self.symbols)
        return "".join(str(c) for c in self.symbols)

    # 1-based access and interval views.
    def at(self, i: int):
        if not 1 <= i <= len(self.symbols):
            raise IndexError(f"position {i} outside 1..{len(self.symbols)}")
        return self.symbols[i - 1]

    def closed(self, i: int, j: int) -> "Seq":
        """S[i, j]"""
        if i > j:
            return Seq()
        return Seq(self.symbols[max(i, 1) - 1:max(j, 0)])

    def half_open(self, i: int, j: int) -> "Seq":
        """S[i, j) = S[i, j-1]"""
        return self.closed(i, j - 1)

    def left_open(self, i: int, j: int) -> "Seq":
        """S(i, j] = S[i+1, j]"""
        return self.closed(i + 1, j)

    def open(self, i: int, j: int) -> "Seq":
        """S(i, j) = S[i+1, j-1]"""
        return self.closed(i + 1, j - 1)

    def count(self, symbol) -> int:
        return self.symbols.count(symbol)

    @cached_property
    def occ(self) -> "OccIndex":
        return OccIndex(self)

    def contains(self, pattern) -> bool:
        """True iff ``pattern`` is a subsequence of this sequence."""
        return leftmost_embedding(pattern, self, 0) is not None


def as_seq(value) -> Seq:
    if isinstance(value, Seq):
        return value
    if value is None:
        return Seq()
    return Seq(value)


class OccIndex:
    """Per-symbol sorted occurrence lists of one sequence.

    ``next_after``/``prev_before`` answer in O(log n) by bisection.
    """

    def __init__(self, seq: Seq):
        positions: dict = {}
        for i, c in enumerate(seq.symbols, 1):
            positions.setdefault(c, []).append(i)
        self.n = len(seq)
        self.positions = positions
        self.alphabet = tuple(sorted(positions))

    def count(self, symbol) -> int:
        return len(self.positions.get(symbol, ()))

    def next_after(self, symbol, pos: int) -> Optional[int]:
        """Smallest position > pos holding ``symbol``."""
        lst = self.positions.get(symbol)
        if lst is None:
            return None
        k = bisect_right(lst, pos)
        return lst[k] if k < len(lst) else None

    def prev_before(self, symbol, pos: int) -> Optional[int]:
        """Largest position < pos holding ``symbol``."""
        lst = self.positions.get(symbol)
        if lst is None:
            return None
        k = bisect_left(lst, pos)
        return lst[k - 1] if k > 0 else None


def occ_positions(S, symbol) -> list[int]:
    return list(as_seq(S).occ.positions.get(symbol, ()))


def leftmost_embedding(pattern, host, start: int = 0) -> Optional[list[int]]:
    """Index-wise smallest embedding of ``pattern`` into host(start, |host|]."""
    host = as_seq(host)
    if not 0 <= start <= len(host):
        raise ValueError(f"start {start} outside 0..{len(host)}")
    occ = host.occ
    out = []
    cur = start
    for c in as_seq(pattern):
        cur = occ.next_after(c, cur)
        if cur is None:
            return None
        out.append(cur)
    return out


def rightmost_embedding(pattern, host, end: Optional[int] = None) -> Optional[list[int]]:
    """Index-wise largest embedding of ``pattern`` into host[1, end)."""
    host = as_seq(host)
    if end is None:
        end = len(host) + 1
    if not 1 <= end <= len(host) + 1:
        raise ValueError(f"end {end} outside 1..{len(host) + 1}")
    occ = host.occ
    out = []
    cur = end
    for c in reversed(as_seq(pattern).symbols):
        cur = occ.prev_before(c, cur)
        if cur is None:
            return None
        out.append(cur)
    out.reverse()
    return out


def next_pt(S, X, i: int) -> Optional[int]:
    """Smallest j >= i with X a subsequence of S(i, j]; None if there is none."""
    S = as_seq(S)
    if not 0 <= i <= len(S):
        raise ValueError(f"index {i} outside 0..{len(S)}")
    return _next_pt(S.occ, as_seq(X).symbols, i)


def prev_pt(S, X, i: int) -> Optional[int]:
    """Largest l <= i with X a subsequence of S[l, i); None if there is none."""
    S = as_seq(S)
    if not 1 <= i <= len(S) + 1:
        raise ValueError(f"index {i} outside 1..{len(S) + 1}")
    return _prev_pt(S.occ, as_seq(X).symbols, i)


def _next_pt(occ: OccIndex, symbols: Sequence, i: int) -> Optional[int]:
    cur = i
    for c in symbols:
        cur = occ.next_after(c, cur)
        if cur is None:
            return None
    return cur


def _prev_pt(occ: OccIndex, symbols: Sequence, i: int) -> Optional[int]:
    cur = i
    for c in reversed(symbols):
        cur = occ.prev_before(c, cur)
        if cur is None:
            return None
    return cur


def is_subsequence(pattern, host) -> bool:
    """Plain two-pointer test; independent of :class:`OccIndex`."""
    it = iter(as_seq(host).symbols)
    return all(c in it for c in as_seq(pattern).symbols)


def kfold_embedding(S, X, k: int) -> Optional[list[list[int]]]:
    """Leftmost embedding of X^k into S, split into k consecutive blocks."""
    S, X = as_seq(S), as_seq(X)
    blocks = []
    cur = 0
    for _ in range(k):
        emb = leftmost_embedding(X, S, cur)
        if emb is None:
            return None
        blocks.append(emb)
        if emb:
            cur = emb[-1]
    return blocks
