"""Constrained maximal common subsequence of k >= 1 strings.

The solver is a single left-to-right insertion-saturation pass.  At the
current gap it inserts the smallest symbol that keeps the sequence common
to every host, stays at that gap (now just before the inserted symbol) and
only advances when nothing fits.  Insertions made later sit to the right of
every finished gap, so they leave its prefix embedding untouched and can
only move its suffix embedding left.  A finished gap therefore never
becomes feasible again, and the pass ends with a maximal common
subsequence.

Per host the pass keeps the leftmost end of the finished prefix and a
stack of rightmost starts of the pending suffixes, so each gap costs
O(|alphabet| * k * log n).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ConstraintNotCommon, GapOutOfRange
from .seqcore import OccIndex, Seq, as_seq

# A host window: occurrences of the underlying string plus exclusive bounds,
# i.e. the host is T(lo, hi) = T[lo+1 .. hi-1].
View = tuple  # (OccIndex, int, int)


@dataclass(frozen=True)
class McsInstance:
    hosts: tuple
    constraint: Seq = Seq()

    def __post_init__(self):
        hosts = tuple(as_seq(h) for h in self.hosts)
        if not hosts:
            raise ValueError("at least one host is required")
        constraint = as_seq(self.constraint)
        object.__setattr__(self, "hosts", hosts)
        object.__setattr__(self, "constraint", constraint)
        for idx, h in enumerate(hosts):
            if not h.contains(constraint):
                raise ConstraintNotCommon(idx)

    def views(self) -> list:
        return [(h.occ, 0, len(h) + 1) for h in self.hosts]


def mkcs_constrained(instance: McsInstance, trace: Optional[list] = None) -> Seq:
    """Deterministic maximal common subsequence of ``instance.hosts`` containing the constraint.

    If ``trace`` is a list, ``("insert", gap, symbol)`` and ``("advance", gap)``
    events are appended to it as the pass proceeds.
    """
    return Seq(saturate(instance.views(), instance.constraint.symbols, trace))


def maximal_common_subsequence(hosts, constraint=()) -> Seq:
    return mkcs_constrained(McsInstance(tuple(hosts), as_seq(constraint)))


def _candidate_alphabet(views: Sequence[View]) -> list:
    common = set(views[0][0].positions)
    for occ, _, _ in views[1:]:
        common &= occ.positions.keys()
    return sorted(common)


def saturate(views: Sequence[View], constraint: Sequence, trace: Optional[list] = None) -> list:
    """Saturate ``constraint`` inside the host windows; returns a symbol list.

    The constraint must already embed into every window.
    """
    occs = [v[0] for v in views]
    ends = [v[1] for v in views]
    his = [v[2] for v in views]
    k = len(views)

    # pending[-1] is the symbol right after the current gap, paired with the
    # rightmost start (per host) of the pending suffix beginning there.
    pending = []
    starts = list(his)
    for c in reversed(constraint):
        starts = [occs[h].prev_before(c, starts[h]) for h in range(k)]
        if any(s is None or s <= ends[h] for h, s in enumerate(starts)):
            raise ConstraintNotCommon(next(h for h, s in enumerate(starts)
                                           if s is None or s <= ends[h]))
        pending.append((c, starts))
    bounds = pending[-1][1] if pending else his

    alphabet = _candidate_alphabet(views)
    out = []
    while True:
        inserted = None
        for c in alphabet:
            for h in range(k):
                nxt = occs[h].next_after(c, ends[h])
                if nxt is None or nxt >= bounds[h]:
                    break
            else:
                inserted = c
                break
        if inserted is not None:
            bounds = [occs[h].prev_before(inserted, bounds[h]) for h in range(k)]
            pending.append((inserted, bounds))
            if trace is not None:
                trace.append(("insert", len(out), inserted))
            continue
        if trace is not None:
            trace.append(("advance", len(out)))
        if not pending:
            break
        c, _ = pending.pop()
        out.append(c)
        ends = [occs[h].next_after(c, ends[h]) for h in range(k)]
        bounds = pending[-1][1] if pending else his
    return out


def _gap_window(view: View, current: Sequence, gap: int):
    occ, lo, hi = view
    left = lo
    for c in current[:gap]:
        left = occ.next_after(c, left)
        if left is None or left >= hi:
            return None
    right = hi
    for c in reversed(current[gap:]):
        right = occ.prev_before(c, right)
        if right is None or right <= lo:
            return None
    if right <= left:
        return None
    return left, right


def feasible_insertions(instance: McsInstance, current, gap: int) -> set:
    """Symbols that can be inserted at ``gap`` of ``current`` keeping it common to all hosts."""
    current = as_seq(current).symbols
    if not 0 <= gap <= len(current):
        raise GapOutOfRange(f"gap {gap} outside 0..{len(current)}")
    views = instance.views()
    windows = []
    for idx, view in enumerate(views):
        w = _gap_window(view, current, gap)
        if w is None:
            raise ConstraintNotCommon(idx, f"current sequence is not a subsequence of host {idx}")
        windows.append(w)
    result = set()
    for c in _candidate_alphabet(views):
        if all((nxt := view[0].next_after(c, left)) is not None and nxt < right
               for view, (left, right) in zip(views, windows)):
            result.add(c)
    return result
