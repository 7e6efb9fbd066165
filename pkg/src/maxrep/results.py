"""Result records returned by the square and k-repeat solvers."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .seqcore import Seq


@dataclass(frozen=True)
class MaximalityVerdict:
    is_valid: bool
    is_maximal: bool
    counterexample: Optional[tuple] = None  # (gap, symbol)

    def as_dict(self) -> dict:
        ce = None
        if self.counterexample is not None:
            gap, sym = self.counterexample
            ce = {"gap": gap, "symbol": sym}
        return {"is_valid": self.is_valid, "is_maximal": self.is_maximal,
                "counterexample": ce}


@dataclass
class KRepResult:
    """A k-repeating subsequence ``unit`` of the input, with witness.

    ``witness`` holds k strictly increasing 1-based index lists; block t+1
    starts after block t ends and every block spells ``unit``.
    """

    unit: Seq
    k: int
    sigma: object = None
    witness: list = field(default_factory=list)
    prefix: Optional[Seq] = None
    suffix: Optional[Seq] = None
    verdict: Optional[MaximalityVerdict] = None
    stats: dict = field(default_factory=dict)

    @property
    def repeated(self) -> Seq:
        return self.unit * self.k
