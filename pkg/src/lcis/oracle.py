"""Exhaustive ground truth for small instances.

Tries every subsequence of the shorter input, largest first, and keeps the
strictly increasing ones that also embed in the longer input. Shares no code
with the dynamic programs beyond the elementary predicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, FrozenSet, Sequence, Tuple

from .core import is_strictly_increasing, is_subsequence

MAX_ORACLE_LENGTH = 16


class OracleBoundError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    length: int
    # every distinct maximal witness; {()} when nothing is shared
    all_witnesses: FrozenSet[Tuple[Any, ...]]


def oracle_lcis(x: Sequence, y: Sequence) -> OracleResult:
    for name, seq in (("x", x), ("y", y)):
        if len(seq) > MAX_ORACLE_LENGTH:
            raise OracleBoundError(
                f"{name} has {len(seq)} elements; the oracle accepts at most {MAX_ORACLE_LENGTH}"
            )
    short, long_ = (x, y) if len(x) <= len(y) else (y, x)
    short = tuple(short)
    for k in range(len(short), 0, -1):
        found = {
            z for z in combinations(short, k)
            if is_strictly_increasing(z) and is_subsequence(z, long_)
        }
        if found:
            return OracleResult(k, frozenset(found))
    return OracleResult(0, frozenset({()}))
