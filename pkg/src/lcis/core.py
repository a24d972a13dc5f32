"""Domain types and elementary predicates shared by every solver.

Sequences are plain Python sequences (tuples, lists) of mutually comparable
elements. Every index taken or returned by this package's public functions
is 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Sequence, Set, Tuple


class ReconstructionError(RuntimeError):
    """A backward witness scan ran out of positions before finishing."""


class _Top:
    """Sentinel that compares above every element."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __gt__(self, other):
        return other is not self

    def __lt__(self, other):
        return False

    def __repr__(self):
        return "TOP"


TOP = _Top()


@dataclass(frozen=True)
class LcisResult:
    length: int
    witness: Optional[Tuple[Any, ...]] = None

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be non-negative")
        if self.witness is not None:
            object.__setattr__(self, "witness", tuple(self.witness))
            if len(self.witness) != self.length:
                raise ValueError(
                    f"witness has {len(self.witness)} elements, length is {self.length}"
                )


def _check_index(name: str, k: int, seq: Sequence) -> None:
    if not 1 <= k <= len(seq):
        raise IndexError(f"{name}={k} outside 1..{len(seq)}")


def delta(x: Sequence, y: Sequence, i: int, j: int) -> int:
    """Match indicator: 1 if ``x[i] == y[j]`` (1-based), else 0."""
    _check_index("i", i, x)
    _check_index("j", j, y)
    return 1 if x[i - 1] == y[j - 1] else 0


def beta(x: Sequence, y: Sequence, i: int, j: int) -> Set[int]:
    """Earlier positions of ``y`` (before ``j``) holding values below ``x[i]``.

    Only the oracle-side tests use this; the solvers fold it into a running
    maximum.
    """
    _check_index("i", i, x)
    _check_index("j", j, y)
    xi = x[i - 1]
    return {t for t in range(1, j) if y[t - 1] < xi}


def is_strictly_increasing(z: Sequence) -> bool:
    return all(a < b for a, b in zip(z, z[1:]))


def is_subsequence(z: Sequence, y: Sequence) -> bool:
    """Greedy left-to-right embedding test."""
    k = 0
    for item in y:
        if k == len(z):
            break
        if item == z[k]:
            k += 1
    return k == len(z)


def is_common_increasing(z: Sequence, x: Sequence, y: Sequence) -> bool:
    return is_strictly_increasing(z) and is_subsequence(z, x) and is_subsequence(z, y)
