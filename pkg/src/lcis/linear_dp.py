"""Rolling-row solver and backward witness reconstruction.

The solver keeps a single buffer ``L`` of ``min(n, m) + 1`` cells. Cell 0 is
the running maximum while a row is swept and the overall answer afterwards;
cell ``j`` holds the length of the best chain ending on the ``j``-th element
of the shorter ("inner") sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Sequence, Tuple

from .core import TOP, LcisResult, ReconstructionError, is_subsequence

Trace = Callable[[int, int, Tuple[int, ...]], None]


def _zeros(k: int) -> List[int]:
    return [0] * k


@dataclass
class RowState:
    cells: List[int]

    @property
    def inner_length(self) -> int:
        return len(self.cells) - 1

    @property
    def best(self) -> int:
        return self.cells[0]

    def __getitem__(self, k: int) -> int:
        return self.cells[k]

    def __len__(self) -> int:
        return len(self.cells)

    @classmethod
    def from_row(cls, row: Sequence[int]) -> "RowState":
        """Wrap a finished row of f values, putting its maximum in cell 0."""
        return cls([max(row, default=0), *row])


def _orient(x: Sequence, y: Sequence) -> Tuple[Sequence, Sequence, bool]:
    if len(y) > len(x):
        return y, x, True
    return x, y, False


def _sweep(outer: Sequence, inner: Sequence, alloc: Callable[[int], List[int]] = _zeros,
           trace: Optional[Trace] = None) -> Tuple[List[int], int]:
    m = len(inner)
    L = alloc(m + 1)
    steps = 0
    for i, xi in enumerate(outer, 1):
        L[0] = theta = 0
        for j in range(1, m + 1):
            if trace is not None:
                trace(i, j, tuple(L))
            steps += 1
            yj = inner[j - 1]
            if xi > yj:
                if L[j] > theta:
                    L[0] = theta = L[j]
            elif xi == yj:
                L[j] = theta + 1
    L[0] = max(L[1:], default=0)
    return L, steps


def lcis_length_linear(x: Sequence, y: Sequence, trace: Optional[Trace] = None) -> Tuple[int, RowState, bool]:
    """Length of an LCIS of ``x`` and ``y`` in ``min(len(x), len(y)) + 1`` cells.

    When ``y`` is the longer input the two are swapped so the buffer runs over
    the shorter one; the third return value reports whether that happened.
    ``trace(i, j, cells)``, if given, sees the buffer before each inner step.
    """
    outer, inner, swapped = _orient(x, y)
    L, _ = _sweep(outer, inner, trace=trace)
    return L[0], RowState(L), swapped


def _scan(row: RowState, inner: Sequence) -> Tuple[Optional[List[Any]], int]:
    L = row.cells
    if len(L) != len(inner) + 1:
        raise ValueError(f"row has {len(L)} cells, inner sequence needs {len(inner) + 1}")
    need = L[0]
    v: Any = TOP
    j = len(inner)
    out: List[Any] = []
    steps = 0
    while need > 0:
        while j >= 1 and not (L[j] == need and v > inner[j - 1]):
            j -= 1
            steps += 1
        if j < 1:
            return None, steps
        v = inner[j - 1]
        out.append(v)
        need -= 1
        j -= 1
        steps += 1
    out.reverse()
    return out, steps


def reconstruct(final_row: RowState, inner_seq: Sequence) -> List[Any]:
    """Walk the final row right to left, peeling one chain element per length.

    Takes the rightmost position with the wanted length and a value below the
    previously taken one. The result is increasing and a subsequence of
    ``inner_seq``, but on some inputs it does not embed in the other sequence;
    ``solve`` checks for that and repairs it.
    """
    out, _ = _scan(final_row, inner_seq)
    if out is None:
        raise ReconstructionError("scan ran past position 1 before the chain was complete")
    return out


def _resweep(outer: Sequence, inner: Sequence, length: int) -> Tuple[List[Any], int]:
    # Peels the chain from the back in O(m) extra cells. Each round re-sweeps
    # what is left of both prefixes, restricted to values below the last pick,
    # and stops at the first match completing a long enough chain. That fixes
    # the element's outer and inner position. The running-maximum argmax at
    # that moment still holds its previous-row value (its value is below the
    # match, so the row could not have changed it), which gives the next
    # element for free; its outer position is its last occurrence before the
    # hit.
    L = [0] * (len(inner) + 1)
    rows, cols = len(outer), len(inner)
    need, v = length, TOP
    out: List[Any] = []
    steps = 0
    while need > 0:
        live = [t for t in range(1, cols + 1) if v > inner[t - 1]]
        for t in live:
            L[t] = 0
        hit = None
        for p in range(rows):
            xp = outer[p]
            if not v > xp:
                continue
            theta = arg = 0
            for t in live:
                steps += 1
                yt = inner[t - 1]
                if xp > yt:
                    if L[t] > theta:
                        theta, arg = L[t], t
                elif xp == yt:
                    L[t] = theta + 1
                    if theta + 1 >= need:
                        hit = (p, t, arg)
                        break
            if hit:
                break
        if hit is None:
            raise ReconstructionError(f"no chain of length {need} below {v!r}")
        p, t, s = hit
        out.append(inner[t - 1])
        need -= 1
        if need == 0:
            break
        v = inner[s - 1]
        rows = max(q for q in range(p) if outer[q] == v)
        cols = s - 1
        out.append(v)
        need -= 1
    out.reverse()
    return out, steps


def _witness(row: RowState, inner: Sequence, outer: Sequence) -> Tuple[List[Any], int, int]:
    """Witness plus (scan steps, repair steps)."""
    out, scan_steps = _scan(row, inner)
    if out is not None and is_subsequence(out, outer):
        return out, scan_steps, 0
    out, repair_steps = _resweep(outer, inner, row.best)
    return out, scan_steps, repair_steps


def solve(x: Sequence, y: Sequence, want_witness: bool = True) -> LcisResult:
    outer, inner, _ = _orient(x, y)
    L, _ = _sweep(outer, inner)
    row = RowState(L)
    if not want_witness:
        return LcisResult(row.best)
    return LcisResult(row.best, tuple(_witness(row, inner, outer)[0]))
