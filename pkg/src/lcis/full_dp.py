"""Quadratic-space dynamic program over the whole f table."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple


def _zeros(k: int) -> List[int]:
    return [0] * k


@dataclass(frozen=True)
class DpTable:
    """``cells[i-1][j-1]`` is the length of the longest common increasing
    subsequence of ``x[:i]`` and ``y[:j]`` that ends on ``y[j-1]``.

    Row 0 and column 0 are implicit zeros; ``f`` serves them.
    """

    rows: int
    cols: int
    cells: Tuple[Tuple[int, ...], ...]

    def f(self, i: int, j: int) -> int:
        if not (0 <= i <= self.rows and 0 <= j <= self.cols):
            raise IndexError(f"({i}, {j}) outside the {self.rows}x{self.cols} table")
        if i == 0 or j == 0:
            return 0
        return self.cells[i - 1][j - 1]

    def last_row(self) -> Tuple[int, ...]:
        if self.rows == 0:
            return (0,) * self.cols
        return self.cells[-1]

    def dump(self) -> str:
        """One line per row, cells separated by single spaces."""
        return "".join(" ".join(map(str, row)) + "\n" for row in self.cells)


def _fill(x: Sequence, y: Sequence, alloc: Callable[[int], List[int]]) -> Tuple[List[List[int]], int]:
    m = len(y)
    rows: List[List[int]] = []
    steps = 0
    for i, xi in enumerate(x):
        row = alloc(m)
        if i:
            row[:] = rows[i - 1]
        theta = 0
        for j in range(m):
            steps += 1
            yj = y[j]
            # row[j] still holds f(i-1, j) here
            if xi > yj:
                if row[j] > theta:
                    theta = row[j]
            elif xi == yj:
                row[j] = theta + 1
        rows.append(row)
    return rows, steps


def full_table(x: Sequence, y: Sequence) -> DpTable:
    rows, _ = _fill(x, y, _zeros)
    return DpTable(len(x), len(y), tuple(tuple(r) for r in rows))


def lcis_length_from_table(t: DpTable) -> int:
    return max(t.last_row(), default=0)
