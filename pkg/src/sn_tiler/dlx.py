"""Array-backed dancing links (Algorithm X) for exact cover.

Nodes live in flat integer lists; node 0 is the root header, nodes
``1..n_columns`` are column headers. Column choice is minimum remaining
candidates, ties going to the lowest column index. The search loop is
iterative, so solution depth is not limited by the recursion limit.
"""

from __future__ import annotations

import time
from typing import Callable, Iterator, Sequence


class SearchAborted(Exception):
    pass


class DancingLinks:
    def __init__(self, n_columns: int, rows: Sequence[Sequence[int]]):
        self.n_columns = n_columns
        self.n_rows = len(rows)
        size = n_columns + 1
        self.L = list(range(-1, size - 1))
        self.R = list(range(1, size + 1))
        self.L[0] = n_columns
        self.R[n_columns] = 0
        self.U = list(range(size))
        self.D = list(range(size))
        self.C = list(range(size))
        self.row_of = [-1] * size
        self.count = [0] * size
        self.row_head: list[int] = []
        self.nodes = 0
        for r, cols in enumerate(rows):
            first = -1
            for col in sorted(set(cols)):
                if not 0 <= col < n_columns:
                    raise ValueError(f"column {col} out of range in row {r}")
                self._append(r, col + 1)
                x = len(self.C) - 1
                if first < 0:
                    first = x
                    self.L[x] = self.R[x] = x
                else:
                    self.L[x] = self.L[first]
                    self.R[x] = first
                    self.R[self.L[first]] = x
                    self.L[first] = x
            self.row_head.append(first)

    def _append(self, r: int, c: int) -> None:
        x = len(self.C)
        self.C.append(c)
        self.row_of.append(r)
        self.L.append(x)
        self.R.append(x)
        self.U.append(self.U[c])
        self.D.append(c)
        self.D[self.U[c]] = x
        self.U[c] = x
        self.count[c] += 1

    def cover(self, c: int) -> None:
        L, R, U, D, C, count = self.L, self.R, self.U, self.D, self.C, self.count
        R[L[c]] = R[c]
        L[R[c]] = L[c]
        i = D[c]
        while i != c:
            j = R[i]
            while j != i:
                D[U[j]] = D[j]
                U[D[j]] = U[j]
                count[C[j]] -= 1
                j = R[j]
            i = D[i]

    def uncover(self, c: int) -> None:
        L, R, U, D, C, count = self.L, self.R, self.U, self.D, self.C, self.count
        i = U[c]
        while i != c:
            j = L[i]
            while j != i:
                count[C[j]] += 1
                D[U[j]] = j
                U[D[j]] = j
                j = L[j]
            i = U[i]
        R[L[c]] = c
        L[R[c]] = c

    def _select(self, x: int) -> None:
        """Take the row containing node ``x`` (its column already covered)."""
        j = self.R[x]
        while j != x:
            self.cover(self.C[j])
            j = self.R[j]

    def _unselect(self, x: int) -> None:
        j = self.L[x]
        while j != x:
            self.uncover(self.C[j])
            j = self.L[j]

    def preselect(self, row: int) -> None:
        """Force ``row`` into every solution; raises if it clashes with earlier choices."""
        x = self.row_head[row]
        if x < 0:
            raise ValueError(f"row {row} is empty")
        j = x
        while True:
            c = self.C[j]
            if self.R[self.L[c]] != c:
                raise ValueError(f"row {row} overlaps a preselected row")
            self.cover(c)
            j = self.R[j]
            if j == x:
                break

    def rows_in_column(self, col: int) -> list[int]:
        c = col + 1
        out = []
        i = self.D[c]
        while i != c:
            out.append(self.row_of[i])
            i = self.D[i]
        return out

    def choose_column(self) -> int:
        """Header of the live column with fewest candidates, or 0 if none remain."""
        R, count = self.R, self.count
        best, best_count = 0, -1
        c = R[0]
        while c != 0:
            k = count[c]
            if best_count < 0 or k < best_count:
                best, best_count = c, k
                if k == 0:
                    break
            c = R[c]
        return best

    def solutions(self, should_stop: Callable[[], bool] | None = None) -> Iterator[list[int]]:
        """Yield each exact cover of the live columns as a list of row ids.

        ``self.nodes`` counts rows tried. ``should_stop`` is polled every
        1024 nodes; returning True raises :class:`SearchAborted`.
        """
        D, C, row_of = self.D, self.C, self.row_of
        stack: list[int] = []  # chosen node per level
        advance = False
        while True:
            if not advance:
                if self.R[0] == 0:
                    yield [row_of[x] for x in stack]
                    advance = True
                    continue
                c = self.choose_column()
                self.cover(c)
                x = D[c]
            else:
                if not stack:
                    return
                x = stack.pop()
                self._unselect(x)
                c = C[x]
                x = D[x]
            if x == c:
                self.uncover(c)
                advance = True
                continue
            self.nodes += 1
            if should_stop is not None and self.nodes & 1023 == 0 and should_stop():
                raise SearchAborted
            stack.append(x)
            self._select(x)
            advance = False


def deadline_checker(budget: float | None) -> Callable[[], bool] | None:
    if budget is None:
        return None
    deadline = time.monotonic() + budget
    return lambda: time.monotonic() > deadline
