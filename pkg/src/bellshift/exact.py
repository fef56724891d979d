"""Exact Pascal, Stirling, and Bell tables.

Everything here is plain Python integer arithmetic, so there is no
overflow anywhere.  Tables are built eagerly row by row and are immutable
afterwards; reads are safe from any number of threads.

Conventions pinned once and used everywhere:

* B_0 = 1 (the empty set has exactly one partition, the empty one).
* {0 brace 0} = 1 and {n brace 0} = 0 for n >= 1.

With these, the two Bell recurrences

    B_{n+1} = sum_{d=0}^{n} B_d * C(n, n-d)          (size of the last block)
    B_n     = sum_{k=1}^{n} {n brace k}              (number of blocks)

agree at every index, and the Stirling triangle follows

    {n+1 brace k} = {n brace k-1} + k * {n brace k}.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "BinomialTable",
    "StirlingTriangle",
    "BellTable",
    "build_binomials",
    "build_stirling",
    "build_bell_binomial",
    "bell_from_stirling",
]


@dataclass(frozen=True)
class BinomialTable:
    """Pascal triangle rows[n][k] = C(n, k) for 0 <= k <= n <= max_row."""

    max_row: int
    rows: tuple[tuple[int, ...], ...]

    def choose(self, n: int, k: int) -> int:
        """C(n, k), with the usual value 0 when k is outside [0, n]."""
        if not 0 <= n <= self.max_row:
            raise ValueError(f"row {n} not in table (max_row={self.max_row})")
        if k < 0 or k > n:
            return 0
        return self.rows[n][k]


@dataclass(frozen=True)
class StirlingTriangle:
    """rows[n][k] = {n brace k}, the number of partitions of an n-set into
    exactly k nonempty blocks, for 0 <= k <= n <= max_row."""

    max_row: int
    rows: tuple[tuple[int, ...], ...]

    def value(self, n: int, k: int) -> int:
        """{n brace k}, with the usual value 0 when k is outside [0, n]."""
        if not 0 <= n <= self.max_row:
            raise ValueError(f"row {n} not in triangle (max_row={self.max_row})")
        if k < 0 or k > n:
            return 0
        return self.rows[n][k]


@dataclass(frozen=True)
class BellTable:
    """values[n] = B_n, the number of partitions of an n-set, for n <= max_index."""

    max_index: int
    values: tuple[int, ...]

    def value(self, n: int) -> int:
        if not 0 <= n <= self.max_index:
            raise ValueError(f"index {n} not in table (max_index={self.max_index})")
        return self.values[n]


def build_binomials(n_max: int) -> BinomialTable:
    """Pascal triangle through row ``n_max`` by the additive recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    rows = [(1,)]
    for n in range(n_max):
        prev = rows[n]
        rows.append((1, *(prev[k - 1] + prev[k] for k in range(1, n + 1)), 1))
    return BinomialTable(n_max, tuple(rows))


def build_stirling(n_max: int) -> StirlingTriangle:
    """Stirling triangle through row ``n_max`` via
    {n+1 brace k} = {n brace k-1} + k * {n brace k}."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    rows = [(1,)]
    for n in range(n_max):
        prev = rows[n]
        row = [0] * (n + 2)
        for k in range(1, n + 2):
            above = prev[k] if k <= n else 0
            row[k] = prev[k - 1] + k * above
        rows.append(tuple(row))
    return StirlingTriangle(n_max, tuple(rows))


def build_bell_binomial(n_max: int) -> BellTable:
    """Bell numbers B_0..B_{n_max} via B_{n+1} = sum_d B_d * C(n, n-d).

    Only the current Pascal row is kept while filling the table, so
    memory stays linear in ``n_max`` even though the summation touches
    every earlier Bell number.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    values = [1]
    row = [1]  # Pascal row n, updated in step with the main loop
    for n in range(n_max):
        values.append(sum(values[d] * row[n - d] for d in range(n + 1)))
        row = [1] + [row[i] + row[i + 1] for i in range(n)] + [1]
    return BellTable(n_max, tuple(values))


def bell_from_stirling(tri: StirlingTriangle, n: int) -> int:
    """B_n as the row sum of the Stirling triangle; B_0 = 1 by convention."""
    if not 0 <= n <= tri.max_row:
        raise ValueError(f"index {n} not in triangle (max_row={tri.max_row})")
    if n == 0:
        return 1
    return sum(tri.rows[n][1:])
