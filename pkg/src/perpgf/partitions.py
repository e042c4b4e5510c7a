"""Brute-force restricted partition counts.

This module is the oracle that the generating-function engine is checked
against, so it deliberately shares no code with :mod:`perpgf.poly` or
:mod:`perpgf.engine`. Counts come from plain partition recurrences.
"""

from __future__ import annotations

import threading
from typing import Iterable, Sequence

__all__ = [
    "PartitionTable",
    "p_bounded",
    "p_atmost",
    "p_parts_in",
    "delta_bounded",
    "delta_atmost",
    "is_unimodal",
]


class PartitionTable:
    """Memoized counts ``p(n, m, N)`` and ``p(n, m)``.

    ``p(n, m, N)`` counts partitions of ``n`` into at most ``m`` parts, each
    at most ``N``. Internally the table keeps, for every part bound ``b``, a
    layer ``L_b[k][n]`` grown with the largest-part recurrence

        L_b[k][n] = L_{b-1}[k][n] + L_b[k-1][n-b]

    (either no part equals ``b``, or remove one part equal to ``b``). Layers
    are rebuilt with doubled capacity when a query exceeds the current size.
    All access goes through one lock, so a table may be shared by threads.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._layers: list = []
        self._cap_n = -1
        self._cap_m = -1
        self.memo: dict = {}
        self.memo2: dict = {}
        self._atmost: dict = {}

    def _rebuild(self, cap_n: int, cap_m: int) -> None:
        self._cap_n, self._cap_m = cap_n, cap_m
        base = [[1] + [0] * cap_n for _ in range(cap_m + 1)]
        self._layers = [base]

    def _ensure(self, n: int, m: int, b: int) -> None:
        if n > self._cap_n or m > self._cap_m:
            self._rebuild(max(n, 2 * self._cap_n, 64), max(m, self._cap_m, 8))
        cap_n, cap_m = self._cap_n, self._cap_m
        while len(self._layers) <= b:
            bound = len(self._layers)
            prev = self._layers[-1]
            cur = [list(prev[0])]
            for k in range(1, cap_m + 1):
                row = list(prev[k])
                below = cur[k - 1]
                for t in range(bound, cap_n + 1):
                    row[t] += below[t - bound]
                cur.append(row)
            self._layers.append(cur)

    def p_bounded(self, n: int, m: int, N: int) -> int:
        if m < 0 or N < 0:
            raise ValueError("m and N must be nonnegative")
        if n < 0 or n > m * N:
            return 0
        key = (n, m, N)
        with self._lock:
            hit = self.memo.get(key)
            if hit is not None:
                return hit
            # parts larger than n can never occur
            b = min(N, n)
            self._ensure(n, m, b)
            val = self._layers[b][m][n]
            self.memo[key] = val
            return val

    def p_atmost(self, n: int, m: int) -> int:
        """Partitions of ``n`` into at most ``m`` parts.

        Counted through the conjugate (parts of size at most ``m``) with the
        coin recurrence ``c_k[t] = c_{k-1}[t] + c_k[t-k]``.
        """
        if m < 0:
            raise ValueError("m must be nonnegative")
        if n < 0:
            return 0
        key = (n, m)
        with self._lock:
            hit = self.memo2.get(key)
            if hit is not None:
                return hit
            row = self._atmost.get(m)
            if row is None or len(row) <= n:
                size = max(n + 1, 2 * len(row) if row else 64)
                row = [1] + [0] * (size - 1)
                for k in range(1, m + 1):
                    for t in range(k, size):
                        row[t] += row[t - k]
                self._atmost[m] = row
            val = row[n]
            self.memo2[key] = val
            return val


def p_parts_in(n: int, parts: Sequence[int]) -> int:
    """Partitions of ``n`` using only part sizes from ``parts`` (repetition allowed)."""
    if n < 0:
        return 0
    sizes = sorted(set(parts))
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    row = [1] + [0] * n
    for s in sizes:
        for t in range(s, n + 1):
            row[t] += row[t - s]
    return row[n]


_default = PartitionTable()


def p_bounded(n: int, m: int, N: int) -> int:
    return _default.p_bounded(n, m, N)


def p_atmost(n: int, m: int) -> int:
    return _default.p_atmost(n, m)


def delta_bounded(x: int, n: int, m: int, N: int) -> int:
    """``p(n, m, N) - p(n - x, m, N)``; zero when ``x == 0``."""
    if x == 0:
        return 0
    return p_bounded(n, m, N) - p_bounded(n - x, m, N)


def delta_atmost(x: int, n: int, m: int) -> int:
    """``p(n, m) - p(n - x, m)``; zero when ``x == 0``."""
    if x == 0:
        return 0
    return p_atmost(n, m) - p_atmost(n - x, m)


def is_unimodal(seq: Iterable[int]) -> bool:
    """True iff ``seq`` weakly rises and then weakly falls."""
    falling = False
    prev = None
    for v in seq:
        if prev is not None:
            if v > prev:
                if falling:
                    return False
            elif v < prev:
                falling = True
        prev = v
    return True
