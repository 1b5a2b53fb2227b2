"""Arbitrary-precision binomial and multinomial coefficients.

Everything downstream (the counting recursions, the expressiveness
rationals) is built on exact integer binomials.  Repeated queries hit a
shared cache of Pascal-triangle rows; rows are grown on demand up to a
configurable cap, and queries above the cap fall back to the
multiplicative formula in ``math.comb``.
"""

from __future__ import annotations

import math
import threading

# Pascal rows are cached for n <= DEFAULT_ROW_CAP.  The row cache pays off
# because the counting recursion reuses C(t, k) and C(t-1, k) across every
# level; above the cap a row would cost O(n) huge integers of memory, so
# math.comb takes over.
DEFAULT_ROW_CAP = 4096


class PascalCache:
    """Append-only cache of Pascal-triangle rows.

    Completed rows are immutable tuples, so concurrent readers are safe;
    growth happens under a lock.  A fresh instance can be used as a
    per-task cache if isolation is wanted.
    """

    def __init__(self, cap: int = DEFAULT_ROW_CAP):
        if cap < 0:
            raise ValueError("row cap must be nonnegative")
        self.cap = cap
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[int, ...]:
        """Row n of Pascal's triangle: (C(n,0), ..., C(n,n))."""
        if n < 0:
            raise ValueError("row index must be nonnegative")
        if n > self.cap:
            raise ValueError(f"row {n} exceeds cache cap {self.cap}")
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                grown = (1, *(prev[i] + prev[i + 1] for i in range(len(prev) - 1)), 1)
                self._rows.append(grown)
            return self._rows[n]

    def binomial(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError("binomial arguments must be nonnegative")
        if k > n:
            return 0
        if n <= self.cap:
            return self.row(n)[k]
        return math.comb(n, k)


_cache = PascalCache()


def binomial(n: int, k: int) -> int:
    """C(n, k) = n! / (k! (n-k)!), exactly; 0 when k > n.

    n may be arbitrarily large (far beyond the row cap); only small n
    benefit from the shared Pascal cache.
    """
    return _cache.binomial(n, k)


def multinomial(parts) -> int:
    """(sum parts)! / prod(part_i!), exactly.

    Computed as a product of binomials over prefix sums,
    C(p1, p1) * C(p1+p2, p2) * ..., which keeps intermediates no larger
    than the result and reuses the Pascal cache.  ``parts`` must be a
    non-empty iterable of nonnegative integers.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("multinomial needs at least one part")
    result = 1
    prefix = 0
    for p in parts:
        if p < 0:
            raise ValueError("multinomial parts must be nonnegative")
        prefix += p
        if p:
            result *= _cache.binomial(prefix, p)
    return result
