"""Exact counts of abelian squares.

f(d, t) is the number of words of length t+t over a d-symbol alphabet
whose first half is an anagram of its second half.  Three independent
routes compute it:

* ``count_words_bruteforce`` enumerates every word and buckets by
  signature (the per-symbol occurrence vector) -- the ground truth for
  tiny inputs.
* ``count_signature_oracle`` sums squared multinomials over all
  signatures, sum over m1+...+md = t of multinomial(m)^2.
* ``count_fast`` runs the alphabet-reduction recurrence
  f(d, t) = d * sum_{k=0}^{t-1} C(t,k) C(t-1,k) f(d-1, k),
  which needs only min(t, d-1) levels and so stays cheap even when d is
  astronomically large (for example 2**4096).

All arithmetic is exact integer arithmetic; no floats anywhere.
"""

from __future__ import annotations

from collections import Counter
from itertools import product
from typing import Iterator

from .combinatorics import binomial, multinomial

# Enumeration guard: the brute-force and signature-sum routes refuse inputs
# whose enumeration would exceed this many items.  Overridable per call and
# via the CLI (--guard / ABELSQ_GUARD).
DEFAULT_GUARD = 10_000_000


class GuardExceededError(ValueError):
    """Enumeration size exceeds the configured guard."""

    def __init__(self, what: str, required: int, guard: int):
        self.required = required
        self.guard = guard
        super().__init__(
            f"{what} would enumerate {required} items, exceeding the guard of {guard}"
        )


def _validate(d: int, t: int) -> None:
    if d < 1:
        raise ValueError("alphabet size d must be >= 1")
    if t < 0:
        raise ValueError("half-length t must be >= 0")


def iter_signatures(d: int, t: int) -> Iterator[tuple[int, ...]]:
    """All length-d vectors of nonnegative integers summing to t.

    Ascending colexicographic order: starts at (t, 0, ..., 0), ends at
    (0, ..., 0, t).  The successor step zeroes the leftmost nonzero
    entry, moves its value minus one back to position 0 and bumps the
    next position -- iterative, so d may be large without recursion.
    """
    _validate(d, t)
    sig = [0] * d
    sig[0] = t
    yield tuple(sig)
    if t == 0 or d == 1:
        return
    while sig[-1] != t:
        h = 0
        while sig[h] == 0:
            h += 1
        v = sig[h]
        sig[h] = 0
        sig[0] = v - 1
        sig[h + 1] += 1
        yield tuple(sig)


def count_words_bruteforce(d: int, t: int, guard: int = DEFAULT_GUARD) -> int:
    """Enumerate all d**t words, bucket by signature, sum squared bucket sizes.

    The definition made executable; only viable for d**t <= guard.
    """
    _validate(d, t)
    size = d**t
    if size > guard:
        raise GuardExceededError("word enumeration", size, guard)
    buckets: Counter = Counter()
    for word in product(range(d), repeat=t):
        buckets[tuple(sorted(Counter(word).items()))] += 1
    return sum(c * c for c in buckets.values())


def count_signature_oracle(d: int, t: int, guard: int = DEFAULT_GUARD) -> int:
    """Sum of multinomial(signature)**2 over all signatures of t into d parts.

    The number of signatures is C(t+d-1, t), which must not exceed the
    guard.  Deliberately the dumb-but-obviously-right reference for
    ``count_fast``.
    """
    _validate(d, t)
    n_sigs = binomial(t + d - 1, t)
    if n_sigs > guard:
        raise GuardExceededError("signature enumeration", n_sigs, guard)
    total = 0
    for sig in iter_signatures(d, t):
        m = multinomial(sig)
        total += m * m
    return total


def count_fast(d: int, t: int) -> int:
    """Exact f(d, t) via the alphabet-reduction recurrence.

    Iterative dynamic program: level j holds f(d-j, k) for k = 0..t-j,
    computed from level j+1 by
        f(d-j, k) = (d-j) * sum_{m=0}^{k-1} C(k,m) C(k-1,m) f(d-j-1, m)
    with f(anything, 0) = 1.  Only min(t, d-1) levels are needed, so the
    cost is O(t^2 * min(d, t)) big-integer operations and d may be huge.
    """
    _validate(d, t)
    if t == 0 or d == 1:
        return 1
    levels = min(t, d - 1)
    # weights[k][m] = C(k,m) * C(k-1,m); identical at every level
    weights = [[binomial(k, m) * binomial(k - 1, m) for m in range(k)] for k in range(t + 1)]

    if d - levels == 1:
        row = [1] * (t - levels + 1)  # f(1, k) = 1 for every k
    else:
        row = [1]  # levels == t, single entry f(d-t, 0) = 1
    for j in range(levels - 1, -1, -1):
        mult = d - j
        new_row = [1] * (t - j + 1)
        for k in range(1, t - j + 1):
            acc = 0
            # row holds at least k entries, so zip stops exactly at m = k-1
            for w, fm in zip(weights[k], row):
                acc += w * fm
            new_row[k] = mult * acc
        row = new_row
    return row[t]
