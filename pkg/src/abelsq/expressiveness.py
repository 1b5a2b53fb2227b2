"""Expressiveness metrics for maximal commutative circuits, as exact rationals.

For n qubits the circuit's state space has dimension d = 2**n, and the
expected t-th power of the fidelity between two independently
randomized outputs is

    E[F^t] = f(2**n, t) / 4**(n*t)

where f is the abelian-square count.  The floor over all conceivable
circuits, reached by uniform coverage of state space, is

    E[F^t]_min = 1 / C(t + d - 1, t)

and their ratio (the normalized expressiveness) is 1 when the circuit
is as expressive as possible at resolving power t.  Everything is kept
as a reduced fraction; floats appear only at the rendering boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import binomial
from .counting import count_fast

# Domain accepted by the fast counting route: d = 2**n with n up to
# MAX_QUBITS, powers up to MAX_POWER.  Far beyond anything desk-scale
# runtime allows anyway; the bounds just fail fast on absurd requests.
MAX_QUBITS = 4096
MAX_POWER = 4096


def _validate(n: int, t: int) -> None:
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"qubit count n must be in 1..{MAX_QUBITS}")
    if not 1 <= t <= MAX_POWER:
        raise ValueError(f"fidelity power t must be in 1..{MAX_POWER}")


def expected_fidelity_power(n: int, t: int) -> Fraction:
    """E[F^t] = f(2**n, t) / 4**(n*t), reduced."""
    _validate(n, t)
    return Fraction(count_fast(2**n, t), 4 ** (n * t))


def min_expected_fidelity_power(d: int, t: int) -> Fraction:
    """1 / C(t+d-1, t): the uniform-coverage floor for dimension d."""
    if d < 1:
        raise ValueError("dimension d must be >= 1")
    if t < 1:
        raise ValueError("fidelity power t must be >= 1")
    return Fraction(1, binomial(t + d - 1, t))


def fraction_to_float(value: Fraction) -> float:
    """Correctly-rounded double of a nonnegative fraction.

    Shifts numerator and denominator to a common window so the integer
    quotient carries ~96 bits, folds the remainder into a sticky bit,
    and lets float() round to nearest-even.  Equivalent to CPython's
    correctly-rounded int/int division; kept explicit so the rendering
    contract does not hinge on an interpreter detail.
    """
    num, den = value.numerator, value.denominator
    if num < 0:
        raise ValueError("negative values not supported")
    if num == 0:
        return 0.0
    shift = 96 - (num.bit_length() - den.bit_length())
    if shift >= 0:
        q, rem = divmod(num << shift, den)
    else:
        q, rem = divmod(num, den << -shift)
    if rem:
        q |= 1  # sticky bit: breaks round-half-even ties the right way
    return math.ldexp(float(q), -shift)


@dataclass
class ExpressivenessRecord:
    """One (n, t) cell: exact metrics plus the rendered normalized value."""

    n: int
    t: int
    e_ft: Fraction
    e_ft_min: Fraction
    normalized: float


def normalized_expressiveness(n: int, t: int) -> ExpressivenessRecord:
    """Full record at (n, t); ``normalized`` is the rounded E_min/E ratio."""
    e_ft = expected_fidelity_power(n, t)
    e_ft_min = min_expected_fidelity_power(2**n, t)
    return ExpressivenessRecord(
        n=n,
        t=t,
        e_ft=e_ft,
        e_ft_min=e_ft_min,
        normalized=fraction_to_float(e_ft_min / e_ft),
    )


def expressiveness_grid(n_values, t_max: int) -> list[ExpressivenessRecord]:
    """Records for every (n, t) with t = 1..t_max, ordered by (n, t)."""
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    return [normalized_expressiveness(n, t) for n in n_values for t in range(1, t_max + 1)]
