"""Closed-form summand counts for the two product evaluators.

All counts are exact big integers; binomials with a negative upper
argument or upper < lower are taken to be 0, which makes every count
total and makes the vanishing for n > min(p, q) automatic.
"""

from __future__ import annotations

import math


def _binomial(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def count_oracle(p: int, q: int, n: int) -> int:
    """Summands in the unrestricted evaluation: C(m+1, n+1) placements
    of the n+1 zeros, with m = p+q-n."""
    m = p + q - n
    return _binomial(m + 1, n + 1)


def count_bounded(p: int, q: int, n: int) -> int:
    """Summands in the restricted evaluation: only tuples whose face
    pair has dimensions exactly (p, q) survive."""
    return (_binomial(q - (n + 1) // 2, n // 2)
            * _binomial(p - n // 2, (n + 1) // 2))


def count_sq(i: int, j: int) -> int:
    """Summands for the degree-i square of a j-cochain (the self-product
    with p = q = j and n = j-i), written with m = i+j."""
    m = i + j
    n = j - i
    return _binomial(m // 2, n // 2) * _binomial((m + 1) // 2, (n + 1) // 2)


TABLE1_CASES = (
    (3, 2, 4),
    (6, 5, 6),
    (12, 4, 10),
    (25, 5, 30),
    (60, 5, 70),
    (6, 5, 700),
    (60, 50, 60),
    (6, 5, 7000),
)


def table1() -> list:
    """The eight benchmark rows as (label, unrestricted, restricted),
    always recomputed from the closed forms."""
    rows = []
    for p, n, q in TABLE1_CASES:
        label = f"c_{p} ⌣_{n} c_{q}"
        rows.append((label, count_oracle(p, q, n), count_bounded(p, q, n)))
    return rows
