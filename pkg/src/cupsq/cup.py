"""Cup-n products at chain level: sign exponents, loop bounds, evaluators.

Two single-simplex evaluation routes exist on purpose.  `cup_eval_oracle`
enumerates every placement of n+1 zero positions in a word of length
m+1 and relies on evaluation-by-dimension to kill the terms whose faces
have the wrong degrees.  `cup_eval_bounded` runs the restricted loop
nest whose lower bounds S(k) admit exactly the tuples producing a
(p, q)-dimensional face pair, with i_0 pinned to S(0).  The whole-complex
product `cup_product` walks support pairs instead of simplices and
accumulates onto the join of each pair.

The sign of a summand is (-1)^(A+B+C+D) with

    A = 1  iff n = 3,4,5,6 (mod 8)
    B = i_0 + i_2 + ...              if n = 1,2 (mod 4)
        i_1 + i_3 + ... + n*m        if n = 0,3 (mod 4)
    C = sum over j >= 1 of (i_2j + i_2j-1)(i_2j-1 + ... + i_0)
    D = (m + i_n)(i_n + ... + i_0)   for n odd, else 0

and is dropped entirely over Z/2.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .cochains import Cochain, FormalSum, require_support_in_complex
from .errors import DimensionMismatch
from .simplicial import SimplicialComplex, intersection, is_degenerate, union
from .words import IndexTuple, minus_face, plus_face


@dataclass(frozen=True)
class SignExponents:
    """The four mod-2 exponent contributions of one summand's sign."""

    a: int
    b: int
    c: int
    d: int

    @property
    def exponent(self) -> int:
        return (self.a + self.b + self.c + self.d) % 2

    @property
    def sign(self) -> int:
        return -1 if self.exponent else 1


@dataclass(frozen=True)
class LoopBounds:
    """Degree data (n, p, q) driving the restricted enumeration."""

    n: int
    p: int
    q: int

    @property
    def m(self) -> int:
        return self.p + self.q - self.n

    @property
    def lam(self) -> int:
        return self.p if self.n % 2 == 0 else self.q


@dataclass(frozen=True)
class Summand:
    """One enumerated term: its tuple, sign, and the two faces."""

    index_tuple: IndexTuple
    sign: int
    plus_face: tuple
    minus_face: tuple


def sign_exponents(n: int, m: int, indices) -> SignExponents:
    """The four exponent parts for the tuple (i_0, ..., i_n) at width m."""
    ind = tuple(indices)
    a = 1 if n % 8 in (3, 4, 5, 6) else 0
    if n % 4 in (1, 2):
        b = sum(ind[2 * j] for j in range(n // 2 + 1))
    else:
        b = sum(ind[2 * j + 1] for j in range(0, (n - 1) // 2 + 1)) + n * m
    prefix = 0
    c = 0
    for j in range(1, n // 2 + 1):
        prefix += ind[2 * j - 2] + ind[2 * j - 1]
        c += (ind[2 * j] + ind[2 * j - 1]) * prefix
    d = (m + ind[n]) * sum(ind) if n % 2 else 0
    return SignExponents(a % 2, b % 2, c % 2, d % 2)


def sign_exponent(n: int, m: int, indices) -> int:
    """Mod-2 exponent; the summand's sign is (-1) to this."""
    return sign_exponents(n, m, indices).exponent


def lower_bound(k: int, suffix, bounds: LoopBounds) -> int:
    """S(k): for k >= 1 the least admissible i_k given i_{k+1}, ..., i_n;
    for k = 0 the forced value of i_0.

    S(k) = i_{k+1} - i_{k+2} + ... +- i_n
           + (-1)^(k+n) (lam - floor(n/2)) + floor(k/2).
    """
    n = bounds.n
    suffix = tuple(suffix)
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    if len(suffix) != n - k:
        raise ValueError(f"need the {n - k} values above i_{k}, got {len(suffix)}")
    alt = 0
    sign = 1
    for v in suffix:
        alt += sign * v
        sign = -sign
    parity = -1 if (k + n) % 2 else 1
    return alt + parity * (bounds.lam - n // 2) + k // 2


def full_index_tuples(n: int, m: int):
    """Every strictly increasing (n+1)-tuple inside [0, m]."""
    return combinations(range(m + 1), n + 1)


def bounded_index_tuples(p: int, q: int, n: int):
    """Index tuples visited by the restricted loop nest.

    Uses S(n) = lam and the step relation S(k-1) = i_k - S(k) + (k-1), so
    each level costs O(1).  Tuples whose forced i_0 falls outside
    [0, i_1) are skipped; for n <= min(p, q) that never happens and the
    yield count equals the closed-form summand count.
    """
    if n < 0 or n > p or n > q:
        return
    m = p + q - n
    if n == 0:
        if 0 <= p <= m:
            yield (p,)
        return
    lam = p if n % 2 == 0 else q

    def descend(k, upper, s_k, suffix):
        if k == 1:
            for i1 in range(s_k, upper + 1):
                i0 = i1 - s_k
                if 0 <= i0 < i1:
                    yield (i0, i1) + suffix
            return
        for ik in range(s_k, upper + 1):
            yield from descend(k - 1, ik - 1, ik - s_k + k - 1, (ik,) + suffix)

    yield from descend(n, m, lam, ())


def oracle_summands(n: int, x):
    """Signed summands of the unrestricted enumeration on the simplex x."""
    x = tuple(x)
    m = len(x) - 1
    for ind in full_index_tuples(n, m):
        s = -1 if sign_exponent(n, m, ind) else 1
        yield Summand(IndexTuple(ind, m), s, plus_face(ind, m, x), minus_face(ind, m, x))


def bounded_summands(p: int, q: int, n: int, x):
    """Signed summands of the restricted enumeration on the simplex x."""
    x = tuple(x)
    m = p + q - n
    if len(x) != m + 1:
        raise DimensionMismatch(
            f"expected a {m}-simplex, got dimension {len(x) - 1}")
    for ind in bounded_index_tuples(p, q, n):
        s = -1 if sign_exponent(n, m, ind) else 1
        yield Summand(IndexTuple(ind, m), s, plus_face(ind, m, x), minus_face(ind, m, x))


def cup_eval_oracle(c: Cochain, cprime: Cochain, x, n: int) -> int:
    """Value of the cup-n product on one simplex, by full enumeration."""
    ring = _common_ring(c, cprime)
    m = c.degree + cprime.degree - n
    x = tuple(x)
    if len(x) != m + 1:
        raise DimensionMismatch(
            f"expected a {m}-simplex, got dimension {len(x) - 1}")
    if is_degenerate(x):
        return ring.zero
    unsigned = ring.modulus == 2
    total = 0
    for ind in full_index_tuples(n, m):
        v = c.evaluate(plus_face(ind, m, x))
        if not v:
            continue
        w = cprime.evaluate(minus_face(ind, m, x))
        if not w:
            continue
        vw = v * w
        if not unsigned and sign_exponent(n, m, ind):
            vw = -vw
        total += vw
    return ring.normalize(total)


def cup_eval_bounded(c: Cochain, cprime: Cochain, x, n: int) -> int:
    """Value of the cup-n product on one simplex, restricted loop nest."""
    ring = _common_ring(c, cprime)
    p, q = c.degree, cprime.degree
    m = p + q - n
    x = tuple(x)
    if len(x) != m + 1:
        raise DimensionMismatch(
            f"expected a {m}-simplex, got dimension {len(x) - 1}")
    if n > p or n > q:
        return ring.zero
    if is_degenerate(x):
        return ring.zero
    unsigned = ring.modulus == 2
    total = 0
    for ind in bounded_index_tuples(p, q, n):
        v = c.evaluate(plus_face(ind, m, x))
        if not v:
            continue
        w = cprime.evaluate(minus_face(ind, m, x))
        if not w:
            continue
        vw = v * w
        if not unsigned and sign_exponent(n, m, ind):
            vw = -vw
        total += vw
    return ring.normalize(total)


def cup_product(c: Cochain, cprime: Cochain, n: int, K: SimplicialComplex,
                workers: int = 1) -> FormalSum:
    """Whole-complex cup-n product as a formal sum over the join simplices.

    Walks support(c) x support(cprime); a pair (x, y) contributes to
    z = x join y exactly when z has dimension p+q-n, the shared vertices
    mark a tuple with i_0 = S(0), and x is the face of z kept by the
    plus word.  Output is independent of the worker count.
    """
    ring = _common_ring(c, cprime)
    require_support_in_complex(c, K)
    require_support_in_complex(cprime, K)
    p, q = c.degree, cprime.degree
    if n < 0 or n > p or n > q:
        return FormalSum(ring)
    m = p + q - n
    bounds = LoopBounds(n, p, q)
    unsigned = ring.modulus == 2
    pairs = [(x, y) for x in sorted(c.support) for y in sorted(cprime.support)]

    def accumulate(chunk):
        acc = {}
        for x, y in chunk:
            term = _pair_term(c, cprime, x, y, n, m, K, bounds, unsigned)
            if term is not None:
                z, coeff = term
                acc[z] = acc.get(z, 0) + coeff
        return acc

    if workers <= 1 or len(pairs) <= 1:
        merged = accumulate(pairs)
    else:
        chunks = [pairs[k::workers] for k in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(accumulate, chunks))
        merged = {}
        for part in parts:
            for z, v in part.items():
                merged[z] = merged.get(z, 0) + v
    return FormalSum(ring, merged.items())


def _pair_term(c, cprime, x, y, n, m, K, bounds, unsigned):
    z = union(x, y, K)
    if z is None or len(z) != m + 1:
        return None
    common = intersection(x, y)
    if common is None or len(common) != n + 1:
        return None
    pos = {v: k for k, v in enumerate(z)}
    ind = tuple(pos[v] for v in common)
    if ind[0] != lower_bound(0, ind[1:], bounds):
        return None
    if plus_face(ind, m, z) != x:
        return None
    coeff = c.support[x] * cprime.support[y]
    if not unsigned and sign_exponent(n, m, ind):
        coeff = -coeff
    return z, coeff


def _common_ring(c, cprime):
    if c.ring != cprime.ring:
        raise ValueError(f"coefficient rings differ: {c.ring} vs {cprime.ring}")
    return c.ring
