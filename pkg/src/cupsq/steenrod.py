"""Chain-level squaring operations on mod-2 cochains.

The degree-i square of a j-cocycle is its cup-(j-i) self-product over
Z/2.  Because both factors come from the same support, the whole sum
collapses to a parity count over unordered support pairs: a pair
(x_r, x_s) with r < s contributes to the simplex z = x_r join x_s when
z has dimension i+j, the shared vertices mark a tuple with i_0 = S(0),
and x_r is one of the two marked faces of z (the even-segment face or
the odd-segment face, one of which is then x_s).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .cochains import Cochain, FormalSum, is_cocycle, require_support_in_complex
from .cup import LoopBounds, lower_bound
from .errors import NotACocycle
from .rings import Z2
from .simplicial import SimplicialComplex, intersection, union
from .words import minus_face, plus_face


def segments(z, indices) -> list:
    """Closed vertex segments of z cut at the marked positions.

    Segment 0 runs up to the first mark, segment j between marks j-1 and
    j, and the last segment from the final mark to the end; consecutive
    segments share exactly the mark between them, and their union is z.
    """
    z = tuple(z)
    n = len(indices) - 1
    out = [z[:indices[0] + 1]]
    for j in range(1, n + 1):
        out.append(z[indices[j - 1]:indices[j] + 1])
    out.append(z[indices[n]:])
    return out


def sq(i: int, c: Cochain, K: SimplicialComplex, workers: int = 1,
       use_pair_check: bool = False) -> FormalSum:
    """Degree-i square of the mod-2 cochain c as a formal sum of simplices.

    i = 0 returns c itself and i > degree the empty sum, in both cases
    without a cocycle test; for 1 <= i <= degree the input must be a
    cocycle (NotACocycle otherwise).  The default test computes the full
    coboundary; use_pair_check switches to the legacy pairwise screen
    (see pair_based_cocycle_check for its blind spots).  Output is
    independent of the worker count.
    """
    if c.ring != Z2:
        raise ValueError("squares are defined for Z/2 coefficients")
    if i < 0:
        raise ValueError(f"the power must be nonnegative, got {i}")
    require_support_in_complex(c, K)
    j = c.degree
    if i == 0:
        return FormalSum(Z2, dict(c.support))
    if i > j:
        return FormalSum(Z2)
    passes = pair_based_cocycle_check(c, K) if use_pair_check else is_cocycle(c, K)
    if not passes:
        raise NotACocycle(f"the degree-{j} input cochain is not a cocycle")
    n = j - i
    m = i + j
    supp = sorted(c.support)
    pairs = [(supp[r], supp[s])
             for r in range(len(supp)) for s in range(r + 1, len(supp))]

    def toggled(chunk):
        out = set()
        for xr, xs in chunk:
            z = union(xr, xs, K)
            if z is not None and len(z) == m + 1 and _pair_matches(xr, xs, z, n, j):
                out.symmetric_difference_update((z,))
        return out

    if workers <= 1 or len(pairs) <= 1:
        result = toggled(pairs)
    else:
        chunks = [pairs[k::workers] for k in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(toggled, chunks))
        result = set()
        for part in parts:
            result ^= part
    return FormalSum(Z2, ((z, 1) for z in result))


def assembling_pairs(z, support, i: int, j: int) -> list:
    """The ordered support pairs (x_r, x_s), r < s, whose join is z and
    which qualify as a summand of the degree-i square."""
    n = j - i
    if n < 0:
        return []
    z = tuple(z)
    zset = set(z)
    supp = sorted(set(map(tuple, support)))
    out = []
    for r in range(len(supp)):
        for s in range(r + 1, len(supp)):
            xr, xs = supp[r], supp[s]
            if set(xr) | set(xs) != zset:
                continue
            if _pair_matches(xr, xs, z, n, j):
                out.append((xr, xs))
    return out


def dz_parity(z, support, i: int, j: int) -> int:
    """Parity of the number of support pairs assembling the simplex z.

    This is the coefficient of z in the degree-i square of the cochain
    with the given support: 0 when the qualifying pair count is even,
    1 when odd.
    """
    return len(assembling_pairs(z, support, i, j)) % 2


def pair_based_cocycle_check(c: Cochain, K: SimplicialComplex) -> bool:
    """Legacy pairwise parity screen for the cocycle property.

    For every (j+1)-simplex arising as the join of two support simplices,
    collect the distinct support simplices appearing in such joins and
    accept when every collection has even size.  The screen is incomplete
    both ways: a (j+1)-simplex with exactly one support face forms no
    pair, so its odd coboundary goes unseen, and a cochain whose support
    forms no pair at all (a single simplex, say) is always rejected.
    Kept only for comparison against the default full coboundary test.
    """
    supp = sorted(c.support)
    j = c.degree
    collected = {}
    any_pair = False
    for r in range(len(supp)):
        for s in range(r + 1, len(supp)):
            u = union(supp[r], supp[s], K)
            if u is None or len(u) != j + 2:
                continue
            any_pair = True
            faces = collected.setdefault(u, set())
            faces.add(supp[r])
            faces.add(supp[s])
    if not any_pair:
        return False
    return all(len(faces) % 2 == 0 for faces in collected.values())


def _pair_matches(xr, xs, z, n, j):
    common = intersection(xr, xs)
    if common is None or len(common) != n + 1:
        return False
    pos = {v: k for k, v in enumerate(z)}
    ind = tuple(pos[v] for v in common)
    if ind[0] != lower_bound(0, ind[1:], LoopBounds(n, j, j)):
        return False
    m = len(z) - 1
    return xr == plus_face(ind, m, z) or xr == minus_face(ind, m, z)
