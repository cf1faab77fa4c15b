"""Vertex-tuple simplices and finite ordered simplicial complexes.

A simplex is a nondecreasing tuple of integer vertex labels; it is
nondegenerate exactly when the labels are strictly increasing, and its
dimension is one less than its length.  A complex is described by its
maximal simplices; membership is downward closed, so a tuple belongs to
the complex when its vertex set sits inside some maximal simplex.
"""

from __future__ import annotations

from itertools import combinations

from .errors import InvalidSimplex, NotInComplex

Simplex = tuple


def as_simplex(vertices) -> Simplex:
    """Validate and return a vertex tuple (nonempty, nondecreasing ints)."""
    x = tuple(vertices)
    if not x:
        raise InvalidSimplex("a simplex needs at least one vertex")
    for v in x:
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidSimplex(f"vertex labels must be integers, got {v!r}")
    if any(a > b for a, b in zip(x, x[1:])):
        raise InvalidSimplex(f"vertices must be nondecreasing: {list(x)}")
    return x


def dimension(x: Simplex) -> int:
    return len(x) - 1


def is_degenerate(x: Simplex) -> bool:
    return any(a == b for a, b in zip(x, x[1:]))


def face(i: int, x: Simplex) -> Simplex:
    """Delete the vertex at position i."""
    if len(x) < 2:
        raise IndexError("a 0-simplex has no faces")
    if not 0 <= i <= len(x) - 1:
        raise IndexError(f"face index {i} out of range for {list(x)}")
    return x[:i] + x[i + 1:]


def degeneracy(i: int, x: Simplex) -> Simplex:
    """Duplicate the vertex at position i; the result is degenerate."""
    if not 0 <= i <= len(x) - 1:
        raise IndexError(f"degeneracy index {i} out of range for {list(x)}")
    return x[:i + 1] + x[i:]


class SimplicialComplex:
    """Finite complex given by maximal simplices.

    Construction canonicalizes: vertex lists are sorted and deduplicated,
    and simplices contained in another listed simplex are dropped.
    """

    __slots__ = ("maximal", "_maximal_sets", "_by_dim")

    def __init__(self, maximal_simplices):
        cleaned = set()
        for raw in maximal_simplices:
            vs = tuple(sorted(set(raw)))
            if not vs:
                raise InvalidSimplex("a simplex needs at least one vertex")
            for v in vs:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise InvalidSimplex(f"vertex labels must be integers, got {v!r}")
            cleaned.add(vs)
        maximal = [s for s in cleaned
                   if not any(s is not t and set(s) <= set(t) for t in cleaned)]
        self.maximal = tuple(sorted(maximal))
        self._maximal_sets = tuple(frozenset(s) for s in self.maximal)
        self._by_dim = {}

    @property
    def vertices(self) -> tuple:
        return tuple(sorted(set().union(*map(set, self.maximal)))) if self.maximal else ()

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.maximal), default=-1)

    def contains(self, x) -> bool:
        """True when the vertex set of x lies inside some maximal simplex."""
        xs = set(x)
        if not xs:
            return False
        return any(xs <= ms for ms in self._maximal_sets)

    def simplices_of_dim(self, n: int) -> tuple:
        """All nondegenerate n-simplices, lexicographically ordered."""
        if n < 0:
            return ()
        if n not in self._by_dim:
            found = set()
            for s in self.maximal:
                if len(s) > n:
                    found.update(combinations(s, n + 1))
            self._by_dim[n] = tuple(sorted(found))
        return self._by_dim[n]

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.maximal == other.maximal

    def __hash__(self):
        return hash(self.maximal)

    def __repr__(self) -> str:
        return f"SimplicialComplex({[list(s) for s in self.maximal]})"


def union(x: Simplex, y: Simplex, K: SimplicialComplex):
    """Smallest simplex of K containing both x and y, or None.

    The candidate is the simplex on the merged vertex set; by downward
    closure any common coface contains it, so it is the unique minimum
    whenever one exists at all.
    """
    if not K.contains(x):
        raise NotInComplex(f"simplex {list(x)} is not in the complex")
    if not K.contains(y):
        raise NotInComplex(f"simplex {list(y)} is not in the complex")
    merged = tuple(sorted(set(x) | set(y)))
    return merged if K.contains(merged) else None


def intersection(x: Simplex, y: Simplex):
    """Largest common sub-simplex (the shared vertex set), or None."""
    common = tuple(sorted(set(x) & set(y)))
    return common if common else None
