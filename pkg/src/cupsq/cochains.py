"""Sparse cochains, formal sums of simplices, and the (co)differential.

Both containers drop zero coefficients eagerly, so equality of values is
equality of the stored maps.  Evaluation of a cochain returns the ring
zero for simplices of the wrong dimension, for degenerate tuples, and
for simplices outside the support; that single convention is what lets
the unrestricted product evaluator agree with the restricted one.
"""

from __future__ import annotations

from .errors import DimensionMismatch, InvalidSimplex, SupportNotInComplex
from .rings import Ring, Z
from .simplicial import SimplicialComplex, as_simplex, face, is_degenerate


class FormalSum:
    """Finite ring-linear combination of simplices."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for simplex, coeff in items:
            s = tuple(simplex)
            v = ring.normalize(data.get(s, 0) + coeff)
            if v:
                data[s] = v
            elif s in data:
                del data[s]
        self.ring = ring
        self.terms = data

    def coefficient(self, simplex) -> int:
        return self.terms.get(tuple(simplex), 0)

    def items(self) -> list:
        return sorted(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FormalSum") -> "FormalSum":
        if self.ring != other.ring:
            raise ValueError(f"coefficient rings differ: {self.ring} vs {other.ring}")
        merged = dict(self.terms)
        out = FormalSum(self.ring)
        out.terms = merged
        for s, v in other.terms.items():
            w = self.ring.normalize(merged.get(s, 0) + v)
            if w:
                merged[s] = w
            elif s in merged:
                del merged[s]
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, FormalSum)
                and self.ring == other.ring and self.terms == other.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        body = " + ".join(f"{v}*{list(s)}" for s, v in self.items()) or "0"
        return f"FormalSum({self.ring}: {body})"


class Cochain:
    """Degree-tagged sparse map from nondegenerate simplices to ring values."""

    __slots__ = ("degree", "ring", "support")

    def __init__(self, degree: int, ring: Ring, support=()):
        if degree < 0:
            raise ValueError(f"degree must be nonnegative, got {degree}")
        data = {}
        items = support.items() if isinstance(support, dict) else support
        for simplex, coeff in items:
            s = as_simplex(simplex)
            if is_degenerate(s):
                raise InvalidSimplex(f"degenerate simplex in support: {list(s)}")
            if len(s) != degree + 1:
                raise DimensionMismatch(
                    f"support simplex {list(s)} has dimension {len(s) - 1}, "
                    f"expected {degree}")
            v = ring.normalize(data.get(s, 0) + coeff)
            if v:
                data[s] = v
            elif s in data:
                del data[s]
        self.degree = degree
        self.ring = ring
        self.support = data

    @classmethod
    def from_formal_sum(cls, fs: FormalSum, degree: int) -> "Cochain":
        return cls(degree, fs.ring, fs.terms)

    def evaluate(self, x) -> int:
        """Value on a simplex; zero off-support, off-dimension, or degenerate.

        Degenerate tuples are never stored as keys, so the plain lookup
        already returns zero for them.
        """
        x = tuple(x)
        if len(x) != self.degree + 1:
            return 0
        return self.support.get(x, 0)

    __call__ = evaluate

    def pair(self, chain: FormalSum) -> int:
        """Linear pairing with a formal sum of simplices."""
        total = 0
        for s, coeff in chain.terms.items():
            total += coeff * self.evaluate(s)
        return self.ring.normalize(total)

    def items(self) -> list:
        return sorted(self.support.items())

    def is_zero(self) -> bool:
        return not self.support

    def __add__(self, other: "Cochain") -> "Cochain":
        if self.ring != other.ring:
            raise ValueError(f"coefficient rings differ: {self.ring} vs {other.ring}")
        if self.degree != other.degree:
            raise DimensionMismatch(
                f"cannot add cochains of degrees {self.degree} and {other.degree}")
        out = dict(self.support)
        for s, v in other.support.items():
            w = self.ring.normalize(out.get(s, 0) + v)
            if w:
                out[s] = w
            elif s in out:
                del out[s]
        result = Cochain(self.degree, self.ring)
        result.support = out
        return result

    def __eq__(self, other) -> bool:
        return (isinstance(other, Cochain) and self.degree == other.degree
                and self.ring == other.ring and self.support == other.support)

    def __repr__(self) -> str:
        body = ", ".join(f"{list(s)}: {v}" for s, v in self.items()) or "0"
        return f"Cochain(deg={self.degree}, {self.ring}, {{{body}}})"


def differential(x, ring: Ring = Z) -> FormalSum:
    """Alternating sum of the faces of x; the empty sum in dimension 0."""
    x = as_simplex(x)
    if is_degenerate(x):
        raise InvalidSimplex(f"differential of a degenerate simplex: {list(x)}")
    if len(x) == 1:
        return FormalSum(ring)
    return FormalSum(ring, ((face(i, x), -1 if i % 2 else 1) for i in range(len(x))))


def coboundary(c: Cochain, K: SimplicialComplex) -> Cochain:
    """Degree-(p+1) cochain x -> c(dx) over the simplices of K."""
    require_support_in_complex(c, K)
    out = {}
    for x in K.simplices_of_dim(c.degree + 1):
        v = c.pair(differential(x, c.ring))
        if v:
            out[x] = v
    result = Cochain(c.degree + 1, c.ring)
    result.support = out
    return result


def is_cocycle(c: Cochain, K: SimplicialComplex) -> bool:
    return coboundary(c, K).is_zero()


def require_support_in_complex(c: Cochain, K: SimplicialComplex) -> None:
    for s in sorted(c.support):
        if not K.contains(s):
            raise SupportNotInComplex(
                f"support simplex {list(s)} is not in the complex")
