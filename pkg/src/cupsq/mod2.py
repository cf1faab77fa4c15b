"""Bitset linear algebra over GF(2) for coboundary-space checks.

Matrices store one int per row; bit j of row i is the coefficient of
codomain basis simplex j in the image of domain basis simplex i.  Bases
are the lexicographically ordered simplex lists of the complex, and
elimination always pivots on the lowest set bit, so every answer here is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cochains import Cochain, require_support_in_complex
from .rings import Z2
from .simplicial import SimplicialComplex


@dataclass
class Mod2Matrix:
    n_rows: int
    n_cols: int
    rows: list

    def rank(self) -> int:
        return len(_echelon(self.rows))

    def in_rowspan(self, vec: int) -> bool:
        basis = _echelon(self.rows)
        return _reduce(vec, basis) == 0

    def row_nullspace(self) -> list:
        """Basis of row combinations XORing to zero, as masks over row
        indices (bit r set = row r participates)."""
        basis = {}
        masks = []
        for idx, row in enumerate(self.rows):
            cur, mark = row, 1 << idx
            while cur:
                piv = cur & -cur
                if piv not in basis:
                    break
                brow, bmark = basis[piv]
                cur ^= brow
                mark ^= bmark
            if cur:
                basis[cur & -cur] = (cur, mark)
            else:
                masks.append(mark)
        return masks

    def compose(self, other: "Mod2Matrix") -> "Mod2Matrix":
        """Matrix of self followed by other (rows map through other)."""
        if self.n_cols != other.n_rows:
            raise ValueError(
                f"cannot compose {self.n_cols}-column with {other.n_rows}-row matrix")
        rows = []
        for row in self.rows:
            image = 0
            rest = row
            while rest:
                low = rest & -rest
                image ^= other.rows[low.bit_length() - 1]
                rest ^= low
            rows.append(image)
        return Mod2Matrix(self.n_rows, other.n_cols, rows)

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.rows)


def _echelon(rows):
    basis = {}
    for row in rows:
        cur = _reduce(row, basis)
        if cur:
            basis[cur & -cur] = cur
    return basis


def _reduce(vec, basis):
    while vec:
        piv = vec & -vec
        if piv not in basis:
            return vec
        vec ^= basis[piv]
    return 0


def coboundary_matrix(K: SimplicialComplex, p: int) -> Mod2Matrix:
    """Matrix of the degree-p coboundary in the lexicographic bases."""
    domain = K.simplices_of_dim(p)
    codomain = K.simplices_of_dim(p + 1)
    index = {s: r for r, s in enumerate(domain)}
    rows = [0] * len(domain)
    for k, t in enumerate(codomain):
        bit = 1 << k
        for i in range(len(t)):
            rows[index[t[:i] + t[i + 1:]]] |= bit
    return Mod2Matrix(len(domain), len(codomain), rows)


def cochain_bits(c: Cochain, K: SimplicialComplex) -> int:
    """Bit vector of a mod-2 cochain over the lexicographic simplex basis."""
    index = {s: k for k, s in enumerate(K.simplices_of_dim(c.degree))}
    vec = 0
    for s in c.support:
        vec |= 1 << index[s]
    return vec


def is_coboundary_mod2(c: Cochain, K: SimplicialComplex) -> bool:
    """Membership of a mod-2 cochain in the span of the coboundaries."""
    if c.ring != Z2:
        raise ValueError("coboundary membership is decided for Z/2 coefficients")
    require_support_in_complex(c, K)
    vec = cochain_bits(c, K)
    if c.degree == 0:
        return vec == 0
    return coboundary_matrix(K, c.degree - 1).in_rowspan(vec)


def betti_mod2(K: SimplicialComplex, n: int) -> int:
    """dim Ker(delta^n) - rank(delta^{n-1}) over Z/2."""
    count = len(K.simplices_of_dim(n))
    if count == 0:
        return 0
    rank_here = coboundary_matrix(K, n).rank()
    rank_below = coboundary_matrix(K, n - 1).rank() if n >= 1 else 0
    return count - rank_here - rank_below


def cocycle_basis(K: SimplicialComplex, p: int) -> list:
    """Deterministic basis of the degree-p cocycles over Z/2."""
    domain = K.simplices_of_dim(p)
    out = []
    for mask in coboundary_matrix(K, p).row_nullspace():
        support = {}
        rest = mask
        while rest:
            low = rest & -rest
            support[domain[low.bit_length() - 1]] = 1
            rest ^= low
        out.append(Cochain(p, Z2, support))
    return out


def nontrivial_cocycle(K: SimplicialComplex, p: int):
    """A degree-p cocycle that is not a coboundary, or None."""
    for c in cocycle_basis(K, p):
        if not is_coboundary_mod2(c, K):
            return c
    return None
