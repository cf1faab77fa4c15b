"""Binary-word bookkeeping for face-operator batches.

An index tuple (i_0, ..., i_n) with 0 <= i_0 < ... < i_n <= m names the
word of m+1 letters over {0, 1} carrying zeros at the i_k and ones
everywhere else.  The word decomposes into blocks: block 0 runs from
position 0 up to and including the zero at i_0, block j (1 <= j <= n)
runs from i_{j-1}+1 up to the zero at i_j, and block n+1 is the trailing
run of ones after i_n (possibly empty).

Splitting sends odd-numbered blocks to the "plus" word and even-numbered
blocks to the "minus" word, e.g.

    word_of(IndexTuple((2, 5), 6)) == '1101101'
    split('1101101') == ('110', '1101')
    split('00110') == ('0', '0110')

Reading a 1-letter in position k as "delete the vertex at position k",
each side of the pair prescribes the face of a simplex kept by one
factor: the plus side keeps the closed segments between even-numbered
marks, the minus side those between odd-numbered marks, and both keep
the marked positions i_0, ..., i_n themselves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, InvalidTuple, MalformedPair
from .simplicial import Simplex


@dataclass(frozen=True)
class IndexTuple:
    """Strictly increasing positions inside a word of length m+1."""

    indices: tuple
    m: int

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        if not self.indices:
            raise InvalidTuple("an index tuple needs at least one index")
        prev = -1
        for v in self.indices:
            if not isinstance(v, int) or isinstance(v, bool) or v <= prev:
                raise InvalidTuple(
                    f"indices must be strictly increasing nonnegative ints: {self.indices}")
            prev = v
        if self.m < prev:
            raise InvalidTuple(f"last index {prev} exceeds m={self.m}")

    @property
    def n(self) -> int:
        return len(self.indices) - 1


def word_of(t: IndexTuple) -> str:
    """Render the word: zeros at t.indices, ones elsewhere."""
    letters = ["1"] * (t.m + 1)
    for i in t.indices:
        letters[i] = "0"
    return "".join(letters)


def tuple_of_word(w: str) -> IndexTuple:
    """Inverse of word_of: read the zero positions back off."""
    _check_word(w)
    zeros = tuple(k for k, ch in enumerate(w) if ch == "0")
    if not zeros:
        raise InvalidTuple(f"word {w!r} has no zero letters")
    return IndexTuple(zeros, len(w) - 1)


def blocks(w: str) -> list:
    """Cut a word into blocks: runs of ones each closed by a zero, plus
    the trailing run of ones when it is nonempty."""
    _check_word(w)
    out = []
    start = 0
    for k, ch in enumerate(w):
        if ch == "0":
            out.append(w[start:k + 1])
            start = k + 1
    if start < len(w):
        out.append(w[start:])
    return out


def split(w: str) -> tuple:
    """Word pair (plus, minus): odd-numbered blocks go to plus, even to minus."""
    bs = blocks(w)
    if "0" not in w:
        raise InvalidTuple(f"word {w!r} has no zero letters")
    plus = "".join(bs[j] for j in range(1, len(bs), 2))
    minus = "".join(bs[j] for j in range(0, len(bs), 2))
    return plus, minus


def merge(plus: str, minus: str) -> IndexTuple:
    """Reassemble the original tuple by alternating blocks, minus first.

    Raises MalformedPair unless the interleaved word splits back into
    exactly the given pair.
    """
    bp = blocks(plus)
    bm = blocks(minus)
    if len(bm) - len(bp) not in (0, 1):
        raise MalformedPair(f"block counts do not interleave: {plus!r}, {minus!r}")
    parts = []
    for k in range(len(bm)):
        parts.append(bm[k])
        if k < len(bp):
            parts.append(bp[k])
    word = "".join(parts)
    if "0" not in word:
        raise MalformedPair(f"no zero letters in the merged word of {plus!r}, {minus!r}")
    if split(word) != (plus, minus):
        raise MalformedPair(f"pair {plus!r}, {minus!r} is not a split of any word")
    return tuple_of_word(word)


def plus_face(indices, m: int, x: Simplex) -> Simplex:
    """Unchecked core of apply_plus: delete 1-letters of odd blocks."""
    return _block_face(indices, m, x, delete_odd=True)


def minus_face(indices, m: int, x: Simplex) -> Simplex:
    """Unchecked core of apply_minus: delete 1-letters of even blocks."""
    return _block_face(indices, m, x, delete_odd=False)


def apply_plus(t: IndexTuple, x) -> Simplex:
    """Face of x kept by the plus word (even-numbered closed segments)."""
    x = tuple(x)
    if len(x) != t.m + 1:
        raise DimensionMismatch(
            f"tuple with m={t.m} applied to a dimension-{len(x) - 1} simplex")
    return plus_face(t.indices, t.m, x)


def apply_minus(t: IndexTuple, x) -> Simplex:
    """Face of x kept by the minus word (odd-numbered closed segments)."""
    x = tuple(x)
    if len(x) != t.m + 1:
        raise DimensionMismatch(
            f"tuple with m={t.m} applied to a dimension-{len(x) - 1} simplex")
    return minus_face(t.indices, t.m, x)


def _block_face(indices, m, x, delete_odd):
    n = len(indices) - 1
    keep = [True] * (m + 1)
    for j in range(n + 2):
        if (j % 2 == 1) != delete_odd:
            continue
        if j == 0:
            lo, hi = 0, indices[0] - 1
        elif j <= n:
            lo, hi = indices[j - 1] + 1, indices[j] - 1
        else:
            lo, hi = indices[n] + 1, m
        for k in range(lo, hi + 1):
            keep[k] = False
    return tuple(v for v, kept in zip(x, keep) if kept)


def _check_word(w):
    if any(ch not in "01" for ch in w):
        raise InvalidTuple(f"words use the alphabet {{0, 1}}: {w!r}")
