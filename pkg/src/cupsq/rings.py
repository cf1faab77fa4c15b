"""Commutative coefficient rings: the integers and the modular rings Z/m.

Elements are plain Python ints; the ring object normalizes them to
canonical form (arbitrary precision over Z, residues in [0, m) over Z/m),
so element equality is int equality.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Ring:
    """Z when modulus is None, otherwise Z/modulus."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")

    def normalize(self, value: int) -> int:
        if self.modulus is None:
            return value
        return value % self.modulus

    def add(self, a: int, b: int) -> int:
        return self.normalize(a + b)

    def mul(self, a: int, b: int) -> int:
        return self.normalize(a * b)

    def neg(self, a: int) -> int:
        return self.normalize(-a)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return self.normalize(1)

    def __repr__(self) -> str:
        return "Z" if self.modulus is None else f"Z/{self.modulus}"


Z = Ring()
Z2 = Ring(2)
