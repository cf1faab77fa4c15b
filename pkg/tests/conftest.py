"""Shared fixtures and random-instance helpers for the test suite."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from cupsq import Cochain, Ring, SimplicialComplex, Z2
from cupsq.mod2 import cocycle_basis

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

SOLID_TRIANGLE = SimplicialComplex([(0, 1, 2)])
HOLLOW_TRIANGLE = SimplicialComplex([(0, 1), (1, 2), (0, 2)])
SOLID_5_SIMPLEX = SimplicialComplex([tuple(range(6))])
TETRA_BOUNDARY = SimplicialComplex([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
RP2 = SimplicialComplex([
    (1, 2, 3), (1, 3, 4), (1, 2, 6), (1, 4, 5), (1, 5, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)])


def random_complex(rng: random.Random, n_vertices: int = 6,
                   max_faces: int = 5) -> SimplicialComplex:
    """A random nonempty subcomplex on vertex labels 0..n_vertices-1."""
    faces = []
    for _ in range(rng.randint(1, max_faces)):
        size = rng.randint(1, n_vertices)
        faces.append(tuple(sorted(rng.sample(range(n_vertices), size))))
    return SimplicialComplex(faces)


def random_cochain(rng: random.Random, K: SimplicialComplex, degree: int,
                   ring: Ring, density: float = 0.5) -> Cochain:
    """Random cochain supported on the degree-d simplices of K."""
    support = {}
    for s in K.simplices_of_dim(degree):
        if rng.random() < density:
            if ring.modulus is None:
                support[s] = rng.choice([-3, -2, -1, 1, 2, 3])
            else:
                support[s] = rng.randrange(1, ring.modulus)
    return Cochain(degree, ring, support)


def random_cocycle(rng: random.Random, K: SimplicialComplex, degree: int):
    """Random mod-2 cocycle (a combination of kernel basis vectors), or
    None when the cocycle space is trivial."""
    basis = cocycle_basis(K, degree)
    if not basis:
        return None
    c = Cochain(degree, Z2)
    for b in basis:
        if rng.random() < 0.6:
            c = c + b
    if c.is_zero():
        c = c + basis[rng.randrange(len(basis))]
    return c


@pytest.fixture
def rng():
    return random.Random(20240817)
