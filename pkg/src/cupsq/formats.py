"""JSON document formats for complexes, cochains, and formal sums.

One self-describing UTF-8 JSON shape per object:

    complex     {"maximal_simplices": [[0, 1, 2], ...]}
    cochain     {"degree": 1, "ring": "Z", "support":
                     [{"simplex": [0, 1], "coeff": 1}, ...]}
                (modular rings: "ring": "Zmod", "modulus": 2)
    formal sum  {"ring": ..., "terms": [{"simplex": ..., "coeff": ...}]}

File parsing is strict: listed simplices must be strictly increasing.
The in-memory constructors stay lenient (they sort and canonicalize).
"""

from __future__ import annotations

import json
import warnings

from .cochains import Cochain, FormalSum
from .errors import FileFormatError
from .rings import Ring, Z
from .simplicial import SimplicialComplex


def load_complex(path) -> SimplicialComplex:
    return complex_from_dict(_load_json(path))


def load_cochain(path) -> Cochain:
    return cochain_from_dict(_load_json(path))


def complex_from_dict(doc) -> SimplicialComplex:
    raw = _get(doc, "maximal_simplices")
    if not isinstance(raw, list):
        raise FileFormatError('"maximal_simplices" must be a list of simplices')
    simplices = [_read_simplex(entry) for entry in raw]
    K = SimplicialComplex(simplices)
    kept = set(K.maximal)
    dropped = sorted(tuple(s) for s in simplices if tuple(s) not in kept)
    if dropped:
        warnings.warn(
            "dropped non-maximal simplices: " + ", ".join(str(list(s)) for s in dropped))
    return K


def complex_to_dict(K: SimplicialComplex) -> dict:
    return {"maximal_simplices": [list(s) for s in K.maximal]}


def cochain_from_dict(doc) -> Cochain:
    degree = _get(doc, "degree")
    if not isinstance(degree, int) or degree < 0:
        raise FileFormatError(f'"degree" must be a nonnegative integer, got {degree!r}')
    ring = _ring_from_doc(doc)
    support = []
    for entry in _get(doc, "support"):
        simplex = _read_simplex(_get(entry, "simplex"))
        if len(simplex) != degree + 1:
            raise FileFormatError(
                f"support simplex {list(simplex)} has dimension {len(simplex) - 1}, "
                f"expected {degree}")
        coeff = _get(entry, "coeff")
        if not isinstance(coeff, int):
            raise FileFormatError(f"coefficient must be an integer, got {coeff!r}")
        support.append((simplex, coeff))
    return Cochain(degree, ring, support)


def cochain_to_dict(c: Cochain) -> dict:
    doc = {"degree": c.degree}
    doc.update(_ring_to_doc(c.ring))
    doc["support"] = [{"simplex": list(s), "coeff": v} for s, v in c.items()]
    return doc


def formal_sum_from_dict(doc) -> FormalSum:
    ring = _ring_from_doc(doc)
    terms = []
    for entry in _get(doc, "terms"):
        simplex = _read_simplex(_get(entry, "simplex"))
        coeff = _get(entry, "coeff")
        if not isinstance(coeff, int):
            raise FileFormatError(f"coefficient must be an integer, got {coeff!r}")
        terms.append((simplex, coeff))
    return FormalSum(ring, terms)


def formal_sum_to_dict(fs: FormalSum) -> dict:
    doc = dict(_ring_to_doc(fs.ring))
    doc["terms"] = [{"simplex": list(s), "coeff": v} for s, v in fs.items()]
    return doc


def _ring_from_doc(doc) -> Ring:
    name = _get(doc, "ring")
    if name == "Z":
        return Z
    if name == "Zmod":
        modulus = _get(doc, "modulus")
        if not isinstance(modulus, int) or modulus < 2:
            raise FileFormatError(f'"modulus" must be an integer >= 2, got {modulus!r}')
        return Ring(modulus)
    raise FileFormatError(f'"ring" must be "Z" or "Zmod", got {name!r}')


def _ring_to_doc(ring: Ring) -> dict:
    if ring.modulus is None:
        return {"ring": "Z"}
    return {"ring": "Zmod", "modulus": ring.modulus}


def _read_simplex(entry) -> tuple:
    if not isinstance(entry, list) or not entry:
        raise FileFormatError(f"a simplex must be a nonempty list, got {entry!r}")
    for v in entry:
        if not isinstance(v, int) or isinstance(v, bool):
            raise FileFormatError(f"vertex labels must be integers: {entry!r}")
    if any(a >= b for a, b in zip(entry, entry[1:])):
        raise FileFormatError(f"simplex {entry!r} is not strictly increasing")
    return tuple(entry)


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: invalid JSON ({exc})") from exc


def _get(doc, key):
    if not isinstance(doc, dict) or key not in doc:
        raise FileFormatError(f'missing key "{key}"')
    return doc[key]
