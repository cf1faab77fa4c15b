"""Acceptance suite: one test per criterion, each printing a PASS line
with its measured runtime (run with -s to see them)."""

import json
import random
import subprocess
import sys
import time
from itertools import product

import pytest

from cupsq import (Cochain, IndexTuple, Ring, SimplicialComplex, Z, Z2,
                   bounded_index_tuples, bounded_summands, coboundary,
                   count_bounded, count_oracle, cup_eval_bounded,
                   cup_eval_oracle, cup_product, full_index_tuples,
                   is_coboundary_mod2, is_cocycle, merge, nontrivial_cocycle,
                   split, sq, word_of)
from cupsq.cli import main as cli_main
from conftest import (DATA_DIR, RP2, SOLID_5_SIMPLEX, TETRA_BOUNDARY,
                      random_cochain, random_cocycle, random_complex)

TABLE1_GOLDEN = [
    ("c_3 ⌣_2 c_4", 20, 6),
    ("c_6 ⌣_5 c_6", 28, 12),
    ("c_12 ⌣_4 c_10", 11628, 1260),
    ("c_25 ⌣_5 c_30", 18009460, 621621),
    ("c_60 ⌣_5 c_70", 4925156775, 68222616),
    ("c_6 ⌣_5 c_700", 162699437009655, 970224),
    ("c_60 ⌣_50 c_60", 225368761961739396, 33701394635724816),
    ("c_6 ⌣_5 c_7000", 163331343055757216550, 97902024),
]


def _report(number, label, started, budget):
    elapsed = time.perf_counter() - started
    print(f"PASS criterion {number} ({label}): {elapsed:.2f}s < {budget:.0f}s")
    assert elapsed < budget, f"criterion {number} exceeded its {budget}s budget"


def test_criterion_1_table_reproduction(capsys):
    started = time.perf_counter()
    from cupsq.counting import table1
    assert table1() == TABLE1_GOLDEN
    code = cli_main(["bench"])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == [f"{label}  thm2: {full}  thm3: {restricted}"
                     for label, full, restricted in TABLE1_GOLDEN]
    _report(1, "benchmark table, exact big integers", started, 1.0)


def test_criterion_2_oracle_equivalence():
    started = time.perf_counter()
    rng = random.Random(1201)
    rings = [Z, Z2, Ring(7)]
    family = [SOLID_5_SIMPLEX] + [random_complex(rng, n_vertices=6)
                                  for _ in range(50)]
    grid = [(p, q, n) for p in range(5) for q in range(5)
            for n in range(min(p, q) + 1)]
    evaluations = 0
    for p, q, n in grid:
        for ring in rings:
            for pair_index in range(20):
                K = family[(evaluations + pair_index) % len(family)]
                c = random_cochain(rng, K, p, ring)
                cprime = random_cochain(rng, K, q, ring)
                for z in K.simplices_of_dim(p + q - n):
                    assert cup_eval_oracle(c, cprime, z, n) \
                        == cup_eval_bounded(c, cprime, z, n), (p, q, n, ring, z)
                    evaluations += 1
    assert evaluations > 10000
    _report(2, f"restricted = unrestricted on {evaluations} evaluations",
            started, 60.0)


def test_criterion_3_enumeration_count_law():
    started = time.perf_counter()
    for p in range(13):
        for q in range(13):
            for n in range(min(p, q) + 1):
                m = p + q - n
                visited = sum(1 for _ in bounded_index_tuples(p, q, n))
                assert visited == count_bounded(p, q, n), (p, q, n)
                unrestricted = sum(1 for _ in full_index_tuples(n, m))
                assert unrestricted == count_oracle(p, q, n), (p, q, n)
    _report(3, "loop-nest counts equal the closed forms for p, q <= 12",
            started, 10.0)


def test_criterion_4_hirsch_relation():
    started = time.perf_counter()
    rng = random.Random(1204)
    instances = 0
    while instances < 200:
        K = random_complex(rng, n_vertices=7)
        p, q = rng.randint(1, 3), rng.randint(1, 3)
        n = rng.randint(1, min(p, q))
        c = random_cochain(rng, K, p, Z2)
        cprime = random_cochain(rng, K, q, Z2)
        deg = p + q - n
        lhs = coboundary(Cochain(deg, Z2, cup_product(c, cprime, n, K).terms), K)
        rhs = (Cochain(deg + 1, Z2, cup_product(c, cprime, n - 1, K).terms)
               + Cochain(deg + 1, Z2, cup_product(cprime, c, n - 1, K).terms)
               + Cochain(deg + 1, Z2,
                         cup_product(coboundary(c, K), cprime, n, K).terms)
               + Cochain(deg + 1, Z2,
                         cup_product(c, coboundary(cprime, K), n, K).terms))
        assert lhs == rhs, (K.maximal, p, q, n)
        instances += 1
    _report(4, f"coboundary formula on {instances} random instances", started, 60.0)


def test_criterion_5_cocycle_preservation():
    started = time.perf_counter()
    rng = random.Random(1205)
    cocycles = 0
    while cocycles < 100:
        K = random_complex(rng, n_vertices=7)
        j = rng.randint(1, 3)
        c = random_cocycle(rng, K, j)
        if c is None or c.is_zero():
            continue
        for i in range(1, j + 1):
            out = Cochain(i + j, Z2, sq(i, c, K).terms)
            assert is_cocycle(out, K), (K.maximal, j, i)
        cocycles += 1
    _report(5, f"squares of {cocycles} random cocycles are cocycles", started, 30.0)


def test_criterion_6_topological_sanity():
    started = time.perf_counter()
    gen = nontrivial_cocycle(RP2, 1)
    assert gen is not None and is_cocycle(gen, RP2)
    square = Cochain(2, Z2, sq(1, gen, RP2).terms)
    assert is_cocycle(square, RP2)
    assert not is_coboundary_mod2(square, RP2)

    c = coboundary(Cochain(0, Z2, {(0,): 1}), TETRA_BOUNDARY)
    assert is_cocycle(c, TETRA_BOUNDARY)
    sphere_square = Cochain(2, Z2, sq(1, c, TETRA_BOUNDARY).terms)
    assert is_coboundary_mod2(sphere_square, TETRA_BOUNDARY)
    _report(6, "projective-plane square nontrivial, sphere square trivial",
            started, 5.0)


def test_criterion_7_cup1_specialization():
    started = time.perf_counter()
    rng = random.Random(1207)
    for p, q in product(range(1, 5), range(1, 5)):
        m = p + q - 1
        K = SimplicialComplex([tuple(range(m + 1))])
        x = tuple(range(m + 1))
        for ring in (Z, Ring(7)):
            for _ in range(5):
                c = random_cochain(rng, K, p, ring, density=0.7)
                cprime = random_cochain(rng, K, q, ring, density=0.7)
                summands = sorted(bounded_summands(p, q, 1, x),
                                  key=lambda s: s.index_tuple.indices)
                assert len(summands) == p
                total = 0
                for j, s in enumerate(summands):
                    front = x[:j + 1] + x[j + q:]
                    middle = x[j:j + q + 1]
                    sign = (-1) ** ((j + (p - 1 + j) * q) % 2)
                    assert s.index_tuple == IndexTuple((j, j + q), m)
                    assert s.plus_face == front
                    assert s.minus_face == middle
                    assert s.sign == sign
                    total += sign * c.evaluate(front) * cprime.evaluate(middle)
                assert ring.normalize(total) == cup_eval_bounded(c, cprime, x, 1)
    _report(7, "level-1 product reproduces the front/middle expansion",
            started, 10.0)


def test_criterion_8_word_combinatorics():
    started = time.perf_counter()
    assert word_of(IndexTuple((2, 5), 6)) == "1101101"
    assert split("1101101") == ("110", "1101")
    assert word_of(IndexTuple((0, 1, 4), 4)) == "00110"
    assert split("00110") == ("0", "0110")
    assert merge("111101011", "011100") == IndexTuple((0, 5, 9, 11, 12), 14)
    words = 0
    for length in range(1, 13):
        for bits in range(1 << length):
            w = format(bits, f"0{length}b")
            if "0" not in w:
                continue
            plus, minus = split(w)
            assert word_of(merge(plus, minus)) == w
            words += 1
    _report(8, f"split/merge identity on all {words} words up to length 12",
            started, 5.0)


def test_criterion_9_thread_determinism(tmp_path):
    started = time.perf_counter()
    rng = random.Random(1209)

    def run(args):
        proc = subprocess.run([sys.executable, "-m", "cupsq", *map(str, args)],
                              capture_output=True, text=True, timeout=120)
        assert proc.returncode == 0, proc.stderr
        return proc.stdout

    corpus = []
    for case in range(4):
        K = random_complex(rng, n_vertices=6)
        p, q = rng.randint(1, 2), rng.randint(1, 2)
        n = rng.randint(0, min(p, q))
        c = random_cochain(rng, K, p, Z2, density=0.8)
        cprime = random_cochain(rng, K, q, Z2, density=0.8)
        kp = tmp_path / f"complex{case}.json"
        kp.write_text(json.dumps(
            {"maximal_simplices": [list(s) for s in K.maximal]}))
        cp = tmp_path / f"c{case}.json"
        cp.write_text(json.dumps(
            {"degree": p, "ring": "Zmod", "modulus": 2,
             "support": [{"simplex": list(s), "coeff": v}
                         for s, v in c.items()]}))
        cpp = tmp_path / f"cprime{case}.json"
        cpp.write_text(json.dumps(
            {"degree": q, "ring": "Zmod", "modulus": 2,
             "support": [{"simplex": list(s), "coeff": v}
                         for s, v in cprime.items()]}))
        corpus.append(("cup", kp, cp, cpp, n))
    for command, *args in corpus:
        outputs = {run([command, *args, "--threads", t]) for t in (1, 2, 8)}
        assert len(outputs) == 1, command
    sq_args = ["sq", DATA_DIR / "rp2_complex.json",
               DATA_DIR / "rp2_cocycle_z2.json", 1]
    outputs = {run([*sq_args, "--threads", t]) for t in (1, 2, 8)}
    assert len(outputs) == 1
    _report(9, "byte-identical output for --threads 1, 2, 8", started, 120.0)
