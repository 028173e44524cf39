import random

import pytest
from hypothesis import settings

from tetlab.equivalence import is_clean_params
from tetlab.lattice import IDENTITY3, UnimodularMap, matmul3

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def random_unimodular(rng: random.Random, steps: int = 4, mag: int = 2, shift: int = 5) -> UnimodularMap:
    """Product of random elementary shears, a coordinate permutation and sign flips."""
    m = IDENTITY3
    for _ in range(steps):
        i, j = rng.sample(range(3), 2)
        e = [list(r) for r in IDENTITY3]
        e[i][j] = rng.randint(-mag, mag)
        m = matmul3(tuple(map(tuple, e)), m)
    perm = rng.sample(range(3), 3)
    signs = [rng.choice((-1, 1)) for _ in range(3)]
    p = tuple(tuple(signs[i] if k == perm[i] else 0 for k in range(3)) for i in range(3))
    m = matmul3(p, m)
    t = tuple(rng.randint(-shift, shift) for _ in range(3))
    return UnimodularMap(m, t)


def clean_tets(n_lo: int, n_hi: int):
    for n in range(n_lo, n_hi + 1):
        for a in range(n):
            for b in range(n):
                if is_clean_params(a, b, n):
                    yield a, b, n


@pytest.fixture
def rng():
    return random.Random(20240607)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for cid in sorted(mod.RESULTS, key=int):
        parts = mod.RESULTS[cid]
        ok = all(p for _, p in parts)
        tr.write_line(f"criterion {cid:>2}: {'PASS' if ok else 'FAIL'}")
        for name, p in parts:
            if not p:
                tr.write_line(f"    failed part: {name}")
