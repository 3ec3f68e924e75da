import itertools
from functools import lru_cache

import numpy as np
import pytest

from tropbasis import catalog as cat
from tropbasis.explore import random_simple_gf
from tropbasis.tropical import enumerate_minimal_tropical_bases


def span_rank(columns, p):
    """GF(p) rank by counting the span: |span| = p ** rank."""
    columns = [tuple(int(x) % p for x in col) for col in columns]
    if not columns:
        return 0
    dim = len(columns[0])
    span = set()
    for coeffs in itertools.product(range(p), repeat=len(columns)):
        span.add(tuple(sum(a * col[k] for a, col in zip(coeffs, columns)) % p
                       for k in range(dim)))
    rank = 0
    while p ** rank < len(span):
        rank += 1
    return rank


def graph_rank(vertices, edges, mask):
    """Edges in a spanning forest of the chosen edges (union-find)."""
    parent = list(range(vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    r = 0
    for i, (u, v) in enumerate(edges):
        if mask >> i & 1:
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
                r += 1
    return r


K4_EDGES = list(itertools.combinations(range(4), 2))


@lru_cache(maxsize=None)
def suite():
    """Named simple test matroids, all with n <= 9 and few minimal bases."""
    ms = {
        "U23": cat.uniform(2, 3),
        "U24": cat.uniform(2, 4),
        "U25": cat.uniform(2, 5),
        "U26": cat.uniform(2, 6),
        "U34": cat.uniform(3, 4),
        "U35": cat.uniform(3, 5),
        "U36": cat.uniform(3, 6),
        "U46": cat.uniform(4, 6),
        "free3": cat.uniform(3, 3),
        "fano": cat.fano(),
        "fano*": cat.fano().dual(),
        "nonfano": cat.nonfano(),
        "nonfano*": cat.nonfano().dual(),
        "dld3": cat.doubled_line_dual(3),
        "dld4": cat.doubled_line_dual(4),
        "K4": cat.graphic(4, K4_EDGES),
    }
    rng = np.random.default_rng(7)
    for i in range(6):
        M, _ = random_simple_gf(3, int(rng.integers(5, 9)), rng)
        ms[f"gf3#{i}"] = M
    rng = np.random.default_rng(11)
    for i in range(4):
        M, _ = random_simple_gf(2, int(rng.integers(4, 9)), rng)
        ms[f"gf2#{i}"] = M
    return ms


@lru_cache(maxsize=None)
def bases_of(name):
    return enumerate_minimal_tropical_bases(suite()[name]).bases


SUITE_NAMES = sorted(suite())


@pytest.fixture(params=SUITE_NAMES)
def named_matroid(request):
    return request.param, suite()[request.param]
