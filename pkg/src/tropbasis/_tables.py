"""Vectorised whole-power-set tables (numpy), indexed by subset mask."""

from concurrent.futures import ThreadPoolExecutor

import numpy as np

CHUNK = 1 << 18


def upward_closure(flags: np.ndarray, n: int) -> np.ndarray:
    """``out[X]`` is true iff ``flags[Y]`` for some ``Y`` contained in ``X``."""
    out = flags.copy()
    for j in range(n):
        v = out.reshape(-1, 2, 1 << j)
        v[:, 1, :] |= v[:, 0, :]
    return out


def dependent_table(n: int, circuits) -> np.ndarray:
    flags = np.zeros(1 << n, dtype=bool)
    if circuits:
        flags[np.fromiter(circuits, dtype=np.int64)] = True
    return upward_closure(flags, n)


def rank_table(n: int, circuits) -> np.ndarray:
    """Rank of every subset.

    Adding the top element ``j`` of ``X`` raises the rank unless some circuit
    with maximum element ``j`` has all its other elements in ``X``.
    """
    by_top = [[] for _ in range(n)]
    for c in circuits:
        by_top[c.bit_length() - 1].append(c ^ (1 << (c.bit_length() - 1)))
    R = np.zeros(1 << n, dtype=np.int8)
    for j in range(n):
        lo = R[: 1 << j]
        if by_top[j]:
            Y = np.arange(1 << j, dtype=np.int64)
            spans = np.zeros(1 << j, dtype=bool)
            for rest in by_top[j]:
                spans |= (Y & rest) == rest
            R[1 << j: 1 << (j + 1)] = lo + (~spans)
        else:
            R[1 << j: 1 << (j + 1)] = lo + 1
    return R


def _singleton(d: np.ndarray) -> np.ndarray:
    return (d != 0) & ((d & (d - 1)) == 0)


def chunks(n: int, size: int = CHUNK):
    total = 1 << n
    for start in range(0, total, size):
        yield start, min(total, start + size)


def map_chunks(fn, n: int, threads: int = 1):
    """Apply ``fn(start, stop)`` over the power set in order."""
    parts = list(chunks(n))
    if threads > 1 and len(parts) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda se: fn(*se), parts))
    return [fn(s, e) for s, e in parts]


def nonclosed_table(n: int, circuits, threads: int = 1) -> np.ndarray:
    """``out[X]`` is true iff some circuit has exactly one element outside X."""
    def work(start, stop):
        X = np.arange(start, stop, dtype=np.int64)
        res = np.zeros(stop - start, dtype=bool)
        for c in circuits:
            res |= _singleton(c & ~X)
        return res
    return np.concatenate(map_chunks(work, n, threads))


def orthogonal_table(n: int, family, threads: int = 1) -> np.ndarray:
    """``out[A]`` is true iff no member of ``family`` meets ``A`` in one element."""
    def work(start, stop):
        A = np.arange(start, stop, dtype=np.int64)
        res = np.ones(stop - start, dtype=bool)
        for d in family:
            res &= ~_singleton(A & d)
        return res
    return np.concatenate(map_chunks(work, n, threads))


def minimal_members(flags: np.ndarray, n: int) -> np.ndarray:
    """Masks ``A`` with ``flags[A]`` and no flagged proper subset."""
    below = upward_closure(flags, n)
    strict = np.zeros_like(flags)
    idx = np.arange(1 << n, dtype=np.int64)
    for j in range(n):
        has = (idx >> j) & 1 == 1
        strict[has] |= below[idx[has] ^ (1 << j)]
    return np.nonzero(flags & ~strict)[0]
