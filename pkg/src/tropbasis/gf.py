"""Gaussian elimination over prime fields GF(p)."""

import numpy as np

from .errors import InvalidInput, NonPrimeModulus


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def as_gf_matrix(rows, p: int) -> np.ndarray:
    """Validate ``rows`` as a matrix over GF(p) and return an int64 array."""
    if not is_prime(p):
        raise NonPrimeModulus(f"modulus {p} is not prime")
    A = np.array(rows, dtype=np.int64)
    if A.ndim == 1 and A.size == 0:
        A = A.reshape(0, 0)
    if A.ndim != 2:
        raise InvalidInput("matrix must be two-dimensional")
    if A.size and (A.min() < 0 or A.max() >= p):
        raise InvalidInput(f"matrix entries must lie in 0..{p - 1}")
    return A


def gf_row_reduce(A, p: int):
    """Row-reduce ``A`` over GF(p).

    Returns ``(R, pivots)`` where ``R`` is the reduced row echelon form and
    ``pivots`` the list of pivot column indices.
    """
    R = np.array(A, dtype=np.int64) % p
    m, ncols = R.shape
    pivots = []
    row = 0
    for col in range(ncols):
        if row == m:
            break
        nz = np.nonzero(R[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + nz[0]
        if piv != row:
            R[[row, piv]] = R[[piv, row]]
        R[row] = (R[row] * pow(int(R[row, col]), -1, p)) % p
        others = np.nonzero(R[:, col])[0]
        for r in others:
            if r != row:
                R[r] = (R[r] - R[r, col] * R[row]) % p
        pivots.append(col)
        row += 1
    return R, pivots


def gf_rank(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(gf_row_reduce(A, p)[1])
