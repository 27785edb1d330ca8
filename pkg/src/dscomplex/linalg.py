"""Exact integer and rational linear algebra.

Everything here is exact.  The modular routine only *proposes* an integer
inverse; callers accept it after checking ``A @ B == I`` over the integers.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from math import gcd

import numpy as np

Matrix = list[list[int]]

# largest prime below 2**31; products of two residues fit in int64
_PRIME = 2147483647


class SingularMatrixError(ArithmeticError):
    pass


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


def sparse_rank(rows: Sequence[dict[int, int]]) -> int:
    """Rank over the rationals of a matrix given as sparse integer rows.

    Fraction-free echelon build-up: each incoming row is reduced against the
    pivot rows by integer cross-multiplication and kept primitive.
    """
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        r = {c: v for c, v in raw.items() if v}
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                pivots[c] = _primitive(r)
                break
            a, b = r[c], p[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: v * b for k, v in r.items()}
            for k, v in p.items():
                w = new.get(k, 0) - a * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            r = _primitive(new) if new else new
    return len(pivots)


def rank(M: Sequence[Sequence[int]]) -> int:
    return sparse_rank([{j: v for j, v in enumerate(row) if v} for row in M])


def det_bareiss(M: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by Bareiss fraction-free elimination."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        rowk = A[k]
        for i in range(k + 1, n):
            rowi = A[i]
            aik = rowi[k]
            if aik == 0:
                if akk != prev:
                    for j in range(k + 1, n):
                        rowi[j] = rowi[j] * akk // prev
            else:
                for j in range(k + 1, n):
                    rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


def inverse_fraction(M: Sequence[Sequence[int | Fraction]]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(M)
    A = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        A[k], A[piv] = A[piv], A[k]
        inv = 1 / A[k][k]
        A[k] = [v * inv for v in A[k]]
        rowk = A[k]
        for i in range(n):
            if i != k and A[i][k] != 0:
                f = A[i][k]
                A[i] = [a - f * b for a, b in zip(A[i], rowk)]
    return [row[n:] for row in A]


def _modular_inverse_and_det(M: np.ndarray, p: int = _PRIME) -> tuple[np.ndarray, int]:
    n = M.shape[0]
    A = np.concatenate([M % p, np.eye(n, dtype=np.int64)], axis=1).astype(np.int64)
    det = 1
    for k in range(n):
        nz = np.nonzero(A[k:, k])[0]
        if nz.size == 0:
            raise SingularMatrixError("matrix is singular modulo p")
        piv = k + int(nz[0])
        if piv != k:
            A[[k, piv]] = A[[piv, k]]
            det = -det
        akk = int(A[k, k])
        det = det * akk % p
        A[k] = A[k] * pow(akk, p - 2, p) % p
        f = A[:, k].copy()
        f[k] = 0
        rows = np.nonzero(f)[0]
        if rows.size:
            A[rows] = (A[rows] - np.outer(f[rows], A[k]) % p) % p
    inv = A[:, n:]
    return inv, det % p


def _symmetric(x: np.ndarray, p: int = _PRIME) -> np.ndarray:
    return np.where(x > p // 2, x - p, x)


def integer_matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> list[list[int]]:
    """Exact product.

    int64 is used when n * max|A| * max|B| stays below 2**62, which rules
    out overflow; otherwise Python integers.
    """
    a = np.array(A, dtype=object)
    b = np.array(B, dtype=object)
    if a.size and b.size:
        ma = max(abs(int(v)) for v in a.flat)
        mb = max(abs(int(v)) for v in b.flat)
        if ma * mb * a.shape[1] < 2**62:
            return (a.astype(np.int64) @ b.astype(np.int64)).tolist()
    return (a.dot(b)).tolist()


def is_identity(M: Sequence[Sequence[int]]) -> bool:
    return all(v == (i == j) for i, row in enumerate(M) for j, v in enumerate(row))


def integer_inverse(M: Sequence[Sequence[int]]) -> list[list[int]] | None:
    """Inverse of an integer matrix if it is unimodular, else ``None``.

    A candidate is computed modulo a prime and lifted to the symmetric range;
    it is returned only when ``M @ B`` equals the identity exactly.
    """
    A = np.array(M, dtype=np.int64)
    if A.size == 0:
        return []
    try:
        inv, _ = _modular_inverse_and_det(A)
    except SingularMatrixError:
        return None
    B = _symmetric(inv).tolist()
    if is_identity(integer_matmul(M, B)):
        return B
    return None


def unimodular_det(M: Sequence[Sequence[int]]) -> int | None:
    """Exact determinant when M is unimodular, else ``None``.

    An exact integer inverse certifies det(M) * det(M^-1) = 1, so the
    determinant is +1 or -1; the sign is read off modulo an odd prime.
    """
    A = np.array(M, dtype=np.int64)
    if A.size == 0:
        return 1
    try:
        inv, d = _modular_inverse_and_det(A)
    except SingularMatrixError:
        return None
    if not is_identity(integer_matmul(M, _symmetric(inv).tolist())):
        return None
    return 1 if d == 1 else -1


def det(M: Sequence[Sequence[int]], dense_limit: int = 150) -> int:
    """Exact integer determinant.

    Bareiss below ``dense_limit``; above it the certified unimodular route
    is tried first and Bareiss is the fallback.
    """
    if len(M) > dense_limit:
        d = unimodular_det(M)
        if d is not None:
            return d
    return det_bareiss(M)


def solve_rational(A: Sequence[Sequence[int | Fraction]], b: Sequence[int | Fraction]) -> list[Fraction] | None:
    """One exact solution of A x = b (A is m x n), or ``None`` if inconsistent."""
    m = len(A)
    n = len(A[0]) if m else 0
    R = [[Fraction(v) for v in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    pivcols = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if R[i][c] != 0), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = 1 / R[r][c]
        R[r] = [v * inv for v in R[r]]
        for i in range(m):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * bb for a, bb in zip(R[i], R[r])]
        pivcols.append(c)
        r += 1
        if r == m:
            break
    if any(all(v == 0 for v in row[:n]) and row[n] != 0 for row in R):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivcols):
        x[c] = R[i][n]
    return x
