"""Dense complex linear algebra: Kronecker products, factor embeddings,
permutation operators and the residual norm used by every checker.

All matrices are numpy complex128 arrays in row-major layout.  Everything
here is a pure function; nothing mutates its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Guard against accidental construction of absurdly large tensor products;
# the largest legitimate carrier is the sl(15) triple product, 3375 x 3375.
MAX_DIM = 4000


class DimensionError(ValueError):
    """Raised on shape mismatches or oversized tensor products."""


class SingularMatrixError(ValueError):
    """Raised when a pivot falls below tolerance during LU inversion."""


@dataclass(frozen=True)
class Residual:
    """Max-abs-relative distance between two equal-shaped matrices."""

    value: float
    norm_kind: str = "max-abs-relative"

    def __float__(self) -> float:
        return self.value


def as_matrix(entries) -> np.ndarray:
    """Coerce to a 2-d complex array and validate finiteness."""
    m = np.asarray(entries, dtype=complex)
    if m.ndim != 2:
        raise DimensionError(f"expected a 2-d array, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("matrix contains non-finite entries")
    return m


def kron(a, b) -> np.ndarray:
    """Kronecker product a (x) b with block (i,j) equal to a[i,j]*b."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape[0] * b.shape[0] > MAX_DIM or a.shape[1] * b.shape[1] > MAX_DIM:
        raise DimensionError(
            f"tensor product of shapes {a.shape} and {b.shape} exceeds MAX_DIM={MAX_DIM}"
        )
    return np.kron(a, b)


def permutation_op(d: int) -> np.ndarray:
    """The flip operator P on C^d (x) C^d: P(x (x) y) = y (x) x."""
    if d < 2:
        raise DimensionError("permutation operator needs local dimension >= 2")
    P = np.zeros((d * d, d * d), dtype=complex)
    for a in range(d):
        for b in range(d):
            P[a * d + b, b * d + a] = 1.0
    return P


def _adjacent_embed(m: np.ndarray, i: int, n: int, d: int) -> np.ndarray:
    """Place a d^2 x d^2 matrix on adjacent factors (i, i+1) of n factors."""
    left = np.eye(d ** (i - 1), dtype=complex)
    right = np.eye(d ** (n - i - 1), dtype=complex)
    return kron(kron(left, m), right)


def embed_factor(m, i: int, j: int, n: int, d: int) -> np.ndarray:
    """Embed a two-site operator onto factors (i, j) of an n-fold product.

    Indices are 1-based with i < j.  Non-adjacent placements are built by
    conjugating with chains of adjacent transpositions, so the result acts
    as `m` on factors i and j and as the identity elsewhere.
    """
    m = as_matrix(m)
    if not (1 <= i < j <= n):
        raise DimensionError(f"need 1 <= i < j <= n, got i={i} j={j} n={n}")
    if m.shape != (d * d, d * d):
        raise DimensionError(f"operator shape {m.shape} does not match local dimension {d}")
    if d ** n > MAX_DIM:
        raise DimensionError(f"embedding dimension d^n = {d ** n} exceeds MAX_DIM={MAX_DIM}")
    # Move factor j leftwards to position i+1 with adjacent swaps.
    swap = permutation_op(d)
    chain = np.eye(d ** n, dtype=complex)
    for k in range(j - 1, i + 1 - 1, -1):
        chain = _adjacent_embed(swap, k, n, d) @ chain
    core = _adjacent_embed(m, i, n, d)
    # chain is a real permutation matrix, so its inverse is its transpose
    return chain.T @ core @ chain


def max_rel_residual(a, b) -> Residual:
    """max |a_ij - b_ij| / (1 + max(|a_ij|, |b_ij|)) over all entries."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {b.shape}")
    diff = np.abs(a - b)
    den = 1.0 + np.maximum(np.abs(a), np.abs(b))
    return Residual(float(np.max(diff / den)))


def lu_inv(m, pivot_tol: float = 1e-12) -> np.ndarray:
    """Invert a small matrix by LU with partial pivoting.

    A pivot smaller than pivot_tol relative to the largest entry raises
    SingularMatrixError instead of silently producing garbage.
    """
    a = as_matrix(m).copy()
    n = a.shape[0]
    if a.shape[1] != n:
        raise DimensionError("matrix must be square")
    scale = np.max(np.abs(a))
    if scale == 0.0:
        raise SingularMatrixError("zero matrix")
    inv = np.eye(n, dtype=complex)
    for col in range(n):
        p = col + int(np.argmax(np.abs(a[col:, col])))
        if np.abs(a[p, col]) < pivot_tol * scale:
            raise SingularMatrixError(f"pivot {np.abs(a[p, col]):.3e} below tolerance")
        if p != col:
            a[[col, p]] = a[[p, col]]
            inv[[col, p]] = inv[[p, col]]
        piv = a[col, col]
        a[col] /= piv
        inv[col] /= piv
        for r in range(n):
            if r != col and a[r, col] != 0.0:
                f = a[r, col]
                a[r] -= f * a[col]
                inv[r] -= f * inv[col]
    return inv
