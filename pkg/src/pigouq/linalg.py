"""Dense complex linear algebra for two-qubit protocol states.

Everything operates on plain numpy ``complex128`` arrays under a fixed
convention: 2x2 matrices act on one qubit, 4x4 matrices on the joint
pair, and length-4 state vectors hold amplitudes over the computational
basis ordered |00>, |01>, |10>, |11> with the row player's qubit first.
The protocol never needs anything larger, so there is no general-
dimension matrix type. Exact rational arithmetic is introduced
downstream, where matrix entries are rational; here everything is
double precision.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError

__all__ = [
    "IDENTITY2",
    "IDENTITY4",
    "KET_00",
    "apply",
    "as_square_matrix",
    "dagger",
    "is_unitary",
    "tensor_product",
]


def as_square_matrix(m, dim: int | None = None) -> np.ndarray:
    """Coerce ``m`` to a square complex array, optionally of a fixed size.

    Raises
    ------
    DomainError
        If the input is not square, has a disallowed size, or contains
        non-finite entries.
    """
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {arr.shape}")
    if dim is not None and arr.shape[0] != dim:
        raise DomainError(f"expected a {dim}x{dim} matrix, got {arr.shape[0]}x{arr.shape[1]}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise DomainError("matrix entries must be finite")
    return arr


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product of two single-qubit operators.

    Entry ``(2i+k, 2j+l)`` of the result is ``a[i, j] * b[k, l]``; the
    first factor acts on the row player's qubit.
    """
    a = as_square_matrix(a, dim=2)
    b = as_square_matrix(b, dim=2)
    return np.kron(a, b)


def apply(m, v) -> np.ndarray:
    """Matrix-vector product ``m @ v`` with shape and finiteness checks."""
    m = as_square_matrix(m)
    vec = np.asarray(v, dtype=complex)
    if vec.shape != (m.shape[0],):
        raise DomainError(f"state length {vec.shape} does not match matrix size {m.shape[0]}")
    if not np.all(np.isfinite(vec.real)) or not np.all(np.isfinite(vec.imag)):
        raise DomainError("state amplitudes must be finite")
    return m @ vec


def dagger(m) -> np.ndarray:
    """Conjugate transpose."""
    return as_square_matrix(m).conj().T


def is_unitary(m, tol: float) -> bool:
    """Whether ``m @ dagger(m)`` deviates from the identity by at most
    ``tol`` entry-wise."""
    m = as_square_matrix(m)
    delta = m @ m.conj().T - np.eye(m.shape[0])
    return bool(np.max(np.abs(delta)) <= tol)


IDENTITY2 = np.eye(2, dtype=complex)
IDENTITY4 = np.eye(4, dtype=complex)

#: Initial joint state |00>.
KET_00 = np.array([1, 0, 0, 0], dtype=complex)

IDENTITY2.setflags(write=False)
IDENTITY4.setflags(write=False)
KET_00.setflags(write=False)
