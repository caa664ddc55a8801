"""Dense complex linear algebra on qubit registers.

All matrices are plain numpy arrays with row-major entries; qubit 0 is the
most significant bit of the row/column index (see `qcorr.states`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NotHermitianError, SizeCapError
from .states import PureState

#: Kronecker products refuse to allocate beyond this many matrix entries.
MAX_KRON_ENTRIES = 1 << 24


@dataclass(frozen=True)
class EigenSpectrum:
    """Real eigenvalues of a Hermitian matrix, ascending, plus a residual.

    `residual` is the Frobenius norm of the off-diagonal part of V^dagger M V
    after diagonalization; it certifies the quality of the spectrum.
    """

    values: np.ndarray
    residual: float


def _as_square(m: np.ndarray) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def kron(a: np.ndarray, b: np.ndarray, *, max_entries: int = MAX_KRON_ENTRIES) -> np.ndarray:
    """Kronecker product of two square matrices.

    Entry ((i*db + k), (j*db + l)) of the result is a[i, j] * b[k, l].
    """
    a = _as_square(a)
    b = _as_square(b)
    out_dim = a.shape[0] * b.shape[0]
    if out_dim * out_dim > max_entries:
        raise SizeCapError(
            f"kron result would have {out_dim}^2 entries, above the cap of "
            f"{max_entries}"
        )
    return np.kron(a, b)


def hermitian_eigenvalues(m: np.ndarray, tol: float = 1e-10) -> EigenSpectrum:
    """Eigenvalues of a Hermitian matrix, sorted ascending.

    The input must be Hermitian within `tol` (max-entry distance to its
    conjugate transpose); it is symmetrized as (m + m^dagger)/2 before
    diagonalization to absorb accumulated rounding.
    """
    a = _as_square(m)
    defect = float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0
    if defect > tol:
        raise NotHermitianError(
            f"max |m - m^dagger| entry is {defect:.3e}, above tol={tol}"
        )
    sym = (a + a.conj().T) / 2.0
    values, vectors = np.linalg.eigh(sym)
    diag = vectors.conj().T @ sym @ vectors
    np.fill_diagonal(diag, 0.0)
    residual = float(np.linalg.norm(diag))
    return EigenSpectrum(values=values, residual=residual)


def partial_trace(m: np.ndarray, n_qubits: int, keep: Iterable[int]) -> np.ndarray:
    """Trace out every qubit not in `keep`.

    The result's qubit order follows `keep` as given. Tracing out everything
    (keep empty) yields the 1x1 matrix [[trace]].
    """
    a = _as_square(m)
    dim = 1 << n_qubits
    if a.shape != (dim, dim):
        raise ValueError(
            f"matrix shape {a.shape} does not match {n_qubits} qubits (dim {dim})"
        )
    kept = tuple(int(q) for q in keep)
    seen = set()
    for q in kept:
        if q < 0 or q >= n_qubits:
            raise IndexError(f"keep index {q} out of range for {n_qubits} qubits")
        if q in seen:
            raise IndexError(f"keep index {q} repeated")
        seen.add(q)
    traced = [q for q in range(n_qubits) if q not in seen]
    dk = 1 << len(kept)
    dt = 1 << len(traced)
    t = a.reshape((2,) * (2 * n_qubits))
    axes = [*kept, *traced, *(n_qubits + q for q in kept), *(n_qubits + q for q in traced)]
    t = t.transpose(axes).reshape(dk, dt, dk, dt)
    return np.einsum("ijkj->ik", t)


def permute_qubits(state: PureState, perm: Sequence[int]) -> PureState:
    """Move the qubit at index i to index perm[i].

    The amplitude at label b therefore equals the input amplitude at the
    label whose bit i is b's bit perm[i]. Pure data movement; the norm is
    preserved exactly.
    """
    n = state.n_qubits
    p = [int(x) for x in perm]
    if sorted(p) != list(range(n)):
        raise ValueError(f"perm must be a permutation of 0..{n - 1}, got {perm!r}")
    inverse = [0] * n
    for i, dest in enumerate(p):
        inverse[dest] = i
    amps = state.amplitudes.reshape((2,) * n).transpose(inverse).reshape(-1)
    return PureState(n, amps.copy())


def permute_matrix_qubits(m: np.ndarray, n_qubits: int, perm: Sequence[int]) -> np.ndarray:
    """Conjugate a 2**n x 2**n matrix by the qubit relabeling i -> perm[i]."""
    a = _as_square(m)
    dim = 1 << n_qubits
    if a.shape != (dim, dim):
        raise ValueError(
            f"matrix shape {a.shape} does not match {n_qubits} qubits (dim {dim})"
        )
    p = [int(x) for x in perm]
    if sorted(p) != list(range(n_qubits)):
        raise ValueError(f"perm must be a permutation of 0..{n_qubits - 1}, got {perm!r}")
    inverse = [0] * n_qubits
    for i, dest in enumerate(p):
        inverse[dest] = i
    axes = inverse + [n_qubits + q for q in inverse]
    return a.reshape((2,) * (2 * n_qubits)).transpose(axes).reshape(dim, dim)
