"""N-qubit pure states and density operators, plus the named constructors.

Basis convention: in a ket label |q0 q1 ... q(N-1)> the leftmost symbol is
qubit 0 and the most significant bit of the amplitude index, so |0110> on
4 qubits sits at index 0b0110 = 6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    NotHermitianError,
    NotNormalizedError,
    NotPositiveError,
    SizeCapError,
    TraceError,
)

#: Default dense-size cap; 12 qubits means 4096-dimensional matrices.
DEFAULT_MAX_QUBITS = 12

#: Tolerances for the state/operator invariants.
NORM_TOL = 1e-10
HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
POSITIVITY_TOL = 1e-10

_SQRT_HALF = math.sqrt(0.5)


@dataclass(frozen=True)
class PureState:
    """Normalized amplitude vector over the 2**n_qubits computational kets."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError(f"n_qubits must be >= 1, got {self.n_qubits}")
        amps = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        dim = 1 << self.n_qubits
        if amps.shape != (dim,):
            raise ValueError(
                f"amplitude vector must have length {dim}, got shape {amps.shape}"
            )
        if not np.all(np.isfinite(amps.view(np.float64))):
            raise ValueError("amplitudes must be finite")
        nrm2 = float(np.vdot(amps, amps).real)
        if abs(nrm2 - 1.0) > NORM_TOL:
            raise NotNormalizedError(
                f"squared norm is {nrm2!r}, outside 1 +/- {NORM_TOL}"
            )
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits


@dataclass(frozen=True)
class DensityOperator:
    """Hermitian, unit-trace matrix on 2**n_qubits dimensions.

    Construction checks Hermiticity and trace (cheap, entrywise); positivity
    of the spectrum is only verified by `validate_density`, which is the
    entry point for untrusted matrices.
    """

    n_qubits: int
    matrix: np.ndarray

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError(f"n_qubits must be >= 1, got {self.n_qubits}")
        m = np.ascontiguousarray(self.matrix, dtype=np.complex128)
        dim = 1 << self.n_qubits
        if m.shape != (dim, dim):
            raise ValueError(f"matrix must be {dim}x{dim}, got shape {m.shape}")
        if not np.all(np.isfinite(m.view(np.float64))):
            raise ValueError("matrix entries must be finite")
        herm_defect = float(np.max(np.abs(m - m.conj().T)))
        if herm_defect > HERMITICITY_TOL:
            raise NotHermitianError(
                f"max |m - m^dagger| entry is {herm_defect:.3e}, "
                f"above {HERMITICITY_TOL}"
            )
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise TraceError(f"trace is {tr!r}, outside 1 +/- {TRACE_TOL}")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits


def _check_cap(n_qubits: int, max_qubits: int | None) -> None:
    cap = DEFAULT_MAX_QUBITS if max_qubits is None else max_qubits
    if n_qubits > cap:
        raise SizeCapError(
            f"{n_qubits} qubits exceeds the size cap of {cap} "
            f"(dense dimension {1 << n_qubits})"
        )


def ghz(n: int, *, max_qubits: int | None = None) -> PureState:
    """(|0...0> + |1...1>)/sqrt(2) on n >= 2 qubits."""
    if n < 2:
        raise ValueError(f"ghz needs at least 2 qubits, got {n}")
    _check_cap(n, max_qubits)
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = _SQRT_HALF
    amps[-1] = _SQRT_HALF
    return PureState(n, amps)


def uniform_entangled(n_per_side: int, *, max_qubits: int | None = None) -> PureState:
    """2**(-n/2) * sum_s |s,s> over all n-bit strings s, on 2n qubits.

    The left half of each label (qubits 0..n-1) always equals the right half.
    """
    if n_per_side < 1:
        raise ValueError(f"n_per_side must be >= 1, got {n_per_side}")
    _check_cap(2 * n_per_side, max_qubits)
    half = 1 << n_per_side
    amps = np.zeros(half * half, dtype=np.complex128)
    amp = math.sqrt(1.0 / half)
    for s in range(half):
        amps[s * half + s] = amp
    return PureState(2 * n_per_side, amps)


def bell_product(pairs: int, *, max_qubits: int | None = None) -> PureState:
    """Tensor product of `pairs` Bell pairs; pair i lives on qubits (2i, 2i+1)."""
    if pairs < 1:
        raise ValueError(f"pairs must be >= 1, got {pairs}")
    _check_cap(2 * pairs, max_qubits)
    bell = ghz(2, max_qubits=2).amplitudes
    amps = bell
    for _ in range(pairs - 1):
        amps = np.kron(amps, bell)
    return PureState(2 * pairs, amps)


def ghz_block_product(n_per_block: int, *, max_qubits: int | None = None) -> PureState:
    """Two independent n-qubit GHZ blocks; block alpha is qubits 0..n-1."""
    if n_per_block < 2:
        raise ValueError(f"n_per_block must be >= 2, got {n_per_block}")
    _check_cap(2 * n_per_block, max_qubits)
    block = ghz(n_per_block, max_qubits=n_per_block).amplitudes
    return PureState(2 * n_per_block, np.kron(block, block))


def to_density(s: PureState) -> DensityOperator:
    """Rank-1 density operator |s><s|."""
    return DensityOperator(s.n_qubits, np.outer(s.amplitudes, s.amplitudes.conj()))


def validate_density(m: np.ndarray, n_qubits: int) -> DensityOperator:
    """Wrap an untrusted matrix, checking all density-operator invariants.

    Raises NotHermitianError, TraceError, or NotPositiveError naming the
    violated invariant. Eigenvalues in [-POSITIVITY_TOL, 0) are tolerated;
    entropy routines clamp them to zero downstream.
    """
    op = DensityOperator(n_qubits, m)
    sym = (op.matrix + op.matrix.conj().T) / 2.0
    min_eig = float(np.linalg.eigvalsh(sym)[0])
    if min_eig < -POSITIVITY_TOL:
        raise NotPositiveError(
            f"minimum eigenvalue is {min_eig:.3e}, below -{POSITIVITY_TOL}"
        )
    return op
