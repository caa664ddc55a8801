"""Entropy and correlation functionals.

All entropies are in nats (natural log). The total correlation of an
N-qubit state is the sum of its single-qubit entropies minus the total
entropy; the index of correlation across a bipartition is
S(rho_alpha) + S(rho_beta) - S(rho).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, NamedTuple, Sequence

import numpy as np

from .errors import PartitionError
from .linalg import partial_trace
from .states import DensityOperator

if TYPE_CHECKING:
    from .partitions import Partition

LN2 = math.log(2.0)

#: Spectrum entries at or below this floor contribute nothing to entropy.
ENTROPY_EIG_FLOOR = 1e-15

#: Tolerance used when assigning region labels at the boundaries.
REGION_TOL = 1e-9


class Region(str, Enum):
    """Correlation-strength region relative to the subsystem entropy caps."""

    CLASSICAL = "Classical"
    QUANTUM = "Quantum"
    UNATTAINABLE = "Unattainable"


@dataclass(frozen=True)
class BoundsReport:
    """Upper bounds on correlation strength from the subsystem entropies.

    classical_upper: largest value reachable when the joint entropy cannot
        drop below the largest subsystem entropy (sum minus max).
    quantum_upper: largest value reachable when the joint state may be pure
        (plain sum).
    gap_bound: bound on the quantum-classical gap (the max entry).
    araki_lieb_ok: set when a triangle-inequality check has been run for the
        state this report describes; None if not evaluated.
    """

    classical_upper: float
    quantum_upper: float
    gap_bound: float
    araki_lieb_ok: bool | None = None


class ArakiLiebResult(NamedTuple):
    ok: bool
    lower_slack: float
    upper_slack: float


def entropy_from_probs(p: np.ndarray) -> float:
    """-sum p ln p over entries above the floor, clamped to >= 0."""
    p = np.asarray(p, dtype=np.float64)
    p = p[p > ENTROPY_EIG_FLOOR]
    if p.size == 0:
        return 0.0
    return max(float(-np.sum(p * np.log(p))), 0.0)


def _entropy_of_matrix(m: np.ndarray) -> float:
    sym = (m + m.conj().T) / 2.0
    return entropy_from_probs(np.linalg.eigvalsh(sym))


def von_neumann_entropy(rho: DensityOperator) -> float:
    """-Tr(rho ln rho) in nats, with 0 ln 0 = 0 and the result clamped to >= 0."""
    return _entropy_of_matrix(rho.matrix)


def subsystem_entropies(rho: DensityOperator) -> list[float]:
    """Entropy of each single-qubit reduction, in qubit order."""
    m, n = rho.matrix, rho.n_qubits
    return [_entropy_of_matrix(partial_trace(m, n, (k,))) for k in range(n)]


def total_correlation(rho: DensityOperator) -> float:
    """Sum of single-qubit entropies minus the total entropy, clamped to >= 0."""
    s_total = von_neumann_entropy(rho)
    return max(sum(subsystem_entropies(rho)) - s_total, 0.0)


def index_of_correlation(rho: DensityOperator, part: "Partition") -> float:
    """S(rho_alpha) + S(rho_beta) - S(rho) across the given bipartition."""
    if part.n_qubits != rho.n_qubits:
        raise PartitionError(
            f"partition covers {part.n_qubits} qubits but the operator has "
            f"{rho.n_qubits}"
        )
    m, n = rho.matrix, rho.n_qubits
    s_a = _entropy_of_matrix(partial_trace(m, n, part.alpha))
    s_b = _entropy_of_matrix(partial_trace(m, n, part.beta))
    return max(s_a + s_b - von_neumann_entropy(rho), 0.0)


def max_total_correlation(n_qubits: int) -> float:
    """Global maximum n*ln2: pure total state, every qubit maximally mixed."""
    if n_qubits < 1:
        raise ValueError(f"n_qubits must be >= 1, got {n_qubits}")
    return n_qubits * LN2


def correlation_bounds(subsystem_entropies: Sequence[float]) -> BoundsReport:
    """Bounds on correlation strength from a list of subsystem entropies."""
    values = [float(v) for v in subsystem_entropies]
    if not values:
        raise ValueError("need at least one subsystem entropy")
    for v in values:
        if v < 0.0:
            raise ValueError(f"subsystem entropies must be >= 0, got {v}")
    top = max(values)
    total = sum(values)
    return BoundsReport(
        classical_upper=total - top,
        quantum_upper=total,
        gap_bound=top,
    )


def classify_region(
    value: float, max_entropies: Sequence[float], tol: float = REGION_TOL
) -> Region:
    """Label a correlation strength against the subsystem entropy caps.

    Classical for value <= inf(caps), Quantum up to 2*inf(caps),
    Unattainable beyond; the lower region is closed, so a value exactly at
    inf classifies as Classical.
    """
    caps = [float(v) for v in max_entropies]
    if not caps:
        raise ValueError("need at least one maximum entropy")
    if any(v <= 0.0 for v in caps):
        raise ValueError("maximum entropies must be > 0")
    if value < 0.0:
        raise ValueError(f"correlation value must be >= 0, got {value}")
    inf_cap = min(caps)
    if value <= inf_cap + tol:
        return Region.CLASSICAL
    if value <= 2.0 * inf_cap + tol:
        return Region.QUANTUM
    return Region.UNATTAINABLE


def araki_lieb_check(rho: DensityOperator, part: "Partition") -> ArakiLiebResult:
    """Check |S_A - S_B| <= S <= S_A + S_B for the given bipartition.

    Returns the slack of each inequality; `ok` means both are >= -1e-9.
    """
    if part.n_qubits != rho.n_qubits:
        raise PartitionError(
            f"partition covers {part.n_qubits} qubits but the operator has "
            f"{rho.n_qubits}"
        )
    m, n = rho.matrix, rho.n_qubits
    s_a = _entropy_of_matrix(partial_trace(m, n, part.alpha))
    s_b = _entropy_of_matrix(partial_trace(m, n, part.beta))
    s = von_neumann_entropy(rho)
    lower = s - abs(s_a - s_b)
    upper = s_a + s_b - s
    return ArakiLiebResult(lower >= -1e-9 and upper >= -1e-9, lower, upper)
