"""Bipartitions of a qubit register and the internal/external decomposition.

Any total correlation splits, relative to a chosen bipartition, into the
internal correlation of each side plus the external correlation between
them; the total is invariant under the choice of cut, the parts are not.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .correlation import (
    LN2,
    _entropy_of_matrix,
    index_of_correlation,
    subsystem_entropies,
    total_correlation,
)
from .errors import PartitionError, PreconditionError
from .linalg import kron, partial_trace, permute_matrix_qubits
from .states import DensityOperator, PureState, to_density

IDENTITY_TOL = 1e-8


@dataclass(frozen=True)
class Partition:
    """Two disjoint, ordered qubit-index sets covering 0..N-1."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(q) for q in self.alpha)
        b = tuple(int(q) for q in self.beta)
        if not a or not b:
            raise PartitionError("both sides of a partition must be nonempty")
        n = len(a) + len(b)
        union = sorted(a + b)
        if union != list(range(n)):
            raise PartitionError(
                f"sides must be disjoint and cover 0..{n - 1}, got "
                f"alpha={a}, beta={b}"
            )
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @classmethod
    def complement(cls, alpha: Iterable[int], n_qubits: int) -> "Partition":
        """Build a partition from one side; beta is the sorted complement."""
        a = tuple(int(q) for q in alpha)
        b = tuple(q for q in range(n_qubits) if q not in set(a))
        return cls(a, b)

    @property
    def n_qubits(self) -> int:
        return len(self.alpha) + len(self.beta)

    def label(self) -> str:
        """Letter syntax, e.g. 'ab|cd' (qubit 0 is 'a')."""
        letters = string.ascii_lowercase
        side = lambda qs: "".join(letters[q] for q in qs)
        return f"{side(self.alpha)}|{side(self.beta)}"


@dataclass(frozen=True)
class Decomposition:
    """Internal/external split of the total correlation for one partition."""

    internal_alpha: float
    internal_beta: float
    external: float
    total: float


def decompose(rho: DensityOperator, part: Partition) -> Decomposition:
    """Internal correlation of each side plus the external correlation.

    internal = total correlation of the side's reduced operator;
    external = index of correlation across the cut. Their sum reproduces
    the total correlation within 1e-8.
    """
    if part.n_qubits != rho.n_qubits:
        raise PartitionError(
            f"partition covers {part.n_qubits} qubits but the operator has "
            f"{rho.n_qubits}"
        )
    m, n = rho.matrix, rho.n_qubits
    rho_a = DensityOperator(len(part.alpha), partial_trace(m, n, part.alpha))
    rho_b = DensityOperator(len(part.beta), partial_trace(m, n, part.beta))
    internal_alpha = total_correlation(rho_a)
    internal_beta = total_correlation(rho_b)
    external = index_of_correlation(rho, part)
    total = total_correlation(rho)
    if abs(internal_alpha + internal_beta + external - total) > IDENTITY_TOL:
        raise ArithmeticError(
            "internal/external decomposition failed to reproduce the total "
            f"correlation: {internal_alpha} + {internal_beta} + {external} "
            f"vs {total}"
        )
    return Decomposition(internal_alpha, internal_beta, external, total)


def pure_state_decomposition_identities(s: PureState, part: Partition) -> Decomposition:
    """Decompose a maximally correlated pure state across an equal cut.

    Requires |alpha| = |beta| = n, every single-qubit entropy equal to ln 2
    and total correlation 2n ln 2 (all within 1e-8). Verifies that
    external = 2 S(alpha) and each internal = n ln 2 - S(alpha).
    """
    if part.n_qubits != s.n_qubits:
        raise PartitionError(
            f"partition covers {part.n_qubits} qubits but the state has "
            f"{s.n_qubits}"
        )
    n_side = len(part.alpha)
    if n_side != len(part.beta):
        raise PreconditionError(
            f"sides must be the same size, got {len(part.alpha)} and "
            f"{len(part.beta)}"
        )
    rho = to_density(s)
    for k, s_k in enumerate(subsystem_entropies(rho)):
        if abs(s_k - LN2) > IDENTITY_TOL:
            raise PreconditionError(
                f"single-qubit entropy of qubit {k} is {s_k}, not ln 2"
            )
    result = decompose(rho, part)
    expected_total = 2 * n_side * LN2
    if abs(result.total - expected_total) > IDENTITY_TOL:
        raise PreconditionError(
            f"total correlation is {result.total}, not the maximum "
            f"{expected_total}"
        )
    s_alpha = _entropy_of_matrix(partial_trace(rho.matrix, rho.n_qubits, part.alpha))
    checks = [
        ("external = 2 S(alpha)", result.external, 2.0 * s_alpha),
        ("internal(alpha) = n ln2 - S(alpha)", result.internal_alpha, n_side * LN2 - s_alpha),
        ("internal(beta) = n ln2 - S(alpha)", result.internal_beta, n_side * LN2 - s_alpha),
    ]
    for name, got, want in checks:
        if abs(got - want) > IDENTITY_TOL:
            raise PreconditionError(f"identity {name} violated: {got} vs {want}")
    return result


def enumerate_bipartitions(n_qubits: int, size_alpha: int | None = None) -> list[Partition]:
    """Canonical bipartitions: alpha is the side containing qubit 0.

    Each unordered bipartition appears exactly once; all 2**(n-1) - 1 of them
    by default, ordered by |alpha| then lexicographically. With `size_alpha`
    given, cuts with a side of that size are returned (the qubit-0 side may
    be the complement, so |alpha| is size_alpha or n - size_alpha).
    """
    if n_qubits < 2:
        raise ValueError(f"need at least 2 qubits to bipartition, got {n_qubits}")
    if size_alpha is None:
        sizes = range(1, n_qubits)
    else:
        if not 1 <= size_alpha < n_qubits:
            raise ValueError(
                f"size_alpha must be in 1..{n_qubits - 1}, got {size_alpha}"
            )
        sizes = sorted({size_alpha, n_qubits - size_alpha})
    out = []
    for k in sizes:
        for rest in combinations(range(1, n_qubits), k - 1):
            out.append(Partition.complement((0, *rest), n_qubits))
    return out


def is_product_across(rho: DensityOperator, part: Partition, tol: float = 1e-9) -> bool:
    """True iff rho equals rho_alpha (x) rho_beta entrywise within tol.

    This detects exact product form across the cut only; it is not a general
    separability test.
    """
    if part.n_qubits != rho.n_qubits:
        raise PartitionError(
            f"partition covers {part.n_qubits} qubits but the operator has "
            f"{rho.n_qubits}"
        )
    m, n = rho.matrix, rho.n_qubits
    order = part.alpha + part.beta
    perm = [0] * n
    for new_pos, q in enumerate(order):
        perm[q] = new_pos
    reordered = permute_matrix_qubits(m, n, perm)
    rho_a = partial_trace(m, n, part.alpha)
    rho_b = partial_trace(m, n, part.beta)
    return float(np.max(np.abs(reordered - kron(rho_a, rho_b)))) <= tol


def tradeoff_delta(d1: Decomposition, d2: Decomposition) -> float:
    """Internal/external trade-off between two states of equal total.

    Returns the common value of (internal sum of d1 - internal sum of d2)
    and (external of d2 - external of d1); the totals must agree.
    """
    if abs(d1.total - d2.total) > IDENTITY_TOL:
        raise PreconditionError(
            f"totals differ: {d1.total} vs {d2.total}; the trade-off identity "
            "only holds at fixed total correlation"
        )
    lhs = (d1.internal_alpha + d1.internal_beta) - (d2.internal_alpha + d2.internal_beta)
    rhs = d2.external - d1.external
    if abs(lhs - rhs) > IDENTITY_TOL:
        raise PreconditionError(
            f"trade-off identity violated: internal drop {lhs} vs external "
            f"gain {rhs}"
        )
    return rhs
