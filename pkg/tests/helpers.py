"""Shared test utilities: independent oracles and random-state generators.

The brute-force reduction here deliberately shares no code with the library's
partial trace: it walks every matrix entry and accumulates by explicit bit
arithmetic on basis indices (qubit 0 = most significant bit).
"""

import numpy as np


def bit_of(index: int, qubit: int, n: int) -> int:
    return (index >> (n - 1 - qubit)) & 1


def brute_reduced(m: np.ndarray, n: int, keep) -> np.ndarray:
    """Reduced matrix over `keep` by explicit basis-index summation."""
    keep = list(keep)
    traced = [q for q in range(n) if q not in keep]
    dk = 2 ** len(keep)
    out = np.zeros((dk, dk), dtype=complex)
    for i in range(2**n):
        for j in range(2**n):
            if any(bit_of(i, q, n) != bit_of(j, q, n) for q in traced):
                continue
            r = sum(bit_of(i, q, n) << (len(keep) - 1 - pos) for pos, q in enumerate(keep))
            c = sum(bit_of(j, q, n) << (len(keep) - 1 - pos) for pos, q in enumerate(keep))
            out[r, c] += m[i, j]
    return out


def entropy_oracle(m: np.ndarray) -> float:
    """-sum l ln l over the eigenvalues of a Hermitian matrix."""
    vals = np.linalg.eigvalsh((m + m.conj().T) / 2)
    vals = vals[vals > 1e-15]
    return float(-np.sum(vals * np.log(vals)))


def brute_total_correlation(m: np.ndarray, n: int) -> float:
    """Sum of single-qubit entropies minus total entropy, all brute-force."""
    s_k = sum(entropy_oracle(brute_reduced(m, n, [k])) for k in range(n))
    return s_k - entropy_oracle(m)


def brute_index_of_correlation(m: np.ndarray, n: int, alpha, beta) -> float:
    sa = entropy_oracle(brute_reduced(m, n, list(alpha)))
    sb = entropy_oracle(brute_reduced(m, n, list(beta)))
    return sa + sb - entropy_oracle(m)


def random_pure(rng: np.random.Generator, n_qubits: int) -> np.ndarray:
    z = rng.standard_normal(2**n_qubits) + 1j * rng.standard_normal(2**n_qubits)
    return z / np.linalg.norm(z)


def random_density(rng: np.random.Generator, n_qubits: int) -> np.ndarray:
    """Unit-trace PSD matrix from a Ginibre square."""
    d = 2**n_qubits
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    m = g @ g.conj().T
    return m / np.trace(m).real


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def tilted_four_qubit(u: float) -> np.ndarray:
    """Pure 4-qubit family: cos(u)(|0000>+|1111>)/sqrt2 + sin(u)(|0011>+|1100>)/sqrt2.

    Every single-qubit reduction is maximally mixed for all u; u = 0 is the
    GHZ state and u = pi/4 the product of two Bell pairs.
    """
    amps = np.zeros(16, dtype=complex)
    c, s = np.cos(u) / np.sqrt(2), np.sin(u) / np.sqrt(2)
    amps[0b0000] = c
    amps[0b0011] = s
    amps[0b1100] = s
    amps[0b1111] = c
    return amps
