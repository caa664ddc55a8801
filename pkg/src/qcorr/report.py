"""State specs, amplitude files, and correlation reports.

This layer turns a state spec (`ghz:4`, `ue:4`, `bellpairs:2`, `ghzblocks:3`,
`file:PATH`) into a pure state and produces per-partition reports: internal
and external correlation, region labels, product-across flags, and the
entropy bounds. All stored values are in nats; `units` only affects
presentation.
"""

from __future__ import annotations

import json
import math
import string
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .correlation import (
    LN2,
    BoundsReport,
    Region,
    classify_region,
    correlation_bounds,
    entropy_from_probs,
)
from .errors import NotNormalizedError, SpecParseError, StateFileError
from .linalg import partial_trace
from .partitions import Partition, enumerate_bipartitions, is_product_across
from .states import (
    NORM_TOL,
    DensityOperator,
    PureState,
    _check_cap,
    bell_product,
    ghz,
    ghz_block_product,
    to_density,
    uniform_entangled,
)

STATE_KINDS = ("ghz", "ue", "bellpairs", "ghzblocks", "file")

FILE_NORM_TOL = 1e-8


@dataclass(frozen=True)
class StateSpec:
    """Parsed state specification: a constructor kind plus its parameter."""

    kind: str
    parameter: int | str


@dataclass(frozen=True)
class PartitionAnalysis:
    """One partition's row in a correlation report. Values in nats."""

    partition: str
    internal_alpha: float
    internal_beta: float
    external: float
    region_internal_alpha: Region
    region_internal_beta: Region
    region_external: Region
    product_across: bool


@dataclass(frozen=True)
class CorrelationReport:
    """Correlation figures for one state over one or more partitions."""

    n_qubits: int
    units: str
    total_nats: float
    subsystem_entropies: tuple[float, ...]
    bounds: BoundsReport
    entries: tuple[PartitionAnalysis, ...]


def parse_state_spec(text: str) -> StateSpec:
    """Parse 'kind:parameter' into a StateSpec.

    Raises SpecParseError (with offset) for malformed input; an odd total
    for 'ue' is a ValueError since the syntax itself is fine.
    """
    if not text:
        raise SpecParseError("empty state spec", 0)
    head, sep, tail = text.partition(":")
    if not sep:
        raise SpecParseError(f"expected 'kind:parameter', got {text!r}", len(text))
    if head not in STATE_KINDS:
        raise SpecParseError(
            f"unknown state kind {head!r} (expected one of {', '.join(STATE_KINDS)})", 0
        )
    if head == "file":
        if not tail:
            raise SpecParseError("missing file path", len(head) + 1)
        return StateSpec(head, tail)
    try:
        value = int(tail)
    except ValueError:
        raise SpecParseError(
            f"parameter for {head!r} must be an integer, got {tail!r}",
            len(head) + 1,
        ) from None
    if head == "ue" and value % 2 != 0:
        raise ValueError(
            f"'ue' takes the total qubit count, which must be even; got {value}"
        )
    return StateSpec(head, value)


def build_state(spec: StateSpec, max_qubits: int | None = None) -> PureState:
    """Instantiate the pure state a spec describes."""
    if spec.kind == "ghz":
        return ghz(int(spec.parameter), max_qubits=max_qubits)
    if spec.kind == "ue":
        return uniform_entangled(int(spec.parameter) // 2, max_qubits=max_qubits)
    if spec.kind == "bellpairs":
        return bell_product(int(spec.parameter), max_qubits=max_qubits)
    if spec.kind == "ghzblocks":
        return ghz_block_product(int(spec.parameter), max_qubits=max_qubits)
    if spec.kind == "file":
        return load_state_file(str(spec.parameter), max_qubits=max_qubits)
    raise ValueError(f"unknown state kind {spec.kind!r}")


def load_state_file(path: str, max_qubits: int | None = None) -> PureState:
    """Read a JSON amplitude file: {'n_qubits': n, 'amplitudes': [[re, im], ...]}.

    Amplitude index = big-endian bit string with qubit 0 most significant.
    The squared norm must be within 1e-8 of 1; amplitudes are renormalized
    only when needed to meet the PureState invariant, so files produced by
    `save_state_file` round-trip bit-exactly.
    """
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise StateFileError(f"{path}: not valid JSON ({e})") from None
    if not isinstance(doc, dict):
        raise StateFileError(f"{path}: top level must be an object")
    n = doc.get("n_qubits")
    if not isinstance(n, int) or n < 1:
        raise StateFileError(f"{path}: 'n_qubits' must be a positive integer")
    raw = doc.get("amplitudes")
    if not isinstance(raw, list):
        raise StateFileError(f"{path}: 'amplitudes' must be an array")
    if len(raw) != 1 << n:
        raise StateFileError(
            f"{path}: expected {1 << n} amplitudes for {n} qubits, got {len(raw)}"
        )
    amps = np.empty(1 << n, dtype=np.complex128)
    for i, pair in enumerate(raw):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) for x in pair)
        ):
            raise StateFileError(
                f"{path}: amplitude {i} must be a [re, im] pair, got {pair!r}"
            )
        amps[i] = complex(pair[0], pair[1])
    _check_cap(n, max_qubits)
    nrm2 = float(np.vdot(amps, amps).real)
    if abs(nrm2 - 1.0) > FILE_NORM_TOL:
        raise NotNormalizedError(
            f"{path}: squared norm is {nrm2!r}, outside 1 +/- {FILE_NORM_TOL}"
        )
    if abs(nrm2 - 1.0) > NORM_TOL:
        amps = amps / math.sqrt(nrm2)
    return PureState(n, amps)


def save_state_file(state: PureState, path: str) -> None:
    """Write the amplitude-file JSON for a state (round-trips bit-exactly)."""
    doc = {
        "n_qubits": state.n_qubits,
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def _parse_side(text: str, offset: int) -> tuple[int, ...]:
    letters = string.ascii_lowercase
    if not text:
        raise SpecParseError("empty partition side", offset)
    if "," in text:
        qubits = []
        pos = offset
        for token in text.split(","):
            token = token.strip()
            if token in letters:
                qubits.append(letters.index(token))
            else:
                try:
                    qubits.append(int(token))
                except ValueError:
                    raise SpecParseError(
                        f"bad qubit token {token!r}", pos
                    ) from None
            pos += len(token) + 1
        return tuple(qubits)
    if all(ch in letters for ch in text):
        return tuple(letters.index(ch) for ch in text)
    try:
        return (int(text),)
    except ValueError:
        raise SpecParseError(f"bad partition side {text!r}", offset) from None


def parse_partition(text: str, n_qubits: int) -> Partition:
    """Parse 'ab|cd' or '0,2|1,3' into a Partition over n_qubits.

    Letters a, b, c, ... alias indices 0, 1, 2, ...; a side given without
    commas is read one letter per qubit. The two sides must cover all qubits.
    """
    if text.count("|") != 1:
        raise SpecParseError(
            f"partition must contain exactly one '|', got {text!r}",
            text.find("|") if "|" in text else len(text),
        )
    left, right = text.split("|")
    alpha = _parse_side(left.strip(), 0)
    beta = _parse_side(right.strip(), len(left) + 1)
    part = Partition(alpha, beta)
    if part.n_qubits != n_qubits:
        raise SpecParseError(
            f"partition {text!r} covers {part.n_qubits} qubits, state has "
            f"{n_qubits}",
            0,
        )
    return part


def parse_partition_list(text: str, n_qubits: int) -> list[Partition]:
    """Parse a comma-separated list of partitions.

    A value with a single '|' is one partition (commas inside it separate
    qubits, as in '0,2|1,3'). A multi-partition list must use the comma-free
    letter syntax for each entry, e.g. 'ab|cd,ac|bd'.
    """
    if text.count("|") <= 1:
        return [parse_partition(text, n_qubits)]
    parts = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if chunk.count("|") != 1:
            raise SpecParseError(
                "multi-partition lists must be comma-free per entry, e.g. "
                f"'ab|cd,ac|bd'; got chunk {chunk!r}",
                text.find(chunk),
            )
        parts.append(parse_partition(chunk, n_qubits))
    return parts


def parse_subset(text: str, n_qubits: int) -> tuple[int, ...]:
    """Parse a qubit subset like 'ab' or '0,2'; must be nonempty and in range."""
    qubits = _parse_side(text.strip(), 0)
    seen = set()
    for q in qubits:
        if q < 0 or q >= n_qubits:
            raise SpecParseError(f"qubit {q} out of range for {n_qubits} qubits", 0)
        if q in seen:
            raise SpecParseError(f"qubit {q} repeated in subset", 0)
        seen.add(q)
    return qubits


def _schmidt_probs(amps: np.ndarray, n: int, alpha: Sequence[int]) -> np.ndarray:
    """Squared singular values of the amplitude matrix for the given cut.

    These are the shared eigenvalues of both reduced operators of a pure
    state, so one SVD yields S(alpha) and S(beta) at once.
    """
    rest = [q for q in range(n) if q not in set(alpha)]
    mat = amps.reshape((2,) * n).transpose([*alpha, *rest]).reshape(
        1 << len(alpha), 1 << len(rest)
    )
    sv = np.linalg.svd(mat, compute_uv=False)
    return sv * sv


def _single_qubit_entropies(amps: np.ndarray, n: int) -> list[float]:
    return [float(entropy_from_probs(_schmidt_probs(amps, n, (k,)))) for k in range(n)]


def _product_flag(
    state: PureState,
    rho: DensityOperator | None,
    part: Partition,
    probs: np.ndarray,
) -> tuple[bool, DensityOperator | None]:
    """Product-across check with a cheap sound rejection.

    For a pure state with Schmidt probabilities p, the Frobenius distance
    between rho and rho_alpha (x) rho_beta is sqrt(1 + (sum p^2)^2 - 2 sum p^3)
    exactly, and the max-entry distance is at least that over the dimension.
    Only near-product candidates pay for the full entrywise check.
    """
    p = probs / float(np.sum(probs))
    frob2 = 1.0 + float(np.sum(p * p)) ** 2 - 2.0 * float(np.sum(p**3))
    dim = 1 << state.n_qubits
    if math.sqrt(max(frob2, 0.0)) / dim > 1e-9:
        return False, rho
    if rho is None:
        rho = to_density(state)
    return is_product_across(rho, part), rho


def _analyze_pure(
    state: PureState, parts: Sequence[Partition], units: str
) -> CorrelationReport:
    n = state.n_qubits
    amps = state.amplitudes
    # A pure state's operator is rank one with eigenvalue |psi|^2 exactly.
    nrm2 = float(np.vdot(amps, amps).real)
    s_total = entropy_from_probs(np.array([nrm2]))
    s_k = _single_qubit_entropies(amps, n)
    total = max(sum(s_k) - s_total, 0.0)

    rho = None
    entries = []
    al_ok = True
    for part in parts:
        probs = _schmidt_probs(amps, n, part.alpha)
        s_cut = float(entropy_from_probs(probs))
        internal_alpha = max(sum(s_k[q] for q in part.alpha) - s_cut, 0.0)
        internal_beta = max(sum(s_k[q] for q in part.beta) - s_cut, 0.0)
        external = max(2.0 * s_cut - s_total, 0.0)
        al_ok = al_ok and (s_total >= -1e-9) and (2.0 * s_cut - s_total >= -1e-9)
        product, rho = _product_flag(state, rho, part, probs)
        entries.append(
            PartitionAnalysis(
                partition=part.label(),
                internal_alpha=internal_alpha,
                internal_beta=internal_beta,
                external=external,
                region_internal_alpha=classify_region(
                    internal_alpha, [LN2] * len(part.alpha)
                ),
                region_internal_beta=classify_region(
                    internal_beta, [LN2] * len(part.beta)
                ),
                region_external=classify_region(
                    external, [len(part.alpha) * LN2, len(part.beta) * LN2]
                ),
                product_across=product,
            )
        )
    bounds = correlation_bounds(s_k)
    bounds = BoundsReport(
        classical_upper=bounds.classical_upper,
        quantum_upper=bounds.quantum_upper,
        gap_bound=bounds.gap_bound,
        araki_lieb_ok=al_ok,
    )
    return CorrelationReport(
        n_qubits=n,
        units=units,
        total_nats=total,
        subsystem_entropies=tuple(s_k),
        bounds=bounds,
        entries=tuple(entries),
    )


def analyze(
    spec: StateSpec | PureState,
    partitions: Sequence[Partition] | str,
    units: str = "nats",
    max_qubits: int | None = None,
) -> CorrelationReport:
    """Correlation report for explicit partitions (or "all") of one state."""
    if units not in ("nats", "bits"):
        raise ValueError(f"units must be 'nats' or 'bits', got {units!r}")
    state = spec if isinstance(spec, PureState) else build_state(spec, max_qubits)
    if isinstance(partitions, str):
        if partitions.strip() == "all":
            parts = enumerate_bipartitions(state.n_qubits)
        else:
            parts = parse_partition_list(partitions, state.n_qubits)
    else:
        parts = list(partitions)
    if not parts:
        raise ValueError("need at least one partition")
    return _analyze_pure(state, parts, units)


def sweep(
    spec: StateSpec | PureState,
    size_alpha: int | None = None,
    units: str = "nats",
    max_qubits: int | None = None,
) -> CorrelationReport:
    """Correlation report covering every canonical bipartition."""
    if units not in ("nats", "bits"):
        raise ValueError(f"units must be 'nats' or 'bits', got {units!r}")
    state = spec if isinstance(spec, PureState) else build_state(spec, max_qubits)
    parts = enumerate_bipartitions(state.n_qubits, size_alpha)
    return _analyze_pure(state, parts, units)


def subset_entropy(
    spec: StateSpec | PureState, subset: Sequence[int] | str, max_qubits: int | None = None
) -> float:
    """Entropy (nats) of the reduction onto a qubit subset."""
    state = spec if isinstance(spec, PureState) else build_state(spec, max_qubits)
    qubits = (
        parse_subset(subset, state.n_qubits) if isinstance(subset, str) else tuple(subset)
    )
    if len(qubits) == state.n_qubits:
        nrm2 = float(np.vdot(state.amplitudes, state.amplitudes).real)
        return entropy_from_probs(np.array([nrm2]))
    return float(entropy_from_probs(_schmidt_probs(state.amplitudes, state.n_qubits, qubits)))


def reduced_operator(state: PureState, subset: Sequence[int]) -> DensityOperator:
    """Reduction of a pure state onto the given qubits (in subset order)."""
    m = to_density(state).matrix
    return DensityOperator(
        len(subset), partial_trace(m, state.n_qubits, tuple(subset))
    )


def _sig12(x: float) -> float:
    return float(f"{x:.12g}")


def _in_units(x: float, units: str) -> float:
    return x / LN2 if units == "bits" else x


def report_to_dict(report: CorrelationReport) -> dict:
    """JSON-ready dict; values are nats at 12 significant digits."""
    return {
        "n_qubits": report.n_qubits,
        "units": report.units,
        "total_nats": _sig12(report.total_nats),
        "subsystem_entropies_nats": [_sig12(v) for v in report.subsystem_entropies],
        "bounds": {
            "classical_upper": _sig12(report.bounds.classical_upper),
            "quantum_upper": _sig12(report.bounds.quantum_upper),
            "gap_bound": _sig12(report.bounds.gap_bound),
            "araki_lieb_ok": report.bounds.araki_lieb_ok,
        },
        "partitions": [
            {
                "partition": e.partition,
                "internal_alpha": _sig12(e.internal_alpha),
                "internal_beta": _sig12(e.internal_beta),
                "external": _sig12(e.external),
                "region_internal_alpha": e.region_internal_alpha.value,
                "region_internal_beta": e.region_internal_beta.value,
                "region_external": e.region_external.value,
                "product_across": e.product_across,
            }
            for e in report.entries
        ],
    }


def render_table(report: CorrelationReport) -> str:
    """Fixed-width human-readable table in the report's display units."""
    u = report.units
    lines = [
        f"n_qubits: {report.n_qubits}",
        f"total correlation: {_in_units(report.total_nats, u):.9f} {u}",
        "bounds ({}): classical <= {:.9f}, quantum <= {:.9f}, gap <= {:.9f}".format(
            u,
            _in_units(report.bounds.classical_upper, u),
            _in_units(report.bounds.quantum_upper, u),
            _in_units(report.bounds.gap_bound, u),
        ),
    ]
    header = (
        f"{'partition':<14}{'int(alpha)':>13}{'int(beta)':>13}{'external':>13}"
        f"  {'ext region':<13}{'int regions':<27}{'product':<7}"
    )
    lines.append(header)
    lines.append("-" * len(header))
    for e in report.entries:
        regions = f"{e.region_internal_alpha.value}/{e.region_internal_beta.value}"
        lines.append(
            f"{e.partition:<14}"
            f"{_in_units(e.internal_alpha, u):>13.9f}"
            f"{_in_units(e.internal_beta, u):>13.9f}"
            f"{_in_units(e.external, u):>13.9f}"
            f"  {e.region_external.value:<13}{regions:<27}"
            f"{'yes' if e.product_across else 'no':<7}"
        )
    return "\n".join(lines)
