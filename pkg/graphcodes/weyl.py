"""Dense complex realization of Weyl operators and graph-code isometries.

Basis states of L2(F^n) are digit vectors in lexicographic order, system 0
being the most significant digit. With ε(x) = exp(2πi x / p):

    (w(ĝ, g) ψ)(g1) = ε(ĝ·g1) ψ(g1 − g)
    w(u) w(v) = ε(−v̂·u_shift) w(u + v)

Everything here is numerical and checked against tolerances; the exact
statements live in `stabilizer` and `convert`.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations, product
import logging

import numpy as np

from graphcodes.convert import graph_to_stabilizer
from graphcodes.errors import (
    ConsistencyError,
    FieldMismatchError,
    SizeLimitError,
    UnsupportedCharacterError,
    ValidationError,
)
from graphcodes.field import FieldSpec
from graphcodes.graph_code import GraphCode
from graphcodes.linalg import coefficient_block
from graphcodes.models import CheckReport
from graphcodes.rendering import render
from graphcodes.settings import get_settings
from graphcodes.stabilizer import StabilizerSpace, SymplecticVector
from graphcodes.utils import format_complex, format_label

logger = logging.getLogger(__name__)

UNITARY_TOL = 1e-12
ISOMETRY_TOL = 1e-10
EIGEN_TOL = 1e-9
KL_TOL = 1e-9
EQUIV_TOL = 1e-8


def _check_dim(p: int, n: int) -> int:
    size = p**n
    limit = get_settings().sim_max_dim
    if size > limit:
        raise SizeLimitError(
            f"state space has dimension {p}^{n} = {size}; "
            f"the simulator is limited to {limit} (GRAPHCODES_SIM_MAX_DIM)"
        )
    return size


def epsilon(x, p: int):
    return np.exp(2j * np.pi * (np.asarray(x) % p) / p)


def _digits(p: int, n: int) -> np.ndarray:
    return coefficient_block(p, n, 0, p**n)


def _indices(digits: np.ndarray, p: int) -> np.ndarray:
    n = digits.shape[-1]
    powers = p ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (digits % p) @ powers


@dataclass(frozen=True)
class WeylOperator:
    label: SymplecticVector

    @property
    def field(self) -> FieldSpec:
        return self.label.field

    @property
    def n(self) -> int:
        return self.label.n

    def matrix(self) -> np.ndarray:
        return weyl_matrix(self.label)


def _as_label(w: WeylOperator | SymplecticVector) -> SymplecticVector:
    return w.label if isinstance(w, WeylOperator) else w


def weyl_apply(w: WeylOperator | SymplecticVector, matrix: np.ndarray) -> np.ndarray:
    """w · matrix, acting on the rows of a dense (p^n × m) matrix."""
    label = _as_label(w)
    p, n = label.field.p, label.n
    size = _check_dim(p, n)
    if matrix.shape[0] != size:
        raise FieldMismatchError(f"matrix has {matrix.shape[0]} rows, expected {size}")
    digits = _digits(p, n)
    source = _indices(digits - label.shift, p)
    phases = epsilon(digits @ label.phase, p)
    return phases[:, None] * matrix[source]


def weyl_matrix(w: WeylOperator | SymplecticVector) -> np.ndarray:
    label = _as_label(w)
    size = _check_dim(label.field.p, label.n)
    return weyl_apply(label, np.eye(size, dtype=complex))


def weyl_compose(
    u: WeylOperator | SymplecticVector, v: WeylOperator | SymplecticVector
) -> tuple[complex, SymplecticVector]:
    """w(u)·w(v) = phase · w(u + v)."""
    a, b = _as_label(u), _as_label(v)
    total = a + b
    phase = complex(epsilon(-int(b.phase @ a.shift), a.field.p))
    return phase, total


def _check_character(g: GraphCode) -> None:
    if g.p == 2 and np.any(np.diag(g.gamma.entries)):
        raise UnsupportedCharacterError(
            "the canonical character over GF(2) needs a zero diagonal in gamma"
        )


def tau_values(g: GraphCode, vectors: np.ndarray) -> np.ndarray:
    """τ on each row of `vectors` (length |X|+|J|+|Y|)."""
    _check_character(g)
    p = g.p
    v = np.asarray(vectors, dtype=np.int64) % p
    gamma = g.gamma.entries
    if p == 2:
        upper = np.triu(gamma, 1)
        q = np.einsum("...i,ij,...j->...", v, upper, v)
        return np.where(q % 2, -1.0, 1.0).astype(complex)
    quadratic = np.einsum("...i,ij,...j->...", v, gamma, v) % p
    return epsilon(g.field.half * quadratic, p)


def tau_character(g: GraphCode, v) -> complex:
    vector = np.asarray(v, dtype=np.int64)
    if vector.shape != (g.n_vertices,):
        raise FieldMismatchError(f"vector has shape {vector.shape}, expected ({g.n_vertices},)")
    return complex(tau_values(g, vector))


@dataclass(frozen=True, eq=False)
class CodeIsometry:
    graph: GraphCode
    matrix: np.ndarray

    @property
    def logical_dim(self) -> int:
        return self.matrix.shape[1]

    @property
    def isometry_error(self) -> float:
        gram = self.matrix.conj().T @ self.matrix
        return float(np.max(np.abs(gram - np.eye(self.logical_dim)), initial=0.0))

    @property
    def is_isometry(self) -> bool:
        return self.isometry_error <= ISOMETRY_TOL


def encode_isometry(g: GraphCode) -> CodeIsometry:
    g.ensure_valid()
    _check_character(g)
    p = g.p
    dim_out = _check_dim(p, g.n_outputs)
    dim_in, dim_aux = p**g.n_inputs, p**g.n_aux
    limit = get_settings().enum_max_size
    if dim_in * dim_aux * dim_out > limit:
        raise SizeLimitError(
            f"encoding sums over {p}^{g.n_vertices} vertex vectors; "
            f"the limit is {limit} (GRAPHCODES_ENUM_MAX_SIZE)"
        )

    tau = tau_values(g, _digits(p, g.n_vertices))
    summed = tau.reshape(dim_in, dim_aux, dim_out).sum(axis=1)
    matrix = summed.T / np.sqrt(dim_out * dim_aux)
    logger.debug("encoded %dx%d isometry", *matrix.shape)
    return CodeIsometry(g, matrix)


def isometry_check(iso: CodeIsometry) -> CheckReport:
    error = iso.isometry_error
    return CheckReport(
        check="isometry",
        passed=error <= ISOMETRY_TOL,
        details={"shape": list(iso.matrix.shape), "max_deviation": error},
    )


def weyl_eigenvalue(
    iso: CodeIsometry, w: WeylOperator | SymplecticVector
) -> tuple[complex, float]:
    """Rayleigh eigenvalue of w on the code and the deviation max|wV − λV|."""
    applied = weyl_apply(w, iso.matrix)
    eigenvalue = complex(np.trace(iso.matrix.conj().T @ applied) / iso.logical_dim)
    deviation = float(np.max(np.abs(applied - eigenvalue * iso.matrix), initial=0.0))
    return eigenvalue, deviation


def stabilizer_eigencheck(g: GraphCode, iso: CodeIsometry) -> CheckReport:
    """Each generator (ĝ | k) of the code's stabilizer acts on V as τ(0 ⊕ 0 ⊕ k)."""
    s = graph_to_stabilizer(g)
    offset = g.n_inputs + g.n_aux
    generators = []
    passed = True
    for label in s.generator_vectors():
        eigenvalue, deviation = weyl_eigenvalue(iso, label)
        vertex = np.zeros(g.n_vertices, dtype=np.int64)
        vertex[offset:] = label.shift
        expected = tau_character(g, vertex)
        ok = (
            deviation <= EIGEN_TOL
            and abs(abs(eigenvalue) - 1) <= EIGEN_TOL
            and abs(eigenvalue - expected) <= EIGEN_TOL
        )
        passed = passed and ok
        generators.append(
            {
                "label": format_label(label.phase, label.shift),
                "eigenvalue": format_complex(eigenvalue),
                "tau": format_complex(expected),
                "deviation": deviation,
                "pass": ok,
            }
        )
    if not passed:
        logger.warning("stabilizer eigencheck failed")
    return CheckReport(check="eigenvalues", passed=passed, details={"generators": generators})


def labels_of_weight(field: FieldSpec, n: int, weight: int) -> Iterator[SymplecticVector]:
    """All labels supported on exactly `weight` systems, in a fixed order."""
    p = field.p
    pairs = [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]
    for support in combinations(range(n), weight):
        for choice in product(pairs, repeat=weight):
            phase = np.zeros(n, dtype=np.int64)
            shift = np.zeros(n, dtype=np.int64)
            for position, (a, b) in zip(support, choice):
                phase[position] = a
                shift[position] = b
            yield SymplecticVector(field, phase, shift)


def _kl_deviation(iso: CodeIsometry, label: SymplecticVector, weight: int) -> float:
    m = iso.matrix.conj().T @ weyl_apply(label, iso.matrix)
    k = iso.logical_dim
    if k == 1:
        return 0.0 if weight == 0 else float(abs(m[0, 0]))
    scalar = np.trace(m) / k
    return float(np.max(np.abs(m - scalar * np.eye(k))))


def _kl_weight(iso: CodeIsometry, weight: int) -> dict:
    g = iso.graph
    checked = 0
    violations = 0
    first = None
    for label in labels_of_weight(g.field, g.n_outputs, weight):
        checked += 1
        if _kl_deviation(iso, label, weight) > KL_TOL:
            violations += 1
            if first is None:
                first = format_label(label.phase, label.shift)
    return {
        "weight": weight,
        "checked": checked,
        "violations": violations,
        "first_violation": first,
        "pass": violations == 0,
    }


def kl_check(iso: CodeIsometry, max_weight: int) -> CheckReport:
    """Knill–Laflamme condition for every Weyl operator of weight ≤ max_weight."""
    if max_weight < 0:
        raise ValidationError(f"max_weight must be non-negative, got {max_weight}")
    _check_dim(iso.graph.p, iso.graph.n_outputs)
    top = min(max_weight, iso.graph.n_outputs)
    weights = [_kl_weight(iso, weight) for weight in range(top + 1)]
    passed = all(entry["pass"] for entry in weights)
    if not passed:
        logger.warning("Knill-Laflamme check failed up to weight %d", max_weight)
    return CheckReport(
        check="knill_laflamme",
        passed=passed,
        details={"max_weight": max_weight, "weights": weights},
    )


def distance_kl(iso: CodeIsometry) -> int:
    _check_dim(iso.graph.p, iso.graph.n_outputs)
    for weight in range(1, iso.graph.n_outputs + 1):
        if not _kl_weight(iso, weight)["pass"]:
            return weight
    raise ConsistencyError("no Weyl operator violates the Knill-Laflamme condition")


def local_fourier(y: int, n: int, field: FieldSpec) -> np.ndarray:
    """The p-point Fourier matrix on system y, identity elsewhere."""
    if not 0 <= y < n:
        raise ValidationError(f"system {y} is outside 0..{n - 1}")
    p = field.p
    _check_dim(p, n)
    grid = np.arange(p)
    fourier = epsilon(np.outer(grid, grid), p) / np.sqrt(p)
    result = np.ones((1, 1), dtype=complex)
    for system in range(n):
        result = np.kron(result, fourier if system == y else np.eye(p))
    return result


def code_projector(iso: CodeIsometry) -> np.ndarray:
    if not iso.is_isometry:
        raise ValidationError(
            f"encoding is not an isometry (deviation {iso.isometry_error:.3g})"
        )
    return iso.matrix @ iso.matrix.conj().T


def _generator_eigenvalue(label: SymplecticVector, phase: int) -> complex:
    p = label.field.p
    base = 1j if p == 2 and int(label.phase @ label.shift) % 2 else 1.0
    return complex(base * epsilon(phase, p))


def stabilizer_projector(s: StabilizerSpace, phases=None) -> np.ndarray:
    """Joint eigenspace projector; generator i gets eigenvalue λ0·ε(phases[i])."""
    p = s.p
    size = _check_dim(p, s.n)
    labels = s.generator_vectors()
    phases = np.zeros(len(labels), dtype=np.int64) if phases is None else np.asarray(phases)
    if phases.shape != (len(labels),):
        raise FieldMismatchError(f"need {len(labels)} phases, got shape {phases.shape}")
    order = 2 if p == 2 else p
    projector = np.eye(size, dtype=complex)
    for label, phase in zip(labels, phases.tolist()):
        scaled = weyl_matrix(label) / _generator_eigenvalue(label, phase)
        term = np.eye(size, dtype=complex)
        power = np.eye(size, dtype=complex)
        for _ in range(order - 1):
            power = power @ scaled
            term = term + power
        projector = projector @ (term / order)
    return projector


def shifted_phases(s: StabilizerSpace, u: SymplecticVector, phases=None) -> np.ndarray:
    """Phases of w(u)·P·w(u)ᴴ when P = stabilizer_projector(s, phases)."""
    labels = s.generator_vectors()
    base = np.zeros(len(labels), dtype=np.int64) if phases is None else np.asarray(phases)
    shifts = [int(label.phase @ u.shift) - int(u.phase @ label.shift) for label in labels]
    return (base + np.array(shifts, dtype=np.int64)) % s.p


def weyl_equivalent(
    p1: np.ndarray, p2: np.ndarray, n: int, field: FieldSpec
) -> SymplecticVector | None:
    """A label u with w(u)·p1·w(u)ᴴ = p2, searching all labels in lexicographic order."""
    p = field.p
    size = _check_dim(p, n)
    if p1.shape != (size, size) or p2.shape != (size, size):
        raise FieldMismatchError(f"projectors must be {size}x{size}")
    labels = p ** (2 * n)
    limit = get_settings().equiv_max_labels
    if labels > limit:
        raise SizeLimitError(
            f"equivalence search over {labels} labels exceeds {limit} "
            "(GRAPHCODES_EQUIV_MAX_LABELS)"
        )
    if abs(np.trace(p1) - np.trace(p2)) > EQUIV_TOL:
        return None
    for row in coefficient_block(p, 2 * n, 0, labels):
        label = SymplecticVector.from_array(field, row)
        left = weyl_apply(label, p1)
        conjugated = weyl_apply(label, left.conj().T).conj().T
        if np.max(np.abs(conjugated - p2)) <= EQUIV_TOL:
            return label
    return None


def equivalence_check(g: GraphCode) -> CheckReport:
    """The graph code and the stabilizer code of its S differ by a Weyl operator."""
    iso = encode_isometry(g)
    s = graph_to_stabilizer(g)
    label = weyl_equivalent(stabilizer_projector(s), code_projector(iso), g.n_outputs, g.field)
    details = {"label": None if label is None else format_label(label.phase, label.shift)}
    if label is None:
        logger.warning("no Weyl operator relates the graph code to its stabilizer code")
    return CheckReport(check="equivalence", passed=label is not None, details=details)


def render_reports(reports: list[CheckReport]) -> str:
    return render("reports.txt.j2", reports=reports)
