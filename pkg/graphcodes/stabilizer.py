"""Stabilizer codes as isotropic subspaces S of F^n ⊕ F^n.

A label is written (ĝ | g): the phase part ĝ comes first and the shift part
g second, so a generator row has length 2n. The symplectic form is
⟨û, v_shift⟩ − ⟨v̂, u_shift⟩.
"""

from __future__ import annotations

from dataclasses import dataclass
import logging

import numpy as np

from graphcodes.errors import (
    ConsistencyError,
    FieldMismatchError,
    SizeLimitError,
    ValidationError,
)
from graphcodes.field import FieldSpec, Scalar
from graphcodes.linalg import GFMatrix, Subspace, coefficient_block, intersect, kernel_basis
from graphcodes.settings import get_settings

logger = logging.getLogger(__name__)

SEARCH_CHUNK = 1 << 16


@dataclass(frozen=True, eq=False)
class SymplecticVector:
    field: FieldSpec
    phase: np.ndarray
    shift: np.ndarray

    def __post_init__(self) -> None:
        p = self.field.p
        phase = np.array(self.phase, dtype=np.int64).reshape(-1) % p
        shift = np.array(self.shift, dtype=np.int64).reshape(-1) % p
        if phase.shape != shift.shape:
            raise FieldMismatchError(
                f"phase part has length {phase.shape[0]}, shift part {shift.shape[0]}"
            )
        phase.setflags(write=False)
        shift.setflags(write=False)
        object.__setattr__(self, "phase", phase)
        object.__setattr__(self, "shift", shift)

    @classmethod
    def from_array(cls, field: FieldSpec, vector) -> SymplecticVector:
        v = np.array(vector, dtype=np.int64).reshape(-1)
        if v.shape[0] % 2:
            raise FieldMismatchError(f"symplectic vector needs even length, got {v.shape[0]}")
        n = v.shape[0] // 2
        return cls(field, v[:n], v[n:])

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> SymplecticVector:
        return cls(field, np.zeros(n, dtype=np.int64), np.zeros(n, dtype=np.int64))

    @property
    def n(self) -> int:
        return self.phase.shape[0]

    def as_array(self) -> np.ndarray:
        return np.concatenate([self.phase, self.shift])

    def is_zero(self) -> bool:
        return not (np.any(self.phase) or np.any(self.shift))

    def __add__(self, other: SymplecticVector) -> SymplecticVector:
        _check_pair(self, other)
        return SymplecticVector(self.field, self.phase + other.phase, self.shift + other.shift)

    def __neg__(self) -> SymplecticVector:
        return SymplecticVector(self.field, -self.phase, -self.shift)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymplecticVector):
            return NotImplemented
        return (
            self.field == other.field
            and bool(np.array_equal(self.phase, other.phase))
            and bool(np.array_equal(self.shift, other.shift))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.phase.tobytes(), self.shift.tobytes()))

    def __repr__(self) -> str:
        return f"SymplecticVector({self.phase.tolist()} | {self.shift.tolist()})"


def _check_pair(u: SymplecticVector, v: SymplecticVector) -> None:
    if u.field != v.field:
        raise FieldMismatchError(f"cannot combine {u.field} with {v.field}")
    if u.n != v.n:
        raise FieldMismatchError(f"labels act on {u.n} and {v.n} systems")


def symplectic_form(u: SymplecticVector, v: SymplecticVector) -> Scalar:
    _check_pair(u, v)
    return Scalar(u.field, int(u.phase @ v.shift) - int(v.phase @ u.shift))


def form_matrix(rows_a: np.ndarray, rows_b: np.ndarray, n: int, p: int) -> np.ndarray:
    """Pairwise symplectic form between two stacks of (ĝ | g) rows."""
    return (rows_a[:, :n] @ rows_b[:, n:].T - rows_a[:, n:] @ rows_b[:, :n].T) % p


@dataclass(frozen=True, eq=False)
class StabilizerSpace:
    field: FieldSpec
    n: int
    generators: Subspace

    def __post_init__(self) -> None:
        if self.generators.field != self.field:
            raise FieldMismatchError(
                f"generators are over {self.generators.field}, code is over {self.field}"
            )
        if self.generators.ambient_dim != 2 * self.n:
            raise FieldMismatchError(
                f"generators live in dimension {self.generators.ambient_dim}, "
                f"expected {2 * self.n}"
            )

    @classmethod
    def from_generators(
        cls, field: FieldSpec, n: int, rows, check: bool = True
    ) -> StabilizerSpace:
        space = cls(field, n, Subspace(field, 2 * n, rows))
        if check and not is_isotropic(space):
            raise ValidationError(
                "generators do not span an isotropic subspace",
                [("isotropic", pair) for pair in _non_commuting_pairs(space)],
            )
        return space

    @property
    def dim(self) -> int:
        return self.generators.dim

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def basis(self) -> np.ndarray:
        return self.generators.basis

    def generator_vectors(self) -> list[SymplecticVector]:
        return [SymplecticVector.from_array(self.field, row) for row in self.basis]

    def contains(self, v: SymplecticVector) -> bool:
        return self.generators.contains_vector(v.as_array())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StabilizerSpace):
            return NotImplemented
        return self.n == other.n and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.n, self.generators))

    def __repr__(self) -> str:
        return f"StabilizerSpace({self.field}, n={self.n}, dim={self.dim})"


def _non_commuting_pairs(s: StabilizerSpace) -> list[tuple[int, int]]:
    form = form_matrix(s.basis, s.basis, s.n, s.p)
    rows, cols = np.nonzero(np.triu(form))
    return [(int(i), int(j)) for i, j in zip(rows, cols)]


def is_isotropic(s: StabilizerSpace) -> bool:
    return not np.any(form_matrix(s.basis, s.basis, s.n, s.p))


def is_nondegenerate(s: StabilizerSpace) -> bool:
    return degenerate_part(s).dim == 0


def degenerate_part(s: StabilizerSpace) -> Subspace:
    """T = {t : (t | 0) ∈ S}."""
    n = s.n
    phase_only = Subspace(s.field, 2 * n, np.eye(2 * n, dtype=np.int64)[:n])
    meet = intersect(s.generators, phase_only)
    return Subspace(s.field, n, meet.basis[:, :n])


def centralizer(s: StabilizerSpace) -> Subspace:
    n = s.n
    constraints = np.hstack([s.basis[:, n:], -s.basis[:, :n]])
    return kernel_basis(GFMatrix(s.field, constraints))


def weight(v: SymplecticVector) -> int:
    return int(np.count_nonzero((v.phase != 0) | (v.shift != 0)))


def logical_dim(s: StabilizerSpace) -> int:
    return s.p ** (s.n - s.dim)


def code_parameters(s: StabilizerSpace) -> tuple[int, int]:
    return s.n, s.n - s.dim


def _minimum_weight_search(s: StabilizerSpace) -> tuple[int, SymplecticVector]:
    if s.n == 0:
        raise ValidationError("distance is undefined for a code on zero systems")
    n, p = s.n, s.p
    logicals = s.dim < n
    space = centralizer(s) if logicals else s.generators
    total = p**space.dim
    limit = get_settings().search_max_size
    if total > limit:
        raise SizeLimitError(
            f"distance search would enumerate {p}^{space.dim} = {total} vectors; "
            f"the limit is {limit} (GRAPHCODES_SEARCH_MAX_SIZE)"
        )
    logger.info("distance search over %d vectors (n=%d, dim S=%d)", total, n, s.dim)

    best_weight = n + 1
    best: np.ndarray | None = None
    for start in range(0, total, SEARCH_CHUNK):
        coefficients = coefficient_block(p, space.dim, start, min(start + SEARCH_CHUNK, total))
        vectors = (coefficients @ space.basis) % p
        if logicals:
            valid = np.any(s.generators.reduce(vectors), axis=1)
        else:
            valid = np.any(vectors, axis=1)
        if not np.any(valid):
            continue
        weights = np.count_nonzero((vectors[:, :n] != 0) | (vectors[:, n:] != 0), axis=1)
        weights = np.where(valid, weights, n + 1)
        index = int(np.argmin(weights))
        if weights[index] < best_weight:
            best_weight = int(weights[index])
            best = vectors[index]
        if best_weight == 1:
            break

    if best is None:
        raise ConsistencyError("distance search found no candidate vector")
    return best_weight, SymplecticVector.from_array(s.field, best)


def distance_algebraic(s: StabilizerSpace) -> int:
    """Minimum weight over centralizer(S) minus S; for dim S = n, over S minus 0."""
    return _minimum_weight_search(s)[0]


def minimum_weight_logical(s: StabilizerSpace) -> SymplecticVector:
    return _minimum_weight_search(s)[1]
