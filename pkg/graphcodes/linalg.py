"""Exact dense linear algebra over GF(p).

Matrices are numpy integer arrays reduced mod p, wrapped in `GFMatrix`;
subspaces are stored as their RREF row basis (`Subspace`), which is a
canonical form, so subspace equality is array equality.

Every space F^n is identified with its dual through the dot product, so
adjoints are transposes and annihilators are orthogonal complements.

Complements follow one pivot rule throughout: inside a subspace `within`,
the complement of `target` is spanned by the RREF basis rows of `within`
that are not yet in the span, taken in order; outside `within` it is
spanned by standard basis vectors e_0, e_1, ... taken the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import Literal

import numpy as np

from graphcodes.errors import FieldMismatchError, SizeLimitError, ValidationError
from graphcodes.field import FieldSpec, Scalar
from graphcodes.settings import get_settings

logger = logging.getLogger(__name__)

SubspaceOp = Literal["equal", "contains", "intersect", "sum"]


def _as_int_array(values, p: int, ndim: int = 2) -> np.ndarray:
    array = np.array(values, dtype=np.int64)
    if array.size == 0 and ndim == 2 and array.ndim == 1:
        array = array.reshape(0, 0)
    if array.ndim != ndim:
        raise FieldMismatchError(f"expected a {ndim}-dimensional array, got shape {array.shape}")
    return array % p


def _rows(values, n: int) -> np.ndarray:
    array = np.array(values, dtype=np.int64)
    if array.size == 0:
        return np.zeros((0, n), dtype=np.int64)
    return array.reshape(-1, n)


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def _rref_array(array: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    a = np.array(array, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nonzero = np.nonzero(a[r:, c])[0]
        if nonzero.size == 0:
            continue
        k = r + int(nonzero[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


@dataclass(frozen=True, eq=False)
class GFMatrix:
    field: FieldSpec
    entries: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _frozen(_as_int_array(self.entries, self.field.p)))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> GFMatrix:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> GFMatrix:
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def T(self) -> GFMatrix:
        return transpose(self)

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        return Scalar(self.field, int(self.entries[index]))

    def __matmul__(self, other: GFMatrix) -> GFMatrix:
        return multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GFMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"GFMatrix({self.field}, {self.entries.tolist()})"

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()


def _same_field(*items) -> FieldSpec:
    field = items[0].field
    for item in items[1:]:
        if item.field != field:
            raise FieldMismatchError(f"cannot combine {field} with {item.field}")
    return field


def transpose(m: GFMatrix) -> GFMatrix:
    return GFMatrix(m.field, m.entries.T)


def multiply(a: GFMatrix, b: GFMatrix) -> GFMatrix:
    field = _same_field(a, b)
    if a.cols != b.rows:
        raise FieldMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    return GFMatrix(field, (a.entries @ b.entries) % field.p)


def is_symmetric(m: GFMatrix) -> bool:
    return m.rows == m.cols and bool(np.array_equal(m.entries, m.entries.T))


def augment(*matrices: GFMatrix) -> GFMatrix:
    """Side by side, [m_0 | m_1 | ...]."""
    field = _same_field(*matrices)
    return GFMatrix(field, np.hstack([m.entries for m in matrices]))


def stack(*matrices: GFMatrix) -> GFMatrix:
    """On top of each other."""
    field = _same_field(*matrices)
    return GFMatrix(field, np.vstack([m.entries for m in matrices]))


def rref(m: GFMatrix) -> tuple[GFMatrix, list[int]]:
    reduced, pivots = _rref_array(m.entries, m.field.p)
    return GFMatrix(m.field, reduced), pivots


def rank(m: GFMatrix) -> int:
    return len(_rref_array(m.entries, m.field.p)[1])


def inverse(m: GFMatrix) -> GFMatrix:
    if m.rows != m.cols:
        raise FieldMismatchError(f"cannot invert a non-square {m.shape} matrix")
    n = m.rows
    reduced, pivots = _rref_array(np.hstack([m.entries, np.eye(n, dtype=np.int64)]), m.field.p)
    if pivots[:n] != list(range(n)):
        raise ValidationError("matrix is singular")
    return GFMatrix(m.field, reduced[:, n:])


def solve(m: GFMatrix, b) -> np.ndarray | None:
    """One solution x of m·x = b, or None when the system is inconsistent."""
    p = m.field.p
    rhs = _as_int_array(b, p, ndim=1)
    if rhs.shape[0] != m.rows:
        raise FieldMismatchError(f"right-hand side has length {rhs.shape[0]}, expected {m.rows}")
    reduced, pivots = _rref_array(np.hstack([m.entries, rhs[:, None]]), p)
    if pivots and pivots[-1] == m.cols:
        return None
    x = np.zeros(m.cols, dtype=np.int64)
    for row, col in enumerate(pivots):
        x[col] = reduced[row, -1]
    return x


@dataclass(frozen=True, eq=False)
class Subspace:
    field: FieldSpec
    ambient_dim: int
    basis: np.ndarray

    def __post_init__(self) -> None:
        p = self.field.p
        rows = _rows(self.basis, self.ambient_dim) % p
        reduced, pivots = _rref_array(rows, p)
        object.__setattr__(self, "basis", _frozen(reduced[: len(pivots)].copy()))
        object.__setattr__(self, "_pivots", tuple(pivots))

    @classmethod
    def span(cls, field: FieldSpec, ambient_dim: int, rows) -> Subspace:
        return cls(field, ambient_dim, rows)

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> Subspace:
        return cls(field, ambient_dim, np.zeros((0, ambient_dim), dtype=np.int64))

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> Subspace:
        return cls(field, ambient_dim, np.eye(ambient_dim, dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ambient_dim, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace({self.field}, n={self.ambient_dim}, basis={self.basis.tolist()})"

    def basis_matrix(self) -> GFMatrix:
        return GFMatrix(self.field, self.basis)

    def reduce(self, vectors) -> np.ndarray:
        """Canonical coset representative(s): pivot coordinates eliminated."""
        p = self.field.p
        v = np.array(vectors, dtype=np.int64) % p
        if self.dim == 0:
            return v
        return (v - v[..., list(self.pivots)] @ self.basis) % p

    def contains_vector(self, vector) -> bool:
        return not np.any(self.reduce(vector))

    def contains(self, other: Subspace) -> bool:
        _check_ambient(self, other)
        return not np.any(self.reduce(other.basis))

    def coordinates(self, vector) -> np.ndarray:
        v = np.array(vector, dtype=np.int64) % self.field.p
        if not self.contains_vector(v):
            raise ValidationError("vector is not in the subspace")
        return v[list(self.pivots)].copy()

    def size(self) -> int:
        return self.field.p**self.dim

    def elements(self) -> np.ndarray:
        """All p^dim vectors, in lexicographic order of their coordinates."""
        limit = get_settings().enum_max_size
        if self.size() > limit:
            raise SizeLimitError(
                f"subspace has {self.size()} elements; enumeration is limited to {limit}"
            )
        coefficients = coefficient_block(self.field.p, self.dim, 0, self.size())
        return (coefficients @ self.basis) % self.field.p


def coefficient_block(p: int, dim: int, start: int, stop: int) -> np.ndarray:
    """Rows start..stop-1 of the lexicographic list of F^dim (first digit most significant)."""
    index = np.arange(start, stop, dtype=np.int64)
    powers = p ** np.arange(dim - 1, -1, -1, dtype=np.int64)
    return (index[:, None] // powers[None, :]) % p


def _check_ambient(a: Subspace, b: Subspace) -> None:
    _same_field(a, b)
    if a.ambient_dim != b.ambient_dim:
        raise FieldMismatchError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def kernel_basis(m: GFMatrix) -> Subspace:
    p = m.field.p
    reduced, pivots = _rref_array(m.entries, p)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    vectors = np.zeros((len(free), m.cols), dtype=np.int64)
    for i, f in enumerate(free):
        vectors[i, f] = 1
        for row, col in enumerate(pivots):
            vectors[i, col] = -reduced[row, f] % p
    return Subspace(m.field, m.cols, vectors)


def image_basis(m: GFMatrix) -> Subspace:
    return Subspace(m.field, m.rows, m.entries.T)


def ortho_complement(s: Subspace) -> Subspace:
    return kernel_basis(s.basis_matrix())


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return Subspace(a.field, a.ambient_dim, np.vstack([a.basis, b.basis]))


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return ortho_complement(subspace_sum(ortho_complement(a), ortho_complement(b)))


def subspace_ops(a: Subspace, b: Subspace, op: SubspaceOp) -> Subspace | bool:
    _check_ambient(a, b)
    if op == "equal":
        return a == b
    if op == "contains":
        return a.contains(b)
    if op == "intersect":
        return intersect(a, b)
    if op == "sum":
        return subspace_sum(a, b)
    raise FieldMismatchError(f"unknown subspace operation {op!r}")


def complement_basis(target: Subspace, within: Subspace) -> np.ndarray:
    """Rows completing `target` to a basis of F^n: first inside `within`, then outside it."""
    _check_ambient(target, within)
    if not within.contains(target):
        raise ValidationError("target is not contained in within")
    chosen: list[np.ndarray] = []
    current = target
    candidates = list(within.basis) + list(np.eye(within.ambient_dim, dtype=np.int64))
    for candidate in candidates:
        if current.dim == within.ambient_dim:
            break
        if not current.contains_vector(candidate):
            chosen.append(candidate)
            current = Subspace(
                current.field, current.ambient_dim, np.vstack([current.basis, candidate])
            )
    return _rows(chosen, within.ambient_dim)


def projection_parts(target: Subspace, within: Subspace) -> tuple[GFMatrix, np.ndarray]:
    """The projection P onto `target` and the map x -> coordinates of P·x in target.basis."""
    field = target.field
    n = target.ambient_dim
    columns = np.vstack([target.basis, complement_basis(target, within)]).T
    change = inverse(GFMatrix(field, columns)).entries
    coordinates = change[: target.dim]
    projection = (target.basis.T @ coordinates) % field.p
    return GFMatrix(field, projection.reshape(n, n)), coordinates.reshape(target.dim, n)


def projection_onto(target: Subspace, within: Subspace) -> GFMatrix:
    return projection_parts(target, within)[0]


def quotient_representatives(big: Subspace, small: Subspace) -> GFMatrix:
    """Columns form a basis of representatives of big/small (small's pivots zeroed)."""
    _check_ambient(big, small)
    if not big.contains(small):
        raise ValidationError("small is not contained in big")
    survivors = Subspace(big.field, big.ambient_dim, small.reduce(big.basis))
    return GFMatrix(big.field, survivors.basis.T.reshape(big.ambient_dim, survivors.dim))
