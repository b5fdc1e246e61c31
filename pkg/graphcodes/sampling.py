"""Random isotropic subspaces and random graph codes for property tests."""

from __future__ import annotations

import numpy as np

from graphcodes.errors import ValidationError
from graphcodes.field import FieldSpec
from graphcodes.graph_code import GammaBlocks, GraphCode, assemble
from graphcodes.linalg import GFMatrix, Subspace, rank
from graphcodes.stabilizer import StabilizerSpace, centralizer


def random_isotropic(
    field: FieldSpec, n: int, dim: int, rng: np.random.Generator
) -> StabilizerSpace:
    """Grow a basis by drawing from the centralizer of the current span."""
    if not 0 <= dim <= n:
        raise ValidationError(f"an isotropic subspace of F^{n} ⊕ F^{n} has dim 0..{n}, got {dim}")
    p = field.p
    current = StabilizerSpace(field, n, Subspace.zero(field, 2 * n))
    while current.dim < dim:
        allowed = centralizer(current)
        vector = (rng.integers(0, p, size=allowed.dim) @ allowed.basis) % p
        if current.generators.contains_vector(vector):
            continue
        current = StabilizerSpace.from_generators(
            field, n, np.vstack([current.basis, vector]), check=False
        )
    return current


def random_graph_code(
    field: FieldSpec,
    n_inputs: int,
    n_aux: int,
    n_outputs: int,
    rng: np.random.Generator,
    zero_diagonal: bool = False,
) -> GraphCode:
    """A random faithful graph code: [B C] has full column rank, A is random symmetric."""
    if n_inputs + n_aux > n_outputs:
        raise ValidationError(
            f"{n_inputs} inputs and {n_aux} auxiliary vertices cannot inject into "
            f"{n_outputs} outputs"
        )
    p = field.p
    columns = n_inputs + n_aux
    while True:
        bc = rng.integers(0, p, size=(n_outputs, columns))
        if rank(GFMatrix(field, bc)) == columns:
            break
    upper = np.triu(rng.integers(0, p, size=(n_outputs, n_outputs)))
    a = upper + np.triu(upper, 1).T
    if zero_diagonal:
        np.fill_diagonal(a, 0)
    parts = GammaBlocks(
        a=GFMatrix(field, a),
        b=GFMatrix(field, bc[:, :n_inputs]),
        c=GFMatrix(field, bc[:, n_inputs:]),
    )
    return assemble(parts, n_inputs, n_aux)
