"""Conversions between graph codes and stabilizer codes.

graph -> stabilizer:
    S = {(Ak + t | k) : k ∈ ker Bᵀ ∩ ker Cᵀ, t ∈ ran C}

stabilizer -> graph goes through a reduction of S:
    T       degenerate part, {t : (t | 0) ∈ S}
    G_nat   T^⊥
    K       shift parts of S
    R       symmetric, with (Rk | k) ∈ S for every k ∈ K
and then B = representatives of K^⊥/T, C = a basis of T, A = R.

All choices (bases, complements, representatives) are canonical, so both
directions are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
import logging

import numpy as np

from graphcodes.errors import ConsistencyError, ValidationError
from graphcodes.graph_code import GammaBlocks, GraphCode, assemble, blocks, validate
from graphcodes.linalg import (
    GFMatrix,
    Subspace,
    augment,
    image_basis,
    is_symmetric,
    kernel_basis,
    ortho_complement,
    projection_onto,
    projection_parts,
    quotient_representatives,
    transpose,
)
from graphcodes.models import CheckReport
from graphcodes.rendering import render
from graphcodes.stabilizer import (
    StabilizerSpace,
    code_parameters,
    degenerate_part,
    is_isotropic,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionData:
    t: Subspace
    g_nat: Subspace
    k: Subspace
    s_nat: Subspace
    r: GFMatrix
    p_proj: GFMatrix
    q_proj: GFMatrix


def graph_to_stabilizer(g: GraphCode) -> StabilizerSpace:
    g.ensure_valid()
    field, p = g.field, g.p
    parts = blocks(g)
    n = g.n_outputs

    k_space = kernel_basis(transpose(augment(parts.b, parts.c)))
    t_space = image_basis(parts.c)
    rows = [np.concatenate([(parts.a.entries @ k) % p, k]) for k in k_space.basis]
    rows += [np.concatenate([t, np.zeros(n, dtype=np.int64)]) for t in t_space.basis]
    s = StabilizerSpace.from_generators(field, n, rows, check=False)
    if not is_isotropic(s):
        raise ConsistencyError("graph code produced a non-isotropic stabilizer space")
    logger.debug(
        "graph -> stabilizer: |X|=%d |J|=%d |Y|=%d, dim K=%d dim T=%d dim S=%d",
        g.n_inputs,
        g.n_aux,
        n,
        k_space.dim,
        t_space.dim,
        s.dim,
    )
    return s


def reduce(s: StabilizerSpace) -> ReductionData:
    if not is_isotropic(s):
        raise ValidationError("stabilizer space is not isotropic")
    field, n, p = s.field, s.n, s.p

    # (shift | phase) order puts the shift pivots first: rows with a shift
    # pivot give K, the rest are phase-only and give T. Phases of the K rows
    # come out already reduced modulo T.
    swapped = Subspace(field, 2 * n, np.hstack([s.basis[:, n:], s.basis[:, :n]]))
    shift_rows = [i for i, pivot in enumerate(swapped.pivots) if pivot < n]
    phase_rows = [i for i, pivot in enumerate(swapped.pivots) if pivot >= n]
    k_basis = swapped.basis[shift_rows, :n]
    phases = swapped.basis[shift_rows, n:]
    t_space = Subspace(field, n, swapped.basis[phase_rows, n:])
    k_space = Subspace(field, n, k_basis)

    if t_space != degenerate_part(s):
        raise ConsistencyError("degenerate part disagrees with the row-reduced split")

    g_nat = ortho_complement(t_space)
    q_proj = projection_onto(g_nat, Subspace.full(field, n))
    p_proj, coordinates = projection_parts(k_space, g_nat)

    identity = np.eye(n, dtype=np.int64)
    phi = (phases.T @ coordinates) % p
    r = GFMatrix(field, (phi + phi.T @ (identity - p_proj.entries)) % p)
    s_nat = Subspace(field, 2 * n, np.hstack([phases, k_basis]))

    data = ReductionData(
        t=t_space, g_nat=g_nat, k=k_space, s_nat=s_nat, r=r, p_proj=p_proj, q_proj=q_proj
    )
    _check_reduction(s, data)
    logger.debug(
        "reduce: n=%d dim S=%d dim T=%d dim K=%d", n, s.dim, t_space.dim, k_space.dim
    )
    return data


def _check_reduction(s: StabilizerSpace, data: ReductionData) -> None:
    p, n = s.p, s.n
    r, pp, qq = data.r.entries, data.p_proj.entries, data.q_proj.entries
    if not is_symmetric(data.r):
        raise ConsistencyError("R is not symmetric")
    if not np.array_equal((pp @ pp) % p, pp) or not np.array_equal((qq @ qq) % p, qq):
        raise ConsistencyError("projection is not idempotent")
    if not np.array_equal((qq.T @ r @ qq) % p, r):
        raise ConsistencyError("R does not factor through q")
    rows = [np.concatenate([(r @ k) % p, k]) for k in data.k.basis]
    rows += [np.concatenate([t, np.zeros(n, dtype=np.int64)]) for t in data.t.basis]
    if Subspace(s.field, 2 * n, rows) != s.generators:
        raise ConsistencyError("reduction does not reconstruct the stabilizer space")


def stabilizer_to_graph(s: StabilizerSpace, check: bool = True) -> GraphCode:
    if not is_isotropic(s):
        raise ValidationError("stabilizer space is not isotropic")
    data = reduce(s)

    k_perp = ortho_complement(data.k)
    if not k_perp.contains(data.t):
        raise ConsistencyError("degenerate part is not contained in K^⊥")
    representatives = quotient_representatives(k_perp, data.t)
    v = transpose(data.q_proj) @ representatives
    w = GFMatrix(s.field, data.t.basis.T.reshape(s.n, data.t.dim))

    g = assemble(GammaBlocks(a=data.r, b=v, c=w), n_inputs=v.cols, n_aux=w.cols)
    violations = validate(g)
    if violations:
        raise ConsistencyError(
            "converted graph code is invalid: " + "; ".join(v.message for v in violations)
        )
    logger.debug(
        "stabilizer -> graph: |X|=%d |J|=%d |Y|=%d", g.n_inputs, g.n_aux, g.n_outputs
    )
    if check and graph_to_stabilizer(g) != s:
        raise ConsistencyError("converted graph code does not reproduce the stabilizer space")
    return g


def _stage(kind: str, code: GraphCode | StabilizerSpace, passed: bool) -> dict:
    if isinstance(code, GraphCode):
        n, k = code_parameters(graph_to_stabilizer(code))
    else:
        n, k = code_parameters(code)
    return {"kind": kind, "n": n, "k": k, "pass": passed}


def roundtrip_check(code: GraphCode | StabilizerSpace) -> CheckReport:
    """Convert there and back, comparing every stabilizer stage with the first."""
    stages: list[dict] = []
    if isinstance(code, GraphCode):
        first = graph_to_stabilizer(code)
        graph = stabilizer_to_graph(first, check=False)
        second = graph_to_stabilizer(graph)
        passed = first == second
        stages.append(_stage("graph", code, True))
        stages.append(_stage("stabilizer", first, True))
        stages.append(_stage("graph", graph, True))
        stages.append(_stage("stabilizer", second, passed))
    else:
        graph = stabilizer_to_graph(code, check=False)
        second = graph_to_stabilizer(graph)
        passed = code == second
        stages.append(_stage("stabilizer", code, True))
        stages.append(_stage("graph", graph, True))
        stages.append(_stage("stabilizer", second, passed))
    if not passed:
        logger.warning("round trip failed")
    return CheckReport(check="roundtrip", passed=passed, details={"stages": stages})


def render_roundtrip(report: CheckReport) -> str:
    return render("roundtrip.txt.j2", report=report)
