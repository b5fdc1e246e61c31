"""Graph codes: a symmetric Γ over GF(p) with input, auxiliary and output vertices.

Vertices are indexed inputs first, then auxiliary, then outputs. Only the
blocks touching the outputs may be nonzero:

    Γ = [[0, 0, Bᵀ],
         [0, 0, Cᵀ],
         [B, C, A ]]
"""

from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import Literal

import networkx as nx
import numpy as np

from graphcodes.errors import ValidationError
from graphcodes.field import FieldSpec, Scalar
from graphcodes.linalg import GFMatrix, augment, is_symmetric, rank
from graphcodes.rendering import render
from graphcodes.stabilizer import StabilizerSpace

logger = logging.getLogger(__name__)

Role = Literal["input", "aux", "output"]

_ROLE_PREFIX: dict[str, str] = {"input": "x", "aux": "j", "output": "y"}


@dataclass(frozen=True)
class Violation:
    invariant: str
    message: str
    indices: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class GammaBlocks:
    a: GFMatrix
    b: GFMatrix
    c: GFMatrix


@dataclass(frozen=True)
class GraphCode:
    field: FieldSpec
    n_inputs: int
    n_aux: int
    n_outputs: int
    gamma: GFMatrix

    def __post_init__(self) -> None:
        for name in ("n_inputs", "n_aux", "n_outputs"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValidationError(f"{name} must be a non-negative integer, got {value!r}")
        if not isinstance(self.gamma, GFMatrix):
            object.__setattr__(self, "gamma", GFMatrix(self.field, self.gamma))
        if self.gamma.field != self.field:
            raise ValidationError(f"gamma is over {self.gamma.field}, code is over {self.field}")
        size = self.n_vertices
        if self.gamma.shape != (size, size):
            raise ValidationError(
                f"gamma has shape {self.gamma.shape}, expected ({size}, {size}) for "
                f"{self.n_inputs}+{self.n_aux}+{self.n_outputs} vertices"
            )

    @property
    def n_vertices(self) -> int:
        return self.n_inputs + self.n_aux + self.n_outputs

    @property
    def p(self) -> int:
        return self.field.p

    def role(self, vertex: int) -> Role:
        if vertex < self.n_inputs:
            return "input"
        if vertex < self.n_inputs + self.n_aux:
            return "aux"
        return "output"

    def vertex_name(self, vertex: int) -> str:
        role = self.role(vertex)
        offset = {"input": 0, "aux": self.n_inputs, "output": self.n_inputs + self.n_aux}[role]
        return f"{_ROLE_PREFIX[role]}{vertex - offset}"

    def validate(self) -> list[Violation]:
        return validate(self)

    def ensure_valid(self) -> GraphCode:
        violations = validate(self)
        if violations:
            summary = "; ".join(f"{v.invariant}: {v.message}" for v in violations)
            raise ValidationError(f"invalid graph code ({summary})", violations)
        return self

    def blocks(self) -> GammaBlocks:
        return blocks(self)


def validate(g: GraphCode) -> list[Violation]:
    violations: list[Violation] = []
    entries = g.gamma.entries

    if not is_symmetric(g.gamma):
        rows, cols = np.nonzero(entries != entries.T)
        pairs = tuple(sorted({(int(min(r, c)), int(max(r, c))) for r, c in zip(rows, cols)}))
        violations.append(Violation("symmetric", "gamma is not symmetric", pairs))

    inner = g.n_inputs + g.n_aux
    rows, cols = np.nonzero(entries[:inner, :inner])
    if rows.size:
        pairs = tuple((int(r), int(c)) for r, c in zip(rows, cols))
        violations.append(
            Violation("zero_input_block", "input/auxiliary block of gamma is not zero", pairs)
        )

    b = GFMatrix(g.field, entries[inner:, : g.n_inputs])
    if g.n_inputs and rank(b) < g.n_inputs:
        violations.append(
            Violation(
                "b_injective",
                f"B has rank {rank(b)}, needs rank {g.n_inputs} to be injective",
            )
        )

    if g.n_inputs > g.n_outputs:
        violations.append(
            Violation(
                "inputs_le_outputs",
                f"{g.n_inputs} inputs exceed {g.n_outputs} outputs",
            )
        )
    return violations


def blocks(g: GraphCode) -> GammaBlocks:
    inner = g.n_inputs + g.n_aux
    entries = g.gamma.entries
    return GammaBlocks(
        a=GFMatrix(g.field, entries[inner:, inner:]),
        b=GFMatrix(g.field, entries[inner:, : g.n_inputs]),
        c=GFMatrix(g.field, entries[inner:, g.n_inputs : inner]),
    )


def assemble(parts: GammaBlocks, n_inputs: int, n_aux: int) -> GraphCode:
    field = parts.a.field
    n_outputs = parts.a.rows
    if parts.b.shape != (n_outputs, n_inputs) or parts.c.shape != (n_outputs, n_aux):
        raise ValidationError(
            f"block shapes A{parts.a.shape}, B{parts.b.shape}, C{parts.c.shape} do not fit "
            f"{n_inputs} inputs and {n_aux} auxiliary vertices"
        )
    inner = n_inputs + n_aux
    gamma = np.zeros((inner + n_outputs, inner + n_outputs), dtype=np.int64)
    gamma[inner:, :n_inputs] = parts.b.entries
    gamma[:n_inputs, inner:] = parts.b.entries.T
    gamma[inner:, n_inputs:inner] = parts.c.entries
    gamma[n_inputs:inner, inner:] = parts.c.entries.T
    gamma[inner:, inner:] = parts.a.entries
    return GraphCode(field, n_inputs, n_aux, n_outputs, GFMatrix(field, gamma))


def is_faithful(g: GraphCode) -> bool:
    """B ⊕ C is injective."""
    parts = blocks(g)
    return rank(augment(parts.b, parts.c)) == g.n_inputs + g.n_aux


def to_networkx(g: GraphCode) -> nx.Graph:
    graph = nx.Graph(p=g.p)
    for vertex in range(g.n_vertices):
        graph.add_node(vertex, role=g.role(vertex), name=g.vertex_name(vertex))
    rows, cols = np.nonzero(np.triu(g.gamma.entries))
    for u, v in zip(rows.tolist(), cols.tolist()):
        graph.add_edge(u, v, weight=int(g.gamma.entries[u, v]))
    return graph


def edge_list(g: GraphCode) -> list[tuple[int, int, Scalar]]:
    graph = to_networkx(g)
    edges = [
        (min(u, v), max(u, v), Scalar(g.field, data["weight"]))
        for u, v, data in graph.edges(data=True)
    ]
    return sorted(edges, key=lambda edge: (edge[0], edge[1]))


def to_dot(g: GraphCode) -> str:
    graph = to_networkx(g)
    nodes = [
        {"id": data["name"], "role": data["role"]} for _, data in sorted(graph.nodes(data=True))
    ]
    edges = [
        {"u": graph.nodes[u]["name"], "v": graph.nodes[v]["name"], "weight": int(weight)}
        for u, v, weight in edge_list(g)
    ]
    return render("graph.dot.j2", nodes=nodes, edges=edges, show_weights=g.p > 2)


def graph_isotropic_space(g: GraphCode) -> StabilizerSpace:
    """{(Γv | v)}: the maximal isotropic space Γ defines on all vertices."""
    size = g.n_vertices
    rows = np.hstack([g.gamma.entries.T, np.eye(size, dtype=np.int64)])
    return StabilizerSpace.from_generators(g.field, size, rows)
