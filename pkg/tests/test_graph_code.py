import unittest

import numpy as np

from graphcodes.errors import ValidationError
from graphcodes.field import FieldSpec
from graphcodes.fixtures import load_fixture
from graphcodes.graph_code import (
    GraphCode,
    assemble,
    blocks,
    edge_list,
    graph_isotropic_space,
    is_faithful,
    to_dot,
    to_networkx,
)
from graphcodes.sampling import random_graph_code
from graphcodes.stabilizer import is_isotropic

GF2 = FieldSpec(2)
GF3 = FieldSpec(3)


class GraphCodeValidationTests(unittest.TestCase):
    def test_five_qubit_fixture_is_valid(self) -> None:
        g = load_fixture("fig1_graph.json").payload

        self.assertEqual((g.n_inputs, g.n_aux, g.n_outputs), (1, 0, 5))
        self.assertEqual(g.validate(), [])
        self.assertTrue(is_faithful(g))
        self.assertEqual([g.vertex_name(v) for v in (0, 1, 5)], ["x0", "y0", "y4"])

    def test_asymmetric_gamma(self) -> None:
        g = GraphCode(GF3, 0, 0, 2, [[0, 1], [2, 0]])

        violations = g.validate()

        self.assertEqual([v.invariant for v in violations], ["symmetric"])
        self.assertEqual(violations[0].indices, ((0, 1),))

    def test_edges_between_inputs_and_aux(self) -> None:
        gamma = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]

        violations = GraphCode(GF2, 1, 1, 1, gamma).validate()

        self.assertIn("zero_input_block", [v.invariant for v in violations])

    def test_b_must_be_injective(self) -> None:
        gamma = np.zeros((4, 4), dtype=np.int64)
        gamma[2:, 0] = gamma[0, 2:] = 1
        gamma[2:, 1] = gamma[1, 2:] = 1

        violations = GraphCode(GF2, 2, 0, 2, gamma).validate()

        self.assertEqual([v.invariant for v in violations], ["b_injective"])

    def test_more_inputs_than_outputs(self) -> None:
        gamma = [[0, 0, 1], [0, 0, 1], [1, 1, 0]]

        invariants = [v.invariant for v in GraphCode(GF2, 2, 0, 1, gamma).validate()]

        self.assertIn("inputs_le_outputs", invariants)

    def test_ensure_valid_raises_with_violations(self) -> None:
        with self.assertRaises(ValidationError) as ctx:
            GraphCode(GF3, 0, 0, 2, [[0, 1], [2, 0]]).ensure_valid()

        self.assertEqual(ctx.exception.violations[0].invariant, "symmetric")

    def test_shape_must_match_vertex_counts(self) -> None:
        with self.assertRaises(ValidationError):
            GraphCode(GF2, 1, 0, 1, [[0]])
        with self.assertRaises(ValidationError):
            GraphCode(GF2, -1, 0, 1, [[0]])


class GraphCodeBlocksTests(unittest.TestCase):
    def test_blocks_reassemble(self) -> None:
        g = load_fixture("fig6_gamma.json").payload
        parts = blocks(g)

        self.assertEqual(parts.b.tolist(), [[0, 0], [1, 0], [0, 1], [1, 1]])
        self.assertEqual(parts.c.tolist(), [[1], [1], [1], [1]])
        self.assertEqual(parts.a.tolist(), [[0] * 4] * 4)
        self.assertEqual(assemble(parts, g.n_inputs, g.n_aux), g)

    def test_unfaithful_code(self) -> None:
        g = GraphCode(GF2, 0, 2, 1, [[0, 0, 1], [0, 0, 1], [1, 1, 0]])

        self.assertFalse(is_faithful(g))

    def test_isotropic_space_of_the_whole_graph(self) -> None:
        g = load_fixture("fig1_graph.json").payload
        space = graph_isotropic_space(g)

        self.assertEqual(space.n, 6)
        self.assertEqual(space.dim, 6)
        self.assertTrue(is_isotropic(space))


class GraphExportTests(unittest.TestCase):
    def setUp(self) -> None:
        self.g = load_fixture("fig1_graph.json").payload

    def test_edge_list(self) -> None:
        edges = edge_list(self.g)

        self.assertEqual(len(edges), 10)
        self.assertEqual(edges[0], (0, 1, GF2(1)))
        self.assertIn((1, 5, GF2(1)), edges)
        self.assertTrue(all(u < v for u, v, _ in edges))

    def test_edge_list_rebuilds_gamma(self) -> None:
        rng = np.random.default_rng(13)
        loops = 0
        for field in (GF2, GF3, FieldSpec(5)):
            for _ in range(20):
                n_outputs = int(rng.integers(1, 6))
                n_inputs = int(rng.integers(0, n_outputs + 1))
                n_aux = int(rng.integers(0, n_outputs - n_inputs + 1))
                g = random_graph_code(field, n_inputs, n_aux, n_outputs, rng)
                gamma = np.zeros((g.n_vertices, g.n_vertices), dtype=np.int64)
                for u, v, w in edge_list(g):
                    gamma[u, v] = gamma[v, u] = int(w)
                    loops += u == v

                rebuilt = GraphCode(field, n_inputs, n_aux, n_outputs, gamma)
                self.assertEqual(rebuilt, g)
        self.assertGreater(loops, 0)

    def test_networkx_attributes(self) -> None:
        graph = to_networkx(self.g)

        self.assertEqual(graph.number_of_nodes(), 6)
        self.assertEqual(graph.number_of_edges(), 10)
        self.assertEqual(graph.nodes[0], {"role": "input", "name": "x0"})
        self.assertEqual(graph.nodes[3]["role"], "output")
        self.assertEqual(graph.edges[2, 3]["weight"], 1)

    def test_dot_output(self) -> None:
        text = to_dot(self.g)
        lines = text.splitlines()

        self.assertEqual(lines[0], 'graph "graphcode" {')
        self.assertEqual(lines[-1], "}")
        self.assertIn('  x0 [shape=circle, label="∘"];', lines)
        self.assertEqual(sum("shape=circle" in line for line in lines), 6)
        edge_lines = [line for line in lines if " -- " in line]
        self.assertEqual(len(edge_lines), 10)
        self.assertIn("  x0 -- y0;", edge_lines)
        self.assertTrue(text.endswith("}\n"))

    def test_dot_shows_weights_over_larger_fields(self) -> None:
        g = GraphCode(GF3, 0, 1, 1, [[0, 2], [2, 1]])

        lines = to_dot(g).splitlines()

        self.assertIn('  j0 [shape=circle, label="⊗"];', lines)
        self.assertIn('  j0 -- y0 [label="2"];', lines)
        self.assertIn('  y0 -- y0 [label="1"];', lines)

    def test_dot_is_deterministic(self) -> None:
        self.assertEqual(to_dot(self.g), to_dot(load_fixture("fig1_graph.json").payload))


if __name__ == "__main__":
    unittest.main()
