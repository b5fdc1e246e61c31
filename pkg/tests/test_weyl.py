from itertools import product
import unittest
from unittest.mock import patch

import numpy as np

from graphcodes.convert import graph_to_stabilizer, stabilizer_to_graph
from graphcodes.errors import SizeLimitError, UnsupportedCharacterError, ValidationError
from graphcodes.field import FieldSpec
from graphcodes.fixtures import FIXTURE_NAMES, load_fixture
from graphcodes.graph_code import GraphCode
from graphcodes.sampling import random_graph_code, random_isotropic
from graphcodes.settings import Settings
from graphcodes.stabilizer import SymplecticVector, distance_algebraic
from graphcodes.weyl import (
    UNITARY_TOL,
    WeylOperator,
    code_projector,
    distance_kl,
    encode_isometry,
    epsilon,
    equivalence_check,
    isometry_check,
    kl_check,
    labels_of_weight,
    local_fourier,
    render_reports,
    shifted_phases,
    stabilizer_eigencheck,
    stabilizer_projector,
    tau_character,
    tau_values,
    weyl_apply,
    weyl_compose,
    weyl_equivalent,
    weyl_matrix,
)

GF2 = FieldSpec(2)
GF3 = FieldSpec(3)

HADAMARD = GraphCode(GF2, 1, 0, 1, [[0, 1], [1, 0]])


def all_labels(field: FieldSpec, n: int) -> list[SymplecticVector]:
    return [
        SymplecticVector.from_array(field, row)
        for row in product(range(field.p), repeat=2 * n)
    ]


def random_label(field: FieldSpec, n: int, rng: np.random.Generator) -> SymplecticVector:
    return SymplecticVector.from_array(field, rng.integers(0, field.p, size=2 * n))


def fixture_n(name: str) -> tuple[FieldSpec, int]:
    code = load_fixture(name).payload
    if isinstance(code, GraphCode):
        return code.field, code.n_outputs
    return code.field, code.n


class WeylOperatorTests(unittest.TestCase):
    def test_shift_and_phase_on_one_qutrit(self) -> None:
        shift = weyl_matrix(SymplecticVector(GF3, [0], [1]))
        phase = weyl_matrix(SymplecticVector(GF3, [1], [0]))

        self.assertEqual(shift[1, 0], 1)
        self.assertEqual(shift[0, 2], 1)
        np.testing.assert_allclose(np.diag(phase), epsilon(np.arange(3), 3))

    def test_operator_wrapper(self) -> None:
        label = SymplecticVector(GF3, [1, 2], [0, 1])
        w = WeylOperator(label)

        self.assertEqual(w.n, 2)
        np.testing.assert_allclose(w.matrix(), weyl_matrix(label))
        np.testing.assert_allclose(weyl_apply(w, np.eye(9)), weyl_matrix(label))

    def test_matrices_are_unitary(self) -> None:
        for field, n in ((GF2, 2), (GF3, 2)):
            for label in all_labels(field, n):
                w = weyl_matrix(label)
                deviation = np.max(np.abs(w.conj().T @ w - np.eye(field.p**n)))
                self.assertLessEqual(deviation, UNITARY_TOL)

    def test_composition_rule_exhaustively(self) -> None:
        for field, n in ((GF2, 1), (GF2, 2), (GF3, 1), (GF3, 2)):
            labels = all_labels(field, n)
            matrices = {label: weyl_matrix(label) for label in labels}
            for u, v in product(labels, repeat=2):
                phase, total = weyl_compose(u, v)
                np.testing.assert_allclose(
                    matrices[u] @ matrices[v], phase * matrices[total], atol=1e-12
                )

    def test_composition_phase_depends_on_order(self) -> None:
        x = SymplecticVector(GF3, [0], [1])
        z = SymplecticVector(GF3, [1], [0])

        phase, total = weyl_compose(x, z)
        self.assertAlmostEqual(phase, complex(epsilon(-1, 3)))
        self.assertEqual(total, SymplecticVector(GF3, [1], [1]))

        phase, _ = weyl_compose(z, x)
        self.assertAlmostEqual(phase, 1)

    def test_composition_on_fixture_sizes(self) -> None:
        rng = np.random.default_rng(17)
        for name in FIXTURE_NAMES:
            field, n = fixture_n(name)
            for _ in range(500):
                u, v = random_label(field, n, rng), random_label(field, n, rng)
                phase, total = weyl_compose(u, v)
                state = rng.normal(size=(field.p**n, 1)) + 1j * rng.normal(size=(field.p**n, 1))
                np.testing.assert_allclose(
                    weyl_apply(u, weyl_apply(v, state)),
                    phase * weyl_apply(total, state),
                    atol=1e-10,
                )

    def test_simulator_size_limit(self) -> None:
        with patch("graphcodes.weyl.get_settings", return_value=Settings(sim_max_dim=8)):
            with self.assertRaises(SizeLimitError):
                weyl_matrix(SymplecticVector.zero(GF2, 4))


class LocalFourierTests(unittest.TestCase):
    def test_fourier_exchanges_shift_and_phase(self) -> None:
        for field in (GF2, GF3, FieldSpec(5)):
            p = field.p
            f = local_fourier(0, 1, field)
            shift = weyl_matrix(SymplecticVector(field, [0], [1]))
            phase = weyl_matrix(SymplecticVector(field, [1], [0]))
            back = weyl_matrix(SymplecticVector(field, [0], [-1]))

            np.testing.assert_allclose(f @ shift @ f.conj().T, phase, atol=1e-12)
            np.testing.assert_allclose(f @ phase @ f.conj().T, back, atol=1e-12)
            grid = np.arange(p)
            parity = ((grid[:, None] + grid[None, :]) % p == 0).astype(float)
            np.testing.assert_allclose(f @ f, parity, atol=1e-12)

    def test_fourier_acts_on_one_system(self) -> None:
        f = local_fourier(1, 2, GF3)
        shift = weyl_matrix(SymplecticVector(GF3, [0, 0], [0, 1]))
        phase = weyl_matrix(SymplecticVector(GF3, [0, 1], [0, 0]))

        np.testing.assert_allclose(f @ shift @ f.conj().T, phase, atol=1e-12)

    def test_system_out_of_range(self) -> None:
        with self.assertRaises(ValidationError):
            local_fourier(2, 2, GF2)


class EncoderTests(unittest.TestCase):
    def setUp(self) -> None:
        self.five_qubit = load_fixture("fig1_graph.json").payload

    def test_hadamard_code(self) -> None:
        iso = encode_isometry(HADAMARD)

        np.testing.assert_allclose(iso.matrix, np.array([[1, 1], [1, -1]]) / np.sqrt(2))
        self.assertEqual(distance_kl(iso), 1)

    def test_single_output_state(self) -> None:
        iso = encode_isometry(GraphCode(GF2, 0, 0, 1, [[0]]))

        np.testing.assert_allclose(iso.matrix, np.array([[1], [1]]) / np.sqrt(2))

    def test_character(self) -> None:
        self.assertEqual(tau_character(self.five_qubit, [0, 1, 0, 0, 0, 1]), -1)
        self.assertEqual(tau_character(self.five_qubit, [0, 0, 0, 0, 0, 0]), 1)
        g = GraphCode(GF3, 0, 0, 1, [[1]])
        self.assertAlmostEqual(tau_character(g, [1]), complex(epsilon(2, 3)))

    def test_character_cocycle_on_fixtures(self) -> None:
        rng = np.random.default_rng(23)
        for name in FIXTURE_NAMES:
            code = load_fixture(name).payload
            g = code if isinstance(code, GraphCode) else stabilizer_to_graph(code)
            if g.p == 2 and np.any(np.diag(g.gamma.entries)):
                continue
            a = rng.integers(0, g.p, size=(500, g.n_vertices))
            b = rng.integers(0, g.p, size=(500, g.n_vertices))
            cross = np.einsum("ki,ij,kj->k", a, g.gamma.entries, b)
            with self.subTest(name=name):
                np.testing.assert_allclose(
                    tau_values(g, a + b),
                    tau_values(g, a) * tau_values(g, b) * epsilon(cross, g.p),
                    atol=1e-12,
                )

    def test_binary_character_needs_zero_diagonal(self) -> None:
        g = GraphCode(GF2, 0, 0, 2, [[1, 1], [1, 0]])

        with self.assertRaises(UnsupportedCharacterError):
            encode_isometry(g)

    def test_five_qubit_code(self) -> None:
        iso = encode_isometry(self.five_qubit)

        self.assertEqual(iso.matrix.shape, (32, 2))
        self.assertTrue(isometry_check(iso).passed)
        self.assertTrue(stabilizer_eigencheck(self.five_qubit, iso).passed)
        self.assertTrue(kl_check(iso, 2).passed)
        self.assertFalse(kl_check(iso, 3).passed)
        self.assertEqual(distance_kl(iso), 3)

    def test_knill_laflamme_report(self) -> None:
        report = kl_check(encode_isometry(self.five_qubit), 3)
        weights = report.details["weights"]

        self.assertEqual([entry["checked"] for entry in weights], [1, 15, 90, 270])
        self.assertEqual([entry["pass"] for entry in weights], [True, True, True, False])
        self.assertIsNotNone(weights[3]["first_violation"])
        with self.assertRaises(ValidationError):
            kl_check(encode_isometry(self.five_qubit), -1)

    def test_self_dual_graph(self) -> None:
        g = load_fixture("fig6_gamma.json").payload
        iso = encode_isometry(g)

        self.assertEqual(iso.logical_dim, 4)
        self.assertTrue(iso.is_isometry)
        self.assertTrue(stabilizer_eigencheck(g, iso).passed)
        self.assertEqual(distance_kl(iso), 2)

    def test_ternary_codes(self) -> None:
        rng = np.random.default_rng(31)
        for _ in range(10):
            g = random_graph_code(GF3, 1, int(rng.integers(0, 2)), 3, rng)
            iso = encode_isometry(g)
            with self.subTest(gamma=g.gamma.tolist()):
                self.assertTrue(iso.is_isometry)
                self.assertTrue(stabilizer_eigencheck(g, iso).passed)

    def assert_distances_agree(self, g: GraphCode) -> None:
        with self.subTest(gamma=g.gamma.tolist(), inputs=g.n_inputs, aux=g.n_aux):
            iso = encode_isometry(g)
            self.assertTrue(iso.is_isometry)
            self.assertEqual(distance_kl(iso), distance_algebraic(graph_to_stabilizer(g)))

    def random_code(
        self, field: FieldSpec, max_outputs: int, rng: np.random.Generator
    ) -> GraphCode:
        n_outputs = int(rng.integers(1, max_outputs + 1))
        n_inputs = int(rng.integers(0, n_outputs + 1))
        n_aux = int(rng.integers(0, n_outputs - n_inputs + 1))
        return random_graph_code(field, n_inputs, n_aux, n_outputs, rng, zero_diagonal=True)

    def test_simulated_distance_matches_algebraic_distance(self) -> None:
        rng = np.random.default_rng(8)
        for _ in range(25):
            self.assert_distances_agree(self.random_code(GF2, 5, rng))

    def test_simulated_distance_matches_algebraic_distance_over_gf3(self) -> None:
        rng = np.random.default_rng(9)
        for _ in range(5):
            self.assert_distances_agree(self.random_code(GF3, 3, rng))

    def test_labels_of_weight(self) -> None:
        labels = list(labels_of_weight(GF2, 3, 2))

        self.assertEqual(len(labels), 27)
        self.assertEqual(len(set(labels)), 27)
        self.assertEqual(len(list(labels_of_weight(GF3, 2, 0))), 1)


class ProjectorTests(unittest.TestCase):
    def test_projector_has_the_code_dimension(self) -> None:
        s = load_fixture("self_dual_MM.json").payload
        projector = stabilizer_projector(s)

        np.testing.assert_allclose(projector @ projector, projector, atol=1e-12)
        np.testing.assert_allclose(projector, projector.conj().T, atol=1e-12)
        self.assertAlmostEqual(np.trace(projector).real, 4)

    def test_conjugation_shifts_the_phases(self) -> None:
        rng = np.random.default_rng(13)
        for field, n in ((GF2, 3), (GF3, 2)):
            for _ in range(20):
                s = random_isotropic(field, n, int(rng.integers(1, n + 1)), rng)
                u = random_label(field, n, rng)
                phases = rng.integers(0, field.p, size=s.dim)
                w = weyl_matrix(u)

                conjugated = w @ stabilizer_projector(s, phases) @ w.conj().T
                expected = stabilizer_projector(s, shifted_phases(s, u, phases))

                np.testing.assert_allclose(conjugated, expected, atol=1e-10)

    def test_projector_from_code_isometry(self) -> None:
        iso = encode_isometry(load_fixture("fig1_graph.json").payload)
        projector = code_projector(iso)

        self.assertAlmostEqual(np.trace(projector).real, 2)

    def test_equivalence_search(self) -> None:
        s = load_fixture("self_dual_MM.json").payload
        projector = stabilizer_projector(s)
        u = SymplecticVector(GF2, [1, 0, 0, 0], [0, 1, 0, 0])
        w = weyl_matrix(u)

        identity = weyl_equivalent(projector, projector, 4, GF2)
        self.assertEqual(identity, SymplecticVector.zero(GF2, 4))
        found = weyl_equivalent(projector, w @ projector @ w.conj().T, 4, GF2)
        self.assertIsNotNone(found)
        self.assertIsNone(weyl_equivalent(projector, np.eye(16), 4, GF2))

    def test_graph_codes_match_their_stabilizer_codes(self) -> None:
        for name in ("fig1_graph.json", "fig6_gamma.json"):
            with self.subTest(name=name):
                report = equivalence_check(load_fixture(name).payload)
                self.assertTrue(report.passed)
                self.assertIsNotNone(report.details["label"])

    def test_report_rendering(self) -> None:
        g = load_fixture("fig1_graph.json").payload
        iso = encode_isometry(g)
        text = render_reports([isometry_check(iso), kl_check(iso, 1)])

        self.assertIn("isometry: PASS", text)
        self.assertIn("knill_laflamme: PASS", text)
        self.assertIn("  weight 1: 15 operators, 0 violations", text)


if __name__ == "__main__":
    unittest.main()
