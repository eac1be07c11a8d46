#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import math
from unittest import mock
import numpy as np
from config.basic_config import basic_config
from core.basic_unit import Unit
from core.data_processor import case_data, load_golden_data
from core.eigen_solver import (
    Spectrum,
    bisection_eigenvalues,
    eigenvalues,
    inertia_numeric,
    mu_minus,
    mu_plus,
    multiplicity,
    spectral_moments,
    sturm_count,
    tridiagonalize,
)
from core.enumeration import enumerate_connected
from core.exceptions import GraphOrderError, NoPositiveEigenvalueError, NonSymmetricMatrixError
from core.threshold_graph import adjacency, antiregular, edge_count, parse_creation, to_string, triangle_count


GOLDEN = load_golden_data()['TestEigenSolver']


def _spectrum(text):
    return eigenvalues(adjacency(parse_creation(text)))


class TestEigenSolver(Unit):
    def test_complete_graph_on_two_vertices(self):
        self.assertSpectrumClose(eigenvalues([[0, 1], [1, 0]]), [-1.0, 1.0], delta=1e-14)

    def test_path_on_three_vertices(self):
        root = math.sqrt(2.0)
        self.assertSpectrumClose(_spectrum('001'), [-root, 0.0, root], delta=1e-12)

    @case_data(GOLDEN)
    def test_antiregular_four_spectrum(self, case):
        self.assertSpectrumClose(_spectrum(case['input']), case['expect'], delta=1e-4)

    def test_single_vertex_and_diagonal_matrices(self):
        self.assertSpectrumClose(eigenvalues([[2.5]]), [2.5])
        self.assertSpectrumClose(eigenvalues(np.diag([3.0, -1.0, 2.0])), [-1.0, 2.0, 3.0], delta=1e-14)

    def test_dense_symmetric_matrix(self):
        rng = np.random.default_rng(7)
        data = rng.normal(size=(9, 9))
        matrix = (data + data.T) / 2.0
        self.assertSpectrumClose(eigenvalues(matrix), np.linalg.eigvalsh(matrix), delta=1e-10)

    def test_values_sorted_and_deterministic(self):
        matrix = adjacency(parse_creation('0^3 1^2 0^4 1^6 0^5 1^3'))
        first, second = eigenvalues(matrix), eigenvalues(matrix)
        self.assertEqual(first.values, second.values)
        self.assertEqual(list(first.values), sorted(first.values))
        self.assertEqual(first.order, 23)

    def test_rejects_non_symmetric(self):
        with self.assertRaises(NonSymmetricMatrixError):
            eigenvalues([[0, 1], [0, 0]])
        with self.assertRaises(NonSymmetricMatrixError):
            eigenvalues([[0, 1, 0], [1, 0, 1]])
        with self.assertRaises(NonSymmetricMatrixError):
            eigenvalues(np.zeros((0, 0)))

    def test_rejects_order_above_cap(self):
        with mock.patch.object(basic_config, 'max_order', 3):
            with self.assertRaises(GraphOrderError):
                eigenvalues(np.eye(4))

    def test_tridiagonalize_preserves_invariants(self):
        matrix = adjacency(parse_creation('0^2 1 0^3 1^2 0 1')).entries
        diagonal, offdiagonal = tridiagonalize(matrix)
        self.assertAlmostEqual(float(np.sum(diagonal)), float(np.trace(matrix)), delta=1e-12)
        frobenius = float(np.sum(diagonal ** 2) + 2.0 * np.sum(offdiagonal ** 2))
        self.assertAlmostEqual(frobenius, float(np.sum(matrix ** 2)), delta=1e-10)

    def test_sturm_count(self):
        diagonal, offdiagonal = tridiagonalize(adjacency(antiregular(4)))
        self.assertEqual(sturm_count(diagonal, offdiagonal, -2.0), 0)
        self.assertEqual(sturm_count(diagonal, offdiagonal, -1.2), 1)
        self.assertEqual(sturm_count(diagonal, offdiagonal, 0.0), 2)
        self.assertEqual(sturm_count(diagonal, offdiagonal, 1.0), 3)
        self.assertEqual(sturm_count(diagonal, offdiagonal, 3.0), 4)

    def test_oracle_agreement_small_orders(self):
        for n in range(2, 11):
            for graph in enumerate_connected(n):
                matrix = adjacency(graph)
                computed = eigenvalues(matrix)
                self.assertSpectrumClose(computed, bisection_eigenvalues(matrix), delta=1e-8, msg=to_string(graph))
                self.assertSpectrumClose(computed, np.linalg.eigvalsh(matrix.entries), delta=1e-8, msg=to_string(graph))

    def test_moment_identities(self):
        slack = 1e-6
        for n in range(2, 13):
            for graph in enumerate_connected(n):
                values = eigenvalues(adjacency(graph))
                self.assertAlmostEqual(spectral_moments(values, 1), 0.0, delta=slack)
                self.assertAlmostEqual(spectral_moments(values, 2), 2 * edge_count(graph), delta=slack)
                self.assertAlmostEqual(spectral_moments(values, 3), 6 * triangle_count(graph), delta=slack)

    def test_largest_eigenvalue_range(self):
        for n in range(2, 10):
            for graph in enumerate_connected(n):
                values = eigenvalues(adjacency(graph))
                complete = to_string(graph) == '0' + '1' * (n - 1)
                if complete:
                    self.assertAlmostEqual(values.lambda_max, n - 1, delta=1e-10)
                else:
                    self.assertLess(values.lambda_max, n - 1 - basic_config.tol)
                self.assertGreaterEqual(values.lambda_max, 2 * edge_count(graph) / n - basic_config.tol)

    def test_inertia_numeric(self):
        self.assertEqual(inertia_numeric(Spectrum(values=[-1.0, 1.0])).as_tuple(), (1, 0, 1))
        self.assertEqual(inertia_numeric(_spectrum('0001')).as_tuple(), (1, 2, 1))
        triple = inertia_numeric(eigenvalues(adjacency(antiregular(7))))
        self.assertEqual(triple.as_tuple(), (3, 1, 3))
        self.assertEqual(triple.order, 7)

    def test_mu_minus(self):
        self.assertIsNone(mu_minus(Spectrum(values=[-1.0, 1.0])))
        self.assertAlmostEqual(mu_minus(eigenvalues(adjacency(antiregular(4)))), -1.4812, delta=1e-4)
        self.assertAlmostEqual(mu_minus(eigenvalues(adjacency(antiregular(3)))), -math.sqrt(2.0), delta=1e-12)

    def test_mu_plus(self):
        self.assertEqual(mu_plus(Spectrum(values=[-1.0, 1.0])), 1.0)
        self.assertAlmostEqual(mu_plus(eigenvalues(adjacency(antiregular(4)))), 0.3111, delta=1e-4)
        self.assertAlmostEqual(mu_plus(_spectrum('0001')), math.sqrt(3.0), delta=1e-12)
        with self.assertRaises(NoPositiveEigenvalueError):
            mu_plus(Spectrum(values=[-1.0, 0.0, 1e-9]))

    def test_multiplicity(self):
        self.assertEqual(multiplicity(_spectrum('0001'), 0.0), 2)
        # K_4 的谱为 {-1, -1, -1, 3}
        self.assertEqual(multiplicity(_spectrum('0111'), -1.0), 3)
        self.assertEqual(multiplicity(eigenvalues(adjacency(antiregular(6))), -1.0), 1)

    def test_spectrum_accessors(self):
        values = Spectrum(values=[3.0, -2.0, 0.5])
        self.assertEqual(values.values, (-2.0, 0.5, 3.0))
        self.assertEqual((values.lambda_min, values.lambda_max), (-2.0, 3.0))
        self.assertEqual(values.at(2), 0.5)
        self.assertEqual(values.tol, basic_config.tol)
