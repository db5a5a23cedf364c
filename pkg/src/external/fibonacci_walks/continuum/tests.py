import math

import numpy as np

from django.test import SimpleTestCase

from src.external.fibonacci_walks.continuum.methods import (
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    analytic_velocity,
    analytic_velocity_grid,
    continuum_params,
    covariant_check,
    diagonalizing_basis,
    dirac_reference,
    transport_coefficients,
    walk_dirac_distance,
)
from src.external.fibonacci_walks.core_types.models import AnglePair, SpinorField, WalkModel, WalkVariant

FIBONACCI_VARIANTS = (WalkVariant.FIB_COIN, WalkVariant.FIB_STEP)

def transport_matrix(p1: float, p2: float) -> np.ndarray:
    return np.array([[p1, p2], [p2, -p1]])

class TransportCoefficientsTests(SimpleTestCase):
    def test_zero_angles(self):
        for variant in FIBONACCI_VARIANTS:
            p1, p2 = transport_coefficients(variant, AnglePair(0.0, 0.0))
            self.assertAlmostEqual(p1, -1.0, places=15)
            self.assertAlmostEqual(p2, 0.0, places=15)

    def test_fib_coin_quarter_turn(self):
        p1, p2 = transport_coefficients(WalkVariant.FIB_COIN, AnglePair(math.pi / 4, 0.0))
        self.assertAlmostEqual(p1, -1.0 / 3.0, places=14)
        self.assertAlmostEqual(p2, -1.0 / 3.0, places=14)

    def test_standard_rejected(self):
        with self.assertRaises(ValueError):
            transport_coefficients(WalkVariant.STANDARD, AnglePair(0.3, 0.3))

class AnalyticVelocityTests(SimpleTestCase):
    def test_examples(self):
        self.assertAlmostEqual(analytic_velocity(WalkVariant.FIB_COIN, AnglePair(0.0, 0.0)), 1.0, places=14)
        self.assertAlmostEqual(
            analytic_velocity(WalkVariant.FIB_COIN, AnglePair(math.pi / 4, 0.0)), math.sqrt(2) / 3, places=14
        )
        self.assertAlmostEqual(
            analytic_velocity(WalkVariant.FIB_COIN, AnglePair(math.pi / 2, math.pi / 4)), 0.0, places=7
        )
        self.assertAlmostEqual(
            analytic_velocity(WalkVariant.FIB_STEP, AnglePair(math.pi / 3, math.pi / 6)), math.sqrt(3) / 3, places=14
        )
        self.assertAlmostEqual(analytic_velocity(WalkVariant.FIB_STEP, AnglePair(0.0, 0.0)), 1.0, places=14)

    def test_standard_walk_speed(self):
        self.assertAlmostEqual(analytic_velocity(WalkVariant.STANDARD, AnglePair(math.pi / 3, math.pi / 3)), 0.5)

    def test_velocity_identity_on_grid(self):
        axis = np.linspace(0.0, math.pi / 2, 50)
        alpha, beta = np.meshgrid(axis, axis, indexing='ij')
        for variant in FIBONACCI_VARIANTS:
            velocity = analytic_velocity_grid(variant, alpha, beta)
            self.assertEqual(velocity.shape, (50, 50))
            for (i, j), value in np.ndenumerate(velocity):
                p1, p2 = transport_coefficients(variant, AnglePair(alpha[i, j], beta[i, j]))
                self.assertLess(abs(value - math.hypot(p1, p2)), 1e-10)

class DiagonalizingBasisTests(SimpleTestCase):
    def test_pauli_x(self):
        basis = diagonalizing_basis(0.0, 1.0)
        np.testing.assert_allclose(basis.up, np.array([1.0, 1.0]) / math.sqrt(2), atol=1e-15)
        self.assertFalse(basis.degenerate)

    def test_eigen_relation(self):
        rng = np.random.default_rng(51)
        cases = [(-1.0 / 3.0, -1.0 / 3.0)] + [tuple(pair) for pair in rng.uniform(-1.0, 1.0, (50, 2))]
        for p1, p2 in cases:
            basis = diagonalizing_basis(p1, p2)
            omega = math.hypot(p1, p2)
            matrix = transport_matrix(p1, p2)
            np.testing.assert_allclose(matrix @ basis.up, omega * basis.up, atol=1e-10)
            np.testing.assert_allclose(matrix @ basis.down, -omega * basis.down, atol=1e-10)
            self.assertAlmostEqual(np.linalg.norm(basis.up), 1.0, places=12)
            self.assertAlmostEqual(abs(np.vdot(basis.up, basis.down)), 0.0, places=12)

    def test_diagonal_matrix(self):
        basis = diagonalizing_basis(-1.0, 0.0)
        self.assertTrue(basis.degenerate)
        self.assertFalse(basis.velocity_zero)
        np.testing.assert_array_equal(basis.up, [0.0, 1.0])
        np.testing.assert_array_equal(basis.down, [1.0, 0.0])

        basis = diagonalizing_basis(0.5, 0.0)
        np.testing.assert_array_equal(basis.up, [1.0, 0.0])

    def test_zero_matrix(self):
        basis = diagonalizing_basis(0.0, 0.0)
        self.assertTrue(basis.degenerate)
        self.assertTrue(basis.velocity_zero)

class ContinuumParamsTests(SimpleTestCase):
    def test_collects_coefficients(self):
        params = continuum_params(WalkModel.fib_coin(math.pi / 4, 0.0))
        self.assertAlmostEqual(params.omega, math.sqrt(2) / 3, places=14)
        self.assertLess(abs(params.omega - params.v), 1e-10)
        np.testing.assert_allclose(params.transport_matrix, transport_matrix(-1 / 3, -1 / 3), atol=1e-14)

    def test_variant_with_angles(self):
        params = continuum_params('fib-step', AnglePair(math.pi / 3, math.pi / 6))
        self.assertIs(params.variant, WalkVariant.FIB_STEP)
        self.assertAlmostEqual(params.v, math.sqrt(3) / 3, places=14)

class DiracReferenceTests(SimpleTestCase):
    def test_zero_time(self):
        initial = SpinorField.gaussian(128, 5.0)
        params = continuum_params(WalkModel.fib_coin(0.3, 0.1))
        self.assertEqual(dirac_reference(initial, params, 0.0).max_difference(initial), 0.0)

    def test_negative_time_rejected(self):
        initial = SpinorField.gaussian(128, 5.0)
        with self.assertRaises(ValueError):
            dirac_reference(initial, continuum_params(WalkModel.fib_coin(0.3, 0.1)), -1.0)

    def test_unit_speed_integer_shift(self):
        initial = SpinorField.gaussian(128, 5.0)
        params = continuum_params(WalkModel.fib_coin(0.0, 0.0))
        moved = dirac_reference(initial, params, 7 * initial.dx)
        np.testing.assert_allclose(moved.u, np.roll(initial.u, 7), atol=1e-15)
        np.testing.assert_allclose(moved.d, np.roll(initial.d, -7), atol=1e-15)

    def test_counter_propagating_packets(self):
        n, steps = 2048, 800
        initial = SpinorField.gaussian(n, 20.0)
        params = continuum_params(WalkModel.fib_coin(math.pi / 4, 0.0))
        moved = dirac_reference(initial, params, steps * initial.dx)
        self.assertAlmostEqual(moved.norm(), 1.0, places=10)

        sites = np.arange(n)
        shift = params.v * steps
        for vector, expected in ((params.basis_up, n // 2 - shift), (params.basis_down, n // 2 + shift)):
            rho = np.abs(np.conj(vector[0]) * moved.u + np.conj(vector[1]) * moved.d) ** 2
            self.assertAlmostEqual(float(np.sum(sites * rho) / np.sum(rho)), expected, places=6)

    def test_static_at_zero_velocity(self):
        initial = SpinorField.gaussian(128, 5.0)
        params = continuum_params(WalkModel.fib_coin(math.pi / 2, math.pi / 4))
        self.assertTrue(params.basis.velocity_zero)
        self.assertEqual(dirac_reference(initial, params, 3.0).max_difference(initial), 0.0)

class CovariantCheckTests(SimpleTestCase):
    def test_passes_with_positive_velocity(self):
        report = covariant_check(continuum_params(WalkModel.fib_step(0.4, 1.1)))
        self.assertTrue(report.passed)
        self.assertFalse(report.skipped)
        for name in ('gamma0_squared', 'gamma1_squared', 'anticommutator', 'sigma_product', 'rescaled_form'):
            self.assertLess(report.residuals[name], 1e-14)

    def test_skipped_at_zero_velocity(self):
        report = covariant_check(continuum_params(WalkModel.fib_coin(math.pi / 2, math.pi / 4)))
        self.assertTrue(report.skipped)

    def test_sigma_identity(self):
        np.testing.assert_array_equal(SIGMA_X @ SIGMA_Z, -1j * SIGMA_Y)

class WalkDiracDistanceTests(SimpleTestCase):
    width = 20 * 2 * math.pi / 2 ** 11

    def test_zero_time(self):
        model = WalkModel.fib_coin(math.pi / 4, 0.0)
        for n in (512, 1024):
            self.assertEqual(walk_dirac_distance(model, n, 0.0, self.width), 0.0)

    def test_converges_as_lattice_refines(self):
        model = WalkModel.fib_coin(math.pi / 4, 0.0)
        distances = [walk_dirac_distance(model, n, 0.75 * math.pi, self.width) for n in (512, 1024, 2048, 4096)]
        self.assertTrue(all(later < earlier for earlier, later in zip(distances, distances[1:])), distances)
        self.assertLess(distances[-1], 0.02)
