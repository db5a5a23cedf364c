import math

import numpy as np

from django.test import SimpleTestCase

from src.external.fibonacci_walks.continuum.methods import transport_coefficients
from src.external.fibonacci_walks.core_types.models import AnglePair, SpinorField, WalkModel, WalkVariant
from src.external.fibonacci_walks.exceptions import LatticeTooSmallError
from src.external.fibonacci_walks.stencil.methods import (
    apply_stencil,
    closed_form_coefficients,
    first_moments,
    oracle_coefficients,
    symbol_matrix,
    symbol_unitarity_defect,
)
from src.external.fibonacci_walks.stencil.models import OFFSETS
from src.external.fibonacci_walks.walk_engine.methods import run

FIBONACCI_VARIANTS = (WalkVariant.FIB_COIN, WalkVariant.FIB_STEP)

def random_angle_pairs(count: int, seed: int) -> list[AnglePair]:
    rng = np.random.default_rng(seed)
    return [AnglePair(alpha, beta) for alpha, beta in rng.uniform(0.0, 2 * math.pi, (count, 2))]

class ClosedFormCoefficientsTests(SimpleTestCase):
    def test_pure_transport_at_zero_angles(self):
        for variant in FIBONACCI_VARIANTS:
            coeffs = closed_form_coefficients(variant, AnglePair(0.0, 0.0))
            self.assertAlmostEqual(coeffs.A[-6], 1.0, places=15)
            for offset in OFFSETS:
                self.assertAlmostEqual(coeffs.B[offset], 0.0, places=15)
                if offset != -6:
                    self.assertAlmostEqual(coeffs.A[offset], 0.0, places=15)

    def test_last_offset_vanishes(self):
        for variant in FIBONACCI_VARIANTS:
            for angles in random_angle_pairs(10, seed=40):
                coeffs = closed_form_coefficients(variant, angles)
                self.assertEqual(coeffs.A[6], 0.0)
                self.assertEqual(coeffs.B[6], 0.0)

    def test_lower_row_mirrors_negated_angles(self):
        angles = AnglePair(1.0, 0.3)
        coeffs = closed_form_coefficients(WalkVariant.FIB_COIN, angles)
        mirrored = closed_form_coefficients(WalkVariant.FIB_COIN, angles.negated())
        for offset in OFFSETS:
            self.assertAlmostEqual(coeffs.C[offset], mirrored.B[-offset], places=14)
            self.assertAlmostEqual(coeffs.D[offset], mirrored.A[-offset], places=14)

    def test_accepts_model_and_name(self):
        angles = AnglePair(0.5, 0.2)
        by_model = closed_form_coefficients(WalkModel.fib_step(0.5, 0.2), angles)
        by_name = closed_form_coefficients('fib-step', angles)
        self.assertEqual(by_model.max_discrepancy(by_name), 0.0)

    def test_standard_rejected(self):
        with self.assertRaises(ValueError):
            closed_form_coefficients(WalkVariant.STANDARD, AnglePair(0.5, 0.5))

class OracleTests(SimpleTestCase):
    def test_zero_angles(self):
        coeffs = oracle_coefficients(WalkVariant.FIB_COIN, AnglePair(0.0, 0.0))
        self.assertEqual(coeffs.A[-6], 1.0)
        self.assertEqual(coeffs.off_lattice_residual, 0.0)

    def test_matches_closed_form_on_grid(self):
        axis = np.linspace(0.0, math.pi / 2, 20)
        for variant in FIBONACCI_VARIANTS:
            for alpha in axis:
                for beta in axis:
                    angles = AnglePair(alpha, beta)
                    closed = closed_form_coefficients(variant, angles)
                    oracle = oracle_coefficients(variant, angles)
                    self.assertLess(closed.max_discrepancy(oracle), 1e-10, msg=f"{variant.value} {angles}")

    def test_matches_closed_form_on_random_angles(self):
        for variant in FIBONACCI_VARIANTS:
            for angles in random_angle_pairs(100, seed=41):
                closed = closed_form_coefficients(variant, angles)
                oracle = oracle_coefficients(variant, angles)
                self.assertLess(closed.max_discrepancy(oracle), 1e-10)
                self.assertLess(oracle.off_lattice_residual, 1e-12)

    def test_known_values(self):
        for variant, angles in (
            (WalkVariant.FIB_COIN, AnglePair(math.pi / 4, math.pi / 8)),
            (WalkVariant.FIB_COIN, AnglePair(1.0, 0.3)),
            (WalkVariant.FIB_STEP, AnglePair(math.pi / 4, math.pi / 8)),
            (WalkVariant.FIB_STEP, AnglePair(math.pi / 3, math.pi / 6)),
        ):
            closed = closed_form_coefficients(variant, angles)
            self.assertLess(closed.max_discrepancy(oracle_coefficients(variant, angles)), 1e-10)

    def test_fib_step_constant_term_sign(self):
        closed = closed_form_coefficients(WalkVariant.FIB_STEP, AnglePair(math.pi / 4, 0.0))
        self.assertAlmostEqual(closed.A[0], 0.5, places=14)

    def test_small_lattice_rejected(self):
        with self.assertRaises(LatticeTooSmallError):
            oracle_coefficients(WalkVariant.FIB_COIN, AnglePair(0.1, 0.2), n=15)

class ApplyStencilTests(SimpleTestCase):
    def test_zero_angles_transport(self):
        coeffs = closed_form_coefficients(WalkVariant.FIB_COIN, AnglePair(0.0, 0.0))
        field = apply_stencil(SpinorField.delta(32, 10, (1.0, 0.0)), coeffs)
        self.assertAlmostEqual(field.u[16].real, 1.0, places=15)
        self.assertAlmostEqual(field.norm(), 1.0, places=14)

    def test_zero_field(self):
        coeffs = closed_form_coefficients(WalkVariant.FIB_STEP, AnglePair(0.7, 0.2))
        field = apply_stencil(SpinorField.zeros(32), coeffs)
        self.assertEqual(field.norm(), 0.0)

    def test_matches_six_steps(self):
        rng = np.random.default_rng(42)
        u = rng.normal(size=40) + 1j * rng.normal(size=40)
        d = rng.normal(size=40) + 1j * rng.normal(size=40)
        initial = SpinorField(u, d).normalized()
        for variant in FIBONACCI_VARIANTS:
            for angles in random_angle_pairs(10, seed=43):
                model = WalkModel(variant, angles)
                stencil = apply_stencil(initial, closed_form_coefficients(model, angles))
                stepped = run(model, initial, 6).final
                self.assertLess(stencil.max_difference(stepped), 1e-10)
                self.assertLess(abs(stencil.norm() - 1.0), 1e-10)

    def test_small_lattice_rejected(self):
        coeffs = closed_form_coefficients(WalkVariant.FIB_COIN, AnglePair(0.1, 0.2))
        with self.assertRaises(LatticeTooSmallError):
            apply_stencil(SpinorField.zeros(12), coeffs)

class SymbolTests(SimpleTestCase):
    def test_unitary_for_all_wavenumbers(self):
        wavenumbers = np.linspace(-math.pi, math.pi, 64, endpoint=False)
        for variant in FIBONACCI_VARIANTS:
            for angles in random_angle_pairs(50, seed=44):
                coeffs = closed_form_coefficients(variant, angles)
                self.assertLess(symbol_unitarity_defect(coeffs, wavenumbers), 1e-10)

    def test_identity_at_zero_wavenumber(self):
        for variant in FIBONACCI_VARIANTS:
            for angles in random_angle_pairs(20, seed=45):
                symbol = symbol_matrix(closed_form_coefficients(variant, angles), 0.0)
                np.testing.assert_allclose(symbol, np.eye(2), atol=1e-12)

class FirstMomentsTests(SimpleTestCase):
    def test_moments_are_transport_coefficients(self):
        for variant in FIBONACCI_VARIANTS:
            for angles in random_angle_pairs(100, seed=46):
                p1, p2 = first_moments(closed_form_coefficients(variant, angles))
                expected_p1, expected_p2 = transport_coefficients(variant, angles)
                self.assertLess(abs(p1 - expected_p1), 1e-12)
                self.assertLess(abs(p2 - expected_p2), 1e-12)

    def test_fib_step_second_coefficient_sign(self):
        p1, p2 = first_moments(oracle_coefficients(WalkVariant.FIB_STEP, AnglePair(math.pi / 4, 0.0)))
        self.assertAlmostEqual(p2, -2.0 / 3.0, places=12)
        self.assertAlmostEqual(transport_coefficients(WalkVariant.FIB_STEP, AnglePair(math.pi / 4, 0.0))[1],
                               -2.0 / 3.0, places=12)
