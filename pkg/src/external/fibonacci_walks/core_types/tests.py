import math

import numpy as np

from django.test import SimpleTestCase

from src.external.fibonacci_walks.core_types.methods import (
    apply_coin,
    apply_inverse_translation,
    apply_translation,
    coin_multiply,
    make_hadamard_coin,
    make_rotation_coin,
)
from src.external.fibonacci_walks.core_types.models import (
    AnglePair,
    CoinMatrix,
    SpinorField,
    WalkModel,
    WalkVariant,
)

SQRT_HALF = math.sqrt(0.5)

class AnglePairTests(SimpleTestCase):
    def test_reduced_to_full_turn(self):
        angles = AnglePair(-math.pi / 2, 5 * math.pi)
        self.assertAlmostEqual(angles.alpha, 1.5 * math.pi, places=12)
        self.assertAlmostEqual(angles.beta, math.pi, places=12)

    def test_full_turn_is_zero(self):
        self.assertEqual(AnglePair(2 * math.pi, 0.0).alpha, 0.0)

    def test_non_finite_rejected(self):
        with self.assertRaises(ValueError):
            AnglePair(math.nan, 0.0)
        with self.assertRaises(ValueError):
            AnglePair(0.0, math.inf)

    def test_negated(self):
        angles = AnglePair(math.pi / 4, math.pi / 8).negated()
        self.assertAlmostEqual(angles.alpha, 1.75 * math.pi, places=12)
        self.assertAlmostEqual(angles.beta, 2 * math.pi - math.pi / 8, places=12)

class HadamardCoinTests(SimpleTestCase):
    def test_examples(self):
        np.testing.assert_allclose(make_hadamard_coin(0.0).entries, [[1, 0], [0, -1]], atol=1e-15)
        np.testing.assert_allclose(make_hadamard_coin(math.pi / 2).entries, [[0, 1], [1, 0]], atol=1e-15)
        np.testing.assert_allclose(
            make_hadamard_coin(math.pi / 4).entries,
            [[SQRT_HALF, SQRT_HALF], [SQRT_HALF, -SQRT_HALF]],
            atol=1e-15,
        )

    def test_real_involutive_reflection(self):
        rng = np.random.default_rng(7)
        for theta in rng.uniform(0.0, 2 * math.pi, 50):
            coin = make_hadamard_coin(theta)
            self.assertTrue(coin.is_unitary())
            self.assertTrue((coin @ coin).allclose(CoinMatrix.identity()))
            self.assertAlmostEqual(coin.det.real, -1.0, places=12)
            self.assertEqual(np.max(np.abs(coin.entries.imag)), 0.0)

    def test_entries_read_only(self):
        coin = make_hadamard_coin(0.3)
        with self.assertRaises(ValueError):
            coin.entries[0, 0] = 2.0

    def test_wrong_shape_rejected(self):
        with self.assertRaises(ValueError):
            CoinMatrix(np.eye(3))

    def test_non_unitary_rejected(self):
        for entries in ([[2, 0], [0, 2]], [[1, 1], [0, 1]], np.eye(2) * (1 + 1e-9)):
            with self.assertRaises(ValueError):
                CoinMatrix(entries)

    def test_rounding_level_defect_accepted(self):
        coin = CoinMatrix(np.eye(2) * (1 + 1e-14))
        self.assertTrue(coin.is_unitary())
        self.assertFalse(coin.is_unitary(1e-16))

class CoinMultiplyTests(SimpleTestCase):
    def test_involution(self):
        for alpha in (0.0, 0.4, 2.1, 5.9):
            coin = make_hadamard_coin(alpha)
            self.assertTrue(coin_multiply(coin, coin).allclose(CoinMatrix.identity()))

    def test_swap_product(self):
        product = coin_multiply(make_hadamard_coin(0.0), make_hadamard_coin(math.pi / 2))
        np.testing.assert_allclose(product.entries, [[0, 1], [-1, 0]], atol=1e-15)

    def test_product_is_rotation_by_difference(self):
        rng = np.random.default_rng(11)
        for alpha, beta in rng.uniform(0.0, 2 * math.pi, (50, 2)):
            product = coin_multiply(make_hadamard_coin(alpha), make_hadamard_coin(beta))
            self.assertTrue(product.allclose(make_rotation_coin(alpha - beta)))
            self.assertTrue(product.is_unitary())
            self.assertAlmostEqual(product.det.real, 1.0, places=12)

class ApplyCoinTests(SimpleTestCase):
    def test_identity_keeps_field(self):
        field = SpinorField.gaussian(64, 4.0)
        self.assertEqual(apply_coin(field, CoinMatrix.identity()).max_difference(field), 0.0)

    def test_sign_flip_on_lower_component(self):
        field = apply_coin(SpinorField.delta(16, 5, (0.0, 1.0)), make_hadamard_coin(0.0))
        self.assertEqual(field.u[5], 0.0)
        self.assertEqual(field.d[5], -1.0)

    def test_hadamard_splits_upper_component(self):
        field = apply_coin(SpinorField.delta(16, 5, (1.0, 0.0)), make_hadamard_coin(math.pi / 4))
        self.assertAlmostEqual(field.u[5].real, SQRT_HALF, places=15)
        self.assertAlmostEqual(field.d[5].real, SQRT_HALF, places=15)
        self.assertAlmostEqual(field.norm(), 1.0, places=12)

class TranslationTests(SimpleTestCase):
    def test_upper_component_moves_right(self):
        field = apply_translation(SpinorField.delta(16, 5, (1.0, 0.0)))
        self.assertEqual(field.u[6], 1.0)
        self.assertEqual(np.count_nonzero(field.u), 1)
        self.assertEqual(np.count_nonzero(field.d), 0)

    def test_lower_component_moves_left(self):
        field = apply_translation(SpinorField.delta(16, 5, (0.0, 1.0)))
        self.assertEqual(field.d[4], 1.0)
        self.assertEqual(np.count_nonzero(field.d), 1)

    def test_wraps_periodically(self):
        field = apply_translation(SpinorField.delta(8, 7, (1.0, 0.0)))
        self.assertEqual(field.u[0], 1.0)

    def test_uniform_field_unchanged(self):
        field = SpinorField(np.full(8, 0.25), np.full(8, 0.25j))
        self.assertEqual(apply_translation(field).max_difference(field), 0.0)

    def test_inverse_is_exact(self):
        rng = np.random.default_rng(3)
        field = SpinorField(rng.normal(size=32) + 1j * rng.normal(size=32), rng.normal(size=32)).normalized()
        restored = apply_inverse_translation(apply_translation(field))
        self.assertTrue(np.array_equal(restored.u, field.u))
        self.assertTrue(np.array_equal(restored.d, field.d))

    def test_norm_over_many_compositions(self):
        field = SpinorField.gaussian(64, 3.0)
        coin = make_hadamard_coin(0.7)
        for _ in range(10_000):
            field = apply_translation(apply_coin(field, coin))
        self.assertLess(abs(field.norm() - 1.0), 1e-10)

class SpinorFieldTests(SimpleTestCase):
    def test_default_spacing(self):
        self.assertAlmostEqual(SpinorField.zeros(2048).dx, 2 * math.pi / 2048)

    def test_invalid_shapes_rejected(self):
        with self.assertRaises(ValueError):
            SpinorField(np.zeros(4), np.zeros(5))
        with self.assertRaises(ValueError):
            SpinorField(np.zeros(1), np.zeros(1))
        with self.assertRaises(ValueError):
            SpinorField(np.zeros(4), np.zeros(4), dx=0.0)

    def test_delta_normalizes_spinor(self):
        field = SpinorField.delta(10, 13, (1.0, 1.0j))
        self.assertAlmostEqual(field.norm(), 1.0, places=15)
        self.assertAlmostEqual(abs(field.u[3]), SQRT_HALF, places=15)

    def test_delta_rejects_zero_spinor(self):
        with self.assertRaises(ValueError):
            SpinorField.delta(10, 0, (0.0, 0.0))

    def test_gaussian(self):
        field = SpinorField.gaussian(256, 20.0)
        self.assertAlmostEqual(field.norm(), 1.0, places=12)
        self.assertEqual(int(np.argmax(np.abs(field.u))), 128)
        np.testing.assert_allclose(field.d, 1j * field.u, atol=1e-15)

    def test_gaussian_width_at_least_one_site(self):
        with self.assertRaises(ValueError):
            SpinorField.gaussian(64, 0.5)

    def test_normalized_and_linear_operations(self):
        field = SpinorField.delta(8, 2) * 3.0 + SpinorField.delta(8, 5)
        self.assertAlmostEqual(field.norm(), 10.0, places=12)
        self.assertAlmostEqual(field.normalized().norm(), 1.0, places=12)
        with self.assertRaises(ValueError):
            SpinorField.zeros(8).normalized()

class WalkModelTests(SimpleTestCase):
    def test_from_name(self):
        model = WalkModel.from_name('standard', 0.3, 1.2)
        self.assertIs(model.variant, WalkVariant.STANDARD)
        self.assertEqual(model.angles, AnglePair(0.3, 0.3))
        self.assertEqual(WalkModel.from_name('fib-step', 0.3, 1.2), WalkModel.fib_step(0.3, 1.2))

    def test_unknown_name_rejected(self):
        with self.assertRaises(ValueError):
            WalkModel.from_name('fib-word', 0.3, 1.2)

    def test_fibonacci_flag(self):
        self.assertFalse(WalkVariant.STANDARD.is_fibonacci)
        self.assertTrue(WalkVariant.FIB_COIN.is_fibonacci)
        self.assertTrue(WalkVariant.FIB_STEP.is_fibonacci)
