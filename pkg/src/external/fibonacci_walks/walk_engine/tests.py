import math

import numpy as np

from django.test import SimpleTestCase

from src.external.fibonacci_walks.core_types.methods import make_hadamard_coin
from src.external.fibonacci_walks.core_types.models import SpinorField, WalkModel
from src.external.fibonacci_walks.observables.methods import density, moments
from src.external.fibonacci_walks.walk_engine.methods import (
    coin_word_for,
    run,
    run_stroboscopic,
    step,
    stroboscope,
)

SQRT_HALF = math.sqrt(0.5)

def random_field(n: int, rng: np.random.Generator) -> SpinorField:
    u = rng.normal(size=n) + 1j * rng.normal(size=n)
    d = rng.normal(size=n) + 1j * rng.normal(size=n)
    return SpinorField(u, d).normalized()

def all_models(alpha: float, beta: float) -> list[WalkModel]:
    return [WalkModel.standard(alpha), WalkModel.fib_coin(alpha, beta), WalkModel.fib_step(alpha, beta)]

class StepTests(SimpleTestCase):
    def test_upper_delta_transported(self):
        field = step(SpinorField.delta(32, 10, (1.0, 0.0)), make_hadamard_coin(0.0))
        self.assertEqual(field.u[11], 1.0)
        self.assertAlmostEqual(field.norm(), 1.0, places=15)

    def test_lower_delta_flipped_and_transported(self):
        field = step(SpinorField.delta(32, 10, (0.0, 1.0)), make_hadamard_coin(0.0))
        self.assertEqual(field.d[9], -1.0)

    def test_hadamard_split(self):
        field = step(SpinorField.delta(32, 10, (1.0, 0.0)), make_hadamard_coin(math.pi / 4))
        self.assertAlmostEqual(field.u[11].real, SQRT_HALF, places=15)
        self.assertAlmostEqual(field.d[9].real, SQRT_HALF, places=15)

class RunTests(SimpleTestCase):
    def test_standard_zero_is_pure_transport(self):
        walk = run(WalkModel.standard(0.0), SpinorField.delta(64, 5, (1.0, 0.0)), 800, snapshot_stride=100)
        self.assertEqual(walk.final.u[(5 + 800) % 64], 1.0)
        self.assertAlmostEqual(walk.final.norm(), 1.0, places=12)
        self.assertEqual(walk.steps_recorded(), list(range(0, 801, 100)))

    def test_zero_angles_rigid_transport(self):
        initial = SpinorField.gaussian(256, 6.0)
        walk = run(WalkModel.fib_coin(0.0, 0.0), initial, 60, snapshot_stride=60)
        np.testing.assert_allclose(np.abs(walk.final.u), np.abs(np.roll(initial.u, 60)), atol=1e-14)
        np.testing.assert_allclose(np.abs(walk.final.d), np.abs(np.roll(initial.d, -60)), atol=1e-14)

    def test_localized_at_zero_velocity(self):
        initial = SpinorField.gaussian(2048, 20.0)
        walk = run(WalkModel.fib_coin(math.pi / 2, math.pi / 4), initial, 800, snapshot_stride=800)
        sigma_start = moments(density(walk.first)).sigma
        sigma_end = moments(density(walk.final)).sigma
        self.assertLess(sigma_end / sigma_start, 3.0)

    def test_snapshots_include_last_step(self):
        walk = run(WalkModel.fib_step(0.3, 0.9), SpinorField.gaussian(64, 2.0), 10, snapshot_stride=4)
        self.assertEqual(walk.steps_recorded(), [0, 4, 8, 10])
        self.assertEqual(walk.word_prefix, ['α', 'β', 'α', 'α', 'β', 'α', 'α', 'β', 'α', 'α'])

    def test_word_prefix_length(self):
        walk = run(WalkModel.fib_coin(0.3, 0.9), SpinorField.gaussian(64, 2.0), 30, snapshot_stride=30)
        self.assertEqual(walk.word_prefix, [f'C{j % 6}' for j in range(12)])

    def test_invalid_arguments(self):
        initial = SpinorField.gaussian(64, 2.0)
        with self.assertRaises(ValueError):
            run(WalkModel.standard(0.1), initial, 10, snapshot_stride=0)
        with self.assertRaises(ValueError):
            run(WalkModel.standard(0.1), initial, 0)

    def test_norm_conservation(self):
        rng = np.random.default_rng(21)
        initial = SpinorField.gaussian(64, 3.0)
        for alpha, beta in rng.uniform(0.0, 2 * math.pi, (50, 2)):
            for model in all_models(alpha, beta):
                walk = run(model, initial, 4800, snapshot_stride=4800)
                self.assertLess(abs(1.0 - walk.final.norm()), 1e-10, msg=str(model))

    def test_linearity(self):
        rng = np.random.default_rng(22)
        first, second = random_field(48, rng), random_field(48, rng)
        a, b = 0.6 - 0.2j, 1.3j
        for model in all_models(1.1, 0.4):
            combined = run(model, a * first + b * second, 37).final
            separate = a * run(model, first, 37).final + b * run(model, second, 37).final
            self.assertLess(combined.max_difference(separate), 1e-10)

    def test_front_grows_one_site_per_step(self):
        n, origin = 128, 64
        walk = run(WalkModel.fib_coin(0.8, 0.3), SpinorField.delta(n, origin, (1.0, 1.0)), 40)
        sites = np.arange(n)
        for snapshot in walk.snapshots:
            support = sites[density(snapshot.field) > 0.0]
            self.assertLessEqual(np.max(np.abs(support - origin)), snapshot.step)

class CoinWordForTests(SimpleTestCase):
    def test_standard_word(self):
        word = coin_word_for(WalkModel.standard(0.4), 100)
        self.assertEqual(word.period, 1)
        self.assertTrue(word.coin_at(99).allclose(make_hadamard_coin(0.4)))

    def test_fibonacci_words(self):
        self.assertEqual(coin_word_for(WalkModel.fib_coin(0.4, 0.1), 1).period, 6)
        self.assertEqual(coin_word_for(WalkModel.fib_step(0.4, 0.1), 1).period, 3)

class StroboscopicTests(SimpleTestCase):
    def test_zero_blocks(self):
        initial = SpinorField.gaussian(64, 3.0)
        walk = run_stroboscopic(WalkModel.fib_coin(0.4, 0.1), initial, 0)
        self.assertEqual(walk.final.max_difference(initial), 0.0)
        self.assertEqual(walk.steps, 0)

    def test_fib_coin_matches_stepping(self):
        rng = np.random.default_rng(31)
        initial = random_field(64, rng)
        for alpha, beta in rng.uniform(0.0, 2 * math.pi, (10, 2)):
            model = WalkModel.fib_coin(alpha, beta)
            stencil = run_stroboscopic(model, initial, 10).final
            stepped = run(model, initial, 60, snapshot_stride=60).final
            self.assertLess(stencil.max_difference(stepped), 1e-10)

    def test_fib_step_matches_stepping(self):
        rng = np.random.default_rng(32)
        initial = random_field(64, rng)
        for alpha, beta in rng.uniform(0.0, 2 * math.pi, (10, 2)):
            model = WalkModel.fib_step(alpha, beta)
            stencil = run_stroboscopic(model, initial, 5).final
            stepped = run(model, initial, 30, snapshot_stride=30).final
            self.assertLess(stencil.max_difference(stepped), 1e-10)

    def test_standard_rejected(self):
        with self.assertRaises(ValueError):
            run_stroboscopic(WalkModel.standard(0.4), SpinorField.gaussian(64, 3.0), 2)

    def test_stroboscope_selects_multiples(self):
        walk = run(WalkModel.fib_coin(0.4, 0.1), SpinorField.gaussian(64, 3.0), 20, snapshot_stride=2)
        self.assertEqual([snapshot.step for snapshot in stroboscope(walk)], [0, 6, 12, 18])
        self.assertEqual([snapshot.step for snapshot in stroboscope(walk, 4)], [0, 4, 8, 12, 16, 20])

    def test_stroboscopic_history_matches_stroboscope(self):
        model = WalkModel.fib_step(1.2, 0.5)
        initial = SpinorField.gaussian(64, 3.0)
        history = run_stroboscopic(model, initial, 4)
        stepped = stroboscope(run(model, initial, 24))
        self.assertEqual(history.steps_recorded(), [snapshot.step for snapshot in stepped])
        for left, right in zip(history.snapshots, stepped):
            self.assertLess(left.field.max_difference(right.field), 1e-10)
