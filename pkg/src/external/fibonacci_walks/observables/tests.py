import math

import numpy as np

from django.test import SimpleTestCase

from src.external.fibonacci_walks.continuum.methods import analytic_velocity
from src.external.fibonacci_walks.core_types.models import AnglePair, SpinorField, WalkModel, WalkVariant
from src.external.fibonacci_walks.exceptions import InsufficientDataError, LatticeWrapError
from src.external.fibonacci_walks.observables.methods import (
    circular_centroid,
    density,
    front_velocity,
    moments,
    quantile_radius,
    spread_series,
    spreading_exponent,
)
from src.external.fibonacci_walks.observables.models import SpreadEntry, SpreadSeries
from src.external.fibonacci_walks.walk_engine.methods import run

DENSITY_PAIRS = (
    (math.pi / 2, math.pi / 4),
    (math.pi / 3, math.pi / 6),
    (math.pi / 4, math.pi / 8),
    (math.pi / 8, math.pi / 16),
    (math.pi / 12, math.pi / 24),
)

def synthetic_series(sigma) -> SpreadSeries:
    return SpreadSeries([SpreadEntry(j=j, norm=1.0, mean=0.0, sigma=sigma(j)) for j in range(0, 1001, 10)])

def long_run(model: WalkModel, stride: int = 8):
    return run(model, SpinorField.gaussian(2048, 20.0), 800, snapshot_stride=stride)

class DensityTests(SimpleTestCase):
    def test_one_hot(self):
        rho = density(SpinorField.delta(16, 3))
        self.assertEqual(rho[3], 1.0)
        self.assertEqual(np.count_nonzero(rho), 1)

    def test_mixed_spinor_site(self):
        field = SpinorField.zeros(8)
        field.u[2], field.d[2] = math.sqrt(0.5), 1j * math.sqrt(0.5)
        self.assertAlmostEqual(density(field)[2], 1.0, places=15)

    def test_gaussian_sums_to_one(self):
        self.assertAlmostEqual(float(np.sum(density(SpinorField.gaussian(2048, 20.0)))), 1.0, places=12)

class MomentsTests(SimpleTestCase):
    def test_one_hot(self):
        rho = np.zeros(64)
        rho[10] = 1.0
        result = moments(rho)
        self.assertAlmostEqual(result.mean, 10.0, places=9)
        self.assertAlmostEqual(result.sigma, 0.0, places=9)

    def test_two_spikes(self):
        rho = np.zeros(64)
        rho[25] = rho[35] = 0.5
        result = moments(rho, dx=0.5)
        self.assertAlmostEqual(result.mean, 30.0, places=9)
        self.assertAlmostEqual(result.sigma, 5.0, places=9)
        self.assertAlmostEqual(result.mean_physical, 15.0, places=9)
        self.assertAlmostEqual(result.sigma_physical, 2.5, places=9)

    def test_discrete_gaussian(self):
        sites = np.arange(128)
        rho = np.exp(-((sites - 64) ** 2) / (2 * 6.0 ** 2))
        rho /= rho.sum()
        self.assertLess(abs(moments(rho).sigma - 6.0) / 6.0, 0.02)

    def test_across_seam(self):
        rho = np.zeros(64)
        rho[62] = rho[2] = 0.5
        result = moments(rho)
        self.assertAlmostEqual(min(result.mean, 64 - result.mean), 0.0, places=9)
        self.assertAlmostEqual(result.sigma, 2.0, places=9)

    def test_reference_center(self):
        rho = np.zeros(256)
        rho[28] = rho[228] = 0.5
        result = moments(rho, center=128.0)
        self.assertAlmostEqual(result.mean, 128.0, places=9)
        self.assertAlmostEqual(result.sigma, 100.0, places=9)

    def test_not_normalized(self):
        with self.assertRaises(ValueError):
            moments(np.full(16, 0.5))

    def test_wrapped_distribution(self):
        with self.assertRaises(LatticeWrapError):
            moments(np.full(64, 1 / 64))
        rho = np.zeros(64)
        rho[0] = 1.0
        with self.assertRaises(LatticeWrapError):
            moments(rho, center=32.0)

    def test_circular_centroid(self):
        rho = np.zeros(32)
        rho[31] = rho[1] = 0.5
        self.assertAlmostEqual(min(circular_centroid(rho), 32 - circular_centroid(rho)), 0.0, places=9)

class SpreadingExponentTests(SimpleTestCase):
    def test_linear_growth(self):
        fit = spreading_exponent(synthetic_series(lambda j: 0.7 * j))
        self.assertAlmostEqual(fit.eta, 1.0, delta=1e-12)
        self.assertLess(fit.residual, 1e-12)
        self.assertEqual(fit.points, 71)

    def test_diffusive_growth(self):
        fit = spreading_exponent(synthetic_series(lambda j: 2.0 * math.sqrt(j)), (50, 1000))
        self.assertAlmostEqual(fit.eta, 0.5, delta=1e-12)
        self.assertTrue(fit.within(0.45, 0.55))

    def test_insufficient_points(self):
        with self.assertRaises(InsufficientDataError):
            spreading_exponent(synthetic_series(lambda j: j), (100, 160))

    def test_invalid_window(self):
        with self.assertRaises(ValueError):
            spreading_exponent(synthetic_series(lambda j: j), (0, 800))
        with self.assertRaises(ValueError):
            spreading_exponent(synthetic_series(lambda j: j), (800, 100))

    def test_zero_width_is_unfit(self):
        fit = spreading_exponent(synthetic_series(lambda j: 0.0))
        self.assertFalse(fit.fitted)
        self.assertTrue(math.isnan(fit.eta))
        self.assertFalse(fit.within(0.0, 2.0))

class FrontVelocityTests(SimpleTestCase):
    def test_pure_transport(self):
        walk = run(WalkModel.standard(0.0), SpinorField.delta(256, 128), 100, snapshot_stride=10)
        self.assertAlmostEqual(front_velocity(walk), 1.0, places=9)

    def test_zero_angles_gaussian(self):
        walk = run(WalkModel.fib_coin(0.0, 0.0), SpinorField.gaussian(512, 5.0), 200, snapshot_stride=4)
        self.assertAlmostEqual(front_velocity(walk), 1.0, delta=0.01)

    def test_fib_step_example(self):
        velocity = front_velocity(long_run(WalkModel.fib_step(math.pi / 3, math.pi / 6)))
        self.assertLess(abs(velocity - math.sqrt(3) / 3) / (math.sqrt(3) / 3), 0.05)

    def test_wrapped_front(self):
        walk = run(WalkModel.standard(0.0), SpinorField.delta(64, 32), 40, snapshot_stride=4)
        with self.assertRaises(LatticeWrapError):
            front_velocity(walk)

    def test_wrap_between_snapshots(self):
        walk = run(WalkModel.standard(0.0), SpinorField.delta(64, 32), 60, snapshot_stride=10)
        self.assertEqual(quantile_radius(density(walk.snapshots[4].field), 32.0, 0.99), 24.0)
        with self.assertRaises(LatticeWrapError):
            front_velocity(walk, fit_from=0)

    def test_last_step_inside_light_cone(self):
        walk = run(WalkModel.standard(0.0), SpinorField.delta(64, 32), 30, snapshot_stride=10)
        self.assertAlmostEqual(front_velocity(walk), 1.0, places=9)

    def test_invalid_quantile(self):
        walk = run(WalkModel.standard(0.0), SpinorField.delta(64, 32), 8)
        for quantile in (0.5, 1.0):
            with self.assertRaises(ValueError):
                front_velocity(walk, quantile)

    def test_insufficient_snapshots(self):
        walk = run(WalkModel.standard(0.0), SpinorField.delta(64, 32), 4)
        with self.assertRaises(InsufficientDataError):
            front_velocity(walk, fit_from=5)

    def test_quantile_radius(self):
        rho = np.zeros(64)
        rho[22] = rho[42] = 0.5
        self.assertEqual(quantile_radius(rho, 32.0, 0.99), 10.0)

class SpreadSeriesTests(SimpleTestCase):
    def test_entries_follow_snapshots(self):
        walk = run(WalkModel.fib_coin(0.0, 0.0), SpinorField.delta(128, 64, spinor=(1.0, 1.0j)), 40, snapshot_stride=10)
        series = spread_series(walk)
        self.assertEqual([entry.j for entry in series.entries], [0, 10, 20, 30, 40])
        np.testing.assert_allclose(series.sigmas(), [0, 10, 20, 30, 40], atol=1e-9)
        self.assertLess(series.norm_drift(), 1e-12)

    def test_wrap_between_snapshots(self):
        walk = run(WalkModel.fib_coin(0.0, 0.0), SpinorField.delta(64, 32, spinor=(1.0, 1.0j)), 60, snapshot_stride=20)
        self.assertAlmostEqual(moments(density(walk.snapshots[2].field), center=32.0).sigma, 24.0, places=9)
        with self.assertRaises(LatticeWrapError):
            spread_series(walk)

class LongRunTests(SimpleTestCase):
    """Профили плотности при j = 800, n = 2^11 и гауссовом начальном пакете шириной 20 узлов."""

    def test_ballistic_exponent(self):
        rng = np.random.default_rng(61)
        checked = {WalkVariant.FIB_COIN: 0, WalkVariant.FIB_STEP: 0}
        quota = {WalkVariant.FIB_COIN: 10, WalkVariant.FIB_STEP: 5}
        while checked != quota:
            alpha, beta = rng.uniform(0.0, 2 * math.pi, 2)
            for variant in checked:
                model = WalkModel(variant, AnglePair(alpha, beta))
                if checked[variant] == quota[variant] or analytic_velocity(variant, model.angles) <= 0.3:
                    continue
                fit = spreading_exponent(spread_series(long_run(model)), (100, 800))
                self.assertTrue(fit.within(0.95, 1.05), msg=f"{model}: η = {fit.eta}")
                checked[variant] += 1

    def test_front_speed_matches_continuum(self):
        for alpha, beta in DENSITY_PAIRS:
            for model in (WalkModel.fib_coin(alpha, beta), WalkModel.fib_step(alpha, beta)):
                expected = analytic_velocity(model.variant, model.angles)
                if expected <= 0.3:
                    continue
                velocity = front_velocity(long_run(model))
                self.assertLess(abs(velocity - expected) / expected, 0.05, msg=str(model))

    def test_two_symmetric_fronts(self):
        n, steps = 2048, 800
        for alpha, beta in DENSITY_PAIRS[1:]:
            model = WalkModel.fib_coin(alpha, beta)
            rho = density(long_run(model, stride=steps).final)
            travel = analytic_velocity(model.variant, model.angles) * steps
            left, right = int(np.argmax(rho[:n // 2])), n // 2 + int(np.argmax(rho[n // 2:]))
            self.assertLess(abs(left - (n // 2 - travel)), 0.03 * n)
            self.assertLess(abs(right - (n // 2 + travel)), 0.03 * n)
            self.assertAlmostEqual(float(np.sum(rho[:n // 2])), float(np.sum(rho[n // 2:])), places=3)

    def test_localized_at_zero_velocity(self):
        series = spread_series(long_run(WalkModel.fib_coin(*DENSITY_PAIRS[0])))
        sigmas = series.sigmas()
        self.assertLess(float(np.max(sigmas / sigmas[0])), 3.0)
        self.assertLess(series.norm_drift(), 1e-10)
