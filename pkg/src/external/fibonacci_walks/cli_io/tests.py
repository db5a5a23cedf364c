import json
import math
import os
import tempfile

from io import StringIO
from unittest import mock

import numpy as np
import pandas as pd

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from src.core.utils.enums import ExitCode
from src.external.fibonacci_walks.cli_io.methods import parse_angle, write_json
from src.external.fibonacci_walks.cli_io.models import RunConfig
from src.external.fibonacci_walks.cli_io.serializers import (
    DiracCompareSerializer,
    RunConfigSerializer,
    StencilSerializer,
    VelocitySweepSerializer,
)
from src.external.fibonacci_walks.core_types.models import WalkVariant

SMALL_RUN = {
    'model': 'fib-step',
    'alpha': 'pi/3',
    'beta': 'pi/6',
    'size': 256,
    'steps': 64,
    'width': 4.0,
    'snapshot_stride': 4,
    'fit_window': [8, 64],
}

EXPONENT_RUN = {
    'size': 512,
    'steps': 160,
    'width': 4.0,
    'snapshot_stride': 4,
    'fit_window': [20, 160],
}

def run_command(name: str, *args, **options) -> str:
    stdout = StringIO()
    call_command(name, *args, stdout=stdout, stderr=StringIO(), **options)
    return stdout.getvalue()

class EagerGroup:
    """Группа задач, выполняемая в текущем процессе без брокера."""
    def __init__(self, signatures):
        self.signatures = list(signatures)

    def apply_async(self):
        return self

    def get(self):
        return [signature.apply().get() for signature in self.signatures]

def read_bytes(path: str) -> bytes:
    with open(path, 'rb') as source:
        return source.read()

class ParseAngleTests(SimpleTestCase):
    def test_pi_literals(self):
        cases = {
            'pi': math.pi,
            'pi/4': math.pi / 4,
            '3pi/8': 3 * math.pi / 8,
            '3*pi/8': 3 * math.pi / 8,
            '-pi/2': -math.pi / 2,
            '0.25pi': 0.25 * math.pi,
            'π/3': math.pi / 3,
            ' PI / 6 ': math.pi / 6,
        }
        for literal, expected in cases.items():
            with self.subTest(literal=literal):
                self.assertAlmostEqual(parse_angle(literal), expected, places=15)

    def test_plain_numbers(self):
        self.assertEqual(parse_angle('0.3'), 0.3)
        self.assertEqual(parse_angle('1e-3'), 1e-3)
        self.assertEqual(parse_angle(2), 2.0)
        self.assertEqual(parse_angle(0.5), 0.5)

    def test_rejected_values(self):
        for value in ('abc', 'pi/0', 'nan', 'inf', '', True, float('nan')):
            with self.subTest(value=value):
                with self.assertRaises(ValueError):
                    parse_angle(value)

class RunConfigSerializerTests(SimpleTestCase):
    def test_defaults(self):
        serializer = RunConfigSerializer(data={})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        config = serializer.save()

        self.assertIsInstance(config, RunConfig)
        self.assertIs(config.model, WalkVariant.FIB_COIN)
        self.assertEqual(config.size, 2048)
        self.assertEqual(config.steps, 800)
        self.assertEqual(config.width, 20.0)
        self.assertEqual(config.fit_window, (100, 800))
        self.assertEqual(config.origin, 1024)

    def test_angle_literals(self):
        serializer = RunConfigSerializer(data={'alpha': 'pi/3', 'beta': '-pi/6'})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data['alpha'], math.pi / 3)
        self.assertEqual(serializer.validated_data['beta'], -math.pi / 6)

    def test_invalid_values(self):
        cases = {
            'alpha': {'alpha': 'quarter'},
            'model': {'model': 'fib-spin'},
            'fit_window': {'fit_window': [800, 100]},
            'front_quantile': {'front_quantile': 0.4},
            'site': {'size': 64, 'site': 64},
            'width': {'width': 0.5},
        }
        for field_name, data in cases.items():
            with self.subTest(field=field_name):
                serializer = RunConfigSerializer(data=data)
                self.assertFalse(serializer.is_valid())
                self.assertIn(field_name, serializer.errors)

class VelocitySweepSerializerTests(SimpleTestCase):
    def test_empirical_run_must_stay_off_the_seam(self):
        serializer = VelocitySweepSerializer(data={'empirical': True, 'size': 64, 'steps': 32})
        self.assertFalse(serializer.is_valid())
        self.assertIn('steps', serializer.errors)

        serializer = VelocitySweepSerializer(data={'empirical': True, 'size': 64, 'steps': 31})
        self.assertTrue(serializer.is_valid(), serializer.errors)

    def test_long_run_allowed_without_empirical(self):
        serializer = VelocitySweepSerializer(data={'size': 64, 'steps': 64})
        self.assertTrue(serializer.is_valid(), serializer.errors)

class StencilSerializerTests(SimpleTestCase):
    def test_standard_model_rejected(self):
        serializer = StencilSerializer(data={'model': 'standard'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('model', serializer.errors)

    def test_small_lattice_rejected(self):
        serializer = StencilSerializer(data={'size': 15})
        self.assertFalse(serializer.is_valid())
        self.assertIn('size', serializer.errors)

class DiracCompareSerializerTests(SimpleTestCase):
    def test_time_and_steps_are_exclusive(self):
        serializer = DiracCompareSerializer(data={'time': 1.0, 'steps': 10})
        self.assertFalse(serializer.is_valid())
        self.assertIn('steps', serializer.errors)

    def test_steps_converted_on_coarsest_lattice(self):
        serializer = DiracCompareSerializer(data={'resolutions': [512, 128, 256], 'steps': 48})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        config = serializer.save()

        self.assertEqual(config.resolutions, (128, 256, 512))
        self.assertAlmostEqual(config.time, 48 * 2 * math.pi / 128, places=14)

    def test_packet_narrower_than_a_site_rejected(self):
        serializer = DiracCompareSerializer(data={'resolutions': [64, 128]})
        self.assertFalse(serializer.is_valid())
        self.assertIn('resolutions', serializer.errors)

    def test_default_time(self):
        serializer = DiracCompareSerializer(data={})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        config = serializer.save()
        self.assertAlmostEqual(config.time, 0.75 * math.pi, places=14)
        self.assertEqual(config.resolutions, (512, 1024, 2048, 4096))

class WriteJsonTests(SimpleTestCase):
    def test_non_finite_values_become_null(self):
        with tempfile.TemporaryDirectory() as directory:
            path = write_json(
                {'a': float('nan'), 'b': [1.0, float('inf')], 'c': np.float64(-np.inf), 'd': np.int64(3)},
                os.path.join(directory, 'out.json'),
            )
            with open(path, encoding='utf-8') as source:
                content = json.load(source)

        self.assertEqual(content, {'a': None, 'b': [1.0, None], 'c': None, 'd': 3})

class SimulateCommandTests(SimpleTestCase):
    def test_writes_result_files(self):
        with tempfile.TemporaryDirectory() as directory:
            output = run_command('simulate', output_dir=directory, **SMALL_RUN)

            density = pd.read_csv(os.path.join(directory, 'density.csv'))
            spread = pd.read_csv(os.path.join(directory, 'spread.csv'))
            with open(os.path.join(directory, 'summary.json'), encoding='utf-8') as source:
                summary = json.load(source)

        self.assertIn('Прогон завершен', output)
        self.assertEqual(list(density.columns), ['m', 'x', 'rho', 're_u', 'im_u', 're_d', 'im_d'])
        self.assertEqual(len(density), 256)
        self.assertAlmostEqual(density['rho'].sum(), 1.0, places=12)

        self.assertEqual(list(spread.columns), ['j', 'norm', 'mean', 'sigma'])
        self.assertEqual(list(spread['j']), list(range(0, 65, 4)))

        self.assertEqual(summary['config']['alpha'], math.pi / 3)
        self.assertEqual(summary['config']['beta'], math.pi / 6)
        self.assertEqual(summary['config']['model'], 'fib-step')
        self.assertAlmostEqual(summary['v_analytic'], math.sqrt(3) / 3, places=12)
        self.assertLess(summary['norm_drift'], 1e-12)
        self.assertEqual(summary['warnings'], [])
        self.assertTrue(summary['exponent']['fitted'])
        self.assertIsNotNone(summary['v_empirical'])
        for key in ('p1', 'p2', 'omega', 'basis_up', 'basis_down', 'word_prefix', 'initial'):
            self.assertIn(key, summary)

    def test_rerun_is_byte_identical(self):
        with tempfile.TemporaryDirectory() as first, tempfile.TemporaryDirectory() as second:
            run_command('simulate', output_dir=first, plot=True, **SMALL_RUN)
            run_command('simulate', output_dir=second, plot=True, **SMALL_RUN)

            for name in ('density.csv', 'spread.csv', 'summary.json', 'density.svg'):
                with self.subTest(file=name):
                    self.assertEqual(
                        read_bytes(os.path.join(first, name)),
                        read_bytes(os.path.join(second, name)),
                    )

    def test_standard_delta_moves_right(self):
        with tempfile.TemporaryDirectory() as directory:
            run_command(
                'simulate', model='standard', alpha='0', init='delta', site=10,
                size=64, steps=5, snapshot_stride=1, fit_window=[1, 5], output_dir=directory,
            )
            density = pd.read_csv(os.path.join(directory, 'density.csv'))

        self.assertEqual(density.loc[density['m'] == 15, 'rho'].item(), 1.0)
        self.assertEqual(density['rho'].sum(), 1.0)

    def test_wrap_between_snapshots_reported(self):
        with tempfile.TemporaryDirectory() as directory:
            run_command(
                'simulate', model='standard', alpha='0', init='delta', site=32,
                size=64, steps=60, snapshot_stride=10, fit_window=[10, 60], output_dir=directory,
            )
            spread = pd.read_csv(os.path.join(directory, 'spread.csv'))
            with open(os.path.join(directory, 'summary.json'), encoding='utf-8') as source:
                summary = json.load(source)

        self.assertIsNone(summary['v_empirical'])
        self.assertIsNone(summary['exponent'])
        self.assertEqual(len(spread), 0)
        self.assertEqual(len(summary['warnings']), 2)

    def test_config_file_with_flag_override(self):
        with tempfile.TemporaryDirectory() as directory:
            config_path = os.path.join(directory, 'run.yaml')
            with open(config_path, 'w', encoding='utf-8') as config_file:
                config_file.write(
                    "model: fib-coin\n"
                    "alpha: pi/4\n"
                    "beta: pi/8\n"
                    "size: 256\n"
                    "steps: 48\n"
                    "width: 4\n"
                    "snapshot-stride: 4\n"
                    "fit-window: [8, 48]\n"
                )
            output_dir = os.path.join(directory, 'out')
            run_command('simulate', config=config_path, steps=40, output_dir=output_dir)

            with open(os.path.join(output_dir, 'summary.json'), encoding='utf-8') as source:
                summary = json.load(source)

        self.assertEqual(summary['config']['steps'], 40)
        self.assertEqual(summary['config']['size'], 256)
        self.assertEqual(summary['config']['alpha'], math.pi / 4)

class UsageErrorTests(SimpleTestCase):
    def assertUsageError(self, *args, **options):
        with self.assertRaises(CommandError) as context:
            run_command(*args, **options)
        self.assertEqual(context.exception.returncode, ExitCode.USAGE)

    def test_invalid_angle(self):
        self.assertUsageError('simulate', alpha='quarter')

    def test_invalid_choice(self):
        self.assertUsageError('simulate', '--model', 'fib-spin')

    def test_non_integer_flag(self):
        self.assertUsageError('velocity_sweep', '--resolution', 'many')

    def test_unknown_config_key(self):
        with tempfile.TemporaryDirectory() as directory:
            config_path = os.path.join(directory, 'run.yaml')
            with open(config_path, 'w', encoding='utf-8') as config_file:
                config_file.write("colour: red\n")
            self.assertUsageError('simulate', config=config_path)

    def test_missing_config_file(self):
        self.assertUsageError('stencil', config='/nonexistent/run.yaml')

    def test_stencil_rejects_standard_model(self):
        self.assertUsageError('stencil', model='standard')

class VelocitySweepCommandTests(SimpleTestCase):
    def test_analytic_contour(self):
        with tempfile.TemporaryDirectory() as directory:
            output = run_command('velocity_sweep', resolution=5, output_dir=directory, plot=True)
            frame = pd.read_csv(os.path.join(directory, 'contour.csv'))
            self.assertTrue(os.path.exists(os.path.join(directory, 'contour.svg')))

        self.assertIn('25', output)
        self.assertEqual(list(frame.columns), ['alpha', 'beta', 'v_analytic'])
        self.assertEqual(len(frame), 25)
        origin = frame[(frame['alpha'] == 0.0) & (frame['beta'] == 0.0)]
        self.assertAlmostEqual(origin['v_analytic'].item(), 1.0, places=12)
        self.assertTrue(((frame['v_analytic'] >= 0.0) & (frame['v_analytic'] <= 1.0 + 1e-12)).all())

    def test_alpha_and_beta_flags_ignored(self):
        with tempfile.TemporaryDirectory() as directory:
            run_command('velocity_sweep', resolution=3, alpha='pi/4', output_dir=directory)
            frame = pd.read_csv(os.path.join(directory, 'contour.csv'))
        self.assertEqual(len(frame), 9)

    def test_empirical_local_backend(self):
        with tempfile.TemporaryDirectory() as directory:
            run_command(
                'velocity_sweep', resolution=3, empirical=True, backend='local',
                size=64, steps=16, output_dir=directory,
            )
            frame = pd.read_csv(os.path.join(directory, 'contour.csv'))

        self.assertEqual(list(frame.columns), ['alpha', 'beta', 'v_analytic', 'v_empirical', 'abs_error'])
        self.assertTrue(np.isfinite(frame['v_empirical']).all())
        np.testing.assert_allclose(frame['abs_error'], np.abs(frame['v_analytic'] - frame['v_empirical']))

    def test_celery_backend_matches_local(self):
        options = {'resolution': 2, 'empirical': True, 'size': 64, 'steps': 16}
        with tempfile.TemporaryDirectory() as local, tempfile.TemporaryDirectory() as queued:
            run_command('velocity_sweep', backend='local', output_dir=local, **options)
            with mock.patch('src.external.fibonacci_walks.cli_io.scripts.group', side_effect=EagerGroup):
                run_command('velocity_sweep', backend='celery', output_dir=queued, **options)

            self.assertEqual(
                read_bytes(os.path.join(local, 'contour.csv')),
                read_bytes(os.path.join(queued, 'contour.csv')),
            )

class StencilCommandTests(SimpleTestCase):
    def test_closed_form_matches_oracle(self):
        with tempfile.TemporaryDirectory() as directory:
            output = run_command('stencil', model='fib-coin', alpha='1.0', beta='0.3', output_dir=directory)
            table = pd.read_csv(os.path.join(directory, 'stencil.csv'))

        self.assertIn('Коэффициенты совпадают с оракулом', output)
        self.assertEqual(list(table['offset']), [-6, -4, -2, 0, 2, 4, 6])
        for name in ('A', 'B', 'C', 'D'):
            np.testing.assert_allclose(table[f'{name}_closed'], table[f'{name}_oracle'], atol=1e-9)

    def test_fib_step_without_output(self):
        output = run_command('stencil', model='fib-step', alpha='pi/4', beta='pi/8')
        self.assertIn('Наибольшее расхождение', output)

    def test_mismatch_exits_with_verification_code(self):
        from src.external.fibonacci_walks.stencil.methods import closed_form_coefficients
        from src.external.fibonacci_walks.core_types.models import AnglePair

        wrong = closed_form_coefficients(WalkVariant.FIB_COIN, AnglePair(0.2, 0.9))
        with mock.patch(
            'src.external.fibonacci_walks.cli_io.scripts.closed_form_coefficients',
            return_value=wrong,
        ):
            with self.assertRaises(CommandError) as context:
                run_command('stencil', model='fib-coin', alpha='1.0', beta='0.3')

        self.assertEqual(context.exception.returncode, ExitCode.VERIFICATION)

class ExponentCommandTests(SimpleTestCase):
    def test_ballistic_exponent_in_band(self):
        with tempfile.TemporaryDirectory() as directory:
            output = run_command(
                'exponent', model='fib-coin', alpha='pi/4', beta='pi/8', output_dir=directory, **EXPONENT_RUN,
            )
            with open(os.path.join(directory, 'exponent.json'), encoding='utf-8') as source:
                report = json.load(source)

        self.assertTrue(report['in_band'])
        self.assertAlmostEqual(report['exponent']['eta'], 1.0, delta=0.02)
        self.assertEqual(report['band'], [0.95, 1.05])
        self.assertIn('η', output)

    def test_localized_walk_exits_with_verification_code(self):
        with tempfile.TemporaryDirectory() as directory:
            with self.assertRaises(CommandError) as context:
                run_command(
                    'exponent', model='fib-coin', alpha='pi/2', beta='pi/4', output_dir=directory, **EXPONENT_RUN,
                )
            with open(os.path.join(directory, 'exponent.json'), encoding='utf-8') as source:
                report = json.load(source)

        self.assertEqual(context.exception.returncode, ExitCode.VERIFICATION)
        self.assertFalse(report['in_band'])
        self.assertLess(abs(report['exponent']['eta']), 0.05)

    def test_zero_width_is_reported_not_failed(self):
        with tempfile.TemporaryDirectory() as directory:
            run_command(
                'exponent', model='standard', alpha='0', init='delta', output_dir=directory, **EXPONENT_RUN,
            )
            with open(os.path.join(directory, 'exponent.json'), encoding='utf-8') as source:
                report = json.load(source)

        self.assertIsNone(report['in_band'])
        self.assertFalse(report['exponent']['fitted'])
        self.assertTrue(report['warnings'])

class DiracCompareCommandTests(SimpleTestCase):
    def test_distance_decreases(self):
        with tempfile.TemporaryDirectory() as directory:
            output = run_command(
                'dirac_compare', model='fib-coin', alpha='pi/4', beta='0',
                resolutions=[128, 256, 512], output_dir=directory,
            )
            table = pd.read_csv(os.path.join(directory, 'convergence.csv'))

        self.assertIn('строго убывает', output)
        self.assertEqual(list(table.columns), ['n', 'L1_distance'])
        self.assertEqual(list(table['n']), [128, 256, 512])
        self.assertTrue((np.diff(table['L1_distance']) < 0.0).all())

    def test_zero_time_is_informational(self):
        with tempfile.TemporaryDirectory() as directory:
            output = run_command(
                'dirac_compare', resolutions=[128, 256], time=0.0, output_dir=directory,
            )
            table = pd.read_csv(os.path.join(directory, 'convergence.csv'))

        self.assertIn('информационный', output)
        np.testing.assert_allclose(table['L1_distance'], 0.0, atol=1e-12)

    def test_growing_distance_exits_with_verification_code(self):
        with tempfile.TemporaryDirectory() as directory:
            with mock.patch(
                'src.external.fibonacci_walks.cli_io.scripts.walk_dirac_distance',
                side_effect=[0.1, 0.2],
            ):
                with self.assertRaises(CommandError) as context:
                    run_command('dirac_compare', resolutions=[128, 256], output_dir=directory)

        self.assertEqual(context.exception.returncode, ExitCode.VERIFICATION)
