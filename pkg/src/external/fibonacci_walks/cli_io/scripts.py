"""
Сценарии экспериментов: прогон с профилем плотности, карта скоростей, сверка шаблона,
показатель расплывания и сходимость к решению уравнения Дирака.

Каждый сценарий пишет CSV/JSON (и при необходимости SVG) в директорию результатов
и возвращает данные для вывода командой.
"""

import logging
import math
import os

import numpy as np
import pandas as pd

from celery import group

from src.external.fibonacci_walks.cli_io.methods import ensure_directory, write_csv, write_json
from src.external.fibonacci_walks.cli_io.models import (
    ConvergenceReport,
    DiracCompareConfig,
    RunConfig,
    StencilConfig,
    StencilReport,
    SweepConfig,
)
from src.external.fibonacci_walks.cli_io.plots import plot_density, plot_velocity_contour
from src.external.fibonacci_walks.cli_io.tasks import empirical_velocity_task
from src.external.fibonacci_walks.continuum.methods import (
    DEGENERACY_TOLERANCE,
    analytic_velocity,
    analytic_velocity_grid,
    continuum_params,
    walk_dirac_distance,
)
from src.external.fibonacci_walks.core_types.models import WalkModel
from src.external.fibonacci_walks.exceptions import InsufficientDataError, LatticeWrapError
from src.external.fibonacci_walks.observables.methods import (
    density,
    front_velocity,
    spread_series,
    spreading_exponent,
)
from src.external.fibonacci_walks.observables.models import ExponentFit, SpreadSeries
from src.external.fibonacci_walks.stencil.methods import closed_form_coefficients, oracle_coefficients
from src.external.fibonacci_walks.stencil.models import OFFSETS
from src.external.fibonacci_walks.walk_engine.methods import run
from src.external.fibonacci_walks.walk_engine.models import WalkRun

logger = logging.getLogger('fibonacci_walks')

DENSITY_COLUMNS = ['m', 'x', 'rho', 're_u', 'im_u', 're_d', 'im_d']

SPREAD_COLUMNS = ['j', 'norm', 'mean', 'sigma']

EXPONENT_BAND = (0.95, 1.05)

def continuum_summary(model: WalkModel) -> dict:
    """
    Аналитические величины непрерывного предела для summary.json.

    У стандартного блуждания нет предела Дирака: p1, p2 и ω равны null, v = |cos θ|.
    """
    if not model.variant.is_fibonacci:
        return {
            'v_analytic': analytic_velocity(model.variant, model.angles),
            'p1': None,
            'p2': None,
            'omega': None,
            'degenerate': None,
            'velocity_zero': None,
            'basis_up': None,
            'basis_down': None,
        }

    params = continuum_params(model)
    return {
        'v_analytic': params.v,
        'p1': params.p1,
        'p2': params.p2,
        'omega': params.omega,
        'degenerate': params.basis.degenerate,
        'velocity_zero': params.basis.velocity_zero,
        'basis_up': [float(value) for value in np.real(params.basis_up)],
        'basis_down': [float(value) for value in np.real(params.basis_down)],
    }

def density_frame(walk_run: WalkRun) -> pd.DataFrame:
    final = walk_run.final
    sites = np.arange(final.n)
    return pd.DataFrame({
        'm': sites,
        'x': sites * final.dx,
        'rho': density(final),
        're_u': final.u.real,
        'im_u': final.u.imag,
        're_d': final.d.real,
        'im_d': final.d.imag,
    }, columns=DENSITY_COLUMNS)

def spread_frame(series: SpreadSeries | None) -> pd.DataFrame:
    if series is None:
        return pd.DataFrame(columns=SPREAD_COLUMNS)
    return pd.DataFrame(
        [(entry.j, entry.norm, entry.mean, entry.sigma) for entry in series.entries],
        columns=SPREAD_COLUMNS,
    )

def exponent_summary(fit: ExponentFit | None) -> dict | None:
    if fit is None:
        return None
    return {
        'eta': fit.eta,
        'fit_window': list(fit.fit_window),
        'residual': fit.residual,
        'fitted': fit.fitted,
        'points': fit.points,
    }

def _norm_drift(walk_run: WalkRun) -> float:
    return max(abs(snapshot.field.norm() - 1.0) for snapshot in walk_run.snapshots)

def _measure(walk_run: WalkRun, config: RunConfig, warnings: list[str]):
    """Ряд расплывания, показатель и скорость фронта; ошибки измерения попадают в предупреждения."""
    series, fit, velocity = None, None, None

    try:
        series = spread_series(walk_run)
    except LatticeWrapError as e:
        warnings.append(f"Ряд расплывания не построен: {e}")

    if series is not None:
        try:
            fit = spreading_exponent(series, config.fit_window)
            if not fit.fitted:
                warnings.append("Показатель расплывания не определен: нулевая ширина распределения")
        except InsufficientDataError as e:
            warnings.append(f"Показатель расплывания не определен: {e}")

    try:
        velocity = front_velocity(walk_run, config.front_quantile)
    except (LatticeWrapError, InsufficientDataError) as e:
        warnings.append(f"Скорость фронта не определена: {e}")

    return series, fit, velocity

def simulate(config: RunConfig) -> dict:
    """
    Прогон блуждания с записью density.csv, spread.csv и summary.json.

    Args:
        config (RunConfig): Параметры прогона.

    Returns:
        dict: Содержимое summary.json.
    """
    output_dir = ensure_directory(config.output_dir)
    model = config.walk_model()
    logger.info("Запуск прогона %s: n=%d, шагов=%d", model, config.size, config.steps)

    walk_run = run(model, config.initial_field(), config.steps, config.snapshot_stride,
                   config.initial_description())

    warnings = []
    series, fit, velocity = _measure(walk_run, config, warnings)
    for warning in warnings:
        logger.warning(warning)

    write_csv(density_frame(walk_run), os.path.join(output_dir, 'density.csv'))
    write_csv(spread_frame(series), os.path.join(output_dir, 'spread.csv'))

    summary = {
        'config': config.echo(),
        'initial': walk_run.initial,
        **continuum_summary(model),
        'v_empirical': velocity,
        'exponent': exponent_summary(fit),
        'norm_drift': _norm_drift(walk_run),
        'word_prefix': walk_run.word_prefix,
        'warnings': warnings,
    }
    write_json(summary, os.path.join(output_dir, 'summary.json'))

    if config.plot:
        final = walk_run.final
        plot_density(
            os.path.join(output_dir, 'density.svg'),
            np.arange(final.n) * final.dx,
            density(final),
            f"{model}, j = {config.steps}",
        )

    return summary

def velocity_sweep(config: SweepConfig) -> pd.DataFrame:
    """
    Карта аналитической скорости на сетке (α, β) ∈ [0, π/2]² с записью contour.csv.

    С флагом empirical добавляются скорости коротких прогонов и модуль расхождения;
    прогоны выполняются локально или распределяются через Celery.
    """
    output_dir = ensure_directory(config.output_dir)
    axis = np.linspace(0.0, math.pi / 2, config.resolution)
    alpha, beta = np.meshgrid(axis, axis, indexing='ij')
    velocity = analytic_velocity_grid(config.model, alpha, beta)

    frame = pd.DataFrame({
        'alpha': alpha.ravel(),
        'beta': beta.ravel(),
        'v_analytic': velocity.ravel(),
    })

    if config.empirical:
        arguments = [
            (config.model.value, float(a), float(b), config.size, config.steps)
            for a, b in zip(frame['alpha'], frame['beta'])
        ]
        logger.info("Короткие прогоны карты скоростей: %d точек, режим %s", len(arguments), config.backend)

        if config.backend == 'celery':
            job = group(empirical_velocity_task.s(*item) for item in arguments).apply_async()
            empirical = job.get()
        else:
            empirical = [empirical_velocity_task(*item) for item in arguments]

        frame['v_empirical'] = np.array(empirical, dtype=float)
        frame['abs_error'] = np.abs(frame['v_analytic'] - frame['v_empirical'])

    write_csv(frame, os.path.join(output_dir, 'contour.csv'))

    if config.plot:
        plot_velocity_contour(
            os.path.join(output_dir, 'contour.svg'),
            alpha, beta, velocity,
            f"v(α, β), {config.model.value}",
        )

    return frame

def stencil_report(config: StencilConfig) -> StencilReport:
    """
    Таблицы шаблона в замкнутой форме и из оракула рядом, с наибольшим расхождением.
    """
    closed = closed_form_coefficients(config.model, config.angles)
    oracle = oracle_coefficients(config.model, config.angles, config.size)

    rows = []
    for offset in OFFSETS:
        row = {'offset': offset}
        for name in ('A', 'B', 'C', 'D'):
            row[f'{name}_closed'] = closed.rows()[name][offset]
            row[f'{name}_oracle'] = oracle.rows()[name][offset]
        rows.append(row)
    table = pd.DataFrame(rows)

    discrepancy = closed.max_discrepancy(oracle)
    logger.debug("Расхождение шаблона %s %s: %.3e", config.model.value, config.angles, discrepancy)

    if config.output_dir:
        write_csv(table, os.path.join(ensure_directory(config.output_dir), 'stencil.csv'))

    return StencilReport(closed=closed, oracle=oracle, discrepancy=discrepancy, table=table)

def exponent_report(config: RunConfig) -> dict:
    """
    Прогон и подгонка показателя расплывания с записью spread.csv и exponent.json.

    Returns:
        dict: Содержимое exponent.json; ключ 'in_band' равен None, если показатель не определен.
    """
    output_dir = ensure_directory(config.output_dir)
    model = config.walk_model()
    walk_run = run(model, config.initial_field(), config.steps, config.snapshot_stride,
                   config.initial_description())

    warnings = []
    series, fit = None, None
    try:
        series = spread_series(walk_run)
        fit = spreading_exponent(series, config.fit_window)
    except (LatticeWrapError, InsufficientDataError) as e:
        warnings.append(str(e))

    if fit is not None and not fit.fitted:
        warnings.append("Нулевая ширина распределения: показатель не определен")

    in_band = fit.within(*EXPONENT_BAND) if fit is not None and fit.fitted else None
    write_csv(spread_frame(series), os.path.join(output_dir, 'spread.csv'))

    report = {
        'config': config.echo(),
        'v_analytic': analytic_velocity(model.variant, model.angles),
        'exponent': exponent_summary(fit),
        'band': list(EXPONENT_BAND),
        'in_band': in_band,
        'warnings': warnings,
    }
    write_json(report, os.path.join(output_dir, 'exponent.json'))
    return report

def dirac_compare(config: DiracCompareConfig) -> ConvergenceReport:
    """
    L1-расстояние между блужданием и решением Дирака при фиксированном физическом времени
    для каждой решетки; пишет convergence.csv.

    При нулевой скорости или нулевом времени результат только информационный.
    """
    output_dir = ensure_directory(config.output_dir)
    model = config.walk_model()
    params = continuum_params(model)

    distances = [walk_dirac_distance(model, n, config.time, config.width) for n in config.resolutions]
    table = pd.DataFrame({'n': list(config.resolutions), 'L1_distance': distances})
    write_csv(table, os.path.join(output_dir, 'convergence.csv'))

    informational = params.v <= DEGENERACY_TOLERANCE or config.time == 0.0
    decreasing = bool(np.all(np.diff(np.array(distances)) < 0.0))
    logger.info("Сходимость к решению Дирака для %s: %s", model, ", ".join(f"{d:.4g}" for d in distances))

    return ConvergenceReport(table=table, decreasing=decreasing, informational=informational)
