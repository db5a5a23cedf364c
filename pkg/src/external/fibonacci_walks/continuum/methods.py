"""
Непрерывный предел фибоначчиевых блужданий: коэффициенты переноса, аналитические скорости,
диагонализирующий базис и точное решение безмассового уравнения Дирака.

Разложение шаблона до первого порядка дает ∂_tΨ = P ∂_xΨ, P = [[p1, p2], [p2, −p1]].
Компонента собственного значения +ω переносится в −x, компонента −ω в +x.
"""

import logging
import math

import numpy as np

from src.external.fibonacci_walks.continuum.models import ContinuumParams, CovariantReport, DiagonalBasis
from src.external.fibonacci_walks.core_types.models import AnglePair, SpinorField, WalkModel, WalkVariant
from src.external.fibonacci_walks.observables.methods import density
from src.external.fibonacci_walks.walk_engine.methods import run

logger = logging.getLogger('fibonacci_walks')

DEGENERACY_TOLERANCE = 1e-8

INTEGER_SHIFT_TOLERANCE = 1e-9

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

# γ⁰ = σ_x, γ¹ = −iσ_y
GAMMA_0 = SIGMA_X
GAMMA_1 = -1j * SIGMA_Y

def _variant_of(model) -> WalkVariant:
    return model.variant if isinstance(model, WalkModel) else WalkVariant(model)

def transport_coefficients(model, angles: AnglePair) -> tuple[float, float]:
    """
    Коэффициенты переноса (p1, p2) в замкнутой форме.

    FDTQW-I: p1 = −(c_{4α−2β} + 2c_{2α} + c_{2β} + 2)/6, p2 = −(2/3)s_{2α}c²_{α−β}.
    FDTQW-II: p1 = −(c²_{2α−β} + 2c_β c_{2α−β})/3, p2 = −s_{2α−β}(c_{2α−β} + 2c_β)/3.

    Raises:
        ValueError: для стандартной модели, у которой нет предела Дирака.
    """
    variant = _variant_of(model)
    c, s = math.cos, math.sin
    a, b = angles.alpha, angles.beta

    if variant is WalkVariant.FIB_COIN:
        p1 = -(c(4 * a - 2 * b) + 2 * c(2 * a) + c(2 * b) + 2) / 6
        p2 = -2.0 / 3.0 * s(2 * a) * c(a - b) ** 2
    elif variant is WalkVariant.FIB_STEP:
        # Знак p2 согласован с первым моментом шаблона
        p1 = -(c(2 * a - b) ** 2 + 2 * c(b) * c(2 * a - b)) / 3
        p2 = -s(2 * a - b) * (c(2 * a - b) + 2 * c(b)) / 3
    else:
        raise ValueError("Коэффициенты переноса не определены для стандартного блуждания")

    return p1, p2

def analytic_velocity_grid(model, alpha, beta) -> np.ndarray:
    """
    Векторизованная аналитическая скорость на сетке углов.

    FDTQW-I: √(8c²_α c_{2α−2β} + c_{4α−4β} + 4c_{2α} + 5)/(3√2);
    FDTQW-II: |c_{2α−β} + 2c_β|/3; стандартное блуждание: |cos θ| (θ = alpha).
    """
    variant = _variant_of(model)
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)

    if variant is WalkVariant.FIB_COIN:
        radicand = (8 * np.cos(alpha) ** 2 * np.cos(2 * alpha - 2 * beta) + np.cos(4 * alpha - 4 * beta)
                    + 4 * np.cos(2 * alpha) + 5)
        # Подкоренное выражение обращается в ноль на линиях нулевой скорости
        return np.sqrt(np.clip(radicand, 0.0, None)) / (3 * np.sqrt(2))
    if variant is WalkVariant.FIB_STEP:
        return np.abs(np.cos(2 * alpha - beta) + 2 * np.cos(beta)) / 3
    return np.abs(np.cos(alpha)) + 0.0 * beta

def analytic_velocity(model, angles: AnglePair) -> float:
    """Аналитическая скорость распространения v(α, β) ≥ 0."""
    return float(analytic_velocity_grid(model, angles.alpha, angles.beta))

def _unit_with_positive_tail(vector: np.ndarray) -> np.ndarray:
    vector = vector / np.linalg.norm(vector)
    if vector[1] < 0 or (vector[1] == 0 and vector[0] < 0):
        vector = -vector
    return vector.astype(np.complex128)

def diagonalizing_basis(p1: float, p2: float) -> DiagonalBasis:
    """
    Собственный базис P = [[p1, p2], [p2, −p1]]: P·up = +ω·up, P·down = −ω·down.

    Векторы (p2, ω − p1) и (−p2, ω + p1) с точностью до множителя совпадают
    с (ω + p1, p2) и (p1 − ω, p2); ветвь выбирается так, чтобы избежать вычитания близких чисел.
    При p2 ≈ 0 матрица уже диагональна, при ω ≈ 0 равна нулю: возвращается стандартный базис с флагами.

    Args:
        p1 (float): Диагональный коэффициент.
        p2 (float): Внедиагональный коэффициент.

    Returns:
        DiagonalBasis: Нормированные векторы и флаги вырождения.
    """
    omega = math.hypot(p1, p2)
    standard = np.array([1.0, 0.0], dtype=np.complex128), np.array([0.0, 1.0], dtype=np.complex128)

    if omega <= DEGENERACY_TOLERANCE:
        return DiagonalBasis(*standard, degenerate=True, velocity_zero=True)

    if abs(p2) <= DEGENERACY_TOLERANCE:
        if p1 > 0:
            return DiagonalBasis(*standard, degenerate=True)
        return DiagonalBasis(standard[1], standard[0], degenerate=True)

    if p1 >= 0:
        up = np.array([omega + p1, p2])
        down = np.array([-p2, omega + p1])
    else:
        up = np.array([p2, omega - p1])
        down = np.array([p1 - omega, p2])

    return DiagonalBasis(_unit_with_positive_tail(up), _unit_with_positive_tail(down))

def continuum_params(model, angles: AnglePair = None) -> ContinuumParams:
    """
    Собирает параметры непрерывного предела для фибоначчиевой модели.

    Args:
        model (WalkModel | WalkVariant | str): Модель; для WalkModel углы берутся из нее.
        angles (AnglePair, optional): Углы, если модель задана вариантом.
    """
    if angles is None:
        angles = model.angles
    variant = _variant_of(model)

    p1, p2 = transport_coefficients(variant, angles)
    omega = math.hypot(p1, p2)
    v = analytic_velocity(variant, angles)

    if abs(omega - v) > 1e-10:
        logger.warning("Скорость %.17g расходится с ω = %.17g для %s %s", v, omega, variant.value, angles)

    return ContinuumParams(
        variant=variant,
        angles=angles,
        p1=p1,
        p2=p2,
        omega=omega,
        v=v,
        basis=diagonalizing_basis(p1, p2),
    )

def _transport(amplitudes: np.ndarray, shift: float) -> np.ndarray:
    """Сдвигает периодический массив на `shift` узлов в сторону +x."""
    nearest = round(shift)
    if abs(shift - nearest) <= INTEGER_SHIFT_TOLERANCE:
        return np.roll(amplitudes, int(nearest))

    wavenumbers = 2.0 * np.pi * np.fft.fftfreq(amplitudes.size)
    return np.fft.ifft(np.fft.fft(amplitudes) * np.exp(-1j * wavenumbers * shift))

def dirac_reference(initial: SpinorField, params: ContinuumParams, t: float) -> SpinorField:
    """
    Точное решение безмассового уравнения Дирака к моменту t.

    Состояние раскладывается по собственному базису P; компонента −ω переносится
    на v·t в сторону +x, компонента +ω на v·t в сторону −x. Сдвиг на целое число узлов
    выполняется перестановкой, дробный - умножением на фазу в пространстве Фурье.

    Args:
        initial (SpinorField): Начальное состояние.
        params (ContinuumParams): Параметры непрерывного предела.
        t (float): Физическое время, t ≥ 0.

    Returns:
        SpinorField: Состояние в момент t.
    """
    if t < 0:
        raise ValueError(f"Время должно быть неотрицательным, получено {t}")
    if t == 0 or params.basis.velocity_zero:
        return initial.copy()

    basis = params.basis.matrix()
    up_part, down_part = basis.conj().T @ np.vstack((initial.u, initial.d))

    shift = params.v * t / initial.dx
    up_part = _transport(up_part, -shift)
    down_part = _transport(down_part, shift)

    u, d = basis @ np.vstack((up_part, down_part))
    return SpinorField(u, d, initial.dx)

def covariant_check(params: ContinuumParams, tolerance: float = 1e-10) -> CovariantReport:
    """
    Проверяет переход к ковариантной форме i(γ⁰∂₀ + γ¹∂₁)Ψ̄ = 0.

    Невязки: соотношения Клиффорда для γ⁰ = σ_x и γ¹ = −iσ_y, тождество σ_xσ_z = −iσ_y,
    умножение уравнения ∂_tΨ̄ + vσ_z∂_xΨ̄ = 0 на γ⁰ при x̃ = x/v, диагонализация P и ω = v.
    При v ≤ 1e-8 масштабирование не определено, проверка пропускается.
    """
    if params.v <= DEGENERACY_TOLERANCE:
        logger.debug("Ковариантная проверка пропущена: v = %.3e", params.v)
        return CovariantReport(passed=False, skipped=True)

    identity = np.eye(2)
    basis = params.basis.matrix()
    def norm(matrix: np.ndarray) -> float:
        return float(np.max(np.abs(matrix)))

    residuals = {
        'gamma0_squared': norm(GAMMA_0 @ GAMMA_0 - identity),
        'gamma1_squared': norm(GAMMA_1 @ GAMMA_1 + identity),
        'anticommutator': norm(GAMMA_0 @ GAMMA_1 + GAMMA_1 @ GAMMA_0),
        'sigma_product': norm(SIGMA_X @ SIGMA_Z + 1j * SIGMA_Y),
        # γ⁰·(I ∂_t + vσ_z ∂_x) = γ⁰∂_0 + γ¹∂_1 при ∂_1 = v ∂_x
        'rescaled_form': norm(GAMMA_0 @ (params.v * SIGMA_Z) - params.v * GAMMA_1),
        'diagonalization': norm(basis.conj().T @ params.transport_matrix @ basis - params.omega * SIGMA_Z),
        'velocity_identity': abs(params.omega - params.v),
    }

    return CovariantReport(passed=all(value < tolerance for value in residuals.values()), residuals=residuals)

def walk_dirac_distance(model: WalkModel, n: int, time: float, width: float,
                        spinor: tuple[complex, complex] = (1.0, 1.0j)) -> float:
    """
    L1-расстояние между плотностью блуждания и плотностью решения Дирака в момент `time`.

    Шаг решетки Δx = 2π/n, Δt = Δx; выполняется ⌊time/Δt⌋ шагов, ширина гауссова пакета
    `width` задается в физических единицах.

    Args:
        model (WalkModel): Фибоначчиева модель.
        n (int): Размер решетки.
        time (float): Физическое время, не меньше 0.
        width (float): Ширина начального пакета в физических единицах.
        spinor (tuple): Внутренний спинор начального состояния.

    Returns:
        float: Σ_m |ρ_walk − ρ_dirac|.
    """
    if time < 0:
        raise ValueError(f"Время должно быть неотрицательным, получено {time}")

    params = continuum_params(model)
    dx = 2.0 * math.pi / n
    steps = int(math.floor(time / dx + INTEGER_SHIFT_TOLERANCE))

    initial = SpinorField.gaussian(n, width / dx, spinor=spinor, dx=dx)
    walked = run(model, initial, steps, snapshot_stride=steps).final if steps else initial
    reference = dirac_reference(initial, params, steps * dx)

    distance = float(np.sum(np.abs(density(walked) - density(reference))))
    logger.debug("L1 блуждание-Дирак: %s, n=%d, шагов=%d, L1=%.6g", model, n, steps, distance)
    return distance
