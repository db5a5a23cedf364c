"""
Статические SVG-рисунки: профиль плотности и карта скоростей.
"""

import matplotlib

matplotlib.use('Agg')

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

# Фиксированная соль и отсутствие даты делают SVG воспроизводимым
matplotlib.rcParams['svg.hashsalt'] = 'fibonacci-walks'

SVG_METADATA = {'Date': None}

def plot_density(path: str, x: np.ndarray, rho: np.ndarray, title: str) -> str:
    figure, axes = plt.subplots(figsize=(8, 4))
    axes.plot(x, rho, linewidth=1.0)
    axes.set_xlabel('x')
    axes.set_ylabel('ρ')
    axes.set_title(title)
    figure.tight_layout()
    figure.savefig(path, format='svg', metadata=SVG_METADATA)
    plt.close(figure)
    return path

def plot_velocity_contour(path: str, alpha: np.ndarray, beta: np.ndarray, velocity: np.ndarray, title: str) -> str:
    """
    Карта скорости v(α, β); массивы имеют форму сетки (индексация 'ij').
    """
    figure, axes = plt.subplots(figsize=(6, 5))
    contour = axes.contourf(alpha, beta, velocity, levels=20, cmap='viridis')
    figure.colorbar(contour, ax=axes, label='v')
    axes.set_xlabel('α')
    axes.set_ylabel('β')
    axes.set_title(title)
    figure.tight_layout()
    figure.savefig(path, format='svg', metadata=SVG_METADATA)
    plt.close(figure)
    return path
