"""Deterministic sample grids for the inequality sweeps."""

from __future__ import annotations

import numpy as np

# Kronecker steps from the plastic number, the 2-d analogue of the golden ratio
_PLASTIC = 1.32471795724474602596
_STEPS = np.array([1 / _PLASTIC, 1 / _PLASTIC**2])


def curve_rng(seed: int, label: str) -> np.random.Generator:
    """Generator seeded by the run seed and a label such as the curve name."""
    return np.random.default_rng([seed, *label.encode("utf-8")])


def low_discrepancy(count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` points of the unit square from a randomly shifted R2 sequence.

    Returns
    -------
    np.ndarray
        Array of shape ``(count, 2)`` with entries in ``[0, 1)``.
    """
    shift = rng.random(2)
    k = np.arange(1, count + 1)[:, None]
    return np.mod(shift + k * _STEPS, 1.0)


def two_sided(
    count: int, rng: np.random.Generator, gap: float, reach: float, im_reach: float
) -> tuple[np.ndarray, np.ndarray]:
    """Complex samples with real part in ``(-reach, -gap)`` and ``(gap, reach)``.

    Returns
    -------
    tuple[np.ndarray, np.ndarray]
        The samples below and above the real threshold 0, ``count`` each.
    """
    pts = low_discrepancy(count, rng)
    re = gap + pts[:, 0] * (reach - gap)
    im = (2 * pts[:, 1] - 1) * im_reach
    return -re + 1j * im, re + 1j * im
