"""Weber's law: S1 * dP = k * dS.

Perceived increments are proportional to relative stimulus increments, so a
uniformly rising perception corresponds to stimuli in geometric progression
of ratio 1 + C/k.  That is the empirical argument for spacing scale pitches
geometrically.  This module is plain floating point: the law is an empirical
relation over real-valued stimuli, not lattice arithmetic.
"""

from __future__ import annotations

from typing import Sequence


def perception_increments(stimuli: Sequence[float], k: float) -> list[float]:
    """Perceived change at each step: dP_j = k * (S_{j+1} - S_j) / S_j."""
    if k <= 0:
        raise ValueError("the context constant k must be positive")
    values = [float(s) for s in stimuli]
    if len(values) < 2:
        raise ValueError("a stimulus series needs at least two values")
    if any(v <= 0 for v in values):
        raise ValueError("stimuli must be positive")
    return [k * (b - a) / a for a, b in zip(values, values[1:])]


def uniform_stimuli(s1: float, c: float, k: float, n: int) -> list[float]:
    """The stimulus series whose perceived increments are constantly ``c``.

    Geometric with ratio 1 + c/k: S_j = s1 * (1 + c/k)**(j-1), j = 1..n.
    """
    if k <= 0:
        raise ValueError("the context constant k must be positive")
    if s1 <= 0:
        raise ValueError("the starting stimulus must be positive")
    if n < 2:
        raise ValueError("a stimulus series needs at least two values")
    ratio = 1.0 + c / k
    if ratio <= 0:
        raise ValueError(f"progression ratio 1 + C/k must be positive, got {ratio}")
    return [s1 * ratio ** j for j in range(n)]
