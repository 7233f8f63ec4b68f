"""Per-sub-channel CNRs, medium selection and water-filling power allocation.

Water-filling is used only to determine the active sub-channel set; the
transmit power is then split equally across the active set.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import Medium
from .config import ConfigError


@dataclass
class MediumSelection:
    """Higher- and lower-CNR medium of the Alice-Bob link per sub-channel."""

    higher: np.ndarray  # Medium values, shape (n,)
    lower: np.ndarray

    def __post_init__(self):
        self.higher = np.asarray(self.higher, dtype=np.int8)
        self.lower = np.asarray(self.lower, dtype=np.int8)
        if self.higher.shape != self.lower.shape:
            raise ConfigError("higher/lower selections must have equal length")
        if np.any(self.higher == self.lower):
            raise ConfigError("higher and lower medium must differ on every sub-channel")

    @property
    def n(self) -> int:
        return self.higher.size


@dataclass
class ActiveSet:
    """Sub-channels given power by water-filling, with equal power each."""

    indices: np.ndarray  # sorted sub-channel indices
    power_per_channel: float
    water_level: float
    n: int  # total number of sub-channels

    @property
    def size(self) -> int:
        return self.indices.size

    @property
    def is_degenerate(self) -> bool:
        return self.size == 0

    def power_vector(self) -> np.ndarray:
        p = np.zeros(self.n)
        p[self.indices] = self.power_per_channel
        return p

    def mask(self) -> np.ndarray:
        m = np.zeros(self.n, dtype=bool)
        m[self.indices] = True
        return m


def compute_cnr(resp, kappa) -> np.ndarray:
    """Channel-to-noise ratio |H_k|^2 / kappa_k per sub-channel.

    ``kappa`` may be a scalar or a per-sub-channel array; it must be
    strictly positive.
    """
    kappa = np.asarray(kappa, dtype=np.float64)
    if np.any(kappa <= 0.0) or not np.all(np.isfinite(kappa)):
        raise ConfigError("noise power must be finite and strictly positive")
    return resp.power() / kappa


def select_medium(cnr_plc: np.ndarray, cnr_wireless: np.ndarray) -> MediumSelection:
    """Pick the higher-CNR medium per sub-channel; ties go to PLC."""
    cnr_plc = np.asarray(cnr_plc, dtype=np.float64)
    cnr_wireless = np.asarray(cnr_wireless, dtype=np.float64)
    if cnr_plc.shape != cnr_wireless.shape:
        raise ConfigError("CNR vectors must have equal length")
    plc_wins = cnr_plc >= cnr_wireless
    higher = np.where(plc_wins, int(Medium.PLC), int(Medium.WIRELESS))
    lower = np.where(plc_wins, int(Medium.WIRELESS), int(Medium.PLC))
    return MediumSelection(higher=higher, lower=lower)


def waterfill_active_set(best_cnr: np.ndarray, total_power: float) -> ActiveSet:
    """Water-filling active-set selection with equal power over the set.

    The standard sorted-threshold iteration finds the water level mu solving
    sum_active (mu - 1/cnr_k) = total_power; a sub-channel is active when
    mu > 1/cnr_k.  The returned allocation is the equal split
    total_power / |active| rather than the water-filling levels themselves.

    An all-zero CNR vector yields the degenerate empty set instead of an
    error so Monte-Carlo loops can treat it as zero throughput.
    """
    cnr = np.asarray(best_cnr, dtype=np.float64)
    if total_power <= 0.0:
        raise ConfigError(f"total power must be > 0, got {total_power}")
    if cnr.ndim != 1 or cnr.size == 0:
        raise ConfigError("CNR vector must be one-dimensional and non-empty")
    if np.any(cnr < 0.0):
        raise ConfigError("CNRs must be non-negative")

    n = cnr.size
    with np.errstate(divide="ignore"):
        inv = np.where(cnr > 0.0, 1.0 / cnr, np.inf)
    order = np.argsort(inv, kind="stable")
    inv_sorted = inv[order]

    count = 0
    cum = 0.0
    water = math.nan
    for m in range(1, n + 1):
        threshold = inv_sorted[m - 1]
        if not np.isfinite(threshold):
            break
        cum += threshold
        mu = (total_power + cum) / m
        if mu > threshold:
            count = m
            water = mu
        else:
            break

    if count == 0:
        return ActiveSet(
            indices=np.empty(0, dtype=np.intp),
            power_per_channel=0.0,
            water_level=math.nan,
            n=n,
        )
    indices = np.sort(order[:count])
    return ActiveSet(
        indices=indices,
        power_per_channel=total_power / count,
        water_level=water,
        n=n,
    )
