"""Instantaneous secrecy rates for the hybrid link.

Two schemes are covered: the no-AN baseline that simply sends each data
stream on the higher-CNR medium (TSC), and the AN-sharing scheme where Bob
feeds artificial noise to Alice on the lower-CNR medium and Alice forwards
an amplified noisy copy together with her data on the higher-CNR medium.
Bob cancels the known AN; eavesdroppers cannot.

All rates are in bits per OFDM block (per-sub-channel rates summed over the
active set); the ISR is the Bob-minus-Eve difference clamped at zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .allocation import ActiveSet, MediumSelection
from .channel import ChannelRealization, LinkId, Medium, NoiseProfile, Node
from .config import ConfigError, EveMode


@dataclass(frozen=True)
class PowerSplit:
    """Division of Alice's per-sub-channel power between data and AN."""

    theta: float
    p_data: float
    p_an: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= 1.0:
            raise ConfigError(f"theta must lie in [0, 1], got {self.theta}")

    @classmethod
    def of(cls, theta: float, total_power: float, a_size: int) -> "PowerSplit":
        if a_size < 1:
            raise ConfigError("power split needs a non-empty active set")
        per_channel = total_power / a_size
        return cls(theta=theta, p_data=theta * per_channel, p_an=(1.0 - theta) * per_channel)

    @property
    def per_channel(self) -> float:
        return self.p_data + self.p_an

    @property
    def theta_tilde(self) -> float:
        """AN-to-data power ratio (1 - theta) / theta."""
        if self.theta == 0.0:
            return math.inf
        return (1.0 - self.theta) / self.theta


@dataclass
class RateBreakdown:
    """Per-sub-channel rates at Bob and Eve plus the block ISR."""

    bob_rates: np.ndarray
    eve_rates: np.ndarray
    net_rate: float  # unclamped sum(bob) - sum(eve); white-box hook for tests
    isr: float

    @classmethod
    def from_rates(cls, bob: np.ndarray, eve: np.ndarray) -> "RateBreakdown":
        net = float(np.sum(bob) - np.sum(eve))
        return cls(bob_rates=bob, eve_rates=eve, net_rate=net, isr=max(net, 0.0))


def eve_medium(mode: EveMode) -> Medium:
    """Medium tapped by a single-link eavesdropper."""
    if mode is EveMode.SINGLE_PLC:
        return Medium.PLC
    if mode is EveMode.SINGLE_WIRELESS:
        return Medium.WIRELESS
    raise ConfigError("two-link eavesdropping has no single tapped medium")


def indicator_eve_on_higher(mode: EveMode, sel: MediumSelection, k: int) -> int:
    """1 when a single-link Eve taps the higher-CNR medium of sub-channel k."""
    return int(sel.higher[k] == int(eve_medium(mode)))


def _exposure(mode: EveMode, sel: MediumSelection) -> np.ndarray:
    """Per-sub-channel indicator that the data medium is tapped."""
    if mode is EveMode.TWO_LINK:
        return np.ones(sel.n)
    return (sel.higher == int(eve_medium(mode))).astype(np.float64)


class _Grid:
    """Gains and noise powers gathered along the selected media."""

    def __init__(self, chan: ChannelRealization, noise: NoiseProfile, sel: MediumSelection):
        k = np.arange(sel.n)
        ab = np.stack(
            [chan.gain2(LinkId.ALICE_BOB, Medium.PLC), chan.gain2(LinkId.ALICE_BOB, Medium.WIRELESS)]
        )
        ae = np.stack(
            [chan.gain2(LinkId.ALICE_EVE, Medium.PLC), chan.gain2(LinkId.ALICE_EVE, Medium.WIRELESS)]
        )
        self.hab_high2 = ab[sel.higher, k]
        self.hab_low2 = ab[sel.lower, k]
        self.hae_high2 = ae[sel.higher, k]
        self.kappa_bob_high = noise.kappa[Node.BOB, sel.higher, k]
        self.kappa_alice_low = noise.kappa[Node.ALICE, sel.lower, k]
        self.kappa_eve_high = noise.kappa[Node.EVE, sel.higher, k]


def _zero_breakdown(n: int) -> RateBreakdown:
    return RateBreakdown.from_rates(np.zeros(n), np.zeros(n))


def isr_tsc_single(
    chan: ChannelRealization,
    noise: NoiseProfile,
    sel: MediumSelection,
    active: ActiveSet,
    mode: EveMode,
) -> RateBreakdown:
    """No-AN ISR when a single eavesdropper taps one medium.

    Eve only intercepts a sub-channel when her medium carries its data; the
    lower-CNR medium is unused, so tapping it yields her nothing.
    """
    if mode is EveMode.TWO_LINK:
        raise ConfigError("use isr_tsc_two for two-link eavesdropping")
    return _tsc(chan, noise, sel, active, _exposure(mode, sel))


def isr_tsc_two(
    chan: ChannelRealization,
    noise: NoiseProfile,
    sel: MediumSelection,
    active: ActiveSet,
) -> RateBreakdown:
    """No-AN ISR with one eavesdropper per medium (non-colluding)."""
    return _tsc(chan, noise, sel, active, np.ones(sel.n))


def _tsc(chan, noise, sel, active, exposed) -> RateBreakdown:
    if active.is_degenerate:
        return _zero_breakdown(sel.n)
    g = _Grid(chan, noise, sel)
    mask = active.mask()
    p = active.power_per_channel
    x = g.hab_high2 * (p / g.kappa_bob_high)
    y = g.hae_high2 * (p / g.kappa_eve_high)
    bob = np.where(mask, np.log2(1.0 + x), 0.0)
    eve = np.where(mask, exposed * np.log2(1.0 + y), 0.0)
    return RateBreakdown.from_rates(bob, eve)


def isr_tsc_two_asymptotic(
    chan: ChannelRealization,
    noise: NoiseProfile,
    sel: MediumSelection,
    active: ActiveSet,
) -> float:
    """Infinite-input-SNR limit of the two-link no-AN ISR.

    Returns +inf when any active sub-channel has a zero Eve gain (the limit
    is unbounded there).
    """
    if active.is_degenerate:
        return 0.0
    g = _Grid(chan, noise, sel)
    idx = active.indices
    num = g.hab_high2[idx] * g.kappa_eve_high[idx]
    den = g.hae_high2[idx] * g.kappa_bob_high[idx]
    if np.any(den == 0.0):
        return math.inf
    net = float(np.sum(np.log2(num / den)))
    return max(net, 0.0)


def an_weight(h_ab_low: complex, gamma_ba_low: float, p_a_k: float, theta: float, kappa_a_low: float) -> float:
    """Forwarding weight applied by Alice to the AN signal received from Bob.

    Normalises the received AN-plus-noise power and scales it to the AN
    power budget, so the forwarded component carries (1 - theta) * p_a_k
    Watts exactly.
    """
    if not 0.0 <= theta <= 1.0:
        raise ConfigError(f"theta must lie in [0, 1], got {theta}")
    if kappa_a_low <= 0.0:
        raise ConfigError("noise power must be strictly positive")
    received = (abs(h_ab_low) ** 2 * gamma_ba_low + 1.0) * kappa_a_low
    return math.sqrt((1.0 - theta) * p_a_k) / math.sqrt(received)


def isr_an_single(
    chan: ChannelRealization,
    noise: NoiseProfile,
    sel: MediumSelection,
    active: ActiveSet,
    split: PowerSplit,
    p_b: float,
    mode: EveMode,
) -> RateBreakdown:
    """AN-sharing ISR when a single eavesdropper taps one medium.

    On sub-channels whose data medium is not tapped, Bob stays silent (no
    AN) and Alice spends her full per-channel power on data.
    """
    if mode is EveMode.TWO_LINK:
        raise ConfigError("use isr_an_two for two-link eavesdropping")
    return _an(chan, noise, sel, active, split, p_b, _exposure(mode, sel))


def isr_an_two(
    chan: ChannelRealization,
    noise: NoiseProfile,
    sel: MediumSelection,
    active: ActiveSet,
    split: PowerSplit,
    p_b: float,
) -> RateBreakdown:
    """AN-sharing ISR with one eavesdropper per medium (non-colluding).

    Bob always shares AN on the lower-CNR medium; the eavesdropper on that
    medium receives no data, so only the higher-CNR interception counts.
    """
    return _an(chan, noise, sel, active, split, p_b, np.ones(sel.n))


def _an(chan, noise, sel, active, split, p_b, exposed) -> RateBreakdown:
    if active.is_degenerate:
        return _zero_breakdown(sel.n)
    g = _Grid(chan, noise, sel)
    mask = active.mask()
    theta = split.theta
    p_a_k = split.per_channel
    p_b_k = p_b / active.size

    x = g.hab_high2 * (p_a_k / g.kappa_bob_high)
    y = g.hae_high2 * (p_a_k / g.kappa_eve_high)
    # quality of the AN forwarding link: high when the AN dominates Alice's
    # own receiver noise, making Bob's cancellation nearly lossless
    fwd = g.hab_low2 * (p_b_k / g.kappa_alice_low) + 1.0

    bob_tapped = np.log2(1.0 + theta * x / ((1.0 - theta) * x / fwd + 1.0))
    bob_clean = np.log2(1.0 + x)
    bob = np.where(mask, np.where(exposed > 0.0, bob_tapped, bob_clean), 0.0)
    eve = np.where(mask, exposed * np.log2(1.0 + theta * y / ((1.0 - theta) * y + 1.0)), 0.0)
    return RateBreakdown.from_rates(bob, eve)


def an_alpha(chan: ChannelRealization, noise: NoiseProfile, sel: MediumSelection) -> np.ndarray:
    """Per-sub-channel gain-to-noise ratio of the AN forwarding link.

    This is the Alice-Bob gain on the lower-CNR medium over Alice's own
    noise there; it controls the AN-sharing secrecy rate in the
    infinite-Alice-power regime.
    """
    g = _Grid(chan, noise, sel)
    return g.hab_low2 / g.kappa_alice_low


def isr_an_infinite_pa(alpha, p_b: float, a_size: int, theta: float) -> float:
    """AN-sharing ISR in the infinite-Alice-power limit (two-link case).

    Depends only on legitimate-side quantities: the eavesdropper's rate
    saturates at log2(1/(1-theta)) per sub-channel regardless of her
    channels.  ``alpha`` is a scalar or per-active-channel vector of
    forwarding-link gain-to-noise ratios.
    """
    _check_theta_open(theta)
    if a_size < 1:
        raise ConfigError("a_size must be >= 1")
    alpha = np.broadcast_to(np.asarray(alpha, dtype=np.float64), (a_size,))
    if np.any(alpha < 0.0):
        raise ConfigError("alpha must be non-negative")
    theta_tilde = (1.0 - theta) / theta
    bob = np.sum(np.log2(1.0 + (alpha * (p_b / a_size) + 1.0) / theta_tilde))
    eve = a_size * math.log2(1.0 / (1.0 - theta))
    return max(float(bob - eve), 0.0)


def isr_lower_bound(alpha_min: float, p_b: float, a_size: int, theta: float) -> float:
    """Lower bound on the infinite-Alice-power ISR using the worst alpha."""
    _check_theta_open(theta)
    if a_size < 1:
        raise ConfigError("a_size must be >= 1")
    if alpha_min < 0.0:
        raise ConfigError("alpha_min must be non-negative")
    theta_tilde = (1.0 - theta) / theta
    per = math.log2(1.0 + (alpha_min * (p_b / a_size) + 1.0) / theta_tilde) - math.log2(
        1.0 / (1.0 - theta)
    )
    return max(a_size * per, 0.0)


def min_bob_power(target_r: float, theta: float, alpha_min: float, a_size: int) -> float:
    """Bob's AN power sufficient to certify a target secrecy rate.

    Inverts the worst-channel lower bound: feeding the result back into
    isr_lower_bound returns at least ``target_r``.  A zero alpha_min makes
    any positive rate unreachable and yields +inf.
    """
    _check_theta_open(theta)
    if a_size < 1:
        raise ConfigError("a_size must be >= 1")
    if target_r < 0.0:
        raise ConfigError("target rate must be >= 0")
    if alpha_min < 0.0:
        raise ConfigError("alpha_min must be non-negative")
    theta_tilde = (1.0 - theta) / theta
    need = theta_tilde * (2.0 ** (target_r / a_size) / (1.0 - theta) - 1.0) - 1.0
    if need <= 0.0:
        return 0.0
    if alpha_min == 0.0:
        return math.inf
    return a_size * need / alpha_min


def isr_single_medium(
    chan: ChannelRealization,
    noise: NoiseProfile,
    medium: Medium,
    active: ActiveSet,
    mode: EveMode,
) -> RateBreakdown:
    """ISR of a system confined to one medium (no media diversity).

    An eavesdropper present on that medium always intercepts the data; with
    two-link eavesdropping that is always the case.
    """
    if active.is_degenerate:
        return _zero_breakdown(active.n)
    exposed = 1.0 if mode is EveMode.TWO_LINK or eve_medium(mode) is medium else 0.0
    mask = active.mask()
    p = active.power_per_channel
    x = chan.gain2(LinkId.ALICE_BOB, medium) * (p / noise.at(Node.BOB, medium))
    y = chan.gain2(LinkId.ALICE_EVE, medium) * (p / noise.at(Node.EVE, medium))
    bob = np.where(mask, np.log2(1.0 + x), 0.0)
    eve = np.where(mask, exposed * np.log2(1.0 + y), 0.0)
    return RateBreakdown.from_rates(bob, eve)


def _check_theta_open(theta: float) -> None:
    if not 0.0 < theta < 1.0:
        raise ConfigError(
            f"theta must lie strictly inside (0, 1) for the high-power limit, got {theta}"
        )
