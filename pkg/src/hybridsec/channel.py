"""Channel generation for the hybrid PLC/wireless OFDM link.

Wireless links use i.i.d. zero-mean circularly-symmetric Gaussian CIR taps;
the per-sub-channel frequency response is the DFT of the tap vector.  PLC
links are deterministic: either loaded from a CSV file of complex gains or
evaluated from a parametric multipath transfer function

    H(f) = scale * sum_p g_p * exp(-(a0 + a1 f^K) d_p) * exp(-j 2 pi f d_p / v)

All operations are pure given an explicit random stream; there is no module
state beyond the bundled default path models.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from enum import IntEnum
from importlib import resources
from pathlib import Path
from typing import Union

import numpy as np

from .config import ConfigError, ScenarioConfig


class Medium(IntEnum):
    PLC = 0
    WIRELESS = 1


class LinkId(IntEnum):
    ALICE_BOB = 0
    ALICE_EVE = 1
    BOB_EVE = 2


class Node(IntEnum):
    ALICE = 0
    BOB = 1
    EVE = 2


@dataclass(frozen=True)
class Cir:
    """Channel impulse response: complex taps plus their per-tap variances."""

    taps: np.ndarray
    tap_variances: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "taps", np.asarray(self.taps, dtype=np.complex128))
        object.__setattr__(
            self, "tap_variances", np.asarray(self.tap_variances, dtype=np.float64)
        )
        if self.taps.shape != self.tap_variances.shape:
            raise ConfigError("taps and tap_variances must have equal length")


@dataclass(frozen=True)
class FreqResponse:
    """Per-sub-channel complex gains of one link over one medium."""

    gains: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.gains, dtype=np.complex128)
        if g.ndim != 1:
            raise ConfigError("frequency response must be one-dimensional")
        if not np.all(np.isfinite(g)):
            raise ConfigError("frequency response contains non-finite entries")
        object.__setattr__(self, "gains", g)

    @property
    def n(self) -> int:
        return self.gains.size

    def power(self) -> np.ndarray:
        """|H_k|^2 per sub-channel."""
        return np.abs(self.gains) ** 2


@dataclass
class ChannelRealization:
    """Frequency responses for every (link, medium) pair in one coherence interval."""

    responses: dict[tuple[LinkId, Medium], FreqResponse]

    def __post_init__(self):
        for link in (LinkId.ALICE_BOB, LinkId.ALICE_EVE):
            for medium in Medium:
                if (link, medium) not in self.responses:
                    raise ConfigError(f"missing response for {link.name}/{medium.name}")

    def gains(self, link: LinkId, medium: Medium) -> np.ndarray:
        return self.responses[(link, medium)].gains

    def gain2(self, link: LinkId, medium: Medium) -> np.ndarray:
        return self.responses[(link, medium)].power()


@dataclass
class NoiseProfile:
    """Additive-noise power per (node, medium, sub-channel), strictly positive."""

    kappa: np.ndarray  # shape (3 nodes, 2 media, n)

    def __post_init__(self):
        k = np.asarray(self.kappa, dtype=np.float64)
        if k.ndim != 3 or k.shape[0] != 3 or k.shape[1] != 2:
            raise ConfigError("kappa must have shape (3, 2, n)")
        if not np.all(np.isfinite(k)) or np.any(k <= 0.0):
            raise ConfigError("noise powers must be finite and strictly positive")
        self.kappa = k

    @classmethod
    def flat(cls, kappa: float, n: int) -> "NoiseProfile":
        if kappa <= 0.0:
            raise ConfigError(f"kappa must be > 0, got {kappa}")
        return cls(np.full((3, 2, n), float(kappa)))

    def at(self, node: Node, medium: Medium) -> np.ndarray:
        """Per-sub-channel noise power of one node on one medium."""
        return self.kappa[int(node), int(medium)]


def gen_wireless_cir(tap_variances, rng: np.random.Generator) -> Cir:
    """Draw one wireless CIR with independent complex Gaussian taps.

    Tap i is CN(0, sigma_i^2): real and imaginary parts are independent
    N(0, sigma_i^2 / 2), so the expected total energy is sum(sigma_i^2).
    """
    var = np.asarray(tap_variances, dtype=np.float64)
    if np.any(var < 0.0):
        raise ConfigError("tap variances must be non-negative")
    z = rng.standard_normal((var.size, 2))
    taps = np.sqrt(var / 2.0) * (z[:, 0] + 1j * z[:, 1])
    return Cir(taps=taps, tap_variances=var)


def cir_to_freq(cir: Cir, n: int) -> FreqResponse:
    """DFT of the tap vector onto n OFDM sub-channels.

    gains[k] = sum_i taps[i] exp(-j 2 pi i k / n).  Requires the CIR to fit
    inside the cyclic prefix, i.e. len(taps) <= n.
    """
    if cir.taps.size > n:
        raise ConfigError(
            f"CIR with {cir.taps.size} taps does not fit in {n} sub-channels"
        )
    return FreqResponse(np.fft.fft(cir.taps, n=n))


@dataclass(frozen=True)
class PlcPathModel:
    """Parametric multipath description of a deterministic PLC link.

    Each path p contributes gain * exp(-(att0 + att1 f^exponent) length) with
    propagation delay length / speed.  The response is evaluated on a uniform
    frequency grid spanning ``band`` and multiplied by ``scale``.
    """

    gains: tuple[float, ...]
    lengths_m: tuple[float, ...]
    att0: float = 0.0
    att1: float = 0.0
    exponent: float = 1.0
    speed: float = 1.5e8
    band: tuple[float, float] = (2e6, 28e6)
    scale: float = 1.0

    def __post_init__(self):
        if len(self.gains) != len(self.lengths_m) or not self.gains:
            raise ConfigError("path gains and lengths must be non-empty and equal length")
        if self.speed <= 0.0:
            raise ConfigError("propagation speed must be positive")

    def frequencies(self, n: int) -> np.ndarray:
        return np.linspace(self.band[0], self.band[1], n)

    def evaluate(self, n: int) -> np.ndarray:
        f = self.frequencies(n)[None, :]
        g = np.asarray(self.gains, dtype=np.float64)[:, None]
        d = np.asarray(self.lengths_m, dtype=np.float64)[:, None]
        att = np.exp(-(self.att0 + self.att1 * f**self.exponent) * d)
        phase = np.exp(-2j * np.pi * f * (d / self.speed))
        return self.scale * (g * att * phase).sum(axis=0)


PlcSource = Union[str, Path, PlcPathModel]

# Bundled default PLC links.  Path geometries are indoor-scale; the
# Alice-Bob scale normalises the mean per-sub-channel gain at n=64 to 1.0 so
# the PLC medium is comparable to the unit-energy wireless channel.  The
# Alice-Eve link shares the same line, so its gains are comparable too
# (slightly ahead of Alice-Bob in log-sum): a PLC-only system then has
# essentially no secrecy advantage, while the legitimate pair still benefits
# from media diversity.
DEFAULT_PLC_ALICE_BOB = PlcPathModel(
    gains=(0.62, 0.41, -0.28, 0.19),
    lengths_m=(12.0, 17.4, 23.9, 31.1),
    att0=9.4e-3,
    att1=4.2e-10,
    scale=1.6328778820257734,
)
DEFAULT_PLC_ALICE_EVE = PlcPathModel(
    gains=(0.58, 0.33, -0.30, 0.17, 0.11),
    lengths_m=(13.2, 19.6, 26.1, 33.4, 42.2),
    att0=9.0e-3,
    att1=4.5e-10,
    scale=1.7234166857317832,
)
DEFAULT_PLC_BOB_EVE = PlcPathModel(
    gains=(0.50, 0.31, -0.22),
    lengths_m=(15.0, 24.1, 39.6),
    att0=1.0e-2,
    att1=5.0e-10,
    scale=1.619716853640195,
)

DEFAULT_PLC = {
    LinkId.ALICE_BOB: DEFAULT_PLC_ALICE_BOB,
    LinkId.ALICE_EVE: DEFAULT_PLC_ALICE_EVE,
    LinkId.BOB_EVE: DEFAULT_PLC_BOB_EVE,
}

_DATA_FILES = {
    LinkId.ALICE_BOB: "plc_alice_bob_n64.csv",
    LinkId.ALICE_EVE: "plc_alice_eve_n64.csv",
    LinkId.BOB_EVE: "plc_bob_eve_n64.csv",
}


def bundled_plc_path(link: LinkId) -> Path:
    """Filesystem path of the committed CSV for one default PLC link."""
    return Path(resources.files("hybridsec").joinpath("data", _DATA_FILES[link]))


def load_plc_file(path, n: int) -> FreqResponse:
    """Read a PLC channel file: one ``k,re,im`` row per sub-channel.

    Lines starting with ``#`` are comments.  Indices must run 0..n-1 in
    ascending order and every entry must be finite.
    """
    path = os.fspath(path)
    gains = np.zeros(n, dtype=np.complex128)
    expect = 0
    # OSError propagates untouched so callers can tell I/O from bad content
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(",")
            if len(parts) != 3:
                raise ConfigError(f"{path}:{lineno}: expected 'k,re,im'")
            try:
                k = int(parts[0])
                re, im = float(parts[1]), float(parts[2])
            except ValueError as exc:
                raise ConfigError(f"{path}:{lineno}: {exc}") from exc
            if k != expect:
                raise ConfigError(
                    f"{path}:{lineno}: sub-channel index {k}, expected {expect}"
                )
            if k >= n:
                raise ConfigError(f"{path}: more than {n} sub-channels")
            if not (np.isfinite(re) and np.isfinite(im)):
                raise ConfigError(f"{path}:{lineno}: non-finite gain")
            gains[k] = re + 1j * im
            expect += 1
    if expect != n:
        raise ConfigError(f"{path}: {expect} sub-channels, expected {n}")
    return FreqResponse(gains)


def write_plc_file(resp: FreqResponse, path) -> None:
    """Write a frequency response in the ``k,re,im`` channel-file format."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# k,re,im\n")
        for k, g in enumerate(resp.gains):
            # repr of a Python float round-trips bit-exactly
            fh.write(f"{k},{float(g.real)!r},{float(g.imag)!r}\n")


def plc_response(source: PlcSource, n: int) -> FreqResponse:
    """Deterministic PLC frequency response from a file or a path model."""
    if isinstance(source, PlcPathModel):
        return FreqResponse(source.evaluate(n))
    return load_plc_file(source, n)


def _wireless_tap_variances(scenario: ScenarioConfig) -> np.ndarray:
    # nu^W = n_cp taps of equal variance summing to unit link gain
    n_taps = scenario.n_cp + 1
    return np.full(n_taps, 1.0 / n_taps)


def _plc_sources(scenario: ScenarioConfig) -> dict[LinkId, PlcSource]:
    sources: dict[LinkId, PlcSource] = dict(DEFAULT_PLC)
    if scenario.plc_channel_file is not None:
        sources[LinkId.ALICE_BOB] = scenario.plc_channel_file
    return sources


def realize(scenario: ScenarioConfig, rng: np.random.Generator) -> ChannelRealization:
    """Draw one coherence interval of channel responses.

    Wireless links are freshly drawn from independent sub-streams (one per
    link, in LinkId order); PLC links are deterministic per configuration.
    """
    scenario.validate()
    var = _wireless_tap_variances(scenario)
    sources = _plc_sources(scenario)
    subs = rng.spawn(len(LinkId))
    responses: dict[tuple[LinkId, Medium], FreqResponse] = {}
    for link, sub in zip(LinkId, subs):
        cir = gen_wireless_cir(var, sub)
        responses[(link, Medium.WIRELESS)] = cir_to_freq(cir, scenario.n)
        responses[(link, Medium.PLC)] = plc_response(sources[link], scenario.n)
    return ChannelRealization(responses)
