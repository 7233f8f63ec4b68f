"""Scenario configuration shared by the channel, Monte-Carlo and CLI layers."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class ConfigError(ValueError):
    """Raised for invalid scenario parameters or malformed inputs."""


class EveMode(Enum):
    """Which media are exposed to eavesdropping."""

    SINGLE_PLC = "single-plc"
    SINGLE_WIRELESS = "single-wireless"
    TWO_LINK = "two-link"

    @property
    def is_single(self) -> bool:
        return self is not EveMode.TWO_LINK


class Scheme(Enum):
    """Transmission scheme under evaluation."""

    TSC = "tsc"
    AN_SHARING = "an-sharing"
    PLC_ONLY = "plc-only"
    WIRELESS_ONLY = "wireless-only"


def db_to_linear(db: float) -> float:
    return 10.0 ** (db / 10.0)


def linear_to_db(x: float) -> float:
    import math

    return 10.0 * math.log10(x)


def parse_eve_mode(text) -> EveMode:
    if isinstance(text, EveMode):
        return text
    try:
        return EveMode(str(text).strip().lower())
    except ValueError:
        choices = ", ".join(m.value for m in EveMode)
        raise ConfigError(f"unknown eve mode {text!r}; choose from: {choices}") from None


def parse_scheme(text) -> Scheme:
    if isinstance(text, Scheme):
        return text
    try:
        return Scheme(str(text).strip().lower())
    except ValueError:
        choices = ", ".join(s.value for s in Scheme)
        raise ConfigError(f"unknown scheme {text!r}; choose from: {choices}") from None


# scheme/mode pairs that make no sense: the scheme's only medium is not tapped
_INCOMPATIBLE = {
    (Scheme.PLC_ONLY, EveMode.SINGLE_WIRELESS),
    (Scheme.WIRELESS_ONLY, EveMode.SINGLE_PLC),
}


@dataclass
class ScenarioConfig:
    """One simulation scenario.

    Powers are given as total input SNRs in dB: gamma_a_db corresponds to
    Alice's total budget P_A = Gamma_A * n * kappa spread over the OFDM
    block, and likewise for Bob.  ``target_r`` is the secrecy rate in
    bits/s/Hz; internally it is compared against block rates scaled by
    (n + n_cp).
    """

    n: int = 64
    n_cp: int = 16
    gamma_a_db: float = 20.0
    gamma_b_db: float = 20.0
    theta: float = 0.5
    target_r: float = 1.0
    eve_mode: EveMode = EveMode.TWO_LINK
    scheme: Scheme = Scheme.AN_SHARING
    kappa: float = 1.0
    trials: int = 10_000
    seed: int = 12345
    plc_channel_file: str | None = field(default=None)

    @property
    def p_a(self) -> float:
        """Alice's total transmit power in Watts."""
        return db_to_linear(self.gamma_a_db) * self.n * self.kappa

    @property
    def p_b(self) -> float:
        """Bob's total AN power budget in Watts."""
        return db_to_linear(self.gamma_b_db) * self.n * self.kappa

    @property
    def block_rate_threshold(self) -> float:
        """Target secrecy rate converted to bits per OFDM block."""
        return self.target_r * (self.n + self.n_cp)

    def to_dict(self) -> dict:
        """Flat JSON-compatible mapping; enums become their string values."""
        return {
            "n": self.n,
            "n_cp": self.n_cp,
            "gamma_a_db": self.gamma_a_db,
            "gamma_b_db": self.gamma_b_db,
            "theta": self.theta,
            "target_r": self.target_r,
            "eve_mode": self.eve_mode.value,
            "scheme": self.scheme.value,
            "kappa": self.kappa,
            "trials": self.trials,
            "seed": self.seed,
            "plc_channel_file": self.plc_channel_file,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ScenarioConfig":
        """Build a config from a flat mapping, rejecting unknown keys."""
        known = set(cls().to_dict())
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        kwargs = dict(data)
        if "eve_mode" in kwargs:
            kwargs["eve_mode"] = parse_eve_mode(kwargs["eve_mode"])
        if "scheme" in kwargs:
            kwargs["scheme"] = parse_scheme(kwargs["scheme"])
        return cls(**kwargs)

    def validate(self) -> "ScenarioConfig":
        if self.n < 1:
            raise ConfigError(f"n must be >= 1, got {self.n}")
        if self.n_cp < 0:
            raise ConfigError(f"n_cp must be >= 0, got {self.n_cp}")
        if not 0.0 <= self.theta <= 1.0:
            raise ConfigError(f"theta must lie in [0, 1], got {self.theta}")
        if self.target_r < 0.0:
            raise ConfigError(f"target_r must be >= 0, got {self.target_r}")
        if self.kappa <= 0.0:
            raise ConfigError(f"kappa must be > 0, got {self.kappa}")
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        if not isinstance(self.eve_mode, EveMode):
            raise ConfigError(f"bad eve_mode: {self.eve_mode!r}")
        if not isinstance(self.scheme, Scheme):
            raise ConfigError(f"bad scheme: {self.scheme!r}")
        if (self.scheme, self.eve_mode) in _INCOMPATIBLE:
            raise ConfigError(
                f"scheme {self.scheme.value} cannot be paired with eve mode "
                f"{self.eve_mode.value}: the only used medium is never tapped"
            )
        return self
