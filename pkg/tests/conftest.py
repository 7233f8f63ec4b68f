import numpy as np
import pytest

from hybridsec.allocation import ActiveSet, MediumSelection
from hybridsec.channel import ChannelRealization, FreqResponse, LinkId, Medium, NoiseProfile


def random_realization(rng, n, links=(LinkId.ALICE_BOB, LinkId.ALICE_EVE)):
    """Random complex gains for every (link, medium) pair."""
    responses = {}
    for link in links:
        for medium in Medium:
            g = rng.standard_normal((n, 2))
            responses[(link, medium)] = FreqResponse((g[:, 0] + 1j * g[:, 1]) / np.sqrt(2.0))
    return ChannelRealization(responses)


def random_noise(rng, n, colored=False):
    if colored:
        return NoiseProfile(rng.uniform(0.2, 3.0, size=(3, 2, n)))
    return NoiseProfile.flat(1.0, n)


def random_selection(rng, n):
    plc_high = rng.random(n) < 0.5
    higher = np.where(plc_high, int(Medium.PLC), int(Medium.WIRELESS))
    lower = np.where(plc_high, int(Medium.WIRELESS), int(Medium.PLC))
    return MediumSelection(higher=higher, lower=lower)


def random_active(rng, n, total_power):
    size = int(rng.integers(1, n + 1))
    indices = np.sort(rng.choice(n, size=size, replace=False))
    return ActiveSet(
        indices=indices,
        power_per_channel=total_power / size,
        water_level=float("nan"),
        n=n,
    )


@pytest.fixture
def rng():
    return np.random.default_rng(0xC0FFEE)
