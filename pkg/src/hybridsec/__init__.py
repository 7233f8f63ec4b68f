"""Secrecy-rate and secure-throughput simulator for hybrid PLC/wireless OFDM links."""

__version__ = "0.1.0"

from ._kernels import backend as kernel_backend
from .allocation import ActiveSet, MediumSelection, compute_cnr, select_medium, waterfill_active_set
from .channel import (
    ChannelRealization,
    Cir,
    FreqResponse,
    LinkId,
    Medium,
    Node,
    NoiseProfile,
    PlcPathModel,
    cir_to_freq,
    gen_wireless_cir,
    load_plc_file,
    plc_response,
    realize,
)
from .config import ConfigError, EveMode, ScenarioConfig, Scheme
from .montecarlo import (
    ThroughputRecord,
    estimate_throughput,
    scheme_isr,
    sweep,
    trial_realization,
    write_csv,
    write_json,
)
from .secrecy import (
    PowerSplit,
    RateBreakdown,
    an_alpha,
    an_weight,
    indicator_eve_on_higher,
    isr_an_infinite_pa,
    isr_an_single,
    isr_an_two,
    isr_lower_bound,
    isr_single_medium,
    isr_tsc_single,
    isr_tsc_two,
    isr_tsc_two_asymptotic,
    min_bob_power,
)

__all__ = [
    "ActiveSet",
    "ChannelRealization",
    "Cir",
    "ConfigError",
    "EveMode",
    "FreqResponse",
    "LinkId",
    "Medium",
    "MediumSelection",
    "NoiseProfile",
    "Node",
    "PlcPathModel",
    "PowerSplit",
    "RateBreakdown",
    "ScenarioConfig",
    "Scheme",
    "ThroughputRecord",
    "an_alpha",
    "an_weight",
    "cir_to_freq",
    "compute_cnr",
    "estimate_throughput",
    "gen_wireless_cir",
    "indicator_eve_on_higher",
    "isr_an_infinite_pa",
    "isr_an_single",
    "isr_an_two",
    "isr_lower_bound",
    "isr_single_medium",
    "isr_tsc_single",
    "isr_tsc_two",
    "isr_tsc_two_asymptotic",
    "kernel_backend",
    "load_plc_file",
    "min_bob_power",
    "plc_response",
    "realize",
    "scheme_isr",
    "select_medium",
    "sweep",
    "trial_realization",
    "waterfill_active_set",
    "write_csv",
    "write_json",
]
