"""Monte-Carlo secure-throughput estimation and parameter sweeps.

Secure throughput is the target secrecy rate times the probability that the
instantaneous secrecy rate meets it.  Rates are compared in bits per OFDM
block, so a target of R bits/s/Hz corresponds to a block threshold of
R * (n + n_cp).

Randomness layout: each sweep point gets its own seed derived from the base
seed and the point index; within a point, trial t draws from the t-th child
of SeedSequence(point_seed), pulling one (2, n_taps, 2) standard-normal
block for the Alice-Bob and Alice-Eve wireless CIRs.  Results are therefore
a pure function of (config, seed), independent of batching or scheduling,
and any single trial can be reproduced in isolation via
``trial_realization``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, replace

import numpy as np

from . import _kernels, allocation, secrecy
from .channel import (
    ChannelRealization,
    FreqResponse,
    LinkId,
    Medium,
    Node,
    NoiseProfile,
    _plc_sources,
    plc_response,
)
from .config import ConfigError, EveMode, ScenarioConfig, Scheme

SWEEPABLE = ("gamma_a_db", "gamma_b_db", "theta", "target_r")

_MIX = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1


def point_seed(seed: int, index: int) -> int:
    """Per-sweep-point seed: base seed XORed with a mixed point index."""
    return (seed ^ ((index + 1) * _MIX & _MASK)) & _MASK


@dataclass
class ThroughputRecord:
    """One sweep point: estimated secure throughput and outage probability."""

    scheme: Scheme
    eve_mode: EveMode
    param: str
    value: float
    mu: float
    outage_prob: float
    trials: int
    ci_halfwidth: float  # 95% halfwidth on the success probability


# ---------------------------------------------------------------------------
# batched channel draws


def _cir_scale(n_cp: int) -> float:
    # uniform tap variances 1/(n_cp+1); complex parts get half each
    return float(np.sqrt(1.0 / (2.0 * (n_cp + 1))))


def _draw_batch(cfg: ScenarioConfig, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Wireless |H|^2 batches for the Alice-Bob and Alice-Eve links."""
    trials, n, taps = cfg.trials, cfg.n, cfg.n_cp + 1
    scale = _cir_scale(cfg.n_cp)
    cirs = np.empty((trials, 2, taps), dtype=np.complex128)
    for t, child in enumerate(np.random.SeedSequence(seed).spawn(trials)):
        z = np.random.default_rng(child).standard_normal((2, taps, 2))
        cirs[t] = scale * (z[..., 0] + 1j * z[..., 1])
    h_ab = np.fft.fft(cirs[:, 0, :], n=n, axis=1)
    h_ae = np.fft.fft(cirs[:, 1, :], n=n, axis=1)
    return np.abs(h_ab) ** 2, np.abs(h_ae) ** 2


def trial_realization(cfg: ScenarioConfig, trial: int, seed: int | None = None) -> ChannelRealization:
    """Reproduce the channel realization of one Monte-Carlo trial."""
    seed = cfg.seed if seed is None else seed
    child = np.random.SeedSequence(seed, spawn_key=(trial,))
    z = np.random.default_rng(child).standard_normal((2, cfg.n_cp + 1, 2))
    cirs = _cir_scale(cfg.n_cp) * (z[..., 0] + 1j * z[..., 1])
    sources = _plc_sources(cfg)
    responses = {}
    for i, link in enumerate((LinkId.ALICE_BOB, LinkId.ALICE_EVE)):
        responses[(link, Medium.WIRELESS)] = FreqResponse(np.fft.fft(cirs[i], n=cfg.n))
        responses[(link, Medium.PLC)] = plc_response(sources[link], cfg.n)
    return ChannelRealization(responses)


def _plc_gain2(cfg: ScenarioConfig) -> tuple[np.ndarray, np.ndarray]:
    sources = _plc_sources(cfg)
    p_ab = plc_response(sources[LinkId.ALICE_BOB], cfg.n)
    p_ae = plc_response(sources[LinkId.ALICE_EVE], cfg.n)
    return p_ab.power(), p_ae.power()


# ---------------------------------------------------------------------------
# per-scheme batched evaluation


def _active_mask(best_cnr: np.ndarray, total_power: float) -> tuple[np.ndarray, np.ndarray]:
    """Water-filling active sets for a (trials, n) CNR batch."""
    with np.errstate(divide="ignore"):
        inv = np.where(best_cnr > 0.0, 1.0 / best_cnr, np.inf)
    order = np.argsort(inv, axis=1, kind="stable")
    inv_sorted = np.take_along_axis(inv, order, axis=1)
    counts = _kernels.waterfill_counts(inv_sorted, total_power)
    ranks = np.empty_like(order)
    np.put_along_axis(ranks, order, np.arange(inv.shape[1])[None, :], axis=1)
    active = ranks < counts[:, None]
    return active, counts


def _scheme_isr_batch(
    cfg: ScenarioConfig,
    scheme: Scheme,
    w_ab2: np.ndarray,
    w_ae2: np.ndarray,
    p_ab2: np.ndarray,
    p_ae2: np.ndarray,
) -> np.ndarray:
    """ISR (bits per block) for every trial of one scheme."""
    trials = w_ab2.shape[0]
    kappa = cfg.kappa
    cn_p = np.broadcast_to(p_ab2 / kappa, w_ab2.shape)
    cn_w = w_ab2 / kappa

    if scheme in (Scheme.TSC, Scheme.AN_SHARING):
        plc_high = cn_p >= cn_w  # ties go to PLC
        best = np.where(plc_high, cn_p, cn_w)
        bob2 = np.where(plc_high, p_ab2[None, :], w_ab2)
        eve2 = np.where(plc_high, p_ae2[None, :], w_ae2)
        if cfg.eve_mode is EveMode.TWO_LINK:
            exposed = np.ones(best.shape, dtype=bool)
        elif cfg.eve_mode is EveMode.SINGLE_PLC:
            exposed = plc_high
        else:
            exposed = ~plc_high
    else:
        medium = Medium.PLC if scheme is Scheme.PLC_ONLY else Medium.WIRELESS
        best = cn_p if medium is Medium.PLC else cn_w
        bob2 = np.broadcast_to(p_ab2[None, :], w_ab2.shape) if medium is Medium.PLC else w_ab2
        eve2 = np.broadcast_to(p_ae2[None, :], w_ae2.shape) if medium is Medium.PLC else w_ae2
        tapped = cfg.eve_mode is EveMode.TWO_LINK or (
            (cfg.eve_mode is EveMode.SINGLE_PLC) == (medium is Medium.PLC)
        )
        exposed = np.full(w_ab2.shape, tapped, dtype=bool)

    active, counts = _active_mask(best, cfg.p_a)
    ok = counts > 0
    p_a_k = np.where(ok, cfg.p_a / np.maximum(counts, 1), 0.0)
    x = bob2 * (p_a_k[:, None] / kappa)
    y = eve2 * (p_a_k[:, None] / kappa)

    if scheme is Scheme.AN_SHARING:
        low2 = np.where(
            cn_p >= cn_w, w_ab2, np.broadcast_to(p_ab2[None, :], w_ab2.shape)
        )
        p_b_k = np.where(ok, cfg.p_b / np.maximum(counts, 1), 0.0)
        fwd = low2 * (p_b_k[:, None] / kappa) + 1.0
        net = _kernels.an_net(x, fwd, y, exposed, active, cfg.theta)
    else:
        net = _kernels.tsc_net(x, y, exposed, active)

    return np.where(ok, np.maximum(net, 0.0), 0.0)


def _make_record(
    cfg: ScenarioConfig, scheme: Scheme, isr: np.ndarray, param: str, value: float
) -> ThroughputRecord:
    successes = int(np.count_nonzero(isr >= cfg.block_rate_threshold))
    p_hat = successes / cfg.trials
    ci = 1.96 * float(np.sqrt(p_hat * (1.0 - p_hat) / cfg.trials))
    return ThroughputRecord(
        scheme=scheme,
        eve_mode=cfg.eve_mode,
        param=param,
        value=float(value),
        mu=cfg.target_r * p_hat,
        outage_prob=1.0 - p_hat,
        trials=cfg.trials,
        ci_halfwidth=ci,
    )


def estimate_throughput(cfg: ScenarioConfig) -> ThroughputRecord:
    """Estimate secure throughput of one scenario over cfg.trials channels."""
    cfg.validate()
    w_ab2, w_ae2 = _draw_batch(cfg, cfg.seed)
    p_ab2, p_ae2 = _plc_gain2(cfg)
    isr = _scheme_isr_batch(cfg, cfg.scheme, w_ab2, w_ae2, p_ab2, p_ae2)
    return _make_record(cfg, cfg.scheme, isr, "gamma_a_db", cfg.gamma_a_db)


def sweep(
    base: ScenarioConfig,
    param: str,
    values,
    schemes: list[Scheme] | None = None,
) -> list[ThroughputRecord]:
    """Sweep one parameter, evaluating every scheme on shared realizations.

    All schemes of one sweep point see identical channel draws (the point
    seed depends only on the base seed and point index), so scheme curves
    are directly comparable.
    """
    if param not in SWEEPABLE:
        raise ConfigError(f"unknown sweep parameter {param!r}; choose from {SWEEPABLE}")
    schemes = list(schemes) if schemes is not None else [base.scheme]
    per_scheme: dict[Scheme, list[ThroughputRecord]] = {s: [] for s in schemes}
    for i, value in enumerate(values):
        cfg = replace(base, **{param: value}, seed=point_seed(base.seed, i))
        for s in schemes:
            replace(cfg, scheme=s).validate()
        w_ab2, w_ae2 = _draw_batch(cfg, cfg.seed)
        p_ab2, p_ae2 = _plc_gain2(cfg)
        for s in schemes:
            isr = _scheme_isr_batch(cfg, s, w_ab2, w_ae2, p_ab2, p_ae2)
            per_scheme[s].append(_make_record(cfg, s, isr, param, value))
    return [rec for s in schemes for rec in per_scheme[s]]


# ---------------------------------------------------------------------------
# reference (unbatched) evaluation, kept for cross-checks against the kernels


def scheme_isr(chan: ChannelRealization, noise: NoiseProfile, cfg: ScenarioConfig) -> float:
    """ISR of one realization via the modular per-realization path."""
    if cfg.scheme in (Scheme.PLC_ONLY, Scheme.WIRELESS_ONLY):
        medium = Medium.PLC if cfg.scheme is Scheme.PLC_ONLY else Medium.WIRELESS
        cnr = allocation.compute_cnr(
            chan.responses[(LinkId.ALICE_BOB, medium)], noise.at(Node.BOB, medium)
        )
        active = allocation.waterfill_active_set(cnr, cfg.p_a)
        return secrecy.isr_single_medium(chan, noise, medium, active, cfg.eve_mode).isr

    cnr_p = allocation.compute_cnr(
        chan.responses[(LinkId.ALICE_BOB, Medium.PLC)], noise.at(Node.BOB, Medium.PLC)
    )
    cnr_w = allocation.compute_cnr(
        chan.responses[(LinkId.ALICE_BOB, Medium.WIRELESS)], noise.at(Node.BOB, Medium.WIRELESS)
    )
    sel = allocation.select_medium(cnr_p, cnr_w)
    active = allocation.waterfill_active_set(np.maximum(cnr_p, cnr_w), cfg.p_a)
    if active.is_degenerate:
        return 0.0

    if cfg.scheme is Scheme.TSC:
        if cfg.eve_mode is EveMode.TWO_LINK:
            return secrecy.isr_tsc_two(chan, noise, sel, active).isr
        return secrecy.isr_tsc_single(chan, noise, sel, active, cfg.eve_mode).isr

    split = secrecy.PowerSplit.of(cfg.theta, cfg.p_a, active.size)
    if cfg.eve_mode is EveMode.TWO_LINK:
        return secrecy.isr_an_two(chan, noise, sel, active, split, cfg.p_b).isr
    return secrecy.isr_an_single(chan, noise, sel, active, split, cfg.p_b, cfg.eve_mode).isr


# ---------------------------------------------------------------------------
# persistence


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def write_csv(records: list[ThroughputRecord], path) -> None:
    """Write sweep records; floats carry 9 significant digits."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("scheme,eve_mode,param,value,mu,outage_prob,trials,ci\n")
        for r in records:
            fh.write(
                f"{r.scheme.value},{r.eve_mode.value},{r.param},{_fmt(r.value)},"
                f"{_fmt(r.mu)},{_fmt(r.outage_prob)},{r.trials},{_fmt(r.ci_halfwidth)}\n"
            )


def write_json(records: list[ThroughputRecord], cfg: ScenarioConfig, path) -> None:
    """JSON mirror of the CSV with the full scenario config for provenance."""
    payload = {
        "config": cfg.to_dict(),
        "records": [
            {
                "scheme": r.scheme.value,
                "eve_mode": r.eve_mode.value,
                "param": r.param,
                "value": r.value,
                "mu": r.mu,
                "outage_prob": r.outage_prob,
                "trials": r.trials,
                "ci": r.ci_halfwidth,
            }
            for r in records
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
