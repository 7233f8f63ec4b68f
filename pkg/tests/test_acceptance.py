"""Acceptance suite: one test per release criterion, each printing a
pass/fail line.  Run with ``pytest tests/test_acceptance.py -v -s``.

Tolerances are fixed here and nowhere else.
"""
import numpy as np
import pytest

from conftest import random_active, random_noise, random_realization, random_selection
from hybridsec.allocation import compute_cnr, select_medium, waterfill_active_set
from hybridsec.channel import (
    ChannelRealization,
    FreqResponse,
    LinkId,
    Medium,
    NoiseProfile,
    gen_wireless_cir,
    cir_to_freq,
)
from hybridsec.config import EveMode, ScenarioConfig, Scheme
from hybridsec import montecarlo as mc
from hybridsec.secrecy import (
    PowerSplit,
    an_alpha,
    isr_an_infinite_pa,
    isr_an_single,
    isr_an_two,
    isr_lower_bound,
    isr_tsc_single,
    isr_tsc_two,
    min_bob_power,
)
from oracle_adapter import oracle_an, oracle_tsc

TRIALS = 10_000
SEED = 20240809


def _report(name):
    print(f"[PASS] {name}")


def _hybrid_setup(cfg, trial):
    chan = mc.trial_realization(cfg, trial)
    noise = NoiseProfile.flat(cfg.kappa, cfg.n)
    cnr_p = compute_cnr(chan.responses[(LinkId.ALICE_BOB, Medium.PLC)], cfg.kappa)
    cnr_w = compute_cnr(chan.responses[(LinkId.ALICE_BOB, Medium.WIRELESS)], cfg.kappa)
    sel = select_medium(cnr_p, cnr_w)
    active = waterfill_active_set(np.maximum(cnr_p, cnr_w), cfg.p_a)
    return chan, noise, sel, active


def test_remark2_theta_one_equivalence():
    """AN-sharing at theta=1 equals the no-AN scheme, every mode, 1e-12."""
    cfg = ScenarioConfig(seed=SEED)
    worst = 0.0
    count = 0
    for trial in range(1000):
        chan, noise, sel, active = _hybrid_setup(cfg, trial)
        split = PowerSplit.of(1.0, cfg.p_a, active.size)
        pairs = [
            (
                isr_an_two(chan, noise, sel, active, split, cfg.p_b).isr,
                isr_tsc_two(chan, noise, sel, active).isr,
            )
        ]
        for mode in (EveMode.SINGLE_PLC, EveMode.SINGLE_WIRELESS):
            pairs.append(
                (
                    isr_an_single(chan, noise, sel, active, split, cfg.p_b, mode).isr,
                    isr_tsc_single(chan, noise, sel, active, mode).isr,
                )
            )
        for an, tsc in pairs:
            worst = max(worst, abs(an - tsc))
            count += 1
    assert count >= 3000
    assert worst <= 1e-12, f"worst theta=1 mismatch {worst:.3e}"
    _report(f"remark-2 equivalence: {count} comparisons, worst |diff| {worst:.2e} <= 1e-12")


def test_infinite_alice_power_limit():
    """At 120 dB input SNR the full AN formula meets its Eve-free limit."""
    cfg = ScenarioConfig(seed=SEED + 1, gamma_a_db=120.0)
    worst = 0.0
    for trial in range(100):
        chan, noise, sel, active = _hybrid_setup(cfg, trial)
        split = PowerSplit.of(cfg.theta, cfg.p_a, active.size)
        full = isr_an_two(chan, noise, sel, active, split, cfg.p_b).isr
        alpha = an_alpha(chan, noise, sel)[active.indices]
        limit = isr_an_infinite_pa(alpha, cfg.p_b, active.size, cfg.theta)
        worst = max(worst, abs(full - limit))

        # the limit is blind to Eve: rescaling her gains moves nothing
        perturbed = dict(chan.responses)
        for medium in Medium:
            key = (LinkId.ALICE_EVE, medium)
            perturbed[key] = FreqResponse(chan.responses[key].gains * 3.0)
        chan2 = ChannelRealization(perturbed)
        full2 = isr_an_two(chan2, noise, sel, active, split, cfg.p_b).isr
        limit2 = isr_an_infinite_pa(alpha, cfg.p_b, active.size, cfg.theta)
        assert limit2 == limit
        worst = max(worst, abs(full2 - limit))
    assert worst <= 1e-3, f"worst limit gap {worst:.3e}"
    _report(f"infinite-P_A limit: worst |gap| {worst:.2e} <= 1e-3, Eve-independent")


def test_bob_power_certificate():
    """Inverting the worst-channel bound certifies the requested rate."""
    rng = np.random.default_rng(SEED + 2)
    for _ in range(100):
        theta = float(rng.uniform(0.05, 0.95))
        a_size = int(rng.integers(1, 64))
        alpha = rng.exponential(1.0, a_size) + 1e-3
        alpha_min = float(alpha.min())
        target = float(rng.uniform(0.0, 8.0))
        p_b = min_bob_power(target, theta, alpha_min, a_size)
        achieved = isr_lower_bound(alpha_min, p_b, a_size, theta)
        assert achieved >= target - 1e-9, (theta, a_size, target, achieved)
        assert achieved <= isr_an_infinite_pa(alpha, p_b, a_size, theta) + 1e-12
    assert min_bob_power(0.0, 0.5, 1.0, 16) == 0.0
    _report("bob-power certificate: 100 draws, bound(min power) >= R - 1e-9; R=0 -> P_B=0")


def test_formula_oracle_equivalence():
    """Modular pipeline vs literal transcription on 1000 random instances."""
    rng = np.random.default_rng(SEED + 3)
    modes = [EveMode.SINGLE_PLC, EveMode.SINGLE_WIRELESS, EveMode.TWO_LINK]
    worst = 0.0
    for i in range(1000):
        n = int(rng.choice([1, 2, 4, 8]))
        chan = random_realization(rng, n)
        noise = random_noise(rng, n, colored=True)
        sel = random_selection(rng, n)
        p_a = float(rng.uniform(0.1, 1000.0))
        p_b = float(rng.uniform(0.1, 1000.0))
        theta = float(rng.uniform(0.0, 1.0))
        active = random_active(rng, n, p_a)
        split = PowerSplit.of(theta, p_a, active.size)
        mode = modes[i % 3]
        if mode is EveMode.TWO_LINK:
            got_tsc = isr_tsc_two(chan, noise, sel, active).isr
            got_an = isr_an_two(chan, noise, sel, active, split, p_b).isr
        else:
            got_tsc = isr_tsc_single(chan, noise, sel, active, mode).isr
            got_an = isr_an_single(chan, noise, sel, active, split, p_b, mode).isr
        worst = max(worst, abs(got_tsc - oracle_tsc(chan, noise, sel, active, mode)))
        worst = max(worst, abs(got_an - oracle_an(chan, noise, sel, active, theta, p_b, mode)))
    assert worst <= 1e-12, f"worst oracle mismatch {worst:.3e}"
    _report(f"formula-oracle equivalence: 1000 instances, worst |diff| {worst:.2e} <= 1e-12")


@pytest.fixture(scope="module")
def fig2_curves():
    base = ScenarioConfig(trials=TRIALS, seed=SEED)
    values = [float(v) for v in range(0, 42, 2)]
    schemes = [Scheme.PLC_ONLY, Scheme.WIRELESS_ONLY, Scheme.TSC, Scheme.AN_SHARING]
    records = mc.sweep(base, "gamma_a_db", values, schemes=schemes)
    return {s: [r for r in records if r.scheme is s] for s in schemes}


def test_fig2_shape(fig2_curves):
    """AN-sharing reaches the target rate; schemes order as expected."""
    an = {r.value: r for r in fig2_curves[Scheme.AN_SHARING]}
    tsc = {r.value: r for r in fig2_curves[Scheme.TSC]}
    wo = {r.value: r for r in fig2_curves[Scheme.WIRELESS_ONLY]}
    po = {r.value: r for r in fig2_curves[Scheme.PLC_ONLY]}

    assert an[20.0].mu >= 0.95, f"AN mu at 20 dB is {an[20.0].mu}"
    for v in an:
        if v <= 10.0:
            continue
        tol_at = an[v].ci_halfwidth + tsc[v].ci_halfwidth
        assert an[v].mu - tsc[v].mu > -tol_at, f"AN !> TSC at {v} dB"
        tol_ts = tsc[v].ci_halfwidth + max(wo[v].ci_halfwidth, po[v].ci_halfwidth)
        assert tsc[v].mu >= max(wo[v].mu, po[v].mu) - tol_ts, f"TSC below baseline at {v} dB"
    _report(
        f"fig2 shape: AN mu(20dB)={an[20.0].mu:.3f} >= 0.95; "
        "AN > TSC >= max(single-medium) beyond 10 dB"
    )


def test_fig3_monotone_in_bob_power():
    """AN-sharing secure throughput never drops as Bob's AN power grows."""
    base = ScenarioConfig(trials=TRIALS, seed=SEED + 4)
    values = [float(v) for v in range(0, 32, 2)]
    records = mc.sweep(base, "gamma_b_db", values, schemes=[Scheme.AN_SHARING])
    for a, b in zip(records, records[1:]):
        slack = a.ci_halfwidth + b.ci_halfwidth
        assert b.mu >= a.mu - slack, f"mu dropped between {a.value} and {b.value} dB"
    _report("fig3 shape: AN mu nondecreasing over gamma_B in 0..30 dB within CI")


def test_fig4_shape():
    """Throughput rises linearly in R, peaks, then collapses; TSC peaks first."""
    base = ScenarioConfig(trials=TRIALS, seed=SEED + 5)
    values = [0.25 * i for i in range(1, 21)]
    records = mc.sweep(base, "target_r", values, schemes=[Scheme.TSC, Scheme.AN_SHARING])
    an = [r for r in records if r.scheme is Scheme.AN_SHARING]
    tsc = [r for r in records if r.scheme is Scheme.TSC]

    # linear region: success probability stays ~1 on the first grid points
    assert an[0].mu >= 0.98 * an[0].value
    assert an[1].mu >= 0.98 * an[1].value

    best_an = max(an, key=lambda r: r.mu)
    best_tsc = max(tsc, key=lambda r: r.mu)
    assert best_an.value not in (values[0], values[-1]), "AN optimum not interior"
    assert an[-1].mu < 0.5 * best_an.mu, "no collapse after the AN optimum"
    assert best_tsc.value < best_an.value, (
        f"TSC optimum {best_tsc.value} not below AN optimum {best_an.value}"
    )
    _report(
        f"fig4 shape: AN linear then peak at R={best_an.value:g}, "
        f"TSC peak at R={best_tsc.value:g} (smaller)"
    )


def test_fig5_shape():
    """Zero at theta=0, TSC value at theta=1, interior maximum."""
    base = ScenarioConfig(trials=TRIALS, seed=SEED + 6)
    values = [round(0.05 * i, 10) for i in range(21)]
    records = mc.sweep(base, "theta", values, schemes=[Scheme.AN_SHARING, Scheme.TSC])
    an = [r for r in records if r.scheme is Scheme.AN_SHARING]
    tsc = [r for r in records if r.scheme is Scheme.TSC]

    assert an[0].mu == 0.0, "no data power must mean zero throughput"
    assert an[-1].mu == tsc[-1].mu, "theta=1 must reproduce the no-AN scheme"
    interior_best = max(an[1:-1], key=lambda r: r.mu)
    slack = interior_best.ci_halfwidth + an[-1].ci_halfwidth
    assert interior_best.mu > an[-1].mu + slack, "no interior gain over theta=1"
    assert interior_best.mu > an[0].mu, "no interior gain over theta=0"
    _report(
        f"fig5 shape: mu(0)=0, mu(1)=TSC={tsc[-1].mu:.3f}, "
        f"interior max {interior_best.mu:.3f} at theta={interior_best.value:g}"
    )


def test_waterfilling_invariants():
    """KKT conditions and exact power budget on 1000 random CNR vectors."""
    rng = np.random.default_rng(SEED + 7)
    for _ in range(1000):
        n = int(rng.integers(1, 96))
        cnr = rng.exponential(1.0, n) * (rng.random(n) > 0.05)
        if not np.any(cnr > 0):
            continue
        power = float(rng.uniform(0.01, 50.0))
        active = waterfill_active_set(cnr, power)
        assert abs(active.power_vector().sum() - power) <= 1e-12 * power
        with np.errstate(divide="ignore"):
            inv = np.where(cnr > 0, 1.0 / cnr, np.inf)
        mask = active.mask()
        assert np.all(active.water_level > inv[mask])
        assert np.all(active.water_level <= inv[~mask])
    _report("water-filling: KKT + exact power split on 1000 random CNR vectors (1e-12)")


def test_channel_statistics():
    """Wireless sub-channel gains are Exp(1); the DFT preserves energy."""
    from scipy.stats import kstest

    rng = np.random.default_rng(SEED + 8)
    var = np.full(17, 1.0 / 17.0)
    samples = np.empty(10_000)
    phases = np.exp(-2j * np.pi * 5 * np.arange(17) / 64.0)
    for i in range(samples.size):
        samples[i] = np.abs(np.dot(gen_wireless_cir(var, rng).taps, phases)) ** 2
    stat = kstest(samples, "expon")
    assert stat.pvalue > 0.01, f"KS p-value {stat.pvalue}"

    worst = 0.0
    for _ in range(100):
        cir = gen_wireless_cir(rng.uniform(0.0, 1.0, size=17), rng)
        resp = cir_to_freq(cir, 64)
        lhs = np.sum(np.abs(resp.gains) ** 2)
        rhs = 64.0 * np.sum(np.abs(cir.taps) ** 2)
        worst = max(worst, abs(lhs - rhs) / rhs)
    assert worst <= 1e-12
    _report(
        f"channel statistics: |H|^2 exponential (KS p={stat.pvalue:.3f} > 0.01), "
        f"Parseval rel err {worst:.2e} <= 1e-12"
    )
