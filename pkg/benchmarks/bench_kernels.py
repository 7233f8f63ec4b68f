#!/usr/bin/env python3
"""Time the numba kernels against their pure-numpy fallbacks.

Runs both implementations on identical batches, checks agreement, and
reports per-kernel timings plus an end-to-end sweep-point comparison.
Force a backend for the end-to-end path with HYBRIDSEC_BACKEND.
"""
import time

import numpy as np

from hybridsec import _kernels
from hybridsec.config import ScenarioConfig, Scheme
from hybridsec import montecarlo as mc

TRIALS, N = 20_000, 64
REPEAT = 20


def timeit(fn, *args, repeat=REPEAT):
    fn(*args)  # warm-up (numba compiles here)
    t0 = time.perf_counter()
    for _ in range(repeat):
        out = fn(*args)
    return (time.perf_counter() - t0) / repeat, out


def main():
    rng = np.random.default_rng(0)
    x = rng.exponential(50.0, (TRIALS, N))
    y = rng.exponential(50.0, (TRIALS, N))
    fwd = rng.exponential(100.0, (TRIALS, N)) + 1.0
    exposed = rng.random((TRIALS, N)) < 0.7
    active = rng.random((TRIALS, N)) < 0.9
    inv_sorted = np.sort(1.0 / (rng.exponential(1.0, (TRIALS, N)) + 1e-12), axis=1)

    if not _kernels._HAS_NUMBA:
        print("numba not importable; nothing to compare")
        return

    rows = []
    t_np, ref = timeit(_kernels.waterfill_counts_numpy, inv_sorted, 5.0)
    t_nb, got = timeit(_kernels._waterfill_counts_nb, inv_sorted, 5.0)
    assert np.array_equal(ref, got)
    rows.append(("waterfill_counts", t_np, t_nb))

    t_np, ref = timeit(_kernels.tsc_net_numpy, x, y, exposed, active)
    t_nb, got = timeit(_kernels._tsc_net_nb, x, y, exposed, active)
    assert np.allclose(ref, got, rtol=1e-12, atol=1e-12)
    rows.append(("tsc_net", t_np, t_nb))

    t_np, ref = timeit(_kernels.an_net_numpy, x, fwd, y, exposed, active, 0.5)
    t_nb, got = timeit(_kernels._an_net_nb, x, fwd, y, exposed, active, 0.5)
    assert np.allclose(ref, got, rtol=1e-12, atol=1e-12)
    rows.append(("an_net", t_np, t_nb))

    print(f"batch: {TRIALS} trials x {N} sub-channels, mean of {REPEAT} runs")
    print(f"{'kernel':<18}{'numpy':>10}{'numba':>10}{'speedup':>9}")
    for name, t_np, t_nb in rows:
        print(f"{name:<18}{t_np * 1e3:>8.2f}ms{t_nb * 1e3:>8.2f}ms{t_np / t_nb:>8.1f}x")

    cfg = ScenarioConfig(trials=TRIALS, seed=1)
    w_ab2, w_ae2 = mc._draw_batch(cfg, cfg.seed)
    p_ab2, p_ae2 = mc._plc_gain2(cfg)
    t_pt, _ = timeit(
        mc._scheme_isr_batch, cfg, Scheme.AN_SHARING, w_ab2, w_ae2, p_ab2, p_ae2, repeat=5
    )
    print(
        f"\nend-to-end AN-sharing point ({_kernels.backend()} backend): "
        f"{t_pt * 1e3:.1f} ms per {TRIALS} trials"
    )


if __name__ == "__main__":
    main()
