"""Hot Monte-Carlo kernels: numba-jitted loops with a pure-numpy fallback.

Backend selection: set HYBRIDSEC_BACKEND=numpy to force the fallback, or
HYBRIDSEC_BACKEND=numba to require the jitted path (raises if numba is
missing).  Default is numba when importable.  Both paths implement the same
arithmetic; agreement is checked in the test suite and timed by
benchmarks/bench_kernels.py.

All kernels take (trials, n) float64/bool arrays and return per-trial
values.  They are deliberately branch-light so results depend only on the
inputs, never on scheduling.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    _HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised via the env flag instead
    _HAS_NUMBA = False

_FLAG = os.environ.get("HYBRIDSEC_BACKEND", "").strip().lower()
if _FLAG not in ("", "numba", "numpy"):
    raise RuntimeError(f"HYBRIDSEC_BACKEND must be 'numba' or 'numpy', got {_FLAG!r}")
if _FLAG == "numba" and not _HAS_NUMBA:
    raise RuntimeError("HYBRIDSEC_BACKEND=numba but numba is not importable")
_USE_NUMBA = _HAS_NUMBA if _FLAG == "" else _FLAG == "numba"


def backend() -> str:
    """Active kernel backend, 'numba' or 'numpy'."""
    return "numba" if _USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# numpy reference implementations


def waterfill_counts_numpy(inv_sorted: np.ndarray, total_power: float) -> np.ndarray:
    """Active-set sizes for rows of ascending inverse CNRs.

    Row feasibility mu_m > inv[m-1] is prefix-monotone, so the count is the
    number of feasible prefixes.  Zero-CNR channels arrive as +inf and are
    never active.
    """
    t, n = inv_sorted.shape
    cums = np.cumsum(inv_sorted, axis=1)
    m = np.arange(1, n + 1, dtype=np.float64)
    with np.errstate(invalid="ignore"):
        feasible = (total_power + cums) / m > inv_sorted
    return feasible.sum(axis=1).astype(np.int64)


def tsc_net_numpy(x, y, exposed, active) -> np.ndarray:
    """Unclamped per-trial net rate of the no-AN scheme.

    x and y are Bob's and Eve's received SNRs per (trial, sub-channel);
    ``exposed`` marks sub-channels whose data medium is tapped.
    """
    bob = np.log2(1.0 + x)
    eve = np.where(exposed, np.log2(1.0 + y), 0.0)
    return np.where(active, bob - eve, 0.0).sum(axis=1)


def an_net_numpy(x, fwd, y, exposed, active, theta: float) -> np.ndarray:
    """Unclamped per-trial net rate of the AN-sharing scheme.

    ``fwd`` is the AN forwarding factor (lower-medium gain times Bob's AN
    SNR at Alice, plus one).  Untapped sub-channels carry no AN and get the
    clean full-power rate.
    """
    bob_tapped = np.log2(1.0 + theta * x / ((1.0 - theta) * x / fwd + 1.0))
    bob_clean = np.log2(1.0 + x)
    bob = np.where(exposed, bob_tapped, bob_clean)
    eve = np.where(exposed, np.log2(1.0 + theta * y / ((1.0 - theta) * y + 1.0)), 0.0)
    return np.where(active, bob - eve, 0.0).sum(axis=1)


# ---------------------------------------------------------------------------
# numba implementations

if _HAS_NUMBA:

    @njit(cache=True)
    def _waterfill_counts_nb(inv_sorted, total_power):
        t, n = inv_sorted.shape
        counts = np.zeros(t, dtype=np.int64)
        for i in range(t):
            cum = 0.0
            for m in range(1, n + 1):
                thr = inv_sorted[i, m - 1]
                if not np.isfinite(thr):
                    break
                cum += thr
                if (total_power + cum) / m > thr:
                    counts[i] = m
                else:
                    break
        return counts

    @njit(cache=True)
    def _tsc_net_nb(x, y, exposed, active):
        t, n = x.shape
        out = np.zeros(t)
        for i in range(t):
            acc = 0.0
            for k in range(n):
                if not active[i, k]:
                    continue
                bob = np.log2(1.0 + x[i, k])
                eve = np.log2(1.0 + y[i, k]) if exposed[i, k] else 0.0
                acc += bob - eve
            out[i] = acc
        return out

    @njit(cache=True)
    def _an_net_nb(x, fwd, y, exposed, active, theta):
        t, n = x.shape
        out = np.zeros(t)
        for i in range(t):
            acc = 0.0
            for k in range(n):
                if not active[i, k]:
                    continue
                xi = x[i, k]
                if exposed[i, k]:
                    bob = np.log2(1.0 + theta * xi / ((1.0 - theta) * xi / fwd[i, k] + 1.0))
                    yi = y[i, k]
                    eve = np.log2(1.0 + theta * yi / ((1.0 - theta) * yi + 1.0))
                else:
                    bob = np.log2(1.0 + xi)
                    eve = 0.0
                acc += bob - eve
            out[i] = acc
        return out


def _as2d(*arrays):
    return [np.ascontiguousarray(a) for a in arrays]


def waterfill_counts(inv_sorted: np.ndarray, total_power: float) -> np.ndarray:
    if _USE_NUMBA:
        (inv_sorted,) = _as2d(inv_sorted)
        return _waterfill_counts_nb(inv_sorted, float(total_power))
    return waterfill_counts_numpy(inv_sorted, total_power)


def tsc_net(x, y, exposed, active) -> np.ndarray:
    if _USE_NUMBA:
        x, y, exposed, active = _as2d(x, y, exposed, active)
        return _tsc_net_nb(x, y, exposed, active)
    return tsc_net_numpy(x, y, exposed, active)


def an_net(x, fwd, y, exposed, active, theta: float) -> np.ndarray:
    if _USE_NUMBA:
        x, fwd, y, exposed, active = _as2d(x, fwd, y, exposed, active)
        return _an_net_nb(x, fwd, y, exposed, active, float(theta))
    return an_net_numpy(x, fwd, y, exposed, active, theta)
