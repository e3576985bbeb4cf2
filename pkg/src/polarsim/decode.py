"""Min-sum successive cancellation decoding.

:func:`sc_decode` walks the line schedule clock by clock against a
pluggable partial-sums unit. :func:`sc_decode_reference` recomputes every
leaf value by direct recursion with no memory reuse and partial sums taken
from their closed form; it exists purely as the equivalence oracle.

Both accept a single length-N LLR vector or a batch with one frame per
row and are bit-exact against each other in decisions and value-exact in
leaf LLRs.
"""

from dataclasses import dataclass

import numpy as np

from .psu import OraclePsu, block_partial_sums, make_psu
from .schedule import build_line_schedule

_schedules = {}


def _line_schedule(code):
    # The op sequence depends only on the code length.
    if code.n not in _schedules:
        _schedules[code.n] = build_line_schedule(code)
    return _schedules[code.n]


class PartialSumMismatch(RuntimeError):
    """A scheduled PSU read disagreed with the brute-force value."""


def f_min_sum(a, b):
    """Check-node update: sign(a)*sign(b)*min(|a|,|b|), sign(0) = +1."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    sign = np.where(a < 0, -1.0, 1.0) * np.where(b < 0, -1.0, 1.0)
    return sign * np.minimum(np.abs(a), np.abs(b))


def g_func(a, b, s):
    """Decision-conditioned update: b + a when s = 0, b - a when s = 1."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    s = np.asarray(s)
    return b + (1.0 - 2.0 * s) * a


def decide(llr):
    """Hard decision: 0 for positive LLR, 1 otherwise (zero decides 1)."""
    out = (np.asarray(llr) <= 0).astype(np.uint8)
    return out if out.ndim else int(out)


@dataclass
class DecodeResult:
    u_hat: np.ndarray  # length-N decisions, frozen positions forced to 0
    info_hat: np.ndarray  # decisions restricted to the K information positions
    leaf_llrs: np.ndarray  # the decision-point LLR of every leaf


def _as_frames(llrs, N):
    llrs = np.asarray(llrs, dtype=np.float64)
    if llrs.shape[-1] != N:
        raise ValueError(f"expected LLR vectors of length {N}, got {llrs.shape[-1]}")
    if llrs.ndim == 1:
        return llrs[None, :], True
    if llrs.ndim == 2:
        return llrs, False
    raise ValueError("LLR input must be 1-D or 2-D")


def _result(code, u_hat, leaf, squeeze):
    if squeeze:
        u_hat, leaf = u_hat[0], leaf[0]
    return DecodeResult(
        u_hat=u_hat, info_hat=u_hat[..., code.info_indices], leaf_llrs=leaf
    )


def sc_decode(code, channel_llrs, psu="sr", verify_reads=False):
    """
    Successive cancellation decode driven by the line schedule.

    Parameters
    ----------
    code : PolarCode
    channel_llrs : array
        Shape (N,) or (frames, N); positive values favor bit 0.
    psu : str or PSU instance
        ``"sr"``, ``"if"`` or ``"oracle"``, or a freshly constructed PSU
        whose ``frames`` matches the input batch.
    verify_reads : bool
        Check every scheduled PSU read against the brute-force sum and
        raise :class:`PartialSumMismatch` on any disagreement.
    """
    llrs, squeeze = _as_frames(channel_llrs, code.N)
    frames, N = llrs.shape
    unit = make_psu(psu, code, frames) if isinstance(psu, str) else psu
    shadow = OraclePsu(N, frames) if verify_reads else None

    lam = [np.empty((frames, N), dtype=np.float64) for _ in range(code.n)]
    lam.append(llrs)
    u_hat = np.zeros((frames, N), dtype=np.uint8)
    leaf = np.empty((frames, N), dtype=np.float64)

    for op in _line_schedule(code).ops:
        j, e = op.stage, op.edges
        span = 1 << j
        if op.kind == "F":
            lam[j][:, e] = f_min_sum(lam[j + 1][:, e], lam[j + 1][:, e + span])
        else:
            sums = np.empty((frames, e.size), dtype=np.uint8)
            for pe, edge, pos in op.pe_assignments:
                value = unit.read(edge - span, j, pos)
                if shadow is not None:
                    expect = shadow.read(edge - span, j, pos)
                    if not np.array_equal(value, expect):
                        raise PartialSumMismatch(
                            f"read of sum ({edge - span},{j}) at clock {op.clock}"
                        )
                sums[:, edge - e[0]] = value
            lam[j][:, e] = g_func(lam[j + 1][:, e - span], lam[j + 1][:, e], sums)
        if j == 0:
            i = int(e[0])
            leaf[:, i] = lam[0][:, i]
            if not code.frozen_mask[i]:
                u_hat[:, i] = decide(lam[0][:, i])
            unit.push(u_hat[:, i])
            if shadow is not None:
                shadow.push(u_hat[:, i])
    return _result(code, u_hat, leaf, squeeze)


def sc_decode_reference(code, channel_llrs):
    """
    Oracle decoder: every leaf LLR is recomputed from the channel values by
    walking its own stage chain top-down, with the needed partial sums
    rebuilt from the decision prefix each time. Nothing is shared between
    leaves and no PSU model is involved.
    """
    llrs, squeeze = _as_frames(channel_llrs, code.N)
    frames, N = llrs.shape
    u_hat = np.zeros((frames, N), dtype=np.uint8)
    leaf = np.empty((frames, N), dtype=np.float64)

    for i in range(N):
        vals = llrs
        for j in range(code.n - 1, -1, -1):
            half = 1 << j
            base = (i >> (j + 1)) << (j + 1)
            lo, hi = vals[:, : half], vals[:, half:]
            if (i >> j) & 1:
                sums = block_partial_sums(u_hat[:, base : base + half])
                vals = g_func(lo, hi, sums)
            else:
                vals = f_min_sum(lo, hi)
        leaf[:, i] = vals[:, 0]
        if not code.frozen_mask[i]:
            u_hat[:, i] = decide(vals[:, 0])
    return _result(code, u_hat, leaf, squeeze)
