"""Hardware complexity of the partial-sums architectures.

Gate and register tallies per architecture, NAND-equivalent totals and
critical-path depths. NAND equivalents are kept as exact rationals; any
rounding happens only when formatting output.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .psu import fb_psu_complexity

ARCHITECTURES = ("SR", "IF", "FB")


@dataclass(frozen=True)
class CostReport:
    arch: str
    N: int
    dff: Optional[int]
    xor: Optional[int]
    mux: Optional[int]
    and_gates: Optional[int]
    nand_equivalent: Fraction
    critical_path: Optional[List[Tuple[str, int]]] = field(default=None)


def _check(arch, N):
    arch = arch.upper()
    if arch not in ARCHITECTURES:
        raise ValueError(f"unknown architecture {arch!r}")
    if N < 4 or N & (N - 1):
        raise ValueError(f"N must be a power of two >= 4, got {N}")
    return arch


def nand_equivalent(arch, N):
    """
    NAND-equivalent gate count: 5*N**2/12 + 3*N for the feedback PSU,
    7.5*N for the shift-register one, 8.5*N for the indicator-function
    one. Returned as an exact ``Fraction``.
    """
    arch = _check(arch, N)
    if arch == "FB":
        return Fraction(5 * N * N, 12) + 3 * N
    if arch == "SR":
        return Fraction(15, 2) * N
    return Fraction(17, 2) * N


def critical_path(arch, N):
    """
    Gate chain on the critical path, as (gate, count) pairs. Constant for
    the shift-register PSU, logarithmic for the feedback one, and not
    published for the indicator-function one (returns None).
    """
    arch = _check(arch, N)
    n = N.bit_length() - 1
    if arch == "SR":
        return [("AND", 1), ("XOR", 1)]
    if arch == "FB":
        return [("XOR", n - 1), ("MUX", n - 2)]
    return None


def resource_counts(arch, N):
    """
    Per-architecture resource tally.

    SR counts cover the full unit (sum registers plus the row generator,
    with constant cells optimized away): N DFFs, N-2 XORs, N/2-1 ANDs.
    FB counts come from its stage recursion. IF internals are not
    published; only its NAND equivalent is reported.
    """
    arch = _check(arch, N)
    nand = nand_equivalent(arch, N)
    path = critical_path(arch, N)
    if arch == "SR":
        return CostReport(arch, N, dff=N, xor=N - 2, mux=0, and_gates=N // 2 - 1,
                          nand_equivalent=nand, critical_path=path)
    if arch == "FB":
        fb = fb_psu_complexity(N)
        return CostReport(arch, N, dff=fb.dff_count, xor=fb.xor_count,
                          mux=fb.mux_count, and_gates=0,
                          nand_equivalent=nand, critical_path=path)
    return CostReport(arch, N, dff=None, xor=None, mux=None, and_gates=None,
                      nand_equivalent=nand, critical_path=None)


def sr_decoder_instance_counts(N):
    """
    Structural tally of the bare decoding shift register (width N/2,
    before constant-cell optimization and excluding the row generator):
    N/2 registers, N/2 XORs, N/2 ANDs. Documented alongside the full-unit
    numbers of :func:`resource_counts` because the two accountings differ.
    """
    if N < 4 or N & (N - 1):
        raise ValueError(f"N must be a power of two >= 4, got {N}")
    return {"dff": N // 2, "xor": N // 2, "and": N // 2}
