#!/usr/bin/env python3
"""Hardware cost comparison of the partial-sums architectures.

The feedback architecture needs a register count that grows with N^2, so
it is only realistic for short codes. The shift-register and
indicator-function architectures are both linear in N, but the shift
register wins on the critical path: one AND and one XOR regardless of N,
against a logarithmic gate chain.
"""

from polarsim import (
    critical_path,
    fb_stage_dff_counts,
    nand_equivalent,
    resource_counts,
    sr_decoder_instance_counts,
)

print(f"{'N':>6} {'FB nand':>12} {'SR nand':>9} {'IF nand':>9} {'FB/SR':>8}")
for n in range(4, 15):
    N = 1 << n
    fb = float(nand_equivalent("FB", N))
    sr = float(nand_equivalent("SR", N))
    if_ = float(nand_equivalent("IF", N))
    print(f"{N:>6} {fb:>12.0f} {sr:>9.0f} {if_:>9.0f} {fb / sr:>8.1f}")

print("\nresource tallies at N=1024:")
for arch in ("FB", "SR", "IF"):
    r = resource_counts(arch, 1024)
    def show(v):
        return "n/a" if v is None else v
    print(f"  {arch}: dff={show(r.dff)} xor={show(r.xor)} "
          f"mux={show(r.mux)} and={show(r.and_gates)}")

print("\ncritical paths:")
for arch in ("SR", "FB", "IF"):
    for N in (1024, 16384):
        path = critical_path(arch, N)
        text = " + ".join(f"{c} {g}" for g, c in path) if path else "not published"
        print(f"  {arch} at N={N:5d}: {text}")

# Where the quadratic blowup comes from: per-stage register counts of the
# feedback structure.
print("\nfeedback-PSU registers per stage at N=64:", fb_stage_dff_counts(64))
print("shift-register decoder instance at N=64:", sr_decoder_instance_counts(64))
