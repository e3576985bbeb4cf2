#!/usr/bin/env python3
"""Successive cancellation decoding against the PSU hardware models.

The decoder estimates u0, u1, ... in order. Each decision feeds back into
the factor graph as partial sums that later g-updates consume; the
partial-sums unit (PSU) is the hardware block that keeps them. Here we
decode the same noisy frames with the shift-register PSU, the
indicator-function PSU and a brute-force oracle, checking every scheduled
read, and watch the shift register produce the right sums at the right
clocks.
"""

import numpy as np

from polarsim import (
    AwgnChannel,
    ShiftRegisterPsu,
    bpsk_awgn_llrs,
    build_line_schedule,
    construct_frozen_set,
    encode_graph,
    expand,
    oracle_partial_sum,
    sc_decode,
    sc_decode_reference,
)

code = construct_frozen_set(3, 4)
rng = np.random.default_rng(7)
d = rng.integers(0, 2, code.K, dtype=np.uint8)
x = encode_graph(code, expand(code, d))
llrs = bpsk_awgn_llrs(x, AwgnChannel(sigma=0.6, seed=42))
print(f"{code}: sent d = {d}, codeword = {x}")

result = sc_decode(code, llrs, psu="sr", verify_reads=True)
print(f"decoded info bits   = {result.info_hat}  (errors: {(result.info_hat != d).sum()})")

# All PSU architectures and the schedule-free reference decoder agree
# decision for decision and LLR for LLR.
ref = sc_decode_reference(code, llrs)
for arch in ("sr", "if", "oracle"):
    r = sc_decode(code, llrs, psu=arch, verify_reads=True)
    assert np.array_equal(r.u_hat, ref.u_hat)
    assert np.array_equal(r.leaf_llrs, ref.leaf_llrs)
print("sr / if / oracle PSUs and the reference decoder are bit-exact\n")

# Inside the shift register: push the decisions of the first half-block
# and read the four stage-2 sums. PE p taps register p; the sums come out
# in reverse order across the register, no multiplexing needed.
u_hat = ref.u_hat
psu = ShiftRegisterPsu(width=4)
for bit in u_hat[:4]:
    psu.push(bit)
print(f"decisions pushed: {u_hat[:4]}, register now {psu.registers[0].tolist()}")
for p in range(4):
    i = 3 - p
    got = int(psu.read(i, 2, p)[0])
    want = int(oracle_partial_sum(u_hat, i, 2))
    print(f"  PE {p} reads R{p} = {got}, brute-force sum({i},2) = {want}")

# The line schedule itself: one stage activation per clock, 2N-2 clocks.
print("\nline schedule for N=8:")
for op in build_line_schedule(code).ops:
    reads = " ".join(f"R{a.read_position}" for a in op.pe_assignments)
    print(f"  clock {op.clock:2d}: {op.kind} stage {op.stage} "
          f"edges {op.edges.tolist()}" + (f" reads {reads}" if reads else ""))
