#!/usr/bin/env python3
"""Walk through polar code construction.

A length-N polar code is fixed by choosing which of the N input positions
carry information and which are frozen to zero. Reliabilities come from
the erasure-probability recursion: each polarization level splits a
channel with parameter z into a worse one (2z - z^2) and a better one
(z^2). We freeze the positions with the largest erasure probability.
"""

import numpy as np

from polarsim import bec_erasure_probs, construct_frozen_set

# Reliabilities for a toy length-8 code designed at erasure rate 0.5.
n = 3
z = bec_erasure_probs(n, epsilon=0.5)
print("bit-channel erasure probabilities (N=8, eps=0.5):")
for i, zi in enumerate(z):
    print(f"  u{i}: z = {zi:.6f}")

# Polarization at work: the spread between best and worst channel grows
# with the code length.
print("\npolarization vs code length (eps=0.5):")
for n in (3, 6, 10):
    z = bec_erasure_probs(n, 0.5)
    print(f"  N={1 << n:5d}: worst z = {z.max():.6f}, best z = {z.min():.3e}")

# Frozen sets at a few rates.
print("\nfrozen sets for N=16:")
for K in (4, 8, 12):
    code = construct_frozen_set(4, K)
    print(f"  K={K:2d}: frozen = {[int(i) for i in code.frozen]}")

# The design parameter shifts which positions are considered reliable;
# the effect only shows up once the code is long enough for borderline
# channels to exist.
print("\nfrozen positions moved by changing eps 0.3 -> 0.7:")
for n in (6, 8, 10):
    a = construct_frozen_set(n, (1 << n) // 2, epsilon=0.3)
    b = construct_frozen_set(n, (1 << n) // 2, epsilon=0.7)
    moved = np.setdiff1d(a.frozen, b.frozen)
    print(f"  N={1 << n:5d}: {moved.size} positions")
