"""Seedable channel models producing LLR vectors for Monte-Carlo runs.

Per-trial random streams are derived from ``(seed, trial)`` so that trials
are reproducible independently of batching or worker count.
"""

from dataclasses import dataclass

import numpy as np

BEC_LLR_MAGNITUDE = 100.0


def trial_rng(seed, trial=0):
    """Independent generator for one trial of one seeded experiment."""
    return np.random.default_rng((int(seed), int(trial)))


@dataclass(frozen=True)
class AwgnChannel:
    """BPSK over AWGN with noise standard deviation ``sigma``."""

    sigma: float
    seed: int = 0

    def __post_init__(self):
        if self.sigma <= 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")


@dataclass(frozen=True)
class SnrPoint:
    """An Eb/N0 operating point of a rate-R sweep."""

    ebn0_db: float

    def sigma(self, rate):
        """Noise standard deviation at this Eb/N0 for code rate ``rate``."""
        return float(np.sqrt(1.0 / (2.0 * rate * 10.0 ** (self.ebn0_db / 10.0))))


def awgn_llrs_from_noise(x, sigma, noise):
    """
    LLRs of BPSK symbols (bit 0 -> +1, bit 1 -> -1) after adding
    ``sigma * noise``: ``2*y / sigma**2`` with y the received sample.
    """
    x = np.asarray(x, dtype=np.uint8)
    symbols = 1.0 - 2.0 * x.astype(np.float64)
    return 2.0 * (symbols + sigma * noise) / (sigma * sigma)


def bpsk_awgn_llrs(x, ch, trial=0):
    """
    Channel LLRs for codeword bits ``x``; deterministic for a fixed
    ``(ch.seed, trial)`` pair.
    """
    noise = trial_rng(ch.seed, trial).standard_normal(np.shape(x))
    return awgn_llrs_from_noise(x, ch.sigma, noise)


def bec_llrs_from_uniform(x, epsilon, u01, magnitude=BEC_LLR_MAGNITUDE):
    """Erase positions where ``u01 < epsilon``, else +/-``magnitude`` by bit."""
    if not 0.0 <= epsilon < 1.0:
        raise ValueError(f"epsilon must be in [0, 1), got {epsilon}")
    x = np.asarray(x, dtype=np.uint8)
    llrs = np.where(x == 0, magnitude, -magnitude)
    return np.where(u01 < epsilon, 0.0, llrs)


def bec_llrs(x, epsilon, seed, trial=0, magnitude=BEC_LLR_MAGNITUDE):
    """
    Erasure-channel LLRs: each position independently erased (LLR 0.0)
    with probability ``epsilon``, otherwise +/-``magnitude`` by the
    transmitted bit. Deterministic for a fixed ``(seed, trial)`` pair.
    """
    u01 = trial_rng(seed, trial).random(np.shape(x))
    return bec_llrs_from_uniform(x, epsilon, u01, magnitude)
