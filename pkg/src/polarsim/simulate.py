"""Monte-Carlo BER/FER harness.

Random payloads are encoded, sent through a seedable channel and decoded;
errors are counted over the information bits. Every trial draws its
payload and noise from a stream keyed by ``(seed, trial)``, so results do
not depend on batch size or on how trials are distributed.
"""

import csv
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .channel import SnrPoint, awgn_llrs_from_noise, bec_llrs_from_uniform, trial_rng
from .codes import construct_frozen_set
from .decode import sc_decode
from .encode import encode_graph, expand

NOISELESS_LLR = 4.0


@dataclass
class SimConfig:
    n: int
    K: int
    epsilon: float = 0.5
    channel: str = "awgn"  # "awgn" (sweep is Eb/N0 dB) or "bec" (sweep is erasure prob)
    snr_start_db: float = 0.0
    snr_stop_db: float = 3.0
    points: int = 7
    trials: int = 2500
    seed: int = 1
    arch: str = "sr"
    target_frame_errors: Optional[int] = None
    noiseless: bool = False
    batch_size: int = 256

    def __post_init__(self):
        if self.points < 1:
            raise ValueError("points must be >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.snr_start_db > self.snr_stop_db:
            raise ValueError("sweep start must not exceed stop")
        if self.channel not in ("awgn", "bec"):
            raise ValueError(f"unknown channel {self.channel!r}")

    def sweep_values(self):
        return np.linspace(self.snr_start_db, self.snr_stop_db, self.points)


@dataclass
class SweepRow:
    snr_db: float
    trials: int
    bit_errors: int
    frame_errors: int
    ber: float
    fer: float


@dataclass
class SweepResult:
    config: SimConfig
    rows: List[SweepRow] = field(default_factory=list)


def _draw_batch(config, code, first, count):
    """Per-trial payloads and raw channel randomness for trials [first, first+count)."""
    d = np.empty((count, code.K), dtype=np.uint8)
    raw = np.empty((count, code.N), dtype=np.float64)
    for t in range(count):
        rng = trial_rng(config.seed, first + t)
        d[t] = rng.integers(0, 2, code.K, dtype=np.uint8)
        # Unit noise for AWGN, uniforms for erasure patterns; drawing it
        # here keeps a trial a fixed function of (seed, trial).
        raw[t] = rng.standard_normal(code.N) if config.channel == "awgn" else rng.random(code.N)
    return d, raw


def _batch_llrs(config, x, raw, sweep_value, rate):
    if config.noiseless:
        return np.where(x == 0, NOISELESS_LLR, -NOISELESS_LLR)
    if config.channel == "awgn":
        sigma = SnrPoint(sweep_value).sigma(rate)
        return awgn_llrs_from_noise(x, sigma, raw)
    return bec_llrs_from_uniform(x, sweep_value, raw)


def simulate_sweep(config, vector_sink=None):
    """
    Run the configured sweep and return a :class:`SweepResult`.

    ``vector_sink`` may be a callable receiving one record per decoded
    frame (dict with seed, snr_db, u, x, llrs, u_hat) for test-vector
    dumping.
    """
    code = construct_frozen_set(config.n, config.K, config.epsilon)
    result = SweepResult(config=config)
    for value in config.sweep_values():
        trials_run = 0
        bit_errors = 0
        frame_errors = 0
        while trials_run < config.trials:
            count = min(config.batch_size, config.trials - trials_run)
            d, raw = _draw_batch(config, code, trials_run, count)
            u = expand(code, d)
            x = encode_graph(code, u)
            llrs = _batch_llrs(config, x, raw, value, code.rate)
            decoded = sc_decode(code, llrs, psu=config.arch)
            errs = decoded.info_hat != d
            bit_errors += int(errs.sum())
            frame_errors += int(errs.any(axis=1).sum())
            trials_run += count
            if vector_sink is not None:
                for t in range(count):
                    vector_sink(
                        {
                            "seed": config.seed,
                            "snr_db": value,
                            "u": u[t],
                            "x": x[t],
                            "llrs": llrs[t],
                            "u_hat": decoded.u_hat[t],
                        }
                    )
            if (
                config.target_frame_errors is not None
                and frame_errors >= config.target_frame_errors
            ):
                break
        result.rows.append(
            SweepRow(
                snr_db=float(value),
                trials=trials_run,
                bit_errors=bit_errors,
                frame_errors=frame_errors,
                ber=bit_errors / (trials_run * code.K),
                fer=frame_errors / trials_run,
            )
        )
    return result


def bits_to_hex(bits):
    """Bit vector packed MSB-first into bytes, as a hex string."""
    return np.packbits(np.asarray(bits, dtype=np.uint8)).tobytes().hex()


def write_sweep_csv(result, stream):
    cfg = result.config
    stream.write(
        "# config: n=%d K=%d epsilon=%g channel=%s sweep=%g..%g points=%d "
        "trials=%d seed=%d arch=%s noiseless=%s\n"
        % (
            cfg.n,
            cfg.K,
            cfg.epsilon,
            cfg.channel,
            cfg.snr_start_db,
            cfg.snr_stop_db,
            cfg.points,
            cfg.trials,
            cfg.seed,
            cfg.arch,
            cfg.noiseless,
        )
    )
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["snr_db", "trials", "bit_errors", "frame_errors", "ber", "fer"])
    for row in result.rows:
        writer.writerow(
            [
                f"{row.snr_db:g}",
                row.trials,
                row.bit_errors,
                row.frame_errors,
                f"{row.ber:.6e}",
                f"{row.fer:.6e}",
            ]
        )


def make_vector_writer(stream):
    """CSV writer for per-frame test vectors, one frame per line."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["seed", "snr_db", "u_hex", "x_hex", "llr_csv", "uhat_hex"])

    def sink(record):
        writer.writerow(
            [
                record["seed"],
                f"{record['snr_db']:g}",
                bits_to_hex(record["u"]),
                bits_to_hex(record["x"]),
                ",".join(f"{v:.17g}" for v in record["llrs"]),
                bits_to_hex(record["u_hat"]),
            ]
        )

    return sink
