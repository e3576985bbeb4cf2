"""Polar codes with cycle-accurate partial-sums hardware models.

Encoding (matrix, graph and sequential shift-register engines), min-sum
successive cancellation decoding against pluggable partial-sums units,
hardware cost estimation and a seeded Monte-Carlo channel harness.
"""

__version__ = "0.1.0"

from .channel import (
    AwgnChannel,
    SnrPoint,
    awgn_llrs_from_noise,
    bec_llrs,
    bpsk_awgn_llrs,
    trial_rng,
)
from .codes import (
    PolarCode,
    bec_erasure_probs,
    branch_indicator,
    construct_frozen_set,
    kronecker_power,
)
from .decode import (
    DecodeResult,
    PartialSumMismatch,
    decide,
    f_min_sum,
    g_func,
    sc_decode,
    sc_decode_reference,
)
from .encode import encode_graph, encode_matrix, expand, sequential_encode
from .hwcost import (
    CostReport,
    critical_path,
    nand_equivalent,
    resource_counts,
    sr_decoder_instance_counts,
)
from .psu import (
    FbPsuComplexity,
    IndicatorPsu,
    MatrixGenerator,
    OraclePsu,
    PsuStateError,
    ShiftRegisterPsu,
    block_partial_sums,
    fb_psu_complexity,
    fb_stage_dff_counts,
    make_psu,
    oracle_partial_sum,
)
from .schedule import DecodeSchedule, PeAssignment, StageOp, build_line_schedule
from .simulate import SimConfig, SweepResult, SweepRow, simulate_sweep

__all__ = [
    "AwgnChannel",
    "CostReport",
    "DecodeResult",
    "DecodeSchedule",
    "FbPsuComplexity",
    "IndicatorPsu",
    "MatrixGenerator",
    "OraclePsu",
    "PartialSumMismatch",
    "PeAssignment",
    "PolarCode",
    "PsuStateError",
    "ShiftRegisterPsu",
    "SimConfig",
    "SnrPoint",
    "StageOp",
    "SweepResult",
    "SweepRow",
    "awgn_llrs_from_noise",
    "bec_erasure_probs",
    "bec_llrs",
    "block_partial_sums",
    "bpsk_awgn_llrs",
    "branch_indicator",
    "build_line_schedule",
    "construct_frozen_set",
    "critical_path",
    "decide",
    "encode_graph",
    "encode_matrix",
    "expand",
    "f_min_sum",
    "fb_psu_complexity",
    "fb_stage_dff_counts",
    "g_func",
    "kronecker_power",
    "make_psu",
    "nand_equivalent",
    "oracle_partial_sum",
    "resource_counts",
    "sc_decode",
    "sc_decode_reference",
    "sequential_encode",
    "simulate_sweep",
    "sr_decoder_instance_counts",
    "trial_rng",
]
