import csv
import io

import pytest

from polarsim.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    return list(csv.reader(lines))


def test_construct_lists_frozen_indices(capsys):
    code, out, _ = run_cli(capsys, "construct", "--n", "2", "--k", "2")
    assert code == 0
    rows = parse_csv(out)
    assert rows[0] == ["index", "z", "frozen"]
    frozen = [r[0] for r in rows[1:] if r[2] == "1"]
    assert frozen == ["0", "1"]
    zs = [float(r[1]) for r in rows[1:]]
    assert zs == [0.9375, 0.5625, 0.4375, 0.0625]


def test_construct_single_bit(capsys):
    code, out, _ = run_cli(capsys, "construct", "--n", "1", "--k", "1")
    rows = parse_csv(out)
    assert [r[0] for r in rows[1:] if r[2] == "1"] == ["0"]


def test_encode_last_unit_vector(capsys):
    for engine in ("matrix", "graph", "sequential"):
        code, out, _ = run_cli(
            capsys, "encode", "--n", "3", "--k", "8",
            "--data", "00000001", "--engine", engine,
        )
        assert code == 0
        assert out.strip() == "11111111"


def test_encode_rate_one_zeros(capsys):
    code, out, _ = run_cli(
        capsys, "encode", "--n", "2", "--k", "4", "--data", "0000",
    )
    assert out.strip() == "0000"


def test_encode_cross_check_passes(capsys):
    code, out, _ = run_cli(
        capsys, "encode", "--n", "4", "--k", "10",
        "--data", "1011001110", "--cross-check",
    )
    assert code == 0
    assert len(out.strip()) == 16


def test_encode_wrong_length_is_usage_error(capsys):
    code, _, err = run_cli(
        capsys, "encode", "--n", "3", "--k", "8", "--data", "101",
    )
    assert code == 2
    assert "error" in err


def test_decode_from_file(tmp_path, capsys):
    llrs = tmp_path / "llrs.txt"
    llrs.write_text("".join(f"{v}\n" for v in (4.0, -4.0, 4.0, -4.0)))
    code, out, _ = run_cli(
        capsys, "decode", "--n", "2", "--k", "4", "--llrs", str(llrs),
        "--verify-reads",
    )
    assert code == 0
    rows = parse_csv(out)
    assert rows[0] == ["u_hat", "info_hat"]
    # Rate-1 code: u_hat is the re-encoded inverse of the hard decisions.
    assert rows[1][0] == rows[1][1]


def test_decode_forces_frozen_zeros(tmp_path, capsys):
    llrs = tmp_path / "llrs.txt"
    llrs.write_text("".join("-4.0\n" for _ in range(8)))
    code, out, _ = run_cli(
        capsys, "decode", "--n", "3", "--frozen", "0,1,2,3,4,5,6,7",
        "--llrs", str(llrs),
    )
    rows = parse_csv(out)
    assert rows[1][0] == "00000000"
    assert rows[1][1] == ""


def test_simulate_deterministic(capsys):
    argv = [
        "simulate", "--n", "3", "--k", "4", "--trials", "30",
        "--points", "3", "--seed", "5", "--batch-size", "8",
    ]
    code_a, out_a, _ = run_cli(capsys, *argv)
    code_b, out_b, _ = run_cli(capsys, *argv)
    assert code_a == code_b == 0
    assert out_a == out_b
    rows = parse_csv(out_a)
    assert rows[0] == ["snr_db", "trials", "bit_errors", "frame_errors", "ber", "fer"]
    assert len(rows) == 4


def test_simulate_noiseless(capsys):
    code, out, _ = run_cli(
        capsys, "simulate", "--n", "3", "--k", "4", "--trials", "10",
        "--points", "2", "--noiseless",
    )
    for row in parse_csv(out)[1:]:
        assert row[2] == "0" and row[3] == "0"


def test_simulate_vector_dump(tmp_path, capsys):
    dump = tmp_path / "vectors.csv"
    code, _, _ = run_cli(
        capsys, "simulate", "--n", "3", "--k", "4", "--trials", "4",
        "--points", "1", "--dump-vectors", str(dump),
    )
    assert code == 0
    lines = dump.read_text().splitlines()
    assert lines[0] == "seed,snr_db,u_hex,x_hex,llr_csv,uhat_hex"
    assert len(lines) == 5


def test_psu_trace_register_rows(capsys):
    code, out, _ = run_cli(
        capsys, "psu-trace", "--n", "3", "--bits", "1101",
    )
    assert code == 0
    rows = parse_csv(out)
    assert rows[0] == ["step", "reads", "pushed_bit", "state"]
    assert len(rows) == 5
    assert rows[-1][3] == "1101"


def test_psu_trace_all_zero(capsys):
    _, out, _ = run_cli(capsys, "psu-trace", "--n", "3", "--bits", "0000")
    for row in parse_csv(out)[1:]:
        assert row[3] == "0000"


def test_psu_trace_reads_agree_between_archs(capsys):
    reads = {}
    for arch in ("sr", "oracle", "if"):
        _, out, _ = run_cli(
            capsys, "psu-trace", "--n", "3", "--bits", "10110100",
            "--arch", arch,
        )
        reads[arch] = [row[1] for row in parse_csv(out)[1:]]
    assert reads["sr"] == reads["oracle"] == reads["if"]


def test_psu_trace_schedule_dump(capsys):
    code, out, _ = run_cli(capsys, "psu-trace", "--n", "2", "--schedule")
    rows = parse_csv(out)
    assert rows[0] == ["clock", "stage", "kind", "edges", "read_positions"]
    assert len(rows) == 1 + 6
    assert rows[1][1:] == ["1", "F", "0;1", ""]
    assert rows[4][1:] == ["1", "G", "2;3", "1;0"]


def test_hw_estimate_table(capsys):
    code, out, _ = run_cli(
        capsys, "hw-estimate", "--arch", "all", "--n-range", "2^3..2^3",
    )
    assert code == 0
    rows = {r[0]: r for r in parse_csv(out)[1:]}
    assert rows["SR"][2:] == ["8", "6", "0", "3", "60", "AND:1;XOR:1"]
    assert rows["FB"][2:] == ["5", "3", "6", "0", "50.67", "XOR:2;MUX:1"]
    assert rows["IF"][2:] == ["", "", "", "", "68", ""]


def test_hw_estimate_range_expansion(capsys):
    _, out, _ = run_cli(
        capsys, "hw-estimate", "--arch", "sr", "--n-range", "2^10..2^14",
    )
    rows = parse_csv(out)[1:]
    assert [r[1] for r in rows] == ["1024", "2048", "4096", "8192", "16384"]
    assert rows[0][6] == "7680"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["encode", "--n", "3"])  # missing --data
    assert exc.value.code == 2


def test_bad_value_exit_code(capsys):
    code, _, err = run_cli(capsys, "construct", "--n", "3", "--k", "9")
    assert code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "table.csv"
    code, out, _ = run_cli(
        capsys, "hw-estimate", "--arch", "sr", "--n-range", "16",
        "--out", str(target),
    )
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("# config:")
