from polarsim import PolarCode, branch_indicator, build_line_schedule


def test_two_bit_schedule():
    sched = build_line_schedule(PolarCode(1, []))
    assert sched.total_clocks == 2
    first, second = sched.ops
    assert (first.kind, first.stage, list(first.edges)) == ("F", 0, [0])
    assert (second.kind, second.stage, list(second.edges)) == ("G", 0, [1])
    (pe,) = second.pe_assignments
    # The single PE reads register 0, which holds the sum over leaf 0.
    assert (pe.pe, pe.edge, pe.read_position) == (0, 1, 0)


def test_total_clocks():
    for n in range(1, 15):
        sched = build_line_schedule(PolarCode(n, []))
        assert sched.total_clocks == 2 * (1 << n) - 2


def test_eight_bit_activation_count():
    assert build_line_schedule(PolarCode(3, [])).total_clocks == 14


def test_stage_two_g_op_reads():
    # Decoding the second half of an 8-bit code needs the four stage-2
    # sums of the first half.
    sched = build_line_schedule(PolarCode(3, []))
    (op,) = [o for o in sched.ops if o.stage == 2 and o.kind == "G"]
    assert list(op.edges) == [4, 5, 6, 7]
    needed = sorted((a.edge - 4, op.stage) for a in op.pe_assignments)
    assert needed == [(0, 2), (1, 2), (2, 2), (3, 2)]


def test_kinds_match_branch_indicator():
    sched = build_line_schedule(PolarCode(4, []))
    for op in sched.ops:
        for e in op.edges:
            expected = "G" if branch_indicator(int(e), op.stage) else "F"
            assert op.kind == expected


def test_edge_and_pe_counts_per_activation():
    sched = build_line_schedule(PolarCode(5, []))
    for op in sched.ops:
        assert op.edges.size == 1 << op.stage
        if op.kind == "G":
            pes = [a.pe for a in op.pe_assignments]
            assert sorted(pes) == list(range(1 << op.stage))
        else:
            assert op.pe_assignments == []


def test_g_edges_per_stage():
    for n in range(1, 11):
        sched = build_line_schedule(PolarCode(n, []))
        N = 1 << n
        for j in range(n):
            g_edges = sum(o.edges.size for o in sched.ops if o.stage == j and o.kind == "G")
            f_edges = sum(o.edges.size for o in sched.ops if o.stage == j and o.kind == "F")
            assert g_edges == N // 2
            assert f_edges == N // 2


def test_leaves_in_index_order():
    sched = build_line_schedule(PolarCode(4, []))
    leaves = [int(o.edges[0]) for o in sched.ops if o.stage == 0]
    assert leaves == list(range(16))


def test_pe_mapping_is_reversed_offset():
    sched = build_line_schedule(PolarCode(4, []))
    for op in sched.ops:
        for a in op.pe_assignments:
            offset = a.edge - int(op.edges[0])
            assert a.pe == (1 << op.stage) - 1 - offset
            assert a.read_position == a.pe


def test_read_causality():
    # Every sum a G op consumes covers only decisions made before the
    # first leaf that decode order reaches after that op.
    sched = build_line_schedule(PolarCode(4, []))
    for idx, op in enumerate(sched.ops):
        if op.kind != "G":
            continue
        later_leaves = [
            int(o.edges[0]) for o in sched.ops[idx + 1 :] if o.stage == 0
        ]
        next_leaf = later_leaves[0] if later_leaves else 1 << 4
        for a in op.pe_assignments:
            source = a.edge - (1 << op.stage)
            block_end = ((source >> op.stage) + 1) << op.stage
            assert block_end <= next_leaf


def test_g_reads_fire_exactly_at_source_block_completion():
    for n in (3, 4, 6):
        sched = build_line_schedule(PolarCode(n, []))
        pushed = 0
        for op in sched.ops:
            if op.kind == "G":
                for a in op.pe_assignments:
                    source = a.edge - (1 << op.stage)
                    block_end = ((source >> op.stage) + 1) << op.stage
                    assert pushed == block_end
            if op.stage == 0:
                pushed += 1
        assert pushed == 1 << n
