import random

import pytest

from sdmatch import (
    CnfFormula,
    FormatError,
    SdmInstance,
    decode_spair_to_assignment,
    encode_assignment_to_spair,
    extend_spair_to_dm,
    is_matching,
    parse_dimacs_cnf,
    project_dm_to_spair,
    reduce_3sat_to_sdm,
    reduce_sdm_to_dm,
    solve_dm_exact,
    solve_exact,
    true_false_pairs,
    validate_graph,
    verify_spair,
)
from sdmatch.reductions import parse_gadget_map, serialize_gadget_map
from sdmatch.solve import count_spairs_exact
from conftest import random_graph


def random_formula(rng: random.Random, max_vars=3, max_clauses=3) -> CnfFormula:
    t = rng.randint(1, max_vars)
    s = rng.randint(1, max_clauses)
    clauses = []
    for _ in range(s):
        clause = []
        for _ in range(rng.randint(1, 3)):
            v = rng.randint(1, t)
            clause.append(v if rng.random() < 0.5 else -v)
        clauses.append(clause)
    return CnfFormula.make(t, clauses)


def test_parse_dimacs_basic():
    f = parse_dimacs_cnf("p cnf 1 1\n1 0\n")
    assert f.num_vars == 1
    assert f.clauses == ((1,),)


def test_parse_dimacs_two_units():
    f = parse_dimacs_cnf("p cnf 1 2\n1 0\n-1 0\n")
    assert f.clauses == ((1,), (-1,))


def test_parse_dimacs_out_of_range():
    with pytest.raises(FormatError, match="out of range"):
        parse_dimacs_cnf("p cnf 1 1\n2 0\n")


def test_parse_dimacs_missing_terminator():
    with pytest.raises(FormatError, match="terminator"):
        parse_dimacs_cnf("p cnf 1 1\n1\n")


def test_clause_arity_limit():
    with pytest.raises(ValueError, match="arity"):
        CnfFormula.make(4, [[1, 2, 3, 4]])


def test_repeated_literal_deduplicated():
    f = CnfFormula.make(1, [[1, 1, 1]])
    assert f.clauses == ((1,),)


def test_reduction_sizes_single_clause():
    f = CnfFormula.make(3, [[1, -2, 3]])
    inst, gm = reduce_3sat_to_sdm(f)
    g = inst.graph
    assert g.nx + g.ny == 14
    assert g.nx == 7
    assert len(inst.s_set) == 4
    # literal edges: positive -> position 1 of the cycle, negative -> position 3
    w = gm.clause_w(1)
    assert (w, gm.cycle_y(1, 1)) in g.edge_set
    assert (w, gm.cycle_y(2, 3)) in g.edge_set
    assert (w, gm.cycle_y(3, 1)) in g.edge_set


def test_reduction_two_clauses_one_var():
    f = CnfFormula.make(1, [[1], [-1]])
    inst, gm = reduce_3sat_to_sdm(f)
    g = inst.graph
    assert gm.cycle_len() == 8
    assert (gm.clause_w(1), gm.cycle_y(1, 1)) in g.edge_set
    assert (gm.clause_w(2), gm.cycle_y(1, 7)) in g.edge_set
    # the contradiction is unsatisfiable, so no pair exists
    assert solve_exact(inst) is None


def test_no_clauses_rejected():
    with pytest.raises(ValueError, match="no clauses"):
        reduce_3sat_to_sdm(CnfFormula.make(1, []))


def test_structural_audit():
    rng = random.Random(41)
    for _ in range(20):
        f = random_formula(rng)
        inst, gm = reduce_3sat_to_sdm(f)
        g = inst.graph
        for i in range(1, gm.t + 1):
            for j in range(2, gm.cycle_len() + 1, 2):
                x = gm.cycle_x(i, j)
                prev = gm.cycle_edge(i, j - 1)[1]
                nxt = gm.cycle_edge(i, j)[1]
                assert g.adj[x] == tuple(sorted({prev, nxt}))
        for k in range(1, gm.s + 1):
            assert g.y_adj[gm.clause_z(k)] == (gm.clause_w(k),)


def test_figure_pairs_s2(c8_gadget):
    inst, gm = c8_gadget
    true_pair, false_pair = true_false_pairs(gm, 1)
    e = lambda j: gm.cycle_edge(1, j)
    assert true_pair.m1.edge_set == {e(1), e(3), e(5), e(7)}
    assert true_pair.m2.edge_set == {e(2), e(6)}
    assert false_pair.m1.edge_set == {e(2), e(4), e(6), e(8)}
    assert false_pair.m2.edge_set == {e(1), e(5)}
    for pair in (true_pair, false_pair):
        ok, why = verify_spair(inst, pair)
        assert ok, why


def test_decode_reads_cycle_value():
    f = CnfFormula.make(1, [[1]])
    inst, gm = reduce_3sat_to_sdm(f)
    spair = solve_exact(inst)
    values = decode_spair_to_assignment(gm, spair)
    assert values == {1: True}


def test_encode_clause_witness_rule():
    f = CnfFormula.make(3, [[1, -2, 3]])
    inst, gm = reduce_3sat_to_sdm(f)
    assignment = {1: True, 2: True, 3: True}
    spair = encode_assignment_to_spair(gm, f, assignment)
    # lowest satisfying variable is 1 (true), so the witness edge sits at position 1
    assert (gm.clause_w(1), gm.cycle_y(1, 1)) in spair.m2.edge_set
    assert (gm.clause_w(1), gm.clause_z(1)) in spair.m1.edge_set
    assert verify_spair(inst, spair)[0]


def test_encode_rejects_unsatisfying_assignment():
    f = CnfFormula.make(1, [[1]])
    _, gm = reduce_3sat_to_sdm(f)
    with pytest.raises(ValueError, match="clause 1"):
        encode_assignment_to_spair(gm, f, {1: False})


def test_round_trip_random_formulas():
    rng = random.Random(42)
    for _ in range(60):
        f = random_formula(rng)
        sat = f.brute_force_satisfiable()
        inst, gm = reduce_3sat_to_sdm(f)
        spair = solve_exact(inst)
        assert (spair is not None) == (sat is not None)
        if spair is not None:
            values = decode_spair_to_assignment(gm, spair)
            assert f.evaluate(values)
            encoded = encode_assignment_to_spair(gm, f, values)
            assert verify_spair(inst, encoded)[0]
            assert decode_spair_to_assignment(gm, encoded) == values


def test_gadget_map_sidecar_round_trip():
    f = CnfFormula.make(2, [[1, -2], [2]])
    _, gm = reduce_3sat_to_sdm(f)
    assert parse_gadget_map(serialize_gadget_map(gm)) == gm


def test_reduce_dm_edgeless():
    g = validate_graph(3, 3, [])
    dm = reduce_sdm_to_dm(SdmInstance.make(g, []))
    assert dm.g1.num_edges() == 0
    assert dm.g2.num_edges() == 9


def test_reduce_dm_keeps_s_rows():
    g = validate_graph(3, 3, [(0, 0)])
    dm = reduce_sdm_to_dm(SdmInstance.make(g, [0]))
    assert dm.g2.adj[0] == (0,)
    assert dm.g2.adj[1] == (0, 1, 2)
    assert dm.g2.adj[2] == (0, 1, 2)


def test_reduce_dm_precondition():
    g = validate_graph(2, 2, [(0, 0)])
    with pytest.raises(ValueError, match="polynomial"):
        reduce_sdm_to_dm(SdmInstance.make(g, [0]))


def test_project_drops_added_edges():
    rng = random.Random(43)
    checked = 0
    while checked < 40:
        g = random_graph(rng, rng.randint(2, 5), rng.randint(2, 5), 0.5)
        max_s = g.nx - 2
        s_set = sorted(rng.sample(range(g.nx), rng.randint(0, max_s)))
        inst = SdmInstance.make(g, s_set)
        dm = reduce_sdm_to_dm(inst)
        result = solve_dm_exact(dm)
        if result is None:
            continue
        checked += 1
        spair = project_dm_to_spair(inst, *result)
        assert verify_spair(inst, spair)[0]
        assert all(x in s_set for x, _ in spair.m2.edges)


def test_extend_builds_dm_solution():
    rng = random.Random(44)
    checked = 0
    while checked < 40:
        nx = rng.randint(2, 5)
        ny = rng.randint(nx, 6)
        g = random_graph(rng, nx, ny, 0.6)
        s_set = sorted(rng.sample(range(nx), rng.randint(0, nx - 2)))
        inst = SdmInstance.make(g, s_set)
        spair = solve_exact(inst)
        if spair is None:
            continue
        checked += 1
        m1, m2 = extend_spair_to_dm(inst, spair)
        dm = reduce_sdm_to_dm(inst)
        assert is_matching(dm.g1, m1.edges)
        assert is_matching(dm.g2, m2.edges)
        assert not (m1.edge_set & m2.edge_set)
        assert m1.covered_x == m2.covered_x == frozenset(range(nx))
        # round trip back: projection recovers the S-restricted part
        back = project_dm_to_spair(inst, m1, m2)
        assert back.m1 == spair.m1
        assert {e for e in back.m2.edges} == {e for e in spair.m2.edges if e[0] in s_set}


def test_extend_rejects_narrow_y():
    g = validate_graph(3, 2, [(0, 0), (1, 1), (2, 0)])
    inst = SdmInstance.make(g, [])
    with pytest.raises(ValueError):
        # no S-pair exists here at all, so verify fails or |Y| < |X| trips
        from sdmatch import SPair, Matching
        extend_spair_to_dm(inst, SPair(Matching(()), Matching(())))
