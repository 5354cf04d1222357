import pytest

from cliquemin import oracle
from cliquemin.covering import covering_number
from cliquemin.formulas import ParameterError, turan_edge_count
from cliquemin.graphs import (
    complete_graph,
    count_cliques,
    count_copies,
    cycle_graph,
    from_graph6,
)


def test_brute_min_cliques_k5():
    r = oracle.brute_min_cliques(5, 10, 3, 3)
    assert r.minimum == 10
    assert r.witnesses == ["D~{"]  # K_5 in graph6
    assert from_graph6(r.witnesses[0]) == complete_graph(5)


def test_brute_min_cliques_rademacher_n6():
    r = oracle.brute_min_cliques(6, turan_edge_count(6, 2) + 1, 3, 1)
    assert r.minimum == 3
    assert r.graphs_scanned == 3003


def test_brute_witnesses_satisfy_constraints():
    r = oracle.brute_min_cliques(6, 10, 3, 2)
    for g6 in r.witnesses:
        g = from_graph6(g6)
        assert g.edge_count() == 10
        assert count_cliques(g, 3) == r.minimum
        assert covering_number(g, complete_graph(3)).tau == 2


def test_brute_workers_agree():
    serial = oracle.brute_min_cliques(6, 9, 3, 1, workers=1)
    parallel = oracle.brute_min_cliques(6, 9, 3, 1, workers=3)
    assert serial.minimum == parallel.minimum
    assert serial.witnesses == parallel.witnesses


def test_brute_cap_refusal():
    with pytest.raises(ParameterError):
        oracle.brute_min_cliques(9, 10, 3, 1)


def test_verify_fg_small():
    rows = oracle.verify_fg(8)
    assert all(r.holds for r in rows)
    by_key = {(r.s, r.t, r.parity): r for r in rows}
    r21 = by_key[(2, 1, "even")]
    assert r21.m_st == 0
    assert r21.f_at_mst == -4 and r21.g_min == -4
    # g dips to f's level at m=1 as well, making the pair exceptional
    assert r21.exceptional
    assert not by_key[(5, 1, "even")].exceptional


def test_c_of_nF_triangle():
    assert oracle.c_of_nF(10, complete_graph(3)).value == 5
    assert oracle.c_of_nF(11, complete_graph(3)).value == 5


def test_c_of_nF_c5():
    # both placements counted brute-force; the minimum is over distinct part sizes
    val = oracle.c_of_nF(9, cycle_graph(5)).value
    a = oracle.c_multipartite((5, 4), cycle_graph(5))
    b = oracle.c_multipartite((4, 5), cycle_graph(5))
    assert val == min(a, b)
    host = oracle.constructions.complete_multipartite((5, 4)).with_edges(add=[(0, 1)])
    assert a == count_copies(host, cycle_graph(5))


def test_c_multipartite_examples():
    assert oracle.c_multipartite((5, 5), complete_graph(3)) == 5
    assert oracle.c_multipartite((4, 3, 3), complete_graph(4)) == 9
    assert oracle.c_multipartite((3, 3, 4), complete_graph(4)) == 12


def test_c_of_nF_rejects_non_critical():
    with pytest.raises(ParameterError):
        oracle.c_of_nF(10, cycle_graph(4))


def test_compositions_with_square_sum():
    comps = oracle.compositions_with_square_sum(12, 3, 50)
    assert comps == [(5, 4, 3)]
    assert oracle.compositions_with_square_sum(12, 3, 48) == [(4, 4, 4)]
    assert oracle.compositions_with_square_sum(12, 3, 49) == []


def test_opt_enumerate():
    res = oracle.opt_enumerate(12, 4, 3, 2, 0, "A")
    assert res.value == 3 * 12 and res.argmin == (5, 4, 3)
    res = oracle.min_product(12, 4, 3, 2, 0)
    assert res.value == 12
    res = oracle.min_product(13, 4, 3, 2, 0)
    assert res.value == 15  # (q+1)(q-1) with q=4
    infeasible = oracle.opt_enumerate(12, 4, 2, 1, 1, "A")
    # m=1 leaves only the balanced square sum, which is feasible here
    assert infeasible.feasible


def test_opt_objectives_relate():
    # objective A equals the closed clique-count form per composition
    for n in (13, 16):
        res_a = oracle.opt_enumerate(n, 4, 3, 2, 1, "A")
        x = res_a.argmin
        assert res_a.value <= 3 * x[1] * x[2]
        res_d = oracle.opt_enumerate(n, 4, 3, 2, 1, "D")
        assert res_d.value >= res_a.value  # D adds a nonnegative spread term


def test_theorem_sweeps_run():
    t1 = oracle.theorem_sweep("T1", {"n": [40, 41], "s": [2, 3]})
    assert all(r["pass"] for r in t1 if r["status"] == "ok")
    t2 = oracle.theorem_sweep("T2", {"n": [12, 13, 14], "s": [2, 3]})
    assert all(r["pass"] for r in t2 if r["status"] == "ok")
    t4 = oracle.theorem_sweep("T4", {"n": [10, 12], "s": [1, 2]})
    for row in t4:
        if row["status"] == "ok":
            assert "residual" in row
