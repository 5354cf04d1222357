import json

import pytest

from cliquemin.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_bm(capsys):
    code, out, _ = run(capsys, "construct", "bm", "--n", "100", "--s", "2", "--t", "1", "--tau")
    assert code == 0
    payload = json.loads(out)
    assert payload["edge_count"] == 2501
    assert payload["clique_count"]["3"] == 98
    assert payload["covering_number"] == 2
    assert payload["format_version"] == 1


def test_construct_turan_graph6(capsys):
    code, out, _ = run(capsys, "construct", "turan", "--n", "13", "--parts", "3",
                       "--format", "graph6")
    assert code == 0
    from cliquemin.graphs import from_graph6
    from cliquemin.constructions import turan_graph

    assert from_graph6(out.strip()) == turan_graph(13, 3)


def test_construct_infeasible_exits_nonzero(capsys):
    code, _, err = run(capsys, "construct", "km-special", "--n", "12", "--k", "4",
                       "--s", "11", "--t", "1")
    assert code == 2
    assert "n_minus" in err


def test_verify_fg(capsys):
    code, out, _ = run(capsys, "verify", "fg", "--smax", "8")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_hold"]
    assert payload["exceptional_even"] == [[2, 1], [3, 1], [4, 1]]


def test_verify_fact_small_grid(capsys):
    code, out, _ = run(capsys, "verify", "fact", "--n", "20..24", "--s", "2..4",
                       "--tau-sample", "20")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("n,s,t,status")
    assert all(line.endswith("True") for line in lines[1:] if ",ok," in line)


def test_verify_conjectures(capsys):
    code, out, _ = run(capsys, "verify", "conjectures", "--n", "100", "--s", "10")
    assert code == 0
    payload = json.loads(out)
    assert payload["construction_n3"] == 470
    assert payload["conjectured_bound"] == 482
    assert payload["conjecture_violated"]


def test_verify_opt(capsys):
    code, out, _ = run(capsys, "verify", "opt", "--k", "4", "--n", "12..20", "--m", "0..1")
    assert code == 0


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--n", "5", "--e", "10", "--s", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["minimum"] == 10
    assert payload["witnesses"] == ["D~{"]


def test_search_cap_refusal(capsys):
    code, _, err = run(capsys, "search", "--n", "9", "--e", "10", "--s", "1")
    assert code == 2
    assert "capped" in err


def test_outputs_are_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        code = main(["verify", "fact", "--n", "20..22", "--s", "2..3", "--out", str(p)])
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_search_deterministic_across_workers(tmp_path):
    outs = []
    for workers in ("1", "2"):
        p = tmp_path / f"w{workers}.json"
        code = main(["search", "--n", "6", "--e", "9", "--s", "1",
                     "--workers", workers, "--out", str(p)])
        assert code == 0
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]


def test_invalid_range_rejected(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "fact", "--n", "bogus", "--s", "2"])
