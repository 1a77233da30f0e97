import json

import pytest

from orelab import (
    complete_graph,
    graph_to_graph6,
    graph_to_text,
    named_graph,
    short_key,
)
from orelab.lab_cli import main


@pytest.fixture()
def run(capsys):
    def go(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return go


@pytest.fixture()
def small_corpus(tmp_path, run):
    root = tmp_path / "corpus"
    code, out, err = run("gen", "--max-n", "9", "--corpus", str(root))
    assert code == 0 and err == ""
    code, out, err = run("add", "c5_join_k2", "--corpus", str(root))
    assert code == 0
    return root


def test_gen_reports_and_is_idempotent(tmp_path, run):
    root = tmp_path / "corpus"
    code, out, _ = run("gen", "--max-n", "9", "--corpus", str(root))
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "generated 3 classes up to n=9"
    assert sum(1 for l in lines if l.endswith(" new")) == 3
    code, out, _ = run("gen", "--max-n", "9", "--corpus", str(root))
    assert code == 0
    assert sum(1 for l in out.splitlines() if l.endswith(" known")) == 3


def test_add_named_and_unknown(tmp_path, run):
    root = str(tmp_path / "c")
    code, out, _ = run("add", "k5", "--corpus", root)
    assert code == 0
    assert out.splitlines()[0] == f"{short_key(complete_graph(5))} n=5 m=10 new"
    code, out, _ = run("add", "k5", "--corpus", root)
    assert out.splitlines()[0].endswith(" known")
    code, _, err = run("add", "no_such_graph", "--corpus", root)
    assert code == 2
    assert "named construction" in err


def test_add_text_file(tmp_path, run):
    G = named_graph("c5_join_k2")
    path = tmp_path / "c5k2.txt"
    path.write_text(graph_to_text(G))
    code, out, _ = run("add", str(path), "--corpus", str(tmp_path / "c"))
    assert code == 0
    assert out.startswith(short_key(G))
    assert "n=7 m=16 new" in out


def test_add_graph6_file_with_two_graphs(tmp_path, run):
    lines = [
        graph_to_graph6(complete_graph(5)),
        graph_to_graph6(named_graph("groetzsch")),
    ]
    path = tmp_path / "batch.g6"
    path.write_text("\n".join(lines) + "\n")
    code, out, _ = run("add", str(path), "--corpus", str(tmp_path / "c"))
    assert code == 0
    assert len(out.strip().splitlines()) == 2


def test_add_bad_graph6_line_reports_position(tmp_path, run):
    path = tmp_path / "bad.g6"
    path.write_text("D~{\n@@@\n")
    code, _, err = run("add", str(path), "--corpus", str(tmp_path / "c"))
    assert code == 2
    assert "bad.g6:2:" in err


def test_verify_empty_corpus_warns(tmp_path, run):
    code, out, _ = run("verify", "main", "--corpus", str(tmp_path / "nothing"))
    assert code == 0
    assert "empty" in out


def test_verify_suites_pass(small_corpus, run):
    for suite in ("main", "ore5", "lemma2", "discharge"):
        code, out, _ = run("verify", suite, "--corpus", str(small_corpus))
        assert code == 0, out
        last = out.strip().splitlines()[-1]
        assert last.startswith(f"SUITE {suite} PASS checks=")
        assert last.endswith("failures=0")
        assert all(
            " FAIL" not in line for line in out.splitlines()
        )


def test_verify_all_includes_every_row_family(small_corpus, run):
    code, out, _ = run(
        "verify", "all", "--corpus", str(small_corpus), "--records", "6"
    )
    assert code == 0
    names = {line.split()[1] for line in out.splitlines() if line.startswith("CHECK")}
    assert {
        "corpus-key",
        "corpus-invariants",
        "main-case-k5",
        "main-case-ore",
        "main-case-other",
        "ore5-ky-upper",
        "ore5-equivalence",
        "ore5-low-ky-collapsible",
        "packing-lower-bound",
        "compose-superadditive",
        "compose-k5-bump",
        "charge-sum-identity",
        "conservation",
        "edges-vs-mic",
        "mic-vs-components",
        "positive-p-components",
        "extension-shape",
        "ky-extension",
        "refined-extension",
        "coarse-extension",
    } <= names


def test_verify_catches_tampered_invariants(small_corpus, run):
    key = short_key(complete_graph(5))
    path = small_corpus / f"{key}.json"
    raw = json.loads(path.read_text())
    raw["invariants"]["p_ky"] = 99
    path.write_text(json.dumps(raw, indent=1, sort_keys=True) + "\n")
    code, out, _ = run("verify", "main", "--corpus", str(small_corpus))
    assert code == 1
    assert f"CHECK corpus-invariants {key} FAIL note=stale=p_ky" in out
    assert out.strip().splitlines()[-1].startswith("SUITE main FAIL")


def test_verify_is_deterministic(small_corpus, run):
    args = (
        "verify",
        "extensions",
        "--corpus",
        str(small_corpus),
        "--records",
        "10",
        "--seed",
        "3",
    )
    code1, out1, _ = run(*args)
    code2, out2, _ = run(*args)
    assert (code1, out1) == (code2, out2) == (0, out1)


def test_verify_jobs_output_identical(small_corpus, run):
    args = ("verify", "all", "--corpus", str(small_corpus), "--records", "6")
    _, serial, _ = run(*args)
    code, parallel, _ = run(*args, "--jobs", "2")
    assert code == 0
    assert parallel == serial


def test_extend_block_of_double(small_corpus, run):
    from orelab import enumerate_5_ore

    nine = [g for g, _ in enumerate_5_ore(9) if g.n == 9]
    key = short_key(nine[0])
    code, out, _ = run(
        "extend", key, "--r", "0,1,2,3,4", "--corpus", str(small_corpus)
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith(f"extend {key} r=0,1,2,3,4 seed=0")
    assert lines[1].startswith("phi ")
    assert any(l.startswith("identified n=8") for l in lines)
    assert any("core-classes=" in l and "complete=yes spanning=yes" in l for l in lines)
    assert any(l == "expanded 0,1,2,3,4,5,6,7,8" for l in lines)
    assert sum(1 for l in lines if l.startswith("CHECK")) == 3


def test_extend_usage_errors(small_corpus, run):
    from orelab import enumerate_5_ore

    nine = [g for g, _ in enumerate_5_ore(9) if g.n == 9]
    key = short_key(nine[0])
    cases = [
        ("0,1,2,3,4,5,6,7,8", "proper subset"),
        ("0,1,2", "at least 5"),
        ("0,1,2,3,99", "outside"),
        ("0,1,two,3,4", "--r"),
    ]
    for rlist, fragment in cases:
        code, _, err = run(
            "extend", key, "--r", rlist, "--corpus", str(small_corpus)
        )
        assert code == 2
        assert fragment in err
    code, _, err = run(
        "extend", "0" * 16, "--r", "0,1,2,3,4", "--corpus", str(small_corpus)
    )
    assert code == 2
    assert "no corpus entry" in err


def test_t_command(run, tmp_path):
    code, out, _ = run("t", "k5", "--corpus", str(tmp_path / "c"))
    assert code == 0
    assert out.splitlines()[0] == "t=2"
    assert out.splitlines()[1].startswith("piece K4 ")


def test_potential_command(run, tmp_path):
    code, out, _ = run("potential", "c5_join_k2", "--corpus", str(tmp_path / "c"))
    assert code == 0
    assert out.splitlines() == ["n=7", "m=16", "t=2", "p_ky=-1", "p=-30/21"]


def test_discharge_command_on_critical_graph(run, tmp_path):
    code, out, _ = run("discharge", "k5", "--corpus", str(tmp_path / "c"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "v0 d=4 init=88/84 final=88/84"
    assert "total 440/84" in lines
    assert any(l.startswith("CHECK charge-sum-identity") for l in lines)


def test_discharge_command_skips_closing_for_non_critical(run, tmp_path):
    code, out, _ = run("discharge", "groetzsch", "--corpus", str(tmp_path / "c"))
    assert code == 0
    assert "closing inequalities skipped: graph is not 5-critical" in out
    assert "CHECK" not in out


def test_env_var_selects_corpus(tmp_path, run, monkeypatch):
    root = tmp_path / "envcorpus"
    code, _, _ = run("add", "k5", "--corpus", str(root))
    assert code == 0
    monkeypatch.setenv("ORELAB_CORPUS", str(root))
    key = short_key(complete_graph(5))
    code, out, _ = run("t", key)
    assert code == 0 and out.splitlines()[0] == "t=2"


def test_resolve_rejects_nonsense_token(run, tmp_path):
    code, _, err = run("t", "definitely-not-a-graph", "--corpus", str(tmp_path / "c"))
    assert code == 2
    assert "not a corpus key" in err
