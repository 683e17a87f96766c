import json

import pytest

from assocord.cli import main

A4_FULL = json.dumps({"group": "A4", "p": 2, "decomposition": "G", "filtration": ["V4", "V4"]})
S4_D8_WEAK = json.dumps({"group": "S4", "p": 2, "decomposition": "D8", "filtration": ["V4", "V4"]})
A4_V4 = json.dumps({"group": "A4", "p": 2, "decomposition": "V4", "filtration": ["V4", "V4", "C2", "C2"]})


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_assoc_order(capsys):
    code, out, _ = run(capsys, "assoc-order", "Z[S4] + (1/2)Z[S4]Tr(V2)")
    assert code == 0
    assert out.splitlines()[0] == "Z[S4] + (1/2)Z[S4]Tr(V4)"


def test_assoc_order_of_group_ring(capsys):
    code, out, _ = run(capsys, "assoc-order", "Z[A5]", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["presentation"] == "Z[A5]" and data["is_group_ring"]


def test_parse_error_exit(capsys):
    code, _, err = run(capsys, "assoc-order", "Z[S4] + (1/2)Z[S4]Tr(V9")
    assert code == 2
    assert "error" in err and "^" in err


def test_spec_from_file(capsys, tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("Z[S4] + (1/4)Z[S4]Tr(V4) + (1/8)Z[S4]Tr(D8)\n")
    code, out, _ = run(capsys, "free", f"@{f}", "--prime", "2", "--witness")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "true" and len(lines) == 2


def test_free_not_free(capsys):
    code, out, _ = run(capsys, "free", "Z[S4] + (1/2)Z[S4]Tr(V2)", "--prime", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["verdict"] is False


def test_induce(capsys):
    code, out, _ = run(capsys, "induce", "S4", "D8", "<1, 1/2Tr(V2), 1/4Tr(C4), 1/8Tr(D8)>", "--prime", "2")
    assert code == 0
    assert "order:   <1, 1/2Tr(V4), 1/8Tr(G)>" in out
    assert "is ring: false  all normal: false" in out


def test_induce_rejects_non_order(capsys):
    code, _, err = run(capsys, "induce", "S4", "D8", "<1, 1/2Tr(W2)>", "--prime", "2")
    assert code == 2 and "not an order" in err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", A4_FULL)
    assert code == 0 and out.startswith("A4: free")
    code, out, _ = run(capsys, "classify", S4_D8_WEAK, "--format", "json")
    data = json.loads(out)
    assert data["free"] is True and "order 4" in data["rule"]
    code, out, _ = run(capsys, "classify", A4_V4, "--format", "json")
    assert json.loads(out)["verdict"] == "not free"


def test_classify_errors(capsys):
    code, _, err = run(capsys, "classify", json.dumps({"group": "Q8", "p": 2}))
    assert code == 2 and "unsupported" in err
    bad = json.dumps({"group": "S4", "p": 2, "decomposition": "D8", "filtration": ["W2", "W2"]})
    code, _, err = run(capsys, "classify", bad)
    assert code == 2 and "normal" in err


def test_classify_profile_file(capsys, tmp_path):
    f = tmp_path / "prof.json"
    f.write_text(A4_FULL)
    assert run(capsys, "classify", str(f))[0] == 0
    assert run(capsys, "classify", f"@{f}")[0] == 0


def test_check(capsys):
    code, out, _ = run(capsys, "check", A4_V4, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["agree"]
    assert data["results"][0]["verdict_engine"] is False


def test_hybrid(capsys):
    assert run(capsys, "hybrid", "A4", "V4", "--prime", "3")[1].strip() == "true"
    assert run(capsys, "hybrid", "S4", "V4", "--prime", "2")[1].strip() == "false"


def test_reproduce_exit_and_determinism(capsys):
    code, first, _ = run(capsys, "reproduce", "a2")
    assert code == 0 and first.rstrip().endswith("11/11 cases match")
    code, second, _ = run(capsys, "reproduce", "s4-lattices", "--jobs", "2")
    assert second == first


def test_unknown_target():
    with pytest.raises(SystemExit):
        main(["reproduce", "a9"])
