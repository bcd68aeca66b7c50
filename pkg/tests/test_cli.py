import json
import subprocess
import sys

import pytest

from cubedom.cli import main
from cubedom.errors import FormatError
from cubedom.formats import format_tree, parse_set, parse_tree, read_tree, write_set, write_tree
from cubedom.hypercube import VertexSet, gray_code_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def kv(text):
    return dict(line.split("=", 1) for line in text.splitlines() if "=" in line and not line.startswith("{"))


def test_set_round_trip(tmp_path):
    vset = VertexSet.from_vertices(4, [0, 5, 15])
    write_set(tmp_path / "s.txt", vset)
    assert (tmp_path / "s.txt").read_text() == "0000\n0101\n1111\n"
    assert parse_set((tmp_path / "s.txt").read_text(), 4) == vset


def test_tree_round_trip(tmp_path):
    tree = gray_code_path(3)
    write_tree(tmp_path / "t.txt", tree)
    text = (tmp_path / "t.txt").read_text()
    assert text.splitlines()[0] == "n=3"
    assert text.splitlines()[1] == "000 001"
    assert read_tree(tmp_path / "t.txt").edges.tolist() == tree.edges.tolist()


@pytest.mark.parametrize(
    "text, line",
    [
        ("n=2\n00 01\n01 1x\n11 10\n", 3),
        ("n=2\n00 01\n01 11\n", 3),
        ("00 01\n", 1),
        ("n=2\n00  01\n01 11\n11 10\n", 2),
    ],
)
def test_tree_parse_errors_carry_line(text, line):
    with pytest.raises(FormatError) as err:
        parse_tree(text)
    assert err.value.line == line


def test_set_parse_error_line():
    with pytest.raises(FormatError) as err:
        parse_set("000\n# comment\n0010\n", 3)
    assert err.value.line == 3


def test_code_command(capsys):
    code, out, _ = run(capsys, "code", "--k", "2", "--list")
    assert code == 0
    assert "codeword_count=2" in out
    assert out.splitlines()[-2:] == ["000", "111"]


def test_construct_expansion_q4(capsys, tmp_path):
    tree_path = tmp_path / "t.txt"
    code, out, _ = run(capsys, "construct", "--n", "4", "--method", "expansion", "--k", "2",
                       "--j", "1", "--out-tree", str(tree_path))
    fields = kv(out)
    assert code == 0
    assert int(fields["cds_size"]) <= 6
    assert int(fields["leaf_count"]) >= 10
    assert main(["verify", "tree", "--n", "4", "--file", str(tree_path)]) == 0


def test_construct_auto_q7(capsys):
    code, out, _ = run(capsys, "construct", "--n", "7", "--method", "auto", "--json")
    assert code == 0
    record = json.loads(out.splitlines()[-1])
    assert record["method"] == "expansion"
    assert record["cds_size"] <= 34 < 46


def test_construct_hamming_q3(capsys, tmp_path):
    set_path = tmp_path / "cds.txt"
    code, out, _ = run(capsys, "construct", "--n", "3", "--method", "hamming", "--out-set", str(set_path))
    fields = kv(out)
    assert code == 0
    assert fields["ds_size"] == "2"
    assert fields["cds_size"] == "4"
    assert main(["verify", "set", "--n", "3", "--file", str(set_path), "--connected"]) == 0


def test_construct_usage_errors(capsys):
    assert run(capsys, "construct", "--n", "5", "--method", "hamming")[0] == 2
    assert run(capsys, "construct", "--n", "6", "--method", "expansion", "--k", "2", "--j", "1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--n", "4", "--method", "bogus"])
    assert exc.value.code == 2


def test_verify_set_disconnected(capsys, tmp_path):
    path = tmp_path / "two_codewords.txt"
    path.write_text("000\n111\n")
    code, out, _ = run(capsys, "verify", "set", "--n", "3", "--file", str(path), "--connected")
    assert code == 1
    assert "dominating=True" in out and "connected=False" in out
    assert run(capsys, "verify", "set", "--n", "3", "--file", str(path))[0] == 0


def test_verify_set_malformed(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("000\n12\n")
    code, _, err = run(capsys, "verify", "set", "--n", "3", "--file", str(path))
    assert code == 1
    assert "line 2" in err


def test_verify_tree_gray_and_broken(capsys, tmp_path):
    good = tmp_path / "gray.txt"
    good.write_text(format_tree(gray_code_path(4)))
    assert run(capsys, "verify", "tree", "--n", "4", "--file", str(good))[0] == 0
    bad = tmp_path / "bad.txt"
    lines = good.read_text().splitlines()
    lines[-1] = lines[1]
    bad.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "verify", "tree", "--n", "4", "--file", str(bad))
    assert code == 1
    assert "violation:" in out
    short = tmp_path / "short.txt"
    short.write_text("\n".join(lines[:-1]) + "\n")
    code, _, err = run(capsys, "verify", "tree", "--n", "4", "--file", str(short))
    assert code == 1 and "line" in err


def test_exact_command(capsys, tmp_path):
    witness = tmp_path / "w.txt"
    code, out, _ = run(capsys, "exact", "gamma", "--n", "3", "--witness", str(witness))
    fields = kv(out)
    assert code == 0
    assert fields["value"] == "2" and fields["status"] == "proven"
    assert main(["verify", "set", "--n", "3", "--file", str(witness)]) == 0
    code, out, _ = run(capsys, "exact", "gamma-c", "--n", "4", "--budget-nodes", "3")
    assert code == 1 and "status=budget_exhausted" in out


def test_table_values(capsys):
    code, out, _ = run(capsys, "table", "--min-n", "2", "--max-n", "9")
    assert code == 0
    lines = out.splitlines()
    header = lines[0].split(",")
    rows = {int(r.split(",")[0]): dict(zip(header, r.split(","))) for r in lines[1:]}
    assert float(rows[3]["ratio_gamma"]) == 1.0
    assert float(rows[7]["ratio_gamma"]) == 1.0
    assert float(rows[6]["ratio_gamma_n"]) == 1.5
    for n, row in rows.items():
        assert int(row["cds_size"]) <= int(row["bound"])
        if n >= 3:
            assert 1 < float(row["ratio_gamma_c"]) < 2
        assert float(row["ratio_gamma"]) < 2


def test_table_formats(capsys):
    code, out, _ = run(capsys, "table", "--min-n", "2", "--max-n", "4", "--format", "markdown")
    assert code == 0 and out.startswith("| n | method |")
    code, out, _ = run(capsys, "table", "--min-n", "2", "--max-n", "4", "--format", "tsv")
    assert "\t" in out.splitlines()[0]


def test_table_formula_rows(capsys, monkeypatch):
    monkeypatch.setenv("CUBEDOM_NMAX", "8")
    assert run(capsys, "table", "--min-n", "6", "--max-n", "10")[0] == 2
    code, out, _ = run(capsys, "table", "--min-n", "6", "--max-n", "10", "--formula-above-nmax")
    assert code == 0
    last = out.splitlines()[-1].split(",")
    assert last[0] == "10" and last[7] == "" and last[9] == ""


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cubedom", "code", "--k", "3"],
                          capture_output=True, text=True, check=True)
    assert "codeword_count=16" in proc.stdout
