import re
import subprocess
import sys

import networkx as nx
import pytest

from oddhole.cli import main
from oddhole.formats import write_dimacs, write_graph6
from oddhole.generators import substitute
from oddhole.graph import add_vertex, bull_graph, complete_graph, cycle_graph, petersen_graph

LINE = re.compile(r"^(ODD-HOLE (\d+):( \d+)+|NO-ODD-HOLE|NOT-BULL-FREE:( \d+){5})$")


def write(tmp_path, g, name="g.g6"):
    path = tmp_path / name
    path.write_text(write_dimacs(g) if name.endswith(".col") else write_graph6(g) + "\n")
    return str(path)


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_check_c7(tmp_path, capsys):
    code, out, _ = run(["check", write(tmp_path, cycle_graph(7)), "--machine"], capsys)
    assert code == 10
    assert out == "ODD-HOLE 7: 0 1 2 3 4 5 6\n"


def test_check_c6(tmp_path, capsys):
    code, out, _ = run(["check", write(tmp_path, cycle_graph(6)), "--machine"], capsys)
    assert code == 0 and out == "NO-ODD-HOLE\n"


def test_check_bull(tmp_path, capsys):
    code, out, _ = run(["check", write(tmp_path, bull_graph())], capsys)
    assert code == 2
    assert LINE.match(out.strip()) and out.startswith("NOT-BULL-FREE:")


def test_human_output(tmp_path, capsys):
    g = substitute(cycle_graph(7), 0, complete_graph(2))
    code, out, _ = run(["check", write(tmp_path, g)], capsys)
    lines = out.splitlines()
    assert code == 10 and lines[0] == "ODD-HOLE 7"
    assert "splits=1" in lines[1]
    code, out, _ = run(["check", write(tmp_path, g), "--witness"], capsys)
    assert out.splitlines()[0] == "ODD-HOLE 7: 0 1 2 3 4 5 6"


def test_unverified_note(tmp_path, capsys):
    code, out, _ = run(["check", write(tmp_path, cycle_graph(6)), "--no-verify-input"], capsys)
    assert code == 0 and "not verified" in out


def test_dimacs_is_one_based(tmp_path, capsys):
    code, out, _ = run(["check", write(tmp_path, cycle_graph(5), "g.col"), "--machine"], capsys)
    assert code == 10 and out == "ODD-HOLE 5: 1 2 3 4 5\n"


def _independent_check(path, line):
    # re-read the file with networkx and check the listed vertices form an odd hole
    h = nx.read_graph6(path)
    vs = [int(t) for t in line.split(":")[1].split()]
    k = len(vs)
    assert k % 2 == 1 and k >= 5 and len(set(vs)) == k
    sub = h.subgraph(vs)
    assert sub.number_of_edges() == k
    assert all(h.has_edge(vs[i], vs[(i + 1) % k]) for i in range(k))


@pytest.mark.parametrize(
    "g",
    [
        petersen_graph(),
        add_vertex(cycle_graph(9), [0, 1, 2]),
        substitute(substitute(cycle_graph(7), 3, complete_graph(2)), 0, cycle_graph(4)),
    ],
)
def test_yes_lines_reverify(tmp_path, capsys, g):
    path = write(tmp_path, g)
    code, out, _ = run(["check", path, "--machine"], capsys)
    assert code == 10 and LINE.match(out.strip())
    _independent_check(path, out.strip())


def test_oracle_command(tmp_path, capsys):
    code, out, _ = run(["oracle", write(tmp_path, cycle_graph(9))], capsys)
    assert code == 10 and out.startswith("ODD-HOLE 9:")
    code, out, _ = run(["oracle", write(tmp_path, cycle_graph(8))], capsys)
    assert code == 0
    code, _, err = run(["oracle", write(tmp_path, cycle_graph(17))], capsys)
    assert code == 4 and "CAP" in err
    code, _, _ = run(["oracle", write(tmp_path, cycle_graph(17)), "--cap", "17"], capsys)
    assert code == 10


@pytest.mark.parametrize("content", ["A@?\n", "@\n@\n", "c only a comment\n", "D\n"])
def test_parse_errors(tmp_path, capsys, content):
    path = tmp_path / "bad.g6"
    path.write_text(content)
    code, _, err = run(["check", str(path)], capsys)
    assert code == 3 and "PARSE-ERROR" in err


def test_missing_file(tmp_path, capsys):
    code, _, _ = run(["check", str(tmp_path / "nope.g6")], capsys)
    assert code == 3


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["check"])
    assert err.value.code == 64


def test_gen_then_validate(tmp_path, capsys):
    for kind, extra in [
        ("bullfree", []),
        ("planted", ["--k", "7"]),
        ("jewel", []),
        ("pyramid", []),
        ("er", ["--density", "0.3"]),
    ]:
        out = tmp_path / f"{kind}.txt"
        code, _, _ = run(["gen", kind, "--seed", "5", "--n", "11", "--count", "25", "--out", str(out), *extra], capsys)
        assert code == 0
        text = out.read_text().splitlines()
        assert text[0].startswith(f"c gen kind={kind}") and len(text) == 26
        code, report, _ = run(["validate", str(out)], capsys)
        assert code == 0, report
        assert "PASS oracle-equivalence" in report


def test_gen_reproducible(capsys):
    _, first, _ = run(["gen", "bullfree", "--seed", "9", "--n", "12", "--count", "3"], capsys)
    _, second, _ = run(["gen", "bullfree", "--seed", "9", "--n", "12", "--count", "3"], capsys)
    assert first == second


def test_gen_bad_options(capsys):
    code, _, _ = run(["gen", "planted", "--seed", "1", "--n", "9", "--k", "6"], capsys)
    assert code == 64
    code, _, _ = run(["gen", "pyramid", "--seed", "1", "--n", "9", "--path-lengths", "1,1,2"], capsys)
    assert code == 64


def test_validate_reports_refutation(tmp_path, capsys):
    # C7 has no bull, C5 or anchor, so passing it off as a pyramid must fail
    path = tmp_path / "fake.txt"
    path.write_text("c gen kind=pyramid\n" + write_graph6(cycle_graph(7)) + "\n")
    code, report, _ = run(["validate", str(path)], capsys)
    assert code == 5 and "FAIL patterns" in report


def test_bench(capsys):
    code, out, _ = run(["bench", "--sizes", "20,40", "--trials", "2"], capsys)
    assert code == 0
    assert "slope" in out


def test_module_entry_point(tmp_path):
    path = write(tmp_path, cycle_graph(7))
    proc = subprocess.run([sys.executable, "-m", "oddhole", "check", path, "--machine"], capture_output=True, text=True)
    assert proc.returncode == 10 and proc.stdout.startswith("ODD-HOLE 7:")
