import json

import pytest

from freeknot.cli import main
from freeknot.gauss import parse_diagram

D7 = "long: A E B F A G B C E D F D G C"


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_inv_kink(capsys, write):
    code, out, _ = run(capsys, "inv", "--json", write("k", "long: X X\n"))
    d = json.loads(out)
    assert code == 0
    assert (d["l"], d["phi_nf"], d["psi_nf"]) == (0, "1", "1")


def test_inv_d7(capsys, write):
    code, out, _ = run(capsys, "inv", write("d7", D7 + "\n"))
    assert code == 0
    assert "l       = 8" in out
    assert "phi     = b a b a b a b b' a b' a b' a b'" in out
    assert "psi     = b a b a b a b b'^-1 a b'^-1 a b'^-1 a b'^-1" in out
    assert "not slice" in out


def test_inv_closed_json(capsys, write):
    code, out, _ = run(capsys, "inv", "--json", write("c", "# closure\nclosed: A E B F A G B C E D F D G C\n"))
    d = json.loads(out)
    assert code == 0 and d["abs_l"] == 8 and d["slice"] == "not slice"


def test_inv_empty_file(capsys, write):
    assert run(capsys, "inv", write("e", "")) == (0, "", "")


def test_inv_parse_error_names_line(capsys, write):
    code, _, err = run(capsys, "inv", write("bad", "long: A A\nlong: A B\n"))
    assert code == 2 and "line 2" in err


def test_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("long: Q Q\n"))
    code, out, _ = run(capsys, "parse", "-")
    assert code == 0 and out.strip() == "long: A A"


def test_parse_json(capsys, write):
    code, out, _ = run(capsys, "parse", "--json", write("p", "closed: A B A B\n"))
    assert json.loads(out)["pairs"] == [[1, 3], [2, 4]]


def test_classify_tsv(capsys, write):
    code, out, _ = run(capsys, "classify", "--tsv", write("d7", D7))
    rows = [line.split("\t") for line in out.strip().splitlines()]
    assert rows[0] == ["diagram", "label", "first", "second", "parity", "type", "sort", "letter"]
    by_label = {r[1]: r for r in rows[1:]}
    assert by_label["C"][4:] == ["odd", "type2", "sort1", "b'"]
    assert by_label["E"][4:] == ["even", "-", "-", "a"]


def test_walk_pass(capsys, write):
    code, out, _ = run(capsys, "walk", "--steps", "30", "--trials", "5", "--seed", "1", "--max-chords", "12", write("d7", D7))
    assert code == 0 and out.startswith("PASS")


def test_walk_reproducible(capsys, write):
    f = write("c", "long: A B A B\nlong: A B C A B C\n" + D7 + "\n")
    a = run(capsys, "walk", "--json", "--steps", "15", "--trials", "3", "--seed", "7", f)
    b = run(capsys, "walk", "--json", "--steps", "15", "--trials", "3", "--seed", "7", f)
    assert a == b and a[0] == 0


def test_walk_reports_counterexample(capsys, write, monkeypatch):
    from freeknot import moves

    from .test_harness import corrupt_apply

    monkeypatch.setattr(moves, "apply_move", corrupt_apply)
    code, out, _ = run(capsys, "walk", "--json", "--steps", "10", "--trials", "2", write("d7", D7))
    d = json.loads(out)
    assert code == 1 and not d["ok"]
    ce = d["counterexample"]
    assert set(ce) >= {"before", "after", "move", "values_before", "values_after"}


def test_walk_bad_corpus(capsys, write):
    assert run(capsys, "walk", write("bad", "long: A"))[0] == 2


def test_distinguish(capsys, write):
    d7, empty = write("a", D7), write("b", "long:")
    code, out, _ = run(capsys, "distinguish", d7, empty)
    assert code == 0 and "distinguished by l: 8 vs 0" in out
    assert run(capsys, "distinguish", d7, d7)[0] == 1
    t, e = write("t", "closed: A B C A B C"), write("e", "closed:")
    assert run(capsys, "distinguish", t, e)[0] == 1
    assert run(capsys, "distinguish", write("two", "long:\nlong: A A"), d7)[0] == 2


def test_search(capsys, write):
    code, out, _ = run(capsys, "search", "--json", write("d2", "closed: A B A B"))
    d = json.loads(out)
    assert code == 0 and d["status"] == "trivialized" and len(d["moves"]) == 1
    code, out, _ = run(capsys, "search", "--budget", "200", "--max-chords", "9", write("d7", D7))
    assert code == 0 and not out.startswith("trivialized")
    assert run(capsys, "search", "--budget", "0", write("d7b", D7))[0] == 2


@pytest.mark.parametrize(
    "group, word, expected",
    [("g", "b b", "1"), ("gp", "b b", "b^2"), ("gp", "a b a", "b'^-1")],
)
def test_reduce(capsys, group, word, expected):
    code, out, _ = run(capsys, "reduce", "--group", group, word)
    _, ref, _ = run(capsys, "reduce", "--group", group, expected)
    assert code == 0 and out == ref
    if expected != "b'^-1":
        assert out.strip() == expected


def test_reduce_errors(capsys):
    assert run(capsys, "reduce", "--group", "h", "a")[0] == 2
    assert run(capsys, "reduce", "--group", "g", "a c")[0] == 2


def test_sum(capsys, write):
    code, out, _ = run(capsys, "sum", write("x", "long: X X"), write("y", "long: X X"))
    assert code == 0 and out.strip() == "long: A A B B"
    assert run(capsys, "sum", write("c", "closed: X X"), write("y2", "long: X X"))[0] == 2


def test_gen_reproducible(capsys):
    a = run(capsys, "gen", "--count", "20", "--seed", "3", "--max-chords", "6")
    b = run(capsys, "gen", "--count", "20", "--seed", "3", "--max-chords", "6")
    assert a == b
    lines = a[1].strip().splitlines()
    assert len(lines) == 20 and all(parse_diagram(s).n <= 6 for s in lines)


def test_usage_error(capsys):
    assert main(["nonsense"]) == 2
