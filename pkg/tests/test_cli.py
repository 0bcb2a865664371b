import json
import subprocess
import sys
from fractions import Fraction

import pytest

from superjordan.cli import main, parse_input
from superjordan.errors import ParseError
from superjordan.exactmath import Mat

U23 = "dim 2 / X1: 0 1 ; 0 0 / X2: 2 3 ; 0 2\n"
SUM = """# two blocks with T-eigenvalues 1 and 4
dim 4
X1: 0 1 0 0 ; 0 0 0 0 ; 0 0 0 1 ; 0 0 0 0
X2: 1 0 0 0 ; 0 1 0 0 ; 0 0 2 0 ; 0 0 0 2
"""


@pytest.fixture
def write(tmp_path):
    def _write(text, name="in.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestParse:
    def test_one_line_document(self):
        doc = parse_input(U23)
        assert doc.dim == 2
        assert doc.X2 == Mat([[2, 3], [0, 2]])

    def test_dim1(self):
        doc = parse_input("dim 1 / X1: 0 / X2: 5")
        assert doc.X2 == Mat([[5]])

    def test_fractions_and_comments(self):
        doc = parse_input("dim 2  # size\nX1: 0 1 ; 0 0\nX2: 1/2 -3/4 ; 0 1/2\n")
        assert doc.X2[0, 0] == Fraction(1, 2) and doc.X2[0, 1] == Fraction(-3, 4)

    def test_missing_x1(self):
        with pytest.raises(ParseError):
            parse_input("X2: 1 2")
        with pytest.raises(ParseError, match="missing X1"):
            parse_input("dim 1\nX2: 1")

    def test_bad_entry_position(self):
        with pytest.raises(ParseError) as info:
            parse_input("dim 2\nX1: 0 1 ; 0 0\nX2: 1 0 ; 1 1x\n")
        assert info.value.line == 3 and info.value.column == 14

    def test_row_length(self):
        with pytest.raises(ParseError, match="row 2 has 1 entries"):
            parse_input("dim 2\nX1: 0 1 ; 0\nX2: 0 0 ; 0 0")

    def test_dimension_zero(self):
        with pytest.raises(ParseError):
            parse_input("dim 0\nX1:\nX2:")

    def test_unknown_line(self):
        with pytest.raises(ParseError) as info:
            parse_input("dim 1\nX3: 1\n")
        assert info.value.line == 2


class TestCommands:
    def test_classify(self, write, capsys):
        code, out, _ = run(["classify", write(U23)], capsys)
        assert code == 0 and "verdict: Dim2U(2,3)" in out

    def test_nf(self, capsys):
        code, out, _ = run(["nf", "x2 x1"], capsys)
        assert code == 0 and "verdict: +1·x21 − 1·x1·x2" in out

    def test_decompose(self, write, capsys):
        code, out, _ = run(["--json", "decompose", write(SUM)], capsys)
        data = json.loads(out)
        assert code == 0
        assert data["payload"]["dims"] == [2, 2]
        assert [s["T_eigenvalue"] for s in data["payload"]["summands"]] == ["1", "4"]

    def test_check_invalid(self, write, capsys):
        code, out, _ = run(["check", write("dim 2\nX1: 0 1 ; 0 0\nX2: 1 0 ; 1 1")], capsys)
        assert code == 1 and "relation violated" in out

    def test_check_valid(self, write, capsys):
        code, out, _ = run(["check", write(U23)], capsys)
        assert code == 0 and "verdict: valid" in out

    def test_iso(self, write, capsys):
        a = write("dim 3 / X1: 0 1 0 ; 0 0 0 ; 0 0 0 / X2: 1 0 2 ; 0 1 0 ; 0 3 1", "a.txt")
        b = write("dim 3 / X1: 0 1 0 ; 0 0 0 ; 0 0 0 / X2: 1 0 6 ; 0 1 0 ; 0 1 1", "b.txt")
        c = write("dim 3 / X1: 0 1 0 ; 0 0 0 ; 0 0 0 / X2: 1 0 5 ; 0 1 0 ; 0 1 1", "c.txt")
        code, out, _ = run(["iso", a, b], capsys)
        assert code == 0 and "verdict: isomorphic" in out
        code, out, _ = run(["iso", a, c], capsys)
        assert code == 0 and "verdict: not isomorphic" in out

    def test_construct_round_trip(self, write, capsys):
        code, out, _ = run(["--json", "construct", "FamV(-1/2,5)"], capsys)
        data = json.loads(out)
        assert code == 0 and data["verdict"] == "FamV(-1/2,5)"
        code, out, _ = run(["check", write(data["payload"]["document"])], capsys)
        assert code == 0

    def test_construct_constraint(self, capsys):
        code, _, err = run(["construct", "Dim2V(0)"], capsys)
        assert code == 2 and "constraint violation" in err

    def test_errors_named(self, write, capsys):
        code, _, err = run(["classify", write("dim 2\nX1: 0 1 ; 0 0\nX2: 1 0 ; 1 1")], capsys)
        assert code == 2 and err.startswith("error: relation violated")
        code, _, err = run(["classify", write("dim 2\nX1: 0 0 ; 0 0\nX2: 0 2 ; 1 0")], capsys)
        assert code == 2 and "nonsplit spectrum" in err
        code, _, err = run(["classify", write("dim 4\nX1: 0 1 0 0 ; 0 0 0 0 ; 0 0 0 0 ; 0 0 0 0\n"
                                               "X2: 1 0 0 0 ; 0 1 0 0 ; 0 0 1 0 ; 0 0 0 1")], capsys)
        assert code == 2 and "dimension unsupported" in err
        code, out, err = run(["--json", "nf", "x1 y"], capsys)
        assert code == 2 and json.loads(out)["error"] == "parse error"

    def test_selftest(self, capsys):
        code, out, _ = run(["selftest", "--bmax", "3", "--cmax", "3", "--nmax", "4", "--samples", "9"], capsys)
        assert code == 0 and "verdict: pass" in out

    def test_json_flag_after_subcommand(self, capsys):
        code, out, _ = run(["nf", "x1 x1", "--json"], capsys)
        assert code == 0 and json.loads(out)["verdict"] == "0"

    def test_deterministic_output(self, write):
        path = write(SUM)
        outs = {subprocess.run([sys.executable, "-m", "superjordan", "--json", "decompose", path],
                               capture_output=True, check=True).stdout for _ in range(2)}
        assert len(outs) == 1

    def test_stdin(self, monkeypatch, capsys):
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(U23))
        code, out, _ = run(["classify", "-"], capsys)
        assert code == 0 and "Dim2U(2,3)" in out
