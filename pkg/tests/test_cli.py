import json

import pytest

from permutoria.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestCount:
    def test_da_catalan(self, capsys):
        code, out = run(capsys, "count", "--da", "--patterns", "2413", "--n", "10")
        assert code == 0 and out.strip() == "10\t42"

    def test_upto_json(self, capsys):
        code, out = run(
            capsys, "count", "--patterns", "123", "--n", "5", "--upto", "--format", "json"
        )
        assert code == 0
        assert json.loads(out) == {"0": 1, "1": 1, "2": 2, "3": 5, "4": 14, "5": 42}

    def test_extended_cell(self, capsys):
        code, out = run(capsys, "count", "--patterns", "123", "--dcr", "1,1,0")
        assert code == 0 and out.strip() == "1,1,0\t2"


class TestSeries:
    def test_formula_equals_brute(self, capsys):
        args = ["--orders", "5,3,3", "--total", "6"]
        _, formula = run(
            capsys, "series", "--formula", "c(x)/((1-y*c(x))*(1-z*c(x)))", *args
        )
        _, brute = run(capsys, "series", "--brute", "--patterns", "132", *args)
        assert formula == brute

    def test_deterministic(self, capsys):
        _, a = run(capsys, "series", "--formula", "1/(1-x)", "--orders", "4,0,0")
        _, b = run(capsys, "series", "--formula", "1/(1-x)", "--orders", "4,0,0")
        assert a == b


class TestDiscover:
    def test_json_output(self, capsys):
        code, out = run(
            capsys, "discover", "--patterns", "213,4123", "--rule", "standard",
            "--depth", "7",
        )
        assert code == 0
        graph = json.loads(out)
        assert len(graph["classes"]) == 3 and graph["root"] == 0

    def test_dot_output(self, capsys):
        code, out = run(
            capsys, "discover", "--patterns", "132", "--depth", "5", "--format", "dot"
        )
        assert code == 0 and out.startswith("digraph") and "style=dashed" in out


class TestBiject:
    def test_theta_rows(self, capsys):
        code, out = run(capsys, "biject", "--name", "theta", "--n", "4")
        lines = [l for l in out.splitlines() if l]
        assert code == 0 and len(lines) == 2
        assert lines[0].split("\t")[1] in ("UDUD", "UUDD")

    def test_phi(self, capsys):
        code, out = run(capsys, "biject", "--name", "phi", "--n", "2")
        assert code == 0
        assert dict(l.split("\t") for l in out.splitlines() if l) == {
            "1,2": "1,3,2,4",
            "2,1": "3,4,1,2",
        } or len(out.splitlines()) == 2


class TestTableau:
    BLOB = json.dumps(
        {
            "outer": [2, 2],
            "inner": [1],
            "boxShape": [2, 2],
            "boxCompanion": [3, 2],
            "rows": [[2], [1, 3]],
        }
    )

    def test_jdt(self, capsys):
        code, out = run(capsys, "tableau", "--op", "jdt", "--input", self.BLOB)
        assert code == 0
        assert json.loads(out)["rows"] == [[1, 2], [3]]

    def test_recording_matrix(self, capsys):
        code, out = run(capsys, "tableau", "--op", "rec", "--input", self.BLOB)
        assert code == 0
        assert json.loads(out) == [[0, 1, 0], [1, 0, 1]]


class TestVerify:
    def test_pass_suite_exits_zero(self, capsys):
        code, out = run(capsys, "verify", "P1-prop7.2")
        assert code == 0 and "failed" in out

    def test_json_format(self, capsys):
        code, out = run(capsys, "verify", "P1-prop7.2", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["suite"] == "P1-prop7.2" and report["failed"] == 0

    def test_conjecture_suite_never_fails_exit(self, capsys):
        code, out = run(capsys, "verify", "P1-8.3")
        assert code == 0

    def test_unknown_suite(self):
        with pytest.raises(KeyError):
            main(["verify", "no-such-suite"])


def test_version(capsys):
    code = main(["--version"])
    out = capsys.readouterr().out
    assert code == 0 and "permutoria" in out
