import contextlib
import io
import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wittghost.cli import main
from wittghost.quad import quad


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None), out


@pytest.fixture
def cli(monkeypatch, capsys):
    def call(argv, stdin=""):
        return run(argv, stdin, monkeypatch, capsys)

    return call


def u_power_doc(n=81):
    u, x, vals = quad(1, 1, 2), quad(1, 0, 2), []
    for _ in range(n):
        x = x * u
        vals.append([str(x.a), str(x.b)])
    return json.dumps({"quad": {"D": "2", "ghost": vals}})


def test_ghost_of_lucas_exponents(cli, tmp_path):
    path = tmp_path / "fib.json"
    path.write_text(json.dumps({"euler": {"1": "1", "2": "1", "3": "1", "4": "1", "5": "2", "6": "2", "7": "4", "8": "5"}}))
    code, doc, _ = cli(["ghost", "--in", str(path), "--order", "8"])
    assert code == 0 and doc["ghost"] == ["1", "3", "4", "7", "11", "18", "29", "47"]


def test_ghost_of_one_is_zero(cli):
    code, doc, _ = cli(["ghost", "--order", "5"], '{"coeffs": ["1"]}')
    assert code == 0 and doc["ghost"] == ["0"] * 5


def test_euler_of_constant_ghost(cli):
    code, doc, _ = cli(["euler"], json.dumps({"ghost": ["-1"] * 10}))
    assert code == 0 and doc["euler"] == {"1": "-1"} and doc["order"] == "10"


def test_check_verdicts(cli):
    code, doc, _ = cli(["check", "dold-plus", "--order", "16"], '{"euler": {"2": "-1"}}')
    assert code == 1
    w = doc["witnesses"][0]
    assert (w["p"], w["a"], w["m"]) == ("2", "1", "1")
    doubling = json.dumps({"ghost": [str(-(2**n - 1)) for n in range(1, 33)]})
    assert cli(["check", "dold"], doubling)[0] == 0
    assert cli(["check", "gauss"], doubling)[0] == 0
    halves = json.dumps({"ghost": [str(int(n % 2 == 0)) for n in range(1, 21)]})
    assert cli(["check", "s-integral", "--bad-primes", "2"], halves)[0] == 0
    assert cli(["check", "s-integral"], halves)[0] == 1


def test_quadratic_checks(cli):
    code, doc, _ = cli(["check", "norm-tower", "--D", "2", "--prime", "3"], u_power_doc())
    assert code == 0 and doc["verdict"] == "pass"
    assert cli(["check", "norm-tower", "--D", "2", "--prime", "7"], u_power_doc())[0] == 0
    assert cli(["check", "norm-tower", "--D", "2", "--prime", "2"], u_power_doc())[0] == 4
    code, doc, _ = cli(["check", "ideal-dold", "--bound", "50"], u_power_doc())
    assert code == 0 and doc["skipped"]


def test_recip(cli):
    code, doc, _ = cli(["recip", "--poly", "1,-1,-1", "--order", "8"])
    assert code == 0
    assert doc["ghost"] == ["1", "3", "4", "7", "11", "18", "29", "47"]
    assert [doc["necklace"][str(n)] for n in range(1, 9)] == ["1", "1", "1", "1", "2", "2", "4", "5"]
    assert doc["realizability"] == "exact"
    assert cli(["recip", "--poly", "2,1"])[0] == 3


def test_descend(cli):
    code, doc, _ = cli(["descend", "--D", "5", "--euler", '{"2": [0, 1]}', "--order", "12"])
    assert code == 0
    assert doc["u"] == ["0", "-20"] * 6
    assert doc["cZ"] == {"1": "0", "2": "-10"}


def test_zeta(cli):
    code, doc, _ = cli(["zeta", "doubling", "--order", "8"])
    assert code == 0 and doc["coeffs"] == ["1", "1", "2", "4", "8", "16", "32", "64", "128"]
    code, doc, _ = cli(["zeta", "sft", "--matrix", "[[1, 1], [1, 0]]", "--order", "6"])
    assert doc["coeffs"] == ["1", "1", "2", "3", "5", "8", "13"]
    code, doc, _ = cli(["zeta", "toral", "--matrix", "[[2, 1], [1, 1]]", "--order", "5"])
    assert doc["fix"] == ["1", "5", "16", "45", "121"]
    assert cli(["zeta", "toral", "--matrix", "[[1, 0], [0, 1]]"])[0] == 3
    code, doc, _ = cli(["zeta", "fix"], '{"fix": ["1", "1", "1"]}')
    assert doc["coeffs"] == ["1", "1", "1", "1"]


def test_cyclo(cli):
    code, doc, _ = cli(["cyclo", "build", "--order", "6"], '{"cyclo": {"2": "1"}}')
    assert code == 0 and doc["coeffs"] == ["1", "1", "0", "0", "0", "0", "0"]
    ghost = json.dumps({"ghost": [str(-36 if n % 6 == 0 else 0) for n in range(1, 25)]})
    code, doc, _ = cli(["cyclo", "fit", "--period", "6"], ghost)
    assert code == 0 and doc["cyclo"] == {"1": "-6", "2": "-6", "3": "-6", "6": "-6"}
    code, doc, _ = cli(["cyclo", "fit", "--period", "4"], json.dumps({"ghost": [str(n) for n in range(1, 13)]}))
    assert code == 1 and doc["verdict"] == "not-cyclotomic"


def test_witt(cli, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    a.write_text('{"coeffs": ["1", "-2"]}')
    b.write_text('{"coeffs": ["1", "-3"]}')
    code, doc, _ = cli(["witt", "mul", str(a), str(b), "--order", "5"])
    assert code == 0 and doc["coeffs"] == ["1", "-6", "0", "0", "0", "0"]
    code, doc, _ = cli(["witt", "hadamard", str(a), str(b), "--order", "3"])
    assert doc["ghost"] == ["6", "36", "216"]


def test_ladder_and_classify(cli):
    fib = '{"coeffs": ["1", "-1", "-1"]}'
    assert cli(["ladder", "--p", "2", "--a", "1"], fib)[0] == 0
    assert cli(["ladder", "--p", "2", "--a", "2"], fib)[0] == 1
    code, doc, _ = cli(["classify", "--order", "24"], '{"residues": [["2", "0", "1"], ["1", "0", "-1"]]}')
    assert doc["class"] == "RationalPreimage"


def test_exit_codes(cli):
    assert cli(["ghost"], '{"coeffs": [1.5]}')[0] == 2
    assert cli(["ghost"], "{not json")[0] == 2
    assert cli(["ghost"], '{"coeffs": ["1"], "ghost": ["1"]}')[0] == 2
    assert cli(["ghost", "--order", "5000"], '{"coeffs": ["1"]}')[0] == 3
    assert cli(["invert"], '{"coeffs": ["0", "1"]}')[0] == 3
    assert cli(["check", "dold"], '{"ghost": ["1/2"]}')[0] == 3
    assert cli(["nonsense"])[0] == 2


def test_default_order_from_environment(cli, monkeypatch):
    monkeypatch.setenv("WG_ORDER", "4")
    code, doc, _ = cli(["invert"], '{"coeffs": ["1", "-1"]}')
    assert doc["order"] == "4" and len(doc["coeffs"]) == 5
    monkeypatch.delenv("WG_ORDER")
    code, doc, _ = cli(["invert"], '{"coeffs": ["1", "-1"]}')
    assert doc["order"] == "64"


def test_output_file(cli, tmp_path):
    out = tmp_path / "out.json"
    code, _, text = cli(["ghost", "--order", "3", "--out", str(out)], '{"coeffs": ["1", "-1"]}')
    assert code == 0 and text == ""
    assert json.loads(out.read_text())["ghost"] == ["1", "1", "1"]


docs = st.one_of(
    st.lists(st.integers(-9, 9), min_size=1, max_size=10).map(lambda xs: {"coeffs": ["1"] + [str(x) for x in xs]}),
    st.dictionaries(st.integers(1, 10).map(str), st.integers(-5, 5).map(str), max_size=4).map(lambda f: {"euler": f}),
    st.lists(st.integers(-9, 9), min_size=1, max_size=10).map(lambda xs: {"ghost": [str(x) for x in xs]}),
)


@given(docs, st.sampled_from(["ghost", "euler", "invert"]))
def test_outputs_reingest_to_identical_bytes(doc, command):
    def once(text):
        buf = io.StringIO()
        old = sys.stdin
        sys.stdin = io.StringIO(text)
        try:
            with contextlib.redirect_stdout(buf):
                assert main([command, "--order", "10"]) == 0
        finally:
            sys.stdin = old
        return buf.getvalue()

    first = once(json.dumps(doc))
    assert once(json.dumps(doc)) == first
    assert once(first) == first


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "wittghost", "zeta", "doubling", "--order", "3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["coeffs"] == ["1", "1", "2", "4"]
