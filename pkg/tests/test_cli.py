import subprocess
import sys

import pytest

from hypertrans import gen_E, gen_T, make_shannon, parse_hypergraph, parse_multigraph
from hypertrans.cli import main, run as run_cli


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", __import__("io").StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def gen_text(capsys, monkeypatch, *argv):
    code, out, _ = run(capsys, monkeypatch, ["gen", *argv])
    assert code == 0
    return out


def test_pipeline_through_a_real_shell():
    cmd = f"{sys.executable} -m hypertrans.cli"
    out = subprocess.run(f"{cmd} gen tk -k 5 | {cmd} tau -", shell=True, capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.splitlines()[0] == "2"
    out = subprocess.run(f"{cmd} gen ek -k 4 | {cmd} bound - -k 4", shell=True, capture_output=True, text=True)
    assert out.stdout.strip() == "1/1 equality=true"


def test_tau_prints_value_and_witness(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["tau", "-"], gen_text(capsys, monkeypatch, "tk", "-k", "4"))
    assert code == 0 and out == "2\n0 2\n"


def test_bound_strict_case(capsys, monkeypatch, tmp_path):
    f = tmp_path / "p4.txt"
    f.write_text("2 4 3\n0 1\n1 2\n2 3\n")
    code, out, _ = run(capsys, monkeypatch, ["bound", str(f), "-k", "2"])
    assert code == 0 and out == "7/3 equality=false\n"


def test_classify(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["classify", "-", "-k", "5"], gen_text(capsys, monkeypatch, "tk", "-k", "5"))
    assert code == 0 and out.startswith("IsTk tau=2 bound=2/1 map=")
    assert out.splitlines()[1].startswith("witness ")
    code, out, _ = run(capsys, monkeypatch, ["classify", "-", "-k", "3"], gen_text(capsys, monkeypatch, "tk", "-k", "3"))
    assert code == 0 and out.startswith("OutOfTheoremScope")


def test_reduce_writes_multigraph_and_witness_map(capsys, monkeypatch, tmp_path):
    text = gen_text(capsys, monkeypatch, "tk", "-k", "4")
    code, out, _ = run(capsys, monkeypatch, ["reduce", "-", "-k", "4"], text)
    assert code == 0
    assert parse_multigraph(out) == make_shannon(4)
    assert "# 0 : 0" in out
    wit = tmp_path / "w.txt"
    code, out, _ = run(capsys, monkeypatch, ["reduce", "-", "-k", "4", "--witness", str(wit)], text)
    assert "#" not in out
    assert wit.read_text().splitlines() == [f"{i} : {i}" for i in range(6)]


def test_color_and_match(capsys, monkeypatch):
    text = gen_text(capsys, monkeypatch, "shannon", "-d", "4")
    code, out, _ = run(capsys, monkeypatch, ["color", "-"], text)
    assert code == 0 and out.splitlines()[0] == "colors=6 bound=6 within_bound=true"
    code, out, _ = run(capsys, monkeypatch, ["color", "-", "--exact"], text)
    assert out.splitlines()[0].endswith("chromatic_index=6")
    code, out, _ = run(capsys, monkeypatch, ["match", "-"], text)
    assert code == 0 and out.splitlines()[0] == "size=1"
    code, out, _ = run(capsys, monkeypatch, ["color", "-"], "3 0\n")
    assert code == 0 and out.startswith("colors=0")


@pytest.mark.parametrize("k", range(2, 13))
def test_generators_round_trip_bit_exactly(capsys, monkeypatch, k):
    assert parse_hypergraph(gen_text(capsys, monkeypatch, "ek", "-k", str(k))) == (k, gen_E(k))
    assert parse_hypergraph(gen_text(capsys, monkeypatch, "tk", "-k", str(k))) == (k, gen_T(k))
    assert parse_multigraph(gen_text(capsys, monkeypatch, "shannon", "-k", str(k))) == make_shannon(k)


def test_gen_to_file(capsys, monkeypatch, tmp_path):
    f = tmp_path / "t.txt"
    code, out, _ = run(capsys, monkeypatch, ["gen", "tk", "-k", "6", "-o", str(f)])
    assert code == 0 and out == ""
    assert parse_hypergraph(f.read_text()) == (6, gen_T(6))


def test_verify_trailer_and_exit_code(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["verify", "t2", "-d", "4", "--vmax", "3", "--mmax", "6"])
    assert code == 0
    assert out.splitlines()[-1] == "#RESULT instances=13 violations=0 equality=1 truncated=0"
    code, out, _ = run(capsys, monkeypatch, ["verify", "t1", "-k", "4", "--nmax", "8", "--mmax", "3", "--multi", "2"])
    assert code == 0 and "violations=0 equality=2" in out
    code, out, _ = run(capsys, monkeypatch, ["verify", "vizing", "-d", "2", "--vmax", "5", "--mmax", "5"])
    assert code == 0 and "expected" in out


def test_verify_budget_marks_truncation(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["verify", "t1", "-k", "2", "--nmax", "9", "--mmax", "36",
                                             "--budget", "0"])
    assert code == 0 and out.rstrip().endswith("truncated=1")


def test_verify_finding_exits_one(capsys, monkeypatch):
    from hypertrans.verify import sweeps

    real = sweeps.min_transversal_mask
    monkeypatch.setattr(sweeps, "min_transversal_mask",
                        lambda masks, upper=None: real(masks, upper) | (1 << 40))
    code, out, _ = run(capsys, monkeypatch, ["verify", "t1", "-k", "2", "--nmax", "3", "--mmax", "3", "--exact"])
    assert code == 1 and "violations=0" not in out


def test_progress_goes_to_stderr(capsys, monkeypatch):
    from hypertrans.verify import sweeps

    monkeypatch.setattr(sweeps, "PROGRESS_EVERY", 10)
    code, out, err = run(capsys, monkeypatch, ["verify", "t1", "-k", "2", "--nmax", "5", "--mmax", "10"])
    assert code == 0 and "# 10 instances" in err and "# 10 instances" not in out


@pytest.mark.parametrize("argv, stdin, fragment", [
    (["tau", "-"], "2 3 1\n0 5\n", "-:2:3: vertex 5 out of range"),
    (["tau", "-"], "2 3 2\n0 1\n", "-:3:1: expected 2 edge lines"),
    (["match", "-"], "3 1\n1 0 1\n", "-:2:3: pair must satisfy u < v"),
    (["tau", "/nonexistent/file"], None, "No such file"),
    (["bound", "-", "-k", "3"], "2 3 1\n0 1\n", "not 3-uniform"),
    (["gen", "tk"], None, "needs -k"),
    (["verify", "t1", "-k", "3", "--nmax", "4", "--mmax", "2"], None, "k = 2 or k >= 4"),
    (["verify", "t2", "-d", "4"], None, "needs -d, --vmax and --mmax"),
])
def test_input_errors_exit_two(capsys, monkeypatch, argv, stdin, fragment):
    code, out, err = run(capsys, monkeypatch, argv, stdin)
    assert code == 2 and fragment in err and out == ""


def test_in_process_runner():
    code, out, err = run_cli(["tau", "-"], "2 3 2\n0 1\n1 2\n")
    assert (code, out, err) == (0, "1\n1\n", "")
    code, out, err = run_cli(["tau", "-"], "2 3 1\n0\n")
    assert code == 2 and out == "" and err.startswith("error: -:2:")


def test_usage_errors_exit_two(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["frobnicate"])[0] == 2
    assert run(capsys, monkeypatch, ["--help"])[0] == 0
