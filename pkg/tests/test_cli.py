import json

from torusorders.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "--monodromy", "xy")
    assert code == 0
    lines = out.splitlines()
    assert "trace 3" in lines and "hyperbolic true" in lines and "untwisted true" in lines
    assert "D 5" in lines
    assert "lambda (3 + 1*sqrt(5))/2" in lines
    assert "e_lambda ((1 + 0*sqrt(5))/1, (-1 + 1*sqrt(5))/2)" in lines


def test_info_rejected_monodromy(capsys):
    code, out, _ = run(capsys, "info", "--monodromy", "x")
    assert code == 0 and "accepted false" in out


def test_sign(capsys):
    assert run(capsys, "sign", "--order", "nonstandard", "--word", "[a,b]")[1] == "Positive\n"
    assert run(capsys, "sign", "--order", "standard", "--word", "[a,b]")[1] == "Negative\n"
    out = run(capsys, "sign", "--word", "[b,A]^-1 [a,b]^2", "--explain")[1]
    assert out == "Positive\nbranch Q2\n"
    assert run(capsys, "sign", "--word", "abAB", "--tau-power", "-2")[1] == "Negative\n"


def test_compare(capsys):
    out = run(capsys, "compare", "--left", "[a,b]^-1 [b,A]^2", "--right", "[a,b]^2 [b,A]^-1")[1]
    assert out == "Less\n"


def test_magnus(capsys):
    code, out, _ = run(capsys, "magnus", "--word", "abAB", "--cap", "2")
    assert code == 0
    assert out.splitlines() == ["depth 2", "leading +1*xy -1*yx", "1 1", "xy 1", "yx -1"]
    out = run(capsys, "magnus", "--word", "[[a,b],a]", "--cap", "2")[1]
    assert out.splitlines()[0] == "depth >=3"


def test_p2(capsys):
    code, out, _ = run(capsys, "p2", "--word", "abAB abAB (bABa)^-1")
    assert code == 0
    assert out.splitlines() == ["-1 0 -1", "0 0 2", "winding_total 1"]
    code, _, err = run(capsys, "p2", "--word", "ab")
    assert code == 2 and "NotInCommutatorSubgroup" in err


def test_usage_errors(capsys):
    assert run(capsys, "sign", "--word", "a^")[0] == 2
    assert run(capsys, "sign")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "sign", "--word", "a", "--monodromy", "xY")[0] == 2
    assert run(capsys, "verify", "--suite", "convexity", "--selector", "G9")[0] == 2


def test_cap_exceeded_exit_code(capsys):
    code, _, err = run(capsys, "sign", "--order", "standard", "--word", "[[[a,b],a],b]",
                       "--magnus-cap", "2", "--hard-cap", "3")
    assert code == 3 and "cap" in err


def test_config_file_and_precedence(tmp_path, capsys):
    cfg = tmp_path / "o.cfg"
    cfg.write_text("kind = standard\n")
    assert run(capsys, "sign", "--config", str(cfg), "--word", "[a,b]")[1] == "Negative\n"
    out = run(capsys, "sign", "--config", str(cfg), "--order", "nonstandard", "--word", "[a,b]")[1]
    assert out == "Positive\n"
    assert run(capsys, "sign", "--config", str(tmp_path / "missing.cfg"), "--word", "a")[0] == 2


def test_verify_pass_and_report(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--suite", "cone_axioms", "--samples", "20",
                       "--seed", "42", "--report", str(path))
    assert code == 0 and out.startswith("PASS cone_axioms")
    doc = json.loads(path.read_text())
    assert doc["passed"] and doc["samples"] == 20 and doc["seed"] == 42


def test_verify_failure_exit(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "convexity", "--selector", "G3",
                       "--samples", "3", "--report", "-", "--no-timing")
    assert code == 1
    doc = json.loads(out)
    assert doc["failures"][0]["index"] == -1 and doc["elapsed_ms"] == 0


def test_verify_mutant(capsys):
    code = run(capsys, "verify", "--suite", "cover_laws", "--samples", "5", "--mutant",
               "shift_p2")[0]
    assert code == 1


def test_verify_output_is_stable(tmp_path, capsys):
    docs = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        run(capsys, "verify", "--suite", "chain_Cgamma", "--samples", "10", "--seed", "5",
            "--cells", "0,0;2,1", "--report", str(path), "--no-timing")
        docs.append(path.read_bytes())
    assert docs[0] == docs[1]
    assert json.loads(docs[0])["config"]["cells"] == [[0, 0], [2, 1]]


def test_witnesses(capsys, tmp_path):
    code, out, _ = run(capsys, "witnesses", "--report", str(tmp_path / "w.json"))
    assert code == 0
    assert out.splitlines()[:2] == ["y abABabABAbaB Positive", "z baBAbABabABa Negative"]
    assert json.loads((tmp_path / "w.json").read_text())["passed"]
    assert run(capsys, "witnesses", "--order", "standard")[0] == 2
