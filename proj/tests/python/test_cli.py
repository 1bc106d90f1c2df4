import json
import subprocess


def run(cli, *args):
    return subprocess.run([cli, *map(str, args)], capture_output=True, text=True)


def test_json_report_is_deterministic(cli, fixtures):
    a = run(cli, "--json", "--seed", "3", "gorenstein", fixtures / "Adoubleprime.alg")
    b = run(cli, "--json", "--seed", "3", "gorenstein", fixtures / "Adoubleprime.alg")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    assert json.loads(a.stdout)["result"]["gdim"] == 1


def test_exit_codes(cli, fixtures):
    assert run(cli, "resolve", fixtures / "A.alg", "--simple", "2").returncode == 0
    assert run(cli, "--bound", "1", "resolve", fixtures / "A.alg", "--simple", "1").returncode == 1
    assert run(cli, "check", fixtures / "nope.alg").returncode == 2
    assert run(cli, "--field", "4", "check", fixtures / "A.alg").returncode == 2
    assert run(cli, "resolve", fixtures / "A.alg", "--simple", "1", "--injective", "1").returncode == 2
    assert run(cli, "frobnicate").returncode == 2


def test_text_output(cli, fixtures):
    r = run(cli, "triangular", "--lower", fixtures / "K.alg", fixtures / "dualnum.alg",
            fixtures / "Adoubleprime_N.bim", "--reference", fixtures / "Adoubleprime.alg")
    assert r.returncode == 0
    assert "Gorenstein" in r.stdout


def test_verify_round_trip(cli, fixtures, tmp_path):
    r = run(cli, "--json", "resolve", fixtures / "dualnum.alg", "--simple", "1", "--bound", "3")
    saved = tmp_path / "r.json"
    saved.write_text(r.stdout)
    v = run(cli, "--json", "verify", saved)
    assert v.returncode == 0, v.stdout
    report = json.loads(r.stdout)
    report["result"]["proj_dim"]["certificate"]["map"]["entries"] = [["0"]]
    saved.write_text(json.dumps(report))
    assert run(cli, "verify", saved).returncode == 3
