"""Command-line contract: examples, exit codes, determinism, JSON round trip."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1]
failures = []


def run(*args):
    p = subprocess.run([CLI, *args], capture_output=True, text=True)
    return p.returncode, p.stdout


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


rc, out = run("invariants", "--n", "5", "--order", "3", "--format", "json")
table = json.loads(out)
check(rc == 0, "invariants n=5 exits 0")
check([r["N0"] for r in table["rows"]] == ["2875", "4876875/8", "8564575000/27"], "quintic N0 rows")
check([r["n0"] for r in table["rows"]] == ["2875", "609250", "317206375"], "quintic n0 rows")
check(table["rows"][0]["N1"] == "2875/12", "quintic N1 at d=1")
check(json.dumps(json.loads(out), indent=2) + "\n" == out, "JSON round trip is the identity")

rc, out = run("invariants", "--n", "2", "--order", "5", "--format", "json")
check(rc == 0 and all(r["GW1_reduced"] == "0" for r in json.loads(out)["rows"]), "n=2 invariants vanish")

rc, out = run("invariants", "--n", "3", "--order", "6", "--format", "json")
nonzero = [r["d"] for r in json.loads(out)["rows"] if r["GW1_reduced"] != "0"]
check(nonzero == [3, 6], "n=3 invariants only at d=3,6")

rc, out = run("dump", "--what", "mu", "--n", "5", "--order", "2")
check(rc == 0 and "q^1: 625\n" in out and "q^2: 1171875/2\n" in out, "dump mu")
rc, out = run("dump", "--what", "I", "--n", "5", "--order", "2")
check(out == "q^0: 1\nq^1: 120\nq^2: 113400\n", "dump I")
rc, out = run("dump", "--what", "mirror", "--n", "5", "--order", "1")
check("q^1: 770\n" in out, "dump mirror")

rc, out = run("verify", "--suite", "props31", "--n", "5", "--order", "8")
check(rc == 0 and out.count("PASS") == 2 and "FAIL" not in out, "verify props31")
rc, out = run("verify", "--suite", "appendixA", "--order", "8")
check(rc == 0 and out.count("PASS") == 3, "verify appendixA")
rc, out = run("verify", "--suite", "theorem3", "--n", "4", "--order", "8")
check(rc == 0 and "FAIL" not in out, "verify theorem3 n=4")
rc, out = run("verify", "--suite", "props32,special", "--n", "3", "--order", "6", "--format", "json")
check(rc == 0 and all(r["pass"] for r in json.loads(out)), "verify comma-separated suites as JSON")

check(run("dump", "--what", "nope")[0] == 2, "unknown series exits 2")
check(run("verify", "--suite", "bogus")[0] == 2, "unknown suite exits 2")
check(run("invariants", "--n", "0")[0] == 2, "n=0 exits 2")
check(run("invariants", "--order", "0")[0] == 2, "order=0 exits 2")
check(run()[0] == 2, "missing command exits 2")
check(run("verify", "--suite", "theorem3", "--n", "1", "--order", "3")[0] == 2, "theorem3 with n=1 exits 2")

for args in (["invariants", "--n", "5", "--order", "6", "--format", "csv"],
             ["verify", "--n", "4", "--order", "5"],
             ["dump", "--what", "Q", "--n", "3", "--order", "4"]):
    check(run(*args) == run(*args), "byte-identical output: " + " ".join(args))

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "t.json"
    rc, out = run("invariants", "--n", "5", "--order", "4", "--format", "json", "--output", str(path))
    check(rc == 0 and out == "" and json.loads(path.read_text())["truncation"] == 4, "--output writes the file")

sys.exit(1 if failures else 0)
