#!/usr/bin/env python3
"""End-to-end checks of the polylog-apery command line tool."""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
failures = 0


def run(*args, expect_code=0):
    global failures
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    if proc.returncode != expect_code:
        failures += 1
        print(f"FAIL {' '.join(args)}: exit {proc.returncode}, expected {expect_code}")
        print(proc.stdout)
        print(proc.stderr)
    return proc


def check(name, cond):
    global failures
    if cond:
        print(f"PASS {name}")
    else:
        failures += 1
        print(f"FAIL {name}")


# Theorem 1 rows at z = -1
out = run("compute", "--construction", "log-dilog", "--z", "-1", "--n", "2").stdout
doc = json.loads(out)
rows = doc["rows"]
check("theorem 1 a-column", [r["a"] for r in rows] == ["1", "5", "55"])
check("theorem 1 b-column", [r["b"] for r in rows] == ["0", "-7/2", "-305/8"])
check("theorem 1 b~-column", [r["b_tilde"] for r in rows] == ["0", "-4", "-181/4"])
check("log-dilog has no b~~", all(r["b_tilde2"] is None for r in rows))

# Theorem 3 rows, CSV
out = run("compute", "--construction", "well-poised", "--n", "2", "--format", "csv").stdout
lines = out.strip().splitlines()
check("csv header", lines[0] == "n,a,b,b_tilde,b_tilde2,r,r_tilde,r_tilde2")
check("theorem 3 a-column", [l.split(",")[1] for l in lines[1:]] == ["1", "8", "264"])
check("theorem 3 b-column", [l.split(",")[2] for l in lines[1:]] == ["0", "13/2", "1737/8"])

# theorem-mode trilog (no --z): THM2 extension data
out = run("compute", "--construction", "trilog", "--n", "2").stdout
doc = json.loads(out)
check("trilog z=1 a-column", [r["a"] for r in doc["rows"]] == ["1", "7", "163"])
check("trilog z=1 b~-column", [r["b_tilde"] for r in doc["rows"]] == ["0", "23/2", "2145/8"])
check("trilog z=1 drops b", all(r["b"] is None for r in doc["rows"]))

# determinism: byte-identical reruns, --out matches stdout
a = run("compute", "--construction", "log-dilog", "--z", "1/3", "--n", "4").stdout
b = run("compute", "--construction", "log-dilog", "--z", "1/3", "--n", "4").stdout
check("deterministic output", a == b)
with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "rows.json")
    run("compute", "--construction", "log-dilog", "--z", "1/3", "--n", "4", "--out", path)
    with open(path, "rb") as f:
        check("--out matches stdout", f.read() == a.encode())

# verification suites
out = run("verify", "--suite", "recurrences", "--max-n", "20").stdout
check("recurrences suite passes", "all checks passed" in out and "FAIL" not in out)
out = run("verify", "--suite", "identities", "--max-n", "20").stdout
check("identities suite passes", "all checks passed" in out)

# digits
out = run("digits", "--constant", "zeta2", "--digits", "10").stdout
doc = json.loads(out)
check("zeta2 digits", doc["value"].startswith("1.6449340668") and doc["ok"])
out = run("digits", "--constant", "log2", "--digits", "10").stdout
doc = json.loads(out)
check("log2 digits", doc["value"] == "0.6931471806" and doc["ok"])  # final digit rounded

# roots
out = run("roots", "--recurrence", "thm2", "--digits", "10").stdout
doc = json.loads(out)
check("thm2 dominant root", doc["roots"][0]["re"].startswith("54.96369509"))
check("thm2 conjugate pair moduli", doc["roots"][1]["abs"] == doc["roots"][2]["abs"])

# error paths: domain violations and usage errors exit nonzero
run("compute", "--construction", "log-dilog", "--z", "2", "--n", "1", expect_code=2)
run("compute", "--construction", "log-dilog", "--n", "1", expect_code=2)
run("compute", "--construction", "well-poised", "--z", "-1", "--n", "1", expect_code=2)
proc = subprocess.run([BIN, "verify", "--suite", "nope", "--max-n", "5"], capture_output=True)
check("unknown suite rejected", proc.returncode != 0)

if failures:
    print(f"{failures} check(s) failed")
    sys.exit(1)
print("cli: all checks passed")
