# Copyright 2026 The nonint Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the command line tool: JSON shape, exit codes, examples."""

import csv
import json
import os
import subprocess
import sys
import tempfile
from fractions import Fraction

import jsonschema

BINARY, SCHEMA_PATH = sys.argv[1], sys.argv[2]
with open(SCHEMA_PATH, encoding="utf-8") as fh:
    VALIDATOR = jsonschema.Draft202012Validator(json.load(fh))

failures = []


def check(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL:", what)


def run(*args, env=None):
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, env=env, check=False)
    try:
        report = json.loads(proc.stdout)
    except json.JSONDecodeError:
        check(False, f"{args}: stdout is not JSON: {proc.stdout[:200]!r}")
        return proc.returncode, {}
    errors = sorted(VALIDATOR.iter_errors(report), key=str)
    check(not errors, f"{args}: schema violations: {[e.message for e in errors[:3]]}")
    return proc.returncode, report


def rationals(node):
    """Every value that should be an exact rational string."""
    if isinstance(node, dict):
        for key, value in node.items():
            if key in ("aAtH", "bAtH", "exponent", "tau", "truncation", "rho") and isinstance(value, str):
                yield value
            elif key in ("a", "b") and isinstance(value, list):
                yield from value
            else:
                yield from rationals(value)
    elif isinstance(node, list):
        for value in node:
            yield from rationals(value)


def roundtrip(report, label):
    for text in rationals(report.get("result", {})):
        q = Fraction(text)
        check(f"{q.numerator}/{q.denominator}" == text, f"{label}: {text} is not canonical num/den")


# check
code, rep = run("check", "--A", "0", "--B", "1", "--C", "1", "--D", "5")
check(code == 0 and rep["result"]["rule"] == "ThV6-iv", "check A=0 D=5 -> ThV6-iv")
check(rep["inputs"]["D"] == "5/1", "inputs echo exact rationals")
code, rep = run("check", "--A", "16", "--B", "0", "--C", "1", "--D", "0")
check(code == 0 and rep["result"]["rule"] == "ThV6-ii", "check A=16 -> ThV6-ii")
code, rep = run("check", "--A", "1", "--B", "0", "--C", "0", "--D", "0")
check(code == 2 and rep["result"]["conclusion"] == "OutOfScope", "check C=0 -> OutOfScope, exit 2")
code, rep = run("check", "--A", "0", "--B", "0", "--C", "1", "--D", "0")
check(code == 0 and rep["result"]["conclusion"] == "Inconclusive", "check A=0 D=0 -> Inconclusive")
code, rep = run("check", "--A", "-8/3", "--B", "2/3", "--C", "1", "--D", "0")
check(code == 0, "check accepts signed fractions")
code, rep = run("check", "--A", "1.5", "--B", "0", "--C", "1", "--D", "0")
check(code == 3 and rep["error"]["kind"] == "ParseError" and rep["error"].get("token") == "1.5",
      "check rejects floats, naming the token")
code, rep = run("check", "--A", "0", "--B", "0", "--C", "1", "--D", "5", "--cross-check")
check(code == 0 and "crossCheckAgrees" in rep["result"], "check --cross-check reports agreement flag")
code, rep = run("check", "--bogus")
check(code == 3, "unknown flag is a parse error")

# legendre
code, rep = run("legendre", "--p", "1/4", "--q", "1/6")
check(code == 0 and rep["result"]["conclusion"] == "NonSolvable"
      and all(f"ThLeg-{r}" in rep["result"]["firedRules"] for r in ("i", "ii", "iii", "iv", "v")),
      "legendre p=1/4 q=1/6 -> NonSolvable, all five rules")
code, rep = run("legendre", "--p", "sqrt(2)", "--q", "1/6")
check(code == 0 and rep["result"]["conclusion"] == "NonSolvable"
      and "NonRational" in rep["result"]["firedRules"], "legendre p=sqrt(2) -> NonRational")
code, rep = run("legendre", "--p", "5/6", "--q", "1/6")
check(code == 0 and rep["result"]["conclusion"] == "PossiblySolvable", "legendre p=5/6 -> PossiblySolvable")
check(len(rep["warnings"]) > 0, "convention notices in the warnings channel")
code, rep = run("legendre", "--p", "-2", "--q", "1")
check(code == 2 and rep["error"]["kind"] == "OutOfScope", "legendre side condition -> exit 2")
code, rep = run("legendre", "--p", "sqrt(2", "--q", "1")
check(code == 3, "legendre malformed surd -> exit 3")

# residues
code, rep = run("residues", "--k", "0")
check(code == 0 and rep["result"]["anyNonzeroWithoutD"], "residues k=0 -> anyNonzeroWithoutD")
roundtrip(rep, "residues k=0")
code, rep = run("residues", "--k", "1")
check(code == 0 and rep["result"]["nonzeroRequiresD"], "residues k=1 -> nonzeroRequiresD")
code, rep = run("residues", "--k", "2")
check(code == 0 and rep["result"]["anyNonzeroWithoutD"], "residues k=2 -> anyNonzeroWithoutD")
code, rep = run("residues", "--k", "40", "--cap", "5")
check(code == 4 and rep["error"]["kind"] == "TruncationCapExceeded", "residues over cap -> exit 4")
env = dict(os.environ, NONINT_TRUNCATION_CAP="5")
code, rep = run("residues", "--k", "40", env=env)
check(code == 4, "truncation cap from the environment")
code, rep = run("residues", "--k", "-1", "--scale-zeta12", "-144", "--h", "2")
check(code == 0 and rep["result"]["anyNonzeroWithoutD"], "residues with alternate scaling")

# series
code, rep = run("series", "--eq", "ve1-xi12", "--order", "2")
terms = {t["exponent"]: t["text"] for t in rep["result"]["series"]["terms"]}
check(code == 0 and terms.get("5/2") == "1" and terms.get("11/2") == "-3/28*H", "series ve1-xi12 order 2")
roundtrip(rep, "series")
code, rep = run("series", "--eq", "ve1-xi11", "--tau", "2", "--root", "2")
check(code == 0 and rep["result"]["logRequired"], "series tau=2 second root is logarithmic")

# validate
code, rep = run("validate", "--eq", "r2", "--window", "0.01:0.1")
check(code == 0 and max(rep["result"]["maxRelDeviation"]) <= 1e-10
      and rep["result"]["wronskianDeviation"] <= 1e-10, "validate r2 within 1e-10")
code, rep = run("validate", "--eq", "r1", "--tau", "-14/3")
check(code == 0 and max(rep["result"]["maxRelDeviation"]) <= 1e-10, "validate r1 within 1e-10")
code, rep = run("validate", "--eq", "r2", "--window", "0.1:0.01")
check(code != 0 and "error" in rep, "validate rejects reversed window")

# sweep
with tempfile.TemporaryDirectory() as tmp:
    grid, out = os.path.join(tmp, "grid.csv"), os.path.join(tmp, "out.csv")
    rows = [("0", "1", "1", "5"), ("16", "0", "1", "0"), ("1", "0", "0", "0"), ("0", "3", "1", "0"), ("30", "-2", "1", "1")]
    with open(grid, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["A", "B", "C", "D"])
        w.writerows(rows)
    code, rep = run("sweep", "--in", grid, "--out", out)
    with open(out, newline="", encoding="utf-8") as fh:
        got = list(csv.DictReader(fh))
    check(code == 0 and rep["result"]["rows"] == len(rows) == len(got), "sweep preserves row count")
    check([r["conclusion"] for r in got] == ["NonIntegrable", "NonIntegrable", "OutOfScope", "Inconclusive", "NonIntegrable"],
          "sweep conclusions in input order")
    check(rep["result"]["outOfScope"] == 1 and rep["result"]["inconclusive"] == 1, "sweep counters")
    with open(grid, "a", encoding="utf-8") as fh:
        fh.write("1,x,1,1\n")
    code, rep = run("sweep", "--in", grid, "--out", out)
    check(code == 3 and "row" in rep["error"]["message"] and "B" in rep["error"]["message"],
          "sweep parse error names row and column")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
