#!/usr/bin/env python3
"""End-to-end checks of the weyl-hom binary: exit codes, output formats, and
a tiny scan sweep.  Usage: cli_smoke.py /path/to/weyl-hom"""

import json
import subprocess
import sys


def run(binary, *args, stdin=None):
    return subprocess.run(
        [binary, *args], input=stdin, capture_output=True, text=True, timeout=300
    )


def main():
    if len(sys.argv) != 2:
        print("usage: cli_smoke.py /path/to/weyl-hom", file=sys.stderr)
        return 2
    binary = sys.argv[1]
    failures = []

    def check(name, condition, context=""):
        if not condition:
            failures.append(f"{name}: {context}")

    # dim: the worked example has a two-dimensional kernel.
    r = run(binary, "dim", "--mu", "5,5,3,1,1", "--lambda", "7,5,3",
            "--field", "cyclotomic,e=2", "--output", "json")
    check("dim exit", r.returncode == 0, r.stderr)
    payload = json.loads(r.stdout)
    check("dim value", payload["dimension"] == 2, r.stdout)
    check("dim index", payload["index_size"] == 15, r.stdout)

    # dim --basis: kernel JSON includes a basis of the right length.
    r = run(binary, "dim", "--mu", "5,5,3,1,1", "--lambda", "7,5,3",
            "--basis", "--output", "json")
    payload = json.loads(r.stdout)
    check("basis length", len(payload["kernel"]["basis"]) == 2, r.stdout)
    check("basis width", all(len(v) == 15 for v in payload["kernel"]["basis"]),
          r.stdout)

    # identity map and dominance failure.
    r = run(binary, "dim", "--mu", "2", "--lambda", "2")
    check("identity dim", r.returncode == 0 and "dimension: 1" in r.stdout,
          r.stdout)
    r = run(binary, "dim", "--mu", "3,1", "--lambda", "2,2")
    check("dominance dim", r.returncode == 0 and "dimension: 0" in r.stdout,
          r.stdout)

    # malformed partition -> exit 2.
    r = run(binary, "dim", "--mu", "x,y", "--lambda", "2")
    check("bad parts exit", r.returncode == 2, f"rc={r.returncode}")

    # gauss: [2 choose 1] dies at e=2; the polynomial preimage is q+1.
    r = run(binary, "gauss", "--m", "2", "--j", "1", "--field", "cyclotomic,e=2",
            "--output", "json")
    payload = json.loads(r.stdout)
    check("gauss value", payload["value"] == "0", r.stdout)
    check("gauss poly", payload["polynomial"] == "q+1", r.stdout)

    # glue: the trivial fixture.
    r = run(binary, "glue", "--mu", "1", "--lambda", "1", "--output", "json")
    payload = json.loads(r.stdout)
    check("glue alpha", payload["alpha"] == [2, 1], r.stdout)
    check("glue beta", payload["beta"] == [2, 1], r.stdout)

    # glue rejects a pair without dominance.
    r = run(binary, "glue", "--mu", "2,1", "--lambda", "1,1,1")
    check("glue exit", r.returncode == 2, f"rc={r.returncode}")

    # straighten: the worked example's displayed step.
    r = run(binary, "straighten", "--tableau", "1^5 2 3 / 2^4 3 / 2 4 5",
            "--r", "2", "--d", "2", "--field", "cyclotomic,e=2")
    check("straighten exit", r.returncode == 0, r.stderr)
    payload = json.loads(r.stdout)
    check("straighten terms", payload["terms"] ==
          [{"coeff": "-1", "tableau": "1^5 2 3 / 2^5 / 3 4 5"}], r.stdout)

    # normalize round trip through stdin, and budget exhaustion -> exit 3.
    element = json.dumps({
        "shape": [3, 3], "type": [2, 1, 3],
        "terms": [{"tableau": "1^2 3 / 2 3^2", "coeff": "1"}],
    })
    r = run(binary, "normalize", "--homelement-file", "-",
            "--field", "cyclotomic,e=3", stdin=element)
    check("normalize exit", r.returncode == 0, r.stderr)
    payload = json.loads(r.stdout)
    check("normalize terms", payload["terms"] ==
          [{"coeff": "-1", "tableau": "1^2 2 / 3^3"}], r.stdout)
    r = run(binary, "normalize", "--homelement-file", "-",
            "--field", "cyclotomic,e=3", "--budget", "1", stdin=element)
    check("budget exit", r.returncode == 3, f"rc={r.returncode}")

    # verify-family: both homomorphisms are members.
    r = run(binary, "verify-family", "--a", "4", "--b", "4", "--c", "3",
            "--e", "2", "--output", "json")
    check("verify exit", r.returncode == 0, r.stderr)
    payload = json.loads(r.stdout)
    check("verify members", payload["both_member"] is True, r.stdout)
    check("verify disjoint", payload["supports_disjoint"] is True, r.stdout)
    r = run(binary, "verify-family", "--a", "4", "--b", "4", "--c", "4",
            "--e", "2")
    check("verify bad params", r.returncode == 2, f"rc={r.returncode}")

    # scan: records parse as JSON, arrive sorted, and report dimension >= 2.
    r = run(binary, "scan", "--grid-spec", "a=4..5;b=4..5;c=3..4;e=2..2",
            "--jobs", "2")
    check("scan exit", r.returncode == 0, r.stderr)
    records = [json.loads(line) for line in r.stdout.splitlines()]
    check("scan count", len(records) == 4, r.stdout)
    keys = [(rec["a"], rec["b"], rec["c"], rec["e"]) for rec in records]
    check("scan sorted", keys == sorted(keys), str(keys))
    check("scan status", all(rec["status"] == "ok" for rec in records),
          r.stdout)
    check("scan dims", all(rec["dimension"] >= 2 for rec in records),
          r.stdout)

    # help exits cleanly.
    r = run(binary, "--help")
    check("help exit", r.returncode == 0, f"rc={r.returncode}")

    if failures:
        for failure in failures:
            print(f"FAIL {failure}", file=sys.stderr)
        return 1
    print(f"cli smoke: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
