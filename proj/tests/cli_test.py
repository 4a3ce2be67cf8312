#!/usr/bin/env python3
"""Exit-code and output-format checks for the command-line tool."""

import json
import os
import subprocess
import sys

BIN = os.environ.get("LATMIX_BIN", "./latmix")

PAIR = '{"ambient_dim":1,"supports":[[[0],[2]],[[1],[3]]]}'
SQUARES = '{"ambient_dim":2,"supports":[[[0,0],[1,0],[0,1],[1,1]],[[0,0],[1,0],[0,1],[1,1]]]}'

failures = []


def run(args, stdin=""):
    return subprocess.run([BIN] + args, input=stdin, capture_output=True, text=True)


def expect(name, cond, detail=""):
    if not cond:
        failures.append(f"{name}: {detail}")
        print(f"FAIL {name}: {detail}")
    else:
        print(f"ok   {name}")


def main():
    r = run(["analyze", "-"], PAIR)
    expect("analyze exit 0", r.returncode == 0, f"exit {r.returncode}: {r.stderr}")
    expect("analyze text fields",
           "minimal defect d(A) = -1" in r.stdout
           and "essential subcollection = {1,2}" in r.stdout
           and "ind(J) = 2" in r.stdout
           and "consistency codimension = 1" in r.stdout,
           r.stdout)

    r = run(["invariants", "-"], PAIR)
    expect("invariants root count", "root count = 2" in r.stdout, r.stdout)

    r = run(["mixed-volume", "-"], SQUARES)
    expect("mixed-volume value", r.stdout.strip() == "2", r.stdout)

    r = run(["analyze", "--format", "json", "-"], PAIR)
    expect("json exit 0", r.returncode == 0, r.stderr)
    doc = json.loads(r.stdout)
    expect("json envelope",
           doc.get("version") and "input_digest" in doc and "timing_ms" in doc
           and doc["report"]["minimal_defect"] == -1
           and doc["report"]["essential"] == [1, 2],
           r.stdout)

    # Identical input gives an identical report body and digest across runs.
    r2 = run(["analyze", "--format", "json", "-"], PAIR)
    doc2 = json.loads(r2.stdout)
    expect("json stable given equal inputs",
           doc["report"] == doc2["report"] and doc["input_digest"] == doc2["input_digest"])

    # Invalid input -> exit 2.
    for bad in ["{broken", '{"ambient_dim":2,"supports":[[[0,0]],[[1]]]}',
                '{"ambient_dim":1,"supports":[[]]}', ""]:
        r = run(["analyze", "-"], bad)
        expect(f"invalid input exit 2 ({bad[:20]!r})", r.returncode == 2,
               f"exit {r.returncode}")
    r = run(["analyze", "/nonexistent/path.json"])
    expect("missing file exit 2", r.returncode == 2, f"exit {r.returncode}")
    r = run(["no-such-command"])
    expect("unknown subcommand exit 2", r.returncode == 2, f"exit {r.returncode}")

    # Precondition unmet -> exit 3.
    r = run(["mixed-volume", "-"], PAIR)  # 2 supports in dimension 1
    expect("mixed-volume precondition exit 3", r.returncode == 3, f"exit {r.returncode}")

    # Resource cap exceeded -> exit 4.
    many = json.dumps({"ambient_dim": 1, "supports": [[[0], [1]]] * 5})
    r = run(["analyze", "--max-subsets", "4", "-"], many)
    expect("subset cap exit 4", r.returncode == 4, f"exit {r.returncode}")

    huge = '{"ambient_dim":2,"supports":[[[0,0],[9000,0],[0,9000]]]}'
    r = run(["invariants", "--max-lattice-points", "100", "-"], huge)
    expect("lattice point cap exit 4", r.returncode == 4, f"exit {r.returncode}")

    # Oracle suite smoke run.
    r = run(["check", "--instances", "10", "--seed", "7"])
    expect("check exit 0", r.returncode == 0, r.stdout + r.stderr)
    expect("check reports PASS", r.stdout.count("PASS") == 4, r.stdout)
    r = run(["check", "--instances", "10", "--seed", "7", "--format", "json"])
    results = json.loads(r.stdout)
    expect("check json", len(results) == 4 and all(e["failures"] == 0 for e in results),
           r.stdout)

    if failures:
        print(f"\n{len(failures)} failure(s)")
        return 1
    print("\nall CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
