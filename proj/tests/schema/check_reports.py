"""Run the CLI with --json on every fixture and validate against the report schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
schema = json.loads((root / "schema" / "report.schema.json").read_text())
fixtures = root / "fixtures"

runs = [["gb", "circle_gb.prob"], ["colon", "colon.prob", "--by", "x"], ["saturate", "colon.prob", "--by", "x"],
        ["intersect", "intersect_a.prob", "intersect_b.prob"], ["strict-transform", "cusp.prob"],
        ["gb", "circle_gb.prob", "--order", "lex"]]
for f in sorted(fixtures.glob("*.prob")):
    text = f.read_text()
    if "map" in text:
        runs.append(["open", f.name])
    elif "ideal base" in text or "ring base" in text:
        runs.append(["flat", f.name])
runs.append(["flat", "line_swap.prob", "--chart", "2"])

failures = 0
for args in runs:
    cmd = [cli, args[0]] + [str(fixtures / a) if a.endswith(".prob") else a for a in args[1:]] + ["--json"]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    try:
        jsonschema.validate(json.loads(proc.stdout), schema)
        print("ok  ", " ".join(args), "exit", proc.returncode)
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        failures += 1
        print("FAIL", " ".join(args), "exit", proc.returncode, str(e).splitlines()[0])
sys.exit(1 if failures else 0)
