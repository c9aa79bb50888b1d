#!/usr/bin/env python3
"""Validate every report the CLI can emit against schema/report.schema.json."""
import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
    schema = json.loads((root / "schema" / "report.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    runs = []
    for mon in sorted((root / "corpus").glob("*.mon")):
        runs.append(["analyze", str(mon), "--format", "json"])
        runs.append(["analyze", str(mon), "--format", "json", "--empty-core"])
    families = subprocess.run([cli, "families", "list"], check=True, capture_output=True, text=True).stdout
    for line in families.splitlines():
        name, kind = line.split("\t")
        if kind == "lazy":
            for w in (1, 3):
                runs.append(["families", "classify", name, "--window", str(w), "--format", "json"])

    bad = 0
    for args in runs:
        out = subprocess.run([cli, *args], check=True, capture_output=True, text=True).stdout
        errors = sorted(validator.iter_errors(json.loads(out)), key=lambda e: list(e.path))
        for e in errors:
            print(f"{' '.join(args)}: {'/'.join(map(str, e.path))}: {e.message}")
        bad += bool(errors)
    print(f"{len(runs) - bad}/{len(runs)} reports valid")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
