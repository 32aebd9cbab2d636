#!/usr/bin/env python3
"""Runs the CLI with --json and validates each output against its schema."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

CASES = [
    ("park", ["park", "-p", "3,4,4,4,3", "-k", "3"]),
    ("park", ["park", "-p", "3,4,4,4,3", "-k", "3", "--trace"]),
    ("park", ["park", "-p", "3,3,3,3", "-k", "0,0,2,0", "--trace"]),
    ("classify", ["classify", "-p", "2,3,3", "-k", "1"]),
    ("classify", ["classify", "-p", "1,2,3,4", "-k", "0"]),
    ("witness", ["witness", "-p", "8,4,7,1,6,8,7,5,10,1", "-k", "2", "--all"]),
    ("witness", ["witness", "-p", "2,3,3", "-k", "1"]),
    ("decompose", ["decompose", "-p", "4,4,3,2,3", "-j", "4", "-k", "1"]),
    ("decompose", ["decompose", "-p", "3,1,2,2", "-j", "1"]),
    ("count", ["count", "-n", "4", "--format", "json", "--classes"]),
    ("count", ["sweep", "-n", "3", "--format", "json", "--predicates", "k_naples"]),
]


def main() -> int:
    naples, schema_dir = sys.argv[1], Path(sys.argv[2])
    failures = 0
    for name, args in CASES:
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        if name != "count":
            args = args + ["--json"]
        proc = subprocess.run([naples, *args], capture_output=True, text=True, check=False)
        try:
            if proc.returncode != 0:
                raise RuntimeError(f"exit {proc.returncode}: {proc.stderr.strip()}")
            jsonschema.validate(json.loads(proc.stdout), schema,
                                cls=jsonschema.Draft202012Validator)
            print(f"ok    {' '.join(args)}")
        except (RuntimeError, json.JSONDecodeError, jsonschema.ValidationError) as e:
            failures += 1
            print(f"FAIL  {' '.join(args)}: {e}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
