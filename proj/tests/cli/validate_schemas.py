#!/usr/bin/env python3
"""Run every subcommand with --json and validate the output against its schema."""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CASES = [
    ("solve", ["solve", "x^4 - 2"]),
    ("solve", ["solve", "x^3 - 3x + 1"]),
    ("solve", ["solve", "x^4 + x^3 + x^2 + x + 1"]),
    ("solve", ["solve", "x^2 + 1/2 x - 3"]),
    ("group", ["group", "x^4 + x + 3"]),
    ("group", ["group", "x^3 - 2"]),
    ("series", ["series", "(12345)", "(12)"]),
    ("series", ["series", "(1234)", "(13)"]),
    ("cyclotomic", ["cyclotomic", "12"]),
    ("cyclotomic", ["cyclotomic", "1"]),
    ("constructible", ["constructible", "257"]),
    ("constructible", ["constructible", "4294967297"]),
    ("constructible", ["constructible", "15", "--extended"]),
    ("vandermonde", ["vandermonde", "11"]),
    ("tschirnhaus", ["tschirnhaus", "x^3 - 3x + 1"]),
    ("tschirnhaus", ["tschirnhaus", "x^3 + 2x^2 - x + 5"]),
    ("cardano", ["cardano", "-3", "1"]),
    ("cardano", ["cardano", "3", "2"]),
]


def main():
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources(
        (s["$id"], Resource.from_contents(s)) for s in schemas.values()
    )
    failures = 0
    for name, args in CASES:
        proc = subprocess.run([binary, "--json", *args], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        try:
            doc = json.loads(proc.stdout)
            validator = jsonschema.Draft202012Validator(schemas[name], registry=registry)
            errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        except json.JSONDecodeError as exc:
            errors = [exc]
        if errors:
            failures += 1
            print(f"FAIL {' '.join(args)}")
            for e in errors[:5]:
                print(f"  {getattr(e, 'json_path', '')}: {getattr(e, 'message', e)}")
        else:
            print(f"ok   {' '.join(args)}")
    # The schemas must reject stray keys.
    stray = {"p": 11, "coeffs": [1, 3, -3, -4, 1, 1], "command": "vandermonde"}
    if jsonschema.Draft202012Validator(schemas["vandermonde"], registry=registry).is_valid(stray):
        print("FAIL vandermonde schema accepts an extra key")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
