#!/usr/bin/env python3
"""Runs the CLI on a set of inputs and validates every JSON output against the schema."""
import json
import subprocess
import sys

import jsonschema

EDGE_C3_TAIL = "5\n0 1\n1 2\n0 2\n0 3\n3 4\n"
EDGE_C4_TAIL = "7\n0 1\n1 2\n2 3\n0 3\n0 4\n4 5\n5 6\n"
EDGE_BOWTIE = "5\n0 1\n1 2\n0 2\n2 3\n3 4\n2 4\n"

CASES = [
    (["rank", "-", "--json"], "DhC\n"),
    (["rank", "-", "--json", "--witness", "--certify"], "Cl\n"),
    (["rank", "-", "--json", "--witness", "--certify"], EDGE_C3_TAIL),
    (["rank", "-", "--json", "--witness"], "Gl`@?_\n"),
    (["rank", "-", "--json"], EDGE_BOWTIE),
    (["rank", "-", "--json", "--certify"], "D?{\n"),
    (["rank", "-", "--json", "--certify"], "C~\n"),
    (["classify", "-", "--json"], "Bw\n"),
    (["classify", "-", "--json"], "6\n0 1\n1 2\n2 3\n3 4\n1 5\n"),
    (["classify", "-", "--json"], "6\n0 1\n1 2\n2 3\n3 4\n2 5\n"),
    (["classify", "-", "--json"], "Fl_I?\n"),
    (["classify", "-", "--json"], "GhEK?C\n"),
    (["reduce", "-", "--json"], EDGE_C3_TAIL),
    (["reduce", "-", "--json"], EDGE_C4_TAIL),
    (["reduce", "-", "--json"], "Dhc\n"),
    (["verify", "trees", "6", "--json", "-"], ""),
    (["verify", "unicyclic", "6", "--json", "-", "--small-cases"], ""),
    (["verify", "labeled", "4", "--json", "-", "--checks", "certification,berge"], ""),
]


def main():
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args, stdin in CASES:
        proc = subprocess.run([exe] + args, input=stdin, capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
        else:
            print(f"ok   {label} ({doc['kind']})")
    # a rank report must not validate as a different kind
    bad = {"kind": "rank", "graph6": "Bw"}
    if validator.is_valid(bad):
        print("FAIL incomplete rank report accepted")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
