#!/usr/bin/env python3
"""Runs acikit with --json and validates envelopes and payloads against schemas/."""

import json
import subprocess
import sys
from pathlib import Path

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

CI_TABLE = '{"c":3,"levels":[[0],[2,2,2,3],[3,4,4,4,5],[5,6]]}'

# (argv, schema for the payload or None, pointer into the payload)
CASES = [
    (["hf", "ci", "--degrees", "3,3,3"], "hilbert_function", None),
    (["hf", "from-betti", "--table", CI_TABLE], "hilbert_function", None),
    (["aci", "monomial", "--degrees", "2,3,4", "--h", "5", "--verify"], "monomial_ideal", "ideal"),
    (["aci", "witness", "--a", "3"], "monomial_ideal", "ideal"),
    (["betti", "oracle", "--witness", "3"], "betti_table", "table"),
    (["liaison", "link", "--z", "2,2,3", "--hq", "1,3,3,1"], "hilbert_function", "hg"),
    (["liaison", "cone", "--table", CI_TABLE, "--z", "2,2,3"], "mapping_cone", None),
    (["classify", "tables", "--a", "4", "--h", "7"], "table_poset", None),
    (["classify", "maximal", "--a", "3", "--h", "5"], "betti_table", None),
    (["pfaffian", "sub", "--delta", "2,3,3,4,4", "--delete", "1"], "polynomial", None),
    (["classify", "tmax", "--a", "4"], None, None),
    (["hf", "ci", "--degrees", "0,2"], None, None),
    (["aci", "monomial", "--degrees", "2,2,2", "--h", "9"], None, None),
]


def main() -> int:
    acikit, schema_dir = sys.argv[1], Path(sys.argv[2])
    schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())

    def validator(name: str) -> Draft202012Validator:
        return Draft202012Validator(schemas[name + ".schema.json"], registry=registry)

    for schema in schemas.values():
        Draft202012Validator.check_schema(schema)

    failures = 0
    for argv, schema, key in CASES:
        proc = subprocess.run([acikit, "--json", *argv], capture_output=True, text=True, check=False)
        label = " ".join(argv)
        try:
            envelope = json.loads(proc.stdout)
        except json.JSONDecodeError as exc:
            print(f"FAIL {label}: stdout is not JSON ({exc})")
            failures += 1
            continue
        errors = [e.message for e in validator("envelope").iter_errors(envelope)]
        if (envelope.get("status") == "ok") != (proc.returncode == 0):
            errors.append(f"status {envelope.get('status')} with exit code {proc.returncode}")
        if schema is not None:
            payload = envelope.get("payload", {})
            if key is not None:
                payload = payload.get(key)
            errors += [e.message for e in validator(schema).iter_errors(payload)]
        print(("FAIL " if errors else "ok   ") + label)
        for message in errors:
            print("     " + message)
        failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
