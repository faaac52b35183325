#!/usr/bin/env python3
"""Validate skwlab reports against docs/report.schema.json.

Usage: validate_report.py REPORT.json [...]
A bundle written by `verify --suite all` is validated report by report.
"""
import json
import pathlib
import sys

import jsonschema

SCHEMA = pathlib.Path(__file__).resolve().parent.parent / "docs" / "report.schema.json"


def reports(doc):
    if "reports" in doc:
        return doc["reports"]
    return [doc]


def main(paths):
    schema = json.loads(SCHEMA.read_text())
    validator = jsonschema.Draft202012Validator(schema)
    bad = 0
    for path in paths:
        doc = json.loads(pathlib.Path(path).read_text())
        for rep in reports(doc):
            errors = sorted(validator.iter_errors(rep), key=lambda e: list(e.path))
            for e in errors[:10]:
                where = "/".join(str(x) for x in e.path)
                print(f"{path}: {rep.get('suite', '?')}: {where}: {e.message}")
            bad += bool(errors)
            if not errors:
                print(f"{path}: {rep['suite']}: valid")
    return 1 if bad else 0


if __name__ == "__main__":
    if len(sys.argv) < 2:
        print(__doc__.strip())
        sys.exit(2)
    sys.exit(main(sys.argv[1:]))
