#!/usr/bin/env python3
"""Regenerate the contract golden files from tests/golden/manifest.json.

usage: update_goldens.py path/to/ck-algebra
Review the diff before committing: the goldens are the reference output.
"""
import json
import pathlib
import subprocess
import sys

golden = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"
binary = sys.argv[1] if len(sys.argv) > 1 else "build/ck-algebra"
for entry in json.loads((golden / "manifest.json").read_text()):
    out = subprocess.run([binary, *entry["args"]], capture_output=True, check=False)
    if out.returncode != 0:
        sys.exit(f"{entry['file']}: exit {out.returncode}\n{out.stderr.decode()}")
    (golden / entry["file"]).write_bytes(out.stdout)
    print("wrote", entry["file"])
