#!/usr/bin/env python3
"""Scenario files: serialize, parse back, and drive the CLI in-process.

Scenarios are single JSON documents with explicit (re, im) amplitude
pairs and label-based mode references.  Serialization prints floats with
17 significant digits, so a parse/serialize round trip is exact and the
emitted bytes are stable run to run.
"""

import tempfile
from pathlib import Path

from qdt import builtin_scenario, parse_scenario, random_strict_scenario, serialize_scenario
from qdt.cli import run_cli

# ---------------------------------------------------------------
# round trip: parse(serialize(s)) == s, byte for byte on re-emit
# ---------------------------------------------------------------
scenario = builtin_scenario("disjunction")
text = serialize_scenario(scenario)
print("serialized disjunction template:")
print("\n".join(text.splitlines()[:14]), "\n  ...")

back = parse_scenario(text)
print("\nround trip is exact:", back == scenario)
print("re-serialization is byte-identical:", serialize_scenario(back) == text)

# ---------------------------------------------------------------
# seeded generation is reproducible down to the bytes
# ---------------------------------------------------------------
a = serialize_scenario(random_strict_scenario(seed=123, num_factors=1, modes_per_factor=3))
b = serialize_scenario(random_strict_scenario(seed=123, num_factors=1, modes_per_factor=3))
print("same seed, same bytes:", a == b)

# ---------------------------------------------------------------
# the same files drive the CLI; demo: URIs skip the file entirely
# ---------------------------------------------------------------
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "scenario.json"
    path.write_text(text, encoding="utf-8")
    print("\n$ qdt rank", path.name, "--format csv")
    code = run_cli(["rank", str(path), "--format", "csv"])
    print("exit code:", code)

print("\n$ qdt validate demo:h2 --oracle --format json")
code = run_cli(["validate", "demo:h2", "--oracle", "--format", "json"])
print("exit code:", code)
