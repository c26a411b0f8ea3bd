#!/usr/bin/env python3
"""The full verification stack on one algebra, as the CLI's `report` runs it.

Suites: axioms, integrals, lemma1 ((dim H/dim V) e_V = (S* chi_V) Lambda and
its mate), corollary (delta_M Lambda = (dim M) chi_M plus subset idempotent
multiplicities), proposition (degree divisibility under the central-character
hypothesis, with integrality certificates), section4 (f restricts to exact
subspace isomorphisms), kaplansky (the divisibility findings table), and the
exploratory central-fusion scan."""

import json

from hopfkit import Pipeline, builtin_group, function_algebra

pipe = Pipeline(function_algebra(builtin_group("S3")))

for name in ("lemma1", "proposition", "kaplansky"):
    print(pipe.suite(name).render_text())
    print()

doc = pipe.report_document()
print("report document keys:", sorted(doc))
print("suites:", [s["name"] for s in doc["suites"]])
print("overall:", doc["overall"])
print()
print("JSON is schema-stable and byte-deterministic for a fixed seed; the")
print("same document is what `hopfkit report --json` emits:")
print(json.dumps(doc["suites"][2]["items"][0], indent=2))
