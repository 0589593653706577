"""Query expansion: one keyword in, one of four response shapes out.

Run:  python demos/01_query_expansion.py
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from scholarviz import expand_query, load_taxonomy_file, resolve_expansion

DATA = os.path.join(os.path.dirname(__file__), "..", "data", "taxonomy.jsonl")
taxonomy = load_taxonomy_file(DATA)
PAGE = 6


def show(result):
    print(f"  kind: {result.kind.value}")
    if result.expansions:
        print("  candidates:", ", ".join(label for label, _ in result.expansions))
    if result.supers.items:
        labels = ", ".join(r.label for r in result.supers.items)
        print(f"  broader: {labels} (+{result.supers.remaining} more)")
    if result.subs.items:
        labels = ", ".join(r.label for r in result.subs.items)
        print(f"  narrower: {labels} (+{result.subs.remaining} more)")
    if result.translation:
        print(f"  translation [{result.translation[0]}]: {result.translation[1]}")
    print()


# An abbreviation first offers its full terms for disambiguation.
print("query: AI")
show(expand_query("AI", taxonomy, PAGE))

# Picking a candidate resolves it like a normal keyword (and never loops
# back into the candidate list).
print("picked: Artificial Intelligence")
show(resolve_expansion("Artificial Intelligence", taxonomy, PAGE))

# A full keyword goes straight to its concept view.
print("query: Data mining")
show(expand_query("Data mining", taxonomy, PAGE))

# Some keywords have nothing narrower: only broader terms are shown.
print("query: Data integration")
show(expand_query("Data integration", taxonomy, PAGE))

# And some have nothing but a translation.
print("query: Knowledge reasoning")
show(expand_query("Knowledge reasoning", taxonomy, PAGE))

# Misses are a result shape, not an error.
print("query: warp drive")
show(expand_query("warp drive", taxonomy, PAGE))
