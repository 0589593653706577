"""The interaction state machine, step by step.

Run:  python demos/03_explorer_walkthrough.py
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from scholarviz import LayoutMode, classify_concept, load_taxonomy_file, start_session
from scholarviz.explorer import NodeKind, click, double_click

taxonomy = load_taxonomy_file(
    os.path.join(os.path.dirname(__file__), "..", "data", "taxonomy.jsonl")
)
PAGE = 6


def describe(graph, note):
    print(f"--- {note}")
    for node in sorted(graph.nodes.values(), key=lambda n: int(n.id[1:])):
        marker = {"fresh": "●", "expanded_leaf": "○", "expanded": "◌", "collapsed": "◉"}
        print(
            f"  {node.id:>4} {marker[node.state.value]} {node.label:<28}"
            f" side={node.side.value:<5} gen={node.generation} color={node.color_index}"
        )
    print()


def find(graph, label):
    return next(n for n in graph.nodes.values() if n.label == label)


graph = start_session(classify_concept(taxonomy, "ai", PAGE), LayoutMode.RADIAL, PAGE)
describe(graph, "session start: AI with its first page of broader/narrower terms")

# Clicking a fresh node fetches its narrower concepts; the new ring gets the
# next generation color (green).
click(graph, find(graph, "Emerging technology").id, taxonomy, PAGE)
describe(graph, "clicked Emerging technology: green generation appears")

# A node with nothing narrower keeps its color and just goes hollow.
click(graph, find(graph, "Self-Driving").id, taxonomy, PAGE)
describe(graph, "clicked Self-Driving: expanded leaf (hollow, own color)")

# Expand, then collapse: the subtree is stored, not discarded.
nlp = find(graph, "Natural Language Processing")
click(graph, nlp.id, taxonomy, PAGE)
click(graph, nlp.id, taxonomy, PAGE)
describe(graph, "NLP expanded then collapsed: solid red marker, subtree hidden")

click(graph, nlp.id, taxonomy, PAGE)
describe(graph, "NLP clicked again: hidden subtree restored verbatim")

# The MORE node pages in the rest of the list.
more = next(n for n in graph.nodes.values() if n.kind is NodeKind.MORE)
click(graph, more.id, taxonomy, PAGE)
describe(graph, "clicked MORE: remaining narrower terms paged in")

# Double-click recenters the whole session on that concept.
graph = double_click(graph, find(graph, "Emerging technology").id, taxonomy, PAGE)
describe(graph, "double-clicked Emerging technology: recentered from scratch")
