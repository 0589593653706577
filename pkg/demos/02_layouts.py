"""The three layout modes over one explorer graph, exported as SVG.

Run:  python demos/02_layouts.py
Writes demos/output/{radial,horizontal,force}.svg
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from scholarviz import (
    LayoutMode,
    compute_layout,
    load_taxonomy_file,
    resolve_expansion,
    set_mode,
    start_session,
)
from scholarviz.explorer import click
from scholarviz.svg import render_svg

HERE = os.path.dirname(__file__)
taxonomy = load_taxonomy_file(os.path.join(HERE, "..", "data", "taxonomy.jsonl"))
CANVAS = (1200.0, 800.0)
PAGE = 6

# Build a graph with some depth: focus on AI, expand its broader concept.
graph = start_session(resolve_expansion("AI", taxonomy, PAGE), LayoutMode.RADIAL, PAGE)
emerging = next(n for n in graph.nodes.values() if n.label == "Emerging technology")
click(graph, emerging.id, taxonomy, PAGE)

out_dir = os.path.join(HERE, "output")
os.makedirs(out_dir, exist_ok=True)

for mode in LayoutMode:
    set_mode(graph, mode)
    layout = compute_layout(graph.layout_input(CANVAS, seed=42), mode)
    path = os.path.join(out_dir, f"{mode.value}.svg")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(graph, layout, CANVAS))
    print(f"{mode.value:<12} link_length={layout.link_length:7.2f}  -> {path}")

# The radial view puts broader concepts strictly in the upper half-plane,
# narrower in the lower; the horizontal view maps depth to x columns; the
# force view is a seeded simulation, so rerunning this script reproduces
# the same files byte for byte.
