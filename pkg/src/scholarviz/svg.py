"""SVG rendering of a laid-out explorer graph.

Shares the layout engine with the service, so exported files are pixel-stable
and usable for visual regression checks without a browser. Fill/stroke follow
the interaction states: untouched nodes are solid in their ring color,
expanded leaves hollow in their color, expanded inner nodes hollow red,
collapsed nodes solid red.
"""

from __future__ import annotations

from .explorer import ExplorerGraph, NodeKind, NodeVisualState
from .layout import LayoutResult

COLOR_HEX = {
    "gray": "#7f7f7f",
    "blue": "#1f77b4",
    "orange": "#ff7f0e",
    "green": "#2ca02c",
    "brown": "#8c564b",
    "purple": "#9467bd",
    "teal": "#17becf",
    "olive": "#bcbd22",
    "red": "#d62728",
}
RED = COLOR_HEX["red"]
NODE_RADIUS = 9.0


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _esc(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_svg(graph: ExplorerGraph, layout: LayoutResult, canvas: tuple[float, float]) -> str:
    """Serialize the graph to a standalone SVG document."""
    width, height = canvas
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="#ffffff"/>',
    ]

    snapshot = graph.to_dict()
    positions = layout.positions

    for edge in snapshot["edges"]:
        a = positions[edge["parent"]]
        b = positions[edge["child"]]
        stroke = COLOR_HEX[edge["color"]]
        parts.append(
            f'<line x1="{_fmt(a.x)}" y1="{_fmt(a.y)}" x2="{_fmt(b.x)}" y2="{_fmt(b.y)}" '
            f'stroke="{stroke}" stroke-width="1.5"/>'
        )

    for node_dict in snapshot["nodes"]:
        node = graph.nodes[node_dict["id"]]
        point = positions[node.id]
        own = COLOR_HEX[node_dict["color"]]
        if node.kind is not NodeKind.CONCEPT or node.state is NodeVisualState.FRESH:
            fill, stroke = own, own
        elif node.state is NodeVisualState.EXPANDED_LEAF:
            fill, stroke = "#ffffff", own
        elif node.state is NodeVisualState.EXPANDED:
            fill, stroke = "#ffffff", RED
        else:  # COLLAPSED
            fill, stroke = RED, RED
        parts.append(
            f'<circle cx="{_fmt(point.x)}" cy="{_fmt(point.y)}" r="{_fmt(NODE_RADIUS)}" '
            f'fill="{fill}" stroke="{stroke}" stroke-width="2" data-node="{_esc(node.id)}" '
            f'data-state="{node.state.value}" data-side="{node.side.value}"/>'
        )
        parts.append(
            f'<text x="{_fmt(point.x)}" y="{_fmt(point.y + NODE_RADIUS + 12)}" '
            f'font-size="11" text-anchor="middle" fill="#333333">{_esc(node.label)}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
