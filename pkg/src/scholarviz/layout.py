"""Deterministic 2-D layouts for the explorer graph.

Three modes over the same input: a radial tree (broader concepts on the
upper half-circle, narrower on the lower), a horizontal tree (broader left,
narrower right), and a force-directed map with optional pinned nodes.

Coordinates use the screen convention: y grows downward. All three layouts
are pure functions of (input, config); the force map draws its jitter from a
fixed SplitMix64 stream so repeated runs are bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import InvalidDepthError, LayoutError, MissingFocusError
from .rng import SplitMix64


class LayoutMode(str, Enum):
    RADIAL = "radial"
    HORIZONTAL = "horizontal"
    FORCE = "force"


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def to_dict(self) -> dict:
        return {"x": self.x, "y": self.y}


@dataclass(frozen=True)
class LayoutConfig:
    """Spacing constants; all exposed in the service config file."""

    link_min: float = 40.0
    link_max: float = 120.0
    gap: float = 40.0
    iterations: int = 300
    baseline_count: int = 12  # node count at which links start shrinking
    force_k_scale: float = 0.8
    jitter_divisor: float = 100.0
    guard_gap_deg: float = 10.0


@dataclass(frozen=True)
class LayoutInput:
    """Visible graph to lay out.

    Depth is signed: negative on the broader-concept side, positive on the
    narrower side, zero for the single focus. Edge order is meaningful: a
    parent's children keep the order their edges appear in.
    """

    nodes: tuple[tuple[str, int], ...]
    edges: tuple[tuple[str, str], ...]
    canvas: tuple[float, float]
    seed: int = 0
    pinned: dict[str, Point] = field(default_factory=dict)


@dataclass(frozen=True)
class LayoutResult:
    positions: dict[str, Point]
    link_length: float

    def to_dict(self) -> dict:
        return {
            "positions": {nid: p.to_dict() for nid, p in self.positions.items()},
            "link_length": self.link_length,
        }


def link_length_for(count: int, config: LayoutConfig) -> float:
    """Shrink link length as the graph grows: L_max * sqrt(N0/N), clamped.

    Monotone non-increasing in the node count, so dense graphs pull their
    rings inward automatically.
    """
    if count <= 0:
        return config.link_max
    raw = config.link_max * math.sqrt(config.baseline_count / count)
    return min(config.link_max, max(config.link_min, raw))


def _focus_of(inp: LayoutInput) -> str:
    focus = [nid for nid, depth in inp.nodes if depth == 0]
    if len(focus) != 1:
        raise MissingFocusError(len(focus))
    return focus[0]


def _clip(x: float, y: float, canvas: tuple[float, float]) -> tuple[float, float]:
    return min(max(x, 0.0), canvas[0]), min(max(y, 0.0), canvas[1])


def _tree_structure(inp: LayoutInput) -> tuple[str, dict[str, int], dict[str, list[str]]]:
    """Validate tree-mode input and return (focus, depths, ordered children)."""
    focus = _focus_of(inp)
    depths = dict(inp.nodes)
    children: dict[str, list[str]] = {nid: [] for nid, _ in inp.nodes}
    seen_child: set[str] = set()
    for parent, child in inp.edges:
        if parent not in depths or child not in depths:
            raise LayoutError(f"edge references unknown node: {parent!r} -> {child!r}")
        if abs(depths[child]) != abs(depths[parent]) + 1 or (
            depths[parent] != 0 and (depths[child] > 0) != (depths[parent] > 0)
        ):
            raise InvalidDepthError(parent, child)
        if child in seen_child or child == focus:
            raise LayoutError(f"node {child!r} has more than one parent")
        seen_child.add(child)
        children[parent].append(child)

    orphans = [nid for nid, d in inp.nodes if d != 0 and nid not in seen_child]
    if orphans:
        raise LayoutError(f"nodes not reachable from the focus: {orphans!r}")
    return focus, depths, children


def radial_layout(inp: LayoutInput, config: LayoutConfig | None = None) -> LayoutResult:
    """Concentric rings around the focus; ring index = |depth|.

    Broader-side nodes occupy the upper half-circle (angle band 180..360 in
    screen coordinates), narrower-side nodes the lower (0..180). A parent's
    children evenly partition the parent's angular sector in edge order;
    final angles keep a guard gap away from the horizontal axis so every
    node lands strictly inside its half-plane.
    """
    config = config or LayoutConfig()
    focus, depths, children = _tree_structure(inp)
    link = link_length_for(len(inp.nodes), config)
    cx, cy = inp.canvas[0] / 2.0, inp.canvas[1] / 2.0
    guard = config.guard_gap_deg

    positions: dict[str, Point] = {focus: Point(cx, cy)}

    def place(node_id: str, sector_start: float, sector_width: float, band: tuple[float, float]) -> None:
        kids = children[node_id]
        n = len(kids)
        for i, kid in enumerate(kids):
            kid_start = sector_start + i * sector_width / n
            kid_width = sector_width / n
            angle = kid_start + kid_width / 2.0
            angle = min(max(angle, band[0] + guard), band[1] - guard)
            radius = abs(depths[kid]) * link
            theta = math.radians(angle)
            x, y = _clip(cx + radius * math.cos(theta), cy + radius * math.sin(theta), inp.canvas)
            positions[kid] = Point(x, y)
            place(kid, kid_start, kid_width, band)

    super_kids = [k for k in children[focus] if depths[k] < 0]
    sub_kids = [k for k in children[focus] if depths[k] > 0]
    for side_kids, band in ((super_kids, (180.0, 360.0)), (sub_kids, (0.0, 180.0))):
        n = len(side_kids)
        for i, kid in enumerate(side_kids):
            start = band[0] + i * (band[1] - band[0]) / n
            width = (band[1] - band[0]) / n
            angle = min(max(start + width / 2.0, band[0] + guard), band[1] - guard)
            radius = abs(depths[kid]) * link
            theta = math.radians(angle)
            x, y = _clip(cx + radius * math.cos(theta), cy + radius * math.sin(theta), inp.canvas)
            positions[kid] = Point(x, y)
            place(kid, start, width, band)

    return LayoutResult(positions=positions, link_length=link)


def horizontal_layout(inp: LayoutInput, config: LayoutConfig | None = None) -> LayoutResult:
    """Depth columns left (broader) and right (narrower) of the focus.

    Leaves stack top-down in depth-first order with a uniform gap; every
    internal node recenters on the mean of its visible children. Each side
    is then shifted so its implied root lines up with the focus row.
    """
    config = config or LayoutConfig()
    focus, depths, children = _tree_structure(inp)
    link = link_length_for(len(inp.nodes), config)
    cx, cy = inp.canvas[0] / 2.0, inp.canvas[1] / 2.0

    positions: dict[str, Point] = {focus: Point(cx, cy)}

    def stack_side(side_kids: list[str]) -> None:
        if not side_kids:
            return
        ys: dict[str, float] = {}
        next_slot = [0.0]

        def assign(node_id: str) -> float:
            kids = children[node_id]
            if not kids:
                y = next_slot[0]
                next_slot[0] += config.gap
            else:
                y = sum(assign(k) for k in kids) / len(kids)
            ys[node_id] = y
            return y

        implied_root = sum(assign(k) for k in side_kids) / len(side_kids)
        shift = cy - implied_root
        for nid, y in ys.items():
            x, yy = _clip(cx + depths[nid] * link, y + shift, inp.canvas)
            positions[nid] = Point(x, yy)

    stack_side([k for k in children[focus] if depths[k] < 0])
    stack_side([k for k in children[focus] if depths[k] > 0])

    return LayoutResult(positions=positions, link_length=link)


def force_layout(
    inp: LayoutInput,
    iterations: int | None = None,
    config: LayoutConfig | None = None,
    displacement_trace: list[float] | None = None,
) -> LayoutResult:
    """Spring-electrical simulation with pairwise repulsion k^2/d and edge
    attraction d^2/k, cooled linearly to zero.

    Start positions sit on a circle in input order, nudged by a seeded
    jitter, so the whole run is reproducible from (input, seed). Pinned
    nodes contribute forces but never move. Output is clipped to the canvas.
    """
    config = config or LayoutConfig()
    if iterations is None:
        iterations = config.iterations
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    _focus_of(inp)

    width, height = inp.canvas
    cx, cy = width / 2.0, height / 2.0
    ids = [nid for nid, _ in inp.nodes]
    n = len(ids)
    index = {nid: i for i, nid in enumerate(ids)}
    k = config.force_k_scale * math.sqrt(width * height / n)

    if n == 1:
        only = ids[0]
        pt = inp.pinned.get(only, Point(cx, cy))
        x, y = _clip(pt.x, pt.y, inp.canvas)
        return LayoutResult(positions={only: Point(x, y)}, link_length=k)

    rng = SplitMix64(inp.seed)
    pos = np.empty((n, 2), dtype=np.float64)
    radius = k * math.sqrt(n)
    jitter = k / config.jitter_divisor
    for i in range(n):
        phi = 2.0 * math.pi * i / n
        jx = (2.0 * rng.next_float() - 1.0) * jitter
        jy = (2.0 * rng.next_float() - 1.0) * jitter
        pos[i, 0] = cx + radius * math.cos(phi) + jx
        pos[i, 1] = cy + radius * math.sin(phi) + jy

    movable = np.ones(n, dtype=bool)
    for nid, point in inp.pinned.items():
        if nid in index:
            i = index[nid]
            pos[i, 0], pos[i, 1] = _clip(point.x, point.y, inp.canvas)
            movable[i] = False

    for a, b in inp.edges:
        if a not in index or b not in index:
            raise LayoutError(f"edge references unknown node: {a!r} -> {b!r}")
    edge_idx = np.array(
        [(index[a], index[b]) for a, b in inp.edges], dtype=np.intp
    ).reshape(-1, 2)

    t0 = min(width, height) / 10.0
    eps = 1e-9
    for step in range(iterations):
        t = t0 * (iterations - step) / iterations

        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.sqrt((delta * delta).sum(axis=2))
        np.fill_diagonal(dist, 1.0)
        coef = (k * k) / np.maximum(dist, eps) ** 2
        np.fill_diagonal(coef, 0.0)
        disp = (delta * coef[:, :, None]).sum(axis=1)

        if len(edge_idx):
            src, dst = edge_idx[:, 0], edge_idx[:, 1]
            evec = pos[src] - pos[dst]
            edist = np.maximum(np.sqrt((evec * evec).sum(axis=1)), eps)
            pull = (evec / edist[:, None]) * (edist ** 2 / k)[:, None]
            np.subtract.at(disp, src, pull)
            np.add.at(disp, dst, pull)

        length = np.maximum(np.sqrt((disp * disp).sum(axis=1)), eps)
        scale = np.minimum(length, t) / length
        move = disp * scale[:, None] * movable[:, None]
        before = pos.copy()
        pos += move
        pos[:, 0] = np.clip(pos[:, 0], 0.0, width)
        pos[:, 1] = np.clip(pos[:, 1], 0.0, height)
        if displacement_trace is not None:
            actual = pos - before
            displacement_trace.append(float(np.sqrt((actual * actual).sum(axis=1)).sum()))

    positions = {nid: Point(float(pos[i, 0]), float(pos[i, 1])) for nid, i in index.items()}
    for nid, point in inp.pinned.items():
        if nid in index:
            x, y = _clip(point.x, point.y, inp.canvas)
            positions[nid] = Point(x, y)
    return LayoutResult(positions=positions, link_length=k)


def compute_layout(inp: LayoutInput, mode: LayoutMode, config: LayoutConfig | None = None) -> LayoutResult:
    if mode is LayoutMode.RADIAL:
        return radial_layout(inp, config)
    if mode is LayoutMode.HORIZONTAL:
        return horizontal_layout(inp, config)
    return force_layout(inp, config=config)
