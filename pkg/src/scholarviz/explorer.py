"""Server-held explorer graphs: click to expand/collapse, double-click to
recenter, MORE nodes to page in siblings.

Node identity is per graph position, not per concept: expanding two different
nodes that share a narrower term yields two distinct graph nodes, which keeps
each side a clean tree and keeps pagination counters exact. Visual state
follows the click semantics: untouched nodes are solid in their ring color,
expanded leaves go hollow in their own color, expanded inner nodes go hollow
red, collapsed inner nodes solid red.
"""

from __future__ import annotations

import threading
import uuid
from collections import OrderedDict
from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    NotRecenterableError,
    UnknownNodeError,
    UnknownSessionError,
    WrongModeError,
    WrongResultKindError,
)
from .layout import LayoutInput, LayoutMode, Point
from .query import ExpandResult, ResultKind, classify_concept
from .taxonomy import Taxonomy

#: Palette by index; generation colors cycle after brown, red is reserved for
#: the expanded/collapsed markers and never assigned to a generation.
PALETTE = ("gray", "blue", "orange", "green", "brown", "purple", "teal", "olive", "red")
RED_INDEX = PALETTE.index("red")
_CYCLE = (PALETTE.index("purple"), PALETTE.index("teal"), PALETTE.index("olive"))


class NodeVisualState(str, Enum):
    FRESH = "fresh"
    EXPANDED_LEAF = "expanded_leaf"
    EXPANDED = "expanded"
    COLLAPSED = "collapsed"


class NodeKind(str, Enum):
    CONCEPT = "concept"
    MORE = "more"
    TRANSLATION = "translation"


class Side(str, Enum):
    FOCUS = "focus"
    SUPER = "super"
    SUB = "sub"


def color_index_for(generation: int, side: Side) -> int:
    """First ring is blue above / orange below; deeper rings go green,
    brown, then cycle purple/teal/olive."""
    if generation == 0:
        return 0
    if generation == 1:
        return 1 if side is Side.SUPER else 2
    if generation == 2:
        return 3
    if generation == 3:
        return 4
    return _CYCLE[(generation - 4) % 3]


@dataclass
class ExplorerNode:
    id: str
    kind: NodeKind
    label: str
    side: Side
    depth: int
    generation: int
    state: NodeVisualState
    color_index: int
    concept_id: str | None = None
    more_parent: str | None = None
    more_relation: str | None = None
    next_offset: int | None = None
    language: str | None = None

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind.value,
            "concept_id": self.concept_id,
            "label": self.label,
            "side": self.side.value,
            "depth": self.depth,
            "generation": self.generation,
            "state": self.state.value,
            "color": PALETTE[self.color_index],
            "color_index": self.color_index,
            "more": (
                {
                    "parent": self.more_parent,
                    "relation": self.more_relation,
                    "next_offset": self.next_offset,
                }
                if self.kind is NodeKind.MORE
                else None
            ),
            "language": self.language,
        }


@dataclass
class _HiddenSubtree:
    nodes: list[ExplorerNode]
    parents: dict[str, tuple[str, int]]  # child id -> (parent id, edge color)


@dataclass
class ExplorerGraph:
    session_id: str
    focus_concept: str
    layout_mode: LayoutMode
    nodes: dict[str, ExplorerNode] = field(default_factory=dict)
    parents: dict[str, tuple[str, int]] = field(default_factory=dict)
    pins: dict[str, Point] = field(default_factory=dict)
    hidden: dict[str, _HiddenSubtree] = field(default_factory=dict)
    next_index: int = 0
    focus_node_id: str = "n0"

    def new_node_id(self) -> str:
        nid = f"n{self.next_index}"
        self.next_index += 1
        return nid

    def node(self, node_id: str) -> ExplorerNode:
        try:
            return self.nodes[node_id]
        except KeyError:
            raise UnknownNodeError(node_id) from None

    def children_of(self, node_id: str) -> list[str]:
        """Visible children in creation order (ids are monotonic)."""
        kids = [cid for cid, (pid, _) in self.parents.items() if pid == node_id]
        return sorted(kids, key=_id_key)

    def to_dict(self) -> dict:
        node_ids = sorted(self.nodes, key=_id_key)
        return {
            "session_id": self.session_id,
            "focus": self.focus_concept,
            "focus_node": self.focus_node_id,
            "layout_mode": self.layout_mode.value,
            "nodes": [self.nodes[nid].to_dict() for nid in node_ids],
            "edges": [
                {
                    "parent": self.parents[nid][0],
                    "child": nid,
                    "color": PALETTE[self.parents[nid][1]],
                    "color_index": self.parents[nid][1],
                }
                for nid in node_ids
                if nid in self.parents
            ],
            "pinned": {
                nid: self.pins[nid].to_dict()
                for nid in sorted(self.pins, key=_id_key)
                if nid in self.nodes
            },
        }

    def layout_input(self, canvas: tuple[float, float], seed: int) -> LayoutInput:
        node_ids = sorted(self.nodes, key=_id_key)
        return LayoutInput(
            nodes=tuple((nid, self.nodes[nid].depth) for nid in node_ids),
            edges=tuple(
                (self.parents[nid][0], nid) for nid in node_ids if nid in self.parents
            ),
            canvas=canvas,
            seed=seed,
            pinned={nid: p for nid, p in self.pins.items() if nid in self.nodes},
        )


def _id_key(node_id: str) -> int:
    return int(node_id[1:])


def _outward_depth(side: Side, depth: int) -> int:
    return depth - 1 if side is Side.SUPER else depth + 1


def _append_page(
    graph: ExplorerGraph,
    parent_id: str,
    side: Side,
    generation: int,
    items,
    remaining: int,
    relation: str,
    next_offset: int,
) -> None:
    parent = graph.nodes[parent_id]
    depth = _outward_depth(side, parent.depth)
    color = color_index_for(generation, side)
    for ref in items:
        node = ExplorerNode(
            id=graph.new_node_id(),
            kind=NodeKind.CONCEPT,
            concept_id=ref.id,
            label=ref.label,
            side=side,
            depth=depth,
            generation=generation,
            state=NodeVisualState.FRESH,
            color_index=color,
        )
        graph.nodes[node.id] = node
        graph.parents[node.id] = (parent_id, color)
    if remaining > 0:
        more = ExplorerNode(
            id=graph.new_node_id(),
            kind=NodeKind.MORE,
            label="MORE",
            side=side,
            depth=depth,
            generation=generation,
            state=NodeVisualState.FRESH,
            color_index=color,
            more_parent=parent_id,
            more_relation=relation,
            next_offset=next_offset,
        )
        graph.nodes[more.id] = more
        graph.parents[more.id] = (parent_id, color)


def start_session(
    result: ExpandResult,
    mode: LayoutMode,
    page_size: int,
    session_id: str | None = None,
) -> ExplorerGraph:
    """Build the initial graph for a classified (non-expansions) result."""
    if result.kind not in (ResultKind.CONCEPT, ResultKind.SUPERS_ONLY, ResultKind.TRANSLATION_ONLY):
        raise WrongResultKindError(result.kind.value)
    assert result.focus is not None

    graph = ExplorerGraph(
        session_id=session_id or uuid.uuid4().hex,
        focus_concept=result.focus.id,
        layout_mode=mode,
    )
    focus = ExplorerNode(
        id=graph.new_node_id(),
        kind=NodeKind.CONCEPT,
        concept_id=result.focus.id,
        label=result.focus.label,
        side=Side.FOCUS,
        depth=0,
        generation=0,
        state=NodeVisualState.EXPANDED,
        color_index=0,
    )
    graph.nodes[focus.id] = focus
    graph.focus_node_id = focus.id

    _append_page(
        graph, focus.id, Side.SUPER, 1,
        result.supers.items, result.supers.remaining, "supers", page_size,
    )
    _append_page(
        graph, focus.id, Side.SUB, 1,
        result.subs.items, result.subs.remaining, "subs", page_size,
    )

    if result.kind is ResultKind.TRANSLATION_ONLY and result.translation is not None:
        language, text = result.translation
        color = color_index_for(1, Side.SUB)
        note = ExplorerNode(
            id=graph.new_node_id(),
            kind=NodeKind.TRANSLATION,
            label=text,
            side=Side.SUB,
            depth=1,
            generation=1,
            state=NodeVisualState.FRESH,
            color_index=color,
            language=language,
        )
        graph.nodes[note.id] = note
        graph.parents[note.id] = (focus.id, color)

    if not graph.children_of(focus.id):
        focus.state = NodeVisualState.EXPANDED_LEAF
    return graph


def _descendants(graph: ExplorerGraph, node_id: str) -> list[str]:
    out: list[str] = []
    stack = graph.children_of(node_id)
    while stack:
        nid = stack.pop(0)
        out.append(nid)
        stack.extend(graph.children_of(nid))
    return out


def _collapse(graph: ExplorerGraph, node_id: str) -> None:
    hidden = _HiddenSubtree(nodes=[], parents={})
    for nid in _descendants(graph, node_id):
        hidden.nodes.append(graph.nodes.pop(nid))
        hidden.parents[nid] = graph.parents.pop(nid)
    graph.hidden[node_id] = hidden
    graph.nodes[node_id].state = NodeVisualState.COLLAPSED


def _restore(graph: ExplorerGraph, node_id: str) -> None:
    hidden = graph.hidden.pop(node_id)
    for node in hidden.nodes:
        graph.nodes[node.id] = node
        graph.parents[node.id] = hidden.parents[node.id]
    graph.nodes[node_id].state = NodeVisualState.EXPANDED


def _consume_more(graph: ExplorerGraph, more: ExplorerNode, taxonomy: Taxonomy, page_size: int) -> None:
    parent = graph.node(more.more_parent)
    assert parent.concept_id is not None and more.next_offset is not None
    fetch = taxonomy.supers if more.more_relation == "supers" else taxonomy.subs
    page, remaining = fetch(parent.concept_id, more.next_offset, page_size)

    del graph.nodes[more.id]
    del graph.parents[more.id]
    graph.pins.pop(more.id, None)

    _append_page(
        graph, parent.id, more.side, more.generation,
        page, remaining, more.more_relation, more.next_offset + page_size,
    )


def click(graph: ExplorerGraph, node_id: str, taxonomy: Taxonomy, page_size: int) -> ExplorerGraph:
    """Apply the single-click transition table to one visible node."""
    node = graph.node(node_id)

    if node.kind is NodeKind.MORE:
        _consume_more(graph, node, taxonomy, page_size)
        return graph
    if node.kind is NodeKind.TRANSLATION:
        return graph

    if node.state is NodeVisualState.FRESH:
        assert node.concept_id is not None
        page, remaining = taxonomy.subs(node.concept_id, 0, page_size)
        if not page:
            node.state = NodeVisualState.EXPANDED_LEAF
        else:
            node.state = NodeVisualState.EXPANDED
            _append_page(
                graph, node.id, node.side, node.generation + 1,
                page, remaining, "subs", page_size,
            )
    elif node.state is NodeVisualState.EXPANDED:
        _collapse(graph, node_id)
    elif node.state is NodeVisualState.COLLAPSED:
        _restore(graph, node_id)
    # EXPANDED_LEAF: nothing to do
    return graph


def double_click(graph: ExplorerGraph, node_id: str, taxonomy: Taxonomy, page_size: int) -> ExplorerGraph:
    """Recenter on a concept node, discarding all expansion state."""
    node = graph.node(node_id)
    if node.kind is not NodeKind.CONCEPT:
        raise NotRecenterableError(node_id)
    assert node.concept_id is not None
    result = classify_concept(taxonomy, node.concept_id, page_size)
    return start_session(result, graph.layout_mode, page_size, session_id=graph.session_id)


def set_mode(graph: ExplorerGraph, mode: LayoutMode) -> ExplorerGraph:
    graph.layout_mode = mode
    return graph


def pin_node(
    graph: ExplorerGraph, node_id: str, point: Point, canvas: tuple[float, float]
) -> ExplorerGraph:
    if graph.layout_mode is not LayoutMode.FORCE:
        raise WrongModeError(graph.layout_mode.value)
    graph.node(node_id)
    x = min(max(point.x, 0.0), canvas[0])
    y = min(max(point.y, 0.0), canvas[1])
    graph.pins[node_id] = Point(x, y)
    return graph


def unpin_node(graph: ExplorerGraph, node_id: str) -> ExplorerGraph:
    if graph.layout_mode is not LayoutMode.FORCE:
        raise WrongModeError(graph.layout_mode.value)
    graph.node(node_id)
    graph.pins.pop(node_id, None)
    return graph


@dataclass
class Session:
    graph: ExplorerGraph
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    """LRU-bounded session map; events on one session are serialized by its
    lock while distinct sessions proceed concurrently."""

    def __init__(self, capacity: int = 1024) -> None:
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self._capacity = capacity
        self._lock = threading.Lock()
        self._sessions: OrderedDict[str, Session] = OrderedDict()

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)

    def add(self, graph: ExplorerGraph) -> Session:
        session = Session(graph=graph)
        with self._lock:
            self._sessions[graph.session_id] = session
            self._sessions.move_to_end(graph.session_id)
            while len(self._sessions) > self._capacity:
                self._sessions.popitem(last=False)
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            try:
                session = self._sessions[session_id]
            except KeyError:
                raise UnknownSessionError(session_id) from None
            self._sessions.move_to_end(session_id)
            return session
