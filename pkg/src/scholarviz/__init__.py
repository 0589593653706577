"""scholarviz: visual query system for scholar networks.

Concept taxonomy with abbreviation expansion and translations, three
deterministic graph layouts, an interactive explorer state machine, scholar
keyword search, and an HTTP/JSON service tying them together.
"""

from .config import ServiceConfig, load_config
from .explorer import (
    ExplorerGraph,
    ExplorerNode,
    NodeKind,
    NodeVisualState,
    SessionStore,
    Side,
    click,
    color_index_for,
    double_click,
    pin_node,
    set_mode,
    start_session,
    unpin_node,
)
from .layout import (
    LayoutConfig,
    LayoutInput,
    LayoutMode,
    LayoutResult,
    Point,
    compute_layout,
    force_layout,
    horizontal_layout,
    link_length_for,
    radial_layout,
)
from .query import (
    ConceptPage,
    ConceptRef,
    ExpandResult,
    ResultKind,
    classify_concept,
    expand_query,
    resolve_expansion,
)
from .scholars import ScholarIndex, ScholarQuery, ScholarRecord, load_scholars, load_scholars_file
from .taxonomy import Concept, Taxonomy, dump_taxonomy, load_taxonomy, load_taxonomy_file

__version__ = "0.1.0"

__all__ = [
    "Concept",
    "ConceptPage",
    "ConceptRef",
    "ExpandResult",
    "ExplorerGraph",
    "ExplorerNode",
    "LayoutConfig",
    "LayoutInput",
    "LayoutMode",
    "LayoutResult",
    "NodeKind",
    "NodeVisualState",
    "Point",
    "ResultKind",
    "ScholarIndex",
    "ScholarQuery",
    "ScholarRecord",
    "ServiceConfig",
    "SessionStore",
    "Side",
    "Taxonomy",
    "classify_concept",
    "click",
    "color_index_for",
    "compute_layout",
    "double_click",
    "dump_taxonomy",
    "expand_query",
    "force_layout",
    "horizontal_layout",
    "link_length_for",
    "load_config",
    "load_scholars",
    "load_scholars_file",
    "load_taxonomy",
    "load_taxonomy_file",
    "pin_node",
    "radial_layout",
    "resolve_expansion",
    "set_mode",
    "start_session",
    "unpin_node",
]
