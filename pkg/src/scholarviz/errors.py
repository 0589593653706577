"""Exception types raised by the scholarviz library."""

from __future__ import annotations


class ScholarVizError(Exception):
    """Base class for all scholarviz errors."""


# --- taxonomy loading -------------------------------------------------------


class TaxonomyError(ScholarVizError):
    """A taxonomy file failed validation."""


class MalformedRecordError(TaxonomyError):
    def __init__(self, line_number: int, reason: str) -> None:
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason


class DuplicateIdError(TaxonomyError):
    def __init__(self, concept_id: str) -> None:
        super().__init__(f"duplicate concept id: {concept_id!r}")
        self.concept_id = concept_id


class DuplicateLabelError(TaxonomyError):
    def __init__(self, label: str) -> None:
        super().__init__(f"duplicate label (case-folded): {label!r}")
        self.label = label


class DanglingReferenceError(TaxonomyError):
    def __init__(self, concept_id: str, missing_id: str) -> None:
        super().__init__(f"concept {concept_id!r} names unknown super {missing_id!r}")
        self.concept_id = concept_id
        self.missing_id = missing_id


class CycleError(TaxonomyError):
    def __init__(self, cycle: list[str]) -> None:
        super().__init__("IS-A cycle: " + " -> ".join(cycle))
        self.cycle = cycle


class UnknownConceptError(ScholarVizError):
    def __init__(self, concept_id: str) -> None:
        super().__init__(f"unknown concept: {concept_id!r}")
        self.concept_id = concept_id


# --- query handling ---------------------------------------------------------


class EmptyQueryError(ScholarVizError):
    def __init__(self) -> None:
        super().__init__("query is empty after trimming whitespace")


# --- layout -----------------------------------------------------------------


class LayoutError(ScholarVizError):
    """Layout input violated a structural requirement."""


class MissingFocusError(LayoutError):
    def __init__(self, count: int) -> None:
        super().__init__(f"layout input must contain exactly one depth-0 node, got {count}")
        self.count = count


class InvalidDepthError(LayoutError):
    def __init__(self, parent: str, child: str) -> None:
        super().__init__(
            f"tree-mode edge {parent!r} -> {child!r} does not span exactly one depth level"
        )
        self.parent = parent
        self.child = child


# --- explorer sessions ------------------------------------------------------


class ExplorerError(ScholarVizError):
    """An explorer event was not legal for the current graph."""


class WrongResultKindError(ExplorerError):
    def __init__(self, kind: str) -> None:
        super().__init__(
            f"cannot start an explorer session from a {kind!r} result; "
            "expansion candidates must be resolved to a concrete concept first"
        )
        self.kind = kind


class UnknownNodeError(ExplorerError):
    def __init__(self, node_id: str) -> None:
        super().__init__(f"node {node_id!r} is not visible in this graph")
        self.node_id = node_id


class NotRecenterableError(ExplorerError):
    def __init__(self, node_id: str) -> None:
        super().__init__(f"node {node_id!r} is not a concept node and cannot become the focus")
        self.node_id = node_id


class WrongModeError(ExplorerError):
    def __init__(self, mode: str) -> None:
        super().__init__(f"operation requires force mode, current mode is {mode!r}")
        self.mode = mode


class UnknownSessionError(ScholarVizError):
    def __init__(self, session_id: str) -> None:
        super().__init__(f"unknown or evicted session: {session_id!r}")
        self.session_id = session_id


# --- scholar corpus ---------------------------------------------------------


class ScholarLoadError(ScholarVizError):
    """A scholar corpus file failed validation."""


class DuplicateScholarIdError(ScholarLoadError):
    def __init__(self, scholar_id: str) -> None:
        super().__init__(f"duplicate scholar id: {scholar_id!r}")
        self.scholar_id = scholar_id


class MalformedScholarError(ScholarLoadError):
    def __init__(self, line_number: int, reason: str) -> None:
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason
