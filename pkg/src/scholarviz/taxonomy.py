"""Immutable concept taxonomy: IS-A edges, abbreviation expansions, translations.

Loaded from a UTF-8 JSON-Lines file, one concept per line:

    {"id": "ai", "label": "AI", "super": ["cs"],
     "expansions": ["Artificial Intelligence"], "translations": {"zh": "..."}}

Only broader-concept links are stored in the file; narrower-concept lists are
derived at load so the two directions can never disagree. After a successful
load the structure is immutable and safe for concurrent readers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO, Iterable, Union

from .errors import (
    CycleError,
    DanglingReferenceError,
    DuplicateIdError,
    DuplicateLabelError,
    MalformedRecordError,
    UnknownConceptError,
)

Source = Union[IO[bytes], IO[str], Iterable[str], Iterable[bytes]]


@dataclass(frozen=True)
class Concept:
    """One taxonomy node.

    ``super_ids`` preserves the order written in the data file; ``sub_ids``
    preserves the file order of the records that declared this concept as a
    broader term.
    """

    id: str
    label: str
    super_ids: tuple[str, ...] = ()
    sub_ids: tuple[str, ...] = ()
    expansions: tuple[str, ...] = ()
    translations: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class Taxonomy:
    """Validated concept set with a case-folded label index."""

    concepts: dict[str, Concept]
    label_index: dict[str, str]
    order: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.concepts)

    def get(self, concept_id: str) -> Concept:
        try:
            return self.concepts[concept_id]
        except KeyError:
            raise UnknownConceptError(concept_id) from None

    def lookup(self, label: str) -> str | None:
        """Case-insensitive exact-label match; None for unknown labels."""
        return self.label_index.get(label.casefold())

    def supers(self, concept_id: str, offset: int, limit: int) -> tuple[list[Concept], int]:
        """One page of broader concepts plus the count left after the page."""
        return self._page(self.get(concept_id).super_ids, offset, limit)

    def subs(self, concept_id: str, offset: int, limit: int) -> tuple[list[Concept], int]:
        """One page of narrower concepts plus the count left after the page."""
        return self._page(self.get(concept_id).sub_ids, offset, limit)

    def _page(self, ids: tuple[str, ...], offset: int, limit: int) -> tuple[list[Concept], int]:
        if offset < 0 or limit < 0:
            raise ValueError("offset and limit must be non-negative")
        page = [self.concepts[cid] for cid in ids[offset : offset + limit]]
        remaining = max(0, len(ids) - offset - limit)
        return page, remaining


def _iter_lines(source: Source) -> Iterable[str]:
    for raw in source:
        if isinstance(raw, bytes):
            yield raw.decode("utf-8")
        else:
            yield raw


def load_taxonomy(source: Source) -> Taxonomy:
    """Parse and validate a JSON-Lines concept stream.

    Raises MalformedRecordError (with line number), DuplicateIdError,
    DuplicateLabelError, DanglingReferenceError, or CycleError; any failure
    aborts the whole load.
    """
    records: dict[str, dict] = {}
    label_index: dict[str, str] = {}
    order: list[str] = []

    for line_no, line in enumerate(_iter_lines(source), start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedRecordError(line_no, f"invalid JSON ({exc.msg})") from None
        if not isinstance(rec, dict):
            raise MalformedRecordError(line_no, "record must be a JSON object")

        cid = rec.get("id")
        label = rec.get("label")
        if not isinstance(cid, str) or not cid:
            raise MalformedRecordError(line_no, "missing or empty 'id'")
        if not isinstance(label, str) or not label:
            raise MalformedRecordError(line_no, "missing or empty 'label'")
        supers = rec.get("super", [])
        if not isinstance(supers, list) or not all(isinstance(s, str) for s in supers):
            raise MalformedRecordError(line_no, "'super' must be a list of ids")
        expansions = rec.get("expansions", [])
        if not isinstance(expansions, list) or not all(isinstance(e, str) for e in expansions):
            raise MalformedRecordError(line_no, "'expansions' must be a list of strings")
        translations = rec.get("translations", {})
        if not isinstance(translations, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in translations.items()
        ):
            raise MalformedRecordError(line_no, "'translations' must map language codes to strings")

        if cid in records:
            raise DuplicateIdError(cid)
        folded = label.casefold()
        if folded in label_index:
            raise DuplicateLabelError(label)

        records[cid] = {
            "label": label,
            "super": list(supers),
            "expansions": list(expansions),
            "translations": dict(translations),
        }
        label_index[folded] = cid
        order.append(cid)

    # referential integrity, incl. self-loops surfacing as 1-cycles below
    for cid, rec in records.items():
        for sup in rec["super"]:
            if sup not in records:
                raise DanglingReferenceError(cid, sup)

    _check_acyclic(records)

    subs: dict[str, list[str]] = {cid: [] for cid in records}
    for cid in order:
        for sup in records[cid]["super"]:
            subs[sup].append(cid)

    concepts = {
        cid: Concept(
            id=cid,
            label=rec["label"],
            super_ids=tuple(rec["super"]),
            sub_ids=tuple(subs[cid]),
            expansions=tuple(rec["expansions"]),
            translations=rec["translations"],
        )
        for cid, rec in records.items()
    }
    return Taxonomy(concepts=concepts, label_index=label_index, order=tuple(order))


def _check_acyclic(records: dict[str, dict]) -> None:
    """Depth-first search over super edges; raises CycleError with the cycle path."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {cid: WHITE for cid in records}

    for start in records:
        if color[start] != WHITE:
            continue
        # iterative DFS keeping the gray path for cycle reconstruction
        stack: list[tuple[str, int]] = [(start, 0)]
        path: list[str] = []
        while stack:
            node, edge_idx = stack.pop()
            if edge_idx == 0:
                color[node] = GRAY
                path.append(node)
            supers = records[node]["super"]
            if edge_idx < len(supers):
                stack.append((node, edge_idx + 1))
                nxt = supers[edge_idx]
                if color[nxt] == GRAY:
                    cycle = path[path.index(nxt) :] + [nxt]
                    raise CycleError(cycle)
                if color[nxt] == WHITE:
                    stack.append((nxt, 0))
            else:
                color[node] = BLACK
                path.pop()


def load_taxonomy_file(path: str) -> Taxonomy:
    with open(path, "rb") as fh:
        return load_taxonomy(fh)


def dump_taxonomy(taxonomy: Taxonomy) -> str:
    """Re-export as JSON-Lines in the original file order.

    Loading the output reproduces super and sub adjacency exactly, order
    included.
    """
    lines = []
    for cid in taxonomy.order:
        concept = taxonomy.concepts[cid]
        rec: dict = {"id": concept.id, "label": concept.label, "super": list(concept.super_ids)}
        if concept.expansions:
            rec["expansions"] = list(concept.expansions)
        if concept.translations:
            rec["translations"] = dict(concept.translations)
        lines.append(json.dumps(rec, ensure_ascii=False))
    return "\n".join(lines) + ("\n" if lines else "")
