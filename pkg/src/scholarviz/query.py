"""Query expansion: turn a raw keyword into one of five response shapes.

A query can hit an abbreviation (offer its expansions for disambiguation), a
concept with narrower terms (full view), a concept with only broader terms,
a concept that carries nothing but a translation, or nothing at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import EmptyQueryError
from .taxonomy import Taxonomy

DEFAULT_TRANSLATION_LANGUAGE = "zh"


class ResultKind(str, Enum):
    EXPANSIONS = "expansions"
    CONCEPT = "concept"
    SUPERS_ONLY = "supers_only"
    TRANSLATION_ONLY = "translation_only"
    NOT_FOUND = "not_found"


@dataclass(frozen=True)
class ConceptRef:
    id: str
    label: str


@dataclass(frozen=True)
class ConceptPage:
    items: tuple[ConceptRef, ...] = ()
    remaining: int = 0


@dataclass(frozen=True)
class ExpandResult:
    kind: ResultKind
    query: str
    focus: ConceptRef | None = None
    expansions: tuple[tuple[str, str | None], ...] = ()
    supers: ConceptPage = ConceptPage()
    subs: ConceptPage = ConceptPage()
    translation: tuple[str, str] | None = None

    def to_dict(self) -> dict:
        """Stable JSON shape; field order is part of the API contract."""
        return {
            "kind": self.kind.value,
            "query": self.query,
            "focus": {"id": self.focus.id, "label": self.focus.label} if self.focus else None,
            "expansions": [
                {"label": label, "concept_id": cid} for label, cid in self.expansions
            ],
            "supers": _page_to_dict(self.supers),
            "subs": _page_to_dict(self.subs),
            "translation": (
                {"language": self.translation[0], "text": self.translation[1]}
                if self.translation
                else None
            ),
        }


def _page_to_dict(page: ConceptPage) -> dict:
    return {
        "items": [{"id": ref.id, "label": ref.label} for ref in page.items],
        "remaining": page.remaining,
    }


def _translation_of(taxonomy: Taxonomy, concept_id: str) -> tuple[str, str] | None:
    """Preferred translation: the default language if present, else the
    lexicographically first code (deterministic)."""
    translations = taxonomy.get(concept_id).translations
    if not translations:
        return None
    if DEFAULT_TRANSLATION_LANGUAGE in translations:
        return DEFAULT_TRANSLATION_LANGUAGE, translations[DEFAULT_TRANSLATION_LANGUAGE]
    code = min(translations)
    return code, translations[code]


def _page_refs(taxonomy: Taxonomy, concept_id: str, relation: str, page_size: int) -> ConceptPage:
    fetch = taxonomy.supers if relation == "supers" else taxonomy.subs
    concepts, remaining = fetch(concept_id, 0, page_size)
    return ConceptPage(
        items=tuple(ConceptRef(c.id, c.label) for c in concepts),
        remaining=remaining,
    )


def classify_concept(taxonomy: Taxonomy, concept_id: str, page_size: int, query: str | None = None) -> ExpandResult:
    """Build the result for a known concept, never offering expansions.

    Classification: narrower terms win (full concept view, broader terms
    included), then broader-terms-only, then translation-only. A concept with
    no relations and no translation still reports as a concept with empty
    pages rather than a miss.
    """
    concept = taxonomy.get(concept_id)
    focus = ConceptRef(concept.id, concept.label)
    q = query if query is not None else concept.label
    translation = _translation_of(taxonomy, concept_id)

    if concept.sub_ids:
        return ExpandResult(
            kind=ResultKind.CONCEPT,
            query=q,
            focus=focus,
            supers=_page_refs(taxonomy, concept_id, "supers", page_size),
            subs=_page_refs(taxonomy, concept_id, "subs", page_size),
            translation=translation,
        )
    if concept.super_ids:
        return ExpandResult(
            kind=ResultKind.SUPERS_ONLY,
            query=q,
            focus=focus,
            supers=_page_refs(taxonomy, concept_id, "supers", page_size),
            translation=translation,
        )
    if translation is not None:
        return ExpandResult(
            kind=ResultKind.TRANSLATION_ONLY,
            query=q,
            focus=focus,
            translation=translation,
        )
    return ExpandResult(kind=ResultKind.CONCEPT, query=q, focus=focus)


def expand_query(q: str, taxonomy: Taxonomy, page_size: int) -> ExpandResult:
    """Classify a raw query string.

    An abbreviation with recorded expansions always yields the candidate
    list first, even when the abbreviation is also a full concept of its own;
    picking a candidate goes through resolve_expansion.
    """
    q = q.strip()
    if not q:
        raise EmptyQueryError()

    concept_id = taxonomy.lookup(q)
    if concept_id is None:
        return ExpandResult(kind=ResultKind.NOT_FOUND, query=q)

    concept = taxonomy.get(concept_id)
    if concept.expansions:
        return ExpandResult(
            kind=ResultKind.EXPANSIONS,
            query=q,
            focus=ConceptRef(concept.id, concept.label),
            expansions=tuple(
                (label, taxonomy.lookup(label)) for label in concept.expansions
            ),
        )
    return classify_concept(taxonomy, concept_id, page_size, query=q)


def resolve_expansion(choice: str, taxonomy: Taxonomy, page_size: int) -> ExpandResult:
    """Classify a picked expansion candidate.

    Never re-enters the expansions shape. Candidates may name terms outside
    the taxonomy; those come back as a miss with the label echoed.
    """
    choice = choice.strip()
    if not choice:
        raise EmptyQueryError()

    concept_id = taxonomy.lookup(choice)
    if concept_id is None:
        return ExpandResult(kind=ResultKind.NOT_FOUND, query=choice)
    return classify_concept(taxonomy, concept_id, page_size, query=choice)
