"""Searchable scholar corpus with deterministic ranking.

Scholars carry weighted keywords; a query sums the weights of its keywords
per scholar and ranks by (score desc, citations desc, name asc, id asc),
which is a strict total order because ids are unique.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO, Iterable, Union

from .errors import DuplicateScholarIdError, MalformedScholarError

Source = Union[IO[bytes], IO[str], Iterable[str], Iterable[bytes]]


@dataclass(frozen=True)
class ScholarRecord:
    id: str
    name: str
    affiliation: str
    keywords: tuple[tuple[str, float], ...]  # (case-folded label, weight)
    citations: int
    paper_count: int

    def weight_of(self, keyword: str) -> float:
        for label, weight in self.keywords:
            if label == keyword:
                return weight
        return 0.0

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "affiliation": self.affiliation,
            "keywords": [{"label": label, "weight": weight} for label, weight in self.keywords],
            "citations": self.citations,
            "paper_count": self.paper_count,
        }


@dataclass(frozen=True)
class ScholarQuery:
    keywords: tuple[str, ...]
    offset: int = 0
    limit: int = 10

    def __post_init__(self) -> None:
        if not self.keywords:
            raise ValueError("query needs at least one keyword")
        if self.limit < 1:
            raise ValueError("limit must be >= 1")
        if self.offset < 0:
            raise ValueError("offset must be >= 0")


@dataclass(frozen=True)
class ScholarIndex:
    scholars: dict[str, ScholarRecord]
    postings: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def search(self, query: ScholarQuery) -> tuple[list[tuple[ScholarRecord, float]], int]:
        """One page of (scholar, score) plus the total match count.

        Unknown keywords contribute nothing; scholars only appear with a
        positive score. OR semantics: any matching keyword qualifies.
        """
        terms = [kw.casefold() for kw in query.keywords]
        scores: dict[str, float] = {}
        for term in terms:
            for sid in self.postings.get(term, ()):
                scores[sid] = scores.get(sid, 0.0) + self.scholars[sid].weight_of(term)

        matched = [
            (self.scholars[sid], score) for sid, score in scores.items() if score > 0.0
        ]
        matched.sort(key=lambda pair: (-pair[1], -pair[0].citations, pair[0].name, pair[0].id))
        page = matched[query.offset : query.offset + query.limit]
        return page, len(matched)


def _iter_lines(source: Source) -> Iterable[str]:
    for raw in source:
        yield raw.decode("utf-8") if isinstance(raw, bytes) else raw


def load_scholars(source: Source) -> ScholarIndex:
    """Parse a JSON-Lines scholar stream and build the inverted index."""
    scholars: dict[str, ScholarRecord] = {}
    postings: dict[str, list[str]] = {}

    for line_no, line in enumerate(_iter_lines(source), start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedScholarError(line_no, f"invalid JSON ({exc.msg})") from None
        if not isinstance(rec, dict):
            raise MalformedScholarError(line_no, "record must be a JSON object")

        sid = rec.get("id")
        name = rec.get("name")
        if not isinstance(sid, str) or not sid:
            raise MalformedScholarError(line_no, "missing or empty 'id'")
        if not isinstance(name, str) or not name:
            raise MalformedScholarError(line_no, "missing or empty 'name'")
        if sid in scholars:
            raise DuplicateScholarIdError(sid)

        raw_keywords = rec.get("keywords", [])
        if not isinstance(raw_keywords, list):
            raise MalformedScholarError(line_no, "'keywords' must be a list")
        keywords: list[tuple[str, float]] = []
        for entry in raw_keywords:
            if (
                not isinstance(entry, dict)
                or not isinstance(entry.get("label"), str)
                or not isinstance(entry.get("weight"), (int, float))
            ):
                raise MalformedScholarError(line_no, "keyword entries need 'label' and 'weight'")
            weight = float(entry["weight"])
            if weight < 0 or weight != weight or weight in (float("inf"), float("-inf")):
                raise MalformedScholarError(line_no, "keyword weights must be finite and >= 0")
            keywords.append((entry["label"].casefold(), weight))

        citations = rec.get("citations", 0)
        paper_count = rec.get("paper_count", 0)
        if not isinstance(citations, int) or citations < 0:
            raise MalformedScholarError(line_no, "'citations' must be a non-negative integer")
        if not isinstance(paper_count, int) or paper_count < 0:
            raise MalformedScholarError(line_no, "'paper_count' must be a non-negative integer")

        record = ScholarRecord(
            id=sid,
            name=name,
            affiliation=rec.get("affiliation", ""),
            keywords=tuple(keywords),
            citations=citations,
            paper_count=paper_count,
        )
        scholars[sid] = record
        for label, _ in record.keywords:
            postings.setdefault(label, [])
            if sid not in postings[label]:
                postings[label].append(sid)

    return ScholarIndex(
        scholars=scholars,
        postings={label: tuple(ids) for label, ids in postings.items()},
    )


def load_scholars_file(path: str) -> ScholarIndex:
    with open(path, "rb") as fh:
        return load_scholars(fh)
