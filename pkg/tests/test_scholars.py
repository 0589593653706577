"""Scholar search against a brute-force scan-and-sort oracle."""

from __future__ import annotations

import json

import pytest

from scholarviz import ScholarQuery, ScholarRecord, load_scholars
from scholarviz.errors import DuplicateScholarIdError, MalformedScholarError


def brute_force_search(records, keywords, offset=0, limit=10):
    """Independent oracle: linear scan, additive scores, full sort."""
    terms = [kw.casefold() for kw in keywords]
    scored = []
    for record in records:
        weights = dict(record.keywords)
        score = sum(weights.get(term, 0.0) for term in terms)
        if score > 0.0:
            scored.append((record, score))
    scored.sort(key=lambda pair: (-pair[1], -pair[0].citations, pair[0].name, pair[0].id))
    return scored[offset : offset + limit], len(scored)


def make_index(*records: dict):
    return load_scholars([json.dumps(r) for r in records])


def scholar(sid, name="A Name", keywords=(), citations=0, papers=1, affiliation="U"):
    return {
        "id": sid,
        "name": name,
        "affiliation": affiliation,
        "keywords": [{"label": k, "weight": w} for k, w in keywords],
        "citations": citations,
        "paper_count": papers,
    }


class TestLoad:
    def test_empty_stream(self):
        index = make_index()
        assert index.scholars == {}
        page, total = index.search(ScholarQuery(keywords=("anything",)))
        assert page == [] and total == 0

    def test_single_scholar_posting(self):
        index = make_index(scholar("s1", keywords=[("machine learning", 0.9)]))
        assert index.postings["machine learning"] == ("s1",)

    def test_labels_case_folded_at_load(self):
        index = make_index(scholar("s1", keywords=[("Machine Learning", 0.9)]))
        assert "machine learning" in index.postings
        page, _ = index.search(ScholarQuery(keywords=("MACHINE learning",)))
        assert page[0][0].id == "s1"

    def test_duplicate_id_rejected(self):
        with pytest.raises(DuplicateScholarIdError):
            make_index(scholar("s1"), scholar("s1"))

    @pytest.mark.parametrize(
        "record",
        [
            {"name": "No Id"},
            {"id": "s1"},
            {"id": "s1", "name": "X", "keywords": [{"label": "a"}]},
            {"id": "s1", "name": "X", "keywords": [{"label": "a", "weight": -1}]},
            {"id": "s1", "name": "X", "citations": -5},
            {"id": "s1", "name": "X", "keywords": "nope"},
        ],
    )
    def test_malformed_records(self, record):
        with pytest.raises(MalformedScholarError):
            make_index(record)

    def test_fixture_postings_match_linear_scan(self, scholar_index):
        records = list(scholar_index.scholars.values())
        for label, postings in scholar_index.postings.items():
            expected = [r.id for r in records if any(k == label for k, _ in r.keywords)]
            assert list(postings) == expected


class TestSearch:
    def test_single_match_score_is_weight(self):
        index = make_index(scholar("s1", keywords=[("ranking", 0.45)]))
        page, total = index.search(ScholarQuery(keywords=("ranking",)))
        assert total == 1
        assert page[0][1] == pytest.approx(0.45)

    def test_unknown_keyword_contributes_zero(self):
        index = make_index(scholar("s1", keywords=[("ranking", 0.45)]))
        page, total = index.search(ScholarQuery(keywords=("ranking", "zzz")))
        assert total == 1
        assert page[0][1] == pytest.approx(0.45)

    def test_only_positive_scores_returned(self):
        index = make_index(
            scholar("s1", keywords=[("ranking", 0.45)]),
            scholar("s2", keywords=[("clustering", 0.8)]),
        )
        _, total = index.search(ScholarQuery(keywords=("ranking",)))
        assert total == 1

    def test_citation_tie_break(self):
        index = make_index(
            scholar("s1", name="Zed", keywords=[("ranking", 0.5)], citations=10),
            scholar("s2", name="Abe", keywords=[("ranking", 0.5)], citations=90),
        )
        page, _ = index.search(ScholarQuery(keywords=("ranking",)))
        assert [r.id for r, _ in page] == ["s2", "s1"]

    def test_name_then_id_tie_break(self):
        index = make_index(
            scholar("s2", name="Same", keywords=[("ranking", 0.5)], citations=10),
            scholar("s1", name="Same", keywords=[("ranking", 0.5)], citations=10),
        )
        page, _ = index.search(ScholarQuery(keywords=("ranking",)))
        assert [r.id for r, _ in page] == ["s1", "s2"]

    def test_or_semantics_sum_scores(self):
        index = make_index(
            scholar("s1", keywords=[("ranking", 0.5), ("clustering", 0.3)]),
            scholar("s2", keywords=[("clustering", 0.6)]),
        )
        page, total = index.search(ScholarQuery(keywords=("ranking", "clustering")))
        assert total == 2
        assert page[0][0].id == "s1"
        assert page[0][1] == pytest.approx(0.8)

    def test_fixture_two_keyword_query_matches_oracle(self, scholar_index):
        records = list(scholar_index.scholars.values())
        expected, expected_total = brute_force_search(
            records, ("machine learning", "classification"), limit=25
        )
        page, total = scholar_index.search(
            ScholarQuery(keywords=("machine learning", "classification"), limit=25)
        )
        assert total == expected_total
        assert [(r.id, pytest.approx(s)) for r, s in expected] == [
            (r.id, s) for r, s in page
        ]

    def test_query_validation(self):
        with pytest.raises(ValueError):
            ScholarQuery(keywords=())
        with pytest.raises(ValueError):
            ScholarQuery(keywords=("x",), limit=0)
        with pytest.raises(ValueError):
            ScholarQuery(keywords=("x",), offset=-1)


class TestOracleEquivalence:
    def test_every_single_keyword(self, scholar_index):
        records = list(scholar_index.scholars.values())
        for label in sorted(scholar_index.postings):
            expected, expected_total = brute_force_search(records, (label,), limit=300)
            page, total = scholar_index.search(ScholarQuery(keywords=(label,), limit=300))
            assert total == expected_total, label
            assert [r.id for r, _ in page] == [r.id for r, _ in expected], label
            for (_, got), (_, want) in zip(page, expected):
                assert got == pytest.approx(want)

    def test_ranking_is_total_order(self, scholar_index):
        records = list(scholar_index.scholars.values())
        for label in sorted(scholar_index.postings):
            page, _ = scholar_index.search(ScholarQuery(keywords=(label,), limit=300))
            keys = [(-s, -r.citations, r.name, r.id) for r, s in page]
            assert len(set(keys)) == len(keys)
            assert keys == sorted(keys)

    def test_pagination_concatenation(self, scholar_index):
        full, total = scholar_index.search(
            ScholarQuery(keywords=("machine learning",), limit=1000)
        )
        for limit in (1, 3, 7, 50):
            rebuilt = []
            offset = 0
            while offset < total:
                page, page_total = scholar_index.search(
                    ScholarQuery(keywords=("machine learning",), offset=offset, limit=limit)
                )
                assert page_total == total
                rebuilt.extend(page)
                offset += limit
            assert [r.id for r, _ in rebuilt] == [r.id for r, _ in full]


class TestRecord:
    def test_weight_of(self):
        record = ScholarRecord(
            id="s1", name="N", affiliation="U",
            keywords=(("ranking", 0.5),), citations=1, paper_count=2,
        )
        assert record.weight_of("ranking") == 0.5
        assert record.weight_of("absent") == 0.0

    def test_to_dict_shape(self):
        record = ScholarRecord(
            id="s1", name="N", affiliation="U",
            keywords=(("ranking", 0.5),), citations=1, paper_count=2,
        )
        assert record.to_dict() == {
            "id": "s1",
            "name": "N",
            "affiliation": "U",
            "keywords": [{"label": "ranking", "weight": 0.5}],
            "citations": 1,
            "paper_count": 2,
        }
