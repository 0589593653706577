"""Keyword search over the scholar corpus with deterministic ranking.

Run:  python demos/04_scholar_search.py
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from scholarviz import ScholarQuery, load_scholars_file

index = load_scholars_file(
    os.path.join(os.path.dirname(__file__), "..", "data", "scholars.jsonl")
)
print(f"corpus: {len(index.scholars)} scholars, {len(index.postings)} distinct keywords\n")


def run(keywords, limit=8):
    page, total = index.search(ScholarQuery(keywords=keywords, limit=limit))
    print(f"search {' + '.join(keywords)!r}: {total} matches")
    for record, score in page:
        print(
            f"  {score:5.2f}  {record.name:<18} {record.affiliation:<32}"
            f" citations={record.citations:>6} papers={record.paper_count:>3}"
        )
    print()


# Single keyword: score is the scholar's weight for it.
run(("machine learning",))

# Several keywords combine with OR semantics and summed weights, so a
# scholar covering both outranks equal single-keyword specialists.
run(("machine learning", "classification"))

# Ties on score fall back to citations, then name, then id — a total
# order, so pagination is stable:
page_one, total = index.search(ScholarQuery(keywords=("machine learning",), limit=5))
page_two, _ = index.search(ScholarQuery(keywords=("machine learning",), offset=5, limit=5))
print(f"pages of 5 over {total} matches:")
print("  page 1:", [r.name for r, _ in page_one])
print("  page 2:", [r.name for r, _ in page_two])
