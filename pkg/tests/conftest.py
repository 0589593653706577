"""Shared fixtures and snapshot invariant checks."""

from __future__ import annotations

import os

import pytest

from scholarviz import ServiceConfig, Taxonomy, load_scholars_file, load_taxonomy_file
from scholarviz.explorer import PALETTE, color_index_for
from scholarviz.explorer import Side as GraphSide

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
TAXONOMY_PATH = os.path.join(REPO_ROOT, "data", "taxonomy.jsonl")
SCHOLARS_PATH = os.path.join(REPO_ROOT, "data", "scholars.jsonl")
GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")


@pytest.fixture(scope="session")
def taxonomy() -> Taxonomy:
    return load_taxonomy_file(TAXONOMY_PATH)


@pytest.fixture(scope="session")
def scholar_index():
    return load_scholars_file(SCHOLARS_PATH)


@pytest.fixture(scope="session")
def service_config() -> ServiceConfig:
    return ServiceConfig(taxonomy_path=TAXONOMY_PATH, scholars_path=SCHOLARS_PATH)


@pytest.fixture()
def client(service_config):
    from fastapi.testclient import TestClient

    from scholarviz.service import create_app

    app = create_app(service_config)
    with TestClient(app) as test_client:
        yield test_client


def check_snapshot_invariants(snap: dict) -> None:
    """Assert every structural invariant of an explorer graph snapshot.

    Used after every step of the fuzz run and on every hammer response, so
    failures must carry enough context to reconstruct the bad state.
    """
    nodes = {n["id"]: n for n in snap["nodes"]}
    focus_id = snap["focus_node"]
    assert focus_id in nodes, "focus node missing from snapshot"
    focus = nodes[focus_id]
    assert focus["generation"] == 0
    assert focus["side"] == "focus"
    assert focus["depth"] == 0
    assert focus["state"] != "fresh", "focus must never be fresh"

    children: dict[str, list[str]] = {nid: [] for nid in nodes}
    parent_of: dict[str, str] = {}
    for edge in snap["edges"]:
        parent, child = edge["parent"], edge["child"]
        assert parent in nodes and child in nodes, f"dangling edge {edge}"
        assert child not in parent_of, f"node {child} has two parents"
        parent_of[child] = parent
        children[parent].append(child)
        # edge color equals the child's generation color
        assert edge["color_index"] == nodes[child]["color_index"], edge
        assert edge["color"] == PALETTE[edge["color_index"]]

    # forest rooted at the focus, generations increasing by exactly one
    for nid, node in nodes.items():
        if nid == focus_id:
            assert nid not in parent_of, "focus must not have a parent"
            continue
        assert nid in parent_of, f"node {nid} unreachable (no parent edge)"
        parent = nodes[parent_of[nid]]
        assert node["generation"] == parent["generation"] + 1, (node, parent)
        assert abs(node["depth"]) == abs(parent["depth"]) + 1, (node, parent)
        # walk to the root to guard against cycles
        seen = {nid}
        cursor = nid
        while cursor != focus_id:
            cursor = parent_of[cursor]
            assert cursor not in seen, f"cycle through {cursor}"
            seen.add(cursor)

    for nid, node in nodes.items():
        side = GraphSide(node["side"])
        expected_color = color_index_for(node["generation"], side)
        assert node["color_index"] == expected_color, node
        assert node["color"] == PALETTE[node["color_index"]]
        if node["side"] == "super":
            assert node["depth"] < 0, node
        elif node["side"] == "sub":
            assert node["depth"] > 0, node

        has_children = bool(children[nid])
        state = node["state"]
        if state == "expanded":
            assert has_children, f"expanded node {nid} has no visible children"
        else:
            assert not has_children, f"{state} node {nid} has visible children"

        if node["kind"] == "more":
            assert node["state"] == "fresh"
            assert node["more"] is not None
            assert node["more"]["next_offset"] >= 1
        else:
            assert node["more"] is None
        if node["kind"] == "concept":
            assert node["concept_id"], node

    for nid in snap["pinned"]:
        assert nid in nodes, f"pin on invisible node {nid}"


# --- acceptance summary lines -----------------------------------------------

_acceptance_results: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _acceptance_results[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, outcome in sorted(_acceptance_results.items()):
        terminalreporter.write_line(f"ACCEPTANCE {name}: {outcome}")
