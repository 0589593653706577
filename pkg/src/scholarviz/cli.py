"""Operator command line: validate data files, generate fixtures, run the
service, and export one-shot layouts to SVG/JSON for headless checks.

Exit codes: 0 success, 1 validation failure, 2 I/O error.
"""

from __future__ import annotations

import json
import sys

import click

from . import explorer, fixtures
from .config import load_config
from .errors import ScholarLoadError, TaxonomyError
from .layout import LayoutMode, compute_layout
from .query import ResultKind, resolve_expansion
from .scholars import load_scholars_file
from .svg import render_svg
from .taxonomy import load_taxonomy_file

EXIT_VALIDATION = 1
EXIT_IO = 2


@click.group()
def main() -> None:
    """Visual query system for scholar networks."""


@main.command()
@click.argument("taxonomy_path", type=click.Path())
@click.argument("scholars_path", type=click.Path())
def validate(taxonomy_path: str, scholars_path: str) -> None:
    """Validate a taxonomy file and a scholar corpus file."""
    failed = False
    try:
        taxonomy = load_taxonomy_file(taxonomy_path)
        click.echo(f"taxonomy: OK ({len(taxonomy)} concepts)")
    except TaxonomyError as exc:
        click.echo(f"taxonomy: INVALID — {exc}")
        failed = True
    except OSError as exc:
        click.echo(f"taxonomy: cannot read — {exc}")
        sys.exit(EXIT_IO)

    try:
        index = load_scholars_file(scholars_path)
        click.echo(f"scholars: OK ({len(index.scholars)} records)")
    except ScholarLoadError as exc:
        click.echo(f"scholars: INVALID — {exc}")
        failed = True
    except OSError as exc:
        click.echo(f"scholars: cannot read — {exc}")
        sys.exit(EXIT_IO)

    sys.exit(EXIT_VALIDATION if failed else 0)


@main.command()
@click.option("--config", "config_path", type=click.Path(), default=None, help="TOML config file.")
@click.option("--host", default=None, help="Override listen host.")
@click.option("--port", type=int, default=None, help="Override listen port.")
def serve(config_path: str | None, host: str | None, port: int | None) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    try:
        config = load_config(config_path)
    except OSError as exc:
        click.echo(f"cannot read config: {exc}", err=True)
        sys.exit(EXIT_IO)
    try:
        app = create_app(config)
    except FileNotFoundError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_IO)
    uvicorn.run(app, host=host or config.host, port=port or config.port, log_level="info")


@main.command()
@click.argument("query")
@click.option("--mode", type=click.Choice([m.value for m in LayoutMode]), default="radial")
@click.option("--out", "out_path", type=click.Path(), required=True, help="SVG output path.")
@click.option("--json-out", "json_path", type=click.Path(), default=None,
              help="Also write the layout as JSON.")
@click.option("--config", "config_path", type=click.Path(), default=None)
def export(query: str, mode: str, out_path: str, json_path: str | None,
           config_path: str | None) -> None:
    """Lay out the explorer graph for QUERY and write it as SVG."""
    try:
        config = load_config(config_path)
        taxonomy = load_taxonomy_file(config.taxonomy_path)
    except OSError as exc:
        click.echo(f"cannot read input: {exc}", err=True)
        sys.exit(EXIT_IO)
    except TaxonomyError as exc:
        click.echo(f"invalid taxonomy: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)

    result = resolve_expansion(query, taxonomy, config.page_size)
    if result.kind is ResultKind.NOT_FOUND:
        click.echo(f"unknown keyword: {query!r}", err=True)
        sys.exit(EXIT_VALIDATION)

    graph = explorer.start_session(result, LayoutMode(mode), config.page_size, session_id="export")
    layout = compute_layout(
        graph.layout_input(config.canvas, config.seed), graph.layout_mode, config.layout
    )

    try:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(render_svg(graph, layout, config.canvas))
        if json_path:
            with open(json_path, "w", encoding="utf-8") as fh:
                json.dump(
                    {"mode": mode, "snapshot": graph.to_dict(), **layout.to_dict()},
                    fh, ensure_ascii=False, indent=2,
                )
                fh.write("\n")
    except OSError as exc:
        click.echo(f"cannot write output: {exc}", err=True)
        sys.exit(EXIT_IO)
    click.echo(f"wrote {out_path}")


@main.command("gen-fixtures")
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--count", type=int, default=200, show_default=True, help="Scholar record count.")
@click.option("--out-dir", type=click.Path(), default="data", show_default=True)
def gen_fixtures(seed: int, count: int, out_dir: str) -> None:
    """Write the curated taxonomy and a seeded synthetic scholar corpus."""
    import os

    try:
        os.makedirs(out_dir, exist_ok=True)
        taxonomy_path = os.path.join(out_dir, "taxonomy.jsonl")
        scholars_path = os.path.join(out_dir, "scholars.jsonl")
        with open(taxonomy_path, "w", encoding="utf-8") as fh:
            fh.write(fixtures.taxonomy_jsonl())
        with open(scholars_path, "w", encoding="utf-8") as fh:
            fh.write(fixtures.scholars_jsonl(seed, count))
    except OSError as exc:
        click.echo(f"cannot write fixtures: {exc}", err=True)
        sys.exit(EXIT_IO)
    click.echo(f"wrote {taxonomy_path} and {scholars_path} (seed={seed}, count={count})")


if __name__ == "__main__":
    main()
