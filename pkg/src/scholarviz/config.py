"""Service configuration: one TOML file plus environment overrides.

Environment variables override the file for deploy-time values:
SCHOLARVIZ_HOST, SCHOLARVIZ_PORT, SCHOLARVIZ_TAXONOMY, SCHOLARVIZ_SCHOLARS.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace

import tomli

from .layout import LayoutConfig


@dataclass(frozen=True)
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8040
    taxonomy_path: str = "data/taxonomy.jsonl"
    scholars_path: str = "data/scholars.jsonl"
    page_size: int = 6
    session_capacity: int = 1024
    seed: int = 42
    canvas: tuple[float, float] = (1200.0, 800.0)
    layout: LayoutConfig = field(default_factory=LayoutConfig)

    def validate(self) -> None:
        if self.page_size < 1:
            raise ValueError("page_size must be >= 1")
        if self.session_capacity < 1:
            raise ValueError("session_capacity must be >= 1")
        if self.canvas[0] <= 0 or self.canvas[1] <= 0:
            raise ValueError("canvas dimensions must be positive")
        lay = self.layout
        if min(lay.link_min, lay.link_max, lay.gap, lay.force_k_scale, lay.jitter_divisor) <= 0:
            raise ValueError("layout constants must be positive")
        if lay.link_min > lay.link_max:
            raise ValueError("link_min must not exceed link_max")
        if lay.iterations < 1:
            raise ValueError("iterations must be >= 1")


def load_config(path: str | None = None) -> ServiceConfig:
    """Read the TOML file (if given), then apply environment overrides."""
    config = ServiceConfig()
    if path is not None:
        with open(path, "rb") as fh:
            doc = tomli.load(fh)
        service = doc.get("service", {})
        data = doc.get("data", {})
        canvas = doc.get("canvas", {})
        layout_doc = doc.get("layout", {})
        config = ServiceConfig(
            host=service.get("host", config.host),
            port=int(service.get("port", config.port)),
            taxonomy_path=data.get("taxonomy", config.taxonomy_path),
            scholars_path=data.get("scholars", config.scholars_path),
            page_size=int(service.get("page_size", config.page_size)),
            session_capacity=int(service.get("session_capacity", config.session_capacity)),
            seed=int(service.get("seed", config.seed)),
            canvas=(
                float(canvas.get("width", config.canvas[0])),
                float(canvas.get("height", config.canvas[1])),
            ),
            layout=LayoutConfig(
                link_min=float(layout_doc.get("link_min", config.layout.link_min)),
                link_max=float(layout_doc.get("link_max", config.layout.link_max)),
                gap=float(layout_doc.get("gap", config.layout.gap)),
                iterations=int(layout_doc.get("iterations", config.layout.iterations)),
                baseline_count=int(layout_doc.get("baseline_count", config.layout.baseline_count)),
                force_k_scale=float(layout_doc.get("force_k_scale", config.layout.force_k_scale)),
                jitter_divisor=float(layout_doc.get("jitter_divisor", config.layout.jitter_divisor)),
                guard_gap_deg=float(layout_doc.get("guard_gap_deg", config.layout.guard_gap_deg)),
            ),
        )

    env = os.environ
    overrides: dict = {}
    if "SCHOLARVIZ_HOST" in env:
        overrides["host"] = env["SCHOLARVIZ_HOST"]
    if "SCHOLARVIZ_PORT" in env:
        overrides["port"] = int(env["SCHOLARVIZ_PORT"])
    if "SCHOLARVIZ_TAXONOMY" in env:
        overrides["taxonomy_path"] = env["SCHOLARVIZ_TAXONOMY"]
    if "SCHOLARVIZ_SCHOLARS" in env:
        overrides["scholars_path"] = env["SCHOLARVIZ_SCHOLARS"]
    if overrides:
        config = replace(config, **overrides)

    config.validate()
    return config
