"""Locating and loading the bundled demo data.

``LEXKIT_DATA`` points at a replacement data directory holding files with the
same names as the bundled ones.
"""

from __future__ import annotations

import os
from pathlib import Path

from lexkit.msd import TagsetSpec, load_tagset
from lexkit.registry import Registry, load

REGISTRY_FILE = "demo.registry"
DEFAULT_LANGUAGE = "de"


def data_dir() -> Path:
    override = os.environ.get("LEXKIT_DATA")
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


def data_file(name: str) -> Path:
    return data_dir() / name


def registry_path() -> Path:
    return data_file(REGISTRY_FILE)


def tagset_path(language: str = DEFAULT_LANGUAGE) -> Path:
    """Bundled tagset for ``language``, falling back to the German demo."""
    path = data_file(f"multext-{language}.tagset")
    if not path.exists():
        path = data_file(f"multext-{DEFAULT_LANGUAGE}.tagset")
    return path


def mapping_path(dialect: str) -> Path:
    return data_file(f"{dialect}.map")


def demo_registry() -> Registry:
    return load(registry_path().read_bytes())


def demo_tagset(language: str = DEFAULT_LANGUAGE, registry: Registry | None = None) -> TagsetSpec:
    return load_tagset(tagset_path(language).read_bytes(), registry or demo_registry())
