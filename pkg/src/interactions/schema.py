"""Access to the JSON schemas shipped with the package."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

SCHEMA_NAMES = ("interaction", "analysis", "catalog", "iq")


@lru_cache(maxsize=None)
def load_schema(name: str) -> dict:
    if name not in SCHEMA_NAMES:
        raise KeyError(f"unknown schema {name!r}")
    text = resources.files("interactions").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)
