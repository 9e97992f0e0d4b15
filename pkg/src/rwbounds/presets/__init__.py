"""Shipped distribution spec files, one per worked example."""

from importlib import resources
from pathlib import Path

from ..distributions import Distribution, load_spec


def names() -> list[str]:
    return sorted(
        p.name[:-5] for p in resources.files(__name__).iterdir() if p.name.endswith(".json")
    )


def path(name: str) -> Path:
    p = resources.files(__name__) / f"{name}.json"
    if not p.is_file():
        raise FileNotFoundError(f"no preset named {name!r}; available: {names()}")
    return Path(str(p))


def load(name: str) -> Distribution:
    return load_spec(path(name))
