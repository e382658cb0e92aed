"""Bundled example algebras and maps, stored as JSON documents."""

from __future__ import annotations

from importlib import resources

from ..algebra import Algebra
from ..errors import HomlyError
from ..exact import LinearMap


def _files():
    return resources.files(__name__)


def names() -> list[str]:
    return sorted(p.name[:-5] for p in _files().iterdir() if p.name.endswith(".json"))


def path(name: str):
    return _files() / f"{name}.json"


def text(name: str) -> str:
    p = path(name)
    if not p.is_file():
        raise HomlyError(f"no catalog entry {name!r}; available: {', '.join(names())}")
    return p.read_text()


def load(name: str) -> Algebra:
    from ..io import parse_algebra

    return parse_algebra(text(name))


def load_map(name: str) -> LinearMap:
    from ..io import parse_map

    return parse_map(text(name))
