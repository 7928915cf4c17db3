"""Bundled reference diagrams, stored as ``corpus/<name>.gauss``."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .gauss import GaussDiagram, parse_gauss_code


def names() -> list[str]:
    files = resources.files(__package__).joinpath("corpus")
    return sorted(f.name[: -len(".gauss")] for f in files.iterdir() if f.name.endswith(".gauss"))


def path(name: str):
    return resources.files(__package__).joinpath("corpus").joinpath(f"{name}.gauss")


@lru_cache(maxsize=None)
def load(name: str) -> GaussDiagram:
    try:
        text = path(name).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise KeyError(f"no corpus entry {name!r}; known: {', '.join(names())}") from None
    return parse_gauss_code(text)


def load_all() -> dict[str, GaussDiagram]:
    return {n: load(n) for n in names()}


def classical() -> dict[str, GaussDiagram]:
    return {n: G for n, G in load_all().items() if G.classical}


def virtual() -> dict[str, GaussDiagram]:
    return {n: G for n, G in load_all().items() if not G.classical}
