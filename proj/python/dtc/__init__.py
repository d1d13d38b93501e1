"""Discrete topological complexity and simplicial LS-category of finite
simplicial complexes.

A complex is given as a list of facets, each a list of vertex labels, or as
text in the facet-per-line / JSON format accepted by :func:`parse`. Every
result is the JSON certificate the ``dtc`` command line tool would print,
decoded into plain Python objects, and can be passed back to :func:`verify`.
"""

import json
from os import PathLike
from typing import Optional, Sequence, Union

from . import _dtc
from ._dtc import DomainMismatch, InvalidInput, NotSimplicial, ParseError

Facets = Sequence[Sequence[str]]
ComplexLike = Union[str, Facets]

__all__ = [
    "DomainMismatch",
    "InvalidInput",
    "NotSimplicial",
    "ParseError",
    "core",
    "is_categorical",
    "is_farber",
    "load",
    "parse",
    "plan",
    "product",
    "scat",
    "tc",
    "verify",
]


def parse(text: str) -> list:
    """Canonical facet list of a complex given as text."""
    return _dtc.parse(text)


def load(path: Union[str, PathLike]) -> list:
    with open(path, encoding="utf-8") as f:
        return parse(f.read())


def _facets(k: ComplexLike) -> list:
    return parse(k) if isinstance(k, str) else [list(f) for f in k]


def tc(k: ComplexLike, budget: int = 1_000_000, threads: int = 1) -> dict:
    return json.loads(_dtc.invariant(_facets(k), "tc", budget, threads))


def scat(k: ComplexLike, square: bool = False, budget: int = 1_000_000, threads: int = 1) -> dict:
    kind = "scat-square" if square else "scat"
    return json.loads(_dtc.invariant(_facets(k), kind, budget, threads))


def core(k: ComplexLike) -> dict:
    return json.loads(_dtc.core(_facets(k)))


def product(k: ComplexLike) -> dict:
    return json.loads(_dtc.product(_facets(k)))


def is_farber(k: ComplexLike, omega: Optional[Facets] = None, budget: int = 1_000_000) -> dict:
    """Farber test for a subcomplex of the square, facets labelled "u|v"."""
    sub = None if omega is None else [list(f) for f in omega]
    return json.loads(_dtc.is_farber(_facets(k), sub, budget))


def is_categorical(k: ComplexLike, sub: Optional[Facets] = None, budget: int = 1_000_000) -> dict:
    s = None if sub is None else [list(f) for f in sub]
    return json.loads(_dtc.is_categorical(_facets(k), s, budget))


def plan(k: ComplexLike, source: str, target: str, budget: int = 1_000_000) -> dict:
    return json.loads(_dtc.plan(_facets(k), source, target, budget))


def verify(certificate: Union[dict, str], recompute: bool = False) -> tuple:
    """(accepted, message) for a certificate dict or its JSON text."""
    text = certificate if isinstance(certificate, str) else json.dumps(certificate)
    return _dtc.verify(text, recompute)
