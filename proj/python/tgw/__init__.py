"""Python access to the tgw workbench. Results come back as parsed JSON."""

import json

from . import _core
from ._core import AxiomError, BudgetError, TgwError

__all__ = [
    "AxiomError",
    "BudgetError",
    "TgwError",
    "adjunction",
    "catalog",
    "check",
    "embed",
    "ext1",
    "ideals",
    "module_names",
    "run",
    "spectrum",
    "structure_names",
    "tor1",
]

structure_names = _core.structure_names
module_names = _core.module_names
run = _core.run


def check(structure):
    return json.loads(_core.check(structure))


def ideals(structure, lenient=False):
    return json.loads(_core.ideals(structure, lenient))


def spectrum(structure, lenient=False):
    return json.loads(_core.spectrum(structure, lenient))


def catalog(structure, lenient=False):
    return json.loads(_core.catalog(structure, lenient))


def ext1(structure, m="regular", n="regular", lenient=False):
    return json.loads(_core.ext1(structure, m, n, lenient))


def tor1(structure, m="regular", n="regular", backend="auto", lenient=False):
    return json.loads(_core.tor1(structure, m, n, backend, lenient))


def adjunction(structure, m="regular", n="regular", p="regular", lenient=False):
    return json.loads(_core.adjunction(structure, m, n, p, lenient))


def embed(structure, k=2, format="json", lenient=False):
    text = _core.embed(structure, k, format, lenient)
    return json.loads(text) if format == "json" else text
