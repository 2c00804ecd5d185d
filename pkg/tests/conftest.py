"""Shared fixtures: memoized lattices and element tables for catalog groups."""

import pytest

from wexp import all_subgroup_classes
from wexp.structure import element_table

import _catalog

_lattices: dict = {}


@pytest.fixture(scope="session")
def get_group():
    return _catalog.group


@pytest.fixture(scope="session")
def get_lattice():
    def build(name):
        if name not in _lattices:
            _lattices[name] = all_subgroup_classes(_catalog.group(name))
        return _lattices[name]

    return build


@pytest.fixture(scope="session")
def get_table():
    def build(name):
        g = _catalog.group(name)
        return element_table(g, max(20000, g.order()))

    return build
