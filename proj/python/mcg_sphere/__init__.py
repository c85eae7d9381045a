"""Finite group actions on the sphere with marked points and their lifts to
the hyperelliptic mapping class group.

Thin wrapper over the C++ extension module; catalog-style results come back
as plain dicts/lists decoded from the library's canonical JSON.
"""

import json as _json

from . import _core

__all__ = [
    "maximal_types",
    "descriptors",
    "class_table",
    "count_classes",
    "order_n_element_exists",
    "lift_catalog",
    "count_maximal_classes",
    "todd_coxeter_order",
]


def maximal_types(r, mode="derived"):
    """Names of the maximal finite subgroup types at r, smallest order first."""
    return _core.maximal_types(r, mode)


def descriptors(r, type=None):
    """Action descriptors at r, optionally restricted to one rotation type."""
    return _json.loads(_core.descriptors_json(r, type or ""))


def class_table(r):
    """All descriptors at r with conjugacy class ids and representatives."""
    return _json.loads(_core.class_table_json(r))


def count_classes(r, iso, mode="enumerative"):
    """Number of conjugacy classes of subgroups of type iso at r."""
    return _core.count_classes(r, iso, mode)


def order_n_element_exists(r, n):
    """Whether some order-n mapping class exists at r."""
    return _core.order_n_element_exists(r, n)


def lift_catalog(g, verify=False, max_cosets=1_000_000):
    """Maximal finite subgroups of the hyperelliptic mapping class group at g."""
    return _json.loads(_core.lift_catalog_json(g, verify, max_cosets))


def count_maximal_classes(g, mode="catalog"):
    """Number of conjugacy classes of maximal finite subgroups at genus g."""
    return _core.count_maximal_classes(g, mode)


def todd_coxeter_order(presentation, max_cosets=1_000_000):
    """Group order of a finite presentation like '<x,y | x^2, y^3, (x*y)^5>'."""
    return _core.todd_coxeter_order(presentation, max_cosets)
