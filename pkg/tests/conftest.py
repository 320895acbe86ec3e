"""Shared helpers for the test suite."""

from __future__ import annotations

from functools import lru_cache

from hopfgalois.grouptypes import GroupSpec, enumerate_types
from hopfgalois.holomorph import hol_identity, hol_multiply, HolElement
from hopfgalois.numutil import NotSquarefree, factor_squarefree


@lru_cache(maxsize=None)
def squarefree_up_to(limit: int) -> tuple[int, ...]:
    out = []
    for n in range(1, limit + 1):
        try:
            factor_squarefree(n)
        except NotSquarefree:
            continue
        out.append(n)
    return tuple(out)


@lru_cache(maxsize=None)
def all_specs_up_to(limit: int) -> tuple[GroupSpec, ...]:
    specs = []
    for n in squarefree_up_to(limit):
        specs.extend(enumerate_types(factor_squarefree(n)))
    return tuple(specs)


def hol_power_by_multiplication(x: HolElement, j: int, spec: GroupSpec) -> HolElement:
    """x^j by j-fold multiplication; the independent route for power tests."""
    acc = hol_identity(spec)
    for _ in range(j):
        acc = hol_multiply(acc, x, spec)
    return acc
