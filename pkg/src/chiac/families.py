"""Maximal F-free subsets of a poset: the colouring constraint system.

A maximal F-free subset is an F-free set that every further element would
break.  The general route treats the copies of F as hyperedges and enumerates
the maximal independent sets; maximal chains and maximal antichains get
specialized paths (cover-DAG walks, comparability edges).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .embedding import copy_masks
from .poset import Poset, iter_bits


@dataclass(frozen=True)
class FreeFamily:
    """The maximal F-free subsets of a poset, as sorted vertex tuples.

    ``filtered`` records whether one-element members were dropped (the
    colouring constraint ignores them).
    """

    sets: tuple[tuple[int, ...], ...]
    filtered: bool

    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in s) for s in self.sets)

    def __len__(self):
        return len(self.sets)


def _maximal_independent_masks(n: int, edges: tuple[int, ...]) -> list[int]:
    """Maximal subsets of 0..n-1 containing no edge, as bitmasks.

    Branches on the vertices of some contained edge; every maximal
    independent set survives down one branch, and leaves are filtered for
    one-step maximality afterwards.
    """
    full = (1 << n) - 1
    if not edges:
        return [full]
    leaves: set[int] = set()
    visited: set[int] = set()

    def rec(s: int):
        if s in visited:
            return
        visited.add(s)
        for e in edges:
            if e & s == e:
                for v in iter_bits(e):
                    rec(s ^ (1 << v))
                return
        leaves.add(s)

    rec(full)
    out = []
    for s in leaves:
        maximal = True
        for x in range(n):
            if not (s >> x) & 1:
                grown = s | (1 << x)
                if not any(e & grown == e for e in edges):
                    maximal = False
                    break
        if maximal:
            out.append(s)
    return out


def _family_from_masks(masks, filter_singletons: bool) -> FreeFamily:
    sets = sorted(tuple(iter_bits(m)) for m in masks)
    if filter_singletons:
        sets = [s for s in sets if len(s) > 1]
    return FreeFamily(tuple(sets), filter_singletons)


@lru_cache(maxsize=None)
def maximal_F_free(p: Poset, f: Poset, filter_singletons: bool = True) -> FreeFamily:
    """All inclusion-maximal F-free subsets of p.

    With no copies of f in p the family is the single set of all elements.
    """
    if f.n < 2:
        raise ValueError("pattern must have >= 2 elements")
    edges = copy_masks(p, f)
    return _family_from_masks(
        _maximal_independent_masks(p.n, edges), filter_singletons
    )


def maximal_chains(p: Poset, filter_singletons: bool = False) -> FreeFamily:
    """All maximal chains, walked along the cover DAG from minimals to maximals."""
    chains: list[int] = []

    def walk(x: int, mask: int):
        ups = p.upper_covers(x)
        if not ups:
            chains.append(mask)
            return
        for y in ups:
            walk(y, mask | (1 << y))

    for m in sorted(p.minimals()):
        walk(m, 1 << m)
    return _family_from_masks(chains, filter_singletons)


def maximal_antichains(p: Poset, filter_singletons: bool = False) -> FreeFamily:
    """All maximal antichains: maximal independent sets of the comparability graph."""
    edges = tuple(
        (1 << i) | (1 << j)
        for i in range(p.n)
        for j in iter_bits(p.up[i])
    )
    return _family_from_masks(
        _maximal_independent_masks(p.n, edges), filter_singletons
    )
