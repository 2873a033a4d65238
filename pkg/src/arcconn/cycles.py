"""Girth and fixed-length directed cycle enumeration.

Cycles are vertex tuples in canonical rotation: the smallest vertex comes
first, and the tuple lists the cycle in arc direction.  Enumeration explores,
from each root r, only paths through vertices larger than r, so every cycle
is produced exactly once and already canonically rotated.
"""

from __future__ import annotations

from typing import Optional

from . import _kernels
from .digraph import Digraph
from .errors import AcyclicDigraph

Cycle = tuple[int, ...]


def girth(D: Digraph) -> Optional[int]:
    """Length of a shortest directed cycle, or None if D is acyclic."""
    g = _kernels.girth(list(D.succ), D.n)
    return g if g else None


def cycles_of_length(D: Digraph, g: int) -> list[Cycle]:
    """All directed cycles on exactly g vertices, canonical, sorted.

    An oriented graph has no cycles shorter than 3, so g < 3 yields [].
    """
    if g < 2 or g > D.n:
        return []
    succ = D.succ
    out: list[Cycle] = []
    path = [0] * g
    for root in range(D.n):
        path[0] = root
        _extend(succ, root, root, 1, g, 1 << root, path, out)
    out.sort()
    return out


def _extend(succ, root, v, depth, g, onpath, path, out):
    if depth == g:
        if succ[v] >> root & 1:
            out.append(tuple(path))
        return
    m = succ[v]
    while m:
        b = m & -m
        m ^= b
        u = b.bit_length() - 1
        if u > root and not onpath >> u & 1:
            path[depth] = u
            _extend(succ, root, u, depth + 1, g, onpath | b, path, out)


def girth_cycles(D: Digraph) -> list[Cycle]:
    """All cycles of length girth(D); raises AcyclicDigraph when none exist."""
    g = girth(D)
    if g is None:
        raise AcyclicDigraph("digraph has no directed cycle")
    return cycles_of_length(D, g)


def is_cycle(D: Digraph, C: Cycle) -> bool:
    """True iff C is a directed cycle of D (distinct vertices, arcs present)."""
    k = len(C)
    if k < 2 or len(set(C)) != k:
        return False
    if any(not 0 <= v < D.n for v in C):
        return False
    return all(D.has_arc(C[i], C[(i + 1) % k]) for i in range(k))
