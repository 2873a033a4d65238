"""Oriented-graph value type and structural queries.

A Digraph is an immutable digraph on vertices 0..n-1 with no loops and no
digons (if u->v is present, v->u is not).  Adjacency is kept both as a sorted
arc tuple and as successor/predecessor bitmasks; the masks feed the kernel
backend for reachability, SCC, and girth work.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator, Optional, Sequence

from . import _kernels
from .errors import (
    DuplicateArc,
    InvalidVertex,
    LoopArc,
    SymmetricPair,
    UnknownArc,
    VertexOutOfRange,
)

Arc = tuple[int, int]


def _check_vertices(n: int, xs: Iterable[int]) -> list[int]:
    out = []
    for x in xs:
        v = int(x)
        if not 0 <= v < n:
            raise InvalidVertex(f"vertex {v} not in 0..{n - 1}")
        out.append(v)
    return out


class Digraph:
    """Immutable oriented graph.

    Attributes:
        n: vertex count; vertices are 0..n-1.
        arcs: sorted tuple of (tail, head) pairs.
        succ: per-vertex successor bitmasks (bit u of succ[v] iff v->u).
        pred: per-vertex predecessor bitmasks.
    """

    __slots__ = ("n", "arcs", "succ", "pred", "_arcset")

    def __init__(self, n: int, arcs: Iterable[Arc] = ()) -> None:
        if n < 0:
            raise InvalidVertex(f"vertex count must be non-negative, got {n}")
        succ = [0] * n
        pred = [0] * n
        seen: set[Arc] = set()
        for raw in arcs:
            t, h = raw
            arc = (int(t), int(h))
            t, h = arc
            if not (0 <= t < n and 0 <= h < n):
                raise VertexOutOfRange(
                    f"arc endpoint outside 0..{n - 1}", arc=arc
                )
            if t == h:
                raise LoopArc("loops are not allowed", arc=arc)
            if arc in seen:
                raise DuplicateArc("arc listed twice", arc=arc)
            if (h, t) in seen:
                raise SymmetricPair(
                    "opposite arc already present (digons are not allowed)",
                    arc=arc,
                )
            seen.add(arc)
            succ[t] |= 1 << h
            pred[h] |= 1 << t
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", tuple(sorted(seen)))
        object.__setattr__(self, "succ", tuple(succ))
        object.__setattr__(self, "pred", tuple(pred))
        object.__setattr__(self, "_arcset", frozenset(seen))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Digraph is immutable")

    # -- basics --------------------------------------------------------

    @property
    def m(self) -> int:
        """Arc count."""
        return len(self.arcs)

    def has_arc(self, tail: int, head: int) -> bool:
        return 0 <= tail < self.n and bool(self.succ[tail] >> head & 1)

    def out_degree(self, v: int) -> int:
        (v,) = _check_vertices(self.n, (v,))
        return self.succ[v].bit_count()

    def in_degree(self, v: int) -> int:
        (v,) = _check_vertices(self.n, (v,))
        return self.pred[v].bit_count()

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        (v,) = _check_vertices(self.n, (v,))
        return tuple(_bits(self.succ[v]))

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        (v,) = _check_vertices(self.n, (v,))
        return tuple(_bits(self.pred[v]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        if self.m <= 12:
            return f"Digraph({self.n}, {list(self.arcs)})"
        return f"Digraph(n={self.n}, m={self.m})"

    # -- connectivity structure ----------------------------------------

    def is_strong(self) -> bool:
        return _kernels.is_strong(list(self.succ), self.n)

    def component_masks(self) -> list[int]:
        """SCC bitmasks in topological order (sources first)."""
        return _kernels.scc_masks(list(self.succ), self.n)

    def strong_components(self) -> tuple[tuple[int, ...], ...]:
        """SCCs as sorted vertex tuples, topologically ordered."""
        return tuple(tuple(_bits(m)) for m in self.component_masks())

    # -- cuts and arc scans --------------------------------------------

    def out_cut(self, X: Iterable[int]) -> list[Arc]:
        """Arcs leaving X: tail in X, head outside."""
        mask = _vertex_mask(self.n, X)
        return [a for a in self.arcs if mask >> a[0] & 1 and not mask >> a[1] & 1]

    def in_cut(self, X: Iterable[int]) -> list[Arc]:
        """Arcs entering X: tail outside, head in X."""
        mask = _vertex_mask(self.n, X)
        return [a for a in self.arcs if not mask >> a[0] & 1 and mask >> a[1] & 1]

    def arc_outside(self, X: Iterable[int]) -> Optional[Arc]:
        """Lexicographically smallest arc with both endpoints outside X."""
        mask = 0
        for x in X:
            mask |= 1 << x
        for t, h in self.arcs:
            if not mask >> t & 1 and not mask >> h & 1:
                return (t, h)
        return None

    # -- derived digraphs ----------------------------------------------

    def delete_arcs(self, S: Iterable[Arc]) -> "Digraph":
        removed = set()
        for raw in S:
            arc = (int(raw[0]), int(raw[1]))
            if arc not in self._arcset:
                raise UnknownArc("arc not in the digraph", arc=arc)
            removed.add(arc)
        return Digraph(self.n, [a for a in self.arcs if a not in removed])

    def induced(self, X: Iterable[int]) -> tuple["Digraph", tuple[int, ...]]:
        """Subdigraph induced by X, relabeled to 0..|X|-1.

        Returns (H, vmap) with vmap[new_label] = original vertex, so witnesses
        computed on H can be mapped back.
        """
        verts = sorted(set(_check_vertices(self.n, X)))
        index = {v: i for i, v in enumerate(verts)}
        arcs = [
            (index[t], index[h])
            for t, h in self.arcs
            if t in index and h in index
        ]
        return Digraph(len(verts), arcs), tuple(verts)

    def reverse(self) -> "Digraph":
        return Digraph(self.n, [(h, t) for t, h in self.arcs])

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """Relabel vertices; perm[old] = new, a permutation of 0..n-1."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidVertex("relabeling is not a permutation of 0..n-1")
        return Digraph(self.n, [(perm[t], perm[h]) for t, h in self.arcs])

    # -- enumeration encoding ------------------------------------------

    @classmethod
    def from_code(cls, n: int, code: int) -> "Digraph":
        """Graph with the given trit enumeration code (see _purecore)."""
        succ = _kernels.decode_code(n, code)
        arcs = [(v, u) for v in range(n) for u in _bits(succ[v])]
        return cls(n, arcs)

    @property
    def code(self) -> int:
        """Trit enumeration code of this labeled graph."""
        code = 0
        power = 1
        for i, j in _kernels.pair_table(self.n):
            if self.succ[i] >> j & 1:
                code += power
            elif self.succ[j] >> i & 1:
                code += 2 * power
            power *= 3
        return code

    # -- isomorphism-invariant form ------------------------------------

    def canonical_form(self) -> tuple[Arc, ...]:
        """Arc tuple minimized over relabelings; equal iff isomorphic.

        Brute-force over permutations, restricted to degree-class-preserving
        maps (an isomorphism cannot mix degree pairs, and classes are ordered
        by their degree pair, so the restriction loses nothing).  Intended for
        desk-scale graphs; cost grows with the factorials of class sizes.
        """
        n = self.n
        if n == 0:
            return ()
        pairs = [(self.succ[v].bit_count(), self.pred[v].bit_count()) for v in range(n)]
        groups: dict[tuple[int, int], list[int]] = {}
        for v in range(n):
            groups.setdefault(pairs[v], []).append(v)
        ordered = sorted(groups)
        blocks = [groups[k] for k in ordered]
        starts = []
        base = 0
        for b in blocks:
            starts.append(base)
            base += len(b)
        best: Optional[tuple[Arc, ...]] = None
        for choice in _product_permutations(blocks):
            perm = [0] * n
            for block, start, order in zip(blocks, starts, choice):
                for offset, v in enumerate(order):
                    perm[v] = start + offset
            cand = tuple(sorted((perm[t], perm[h]) for t, h in self.arcs))
            if best is None or cand < best:
                best = cand
        return best or ()

    def canonical(self) -> "Digraph":
        return Digraph(self.n, self.canonical_form())


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        mask ^= b
        yield b.bit_length() - 1


def _vertex_mask(n: int, X: Iterable[int]) -> int:
    mask = 0
    for v in _check_vertices(n, X):
        mask |= 1 << v
    return mask


def _product_permutations(blocks: list[list[int]]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not blocks:
        yield ()
        return
    head, rest = blocks[0], blocks[1:]
    for order in permutations(head):
        for tail in _product_permutations(rest):
            yield (order,) + tail
