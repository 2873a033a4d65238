"""Arc connectivity, the degree bound xi, and restricted arc-cuts.

A restricted arc-cut of a strong digraph D is an arc set S such that D - S
has a non-trivial strong component D1 while the rest of the digraph still
carries an arc; lambda'(D) is the smallest size of such a cut.  The phrase
"D - V(D1) contains an arc" can read the arc either in D (OriginalHost) or
in D - S (ResidualHost); every entry point takes the reading explicitly and
defaults to OriginalHost.

Two independent routes compute lambda': lambda_prime_bruteforce enumerates
arc subsets by increasing size, while lambda_prime_exact minimizes, over the
vertex sets X that could host the surviving component, the max-flow value
between the split halves of X contracted to a single vertex.  They must agree
and the test suite holds them to that.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import _kernels
from .cycles import Cycle, cycles_of_length, girth, girth_cycles, is_cycle
from .digraph import Arc, Digraph
from .errors import AcyclicDigraph, NotAFourCycle, NotAGirthCycle, NotStrong, UnknownArc


class DefinitionReading(Enum):
    """Where the witness arc outside the surviving component must live."""

    ORIGINAL_HOST = "original"
    RESIDUAL_HOST = "residual"

    @classmethod
    def parse(cls, text: str) -> "DefinitionReading":
        for member in cls:
            if member.value == text:
                return member
        raise ValueError(f"unknown reading {text!r}; use 'original' or 'residual'")


ORIGINAL_HOST = DefinitionReading.ORIGINAL_HOST
RESIDUAL_HOST = DefinitionReading.RESIDUAL_HOST


class CutOutcome(Enum):
    FOUND = "found"
    NONEXISTENT = "nonexistent"
    UNKNOWN_BELOW_BOUND = "unknown-below-bound"


@dataclass(frozen=True)
class XiResult:
    """Minimum degree-sum bound over girth cycles."""

    value: int
    cycle: Cycle
    side: str  # "out" or "in": which degree sum achieved the value


@dataclass(frozen=True)
class RestrictedCutCertificate:
    """Result of a lambda' computation, with witnesses when a cut exists."""

    outcome: CutOutcome
    reading: DefinitionReading
    cut: Optional[tuple[Arc, ...]] = None
    component: Optional[tuple[int, ...]] = None
    outside_arc: Optional[Arc] = None
    searched_bound: Optional[int] = None

    @property
    def found(self) -> bool:
        return self.outcome is CutOutcome.FOUND

    @property
    def value(self) -> Optional[int]:
        return len(self.cut) if self.cut is not None else None


# ---------------------------------------------------------------------------
# xi


def xi_of_cycle(D: Digraph, C: Cycle) -> int:
    """min(sum of out-degrees, sum of in-degrees) of C's vertices, minus g."""
    g = girth(D)
    if not is_cycle(D, C) or len(C) != g:
        raise NotAGirthCycle(f"{C} is not a girth cycle of the digraph")
    out_sum = sum(D.succ[v].bit_count() for v in C)
    in_sum = sum(D.pred[v].bit_count() for v in C)
    return min(out_sum, in_sum) - g


def xi(D: Digraph) -> XiResult:
    """Minimum of xi_of_cycle over all girth cycles, smallest cycle on ties."""
    cycles = girth_cycles(D)  # raises AcyclicDigraph when D has no cycle
    g = len(cycles[0])
    best: Optional[XiResult] = None
    for C in cycles:
        out_sum = sum(D.succ[v].bit_count() for v in C) - g
        in_sum = sum(D.pred[v].bit_count() for v in C) - g
        value = min(out_sum, in_sum)
        if best is None or value < best.value:
            side = "out" if out_sum <= in_sum else "in"
            best = XiResult(value=value, cycle=C, side=side)
    assert best is not None
    return best


# ---------------------------------------------------------------------------
# unit-capacity max-flow


def _augment(cap: list[list[int]], s: int, t: int) -> Optional[list[int]]:
    k = len(cap)
    parent = [-1] * k
    parent[s] = s
    queue = deque([s])
    while queue:
        v = queue.popleft()
        row = cap[v]
        for u in range(k):
            if parent[u] < 0 and row[u] > 0:
                parent[u] = v
                if u == t:
                    return parent
                queue.append(u)
    return None


def _maxflow(cap: list[list[int]], s: int, t: int, limit: Optional[int] = None) -> int:
    """Edmonds-Karp on a dense capacity matrix (mutated into the residual).

    With a limit, augmentation stops once flow >= limit; the returned value is
    then only a lower bound, which suffices for pruning.  A value below the
    limit is exact.
    """
    flow = 0
    while limit is None or flow < limit:
        parent = _augment(cap, s, t)
        if parent is None:
            break
        bottleneck: Optional[int] = None
        v = t
        while v != s:
            p = parent[v]
            if bottleneck is None or cap[p][v] < bottleneck:
                bottleneck = cap[p][v]
            v = p
        assert bottleneck is not None and bottleneck > 0
        v = t
        while v != s:
            p = parent[v]
            cap[p][v] -= bottleneck
            cap[v][p] += bottleneck
            v = p
        flow += bottleneck
    return flow


def arc_connectivity(D: Digraph) -> int:
    """lambda(D): minimum number of arcs whose removal destroys strongness.

    Menger reduction: the minimum over ordered pairs of arc-disjoint path
    counts, realized as 2(n-1) unit-capacity flows against a fixed root.
    """
    if D.n < 2 or not D.is_strong():
        raise NotStrong("arc connectivity needs a strong digraph on >= 2 vertices")
    n = D.n
    best = min(min(D.succ[v].bit_count(), D.pred[v].bit_count()) for v in range(n))
    for v in range(1, n):
        for s, t in ((0, v), (v, 0)):
            cap = [[1 if D.succ[i] >> j & 1 else 0 for j in range(n)] for i in range(n)]
            flow = _maxflow(cap, s, t, limit=best)
            if flow < best:
                best = flow
    return best


# ---------------------------------------------------------------------------
# restricted arc-cuts


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return out


def _witness_scan(
    D: Digraph, succ: list[int], removed: Sequence[Arc], reading: DefinitionReading
) -> Optional[tuple[tuple[int, ...], Arc]]:
    """Shared core of the restricted-arc-cut test.

    succ must be D's successor masks with `removed` taken out.  Scans the
    non-trivial strong components of the residue sink-first (reverse
    topological order) and returns the first one having an arc with both
    endpoints outside it, together with the lexicographically smallest such
    arc.
    """
    comps = _kernels.scc_masks(succ, D.n)
    if reading is ORIGINAL_HOST:
        allowed: Sequence[Arc] = D.arcs
    else:
        gone = set(removed)
        allowed = [a for a in D.arcs if a not in gone]
    for comp in reversed(comps):
        if comp.bit_count() < 2:
            continue
        for t, h in allowed:
            if not comp >> t & 1 and not comp >> h & 1:
                return tuple(_bits(comp)), (t, h)
    return None


def is_restricted_arc_cut(
    D: Digraph, S: Iterable[Arc], reading: DefinitionReading = ORIGINAL_HOST
) -> Optional[tuple[tuple[int, ...], Arc]]:
    """Witness (component, outside arc) if S is a restricted arc-cut, else None.

    The caller is responsible for D being strong; arcs not in D raise
    UnknownArc.
    """
    cut = []
    for raw in S:
        arc = (int(raw[0]), int(raw[1]))
        if not D.has_arc(*arc):
            raise UnknownArc("cut contains an arc not in the digraph", arc=arc)
        cut.append(arc)
    succ = list(D.succ)
    for t, h in cut:
        succ[t] &= ~(1 << h)
    return _witness_scan(D, succ, cut, reading)


def lambda_prime_bruteforce(
    D: Digraph,
    k_max: Optional[int] = None,
    reading: DefinitionReading = ORIGINAL_HOST,
) -> RestrictedCutCertificate:
    """Oracle lambda': try every arc subset by increasing cardinality.

    k_max defaults to xi(D) when the girth-4 theorem guarantees that bound
    (strong, girth 4, n >= 6, no exception-family match) and to |A(D)|
    otherwise.  If the search space is capped below |A(D)| and nothing is
    found, the outcome is UNKNOWN_BELOW_BOUND rather than NONEXISTENT.
    """
    m = D.m
    if k_max is None:
        k_max = m
        if D.n >= 6 and girth(D) == 4 and D.is_strong():
            from .families import match_family

            if match_family(D) is None:
                k_max = min(m, xi(D).value)
    k_max = min(k_max, m)
    arcs = D.arcs
    base = list(D.succ)
    for k in range(k_max + 1):
        for S in combinations(arcs, k):
            succ = base[:]
            for t, h in S:
                succ[t] &= ~(1 << h)
            witness = _witness_scan(D, succ, S, reading)
            if witness is not None:
                component, outside = witness
                return RestrictedCutCertificate(
                    outcome=CutOutcome.FOUND,
                    reading=reading,
                    cut=tuple(S),
                    component=component,
                    outside_arc=outside,
                )
    if k_max >= m:
        return RestrictedCutCertificate(outcome=CutOutcome.NONEXISTENT, reading=reading)
    return RestrictedCutCertificate(
        outcome=CutOutcome.UNKNOWN_BELOW_BOUND, reading=reading, searched_bound=k_max
    )


def _subset_strong(succ: Sequence[int], pred: Sequence[int], mask: int) -> bool:
    """Is the subdigraph induced by the mask strongly connected?"""
    start = mask & -mask
    reach = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= succ[v]
        frontier = nxt & mask & ~reach
        reach |= frontier
    if reach != mask:
        return False
    reach = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= pred[v]
        frontier = nxt & mask & ~reach
        reach |= frontier
    return reach == mask


def _contracted_capacities(
    D: Digraph, mask: int, protected: Optional[Arc] = None
) -> tuple[list[list[int]], int]:
    """Capacity matrix after contracting the vertex set into x_out/x_in.

    Node 0 emits everything leaving the set, node 1 absorbs everything
    entering it; outside vertices follow in sorted order.  A path 0 -> 1 is
    exactly a closed walk leaving and re-entering the set through outside
    vertices, so the min cut is the cheapest arc set destroying all of them.
    The protected arc, if given, gets infinite capacity so no finite cut
    removes it.  Returns (matrix, infinity marker).
    """
    outside = [v for v in range(D.n) if not mask >> v & 1]
    index = {v: i + 2 for i, v in enumerate(outside)}
    k = len(outside) + 2
    inf = D.m + 1
    cap = [[0] * k for _ in range(k)]
    for t, h in D.arcs:
        t_in = bool(mask >> t & 1)
        h_in = bool(mask >> h & 1)
        if t_in and h_in:
            continue
        if t_in:
            a, b = 0, index[h]
        elif h_in:
            a, b = index[t], 1
        else:
            a, b = index[t], index[h]
        cap[a][b] += inf if (t, h) == protected else 1
    return cap, inf


def _extract_cut(D: Digraph, mask: int, residual: list[list[int]], protected: Optional[Arc]) -> list[Arc]:
    """Min-cut arcs from a completed flow's residual matrix."""
    outside = [v for v in range(D.n) if not mask >> v & 1]
    index = {v: i + 2 for i, v in enumerate(outside)}
    k = len(outside) + 2
    side = [False] * k
    side[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in range(k):
            if not side[u] and residual[v][u] > 0:
                side[u] = True
                queue.append(u)
    cut = []
    for t, h in D.arcs:
        if (t, h) == protected:
            continue
        t_in = bool(mask >> t & 1)
        h_in = bool(mask >> h & 1)
        if t_in and h_in:
            continue
        a = 0 if t_in else index[t]
        b = 1 if h_in else index[h]
        if side[a] and not side[b]:
            cut.append((t, h))
    return cut


def _candidate_masks(D: Digraph) -> list[int]:
    """Component-host candidates: girth-cycle vertex sets first, then all
    vertex sets by increasing size."""
    n = D.n
    seeds: list[int] = []
    g = girth(D)
    if g is not None:
        for C in cycles_of_length(D, g):
            m = 0
            for v in C:
                m |= 1 << v
            if m.bit_count() <= n - 2 and m not in seeds:
                seeds.append(m)
    rest = [
        m
        for m in range(1, 1 << n)
        if 2 <= m.bit_count() <= n - 2 and m not in seeds
    ]
    rest.sort(key=lambda m: (m.bit_count(), m))
    return seeds + rest


def lambda_prime_exact(
    D: Digraph, reading: DefinitionReading = ORIGINAL_HOST
) -> RestrictedCutCertificate:
    """Exact lambda' by contraction max-flow over candidate component sets.

    For each X inducing a strong subdigraph with an arc wholly outside it,
    the cheapest arc set whose removal leaves X as its own strong component
    is the min cut between the contracted halves of X.  Under ResidualHost
    the witness arc must additionally survive the cut, so the flow runs once
    per choice of protected outside arc.
    """
    if D.n < 2 or not D.is_strong():
        raise NotStrong("lambda' is defined on strong digraphs with >= 2 vertices")
    succ = list(D.succ)
    pred = list(D.pred)
    best: Optional[int] = None
    best_witness: Optional[tuple[tuple[Arc, ...], tuple[int, ...], Arc]] = None
    any_qualifying = False
    for mask in _candidate_masks(D):
        if not _subset_strong(succ, pred, mask):
            continue
        outside_arcs = [
            a for a in D.arcs if not mask >> a[0] & 1 and not mask >> a[1] & 1
        ]
        if not outside_arcs:
            continue
        any_qualifying = True
        protect: list[Optional[Arc]]
        if reading is ORIGINAL_HOST:
            protect = [None]
        else:
            # The unprotected flow lower-bounds every protected flow, so a
            # pruned unprotected run rules out the whole candidate set.
            probe, _ = _contracted_capacities(D, mask)
            if best is not None and _maxflow(probe, 0, 1, limit=best) >= best:
                continue
            protect = list(outside_arcs)
        for prot in protect:
            cap, _ = _contracted_capacities(D, mask, prot)
            flow = _maxflow(cap, 0, 1, limit=best)
            if best is not None and flow >= best:
                continue
            cut = _extract_cut(D, mask, cap, prot)
            assert len(cut) == flow, "min cut must match the flow value"
            witness = is_restricted_arc_cut(D, cut, reading)
            assert witness is not None, "flow cut must certify as restricted"
            best = flow
            best_witness = (tuple(sorted(cut)), witness[0], witness[1])
    if best_witness is None:
        if any_qualifying:
            # Qualifying sets exist, so some finite cut (e.g. the out-cut of
            # such a set) certifies; reaching here means a logic error.
            raise AssertionError("qualifying component set produced no cut")
        return RestrictedCutCertificate(outcome=CutOutcome.NONEXISTENT, reading=reading)
    cut, component, outside = best_witness
    return RestrictedCutCertificate(
        outcome=CutOutcome.FOUND,
        reading=reading,
        cut=cut,
        component=component,
        outside_arc=outside,
    )


def lambda_prime_existence_witness(D: Digraph) -> Optional[tuple[Cycle, Arc]]:
    """First girth cycle with an arc wholly outside it, plus that arc."""
    if D.n < 2 or not D.is_strong():
        raise NotStrong("lambda'-connectedness is defined on strong digraphs")
    if girth(D) is None:
        return None
    for C in girth_cycles(D):
        arc = D.arc_outside(C)
        if arc is not None:
            return C, arc
    return None


def lambda_prime_exists(D: Digraph) -> bool:
    """Theorem-1 test: some girth cycle leaves an arc untouched."""
    return lambda_prime_existence_witness(D) is not None


# ---------------------------------------------------------------------------
# proof-derived cut candidates


def _rotations(C: Cycle) -> list[tuple[int, int, int, int]]:
    return [tuple(C[(i + j) % 4] for j in range(4)) for i in range(4)]  # type: ignore[misc]


def _directed_candidates(D: Digraph, C: Cycle) -> list[tuple[Arc, ...]]:
    cand: list[tuple[Arc, ...]] = []
    carcs = {(C[i], C[(i + 1) % 4]) for i in range(4)}
    cmask = 0
    for v in C:
        cmask |= 1 << v
    for C2 in cycles_of_length(D, 4):
        shared = sum((C2[i], C2[(i + 1) % 4]) in carcs for i in range(4))
        if shared >= 2:
            cand.append(tuple(D.out_cut(C2)))
    for u, v, w, z in _rotations(C):
        a1s = [
            a
            for a in range(D.n)
            if not cmask >> a & 1 and D.has_arc(u, a) and D.has_arc(a, v)
        ]
        xs = [
            x
            for x in range(D.n)
            if not cmask >> x & 1 and D.has_arc(w, x) and D.has_arc(x, u)
        ]
        for a1 in a1s:
            for x in xs:
                if x != a1:
                    cand.append(tuple(sorted([(u, a1), (v, w), (w, x)])))
        for a in range(D.n):
            if (
                not cmask >> a & 1
                and D.has_arc(w, a)
                and D.has_arc(a, z)
                and D.has_arc(a, u)
            ):
                cand.append(tuple(sorted([(z, u), (a, u)])))
    return cand


def proof_cut_constructions(D: Digraph, C: Cycle) -> list[tuple[Arc, ...]]:
    """Candidate cuts the girth-4 upper-bound argument builds around C.

    Emits the out-cut of every 4-cycle sharing at least two arcs with C
    (including C itself), the three-arc pattern {u->a1, v->w, w->x}, and the
    two-arc pattern {z->u, a->u}, for every rotation of C where the needed
    arcs exist.  The argument fixes the orientation of C's degree sum without
    loss of generality, so the mirror images of all candidates (computed on
    the reversed digraph and flipped back) are emitted as well.
    """
    if not (is_cycle(D, C) and len(C) == 4):
        raise NotAFourCycle(f"{tuple(C)} is not a 4-cycle of the digraph")
    cand = _directed_candidates(D, C)
    rev = D.reverse()
    rev_c = (C[0], C[3], C[2], C[1])
    for S in _directed_candidates(rev, rev_c):
        cand.append(tuple(sorted((h, t) for t, h in S)))
    seen: set[tuple[Arc, ...]] = set()
    out = []
    for S in cand:
        if S and S not in seen:
            seen.add(S)
            out.append(S)
    return out
