"""Pure-Python bitmask kernels.

Digraphs on n vertices are handled as adjacency bitmasks: ``succ[v]`` has bit
``u`` set iff the arc v->u is present.  These are the hot primitives behind
strongness/SCC/girth queries and the exhaustive enumeration filter; a compiled
twin lives in ``_fastcore`` and must stay semantically identical.

Enumeration encoding: unordered vertex pairs are listed lexicographically
((0,1), (0,2), ..., (n-2,n-1)); pair k holds a trit (0 = no arc, 1 = i->j,
2 = j->i) and a graph's code is sum(trit_k * 3**k).  This encoding can never
produce a loop or a digon.
"""

from __future__ import annotations

BACKEND = "pure"


def pair_table(n: int) -> list[tuple[int, int]]:
    """Lexicographic list of unordered vertex pairs of 0..n-1."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def decode_code(n: int, code: int) -> list[int]:
    """Successor masks of the graph with the given enumeration code."""
    succ = [0] * n
    for i, j in pair_table(n):
        t = code % 3
        code //= 3
        if t == 1:
            succ[i] |= 1 << j
        elif t == 2:
            succ[j] |= 1 << i
    return succ


def reach_closure(succ: list[int], n: int) -> list[int]:
    """Reflexive-transitive closure masks: bit u of closure[v] iff v reaches u."""
    clos = [(1 << v) | succ[v] for v in range(n)]
    for k in range(n):
        ck = clos[k]
        bit = 1 << k
        for i in range(n):
            if clos[i] & bit:
                clos[i] |= ck
    return clos


def is_strong(succ: list[int], n: int) -> bool:
    if n == 0:
        return False
    full = (1 << n) - 1
    for m in reach_closure(succ, n):
        if m != full:
            return False
    return True


def scc_masks(succ: list[int], n: int) -> list[int]:
    """SCC masks in topological order (sources first), ties by smallest vertex.

    Vertices u, v share a component iff each reaches the other.  If component
    A reaches component B then A's closure strictly contains B's, so sorting
    by descending closure popcount is a valid topological order.
    """
    clos = reach_closure(succ, n)
    comps = []
    seen = 0
    for v in range(n):
        if seen >> v & 1:
            continue
        m = clos[v]
        comp = 0
        rest = m
        while rest:
            b = rest & -rest
            rest ^= b
            if clos[b.bit_length() - 1] & (1 << v):
                comp |= b
        comps.append((-clos[v].bit_count(), v, comp))
        seen |= comp
    comps.sort()
    return [c for _, _, c in comps]


def girth(succ: list[int], n: int) -> int:
    """Length of a shortest directed cycle; 0 if acyclic."""
    pred = [0] * n
    for v in range(n):
        m = succ[v]
        while m:
            b = m & -m
            m ^= b
            pred[b.bit_length() - 1] |= 1 << v
    best = 0
    for v in range(n):
        back = pred[v]
        if not back or not succ[v]:
            continue
        frontier = succ[v]
        visited = frontier
        length = 1
        while frontier:
            if frontier & back:
                if best == 0 or length + 1 < best:
                    best = length + 1
                break
            if best and length + 1 >= best:
                break
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= succ[b.bit_length() - 1]
            frontier = nxt & ~visited
            visited |= nxt
            length += 1
    return best


def _passes(succ, pred, n, full, require_strong, girth_target):
    """Shared filter body: strongness (cheap degree check first), then girth."""
    if require_strong:
        for v in range(n):
            if not succ[v] or not pred[v]:
                return False, False
        clos = [(1 << v) | succ[v] for v in range(n)]
        for k in range(n):
            ck = clos[k]
            bit = 1 << k
            for i in range(n):
                if clos[i] & bit:
                    clos[i] |= ck
        for m in clos:
            if m != full:
                return False, False
    if girth_target and girth(succ, n) != girth_target:
        return True, False
    return True, True


def filter_range(
    n: int,
    lo: int,
    hi: int,
    girth_target: int = 0,
    require_strong: bool = True,
) -> tuple[int, int, list[int]]:
    """Scan enumeration codes [lo, hi) and keep those passing the filters.

    Returns (seen, strong_count, survivor_codes).  strong_count is only
    meaningful when require_strong is set.
    """
    pairs = pair_table(n)
    npairs = len(pairs)
    full = (1 << n) - 1
    trits = [0] * npairs
    succ = [0] * n
    pred = [0] * n
    c = lo
    for k in range(npairs):
        t = c % 3
        c //= 3
        trits[k] = t
        i, j = pairs[k]
        if t == 1:
            succ[i] |= 1 << j
            pred[j] |= 1 << i
        elif t == 2:
            succ[j] |= 1 << i
            pred[i] |= 1 << j

    strong_count = 0
    survivors = []
    for code in range(lo, hi):
        strong, keep = _passes(succ, pred, n, full, require_strong, girth_target)
        if strong:
            strong_count += 1
        if keep:
            survivors.append(code)
        # odometer increment
        k = 0
        while k < npairs and trits[k] == 2:
            trits[k] = 0
            i, j = pairs[k]
            succ[j] &= ~(1 << i)
            pred[i] &= ~(1 << j)
            k += 1
        if k == npairs:
            break
        i, j = pairs[k]
        if trits[k] == 0:
            trits[k] = 1
            succ[i] |= 1 << j
            pred[j] |= 1 << i
        else:
            trits[k] = 2
            succ[i] &= ~(1 << j)
            pred[j] &= ~(1 << i)
            succ[j] |= 1 << i
            pred[i] |= 1 << j
    return hi - lo, strong_count, survivors


def filter_codes(
    n: int,
    codes: list[int],
    girth_target: int = 0,
    require_strong: bool = True,
) -> tuple[int, int, list[int]]:
    """Like filter_range but over an explicit code list (sampled sweeps)."""
    full = (1 << n) - 1
    strong_count = 0
    survivors = []
    for code in codes:
        succ = decode_code(n, code)
        pred = [0] * n
        for v in range(n):
            m = succ[v]
            while m:
                b = m & -m
                m ^= b
                pred[b.bit_length() - 1] |= 1 << v
        strong, keep = _passes(succ, pred, n, full, require_strong, girth_target)
        if strong:
            strong_count += 1
        if keep:
            survivors.append(code)
    return len(codes), strong_count, survivors
