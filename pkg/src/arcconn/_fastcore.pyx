# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels.

Semantics must match arcconn._purecore exactly; the parity test suite runs
both backends side by side.  Masks are packed into single uint64 words, so
this backend only handles n <= 64 (the dispatcher enforces that).
"""

from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "fast"

cdef enum:
    MAXN = 64
    MAXPAIRS = 2016  # 64 * 63 // 2


cdef inline uint64_t _full_mask(int n) nogil:
    if n >= 64:
        return <uint64_t>0 - 1
    return ((<uint64_t>1) << n) - 1


cdef void _closure(uint64_t* succ, int n, uint64_t* clos) nogil:
    cdef int i, k
    cdef uint64_t ck, bit
    for i in range(n):
        clos[i] = succ[i] | ((<uint64_t>1) << i)
    for k in range(n):
        ck = clos[k]
        bit = (<uint64_t>1) << k
        for i in range(n):
            if clos[i] & bit:
                clos[i] |= ck


cdef bint _strong(uint64_t* succ, int n) nogil:
    cdef uint64_t clos[MAXN]
    cdef uint64_t full = _full_mask(n)
    cdef int i
    _closure(succ, n, clos)
    for i in range(n):
        if clos[i] != full:
            return 0
    return 1


cdef int _girth(uint64_t* succ, int n) nogil:
    cdef uint64_t pred[MAXN]
    cdef uint64_t m, frontier, visited, nxt, back
    cdef int v, u, best, length
    for v in range(n):
        pred[v] = 0
    for v in range(n):
        m = succ[v]
        while m:
            u = __builtin_ctzll(m)
            m &= m - 1
            pred[u] |= (<uint64_t>1) << v
    best = 0
    for v in range(n):
        back = pred[v]
        if back == 0 or succ[v] == 0:
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
                u = __builtin_ctzll(m)
                m &= m - 1
                nxt |= succ[u]
            frontier = nxt & ~visited
            visited |= nxt
            length += 1
    return best


cdef inline void _decode_into(int n, object code, uint64_t* succ, uint64_t* pred):
    cdef int i, j, t
    for i in range(n):
        succ[i] = 0
        pred[i] = 0
    for i in range(n):
        for j in range(i + 1, n):
            t = code % 3
            code = code // 3
            if t == 1:
                succ[i] |= (<uint64_t>1) << j
                pred[j] |= (<uint64_t>1) << i
            elif t == 2:
                succ[j] |= (<uint64_t>1) << i
                pred[i] |= (<uint64_t>1) << j


cdef inline bint _eval(uint64_t* succ, uint64_t* pred, int n, uint64_t full,
                       bint require_strong, int girth_target, bint* strong_out):
    cdef int v
    cdef bint strong = 1
    if require_strong:
        for v in range(n):
            if succ[v] == 0 or pred[v] == 0:
                strong = 0
                break
        if strong:
            strong = _strong(succ, n)
        strong_out[0] = strong
        if not strong:
            return 0
    else:
        strong_out[0] = 1
    if girth_target and _girth(succ, n) != girth_target:
        return 0
    return 1


def pair_table(int n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def decode_code(int n, code):
    cdef uint64_t succ[MAXN]
    cdef uint64_t pred[MAXN]
    _decode_into(n, code, succ, pred)
    return [succ[v] for v in range(n)]


def reach_closure(succ, int n):
    cdef uint64_t c_succ[MAXN]
    cdef uint64_t clos[MAXN]
    cdef int v
    for v in range(n):
        c_succ[v] = succ[v]
    _closure(c_succ, n, clos)
    return [clos[v] for v in range(n)]


def is_strong(succ, int n):
    cdef uint64_t c_succ[MAXN]
    cdef int v
    if n == 0:
        return False
    for v in range(n):
        c_succ[v] = succ[v]
    return bool(_strong(c_succ, n))


def scc_masks(succ, int n):
    cdef uint64_t c_succ[MAXN]
    cdef uint64_t clos[MAXN]
    cdef int v
    for v in range(n):
        c_succ[v] = succ[v]
    _closure(c_succ, n, clos)
    comps = []
    cdef uint64_t seen = 0, comp, rest, b
    cdef int u
    for v in range(n):
        if (seen >> v) & 1:
            continue
        comp = 0
        rest = clos[v]
        while rest:
            u = __builtin_ctzll(rest)
            rest &= rest - 1
            if clos[u] & ((<uint64_t>1) << v):
                comp |= (<uint64_t>1) << u
        comps.append((-__builtin_popcountll(clos[v]), v, comp))
        seen |= comp
    comps.sort()
    return [c for _, _, c in comps]


def girth(succ, int n):
    cdef uint64_t c_succ[MAXN]
    cdef int v
    for v in range(n):
        c_succ[v] = succ[v]
    return _girth(c_succ, n)


def filter_range(int n, lo, hi, int girth_target=0, bint require_strong=True):
    """Scan enumeration codes [lo, hi); returns (seen, strong_count, survivors).

    The odometer increments trits in place, so only survivor codes touch
    Python integer arithmetic.
    """
    cdef uint64_t succ[MAXN]
    cdef uint64_t pred[MAXN]
    cdef int trits[MAXPAIRS]
    cdef int pi[MAXPAIRS]
    cdef int pj[MAXPAIRS]
    cdef int npairs = 0, i, j, k, t
    cdef uint64_t full = _full_mask(n)
    cdef int64_t count, idx, strong_count = 0
    cdef bint strong, keep

    for i in range(n):
        succ[i] = 0
        pred[i] = 0
    for i in range(n):
        for j in range(i + 1, n):
            pi[npairs] = i
            pj[npairs] = j
            npairs += 1
    c = lo
    for k in range(npairs):
        t = c % 3
        c = c // 3
        trits[k] = t
        i = pi[k]
        j = pj[k]
        if t == 1:
            succ[i] |= (<uint64_t>1) << j
            pred[j] |= (<uint64_t>1) << i
        elif t == 2:
            succ[j] |= (<uint64_t>1) << i
            pred[i] |= (<uint64_t>1) << j

    count = hi - lo
    survivors = []
    for idx in range(count):
        keep = _eval(succ, pred, n, full, require_strong, girth_target, &strong)
        if strong:
            strong_count += 1
        if keep:
            survivors.append(lo + idx)
        k = 0
        while k < npairs and trits[k] == 2:
            trits[k] = 0
            i = pi[k]
            j = pj[k]
            succ[j] &= ~((<uint64_t>1) << i)
            pred[i] &= ~((<uint64_t>1) << j)
            k += 1
        if k == npairs:
            break
        i = pi[k]
        j = pj[k]
        if trits[k] == 0:
            trits[k] = 1
            succ[i] |= (<uint64_t>1) << j
            pred[j] |= (<uint64_t>1) << i
        else:
            trits[k] = 2
            succ[i] &= ~((<uint64_t>1) << j)
            pred[j] &= ~((<uint64_t>1) << i)
            succ[j] |= (<uint64_t>1) << i
            pred[i] |= (<uint64_t>1) << j
    return hi - lo, strong_count, survivors


def filter_codes(int n, codes, int girth_target=0, bint require_strong=True):
    cdef uint64_t succ[MAXN]
    cdef uint64_t pred[MAXN]
    cdef uint64_t full = _full_mask(n)
    cdef int64_t strong_count = 0
    cdef bint strong, keep
    survivors = []
    for code in codes:
        _decode_into(n, code, succ, pred)
        keep = _eval(succ, pred, n, full, require_strong, girth_target, &strong)
        if strong:
            strong_count += 1
        if keep:
            survivors.append(code)
    return len(codes), strong_count, survivors
