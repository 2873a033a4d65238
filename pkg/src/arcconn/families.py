"""Generators and recognizers for the seven exception families H1..H7.

Each family is a parameterized strong girth-4 oriented graph that is not
lambda'-connected: every girth cycle covers all arcs.  H1 is a 4-cycle
(u,v,w,z) with four optional fans of path-of-length-2 vertices between the
consecutive cycle vertices.  H2..H7 share the two 4-cycles (u,v,w,z,u) and
(u,v,w,x,u) and differ in the extra vertices:

  H2  fans w->a_i->u and u->b_i->w
  H3  fans u->a_i->v, v->b_i->w and w->c_i->u
  H4  a vertex y with u->y->w adjacent to v, plus a fan w->a_i->u
  H5  an arc between x and z, plus a non-empty fan u->a_i->w
  H6  an arc between x and z, plus fans u->a_i->v and v->b_i->w
  H7  an arc between x and z, plus a vertex y with u->y->w adjacent to v

"Adjacent" clauses carry an explicit orientation choice ("yv" means the arc
y->v, "xz" means x->z, and so on).  Empty fans are allowed everywhere except
H5, whose definition does not extend the empty-set allowance; the p=0 shape
is nevertheless reachable as H6 with both fans empty.

Generated members use a fixed vertex layout: u=0, v=1, w=2, z=3, then x,
then y where present, then the fan vertices in definition order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional, Union

from .cycles import cycles_of_length, girth
from .digraph import Arc, Digraph
from .errors import InvalidDigraph, InvalidParams

RoleValue = Union[int, tuple[int, ...]]


class Family(Enum):
    H1 = "H1"
    H2 = "H2"
    H3 = "H3"
    H4 = "H4"
    H5 = "H5"
    H6 = "H6"
    H7 = "H7"

    @classmethod
    def parse(cls, text: str) -> "Family":
        try:
            return cls[text.upper()]
        except KeyError:
            raise InvalidParams(f"unknown family {text!r}; expected H1..H7") from None


SIZE_NAMES: dict[Family, tuple[str, ...]] = {
    Family.H1: ("p", "q", "r", "s"),
    Family.H2: ("p", "q"),
    Family.H3: ("p", "q", "r"),
    Family.H4: ("p",),
    Family.H5: ("p",),
    Family.H6: ("p", "q"),
    Family.H7: (),
}

# Orientation slots: each "is adjacent to" clause of the definition, with the
# two legal arc spellings; the first spelling is the generator default.
ORIENT_CHOICES: dict[Family, tuple[tuple[str, str], ...]] = {
    Family.H1: (),
    Family.H2: (),
    Family.H3: (),
    Family.H4: (("yv", "vy"),),
    Family.H5: (("xz", "zx"),),
    Family.H6: (("xz", "zx"),),
    Family.H7: (("xz", "zx"), ("yv", "vy")),
}


@dataclass(frozen=True)
class FamilyParams:
    family: Family
    sizes: tuple[int, ...] = ()
    orientations: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        names = SIZE_NAMES[self.family]
        if len(self.sizes) != len(names):
            raise InvalidParams(
                f"{self.family.value} takes sizes {names}, got {self.sizes}"
            )
        if any(s < 0 for s in self.sizes):
            raise InvalidParams("fan sizes must be non-negative")
        if self.family is Family.H5 and self.sizes[0] < 1:
            raise InvalidParams("H5 requires a non-empty fan (p >= 1)")
        choices = ORIENT_CHOICES[self.family]
        if len(self.orientations) != len(choices):
            raise InvalidParams(
                f"{self.family.value} takes {len(choices)} orientation choice(s), "
                f"got {self.orientations}"
            )
        for value, legal in zip(self.orientations, choices):
            if value not in legal:
                raise InvalidParams(
                    f"orientation {value!r} not one of {legal}"
                )

    @property
    def n(self) -> int:
        base = 4 if self.family is Family.H1 else 5
        if self.family in (Family.H4, Family.H7):
            base += 1
        return base + sum(self.sizes)

    def describe(self) -> str:
        bits = [f"{k}={v}" for k, v in zip(SIZE_NAMES[self.family], self.sizes)]
        bits += list(self.orientations)
        return f"{self.family.value}({','.join(bits)})"


@dataclass(frozen=True)
class FamilyMatch:
    family: Family
    params: FamilyParams
    roles: dict[str, RoleValue] = field(compare=False)

    def describe(self) -> str:
        parts = []
        for key in ("u", "v", "w", "z", "x", "y", "A", "B", "C", "D"):
            if key in self.roles:
                parts.append(f"{key}={self.roles[key]}")
        return f"{self.params.describe()} roles: {', '.join(parts)}"


def _oriented_arc(token: str, pos: dict[str, int]) -> Arc:
    return pos[token[0]], pos[token[1]]


def generate(params: FamilyParams) -> Digraph:
    """Realize the family member with the fixed vertex layout.

    Raises InvalidParams if the parameters are out of range or the prescribed
    arcs fail the oriented / strong / girth-4 requirements.
    """
    fam = params.family
    pos = {"u": 0, "v": 1, "w": 2, "z": 3}
    nxt = 4
    if fam is not Family.H1:
        pos["x"] = nxt
        nxt += 1
    if fam in (Family.H4, Family.H7):
        pos["y"] = nxt
        nxt += 1
    arcs: list[Arc] = [
        (pos["u"], pos["v"]),
        (pos["v"], pos["w"]),
        (pos["w"], pos["z"]),
        (pos["z"], pos["u"]),
    ]
    if fam is not Family.H1:
        arcs += [(pos["w"], pos["x"]), (pos["x"], pos["u"])]
    for token in params.orientations:
        arcs.append(_oriented_arc(token, pos))
    if fam in (Family.H4, Family.H7):
        arcs += [(pos["u"], pos["y"]), (pos["y"], pos["w"])]

    fans = {
        Family.H1: ("uv", "vw", "wz", "zu"),
        Family.H2: ("wu", "uw"),
        Family.H3: ("uv", "vw", "wu"),
        Family.H4: ("wu",),
        Family.H5: ("uw",),
        Family.H6: ("uv", "vw"),
        Family.H7: (),
    }[fam]
    for spec, count in zip(fans, params.sizes):
        src, dst = pos[spec[0]], pos[spec[1]]
        for _ in range(count):
            arcs += [(src, nxt), (nxt, dst)]
            nxt += 1

    try:
        D = Digraph(nxt, arcs)
    except InvalidDigraph as exc:
        raise InvalidParams(f"parameters produce an invalid digraph: {exc}") from exc
    if not D.is_strong():
        raise InvalidParams("parameters produce a non-strong digraph")
    if girth(D) != 4:
        raise InvalidParams("parameters break the girth-4 requirement")
    return D


# ---------------------------------------------------------------------------
# recognition


def _incidence(D: Digraph, t: int) -> frozenset[Arc]:
    inc = {(t, h) for h in D.out_neighbors(t)}
    inc.update((g, t) for g in D.in_neighbors(t))
    return frozenset(inc)


def _match_h1(D: Digraph) -> Optional[FamilyMatch]:
    arcset = set(D.arcs)
    for C in cycles_of_length(D, 4):
        for r in range(4):
            u, v, w, z = (C[(r + j) % 4] for j in range(4))
            fans: dict[str, list[int]] = {"A": [], "B": [], "C": [], "D": []}
            patterns = {
                "A": lambda t: frozenset({(u, t), (t, v)}),
                "B": lambda t: frozenset({(v, t), (t, w)}),
                "C": lambda t: frozenset({(w, t), (t, z)}),
                "D": lambda t: frozenset({(z, t), (t, u)}),
            }
            ok = True
            for t in range(D.n):
                if t in (u, v, w, z):
                    continue
                inc = _incidence(D, t)
                for name, pat in patterns.items():
                    if inc == pat(t):
                        fans[name].append(t)
                        break
                else:
                    ok = False
                    break
            if not ok:
                continue
            expected = {(u, v), (v, w), (w, z), (z, u)}
            for name, (src, dst) in zip("ABCD", ((u, v), (v, w), (w, z), (z, u))):
                for t in fans[name]:
                    expected.add((src, t))
                    expected.add((t, dst))
            if expected != arcset:
                continue
            params = FamilyParams(
                Family.H1,
                tuple(len(fans[k]) for k in "ABCD"),
            )
            roles: dict[str, RoleValue] = {"u": u, "v": v, "w": w, "z": z}
            for k in "ABCD":
                roles[k] = tuple(fans[k])
            return FamilyMatch(Family.H1, params, roles)
    return None


@dataclass
class _Buckets:
    plain_p: list[int]
    plain_q: list[int]
    fan_a: list[int]
    fan_b: list[int]
    core_p: list[int]
    y_q: list[int]


def _bucket_outside(D: Digraph, u: int, v: int, w: int) -> Optional[_Buckets]:
    """Classify every non-spine vertex by its full incidence pattern."""
    b = _Buckets([], [], [], [], [], [])
    for t in range(D.n):
        if t in (u, v, w):
            continue
        inc = _incidence(D, t)
        p = frozenset({(w, t), (t, u)})
        q = frozenset({(u, t), (t, w)})
        if inc == p:
            b.plain_p.append(t)
        elif inc == q:
            b.plain_q.append(t)
        elif inc == frozenset({(u, t), (t, v)}):
            b.fan_a.append(t)
        elif inc == frozenset({(v, t), (t, w)}):
            b.fan_b.append(t)
        elif p < inc and len(inc) == 3:
            b.core_p.append(t)
        elif inc == q | {(t, v)} or inc == q | {(v, t)}:
            b.y_q.append(t)
        else:
            return None
    return b


def _core_pair(D: Digraph, b: _Buckets, u: int, w: int) -> Optional[tuple[int, int, str]]:
    """Resolve the two linked 4th-cycle vertices of H5/H6/H7.

    Both carry the plain pattern w->t->u plus one arc joining them to each
    other.  Returns (z, x, orientation) with x the tail of the joining arc,
    so the recorded orientation token is always "xz".
    """
    if len(b.core_p) != 2 or b.plain_p:
        return None
    c, d = b.core_p
    extra_c = _incidence(D, c) - {(w, c), (c, u)}
    extra_d = _incidence(D, d) - {(w, d), (d, u)}
    if extra_c != extra_d or len(extra_c) != 1:
        return None
    (arc,) = extra_c
    if set(arc) != {c, d}:
        return None
    x, z = arc
    return z, x, "xz"


def _spine_expected(D: Digraph, u: int, v: int, w: int, b: _Buckets) -> set[Arc]:
    expected = {(u, v), (v, w)}
    for t in b.plain_p + b.core_p:
        expected.update({(w, t), (t, u)})
    for t in b.plain_q + b.y_q:
        expected.update({(u, t), (t, w)})
    for t in b.fan_a:
        expected.update({(u, t), (t, v)})
    for t in b.fan_b:
        expected.update({(v, t), (t, w)})
    if len(b.core_p) == 2:
        c, d = b.core_p
        if D.has_arc(c, d):
            expected.add((c, d))
        if D.has_arc(d, c):
            expected.add((d, c))
    for t in b.y_q:
        if D.has_arc(t, v):
            expected.add((t, v))
        if D.has_arc(v, t):
            expected.add((v, t))
    return expected


def _match_spine_families(D: Digraph, fam: Family) -> Optional[FamilyMatch]:
    arcset = set(D.arcs)
    for u, v in D.arcs:
        for w in D.out_neighbors(v):
            if w == u:
                continue
            b = _bucket_outside(D, u, v, w)
            if b is None:
                continue
            if _spine_expected(D, u, v, w, b) != arcset:
                continue
            match = _assemble(D, fam, u, v, w, b)
            if match is not None:
                return match
    return None


def _assemble(
    D: Digraph, fam: Family, u: int, v: int, w: int, b: _Buckets
) -> Optional[FamilyMatch]:
    roles: dict[str, RoleValue] = {"u": u, "v": v, "w": w}
    if fam is Family.H2:
        if b.fan_a or b.fan_b or b.core_p or b.y_q or len(b.plain_p) < 2:
            return None
        z, x, *rest = b.plain_p
        params = FamilyParams(fam, (len(rest), len(b.plain_q)))
        roles.update(z=z, x=x, A=tuple(rest), B=tuple(b.plain_q))
    elif fam is Family.H3:
        if b.plain_q or b.core_p or b.y_q or len(b.plain_p) < 2:
            return None
        z, x, *rest = b.plain_p
        params = FamilyParams(fam, (len(b.fan_a), len(b.fan_b), len(rest)))
        roles.update(z=z, x=x, A=tuple(b.fan_a), B=tuple(b.fan_b), C=tuple(rest))
    elif fam is Family.H4:
        if b.plain_q or b.fan_a or b.fan_b or b.core_p:
            return None
        if len(b.y_q) != 1 or len(b.plain_p) < 2:
            return None
        y = b.y_q[0]
        z, x, *rest = b.plain_p
        orient = "yv" if D.has_arc(y, v) else "vy"
        params = FamilyParams(fam, (len(rest),), (orient,))
        roles.update(z=z, x=x, y=y, A=tuple(rest))
    elif fam is Family.H5:
        if b.fan_a or b.fan_b or b.y_q or not b.plain_q:
            return None
        pair = _core_pair(D, b, u, w)
        if pair is None:
            return None
        z, x, orient = pair
        params = FamilyParams(fam, (len(b.plain_q),), (orient,))
        roles.update(z=z, x=x, A=tuple(b.plain_q))
    elif fam is Family.H6:
        if b.plain_q or b.y_q:
            return None
        pair = _core_pair(D, b, u, w)
        if pair is None:
            return None
        z, x, orient = pair
        params = FamilyParams(fam, (len(b.fan_a), len(b.fan_b)), (orient,))
        roles.update(z=z, x=x, A=tuple(b.fan_a), B=tuple(b.fan_b))
    elif fam is Family.H7:
        if b.plain_q or b.fan_a or b.fan_b or len(b.y_q) != 1:
            return None
        pair = _core_pair(D, b, u, w)
        if pair is None:
            return None
        z, x, orient = pair
        y = b.y_q[0]
        y_orient = "yv" if D.has_arc(y, v) else "vy"
        params = FamilyParams(fam, (), (orient, y_orient))
        roles.update(z=z, x=x, y=y)
    else:
        return None
    return FamilyMatch(fam, params, roles)


def match_family(D: Digraph) -> Optional[FamilyMatch]:
    """Exact recognizer: the first of H1..H7 whose arc prescription D equals.

    Returns None when D is not isomorphic to any generated member.
    """
    match = _match_h1(D)
    if match is not None:
        return match
    for fam in (Family.H2, Family.H3, Family.H4, Family.H5, Family.H6, Family.H7):
        match = _match_spine_families(D, fam)
        if match is not None:
            return match
    return None


# ---------------------------------------------------------------------------
# census


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _params_for_order(n: int) -> Iterator[FamilyParams]:
    for fam in Family:
        extra = n - (4 if fam is Family.H1 else 5)
        if fam in (Family.H4, Family.H7):
            extra -= 1
        parts = len(SIZE_NAMES[fam])
        if extra < 0:
            continue
        for sizes in _compositions(extra, parts):
            if fam is Family.H5 and sizes[0] < 1:
                continue
            slots = ORIENT_CHOICES[fam]
            for orients in _orient_combos(slots):
                yield FamilyParams(fam, sizes, orients)


def _orient_combos(slots: tuple[tuple[str, str], ...]) -> Iterator[tuple[str, ...]]:
    if not slots:
        yield ()
        return
    for choice in slots[0]:
        for rest in _orient_combos(slots[1:]):
            yield (choice,) + rest


def family_census(n: int) -> list[tuple[FamilyParams, Digraph]]:
    """One representative per isomorphism class of family members on n vertices.

    Members are generated for every admissible parameter choice and deduped
    by canonical form; each entry pairs the first parameter choice reaching
    the class with the canonically relabeled digraph.
    """
    if n < 4:
        raise InvalidParams("family members have at least 4 vertices")
    out: list[tuple[FamilyParams, Digraph]] = []
    seen: set[tuple[Arc, ...]] = set()
    for params in _params_for_order(n):
        D = generate(params)
        canon = D.canonical_form()
        if canon not in seen:
            seen.add(canon)
            out.append((params, Digraph(n, canon)))
    return out
