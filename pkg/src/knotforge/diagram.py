"""Oriented knot and link diagrams.

A diagram is stored at the level of *edges*: the strand segments running
from one crossing passage to the next.  Each crossing is a 4-tuple of edge
labels listed counterclockwise starting from the incoming under-strand,
exactly like a PD code, together with its sign.  For a positive crossing
the over-strand enters at slot 3 and leaves at slot 1; for a negative one
it enters at slot 1 and leaves at slot 3.  The under-strand always runs
slot 0 -> slot 2.

Arcs (maximal runs between undercrossings) and the arc-level crossing
records are derived from the edge data on demand.  Crossingless
components are counted in ``loops``; the zero-crossing unknot is
``Diagram(loops=1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

__all__ = [
    "Crossing",
    "Diagram",
    "DiagramError",
    "UNKNOT",
    "validate",
    "check",
    "writhe",
    "crossing_count",
    "reverse",
    "mirror",
    "is_alternating",
    "split_components",
    "structurally_equal",
    "canonical",
    "faces",
    "is_planar",
]


class DiagramError(ValueError):
    """Malformed diagram, or an operation applied outside its domain."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class Crossing(NamedTuple):
    """Arc-level view of one crossing."""

    over: int
    under_in: int
    under_out: int
    sign: int


def in_slots(sign: int) -> tuple[int, int]:
    return (0, 3) if sign > 0 else (0, 1)


def out_slots(sign: int) -> tuple[int, int]:
    return (1, 2) if sign > 0 else (2, 3)


def is_in_slot(sign: int, slot: int) -> bool:
    return slot == 0 or slot == (3 if sign > 0 else 1)


@dataclass(frozen=True)
class Diagram:
    pd: tuple[tuple[int, int, int, int], ...] = ()
    signs: tuple[int, ...] = ()
    loops: int = 0

    # -- edge-level structure --------------------------------------------
    @cached_property
    def darts(self) -> dict[int, list[tuple[int, int]]]:
        out: dict[int, list[tuple[int, int]]] = {}
        for x, quad in enumerate(self.pd):
            for s, e in enumerate(quad):
                out.setdefault(e, []).append((x, s))
        return out

    @cached_property
    def heads(self) -> dict[int, tuple[int, int]]:
        """Edge label -> (crossing, slot) where the edge ends."""
        return {
            e: (x, s)
            for x, quad in enumerate(self.pd)
            for s, e in enumerate(quad)
            if is_in_slot(self.signs[x], s)
        }

    @cached_property
    def tails(self) -> dict[int, tuple[int, int]]:
        return {
            e: (x, s)
            for x, quad in enumerate(self.pd)
            for s, e in enumerate(quad)
            if not is_in_slot(self.signs[x], s)
        }

    @cached_property
    def next_edge(self) -> dict[int, int]:
        return {e: self.pd[x][(s + 2) % 4] for e, (x, s) in self.heads.items()}

    @cached_property
    def cycles(self) -> list[list[int]]:
        """Edge cycles (one per component that has crossings), each in
        traversal order starting from its smallest label."""
        seen = set()
        out = []
        for e in sorted(self.heads):
            if e in seen:
                continue
            cyc = []
            while e not in seen:
                seen.add(e)
                cyc.append(e)
                e = self.next_edge[e]
            out.append(cyc)
        return out

    @property
    def edge_count(self) -> int:
        return 2 * len(self.pd)

    # -- arc-level structure -----------------------------------------------
    @cached_property
    def arcs(self) -> list[tuple[int, ...]]:
        """Arcs as tuples of edges, numbered by smallest edge label.

        Free loops are not listed; they take the arc ids after these.
        """
        found = []
        for cyc in self.cycles:
            starts = [i for i, e in enumerate(cyc) if self.tails[e][1] == 2]
            if not starts:
                found.append(tuple(cyc))
                continue
            n = len(cyc)
            for k, i in enumerate(starts):
                j = starts[(k + 1) % len(starts)]
                length = (j - i) % n or n
                found.append(tuple(cyc[(i + m) % n] for m in range(length)))
        found.sort(key=min)
        return found

    @cached_property
    def arc_of_edge(self) -> dict[int, int]:
        return {e: a for a, arc in enumerate(self.arcs) for e in arc}

    @cached_property
    def crossings(self) -> list[Crossing]:
        out = []
        for x, quad in enumerate(self.pd):
            sign = self.signs[x]
            over_in = quad[3] if sign > 0 else quad[1]
            out.append(Crossing(
                self.arc_of_edge[over_in],
                self.arc_of_edge[quad[0]],
                self.arc_of_edge[quad[2]],
                sign,
            ))
        return out

    @property
    def arc_count(self) -> int:
        return len(self.arcs) + self.loops

    @cached_property
    def successor(self) -> dict[int, int]:
        """Arc -> the arc that follows it through its terminating undercrossing."""
        succ = {}
        for a, arc in enumerate(self.arcs):
            x, s = self.heads[arc[-1]]
            succ[a] = self.arc_of_edge[self.pd[x][2]] if s == 0 else a
        base = len(self.arcs)
        for k in range(self.loops):
            succ[base + k] = base + k
        return succ

    @property
    def components(self) -> int:
        return len(self.cycles) + self.loops

    @property
    def is_unknot_diagram(self) -> bool:
        """True only for the zero-crossing unknot."""
        return not self.pd and self.loops == 1

    def canonical(self) -> "Diagram":
        return canonical(self)

    def key(self) -> tuple:
        """Hashable structural key (of the canonical form)."""
        c = canonical(self)
        return (c.pd, c.signs, c.loops)


UNKNOT = Diagram(loops=1)


# ---------------------------------------------------------------------------
# validation

def validate(d: Diagram) -> list[str]:
    """Return the list of structural violations; empty means valid."""
    v = []
    if len(d.pd) != len(d.signs):
        return [f"{len(d.pd)} crossings but {len(d.signs)} signs"]
    if d.loops < 0:
        v.append(f"negative free-loop count {d.loops}")
    for x, (quad, sign) in enumerate(zip(d.pd, d.signs)):
        if len(quad) != 4 or not all(isinstance(e, int) and e >= 0 for e in quad):
            v.append(f"crossing {x}: expected 4 nonnegative edge labels, got {quad!r}")
        if sign not in (1, -1):
            v.append(f"crossing {x}: sign must be +1 or -1, got {sign!r}")
    if v:
        return v

    for slot, role in ((0, "under_in"), (2, "under_out")):
        where: dict[int, int] = {}
        for x, quad in enumerate(d.pd):
            e = quad[slot]
            if e in where:
                v.append(f"arc {e} appears twice as {role} (crossings {where[e]} and {x})")
            else:
                where[e] = x

    counts: dict[int, list[tuple[int, int]]] = {}
    for x, quad in enumerate(d.pd):
        for s, e in enumerate(quad):
            counts.setdefault(e, []).append((x, s))
    for e, ds in sorted(counts.items()):
        if len(ds) != 2:
            v.append(f"edge {e} appears {len(ds)} times (expected 2) at {ds}")
            continue
        ins = sum(is_in_slot(d.signs[x], s) for x, s in ds)
        if ins != 1:
            kind = "entering" if ins == 2 else "leaving"
            v.append(f"edge {e} is {kind} at both ends {ds}; orientation inconsistent")
    labels = sorted(counts)
    if labels != list(range(len(labels))):
        v.append(f"edge labels are not 0..{len(labels) - 1}: {labels}")
    if v:
        return v

    if d.components < 1:
        v.append("diagram has no components")
        return v
    # arc-level invariants
    n_arcs = len(d.arcs)
    ins = sorted(c.under_in for c in d.crossings)
    outs = sorted(c.under_out for c in d.crossings)
    if ins != outs or len(set(ins)) != len(ins):
        v.append("under_in / under_out arcs are not each used exactly once")
    unused = set(range(n_arcs)) - set(ins)
    for a in unused:
        # only components with no undercrossing may own an arc outside the bijection
        if any(d.tails[e][1] == 2 or d.heads[e][1] == 0 for e in d.arcs[a]):
            v.append(f"arc {a} never ends at an undercrossing")
    succ = d.successor
    if sorted(succ.values()) != list(range(d.arc_count)):
        v.append("successor is not a permutation of the arcs")
    elif _count_cycles(succ) != d.components:
        v.append("successor cycle count differs from the component count")
    return v


def check(d: Diagram) -> Diagram:
    """Raise :class:`DiagramError` unless ``d`` validates; return ``d``."""
    v = validate(d)
    if v:
        raise DiagramError("invalid diagram: " + "; ".join(v), v)
    return d


def _count_cycles(perm: dict[int, int]) -> int:
    seen = set()
    n = 0
    for start in perm:
        if start in seen:
            continue
        n += 1
        a = start
        while a not in seen:
            seen.add(a)
            a = perm[a]
    return n


# ---------------------------------------------------------------------------
# canonical form and structural edits

def canonical(d: Diagram) -> Diagram:
    """Relabel edges in traversal order.

    Components are visited in the order their first undercrossing appears
    in the crossing list (over-only components last, by first overpass),
    each walked from the edge entering that undercrossing.  Crossing order
    and signs are kept.
    """
    starts = [quad[0] for quad in d.pd]
    starts += [quad[3] if sgn > 0 else quad[1] for quad, sgn in zip(d.pd, d.signs)]
    order = []
    seen = set()
    nxt = d.next_edge
    for e in starts:
        while e not in seen:
            seen.add(e)
            order.append(e)
            e = nxt[e]
    relabel = {old: new for new, old in enumerate(order)}
    pd = tuple(tuple(relabel[e] for e in quad) for quad in d.pd)
    return Diagram(pd, d.signs, d.loops)


def structurally_equal(a: Diagram, b: Diagram) -> bool:
    return a.key() == b.key()


def switch_quad(quad, sign):
    """Exchange over and under at one crossing (slots rotate, sign flips)."""
    a, b, c, e = quad
    if sign > 0:
        return (e, a, b, c), -1
    return (b, c, e, a), 1


def contract(d: Diagram, remove, joins) -> Diagram:
    """Delete crossings ``remove`` and merge edge labels along ``joins``.

    Merged edge classes that no longer touch any remaining crossing become
    free loops.  The result keeps surviving labels (not yet canonical).
    """
    parent: dict[int, int] = {}

    def find(e):
        while parent.get(e, e) != e:
            e = parent[e]
        return e

    for a, b in joins:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    remove = set(remove)
    kept = [x for x in range(len(d.pd)) if x not in remove]
    pd = tuple(tuple(find(e) for e in d.pd[x]) for x in kept)
    signs = tuple(d.signs[x] for x in kept)
    alive = {e for quad in pd for e in quad}
    touched = {find(e) for x in remove for e in d.pd[x]}
    return Diagram(pd, signs, d.loops + len(touched - alive))


# ---------------------------------------------------------------------------
# elementary operations

def writhe(d: Diagram) -> int:
    check(d)
    return sum(d.signs)


def crossing_count(d: Diagram) -> int:
    return len(d.pd)


def reverse(d: Diagram) -> Diagram:
    """Reverse the orientation of every component; signs are preserved."""
    check(d)
    pd = tuple((c, e, a, b) for a, b, c, e in d.pd)
    return canonical(Diagram(pd, d.signs, d.loops))


def mirror(d: Diagram) -> Diagram:
    """Swap over and under at every crossing."""
    check(d)
    pd, signs = [], []
    for quad, sign in zip(d.pd, d.signs):
        q, s = switch_quad(quad, sign)
        pd.append(q)
        signs.append(s)
    return canonical(Diagram(tuple(pd), tuple(signs), d.loops))


def is_alternating(d: Diagram) -> bool:
    check(d)
    if d.components != 1:
        raise DiagramError("is_alternating is defined for knots only")
    if not d.pd:
        return True
    (cyc,) = d.cycles
    over = [d.heads[e][1] % 2 == 1 for e in cyc]
    return all(over[i] != over[i - 1] for i in range(len(over)))


def component_edges(d: Diagram) -> list[list[int]]:
    return d.cycles


def split_components(d: Diagram):
    """Partition the arcs by component.

    Returns ``(parts, split)`` where ``parts`` is a list of
    ``(component_id, frozenset_of_arc_ids)`` and ``split`` is true when the
    components fall into two or more groups that share no crossing.
    """
    check(d)
    aoe = d.arc_of_edge
    parts = []
    comp_of_edge = {}
    for i, cyc in enumerate(d.cycles):
        parts.append((i, frozenset(aoe[e] for e in cyc)))
        for e in cyc:
            comp_of_edge[e] = i
    base = len(d.arcs)
    for k in range(d.loops):
        parts.append((len(d.cycles) + k, frozenset({base + k})))

    parent = list(range(len(parts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for quad in d.pd:
        a, b = find(comp_of_edge[quad[0]]), find(comp_of_edge[quad[1]])
        parent[a] = b
    groups = {find(i) for i in range(len(parts))}
    return parts, len(groups) > 1


# ---------------------------------------------------------------------------
# planar structure

def faces(d: Diagram) -> list[list[tuple[int, int]]]:
    """Faces of the projection as cyclic lists of darts ``(crossing, slot)``.

    Walking from a dart along its edge to the far dart ``(y, t)``, the walk
    continues from ``(y, t - 1)``; the face lies to the left.  Free loops
    contribute nothing.
    """
    other = {}
    for e, ds in d.darts.items():
        p, q = ds
        other[p] = q
        other[q] = p
    seen = set()
    out = []
    for x in range(len(d.pd)):
        for s in range(4):
            if (x, s) in seen:
                continue
            face = []
            dart = (x, s)
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                y, t = other[dart]
                dart = (y, (t - 1) % 4)
            out.append(face)
    return out


def is_planar(d: Diagram) -> bool:
    """Euler-characteristic test of the PD rotation system."""
    if not d.pd:
        return True
    # connected pieces of the crossing graph
    parent = list(range(len(d.pd)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for ds in d.darts.values():
        (x, _), (y, _) = ds
        parent[find(x)] = find(y)
    pieces = len({find(i) for i in range(len(d.pd))})
    v, e, f = len(d.pd), 2 * len(d.pd), len(faces(d))
    return v - e + f == 2 * pieces
