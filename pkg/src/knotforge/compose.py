"""Connected sum of two knot diagrams."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, DiagramError, canonical, check

__all__ = ["SpliceSpec", "connected_sum", "splice_sites", "default_splice"]


@dataclass(frozen=True)
class SpliceSpec:
    arc_a: int
    arc_b: int
    match_orientation: bool = True


def splice_sites(d: Diagram) -> list[int]:
    """Every arc is a legal place to cut; on the sphere any arc can face outward."""
    check(d)
    return list(range(d.arc_count))


def default_splice(d1: Diagram, d2: Diagram, match_orientation: bool = True) -> SpliceSpec:
    """Cut the highest-numbered arc of each operand."""
    return SpliceSpec(d1.arc_count - 1, d2.arc_count - 1, match_orientation)


def _cut_edge(d: Diagram, arc: int) -> int | None:
    if not 0 <= arc < d.arc_count:
        raise DiagramError(f"arc {arc} does not exist (diagram has {d.arc_count} arcs)")
    if not d.pd:
        return None
    return min(d.arcs[arc])


def connected_sum(d1: Diagram, d2: Diagram, s: SpliceSpec | None = None) -> Diagram:
    """Cut one arc in each knot and cross-join the four loose ends.

    With ``match_orientation`` false the second knot is reversed first.
    No crossings are added.
    """
    for d in (d1, d2):
        check(d)
        if d.components != 1:
            raise DiagramError("connected sum is defined here for knots only")
    if s is None:
        s = default_splice(d1, d2)
    e1 = _cut_edge(d1, s.arc_a)
    _cut_edge(d2, s.arc_b)
    if not s.match_orientation:
        # reverse keeps the arc partition, so arc_b still names the same strand
        d2 = _reverse_keep_labels(d2)
    e2 = _cut_edge(d2, s.arc_b)
    if e1 is None:
        return canonical(d2)
    if e2 is None:
        return canonical(d1)

    offset = d1.edge_count
    pd = [list(q) for q in d1.pd] + [[e + offset for e in q] for q in d2.pd]
    signs = d1.signs + d2.signs
    e2 += offset
    x1, s1 = d1.heads[e1]
    x2, s2 = d2.heads[e2 - offset]
    x2 += len(d1.pd)
    # swap the heads of the two cut edges
    pd[x1][s1] = e2
    pd[x2][s2] = e1
    return canonical(Diagram(tuple(tuple(q) for q in pd), signs))


def _reverse_keep_labels(d: Diagram) -> Diagram:
    return Diagram(tuple((c, e, a, b) for a, b, c, e in d.pd), d.signs, d.loops)
