"""Reidemeister moves on PD-level diagrams.

Sites are found from the planar structure implied by the PD slot order:
faces are orbits of the dart walk in :func:`knotforge.diagram.faces`.
A *side* of a face is written ``(edge, along)`` where ``along`` says
whether walking the face boundary follows the edge's orientation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .diagram import Diagram, DiagramError, canonical, check, contract, faces

__all__ = [
    "KINDS",
    "MoveSite",
    "MoveError",
    "detect",
    "detect_all",
    "apply",
    "random_walk",
    "walk",
]

KINDS = ("R1_add", "R1_remove", "R2_add", "R2_remove", "R3")
_ADDS = {"R1_add": 1, "R2_add": 2}
_REMOVALS = ("R1_remove", "R2_remove")


class MoveError(DiagramError):
    """The requested move does not match the diagram at that site."""


@dataclass(frozen=True)
class MoveSite:
    """One applicable move.

    ``params`` by kind:

    * ``R1_add``: ``(edge, sign, side)`` with side ``"left"``/``"right"``
      of the direction of travel, or ``("loop", sign, None)`` on a
      crossingless component.
    * ``R1_remove``: ``(crossing,)``.
    * ``R2_add``: ``(side_e, side_f, e_over)``; a finger of edge ``e``
      is pushed across edge ``f`` through their common face.
    * ``R2_remove``: ``(crossing_a, crossing_b)`` bounding a bigon.
    * ``R3``: the three darts of a triangular face.
    """

    kind: str
    params: tuple


# ---------------------------------------------------------------------------
# detection

def _other_dart(d: Diagram):
    other = {}
    for p, q in d.darts.values():
        other[p] = q
        other[q] = p
    return other


def _face_sides(d: Diagram, face):
    tails = d.tails
    return [(d.pd[x][s], tails[d.pd[x][s]] == (x, s)) for x, s in face]


def _r1_sites(d: Diagram):
    sites = []
    if d.loops:
        sites += [MoveSite("R1_add", ("loop", sign, None)) for sign in (1, -1)]
    for e in sorted(d.heads):
        for sign in (1, -1):
            for side in ("left", "right"):
                sites.append(MoveSite("R1_add", (e, sign, side)))
    return sites


def _kinks(d: Diagram):
    sites = []
    for x, quad in enumerate(d.pd):
        for e in set(quad):
            (x1, s1), (x2, s2) = d.darts[e]
            if x1 == x2 == x and (s1 - s2) % 4 in (1, 3):
                sites.append(MoveSite("R1_remove", (x,)))
                break
    return sites


def _r2_add_sites(d: Diagram):
    sites = []
    for face in faces(d):
        sides = _face_sides(d, face)
        for i in range(len(sides)):
            for j in range(i + 1, len(sides)):
                if sides[i][0] == sides[j][0]:
                    continue
                for e_over in (True, False):
                    sites.append(MoveSite("R2_add", (sides[i], sides[j], e_over)))
    return sites


def _bigons(d: Diagram):
    other = _other_dart(d)
    sites = []
    for face in faces(d):
        if len(face) != 2:
            continue
        (x, s), (y, t) = face
        if x == y:
            continue
        _, s2 = other[(x, s)]
        _, t2 = other[(y, t)]
        if s % 2 == s2 % 2 and t % 2 == t2 % 2 and s % 2 != t % 2:
            sites.append(MoveSite("R2_remove", (min(x, y), max(x, y))))
    return sorted(set(sites), key=lambda m: m.params)


def _triangles(d: Diagram):
    other = _other_dart(d)
    sites = []
    for face in faces(d):
        if len(face) != 3 or len({x for x, _ in face}) != 3:
            continue
        for x, s in face:
            _, t = other[(x, s)]
            if s % 2 == 1 and t % 2 == 1:
                sites.append(MoveSite("R3", tuple(face)))
                break
    return sites


def detect(d: Diagram, kind: str) -> list[MoveSite]:
    """All sites where ``kind`` applies, in a deterministic order."""
    check(d)
    if kind == "R1_add":
        return _r1_sites(d)
    if kind == "R1_remove":
        return _kinks(d)
    if kind == "R2_add":
        return _r2_add_sites(d)
    if kind == "R2_remove":
        return _bigons(d)
    if kind == "R3":
        return _triangles(d)
    raise ValueError(f"unknown move kind {kind!r}; expected one of {KINDS}")


def detect_all(d: Diagram) -> dict[str, list[MoveSite]]:
    return {kind: detect(d, kind) for kind in KINDS}


# ---------------------------------------------------------------------------
# application

def apply(d: Diagram, m: MoveSite) -> Diagram:
    """Apply move ``m``; raises :class:`MoveError` if the site does not match."""
    if m not in detect(d, m.kind):
        raise MoveError(f"inapplicable move: {m.kind} pattern check failed for {m.params!r}")
    if m.kind == "R1_add":
        return canonical(_r1_add(d, *m.params))
    if m.kind == "R1_remove":
        (x,) = m.params
        return canonical(_straight_through(d, [x]))
    if m.kind == "R2_add":
        return canonical(_r2_add(d, *m.params))
    if m.kind == "R2_remove":
        return canonical(_straight_through(d, list(m.params)))
    return canonical(_r3(d, m.params))


def _straight_through(d: Diagram, xs) -> Diagram:
    joins = []
    for x in xs:
        a, b, c, e = d.pd[x]
        joins += [(a, c), (b, e)]
    return contract(d, xs, joins)


def _kink_quad(e_in, e_out, loop, sign, side):
    if sign > 0:
        return (loop, loop, e_out, e_in) if side == "right" else (e_in, e_out, loop, loop)
    return (loop, e_in, e_out, loop) if side == "left" else (e_in, loop, loop, e_out)


def _r1_add(d: Diagram, e, sign, side) -> Diagram:
    n = d.edge_count
    if e == "loop":
        quad = _kink_quad(n, n, n + 1, sign, "left" if sign > 0 else "right")
        return Diagram(d.pd + (quad,), d.signs + (sign,), d.loops - 1)
    pd = [list(q) for q in d.pd]
    hx, hs = d.heads[e]
    pd[hx][hs] = n + 1
    quad = _kink_quad(e, n + 1, n, sign, side)
    return Diagram(tuple(map(tuple, pd)) + (quad,), d.signs + (sign,), d.loops)


_CCW = ("E", "N", "W", "S")


def _quad_from_arms(arms, over):
    """``arms``: compass -> (label, entering); ``over``: the over-strand's compass pair."""
    start = next(k for k, (_, entering) in arms.items() if entering and k not in over)
    i = _CCW.index(start)
    order = [_CCW[(i + k) % 4] for k in range(4)]
    quad = tuple(arms[k][0] for k in order)
    sign = 1 if arms[order[3]][1] else -1
    return quad, sign


def _r2_add(d: Diagram, side_e, side_f, e_over) -> Diagram:
    (e, along_e), (f, along_f) = side_e, side_f
    n = d.edge_count
    e1, e2, e3 = e, n, n + 1
    f1, f2, f3 = f, n + 2, n + 3
    pd = [list(q) for q in d.pd]
    hx, hs = d.heads[e]
    pd[hx][hs] = e3
    hx, hs = d.heads[f]
    pd[hx][hs] = f3

    # local picture: the face lies above f (walked eastward) and below e
    # (walked westward); the finger of e dips across f at R, returns at L
    right, left = {}, {}
    if along_e:
        right.update(N=(e1, True), S=(e2, False))
        left.update(S=(e2, True), N=(e3, False))
    else:
        left.update(N=(e1, True), S=(e2, False))
        right.update(S=(e2, True), N=(e3, False))
    if along_f:
        left.update(W=(f1, True), E=(f2, False))
        right.update(W=(f2, True), E=(f3, False))
    else:
        right.update(E=(f1, True), W=(f2, False))
        left.update(E=(f2, True), W=(f3, False))
    over = ("N", "S") if e_over else ("E", "W")
    qr, sr = _quad_from_arms(right, over)
    ql, sl = _quad_from_arms(left, over)
    return Diagram(tuple(map(tuple, pd)) + (qr, ql), d.signs + (sr, sl), d.loops)


def _r3(d: Diagram, face) -> Diagram:
    other = _other_dart(d)
    pd = [list(q) for q in d.pd]
    for x, s in face:
        side = d.pd[x][s]
        y, t = other[(x, s)]
        outer_here = d.pd[x][(s + 2) % 4]
        outer_there = d.pd[y][(t + 2) % 4]
        pd[x][s] = outer_there
        pd[x][(s + 2) % 4] = side
        pd[y][t] = outer_here
        pd[y][(t + 2) % 4] = side
    return Diagram(tuple(map(tuple, pd)), d.signs, d.loops)


# ---------------------------------------------------------------------------
# random walks

def walk(d: Diagram, steps: int, seed, cap: int = 16):
    """Yield ``(site, diagram)`` after each of ``steps`` random moves.

    A move kind is drawn uniformly among the kinds with at least one site,
    then a site uniformly among that kind's sites.  Additions that would
    exceed ``cap`` crossings are skipped, and at the cap removals are
    preferred whenever one exists.
    """
    rng = random.Random(seed)
    check(d)
    for _ in range(steps):
        c = len(d.pd)
        options = {}
        for kind in KINDS:
            if c + _ADDS.get(kind, 0) > cap:
                continue
            sites = detect(d, kind)
            if sites:
                options[kind] = sites
        if c >= cap:
            removals = {k: v for k, v in options.items() if k in _REMOVALS}
            options = removals or options
        kind = rng.choice(sorted(options))
        site = rng.choice(options[kind])
        d = apply(d, site)
        yield site, d


def random_walk(d: Diagram, steps: int, seed, cap: int = 16) -> Diagram:
    for _, d in walk(d, steps, seed, cap):
        pass
    return d
