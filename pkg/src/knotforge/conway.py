"""Conway polynomial by the skein relation.

    ∇(L+) - ∇(L-) = z ∇(L0),   ∇(unknot) = 1,   ∇(split link) = 0.

The recursion walks each component from a fixed base point and switches
the first crossing that is met on its under-strand first.  Once no such
crossing is left the diagram is descending: a stack of unknots, so its
value is 1 for one component and 0 otherwise.  This is independent of
the matrix method in :mod:`knotforge.alexander` and serves as its check.
"""

from __future__ import annotations

from .diagram import Diagram, DiagramError, canonical, check, contract, split_components, switch_quad
from .laurent import LaurentPoly, normalize_units, render_terms

__all__ = [
    "ConwayPoly",
    "switch_crossing",
    "smooth_crossing",
    "conway_polynomial",
    "conway_to_alexander",
]


class ConwayPoly:
    """Integer polynomial in ``z`` (nonnegative exponents only)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs}
        if any(e < 0 for e in coeffs):
            raise ValueError("Conway polynomials have no negative powers of z")
        self._coeffs = {e: c for e, c in coeffs.items() if c}

    @classmethod
    def parse(cls, text: str) -> "ConwayPoly":
        return cls(LaurentPoly.parse(text, var="z").coeffs)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def exponents(self) -> list[int]:
        return sorted(self._coeffs)

    def __add__(self, other):
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return ConwayPoly(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k: int) -> "ConwayPoly":
        return ConwayPoly({e: k * c for e, c in self._coeffs.items()})

    def times_z(self) -> "ConwayPoly":
        return ConwayPoly({e + 1: c for e, c in self._coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = ConwayPoly(other)
        return isinstance(other, ConwayPoly) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def render(self) -> str:
        return render_terms(sorted(self._coeffs.items()), "z")

    __str__ = render

    def __repr__(self):
        return f"ConwayPoly({self.render()!r})"


_ONE = ConwayPoly(1)
_ZERO = ConwayPoly()


def _index(d: Diagram, i: int):
    if not 0 <= i < len(d.pd):
        raise IndexError(f"crossing index {i} out of range for {len(d.pd)} crossings")


def _switch(d: Diagram, i: int) -> Diagram:
    quad, sign = switch_quad(d.pd[i], d.signs[i])
    pd = d.pd[:i] + (quad,) + d.pd[i + 1:]
    signs = d.signs[:i] + (sign,) + d.signs[i + 1:]
    return Diagram(pd, signs, d.loops)


def _smooth(d: Diagram, i: int) -> Diagram:
    a, b, c, e = d.pd[i]
    joins = [(a, b), (e, c)] if d.signs[i] > 0 else [(a, e), (b, c)]
    return contract(d, [i], joins)


def switch_crossing(d: Diagram, i: int) -> Diagram:
    """Exchange over and under at crossing ``i``; the sign flips."""
    check(d)
    _index(d, i)
    return canonical(_switch(d, i))


def smooth_crossing(d: Diagram, i: int) -> Diagram:
    """Oriented smoothing of crossing ``i`` (the L0 of the skein triple)."""
    check(d)
    _index(d, i)
    return canonical(_smooth(d, i))


def conway_polynomial(d: Diagram, stats: dict | None = None) -> ConwayPoly:
    """Conway polynomial of any diagram (knot or link).

    ``stats``, when given, receives ``nodes``: the number of distinct
    diagrams expanded by the recursion.
    """
    check(d)
    memo: dict = {}
    counter = {"nodes": 0}
    result = _nabla(d, memo, counter)
    if stats is not None:
        stats.update(counter)
    return result


def _nabla(d: Diagram, memo: dict, counter: dict) -> ConwayPoly:
    key = d.key()
    if key in memo:
        return memo[key]
    counter["nodes"] += 1
    if not d.pd:
        value = _ONE if d.components == 1 else _ZERO
    elif split_components(d)[1]:
        value = _ZERO
    else:
        sequence = [e for cyc in d.cycles for e in cyc]
        value = _ZERO
        cur = d
        while True:
            x = _first_ascending(cur, sequence)
            if x is None:
                break
            lower = _nabla(canonical(_smooth(cur, x)), memo, counter).times_z()
            value = value + lower.scale(cur.signs[x])
            cur = _switch(cur, x)
        if cur.components == 1:
            value = value + _ONE
    memo[key] = value
    return value


def _first_ascending(d: Diagram, sequence) -> int | None:
    heads = d.heads
    seen = set()
    for e in sequence:
        x, s = heads[e]
        if x in seen:
            continue
        if s == 0:
            return x
        seen.add(x)
    return None


def conway_to_alexander(p: ConwayPoly) -> LaurentPoly:
    """Substitute ``z^2 = t - 2 + t^-1`` and return the unit-normal form."""
    if any(e % 2 for e in p.exponents()):
        raise ValueError("odd powers of z (a link value) have no one-variable Alexander form")
    z2 = LaurentPoly({1: 1, 0: -2, -1: 1})
    total = LaurentPoly()
    for e, c in p.coeffs.items():
        total = total + z2 ** (e // 2) * c
    if total.is_zero():
        raise DiagramError("Conway polynomial is zero; no Alexander normal form")
    return normalize_units(total)
