"""PD codes and signed Gauss codes.

PD text is a whitespace-separated sequence of ``X[a,b,c,d]`` terms with
1-based labels listed counterclockwise from the incoming under-strand.
Gauss text is a sequence of ``O<n><s>`` / ``U<n><s>`` tokens along a
single component, ``s`` being ``+`` or ``-``.  The empty string is the
zero-crossing unknot in both formats.
"""

from __future__ import annotations

import re
from pathlib import Path

from .diagram import UNKNOT, Diagram, DiagramError, canonical, check

__all__ = [
    "NotationError",
    "parse_pd",
    "emit_pd",
    "parse_gauss",
    "emit_gauss",
    "parse_any",
    "read_diagrams",
]


class NotationError(ValueError):
    """Syntax or consistency error in a textual diagram code."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)
        self.position = position


_PD_TERM = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")
_SEP = re.compile(r"[\s,]*")


def _pd_terms(text: str) -> list[tuple[int, int, int, int]]:
    terms = []
    pos = _SEP.match(text, 0).end()
    while pos < len(text):
        m = _PD_TERM.match(text, pos)
        if not m:
            raise NotationError(f"expected X[a,b,c,d], found {text[pos:pos + 12]!r}", pos)
        quad = tuple(int(g) for g in m.groups())
        if 0 in quad:
            raise NotationError("PD labels must be positive integers", pos)
        terms.append(quad)
        pos = _SEP.match(text, m.end()).end()
    return terms


def parse_pd(text: str) -> Diagram:
    """Parse PD text into a validated :class:`Diagram`.

    Crossing signs come from the orientation of the over-strand, which is
    propagated along edges from the under-strand slots.  A component that
    only ever passes over falls back to its label order (over-strand runs
    from label ``k`` to ``k + 1``).
    """
    terms = _pd_terms(text)
    if not terms:
        return UNKNOT

    counts: dict[int, int] = {}
    for quad in terms:
        for e in quad:
            counts[e] = counts.get(e, 0) + 1
    bad = sorted(e for e, n in counts.items() if n != 2)
    if bad:
        detail = ", ".join(f"{e} ({counts[e]}x)" for e in bad)
        raise NotationError(f"label inconsistency: each label must appear twice; {detail}")

    dense = {e: i for i, e in enumerate(sorted(counts))}
    pd = tuple(tuple(dense[e] for e in quad) for quad in terms)
    signs = _derive_signs(pd, terms)
    d = Diagram(pd, signs)
    try:
        return check(d)
    except DiagramError as exc:
        raise NotationError(str(exc)) from exc


def _derive_signs(pd, raw) -> tuple[int, ...]:
    darts: dict[int, list[tuple[int, int]]] = {}
    for x, quad in enumerate(pd):
        for s, e in enumerate(quad):
            darts.setdefault(e, []).append((x, s))
    entering: dict[tuple[int, int], bool] = {}

    def assign(dart, value):
        old = entering.get(dart)
        if old is None:
            entering[dart] = value
            return True
        if old != value:
            x, s = dart
            raise NotationError(f"inconsistent orientation at crossing {x + 1}, slot {s + 1}")
        return False

    for x in range(len(pd)):
        assign((x, 0), True)
        assign((x, 2), False)

    def propagate():
        changed = True
        while changed:
            changed = False
            for p, q in darts.values():
                if p in entering:
                    changed |= assign(q, not entering[p])
                elif q in entering:
                    changed |= assign(p, not entering[q])
            for x in range(len(pd)):
                for s, t in ((1, 3), (3, 1)):
                    if (x, s) in entering:
                        changed |= assign((x, t), not entering[(x, s)])

    propagate()
    for x in range(len(pd)):
        if (x, 1) in entering:
            continue
        a, b, c, d = raw[x]
        if b == d + 1:
            assign((x, 3), True)
        elif d == b + 1:
            assign((x, 1), True)
        else:
            raise NotationError(
                f"sign underivable at crossing {x + 1}: over-strand slots {b}, {d} "
                "are not connected to any undercrossing"
            )
        propagate()
    return tuple(1 if entering[(x, 3)] else -1 for x in range(len(pd)))


def emit_pd(d: Diagram) -> str:
    """Canonical PD text; ``parse_pd`` of the result is structurally ``d``."""
    check(d)
    if d.is_unknot_diagram:
        return ""
    if d.loops:
        raise DiagramError("crossingless components cannot be written as PD terms")
    c = canonical(d)
    return " ".join("X[{},{},{},{}]".format(*(e + 1 for e in quad)) for quad in c.pd)


_GAUSS_TOKEN = re.compile(r"([OU])(\d+)([+-])")


def parse_gauss(text: str) -> Diagram:
    """Parse a signed Gauss code of a single component."""
    entries = []
    for m in re.finditer(r"\S+", text):
        tok = m.group()
        t = _GAUSS_TOKEN.fullmatch(tok)
        if not t:
            raise NotationError(f"bad Gauss token {tok!r}", m.start())
        kind, label, s = t.groups()
        if int(label) == 0:
            raise NotationError("Gauss labels must be positive integers", m.start())
        entries.append((kind, int(label), 1 if s == "+" else -1))
    if not entries:
        return UNKNOT

    seen: dict[int, dict[str, tuple[int, int]]] = {}
    for i, (kind, label, sign) in enumerate(entries):
        slot = seen.setdefault(label, {})
        if kind in slot:
            raise NotationError(f"crossing {label} has two {kind} entries")
        slot[kind] = (i, sign)
    for label, slot in sorted(seen.items()):
        if set(slot) != {"O", "U"}:
            raise NotationError(f"label count for crossing {label} is not 2 (need one O and one U)")
        if slot["O"][1] != slot["U"][1]:
            raise NotationError(f"sign mismatch for crossing {label}")

    n = len(entries)
    pd, signs = [], []
    for label in sorted(seen):
        i, sign = seen[label]["U"]
        j, _ = seen[label]["O"]
        in_u, out_u = (i - 1) % n, i
        in_o, out_o = (j - 1) % n, j
        if sign > 0:
            pd.append((in_u, out_o, out_u, in_o))
        else:
            pd.append((in_u, in_o, out_u, out_o))
        signs.append(sign)
    d = Diagram(tuple(pd), tuple(signs))
    try:
        return check(d)
    except DiagramError as exc:
        raise NotationError(str(exc)) from exc


def emit_gauss(d: Diagram) -> str:
    """Signed Gauss code, crossing ``i`` written as label ``i + 1``."""
    check(d)
    if d.components != 1:
        raise DiagramError("Gauss codes here describe single-component diagrams only")
    if not d.pd:
        return ""
    c = canonical(d)
    (cyc,) = c.cycles
    out = []
    for e in cyc:
        x, s = c.heads[e]
        out.append("{}{}{}".format("U" if s == 0 else "O", x + 1, "+" if c.signs[x] > 0 else "-"))
    return " ".join(out)


def parse_any(text: str) -> Diagram:
    """PD or Gauss, chosen by the first token."""
    s = text.strip()
    if not s or s.startswith("X"):
        return parse_pd(s)
    if s[0] in "OU":
        return parse_gauss(s)
    raise NotationError(f"unrecognised diagram code {s[:16]!r}", 0)


def read_diagrams(source) -> list[Diagram]:
    """Read one diagram per line from a path or a text blob.

    ``#`` starts a comment; blank lines are skipped.
    """
    text = Path(source).read_text() if isinstance(source, Path) else source
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_any(line))
        except NotationError as exc:
            raise NotationError(f"line {lineno}: {exc}") from exc
    return out
