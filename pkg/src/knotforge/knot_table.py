"""Built-in diagrams and the printed composition data they are compared with."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .diagram import Diagram
from .laurent import LaurentPoly, PolyMatrix
from .notation import parse_gauss, parse_pd

__all__ = [
    "TableEntry",
    "PrintedRow",
    "NAMES",
    "get",
    "entry",
    "entries",
    "printed_fixture_matrix",
    "printed_rows",
]


@dataclass(frozen=True)
class TableEntry:
    name: str
    pd: str
    gauss: str
    expected_delta: LaurentPoly
    expected_determinant: int

    def diagram(self) -> Diagram:
        return parse_pd(self.pd)

    def gauss_diagram(self) -> Diagram:
        return parse_gauss(self.gauss)


@dataclass(frozen=True)
class PrintedRow:
    """One row of the printed composition table (never used as an oracle)."""

    row: int
    left: str
    right: str
    printed: str

    @property
    def printed_poly(self) -> LaurentPoly:
        return LaurentPoly.parse(self.printed)


def _records(filename: str):
    text = resources.files(__package__).joinpath("data", filename).read_text()
    for line in text.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield [field.strip() for field in line.split("|")]


@lru_cache(maxsize=None)
def _table() -> dict[str, TableEntry]:
    out = {}
    for name, pd, gauss, delta, det in _records("knot_table.txt"):
        out[name] = TableEntry(name, pd, gauss, LaurentPoly.parse(delta), int(det))
    return out


NAMES = tuple(_table())


def entries() -> list[TableEntry]:
    """All entries in table order."""
    return list(_table().values())


def entry(name: str) -> TableEntry:
    try:
        return _table()[name]
    except KeyError:
        raise KeyError(f"unknown knot {name!r}; available: {', '.join(NAMES)}") from None


def get(name: str) -> Diagram:
    """Freshly parsed diagram of a built-in knot."""
    return entry(name).diagram()


@lru_cache(maxsize=None)
def printed_fixture_matrix() -> PolyMatrix:
    """The 4x4 crossing/arc matrix printed for 3_1 # 1_1, as data."""
    text = resources.files(__package__).joinpath("data", "printed_fixture.txt").read_text()
    return PolyMatrix.parse(text)


def printed_rows() -> list[PrintedRow]:
    return [PrintedRow(int(r), a, b, p) for r, a, b, p in _records("printed_table.txt")]
