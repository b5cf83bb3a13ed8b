"""Exact Laurent polynomials in one variable with integer coefficients.

This is the value domain of the Alexander invariant.  Coefficients are
Python ints, so nothing ever overflows.  Matrices over the ring are
handled by :class:`PolyMatrix` and :func:`determinant`, which runs a
fraction-free (Bareiss) elimination after clearing negative powers.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = [
    "LaurentPoly",
    "PolyMatrix",
    "add",
    "mul",
    "neg",
    "determinant",
    "normalize_units",
    "units_equal",
    "eval_at_int",
    "exact_quotient",
]


class LaurentPoly:
    """Immutable integer Laurent polynomial, stored as ``{exponent: coeff}``.

    Zero coefficients are never stored; the zero polynomial has an empty
    mapping.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | int | None = None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self._coeffs = {int(e): int(c) for e, c in coeffs.items() if c != 0}
        self._hash = None

    # -- construction ----------------------------------------------------
    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def from_list(cls, coeffs: Sequence[int], low: int = 0) -> "LaurentPoly":
        """Dense coefficient list, ``coeffs[i]`` multiplying ``t**(low + i)``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def parse(cls, text: str, var: str = "t") -> "LaurentPoly":
        return cls(parse_terms(text, var))

    # -- inspection ------------------------------------------------------
    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return min(self._coeffs)

    @property
    def max_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self._coeffs)

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._coeffs.items())

    # -- arithmetic ------------------------------------------------------
    def _lift(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._coeffs) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._coeffs.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPoly({e * n: c ** abs(n)})
        result = LaurentPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __bool__(self):
        return bool(self._coeffs)

    # -- rendering -------------------------------------------------------
    def render(self, var: str = "t") -> str:
        return render_terms(self.terms(), var)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LaurentPoly({self.render()!r})"


T = LaurentPoly({1: 1})
ONE = LaurentPoly(1)
ZERO = LaurentPoly()


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def neg(a: LaurentPoly) -> LaurentPoly:
    return -a


# ---------------------------------------------------------------------------
# text form

_TERM = r"""
    ([+-])?                                   # sign
    (\d+)?                                    # coefficient
    \*?
    (?:({var})                                # variable
       (?:\^(?:\{{(-?\d+)\}}|\((-?\d+)\)|(-?\d+)))?
    )?
    """


def parse_terms(text: str, var: str = "t") -> dict[int, int]:
    """Parse ``2 - 3t + 3*t^2 - t^{-1}`` style text into ``{exp: coeff}``.

    Accepts implicit or explicit ``*``, and exponents written as ``^k``,
    ``^{k}`` or ``^(k)``.  Raises ``ValueError`` on anything else.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial text")
    pattern = re.compile(_TERM.format(var=re.escape(var)), re.VERBOSE)
    out: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = pattern.match(s, pos)
        sign, digits, v = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or (digits is None and v is None):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r} at offset {pos}")
        coeff = int(digits) if digits is not None else 1
        if sign == "-":
            coeff = -coeff
        if v is None:
            exp = 0
        else:
            e = m.group(4) or m.group(5) or m.group(6)
            exp = int(e) if e is not None else 1
        out[exp] = out.get(exp, 0) + coeff
        pos = m.end()
        first = False
    return {e: c for e, c in out.items() if c}


def render_terms(terms: Iterable[tuple[int, int]], var: str = "t") -> str:
    """Ascending-order rendering: ``2 - 3t + 3t^2 - t^3``."""
    parts = []
    for exp, coeff in terms:
        mag = abs(coeff)
        if exp == 0:
            body = str(mag)
        else:
            mono = var if exp == 1 else f"{var}^{exp}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# units

def normalize_units(p: LaurentPoly) -> LaurentPoly:
    """Canonical representative of ``p`` up to multiplication by ``±t**N``.

    Shift so the lowest exponent is 0, then fix the sign so that the
    constant term is positive.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no unit-normal form")
    q = p.shift(-p.min_degree)
    return -q if q.coefficient(0) < 0 else q


def units_equal(a: LaurentPoly, b: LaurentPoly) -> bool:
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    return normalize_units(a) == normalize_units(b)


def eval_at_int(p: LaurentPoly, x: int) -> Fraction:
    """Exact value of ``p(x)``; integral whenever ``x`` is ±1."""
    if x == 0:
        if any(e < 0 for e in p.coeffs):
            raise ZeroDivisionError("negative exponent evaluated at 0")
        return Fraction(p.coefficient(0))
    total = Fraction(0)
    for e, c in p.terms():
        total += c * Fraction(x) ** e
    return total


def exact_quotient(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``a == q * b``; ``ValueError`` if ``b`` does not divide ``a``."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    la, lb = a.min_degree, b.min_degree
    qa = _dense(a.shift(-la))
    qb = _dense(b.shift(-lb))
    q = _div_exact(qa, qb)
    return LaurentPoly.from_list(q, la - lb)


# ---------------------------------------------------------------------------
# dense helpers over Z[t]; lists are little-endian coefficient vectors

def _dense(p: LaurentPoly) -> list[int]:
    if p.is_zero():
        return []
    lo = p.min_degree
    if lo < 0:
        raise ValueError("dense form needs a polynomial, got negative exponents")
    out = [0] * (p.max_degree + 1)
    for e, c in p.terms():
        out[e] = c
    return out


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _psub(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def _div_exact(a: list[int], b: list[int]) -> list[int]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = list(a)
    _trim(a)
    if not a:
        return []
    if len(a) < len(b):
        raise ValueError("divisor does not divide dividend")
    lead = b[-1]
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1]
        if c % lead:
            raise ValueError("divisor does not divide dividend")
        c //= lead
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    if any(a):
        raise ValueError("divisor does not divide dividend")
    return _trim(q)


# ---------------------------------------------------------------------------
# matrices

class PolyMatrix:
    """Square matrix of :class:`LaurentPoly` entries (immutable)."""

    def __init__(self, rows: Sequence[Sequence[LaurentPoly | int]]):
        rows = tuple(
            tuple(e if isinstance(e, LaurentPoly) else LaurentPoly(e) for e in row)
            for row in rows
        )
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("PolyMatrix must be square")
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def minor(self, row: int, col: int) -> "PolyMatrix":
        """Matrix with ``row`` and ``col`` deleted."""
        if not (0 <= row < self.n and 0 <= col < self.n):
            raise IndexError(f"row/col ({row}, {col}) out of range for {self.n}x{self.n}")
        return PolyMatrix([
            [e for j, e in enumerate(r) if j != col]
            for i, r in enumerate(self.rows) if i != row
        ])

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def render(self) -> str:
        """One row per line, comma-separated entries (the fixture file format)."""
        return "\n".join(", ".join(e.render() for e in r) for r in self.rows)

    @classmethod
    def parse(cls, text: str) -> "PolyMatrix":
        rows = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                rows.append([LaurentPoly.parse(cell) for cell in line.split(",")])
        return cls(rows)

    def __repr__(self):
        return f"PolyMatrix({[[e.render() for e in r] for r in self.rows]!r})"


def determinant(m: PolyMatrix) -> LaurentPoly:
    """Exact determinant over Z[t, t^-1].

    Each row is first multiplied by ``t**(-lowest exponent in the row)`` so
    every entry lies in Z[t]; the shift is undone at the end.  The
    elimination itself is fraction-free: every division is exact.
    """
    n = m.n
    if n == 0:
        return ONE
    shift = 0
    a: list[list[list[int]]] = []
    for row in m.rows:
        nonzero = [e for e in row if not e.is_zero()]
        if not nonzero:
            return ZERO
        lo = min(e.min_degree for e in nonzero)
        shift += lo
        a.append([_dense(e.shift(-lo)) for e in row])

    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = _psub(_pmul(row_i[j], pivot), _pmul(aik, row_k[j]))
                row_i[j] = _div_exact(num, prev)
            row_i[k] = []
        prev = pivot
    det = a[n - 1][n - 1]
    return LaurentPoly.from_list(det, shift) * sign
