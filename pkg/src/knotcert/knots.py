"""Knot representations and Alexander polynomials.

Knots are algebraic data, not diagrams: the certifier only ever consumes
the Alexander polynomial, so a knot is either a named family member
(torus, twist), a raw Seifert matrix, or a connected sum of those.  Two
independent computation routes exist on purpose (closed forms vs. the
Seifert determinant det(V - t V^T)) and the test suite pins them against
each other.
"""

from __future__ import annotations

import json
import math
import operator
from dataclasses import dataclass

from .laurent import LaurentPoly


class InvalidSeifertMatrix(ValueError):
    """Seifert matrix fails the shape or unimodularity requirements."""


class KnotParseError(ValueError):
    """Knot spec text is malformed; .position is the failing offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _int_det(grid: list[list[int]]) -> int:
    n = len(grid)
    a = [row[:] for row in grid]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class SeifertMatrix:
    """A 2g x 2g integer Seifert matrix V with det(V - V^T) = +/-1.

    det(V - V^T) is the intersection form of the Seifert surface, which
    is unimodular for a genuine knot; anything else is rejected.
    """

    entries: tuple[tuple[int, ...], ...]

    def __init__(self, entries):
        try:
            grid = tuple(tuple(operator.index(x) for x in row) for row in entries)
        except TypeError:
            raise InvalidSeifertMatrix("entries must be integers") from None
        n = len(grid)
        if n == 0 or n % 2 != 0:
            raise InvalidSeifertMatrix(f"size {n} is not a positive even number")
        if any(len(row) != n for row in grid):
            raise InvalidSeifertMatrix("matrix is not square")
        skew = [[grid[i][j] - grid[j][i] for j in range(n)] for i in range(n)]
        if _int_det(skew) not in (1, -1):
            raise InvalidSeifertMatrix("det(V - V^T) is not +/-1")
        object.__setattr__(self, "entries", grid)

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return len(self.entries) // 2


class Knot:
    """Base class; concrete knots are Unknot, Torus, Twist, Seifert, Sum."""

    __slots__ = ()


@dataclass(frozen=True)
class Unknot(Knot):
    pass


@dataclass(frozen=True)
class Torus(Knot):
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise ValueError(f"torus knot needs p, q >= 2, got ({self.p}, {self.q})")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"torus knot needs gcd(p, q) = 1, got ({self.p}, {self.q})")


@dataclass(frozen=True)
class Twist(Knot):
    n: int

    def __post_init__(self):
        if self.n == 0:
            raise ValueError("twist knot needs n != 0 (n = 0 is the unknot)")


@dataclass(frozen=True)
class Seifert(Knot):
    matrix: SeifertMatrix


@dataclass(frozen=True)
class Sum(Knot):
    left: Knot
    right: Knot


def alexander_from_seifert(matrix: SeifertMatrix) -> LaurentPoly:
    """det(V - t V^T), symmetric-normalized."""
    n = matrix.size
    t = LaurentPoly.t()
    grid = [
        [
            LaurentPoly({0: matrix.entries[i][j]}) - t * matrix.entries[j][i]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(grid).symmetric_normalize()


def _poly_det(grid: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free determinant over Z[t, t^-1]; divisions are exact."""
    n = len(grid)
    if n == 0:
        return LaurentPoly.one()
    a = [row[:] for row in grid]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divexact(prev)
            a[i][k] = LaurentPoly.zero()
        prev = a[k][k]
    return a[n - 1][n - 1] if sign == 1 else -a[n - 1][n - 1]


def torus_alexander(p: int, q: int) -> LaurentPoly:
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), symmetric-normalized.

    The division is exact for coprime p, q; a nonzero remainder would
    raise, so malformed parameters cannot slip through.
    """
    Torus(p, q)  # validate
    t = LaurentPoly.t
    num = (t(p * q) - 1) * (t(1) - 1)
    den = (t(p) - 1) * (t(q) - 1)
    return num.divexact(den).symmetric_normalize()


def twist_alexander(n: int) -> LaurentPoly:
    """n t - (2n + 1) + n t^-1, symmetric-normalized.

    Sign convention: the twist knot with Seifert matrix [[-1, 1], [0, n]];
    n = 1 is the figure-eight knot, n = -1 the trefoil.  Conventions
    differ across the literature, so this one is fixed here.
    """
    if n == 0:
        raise ValueError("twist knot needs n != 0")
    return LaurentPoly({1: n, 0: -(2 * n + 1), -1: n}).symmetric_normalize()


def alexander(knot: Knot) -> LaurentPoly:
    """The Alexander polynomial, symmetric-normalized.

    Certifier guarantee: the result r satisfies r(t) = r(1/t) and
    |r(1)| = 1, otherwise a ValueError is raised instead of returning a
    non-Alexander polynomial.
    """
    poly = _alexander_raw(knot)
    if poly.eval_at_one() not in (1, -1):
        raise ValueError(
            f"computed polynomial has value {poly.eval_at_one()} at t=1; not an Alexander polynomial"
        )
    return poly


def _alexander_raw(knot: Knot) -> LaurentPoly:
    if isinstance(knot, Unknot):
        return LaurentPoly.one()
    if isinstance(knot, Torus):
        return torus_alexander(knot.p, knot.q)
    if isinstance(knot, Twist):
        return twist_alexander(knot.n)
    if isinstance(knot, Seifert):
        return alexander_from_seifert(knot.matrix)
    if isinstance(knot, Sum):
        product = _alexander_raw(knot.left) * _alexander_raw(knot.right)
        return product.symmetric_normalize()
    raise TypeError(f"not a knot: {knot!r}")


def torus_family(n_max: int) -> list[Knot]:
    """[T(2,3), T(2,5), ..., T(2, 2*n_max+1)]: degree spans 2, 4, ..., 2*n_max.

    This is the certifier's default infinite family: the degree spans
    are strictly increasing, which is verified here, not assumed.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    family: list[Knot] = [Torus(2, 2 * n + 1) for n in range(1, n_max + 1)]
    spans = [alexander(k).degree_span() for k in family]
    if spans != [2 * n for n in range(1, n_max + 1)]:
        raise AssertionError(f"torus family degree spans {spans} are not 2, 4, ...")
    return family


# -- knot spec text --------------------------------------------------
#
# Grammar:  knot := "unknot" | "torus:P,Q" | "twist:N"
#                 | "seifert:[[..],..]" | "sum(knot,knot)"


def parse_knot(text: str) -> Knot:
    knot, pos = _parse_knot(text, 0)
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise KnotParseError(f"trailing input {text[pos:]!r}", pos)
    return knot


def _skip_ws(s: str, i: int) -> int:
    while i < len(s) and s[i].isspace():
        i += 1
    return i


def _parse_int(s: str, i: int) -> tuple[int, int]:
    start = i
    if i < len(s) and s[i] == "-":
        i += 1
    while i < len(s) and s[i].isdigit():
        i += 1
    if i == start or s[start:i] == "-":
        raise KnotParseError("expected an integer", start)
    return int(s[start:i]), i


def _expect(s: str, i: int, token: str) -> int:
    if not s.startswith(token, i):
        raise KnotParseError(f"expected {token!r}", i)
    return i + len(token)


def _parse_knot(s: str, i: int) -> tuple[Knot, int]:
    i = _skip_ws(s, i)
    try:
        if s.startswith("unknot", i):
            return Unknot(), i + len("unknot")
        if s.startswith("torus:", i):
            p, j = _parse_int(s, i + len("torus:"))
            j = _expect(s, j, ",")
            q, j = _parse_int(s, j)
            return Torus(p, q), j
        if s.startswith("twist:", i):
            n, j = _parse_int(s, i + len("twist:"))
            return Twist(n), j
        if s.startswith("seifert:", i):
            j = i + len("seifert:")
            block, j = _bracket_block(s, j)
            rows = json.loads(block)
            if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
                raise KnotParseError("seifert block must be a list of rows", i)
            return Seifert(SeifertMatrix(rows)), j
        if s.startswith("sum(", i):
            left, j = _parse_knot(s, i + len("sum("))
            j = _expect(s, _skip_ws(s, j), ",")
            right, j = _parse_knot(s, j)
            j = _expect(s, _skip_ws(s, j), ")")
            return Sum(left, right), j
    except (ValueError, InvalidSeifertMatrix) as exc:
        if isinstance(exc, KnotParseError):
            raise
        raise KnotParseError(str(exc), i) from exc
    raise KnotParseError("expected a knot spec (unknot / torus:p,q / twist:n / seifert:[..] / sum(..))", i)


def _bracket_block(s: str, i: int) -> tuple[str, int]:
    if i >= len(s) or s[i] != "[":
        raise KnotParseError("expected '['", i)
    depth = 0
    for j in range(i, len(s)):
        if s[j] == "[":
            depth += 1
        elif s[j] == "]":
            depth -= 1
            if depth == 0:
                return s[i : j + 1], j + 1
    raise KnotParseError("unbalanced brackets", i)


def knot_to_spec(knot: Knot) -> str:
    """Canonical spec text; parse_knot(knot_to_spec(k)) round-trips."""
    if isinstance(knot, Unknot):
        return "unknot"
    if isinstance(knot, Torus):
        return f"torus:{knot.p},{knot.q}"
    if isinstance(knot, Twist):
        return f"twist:{knot.n}"
    if isinstance(knot, Seifert):
        rows = json.dumps([list(row) for row in knot.matrix.entries], separators=(",", ":"))
        return f"seifert:{rows}"
    if isinstance(knot, Sum):
        return f"sum({knot_to_spec(knot.left)},{knot_to_spec(knot.right)})"
    raise TypeError(f"not a knot: {knot!r}")
