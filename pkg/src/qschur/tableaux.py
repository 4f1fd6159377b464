"""Tableaux: validity rules, enumeration, reading words and generating functions.

A straight-shape filling is a tuple of rows, each a tuple of positive ints,
indexed top to bottom.  Skew fillings (:class:`SkewFilling`) carry an outer
shape ``beta`` and an inner weak composition ``gamma`` of the same length; the
cells of ``gamma`` (the *skewed* cells) and a virtual column 0 in front of
every row hold ``INF``.

Four validity regimes are supported:

``"rrst"``
    reverse row-strict tableau: partition shape, rows strictly decrease,
    columns weakly decrease.
``"rct"``
    row-strict composition tableau.
``"ct"``
    column-strict composition tableau.
``"lrskew"``
    Littlewood-Richardson skew row-strict composition tableau.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .combinat import is_partition, is_regular_reverse_lattice, strip_zeros, transpose
from .exact import XPoly

Rows = tuple[tuple[int, ...], ...]

KINDS = ("rrst", "rct", "ct", "lrskew")


class _Infinity:
    """Virtual entry of the 0th column and of skewed cells."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "INF"


INF = _Infinity()


# ---------------------------------------------------------------------------
# basic accessors
# ---------------------------------------------------------------------------


def as_rows(rows: Sequence[Sequence]) -> Rows:
    return tuple(tuple(r) for r in rows)


def shape_of(rows: Sequence[Sequence]) -> tuple[int, ...]:
    return tuple(len(r) for r in rows)


def column_reading_cells(shape: Sequence[int]) -> list[tuple[int, int]]:
    """Cells ``(i, j)`` (0-indexed) bottom to top within a column, columns left to right."""
    m = max(shape, default=0)
    out = []
    for j in range(m):
        for i in range(len(shape) - 1, -1, -1):
            if shape[i] > j:
                out.append((i, j))
    return out


def column_reading_word(rows: Sequence[Sequence]) -> tuple[int, ...]:
    """Entries read bottom to top in each column, columns left to right.

    ``None`` and ``INF`` entries (skewed cells) are skipped.
    """
    word = []
    for i, j in column_reading_cells(shape_of(rows)):
        v = rows[i][j]
        if isinstance(v, int):
            word.append(v)
    return tuple(word)


def content(rows: Sequence[Sequence], n: int | None = None) -> tuple[int, ...]:
    c: Counter[int] = Counter(v for r in rows for v in r if isinstance(v, int))
    top = max(c, default=0) if n is None else n
    return tuple(c.get(i, 0) for i in range(1, top + 1))


def weight_monomial(rows: Sequence[Sequence], n: int) -> XPoly:
    if any(isinstance(v, int) and v > n for r in rows for v in r):
        raise ValueError(f"entries exceed n={n}")
    return XPoly.monomial(content(rows, n))


def superstandard_rrst(lam: Sequence[int]) -> Rows:
    """The RRST of shape ``lam`` whose ``i``-th column is filled with ``lam_1 + 1 - i``."""
    if not lam:
        return ()
    m = lam[0]
    return tuple(tuple(m - j for j in range(r)) for r in lam)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """First failed rule, with the (1-indexed) cells involved."""

    rule: str
    cells: tuple[tuple[int, int], ...]

    def __str__(self) -> str:
        where = ", ".join(f"({i},{j})" for i, j in self.cells)
        return f"{self.rule} at {where}"


@dataclass(frozen=True)
class Report:
    ok: bool
    violation: Violation | None = None

    def __bool__(self) -> bool:
        return self.ok


def _check_entries(rows: Rows) -> None:
    for r in rows:
        if not r:
            raise ValueError("rows of a straight-shape filling must be nonempty")
        for v in r:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"entry {v!r} is not a positive integer")


def _padded(rows: Rows, i: int, j: int) -> int:
    """Entry at 0-indexed ``(i, j)`` with zeros past the end of the row."""
    r = rows[i]
    return r[j] if j < len(r) else 0


def check_rrst(rows: Rows) -> Violation | None:
    rows = as_rows(rows)
    _check_entries(rows)
    if not is_partition(shape_of(rows)):
        return Violation("shape is not a partition", ())
    for i, r in enumerate(rows):
        for j in range(1, len(r)):
            if not r[j] < r[j - 1]:
                return Violation("row not strictly decreasing", ((i + 1, j), (i + 1, j + 1)))
    for i in range(1, len(rows)):
        for j in range(len(rows[i])):
            if not rows[i][j] <= rows[i - 1][j]:
                return Violation("column not weakly decreasing", ((i, j + 1), (i + 1, j + 1)))
    return None


def _check_composition_tableau(rows: Rows, strict_rows: bool) -> Violation | None:
    rows = as_rows(rows)
    _check_entries(rows)
    for i in range(1, len(rows)):
        a, b = rows[i - 1][0], rows[i][0]
        if (a > b) if strict_rows else (a >= b):
            rule = "first column not weakly increasing" if strict_rows else "first column not strictly increasing"
            return Violation(rule, ((i, 1), (i + 1, 1)))
    for i, r in enumerate(rows):
        for j in range(1, len(r)):
            if (r[j] >= r[j - 1]) if strict_rows else (r[j] > r[j - 1]):
                rule = "row not strictly decreasing" if strict_rows else "row not weakly decreasing"
                return Violation(rule, ((i + 1, j), (i + 1, j + 1)))
    m = max(shape_of(rows), default=0)
    k = len(rows)
    for j in range(1, m):
        for i2 in range(k):
            b = _padded(rows, i2, j)
            if b == 0:
                continue
            for i1 in range(i2):
                a = _padded(rows, i1, j)
                c = _padded(rows, i1, j - 1)
                if not _triple_ok(a, b, c, strict_rows):
                    return Violation("triple rule", ((i1 + 1, j), (i1 + 1, j + 1), (i2 + 1, j + 1)))
    return None


def _triple_ok(a: int, b: int, c: int, row_strict: bool) -> bool:
    """Triple rule for a nonzero lower entry ``b`` below ``a`` with ``c`` left of ``a``."""
    if row_strict:
        return not (b > a) or b >= c
    return not (b >= a) or b > c


def check_rct(rows: Rows) -> Violation | None:
    return _check_composition_tableau(rows, strict_rows=True)


def check_ct(rows: Rows) -> Violation | None:
    return _check_composition_tableau(rows, strict_rows=False)


# ---------------------------------------------------------------------------
# skew fillings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SkewFilling:
    """A filling of ``outer / inner`` with a virtual 0th column.

    ``rows[i]`` has length ``outer[i]``; its first ``inner[i]`` entries are
    ``None`` (skewed cells) and the rest are positive ints.
    """

    outer: tuple[int, ...]
    inner: tuple[int, ...]
    rows: tuple[tuple[int | None, ...], ...]

    def __post_init__(self) -> None:
        if len(self.outer) != len(self.inner) or len(self.rows) != len(self.outer):
            raise ValueError("outer, inner and rows must have equal lengths")
        for b, g, r in zip(self.outer, self.inner, self.rows):
            if g > b or len(r) != b:
                raise ValueError("malformed skew filling")
            if any(v is not None for v in r[:g]) or any(not isinstance(v, int) or v < 1 for v in r[g:]):
                raise ValueError("skewed cells must be None and other cells positive ints")

    @property
    def alpha(self) -> tuple[int, ...]:
        return strip_zeros(self.inner)

    def entry(self, i: int, j: int):
        """Value at 0-indexed row ``i`` and column ``j`` (column 0 is virtual)."""
        if j == 0:
            return INF
        v = self.rows[i][j - 1]
        return INF if v is None else v

    def word(self) -> tuple[int, ...]:
        return column_reading_word(self.rows)

    def to_json(self) -> dict:
        return {
            "shape": list(self.outer),
            "inner": list(self.inner),
            "rows": [["inf"] + [v for v in r] for r in self.rows],
        }

    def pretty(self) -> str:
        lines = []
        for r in self.rows:
            cells = ["∞"] + ["∞" if v is None else str(v) for v in r]
            lines.append(" ".join(cells))
        return "\n".join(lines)


def _skew_less(S: SkewFilling, p: tuple[int, int], r: tuple[int, int]) -> bool:
    """``S(p) < S(r)`` with the positional conventions for infinite entries.

    Finite entries are below every infinite one.  Infinite entries are ranked
    by column alone: further left is larger, same column is equal.  This gives
    "strictly decreasing along a row" and "equal down a column".
    """
    x, y = S.entry(*p), S.entry(*r)
    if x is INF and y is INF:
        return p[1] > r[1]
    if x is INF:
        return False
    if y is INF:
        return True
    return x < y


def _skew_leq(S: SkewFilling, p: tuple[int, int], r: tuple[int, int]) -> bool:
    return not _skew_less(S, r, p)


def _is_inversion_triple(S: SkewFilling, a: tuple[int, int], b: tuple[int, int], c: tuple[int, int]) -> bool:
    return (_skew_leq(S, b, a) and _skew_less(S, a, c)) or (_skew_less(S, a, c) and _skew_leq(S, c, b))


def check_lr_skew(S: SkewFilling) -> Violation | None:
    beta = S.outer
    k = len(beta)
    for i in range(k):
        for j in range(1, beta[i] + 1):
            if not _skew_less(S, (i, j), (i, j - 1)):
                return Violation("row not strictly decreasing", ((i + 1, j - 1), (i + 1, j)))
    for i1 in range(k):
        for i2 in range(i1 + 1, k):
            if beta[i1] >= beta[i2]:
                # Type A: c = (i1, j-1), a = (i1, j), b = (i2, j), j > 0
                for j in range(1, beta[i2] + 1):
                    a, b, c = (i1, j), (i2, j), (i1, j - 1)
                    if not _is_inversion_triple(S, a, b, c):
                        return Violation("type A triple", ((i1 + 1, j - 1), (i1 + 1, j), (i2 + 1, j)))
            else:
                # Type B: b = (i1, j), c = (i2, j), a = (i2, j+1), j >= 0
                for j in range(0, beta[i1] + 1):
                    a, b, c = (i2, j + 1), (i1, j), (i2, j)
                    if not _is_inversion_triple(S, a, b, c):
                        return Violation("type B triple", ((i1 + 1, j), (i2 + 1, j), (i2 + 1, j + 1)))
    w = S.word()
    if not is_regular_reverse_lattice(w):
        return Violation("column word not a regular reverse lattice word", ())
    return None


def validate(kind: str, grid) -> Report:
    """Check ``grid`` against the rules of ``kind`` and name the first failure."""
    if kind == "rrst":
        v = check_rrst(grid)
    elif kind == "rct":
        v = check_rct(grid)
    elif kind == "ct":
        v = check_ct(grid)
    elif kind == "lrskew":
        if not isinstance(grid, SkewFilling):
            raise TypeError("lrskew validation expects a SkewFilling")
        v = check_lr_skew(grid)
    else:
        raise ValueError(f"unknown tableau kind {kind!r}")
    return Report(v is None, v)


def is_valid(kind: str, grid) -> bool:
    return validate(kind, grid).ok


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _fill(shape: Sequence[int], n: int, ok: Callable[[list[list[int]], int, int, int], bool]) -> Iterator[Rows]:
    """Depth-first fill in column reading order, smallest entry first.

    ``ok(grid, i, j, v)`` decides whether value ``v`` may go at ``(i, j)``
    given the cells filled so far (all earlier cells in reading order).
    """
    cells = column_reading_cells(shape)
    grid = [[0] * s for s in shape]

    def rec(pos: int) -> Iterator[Rows]:
        if pos == len(cells):
            yield tuple(tuple(r) for r in grid)
            return
        i, j = cells[pos]
        for v in range(1, n + 1):
            if ok(grid, i, j, v):
                grid[i][j] = v
                yield from rec(pos + 1)
        grid[i][j] = 0

    yield from rec(0)


def _composition_ok(shape: Sequence[int], row_strict: bool):
    k = len(shape)

    def ok(grid: list[list[int]], i: int, j: int, v: int) -> bool:
        if j == 0:
            if i + 1 < k:
                below = grid[i + 1][0]
                if (v > below) if row_strict else (v >= below):
                    return False
        else:
            left = grid[i][j - 1]
            if (v >= left) if row_strict else (v > left):
                return False
            # v is the upper entry of triples with every lower row
            for i2 in range(i + 1, k):
                b = grid[i2][j] if shape[i2] > j else 0
                if b and not _triple_ok(v, b, left, row_strict):
                    return False
            # v is the lower entry of triples whose upper entry is a zero pad
            for i1 in range(i):
                if shape[i1] <= j:
                    # column j - 1 is complete, so c is known
                    c = grid[i1][j - 1] if shape[i1] > j - 1 else 0
                    if not _triple_ok(0, v, c, row_strict):
                        return False
        return True

    return ok


def _rrst_ok(shape: Sequence[int]):
    k = len(shape)

    def ok(grid: list[list[int]], i: int, j: int, v: int) -> bool:
        if j > 0 and v >= grid[i][j - 1]:
            return False
        if i + 1 < k and shape[i + 1] > j and v < grid[i + 1][j]:
            return False
        return True

    return ok


def enumerate_tableaux(kind: str, shape: Sequence[int], n: int) -> Iterator[Rows]:
    """All valid fillings of ``shape`` with entries in ``1..n``."""
    shape = tuple(shape)
    if n < 1:
        raise ValueError("n must be positive")
    if any(p <= 0 for p in shape):
        raise ValueError("shape must be a strong composition")
    if kind == "rrst":
        if not is_partition(shape):
            raise ValueError("RRST shapes are partitions")
        ok = _rrst_ok(shape)
        check = check_rrst
    elif kind in ("rct", "ct"):
        ok = _composition_ok(shape, row_strict=(kind == "rct"))
        check = check_rct if kind == "rct" else check_ct
    else:
        raise ValueError(f"cannot enumerate kind {kind!r} by shape")
    for rows in _fill(shape, n, ok):
        if check(rows) is not None:  # pragma: no cover - guards the pruning
            raise AssertionError(f"enumeration produced an invalid {kind}: {rows}")
        yield rows


@lru_cache(maxsize=None)
def _tableaux_cached(kind: str, shape: tuple[int, ...], n: int) -> tuple[Rows, ...]:
    return tuple(enumerate_tableaux(kind, shape, n))


def all_tableaux(kind: str, shape: Sequence[int], n: int) -> tuple[Rows, ...]:
    """Cached tuple form of :func:`enumerate_tableaux`."""
    return _tableaux_cached(kind, tuple(shape), n)


def enumerate_ct_with_first_column(shape: Sequence[int], first_column: Sequence[int], n: int) -> Iterator[Rows]:
    for rows in all_tableaux("ct", shape, n):
        if tuple(r[0] for r in rows) == tuple(first_column):
            yield rows


# ---------------------------------------------------------------------------
# generating functions
# ---------------------------------------------------------------------------

IntPoly = dict[tuple[int, ...], int]


@lru_cache(maxsize=None)
def _gen_counts(kind: str, shape: tuple[int, ...], n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    counts: Counter[tuple[int, ...]] = Counter()
    if shape:
        for rows in all_tableaux(kind, shape, n):
            counts[content(rows, n)] += 1
    else:
        counts[(0,) * n] = 1
    return tuple(sorted(counts.items()))


def gen_counts(kind: str, shape: Sequence[int], n: int) -> IntPoly:
    """Integer-coefficient generating function ``{exponent: coefficient}``.

    For ``kind == "schur"`` the input is a partition ``lam`` and the sum runs
    over reverse row-strict tableaux of the conjugate shape.
    """
    shape = tuple(shape)
    if kind == "schur":
        lam = strip_zeros(shape)
        return dict(_gen_counts("rrst", transpose(lam) if lam else (), n))
    if kind in ("rs", "rct"):
        return dict(_gen_counts("rct", strip_zeros(shape), n))
    if kind in ("cs", "ct"):
        return dict(_gen_counts("ct", strip_zeros(shape), n))
    if kind == "rrst":
        return dict(_gen_counts("rrst", shape, n))
    raise ValueError(f"unknown generating function kind {kind!r}")


def gen_function(kind: str, shape: Sequence[int], n: int) -> XPoly:
    """``RS_alpha``, ``CS_alpha`` or ``s_lambda`` in ``n`` variables as an :class:`XPoly`."""
    return XPoly(n, gen_counts(kind, shape, n))


def int_poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    out: Counter[tuple[int, ...]] = Counter()
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
    return {e: c for e, c in out.items() if c}


def int_poly_add(a: IntPoly, b: IntPoly, scale: int = 1) -> IntPoly:
    out = Counter(a)
    for e, c in b.items():
        out[e] += scale * c
    return {e: c for e, c in out.items() if c}


def is_quasisymmetric(poly: IntPoly, n: int) -> bool:
    """Coefficients agree across all increasing index sequences for each strong pattern."""
    from itertools import combinations

    for e, c in poly.items():
        pattern = strip_zeros(e)
        for idx in combinations(range(n), len(pattern)):
            f = [0] * n
            for p, i in zip(pattern, idx):
                f[i] = p
            if poly.get(tuple(f), 0) != c:
                return False
    return True


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def to_json(rows: Rows) -> dict:
    return {"shape": list(shape_of(rows)), "rows": [list(r) for r in rows]}


def from_json(data: dict):
    if "inner" in data:
        rows = tuple(tuple(None if v is None else int(v) for v in r[1:]) for r in data["rows"])
        return SkewFilling(tuple(data["shape"]), tuple(data["inner"]), rows)
    rows = as_rows(data["rows"])
    if "shape" in data and tuple(data["shape"]) != shape_of(rows):
        raise ValueError("shape does not match rows")
    return rows


def parse_rows(text: str) -> Rows:
    """Parse ``"1/4 3 2/5 4"`` (rows split by ``/``, entries by spaces or commas)."""
    rows = []
    for chunk in text.split("/"):
        chunk = chunk.replace(",", " ").split()
        if chunk:
            rows.append(tuple(int(v) for v in chunk))
    return tuple(rows)


def pretty(rows: Rows) -> str:
    return "\n".join(" ".join(str(v) for v in r) for r in rows)


def latex(rows) -> str:
    """Tableau layout in the ``young`` environment style of ytableau."""
    if isinstance(rows, SkewFilling):
        body = [" & ".join([r"\infty"] + [r"\infty" if v is None else str(v) for v in r]) for r in rows.rows]
    else:
        body = [" & ".join(str(v) for v in r) for r in rows]
    return "\\begin{ytableau}\n" + " \\\\\n".join(body) + "\n\\end{ytableau}"


def rrst_count(lam: Sequence[int], n: int) -> int:
    return len(all_tableaux("rrst", tuple(lam), n))


def reading_order_less(p: tuple[int, int], r: tuple[int, int]) -> bool:
    """``p <_col r`` for 1-indexed cells ``(row, column)``."""
    return p[1] < r[1] or (p[1] == r[1] and p[0] > r[0])


__all__ = [
    "INF",
    "KINDS",
    "Report",
    "Rows",
    "SkewFilling",
    "Violation",
    "all_tableaux",
    "check_ct",
    "check_lr_skew",
    "check_rct",
    "check_rrst",
    "column_reading_cells",
    "column_reading_word",
    "content",
    "enumerate_ct_with_first_column",
    "enumerate_tableaux",
    "gen_counts",
    "gen_function",
    "is_quasisymmetric",
    "is_valid",
    "latex",
    "parse_rows",
    "pretty",
    "reading_order_less",
    "shape_of",
    "superstandard_rrst",
    "validate",
    "weight_monomial",
]
