"""Gelfand-Tsetlin patterns, composition array patterns and the bijections between
them, column-strict composition tableaux and reverse column-strict Young tableaux.

Maps, with ``n`` the length of the shape ``gamma``:

* ``psi``: composition array pattern -> column-strict composition tableau whose
  first column is the set of indices of nonzero parts of ``gamma``.
* ``theta``: composition tableau -> reverse column-strict Young tableau
  (sort each column decreasingly).
* ``Theta``: composition array pattern -> GT pattern (sort each row).
* ``Theta_tilde``: the inverse of ``Theta``.
* ``tableau_from_gt`` / ``gt_from_tableau``: the classical bijection.

Arrays are indexed as ``x[i, j]`` with ``1 <= i <= n`` and ``1 <= j <= n - i + 1``;
row ``i`` is stored as ``rows[i - 1]``.  The virtual entry ``x[i, 0]`` is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .combinat import foundation, strip_zeros
from .exact import XPoly
from .tableaux import Report, Rows, Violation, all_tableaux, as_rows, check_ct


@dataclass(frozen=True)
class TriArray:
    """A triangular array whose row ``i`` has ``n - i + 1`` entries."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n - i:
                raise ValueError(f"row {i + 1} has {len(r)} entries, expected {n - i}")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.rows[0] if self.rows else ()

    def x(self, i: int, j: int) -> int:
        """``x[i, j]`` with the convention ``x[i, 0] = 0``."""
        if j == 0:
            return 0
        return self.rows[i - 1][j - 1]

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def weight(self) -> tuple[int, ...]:
        """Entry ``i`` is the number of boxes labelled ``i`` in the associated tableau."""
        sums = self.row_sums() + (0,)
        return tuple(sums[i] - sums[i + 1] for i in range(self.n))

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "TriArray":
        return cls(tuple(tuple(r) for r in data["rows"]))

    def pretty(self) -> str:
        """Staggered layout: each row is indented by half a cell relative to the one above."""
        if not self.rows:
            return ""
        width = max(len(str(v)) for r in self.rows for v in r)
        lines = []
        for i, r in enumerate(self.rows):
            cells = "  ".join(f"{v:>{width}}" for v in r)
            lines.append(" " * (i * (width + 2) // 2) + cells)
        return "\n".join(lines)


def as_array(obj: "TriArray | Sequence[Sequence[int]]") -> TriArray:
    return obj if isinstance(obj, TriArray) else TriArray(tuple(tuple(r) for r in obj))


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def validate_gt(X: "TriArray | Sequence[Sequence[int]]") -> Report:
    """``x[i, j] >= x[i+1, j] >= x[i, j+1]`` everywhere, entries nonnegative."""
    X = as_array(X)
    for i in range(1, X.n + 1):
        for j in range(1, X.n - i + 2):
            if X.x(i, j) < 0:
                return Report(False, Violation("nonnegative", ((i, j),)))
    for i in range(1, X.n):
        for j in range(1, X.n - i + 1):
            if not X.x(i, j) >= X.x(i + 1, j) >= X.x(i, j + 1):
                return Report(False, Violation("interlacing", ((i, j), (i + 1, j), (i, j + 1))))
    return Report(True)


def _pair_condition(low_r: int, low_s: int, up_s: int, up_r: int) -> bool:
    """The condition on ``x[i+1, r], x[i+1, s], x[i, s+1], x[i, r+1]`` for ``r < s``.

    Read as two implications: a weakly longer truncated row ``r`` bounds row
    ``s`` from above, and when row ``s`` is strictly longer and gains entries,
    row ``r`` stays strictly shorter than it.  A strictly longer row ``s`` that
    gains nothing imposes no condition.
    """
    if low_r >= low_s:
        return low_r >= up_s
    if low_s < up_s:
        return up_r < low_s
    return True


def validate_cap(X: "TriArray | Sequence[Sequence[int]]") -> Report:
    """Check the composition array pattern inequalities."""
    X = as_array(X)
    n = X.n
    for i in range(1, n + 1):
        for j in range(1, n - i + 2):
            if X.x(i, j) < 0:
                return Report(False, Violation("nonnegative", ((i, j),)))
    for i in range(2, n + 1):
        for j in range(1, n - i + 2):
            if X.x(i, j) > X.x(i - 1, j + 1):
                return Report(False, Violation("diagonal", ((i, j), (i - 1, j + 1))))
    for i in range(1, n):
        for s in range(1, n - i + 1):
            for r in range(0, s):
                low_r, low_s, up = X.x(i + 1, r), X.x(i + 1, s), X.x(i, s + 1)
                if not _pair_condition(low_r, low_s, up, X.x(i, r + 1)):
                    return Report(False, Violation("pair", ((i + 1, r), (i + 1, s), (i, s + 1), (i, r + 1))))
    return Report(True)


def is_gt(X) -> bool:
    return validate_gt(X).ok


def is_cap(X) -> bool:
    return validate_cap(X).ok


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def gt_patterns(top: Sequence[int]) -> Iterator[TriArray]:
    """All GT patterns with first row ``top`` (a weakly decreasing sequence)."""
    top = tuple(top)
    if any(a < b for a, b in zip(top, top[1:])):
        raise ValueError("the top row of a GT pattern must weakly decrease")

    def below(row: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        def rec(j: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
            if j == len(row) - 1:
                yield tuple(acc)
                return
            for v in range(row[j + 1], row[j] + 1):
                acc.append(v)
                yield from rec(j + 1, acc)
                acc.pop()

        yield from rec(0, [])

    def rec_rows(rows: list[tuple[int, ...]]) -> Iterator[TriArray]:
        if len(rows[-1]) == 1:
            yield TriArray(tuple(rows))
            return
        for nxt in below(rows[-1]):
            rows.append(nxt)
            yield from rec_rows(rows)
            rows.pop()

    if not top:
        yield TriArray(())
        return
    yield from rec_rows([top])


def cap_patterns(gamma: Sequence[int]) -> Iterator[TriArray]:
    """All composition array patterns of shape ``gamma``, by direct search."""
    gamma = tuple(gamma)
    if not gamma:
        yield TriArray(())
        return
    n = len(gamma)

    def rows_below(prev: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        # x[i, j] <= x[i-1, j+1]
        def rec(j: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
            if j == len(prev) - 1:
                yield tuple(acc)
                return
            for v in range(prev[j + 1] + 1):
                acc.append(v)
                yield from rec(j + 1, acc)
                acc.pop()

        yield from rec(0, [])

    def pair_ok(up: tuple[int, ...], low: tuple[int, ...]) -> bool:
        def x_low(r: int) -> int:
            return 0 if r == 0 else low[r - 1]

        for s in range(1, len(low) + 1):
            for r in range(s):
                if not _pair_condition(x_low(r), x_low(s), up[s], up[r]):
                    return False
        return True

    def rec_rows(rows: list[tuple[int, ...]]) -> Iterator[TriArray]:
        if len(rows) == n:
            yield TriArray(tuple(rows))
            return
        for nxt in rows_below(rows[-1]):
            if pair_ok(rows[-1], nxt):
                rows.append(nxt)
                yield from rec_rows(rows)
                rows.pop()

    yield from rec_rows([gamma])


def atom_via_caps(gamma: Sequence[int]) -> XPoly:
    """Sum of ``x^weight`` over composition array patterns of shape ``gamma``."""
    gamma = tuple(gamma)
    terms: dict[tuple[int, ...], int] = {}
    for X in cap_patterns(gamma):
        w = X.weight()
        terms[w] = terms.get(w, 0) + 1
    return XPoly(len(gamma), terms)


# ---------------------------------------------------------------------------
# psi: composition array patterns <-> composition tableaux
# ---------------------------------------------------------------------------


def psi(X: "TriArray | Sequence[Sequence[int]]") -> Rows:
    """Fill row ``r`` of the augmented filling with ``x[i, r-i+1] - x[i+1, r-i]`` copies of ``i``.

    Returns the column-strict composition tableau obtained by dropping empty rows.
    """
    X = as_array(X)
    rep = validate_cap(X)
    if not rep.ok:
        raise ValueError(f"not a composition array pattern: {rep.violation}")
    out: list[list[int]] = []
    for r in range(1, X.n + 1):
        row: list[int] = []
        for i in range(r, 0, -1):
            row.extend([i] * (X.x(i, r - i + 1) - X.x(i + 1, r - i)))
        if row:
            out.append(row)
    return as_rows(out)


def psi_inverse(U: Rows, n: int | None = None) -> TriArray:
    """``x[i, j]`` counts entries ``>= i`` in the row of the augmented filling indexed ``i + j - 1``.

    The row of ``U`` starting with ``k`` becomes row ``k`` of the augmented filling.
    ``n`` defaults to the largest first-column entry.
    """
    U = as_rows(U)
    bad = check_ct(U)
    if bad is not None:
        raise ValueError(f"not a column-strict composition tableau: {bad}")
    first = [r[0] for r in U]
    if first != sorted(set(first)):
        raise ValueError("the first column must strictly increase")
    top = max(first, default=0)
    n = top if n is None else n
    if n < top:
        raise ValueError("n is smaller than the largest first-column entry")
    by_index = {r[0]: r for r in U}
    rows = []
    for i in range(1, n + 1):
        rows.append(tuple(sum(1 for v in by_index.get(i + j - 1, ()) if v >= i) for j in range(1, n - i + 2)))
    return TriArray(tuple(rows))


def shape_of_ct(U: Rows, n: int | None = None) -> tuple[int, ...]:
    """The weak composition ``gamma`` with ``gamma[U(k,1)] = len(row k)``."""
    U = as_rows(U)
    top = max((r[0] for r in U), default=0)
    n = top if n is None else n
    gamma = [0] * n
    for r in U:
        gamma[r[0] - 1] = len(r)
    return tuple(gamma)


def cts_with_foundation(gamma: Sequence[int]) -> list[Rows]:
    """Column-strict composition tableaux of shape ``strip(gamma)`` whose first column is the foundation."""
    gamma = tuple(gamma)
    alpha = strip_zeros(gamma)
    if not alpha:
        return [()]
    first = tuple(sorted(foundation(gamma)))
    return [U for U in all_tableaux("ct", alpha, len(gamma)) if tuple(r[0] for r in U) == first]


# ---------------------------------------------------------------------------
# theta: composition tableaux <-> reverse column-strict Young tableaux
# ---------------------------------------------------------------------------


def _columns(T: Rows) -> list[list[int]]:
    width = max((len(r) for r in T), default=0)
    return [[r[j] for r in T if len(r) > j] for j in range(width)]


def _from_columns(cols: Sequence[Sequence[int]]) -> Rows:
    height = max((len(c) for c in cols), default=0)
    return tuple(tuple(c[i] for c in cols if len(c) > i) for i in range(height))


def is_reverse_column_strict(T: Rows) -> bool:
    shape = [len(r) for r in T]
    if any(a < b for a, b in zip(shape, shape[1:])):
        return False
    rows_ok = all(r[j] >= r[j + 1] for r in T for j in range(len(r) - 1))
    cols_ok = all(T[i][j] > T[i + 1][j] for i in range(len(T) - 1) for j in range(len(T[i + 1])))
    return rows_ok and cols_ok


def theta(U: Rows) -> Rows:
    """Column ``j`` of the image is column ``j`` of ``U`` sorted decreasingly."""
    return _from_columns([sorted(c, reverse=True) for c in _columns(as_rows(U))])


def theta_inverse(T: Rows) -> Rows:
    """Rebuild the composition tableau column by column.

    Column 1 is the first column of ``T`` in increasing order.  Each later column
    of ``T`` is placed largest entry first, each entry going to the highest row
    that still ends in the previous column with an entry weakly greater.
    """
    T = as_rows(T)
    if not is_reverse_column_strict(T):
        raise ValueError("not a reverse column-strict Young tableau")
    cols = _columns(T)
    if not cols:
        return ()
    rows = [[v] for v in sorted(cols[0])]
    for j, col in enumerate(cols[1:], start=1):
        for v in sorted(col, reverse=True):
            target = next((r for r in rows if len(r) == j and r[-1] >= v), None)
            if target is None:
                raise AssertionError(f"no row accepts {v} in column {j + 1}")
            target.append(v)
    return as_rows(rows)


# ---------------------------------------------------------------------------
# phi: GT patterns <-> reverse column-strict Young tableaux
# ---------------------------------------------------------------------------


def tableau_from_gt(G: "TriArray | Sequence[Sequence[int]]") -> Rows:
    """Fill ``row_i / row_{i+1}`` of the nested partitions with ``i``."""
    G = as_array(G)
    rep = validate_gt(G)
    if not rep.ok:
        raise ValueError(f"not a GT pattern: {rep.violation}")
    n = G.n
    rows: list[list[int]] = [[] for _ in range(n)]
    for i in range(n, 0, -1):
        for k in range(1, n - i + 2):
            inner = G.x(i + 1, k) if i < n and k <= n - i else 0
            rows[k - 1].extend([i] * (G.x(i, k) - inner))
    # entries were appended from n down to 1, so rows already weakly decrease
    return as_rows([r for r in rows if r])


def gt_from_tableau(T: Rows, n: int) -> TriArray:
    """Row ``i`` is the shape left after deleting entries smaller than ``i``, padded to ``n - i + 1`` parts."""
    T = as_rows(T)
    if not is_reverse_column_strict(T):
        raise ValueError("not a reverse column-strict Young tableau")
    if any(v > n or v < 1 for r in T for v in r):
        raise ValueError(f"entries must lie in 1..{n}")
    out = []
    for i in range(1, n + 1):
        shape = [sum(1 for v in r if v >= i) for r in T]
        shape = [s for s in shape if s]
        length = n - i + 1
        if len(shape) > length:
            raise ValueError("tableau has too many rows for n")
        out.append(tuple(shape) + (0,) * (length - len(shape)))
    return TriArray(tuple(out))


# ---------------------------------------------------------------------------
# Theta and its inverse
# ---------------------------------------------------------------------------


def Theta(X: "TriArray | Sequence[Sequence[int]]") -> TriArray:
    """Sort every row into weakly decreasing order."""
    X = as_array(X)
    return TriArray(tuple(tuple(sorted(r, reverse=True)) for r in X.rows))


def Theta_tilde(G: "TriArray | Sequence[Sequence[int]]") -> TriArray:
    """Place each row's entries, least first, as far right as the row below allows.

    An entry ``b`` may go to ``(i, k)`` with ``k > 1`` when ``x[i+1, k-1] <= b``;
    when no such free spot exists it goes to ``(i, 1)``.
    """
    G = as_array(G)
    n = G.n
    if n == 0:
        return G
    rows: list[list[int | None]] = [[None] * (n - i) for i in range(n)]
    rows[n - 1] = [G.x(n, 1)]
    for i in range(n - 1, 0, -1):
        below = rows[i]
        cur = rows[i - 1]
        for b in sorted(G.rows[i - 1]):
            spot = next(
                (k for k in range(len(cur), 1, -1) if cur[k - 1] is None and below[k - 2] <= b),
                None,
            )
            if spot is None:
                if cur[0] is not None:
                    raise AssertionError(f"no free position for {b} in row {i}")
                spot = 1
            cur[spot - 1] = b
    return TriArray(tuple(tuple(r) for r in rows))  # type: ignore[arg-type]


def commuting_square_holds(U: Rows, n: int | None = None) -> bool:
    """``phi(Theta(psi^{-1}(U))) == theta(U)``."""
    X = psi_inverse(U, n)
    return tableau_from_gt(Theta(X)) == theta(U)
