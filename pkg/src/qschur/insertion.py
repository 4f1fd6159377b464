"""Insertion algorithms.

* Schensted row insertion and RSK for reverse row-strict tableaux (rows
  strictly decreasing, columns weakly decreasing).
* Insertion of a letter into a row-strict composition tableau (RCT), the
  matching un-insertion, and the insertion path.
* Knuth moves on words.

Rows are stored top to bottom; all public coordinates are 1-indexed
``(row, column)`` pairs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .tableaux import Rows, as_rows

Cell = tuple[int, int]


# ---------------------------------------------------------------------------
# Schensted insertion and RSK on reverse row-strict tableaux
# ---------------------------------------------------------------------------


def schensted_insert(T: Rows, b: int) -> tuple[Rows, Cell]:
    """Row-insert ``b``; returns the new tableau and its new box.

    In each row the largest entry weakly below the letter in hand is
    replaced and carried to the next row.  When no such entry exists the
    letter is appended to the row.
    """
    rows = [list(r) for r in T]
    hand = b
    for i, row in enumerate(rows):
        # rows strictly decrease, so entries <= hand form a suffix
        pos = next((p for p, v in enumerate(row) if v <= hand), None)
        if pos is None:
            row.append(hand)
            return as_rows(rows), (i + 1, len(row))
        row[pos], hand = hand, row[pos]
    rows.append([hand])
    return as_rows(rows), (len(rows), 1)


def check_two_line_array(upper: Sequence[int], lower: Sequence[int]) -> None:
    if len(upper) != len(lower):
        raise ValueError("upper and lower rows differ in length")
    for r in range(1, len(upper)):
        if upper[r] > upper[r - 1]:
            raise ValueError("upper row must weakly decrease")
        if upper[r] == upper[r - 1] and lower[r] < lower[r - 1]:
            raise ValueError("lower entries under equal upper entries must weakly increase")
    if any(v < 1 for v in upper) or any(v < 1 for v in lower):
        raise ValueError("two-line array entries must be positive")


def rsk(upper: Sequence[int], lower: Sequence[int]) -> tuple[Rows, Rows]:
    """Insertion tableau ``P`` of the lower row and recording tableau ``Q`` of the upper row."""
    check_two_line_array(upper, lower)
    P: Rows = ()
    Q: list[list[int]] = []
    for u, v in zip(upper, lower):
        P, (i, j) = schensted_insert(P, v)
        if i > len(Q):
            Q.append([])
        Q[i - 1].append(u)
    return P, as_rows(Q)


def rsk_inverse(P: Rows, Q: Rows) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Recover the two-line array ``(upper, lower)`` from a pair of equal shape."""
    if tuple(map(len, P)) != tuple(map(len, Q)):
        raise ValueError("P and Q must have the same shape")
    P_rows = [list(r) for r in P]
    Q_rows = [list(r) for r in Q]
    upper: list[int] = []
    lower: list[int] = []
    while Q_rows:
        # smallest recording value; among ties the lowest row was filled last
        small = min(r[-1] for r in Q_rows)
        i = max(k for k, r in enumerate(Q_rows) if r[-1] == small)
        u = Q_rows[i].pop()
        hand = P_rows[i].pop()
        for k in range(i - 1, -1, -1):
            row = P_rows[k]
            # the letter that bumped ``hand`` is the smallest entry >= hand
            pos = max(p for p, v in enumerate(row) if v >= hand)
            row[pos], hand = hand, row[pos]
        if not Q_rows[i]:
            del Q_rows[i]
            del P_rows[i]
        upper.append(u)
        lower.append(hand)
    return tuple(reversed(upper)), tuple(reversed(lower))


def insert_word_rrst(word: Iterable[int], T: Rows = ()) -> Rows:
    for b in word:
        T, _ = schensted_insert(T, b)
    return T


# ---------------------------------------------------------------------------
# RCT insertion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InsertionResult:
    """Outcome of ``U <- b``.

    ``new_box`` is the added cell, ``path`` the cells of the result holding an
    entry that was placed during the insertion (every bump plus the new box),
    and ``augmented_row`` the row gaining the new cell.
    """

    tableau: Rows
    new_box: Cell
    path: frozenset[Cell]

    @property
    def augmented_row(self) -> int:
        return self.new_box[0]

    def to_json(self) -> dict:
        return {
            "tableau": [list(r) for r in self.tableau],
            "new_box": list(self.new_box),
            "path": sorted([list(c) for c in self.path]),
        }


def rct_insert(U: Rows, b: int) -> InsertionResult:
    """Insert ``b`` into the row-strict composition tableau ``U``.

    Positions are scanned top to bottom within each column, starting in the
    column just right of the longest row and moving leftwards.  The letter in
    hand either lands in an empty cell that extends a row of the right length
    (when it is smaller than that row's last entry) or bumps an entry that is
    weakly smaller, provided it is strictly smaller than the entry to the left.
    A letter that survives to the first column starts a new row right after
    the lowest first-column entry weakly below it.
    """
    if b < 1:
        raise ValueError("inserted letters must be positive")
    rows = [list(r) for r in U]
    k = len(rows)
    m = max((len(r) for r in rows), default=0)
    hand = b
    bumps: list[tuple[int, int]] = []  # 0-indexed (row, column) in U's row numbering

    def finish(new: tuple[int, int], shift_from: int | None) -> InsertionResult:
        def fix(cell: tuple[int, int]) -> Cell:
            i, j = cell
            if shift_from is not None and i >= shift_from:
                i += 1
            return (i + 1, j + 1)

        path = frozenset([fix(c) for c in bumps] + [(new[0] + 1, new[1] + 1)])
        return InsertionResult(as_rows(rows), (new[0] + 1, new[1] + 1), path)

    # column m + 1: only placements, at ends of the longest rows
    if m >= 1:
        for i in range(k):
            if len(rows[i]) == m and hand < rows[i][m - 1]:
                rows[i].append(hand)
                return finish((i, m), None)
    # columns m down to 2 (0-indexed m - 1 down to 1)
    for j in range(m - 1, 0, -1):
        for i in range(k):
            row = rows[i]
            if len(row) == j:
                if hand < row[j - 1]:
                    row.append(hand)
                    return finish((i, j), None)
            elif len(row) > j:
                here = row[j]
                if here <= hand < row[j - 1]:
                    row[j] = hand
                    bumps.append((i, j))
                    hand = here
    # first column: a new row after the lowest first-column entry <= hand
    pos = 0
    for i in range(k):
        if rows[i][0] <= hand:
            pos = i + 1
    rows.insert(pos, [hand])
    return finish((pos, 0), pos)


def rct_insert_word(U: Rows, word: Iterable[int]) -> Rows:
    for b in word:
        U = rct_insert(U, b).tableau
    return U


def rct_uninsert(V: Rows, row: int) -> tuple[Rows, int]:
    """Undo an insertion whose new box ended row ``row`` (1-indexed).

    The row must be the lowest one of its length.  Returns ``(U, k)`` with
    ``rct_insert(U, k).tableau == V``.
    """
    rows = [list(r) for r in V]
    i = row - 1
    if not 0 <= i < len(rows):
        raise ValueError(f"row {row} out of range")
    length = len(rows[i])
    if any(len(rows[r]) == length for r in range(i + 1, len(rows))):
        raise ValueError(f"row {row} is not the lowest row of length {length}")
    hand = rows[i].pop()
    start_col = length - 1  # 0-indexed column of the removed cell
    if not rows[i]:
        del rows[i]
        start_col = 1
        above = len(rows)
    else:
        above = i
    m = max((len(r) for r in rows), default=0)

    def unbump(r: int, j: int) -> None:
        nonlocal hand
        cells = rows[r]
        if len(cells) <= j:
            return
        here = cells[j]
        right = cells[j + 1] if j + 1 < len(cells) else 0
        if here >= hand > right:
            cells[j], hand = hand, here

    # the column of the removed cell: only rows above it were scanned after it
    if start_col >= 1:
        for r in range(above - 1, -1, -1):
            unbump(r, start_col)
    for j in range(start_col + 1, m):
        for r in range(len(rows) - 1, -1, -1):
            unbump(r, j)
    return as_rows(rows), hand


# ---------------------------------------------------------------------------
# Knuth moves
# ---------------------------------------------------------------------------


def _k1(x: int, y: int, z: int) -> tuple[int, int, int] | None:
    # bca -> bac when a < b <= c
    b, c, a = x, y, z
    if a < b <= c:
        return (b, a, c)
    return None


def _k1_inv(x: int, y: int, z: int) -> tuple[int, int, int] | None:
    b, a, c = x, y, z
    if a < b <= c:
        return (b, c, a)
    return None


def _k2(x: int, y: int, z: int) -> tuple[int, int, int] | None:
    # acb -> cab when a <= b < c
    a, c, b = x, y, z
    if a <= b < c:
        return (c, a, b)
    return None


def _k2_inv(x: int, y: int, z: int) -> tuple[int, int, int] | None:
    c, a, b = x, y, z
    if a <= b < c:
        return (a, c, b)
    return None


MOVES = {"K1": _k1, "K1inv": _k1_inv, "K2": _k2, "K2inv": _k2_inv}


def knuth_move(word: Sequence[int], move: str, p: int) -> tuple[int, ...]:
    """Apply ``move`` to the letters at 0-indexed positions ``p, p+1, p+2``."""
    if move not in MOVES:
        raise ValueError(f"unknown move {move!r}")
    if not 0 <= p <= len(word) - 3:
        raise ValueError("position out of range")
    out = MOVES[move](*word[p:p + 3])
    if out is None:
        raise ValueError(f"{move} does not apply at position {p} of {tuple(word)}")
    return tuple(word[:p]) + out + tuple(word[p + 3:])


def knuth_class(word: Sequence[int], moves: str = "both") -> frozenset[tuple[int, ...]]:
    """Closure of ``word`` under the chosen moves (``"K1"`` or ``"both"``) and their inverses."""
    names = ["K1", "K1inv"] if moves == "K1" else list(MOVES)
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for p in range(len(w) - 2):
            for name in names:
                out = MOVES[name](*w[p:p + 3])
                if out is not None:
                    nw = w[:p] + out + w[p + 3:]
                    if nw not in seen:
                        seen.add(nw)
                        queue.append(nw)
    return frozenset(seen)
