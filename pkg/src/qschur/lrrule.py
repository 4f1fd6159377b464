"""Products ``RS_alpha * s_lambda`` expanded in row-strict quasisymmetric Schur functions.

The coefficients count Littlewood-Richardson skew row-strict composition
tableaux (``SkewFilling`` objects passing ``check_lr_skew``).  The module also
provides the bijection ``rho`` behind the rule, the super filling that
realizes the leading term, and the triangular basis of quasisymmetric
functions indexed by (partition, pure inverting composition) pairs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .combinat import (
    compositions,
    lexrev_compare,
    pb_pairs,
    phi_pair,
    reverse,
    strip_zeros,
    transpose,
)
from .insertion import rct_insert, rct_uninsert, rsk, rsk_inverse
from .tableaux import (
    Rows,
    SkewFilling,
    check_lr_skew,
    column_reading_cells,
    gen_counts,
    int_poly_add,
    int_poly_mul,
    superstandard_rrst,
)

Composition = tuple[int, ...]


# ---------------------------------------------------------------------------
# enumeration of LR skew fillings
# ---------------------------------------------------------------------------


def inner_placements(alpha: Sequence[int], beta: Sequence[int]) -> Iterator[Composition]:
    """Weak compositions ``gamma`` with ``strip_zeros(gamma) == alpha`` and ``gamma ⊆ beta``."""
    alpha, beta = tuple(alpha), tuple(beta)
    k, L = len(alpha), len(beta)

    def rec(pos: int, used: int, acc: list[int]) -> Iterator[Composition]:
        if pos == L:
            if used == k:
                yield tuple(acc)
            return
        remaining_rows = L - pos
        if k - used < remaining_rows:
            acc.append(0)
            yield from rec(pos + 1, used, acc)
            acc.pop()
        if used < k and alpha[used] <= beta[pos]:
            acc.append(alpha[used])
            yield from rec(pos + 1, used + 1, acc)
            acc.pop()

    yield from rec(0, 0, [])


def lr_fillings(beta: Sequence[int], alpha: Sequence[int], lam: Sequence[int]) -> Iterator[SkewFilling]:
    """All LR skew RCT of shape ``beta / alpha`` with content ``reverse(lam)``."""
    beta, alpha, lam = tuple(beta), tuple(alpha), tuple(p for p in lam if p)
    if sum(beta) != sum(alpha) + sum(lam):
        return
    if not lam:
        # the empty word is the only filling; it is not regular, so it is handled here
        if beta == alpha:
            yield SkewFilling(beta, alpha, tuple((None,) * b for b in beta))
        return
    target = reverse(lam)  # multiplicity of each value 1..len(lam)
    top = len(lam)
    for gamma in inner_placements(alpha, beta):
        # rows strictly decrease through values 1..top, so no skew row is longer than top
        if any(b - g > top for b, g in zip(beta, gamma)):
            continue
        cells = [(i, j) for i, j in column_reading_cells(beta) if j >= gamma[i]]
        grid: list[list[int | None]] = [[None] * b for b in beta]
        counts = [0] * (top + 2)

        def rec(pos: int) -> Iterator[SkewFilling]:
            if pos == len(cells):
                S = SkewFilling(beta, gamma, tuple(tuple(r) for r in grid))
                if check_lr_skew(S) is None:
                    yield S
                return
            i, j = cells[pos]
            if pos and cells[pos - 1][1] != j and not _triples_ok(beta, gamma, grid, cells[pos - 1][1] + 1):
                return
            left = grid[i][j - 1] if j > gamma[i] and j > 0 else None
            hi = top if left is None else min(top, left - 1)
            for v in range(1, hi + 1):
                if counts[v] >= target[v - 1]:
                    continue
                # reverse lattice prefix: #v may not exceed #(v + 1) below the top value
                if v < top and counts[v] + 1 > counts[v + 1]:
                    continue
                counts[v] += 1
                grid[i][j] = v
                yield from rec(pos + 1)
                grid[i][j] = None
                counts[v] -= 1

        yield from rec(0)


def _triples_ok(beta: Composition, gamma: Composition, grid: list[list[int | None]], col: int) -> bool:
    """Every triple whose rightmost cell lies in ``col`` (1-indexed, column 0 virtual) is inverted.

    Used to prune partial fillings once ``col`` is complete; the finished filling
    is still certified by :func:`check_lr_skew`.
    """
    inf = float("inf")

    def val(i: int, j: int) -> tuple[float, int]:
        # finite entries below every infinite one; infinite ones ranked by column, leftmost largest
        if j == 0 or j - 1 < gamma[i]:
            return (inf, -j)
        return (grid[i][j - 1], 0)

    def inverted(a: tuple[int, int], b: tuple[int, int], c: tuple[int, int]) -> bool:
        va, vb, vc = val(*a), val(*b), val(*c)
        return (vb <= va and va < vc) or (va < vc and vc <= vb)

    k = len(beta)
    for i1 in range(k):
        for i2 in range(i1 + 1, k):
            if beta[i1] >= beta[i2]:
                if 1 <= col <= beta[i2] and not inverted((i1, col), (i2, col), (i1, col - 1)):
                    return False
            elif 1 <= col <= beta[i1] + 1 and not inverted((i2, col), (i1, col - 1), (i2, col - 1)):
                return False
    return True


def lr_coefficient(alpha: Sequence[int], lam: Sequence[int], beta: Sequence[int]) -> int:
    if sum(beta) != sum(alpha) + sum(lam):
        raise ValueError("|beta| must equal |alpha| + |lambda|")
    return sum(1 for _ in lr_fillings(beta, alpha, lam))


def candidate_shapes(alpha: Sequence[int], lam: Sequence[int]) -> Iterator[Composition]:
    """Strong ``beta`` of the right size with at most ``len(alpha) + |lam|`` rows."""
    d = sum(alpha) + sum(lam)
    cap = len(alpha) + sum(lam)
    widest = max(alpha, default=0) + len([p for p in lam if p])
    for beta in compositions(d):
        if len(beta) <= cap and max(beta, default=0) <= widest:
            yield beta


@lru_cache(maxsize=None)
def _expand(alpha: Composition, lam: Composition) -> tuple[tuple[Composition, int], ...]:
    out = []
    for beta in candidate_shapes(alpha, lam):
        c = lr_coefficient(alpha, lam, beta)
        if c:
            out.append((beta, c))
    return tuple(out)


@dataclass(frozen=True)
class LRExpansion:
    alpha: Composition
    lam: Composition
    terms: dict

    def to_json(self) -> dict:
        ordered = sorted(self.terms.items(), key=lambda kv: _lexrev_key(kv[0]), reverse=True)
        return {
            "alpha": list(self.alpha),
            "lambda": list(self.lam),
            "terms": [{"beta": list(b), "coeff": c} for b, c in ordered],
        }


def _lexrev_key(beta: Sequence[int]) -> tuple:
    return (tuple(sorted(beta, reverse=True)), tuple(reversed(beta)))


def expand_product(alpha: Sequence[int], lam: Sequence[int], n: int | None = None, check: bool = True) -> LRExpansion:
    """``RS_alpha * s_lambda = sum_beta C * RS_beta``.

    With ``check`` the expansion is compared against the product of the two
    generating functions in ``n`` variables, which must be at least the total
    degree so that the ``RS_beta`` stay independent.
    """
    alpha = tuple(alpha)
    lam = tuple(p for p in lam if p)
    d = sum(alpha) + sum(lam)
    if n is None:
        n = d
    if n < d:
        raise ValueError(f"need at least {d} variables, got {n}")
    terms = dict(_expand(alpha, lam))
    if check and not expansion_matches_product(alpha, lam, terms, n):
        raise ArithmeticError(f"LR expansion of RS{alpha} * s{lam} disagrees with the polynomial product")
    return LRExpansion(alpha, lam, terms)


def expansion_matches_product(alpha: Composition, lam: Composition, terms: dict, n: int) -> bool:
    lhs = int_poly_mul(gen_counts("rs", alpha, n), gen_counts("schur", lam, n))
    rhs: dict = {}
    for beta, c in terms.items():
        rhs = int_poly_add(rhs, gen_counts("rs", beta, n), c)
    return lhs == rhs


# ---------------------------------------------------------------------------
# the bijection rho
# ---------------------------------------------------------------------------


def rho(U: Rows, T: Rows) -> tuple[Rows, SkewFilling]:
    """Map an RCT ``U`` and an RRST ``T`` of shape ``lam^t`` to ``(V, S)``.

    ``T`` and the superstandard tableau of its shape form an RSK pair; the
    lower row of the resulting two-line array is inserted into ``U`` and the
    upper entries are recorded at the new cells, giving ``S``.
    """
    U = tuple(tuple(r) for r in U)
    shape = tuple(len(r) for r in T)
    upper, lower = rsk_inverse(T, superstandard_rrst(shape)) if T else ((), ())
    V = U
    s_rows: list[list[int | None]] = [[None] * len(r) for r in U]
    inner = [len(r) for r in U]
    for u, v in zip(upper, lower):
        res = rct_insert(V, v)
        V = res.tableau
        i, j = res.new_box
        if j == 1:
            s_rows.insert(i - 1, [])
            inner.insert(i - 1, 0)
        s_rows[i - 1].append(u)
    S = SkewFilling(tuple(len(r) for r in V), tuple(inner), tuple(tuple(r) for r in s_rows))
    return V, S


def rho_inverse(V: Rows, S: SkewFilling) -> tuple[Rows, Rows]:
    """Undo :func:`rho` by un-inserting the cells of ``S`` in the order 1, 2, ... of their values.

    Within one value the cells are taken in column reading order.
    """
    rows = [list(r) for r in S.rows]
    inner = list(S.inner)
    pairs: list[tuple[int, int]] = []
    top = max((v for r in rows for v in r if v is not None), default=0)
    for value in range(1, top + 1):
        while True:
            shape = [len(r) for r in rows]
            hit = next(((i, j) for i, j in column_reading_cells(shape) if rows[i][j] == value), None)
            if hit is None:
                break
            i, j = hit
            if j != len(rows[i]) - 1:
                raise ValueError("recording cell is not at the end of its row")
            V, k = rct_uninsert(V, i + 1)
            rows[i].pop()
            if not rows[i]:
                if inner[i]:
                    raise ValueError("recording filling removed a skewed cell")
                del rows[i]
                del inner[i]
            pairs.append((value, k))
    if any(v is not None for r in rows for v in r):
        raise ValueError("recording filling not exhausted")
    upper = tuple(p[0] for p in reversed(pairs))
    lower = tuple(p[1] for p in reversed(pairs))
    if not upper:
        return tuple(tuple(r) for r in V), ()
    T, Q = rsk(upper, lower)
    if Q != superstandard_rrst(tuple(len(r) for r in Q)):
        raise ValueError("recording tableau is not superstandard; input is not in the image of rho")
    return tuple(tuple(r) for r in V), T


# ---------------------------------------------------------------------------
# super fillings and the coinvariant basis
# ---------------------------------------------------------------------------


def super_filling(lam: Sequence[int], alpha: Sequence[int]) -> SkewFilling:
    """Append row ``i`` of the superstandard tableau of shape ``lam^t`` to the ``i``-th longest row of ``alpha``.

    Among rows of equal length the lower one counts as longer.
    """
    lam = tuple(p for p in lam if p)
    lt = transpose(lam) if lam else ()
    base = list(alpha) + [0] * max(0, len(lt) - len(alpha))
    T = superstandard_rrst(lt)
    order = sorted(range(len(base)), key=lambda i: (base[i], i), reverse=True)
    rows: list[list[int | None]] = [[None] * p for p in base]
    for rank, trow in enumerate(T):
        rows[order[rank]].extend(trow)
    outer = tuple(len(r) for r in rows)
    return SkewFilling(outer, tuple(base), tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class CoinvariantBasis:
    """Products ``s_lam * RS_alpha`` of degree ``d`` and their expansion matrix.

    ``pairs`` and ``columns`` are both sorted in decreasing lexrev order, the
    pairs by their image under :func:`phi_pair`.
    """

    d: int
    pairs: tuple[tuple[Composition, Composition], ...]
    columns: tuple[Composition, ...]
    matrix: tuple[tuple[int, ...], ...]

    def is_uni_upper_triangular(self) -> bool:
        m = self.matrix
        if len(m) != len(self.columns) or any(len(r) != len(self.columns) for r in m):
            return False
        for i, row in enumerate(m):
            if row[i] != 1:
                return False
            if any(row[j] for j in range(i)):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "pairs": [{"lambda": list(l), "alpha": list(a)} for l, a in self.pairs],
            "columns": [list(b) for b in self.columns],
            "matrix": [list(r) for r in self.matrix],
        }


def coinvariant_basis(d: int, n: int | None = None, check: bool = False) -> CoinvariantBasis:
    n = d if n is None else n
    if n < d:
        raise ValueError(f"need at least {d} variables, got {n}")
    pairs = pb_pairs(d)
    key = lambda pair: _lexrev_key(phi_pair(*pair))  # noqa: E731
    pairs = sorted(pairs, key=key, reverse=True)
    columns = sorted(compositions(d), key=_lexrev_key, reverse=True)
    index = {b: k for k, b in enumerate(columns)}
    matrix = []
    for lam, alpha in pairs:
        row = [0] * len(columns)
        for beta, c in expand_product(alpha, lam, n, check=check).terms.items():
            row[index[beta]] = c
        matrix.append(tuple(row))
    return CoinvariantBasis(d, tuple(pairs), tuple(columns), tuple(matrix))


def leading_term(alpha: Sequence[int], lam: Sequence[int]) -> Composition:
    """The lexrev-largest ``beta`` in the expansion of ``RS_alpha * s_lam``."""
    terms = expand_product(alpha, lam, check=False).terms
    best = None
    for beta in terms:
        if best is None or lexrev_compare(beta, best) > 0:
            best = beta
    return best


def count_by_content(S: SkewFilling) -> tuple[int, ...]:
    c = Counter(v for r in S.rows for v in r if v is not None)
    return tuple(c.get(i, 0) for i in range(1, max(c, default=0) + 1))


__all__ = [
    "CoinvariantBasis",
    "LRExpansion",
    "candidate_shapes",
    "coinvariant_basis",
    "count_by_content",
    "expand_product",
    "expansion_matches_product",
    "inner_placements",
    "leading_term",
    "lr_coefficient",
    "lr_fillings",
    "rho",
    "rho_inverse",
    "super_filling",
]
