"""Divided differences, Demazure characters and atoms, keys and right keys.

Young tableaux here follow the increasing convention: rows weakly increase
left to right and columns strictly increase top to bottom.  This differs
from the reverse tableaux used for Schur functions in :mod:`qschur.tableaux`,
and the two are never converted into each other implicitly.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .combinat import foundation, sort_to_partition, strip_zeros, transpose
from .exact import XPoly, exact_divide_by_difference
from .insertion import knuth_class
from .permutations import Perm, bruhat_leq, min_coset_rep, stabilizer_is_right_descent_free
from .tableaux import Rows, all_tableaux, content

# ---------------------------------------------------------------------------
# operators
# ---------------------------------------------------------------------------


def partial(f: XPoly, i: int) -> XPoly:
    """``(f - s_i f) / (x_i - x_{i+1})``."""
    return exact_divide_by_difference(f, i)


def pi(f: XPoly, i: int) -> XPoly:
    """``pi_i f = partial_i(x_i f)``."""
    e = [0] * f.n
    e[i - 1] = 1
    return partial(f.shift(e), i)


def pibar(f: XPoly, i: int) -> XPoly:
    """``pi_i f - f``."""
    return pi(f, i) - f


def pibar_monomial(beta: Sequence[int], i: int) -> dict[tuple[int, ...], int]:
    """Closed-form action of ``pibar_i`` on ``x^beta`` as an integer polynomial."""
    beta = tuple(beta)
    a, b = i - 1, i
    out: dict[tuple[int, ...], int] = {}

    def shifted(t: int) -> tuple[int, ...]:
        v = list(beta)
        v[a] -= t
        v[b] += t
        return tuple(v)

    k = beta[a] - beta[b]
    if k > 0:
        for t in range(1, k + 1):
            out[shifted(t)] = 1
    elif k < 0:
        for t in range(0, -k):
            out[shifted(-t)] = -1
    return out


_OPS = {"partial": partial, "pi": pi, "pibar": pibar}


def apply_word(f: XPoly, word: Sequence[int], op: str = "pi") -> XPoly:
    """``op_{w_1} op_{w_2} ... op_{w_k} f``; the rightmost operator acts first."""
    fn = _OPS[op]
    for i in reversed(word):
        f = fn(f, i)
    return f


def left_reduced_word(tau: Perm) -> tuple[int, ...]:
    """A reduced word found by peeling left descents, generally different from ``tau.reduced_word()``."""
    w = tau
    word: list[int] = []
    n = len(tau)
    while w.length():
        inv = w.inverse()
        # left descent i: i+1 appears before i in one-line notation
        i = next(k for k in range(n - 1, 0, -1) if inv[k - 1] > inv[k])
        word.append(i)
        w = Perm.simple(i, n) * w
    return tuple(word)


def _lam_monomial(lam: Sequence[int], n: int) -> XPoly:
    lam = tuple(lam) + (0,) * (n - len(lam))
    if len(lam) != n:
        raise ValueError("partition longer than the number of variables")
    return XPoly.monomial(lam)


def demazure_char(tau: Perm, lam: Sequence[int], n: int | None = None) -> XPoly:
    """``pi_tau(x^lam)``, checked against a second reduced word."""
    n = len(tau) if n is None else n
    start = _lam_monomial(lam, n)
    w1, w2 = tau.reduced_word(), left_reduced_word(tau)
    out = apply_word(start, w1, "pi")
    if w2 != w1 and apply_word(start, w2, "pi") != out:
        raise AssertionError(f"Demazure operator depends on the reduced word for {tau}")
    return out


def demazure_atom_perm(tau: Perm, lam: Sequence[int], n: int | None = None) -> XPoly:
    """``pibar_tau(x^lam)``, checked against a second reduced word."""
    n = len(tau) if n is None else n
    start = _lam_monomial(lam, n)
    w1, w2 = tau.reduced_word(), left_reduced_word(tau)
    out = apply_word(start, w1, "pibar")
    if w2 != w1 and apply_word(start, w2, "pibar") != out:
        raise AssertionError(f"atom operator depends on the reduced word for {tau}")
    return out


@lru_cache(maxsize=None)
def _atom_cached(gamma: tuple[int, ...]) -> XPoly:
    tau, lam = min_coset_rep(gamma)
    return demazure_atom_perm(tau, lam, len(gamma))


def demazure_atom(gamma: Sequence[int], n: int | None = None) -> XPoly:
    """The atom ``A_gamma = pibar_tau(x^lam)`` with ``tau`` the minimal coset representative."""
    gamma = tuple(gamma)
    if n is not None and n != len(gamma):
        raise ValueError("gamma must have exactly n parts")
    return _atom_cached(gamma)


def demazure_char_of(gamma: Sequence[int]) -> XPoly:
    """``pi_tau(x^lam)`` for the minimal ``tau`` sending ``lam = sort(gamma)`` to ``gamma``."""
    tau, lam = min_coset_rep(tuple(gamma))
    return demazure_char(tau, lam, len(gamma))


def min_coset_reps(lam: Sequence[int]) -> list[Perm]:
    """All minimal-length coset representatives for the stabilizer of ``lam`` (padded)."""
    from .permutations import all_perms

    return [w for w in all_perms(len(lam)) if stabilizer_is_right_descent_free(w, lam)]


# ---------------------------------------------------------------------------
# Young tableaux (increasing convention) and keys
# ---------------------------------------------------------------------------


def young_tableaux(shape: Sequence[int], n: int) -> Iterator[Rows]:
    """Semistandard tableaux of partition ``shape`` with entries ``1..n``."""
    shape = tuple(shape)
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    grid = [[0] * r for r in shape]

    def rec(pos: int) -> Iterator[Rows]:
        if pos == len(cells):
            yield tuple(tuple(r) for r in grid)
            return
        i, j = cells[pos]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, n + 1):
            grid[i][j] = v
            yield from rec(pos + 1)
        grid[i][j] = 0

    yield from rec(0)


def is_young_tableau(T: Rows) -> bool:
    shape = tuple(len(r) for r in T)
    if any(a < b for a, b in zip(shape, shape[1:])):
        return False
    rows_ok = all(r[j] <= r[j + 1] for r in T for j in range(len(r) - 1))
    cols_ok = all(T[i][j] < T[i + 1][j] for i in range(len(T) - 1) for j in range(len(T[i + 1])))
    return rows_ok and cols_ok


def columns_of(T: Rows) -> list[tuple[int, ...]]:
    width = len(T[0]) if T else 0
    return [tuple(r[j] for r in T if len(r) > j) for j in range(width)]


def from_columns(cols: Sequence[Sequence[int]]) -> Rows:
    height = max((len(c) for c in cols), default=0)
    return tuple(tuple(c[i] for c in cols if len(c) > i) for i in range(height))


def is_key(T: Rows) -> bool:
    cols = columns_of(T)
    return is_young_tableau(T) and all(set(cols[j + 1]) <= set(cols[j]) for j in range(len(cols) - 1))


def key_of_composition(gamma: Sequence[int]) -> Rows:
    """The key of shape ``sort(gamma)`` whose first ``gamma_j`` columns contain ``j``."""
    gamma = tuple(gamma)
    width = max(gamma, default=0)
    cols = [tuple(i for i, g in enumerate(gamma, start=1) if g > j) for j in range(width)]
    return from_columns(cols)


def key_from_perm(sigma: Sequence[int], mu: Sequence[int]) -> Rows:
    """Column ``j`` holds the first ``mu_j`` letters of ``sigma`` in increasing order."""
    return from_columns([tuple(sorted(sigma[:m])) for m in mu if m])


def young_column_word(T: Rows) -> tuple[int, ...]:
    """Columns read bottom to top, left to right."""
    return tuple(v for col in columns_of(T) for v in reversed(col))


def column_factorization(word: Sequence[int]) -> list[tuple[int, ...]]:
    """Split into maximal strictly decreasing factors."""
    out: list[list[int]] = []
    for letter in word:
        if out and letter < out[-1][-1]:
            out[-1].append(letter)
        else:
            out.append([letter])
    return [tuple(f) for f in out]


def colform(word: Sequence[int]) -> tuple[int, ...]:
    return tuple(len(f) for f in column_factorization(word))


@lru_cache(maxsize=None)
def _right_key_of_word(word: tuple[int, ...], shape: tuple[int, ...]) -> Rows:
    lt = transpose(shape)
    target = tuple(sorted(lt, reverse=True))
    found: dict[int, tuple[int, ...]] = {}
    for v in knuth_class(word, "both"):
        factors = column_factorization(v)
        form = tuple(len(f) for f in factors)
        if tuple(sorted(form, reverse=True)) != target:
            continue
        last = tuple(sorted(factors[-1]))
        prev = found.get(len(last))
        if prev is not None and prev != last:
            raise AssertionError(f"column-frank words disagree on the last column for {word}")
        found[len(last)] = last
    cols = []
    for j, h in enumerate(lt):
        if h not in found:
            raise AssertionError(f"no column-frank word with last column of length {h} for {word}")
        cols.append(found[h])
    return from_columns(cols)


def right_key(T: Rows) -> Rows:
    """The right key of a Young tableau via column-frank words in its Knuth class."""
    if not T:
        return ()
    shape = tuple(len(r) for r in T)
    return _right_key_of_word(young_column_word(T), shape)


def atom_via_keys(gamma: Sequence[int], n: int | None = None) -> XPoly:
    """Sum of ``x^T`` over Young tableaux whose right key is ``key(gamma)``."""
    gamma = tuple(gamma)
    n = len(gamma) if n is None else n
    if n != len(gamma):
        raise ValueError("gamma must have exactly n parts")
    lam = sort_to_partition(gamma)
    tau, _ = min_coset_rep(gamma)
    target = key_from_perm(tau, transpose(lam)) if lam else ()
    if target != key_of_composition(gamma):
        raise AssertionError("key(gamma) differs from K(sigma, lam^t)")
    terms: dict[tuple[int, ...], int] = {}
    for T in young_tableaux(lam, n):
        if right_key(T) == target:
            c = content(T, n)
            terms[c] = terms.get(c, 0) + 1
    return XPoly(n, terms)


def atom_via_ct(gamma: Sequence[int], n: int | None = None) -> XPoly:
    """Sum of ``x^U`` over column-strict composition tableaux of shape ``strip(gamma)``
    whose first column is the set of indices of nonzero parts."""
    gamma = tuple(gamma)
    n = len(gamma) if n is None else n
    alpha = strip_zeros(gamma)
    if not alpha:
        return XPoly.one(n)
    first = tuple(sorted(foundation(gamma)))
    terms: dict[tuple[int, ...], int] = {}
    for U in all_tableaux("ct", alpha, n):
        if tuple(r[0] for r in U) == first:
            c = content(U, n)
            terms[c] = terms.get(c, 0) + 1
    return XPoly(n, terms)


def char_as_atom_sum(tau: Perm, lam: Sequence[int]) -> XPoly:
    """``sum of A_{w(lam)}`` over minimal coset representatives ``w <= tau``."""
    n = len(tau)
    lam = tuple(lam) + (0,) * (n - len(lam))
    total = XPoly.zero(n)
    for w in min_coset_reps(lam):
        if bruhat_leq(w, tau):
            total = total + demazure_atom(w.apply_to_vector(lam))
    return total
