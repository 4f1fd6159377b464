"""Compositions, partitions, words, and orders on them.

Compositions are plain tuples of nonnegative integers.  A *strong*
composition has no zero parts; a *weak* one may.  Partitions are weakly
decreasing strong compositions.
"""

from __future__ import annotations

from collections import Counter
from functools import cmp_to_key
from itertools import product
from typing import Iterable, Iterator, Sequence

Composition = tuple[int, ...]
Word = tuple[int, ...]


def parse_composition(text: str) -> Composition:
    """Parse the text form ``"1,0,3,2"``; the empty string gives ``()``."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed composition {text!r}") from exc
    if any(p < 0 for p in parts):
        raise ValueError(f"composition {text!r} has a negative part")
    return parts


def format_composition(parts: Sequence[int]) -> str:
    return ",".join(str(p) for p in parts)


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def is_strong(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts)


def strip_zeros(parts: Sequence[int]) -> Composition:
    return tuple(p for p in parts if p)


def sort_to_partition(parts: Sequence[int]) -> Composition:
    return tuple(sorted((p for p in parts if p), reverse=True))


def reverse(parts: Sequence[int]) -> Composition:
    return tuple(reversed(parts))


def size(parts: Sequence[int]) -> int:
    return sum(parts)


def length(parts: Sequence[int]) -> int:
    """Number of parts, counting zeros of a weak composition."""
    return len(parts)


def transpose(partition: Sequence[int]) -> Composition:
    """Conjugate partition."""
    if not is_partition(partition):
        raise ValueError(f"{tuple(partition)} is not a partition")
    if not partition:
        return ()
    return tuple(sum(1 for p in partition if p > j) for j in range(partition[0]))


def foundation(parts: Sequence[int]) -> frozenset[int]:
    """Indices (1-based) of the nonzero parts."""
    return frozenset(i for i, p in enumerate(parts, start=1) if p)


def shape_ops(gamma: Sequence[int]) -> dict:
    """Bundle the basic shape statistics of a composition."""
    out = {
        "sort_to_partition": sort_to_partition(gamma),
        "strip_zeros": strip_zeros(gamma),
        "reverse": reverse(gamma),
        "length": length(gamma),
        "size": size(gamma),
        "foundation": foundation(gamma),
    }
    if is_partition(gamma):
        out["transpose"] = transpose(gamma)
    return out


def contained_in(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """``alpha ⊆ beta``: equal lengths and partwise at most."""
    return len(alpha) == len(beta) and all(a <= b for a, b in zip(alpha, beta))


def reverse_contained_in(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """Containment of reversals, padding the shorter reversal with trailing zeros.

    Reading the compositions from the right, the last part of ``alpha`` must fit
    inside the last part of ``beta``, and so on.  This is the alignment used for
    bottom-justified skew shapes.
    """
    if len(alpha) > len(beta):
        return False
    ra, rb = reverse(alpha), reverse(beta)
    return all(a <= b for a, b in zip(ra, rb))


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------


def content(word: Iterable[int], n: int | None = None) -> Composition:
    """Multiplicities of ``1, 2, ..., n`` in ``word`` (``n`` defaults to the max letter)."""
    c = Counter(word)
    top = max(c, default=0) if n is None else n
    return tuple(c.get(i, 0) for i in range(1, top + 1))


def is_regular_reverse_lattice(word: Sequence[int]) -> bool:
    """Every prefix has at least as many ``i`` as ``i - 1`` for ``1 < i``, and ``1`` occurs."""
    if not word or 1 not in word:
        return False
    top = max(word)
    counts: Counter[int] = Counter()
    for letter in word:
        counts[letter] += 1
        # a new letter can only break the inequality #(letter) <= #(letter + 1)
        if letter < top and counts[letter] > counts[letter + 1]:
            return False
    return True


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def compositions(d: int) -> Iterator[Composition]:
    """All strong compositions of ``d`` (``2**(d-1)`` of them, one empty for ``d = 0``)."""
    if d == 0:
        yield ()
        return
    for first in range(1, d + 1):
        for rest in compositions(d - first):
            yield (first,) + rest


def weak_compositions(d: int, n: int) -> Iterator[Composition]:
    """All weak compositions of ``d`` with exactly ``n`` parts."""
    if n == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in weak_compositions(d - first, n - 1):
            yield (first,) + rest


def weak_compositions_bounded(n: int, max_part: int) -> Iterator[Composition]:
    """All weak compositions with ``n`` parts each at most ``max_part``."""
    yield from product(range(max_part + 1), repeat=n)


def partitions(d: int, max_part: int | None = None) -> Iterator[Composition]:
    """Partitions of ``d`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = d
    if d == 0:
        yield ()
        return
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions(d - first, first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# orders
# ---------------------------------------------------------------------------


def lexrev_compare(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """Three-way comparison in the lexrev order: ``1`` when ``alpha`` is larger.

    Sorted partitions are compared lexicographically first; ties are broken by
    comparing the reversed compositions lexicographically.
    """
    if sum(alpha) != sum(beta):
        raise ValueError("lexrev compares compositions of equal size only")
    a = (sort_to_partition(alpha), reverse(alpha))
    b = (sort_to_partition(beta), reverse(beta))
    return (a > b) - (a < b)


def lexrev_sorted(comps: Iterable[Sequence[int]], descending: bool = True) -> list[Composition]:
    out = sorted((tuple(c) for c in comps), key=cmp_to_key(lexrev_compare))
    return out[::-1] if descending else out


def dominates(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """Dominance order on weak compositions of equal length and size."""
    sa = sb = 0
    for a, b in zip(alpha, beta):
        sa += a
        sb += b
        if sa < sb:
            return False
    return True


# ---------------------------------------------------------------------------
# pure and inverting compositions, and the index map onto compositions
# ---------------------------------------------------------------------------


def is_inverting(alpha: Sequence[int]) -> bool:
    """Each ``1 < i <= max`` has some ``i`` appearing before some ``i - 1``."""
    if not alpha:
        return True
    for i in range(2, max(alpha) + 1):
        try:
            first_i = alpha.index(i)
        except ValueError:
            return False
        if i - 1 not in alpha[first_i + 1:]:
            return False
    return True


def pure_tail_value(alpha: Sequence[int]) -> int:
    """The largest ``k`` such that ``alpha`` ends with a run using every value ``k, ..., 1``.

    The tail is ``k^{i_k} ... 1^{i_1}`` with every multiplicity positive and no
    earlier part at most ``k``.
    """
    k = 0
    for cand in range(1, len(alpha) + 1):
        # the tail is the maximal suffix of parts <= cand; it must run weakly
        # down through every value cand..1 and no earlier part may be <= cand
        j = len(alpha)
        while j > 0 and alpha[j - 1] <= cand:
            j -= 1
        tail = alpha[j:]
        if any(p <= cand for p in alpha[:j]):
            continue
        if list(tail) == sorted(tail, reverse=True) and set(tail) == set(range(1, cand + 1)):
            k = cand
    return k


def is_pure(alpha: Sequence[int]) -> bool:
    return pure_tail_value(alpha) % 2 == 0


def pure_inverting(d: int) -> list[Composition]:
    return [a for a in compositions(d) if is_pure(a) and is_inverting(a)]


def phi_pair(lam: Sequence[int], alpha: Sequence[int]) -> Composition:
    """Add the ``i``-th part of ``lam``'s conjugate to the ``i``-th largest part of ``alpha``.

    Among equal parts of ``alpha`` the later one counts as larger.  When
    ``alpha`` is too short it is extended with zeros first.
    """
    lt = transpose(tuple(lam)) if lam else ()
    parts = list(alpha) + [0] * max(0, len(lt) - len(alpha))
    order = sorted(range(len(parts)), key=lambda i: (parts[i], i), reverse=True)
    for rank, v in enumerate(lt):
        parts[order[rank]] += v
    return tuple(parts)


def pb_pairs(d: int) -> list[tuple[Composition, Composition]]:
    """All pairs ``(lam, alpha)`` with ``lam`` a partition, ``alpha`` pure and inverting, sizes summing to ``d``."""
    out = []
    for k in range(d + 1):
        for lam in partitions(k):
            for alpha in pure_inverting(d - k):
                out.append((lam, alpha))
    return out
