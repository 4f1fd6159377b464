"""Permutations of ``{1, ..., n}`` in one-line notation, Bruhat order and coset representatives."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _all_perms
from typing import Iterator, Sequence


class Perm(tuple):
    """A permutation stored as the tuple of its images ``(w(1), ..., w(n))``."""

    def __new__(cls, images: Sequence[int]):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, i: int, n: int) -> "Perm":
        """The adjacent transposition ``s_i`` swapping ``i`` and ``i + 1``."""
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        return cls(img)

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Perm":
        img = list(range(1, n + 1))
        img[i - 1], img[j - 1] = img[j - 1], img[i - 1]
        return cls(img)

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "Perm":
        """Product ``s_{w_1} s_{w_2} ...`` of simple transpositions."""
        out = cls.identity(n)
        for i in word:
            out = out * cls.simple(i, n)
        return out

    @classmethod
    def parse(cls, text: str) -> "Perm":
        return cls(int(p) for p in text.split(","))

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        """Composition ``(self * other)(i) = self(other(i))``."""
        if len(other) != len(self):
            raise ValueError("size mismatch")
        return Perm(self[o - 1] for o in other)

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for i, v in enumerate(self, start=1):
            inv[v - 1] = i
        return Perm(inv)

    def inversions(self) -> list[tuple[int, int]]:
        """Pairs ``i < j`` with ``w(i) > w(j)``."""
        n = len(self)
        return [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if self[i] > self[j]]

    def length(self) -> int:
        return len(self.inversions())

    def descents(self) -> list[int]:
        return [i for i in range(1, len(self)) if self[i - 1] > self[i]]

    def reduced_word(self) -> tuple[int, ...]:
        """A reduced word ``(i_1, ..., i_l)`` with ``self = s_{i_1} ... s_{i_l}``."""
        w = list(self)
        word: list[int] = []
        while True:
            for i in range(len(w) - 1):
                if w[i] > w[i + 1]:
                    # w = w' s_i with l(w') = l(w) - 1
                    w[i], w[i + 1] = w[i + 1], w[i]
                    word.append(i + 1)
                    break
            else:
                break
        return tuple(reversed(word))

    def apply_to_vector(self, v: Sequence) -> tuple:
        """Move entry ``i`` of ``v`` to position ``w(i)``."""
        if len(v) != len(self):
            raise ValueError("size mismatch")
        out = [None] * len(v)
        for i, x in enumerate(v):
            out[self[i] - 1] = x
        return tuple(out)

    def __repr__(self) -> str:
        return f"Perm({','.join(map(str, self))})"

    def __str__(self) -> str:
        return ",".join(map(str, self))


def perm_basics(tau: Perm) -> dict:
    return {
        "length": tau.length(),
        "inversion_set": tau.inversions(),
        "reduced_word": tau.reduced_word(),
        "inverse": tau.inverse(),
    }


def all_perms(n: int) -> Iterator[Perm]:
    for p in _all_perms(range(1, n + 1)):
        yield Perm(p)


def _is_subword(target: Perm, word: Sequence[int]) -> bool:
    """Whether some subword of ``word`` multiplies to ``target`` (not necessarily reduced)."""
    n = len(target)
    # dynamic programming over the set of products reachable by subwords
    reach = {Perm.identity(n)}
    for i in word:
        s = Perm.simple(i, n)
        reach |= {w * s for w in reach}
    return target in reach


@lru_cache(maxsize=None)
def bruhat_leq(sigma: Perm, tau: Perm) -> bool:
    """Strong Bruhat order via the subword property on a reduced word of ``tau``."""
    if len(sigma) != len(tau):
        raise ValueError("size mismatch")
    ls, lt = sigma.length(), tau.length()
    if ls > lt:
        return False
    if ls == lt:
        return sigma == tau
    return _is_subword(sigma, tau.reduced_word())


def bruhat_less(sigma: Perm, tau: Perm) -> bool:
    return sigma != tau and bruhat_leq(sigma, tau)


def min_coset_rep(gamma: Sequence[int]) -> tuple[Perm, tuple[int, ...]]:
    """Shortest ``tau`` with ``tau`` applied to ``sort(gamma)`` giving ``gamma``.

    Returns ``(tau, lam)`` where ``lam`` is ``gamma`` sorted decreasingly, keeping
    zeros so its length is ``len(gamma)``.  Equal parts of ``lam`` are sent to
    the positions of equal parts of ``gamma`` in increasing order, which is
    what minimizes the length.
    """
    n = len(gamma)
    lam = tuple(sorted(gamma, reverse=True))
    order = sorted(range(n), key=lambda i: (-gamma[i], i))
    images = [0] * n
    for k, pos in enumerate(order):
        images[k] = pos + 1
    return Perm(images), lam


def stabilizer_is_right_descent_free(tau: Perm, lam: Sequence[int]) -> bool:
    """``tau s_i > tau`` for every ``i`` with ``lam_i = lam_{i+1}``."""
    return all(tau[i - 1] < tau[i] for i in range(1, len(lam)) if lam[i - 1] == lam[i])


def pairing(v: Sequence[int], root: tuple[int, int]) -> int:
    """``<v, e_i - e_j>`` as the coordinate difference ``v_i - v_j``."""
    i, j = root
    return v[i - 1] - v[j - 1]


def positive_roots(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
