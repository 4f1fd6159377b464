"""Lakshmibai-Seshadri paths of type A, root operators and the atoms they produce.

A path of shape ``lam`` is stored as a Bruhat-decreasing chain of minimal coset
representatives ``tau_1 > ... > tau_r`` together with rational cuts
``0 = a_0 < a_1 < ... < a_r = 1``; on ``[a_{j-1}, a_j]`` it moves in the
direction ``tau_j(lam)``.  Roots are index pairs ``(i, j)`` with ``i < j`` and
``<v, e_i - e_j> = v_i - v_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .exact import XPoly
from .permutations import (
    Perm,
    bruhat_leq,
    min_coset_rep,
    pairing,
    positive_roots,
    stabilizer_is_right_descent_free,
)

Vector = tuple[int, ...]


def _direction(tau: Perm, lam: Vector) -> Vector:
    return tau.apply_to_vector(lam)


def _rep_of(v: Vector) -> Perm:
    return min_coset_rep(v)[0]


@dataclass(frozen=True)
class RationalPath:
    lam: Vector
    chain: tuple[Perm, ...]
    cuts: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", tuple(self.lam))
        object.__setattr__(self, "chain", tuple(Perm(t) for t in self.chain))
        object.__setattr__(self, "cuts", tuple(Fraction(a) for a in self.cuts))
        if len(self.cuts) != len(self.chain) + 1:
            raise ValueError("need exactly one more cut than chain elements")

    @classmethod
    def straight(cls, lam: Sequence[int], tau: Perm | None = None) -> "RationalPath":
        lam = tuple(lam)
        tau = Perm.identity(len(lam)) if tau is None else tau
        return cls(lam, (tau,), (Fraction(0), Fraction(1)))

    @property
    def n(self) -> int:
        return len(self.lam)

    @property
    def r(self) -> int:
        return len(self.chain)

    def directions(self) -> list[Vector]:
        return [_direction(t, self.lam) for t in self.chain]

    def first_direction(self) -> Perm:
        return self.chain[0]

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "chain": [list(t) for t in self.chain],
            "cuts": [str(a) for a in self.cuts],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RationalPath":
        return cls(
            tuple(data["lambda"]),
            tuple(Perm(t) for t in data["chain"]),
            tuple(Fraction(a) for a in data["cuts"]),
        )

    def __str__(self) -> str:
        chain = " > ".join(str(t) for t in self.chain)
        cuts = " < ".join(str(a) for a in self.cuts)
        return f"({chain}; {cuts})"


def is_rational_path(path: RationalPath) -> bool:
    """Strictly increasing cuts from 0 to 1, strictly Bruhat-decreasing chain of coset representatives."""
    a = path.cuts
    if a[0] != 0 or a[-1] != 1 or any(x >= y for x, y in zip(a, a[1:])):
        return False
    if not all(stabilizer_is_right_descent_free(t, path.lam) for t in path.chain):
        return False
    return all(bruhat_leq(s, t) and s != t for t, s in zip(path.chain, path.chain[1:]))


def path_weight_exact(path: RationalPath) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * path.n
    for (lo, hi), v in zip(zip(path.cuts, path.cuts[1:]), path.directions()):
        for k in range(path.n):
            out[k] += (hi - lo) * v[k]
    return tuple(out)


def path_weight(path: RationalPath) -> Vector:
    """``pi(1)``; raises if it is not integral."""
    w = path_weight_exact(path)
    if any(c.denominator != 1 for c in w):
        raise ValueError(f"weight {w} is not integral")
    return tuple(int(c) for c in w)


@dataclass(frozen=True)
class Profile:
    """Values of ``h(t) = <pi(t), alpha_i>`` at the cuts, with the derived minima data."""

    values: tuple[Fraction, ...]
    Q: Fraction
    P: Fraction
    p: int
    q: int


def h_profile(path: RationalPath, i: int) -> Profile:
    root = (i, i + 1)
    hs = [Fraction(0)]
    for (lo, hi), v in zip(zip(path.cuts, path.cuts[1:]), path.directions()):
        hs.append(hs[-1] + (hi - lo) * pairing(v, root))
    Q = min(hs)
    return Profile(
        tuple(hs),
        Q,
        hs[-1] - Q,
        max(k for k, h in enumerate(hs) if h == Q),
        min(k for k, h in enumerate(hs) if h == Q),
    )


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _cover_steps(kappa: Perm, lam: Vector) -> Iterator[tuple[Perm, tuple[int, int]]]:
    """Coset representatives ``s_beta kappa`` one length below ``kappa``."""
    n = len(kappa)
    ell = kappa.length()
    for beta in positive_roots(n):
        nxt = Perm.transposition(beta[0], beta[1], n) * kappa
        if nxt.length() == ell - 1 and stabilizer_is_right_descent_free(nxt, lam):
            yield nxt, beta


def has_a_chain(tau: Perm, sigma: Perm, a: Fraction, lam: Vector) -> bool:
    """Whether a saturated chain from ``tau`` down to ``sigma`` has ``a <kappa_j(lam), beta_j>`` integral at every step."""
    lam = tuple(lam)
    target_len = sigma.length()

    @lru_cache(maxsize=None)
    def search(kappa: Perm) -> bool:
        if kappa == sigma:
            return True
        if kappa.length() <= target_len:
            return False
        for nxt, beta in _cover_steps(kappa, lam):
            if not bruhat_leq(sigma, nxt):
                continue
            if (a * pairing(nxt.apply_to_vector(lam), beta)).denominator != 1:
                continue
            if search(nxt):
                return True
        return False

    return search(tau)


def is_ls_path(path: RationalPath) -> bool:
    if not is_rational_path(path):
        return False
    for k in range(path.r - 1):
        if not has_a_chain(path.chain[k], path.chain[k + 1], path.cuts[k + 1], path.lam):
            return False
    return True


# ---------------------------------------------------------------------------
# root operators
# ---------------------------------------------------------------------------


def _reflect(v: Vector, i: int) -> Vector:
    w = list(v)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def _normalize(lam: Vector, segments: list[tuple[Vector, Fraction, Fraction]]) -> RationalPath:
    """Drop empty segments and merge neighbours sharing a direction."""
    merged: list[list] = []
    for v, lo, hi in segments:
        if hi == lo:
            continue
        if merged and merged[-1][0] == v:
            merged[-1][2] = hi
        else:
            merged.append([v, lo, hi])
    chain = tuple(_rep_of(v) for v, _, _ in merged)
    cuts = (Fraction(0),) + tuple(hi for _, _, hi in merged)
    return RationalPath(lam, chain, cuts)


def _segments(path: RationalPath) -> list[tuple[Vector, Fraction, Fraction]]:
    return [(v, lo, hi) for v, (lo, hi) in zip(path.directions(), zip(path.cuts, path.cuts[1:]))]


def f_op(path: RationalPath, i: int) -> RationalPath | None:
    """Lower along ``alpha_i``: reflect the stretch where ``h`` climbs from its last minimum ``Q`` to ``Q + 1``.

    Returns ``None`` when ``P = 0``.
    """
    prof = h_profile(path, i)
    if prof.P == 0:
        return None
    if prof.P < 1:
        raise ValueError("P is strictly between 0 and 1; not an LS path")
    segs = _segments(path)
    hs = prof.values
    goal = prof.Q + 1
    out = segs[: prof.p]
    for k in range(prof.p + 1, path.r + 1):
        v, lo, hi = segs[k - 1]
        if hs[k] >= goal:
            slope = pairing(v, (i, i + 1))
            a = lo + (goal - hs[k - 1]) / slope
            out.append((_reflect(v, i), lo, a))
            out.append((v, a, hi))
            out.extend(segs[k:])
            return _normalize(path.lam, out)
        out.append((_reflect(v, i), lo, hi))
    raise AssertionError("h never reaches Q + 1 after its last minimum")


def e_op(path: RationalPath, i: int) -> RationalPath | None:
    """Raise along ``alpha_i``: reflect the stretch where ``h`` falls from ``Q + 1`` to its first minimum ``Q``.

    Returns ``None`` when ``Q = 0``.
    """
    prof = h_profile(path, i)
    if prof.Q == 0:
        return None
    if prof.Q > -1:
        raise ValueError("Q is strictly between -1 and 0; not an LS path")
    segs = _segments(path)
    hs = prof.values
    goal = prof.Q + 1
    tail = segs[prof.q:]
    out_rev: list[tuple[Vector, Fraction, Fraction]] = []
    for k in range(prof.q, 0, -1):
        v, lo, hi = segs[k - 1]
        if hs[k - 1] >= goal:
            slope = pairing(v, (i, i + 1))
            a = lo + (goal - hs[k - 1]) / slope
            head = segs[: k - 1] + [(v, lo, a), (_reflect(v, i), a, hi)]
            return _normalize(path.lam, head + list(reversed(out_rev)) + tail)
        out_rev.append((_reflect(v, i), lo, hi))
    raise AssertionError("h never reaches Q + 1 before its first minimum")


# ---------------------------------------------------------------------------
# enumeration and the resulting polynomials
# ---------------------------------------------------------------------------


def _padded(lam: Sequence[int], n: int) -> Vector:
    lam = tuple(lam)
    if len(lam) > n:
        raise ValueError("partition has more parts than variables")
    lam = lam + (0,) * (n - len(lam))
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError("lam must be a partition")
    return lam


@lru_cache(maxsize=None)
def _enumerate(lam: Vector) -> tuple[RationalPath, ...]:
    n = len(lam)
    start = RationalPath.straight(lam)
    seen = {start}
    order = [start]
    work = [start]
    while work:
        path = work.pop()
        for i in range(1, n):
            nxt = f_op(path, i)
            if nxt is None:
                continue
            if e_op(nxt, i) != path:
                raise AssertionError(f"e_{i} does not undo f_{i} on {path}")
            if nxt not in seen:
                if not is_ls_path(nxt):
                    raise AssertionError(f"f_{i} produced a non-LS path {nxt}")
                seen.add(nxt)
                order.append(nxt)
                work.append(nxt)
    for path in order:
        for i in range(1, n):
            if e_op(path, i) is None:
                _check_string_direction(path, i)
    return tuple(order)


def _check_string_direction(head: RationalPath, i: int) -> None:
    """Past the head of an ``f_i``-string every path starts in the same direction."""
    nxt = f_op(head, i)
    if nxt is None:
        return
    first = nxt.first_direction()
    while nxt is not None:
        if nxt.first_direction() != first:
            raise AssertionError(f"f_{i}-string from {head} changes its first direction twice")
        nxt = f_op(nxt, i)


def enumerate_paths(lam: Sequence[int], n: int | None = None) -> tuple[RationalPath, ...]:
    """All LS paths of shape ``lam``: the straight path closed under every ``f_i``."""
    n = len(lam) if n is None else n
    return _enumerate(_padded(lam, n))


def paths_starting_at(tau: Perm, lam: Sequence[int]) -> list[RationalPath]:
    return [p for p in enumerate_paths(lam, len(tau)) if p.first_direction() == tau]


def _sum_weights(paths: Sequence[RationalPath], n: int) -> XPoly:
    terms: dict[Vector, int] = {}
    for p in paths:
        w = path_weight(p)
        terms[w] = terms.get(w, 0) + 1
    return XPoly(n, terms)


def atom_via_paths(gamma: Sequence[int], n: int | None = None) -> XPoly:
    """Sum of ``x^{pi(1)}`` over LS paths whose first direction is ``gamma``."""
    gamma = tuple(gamma)
    n = len(gamma) if n is None else n
    if n != len(gamma):
        raise ValueError("gamma must have exactly n parts")
    tau, lam = min_coset_rep(gamma)
    return _sum_weights(paths_starting_at(tau, lam), n)


def char_via_paths(tau: Perm, lam: Sequence[int], n: int | None = None) -> XPoly:
    """Sum of ``x^{pi(1)}`` over LS paths whose first direction is Bruhat below ``tau``."""
    n = len(tau) if n is None else n
    lam = _padded(lam, n)
    if not stabilizer_is_right_descent_free(tau, lam):
        raise ValueError(f"{tau} is not a minimal coset representative for {lam}")
    return _sum_weights([p for p in enumerate_paths(lam, n) if bruhat_leq(p.first_direction(), tau)], n)
