"""Verification suites shared by the command line and the acceptance tests.

Each suite enumerates a finite family of instances, checks an exact identity on
every one of them and returns a :class:`SuiteResult`.  Failures are recorded
with a short label so that a failing run points at a concrete counterexample.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations
from typing import Callable, Iterable, Sequence

from .combinat import (
    compositions,
    partitions,
    pb_pairs,
    phi_pair,
    weak_compositions,
    weak_compositions_bounded,
)
from .demazure import (
    apply_word,
    atom_via_ct,
    atom_via_keys,
    demazure_atom,
    key_of_composition,
    right_key,
)
from .exact import XPoly
from .insertion import knuth_class, rct_insert, rct_uninsert, rsk
from .lrrule import (
    coinvariant_basis,
    expand_product,
    expansion_matches_product,
    lr_fillings,
    rho,
    super_filling,
)
from .lspaths import atom_via_paths
from .macdonald import (
    COINV_READINGS,
    atom_specialization,
    box_stats,
    check_T_action,
    check_T_tau,
    check_Y_eigen,
    check_Y_tau_eigen,
    coinv_report,
    operator_relations,
)
from .patterns import (
    Theta,
    Theta_tilde,
    atom_via_caps,
    gt_from_tableau,
    psi,
    psi_inverse,
    tableau_from_gt,
    theta,
    theta_inverse,
)
from .permutations import all_perms
from .tableaux import (
    all_tableaux,
    check_lr_skew,
    check_rct,
    reading_order_less,
)

Rows = tuple[tuple[int, ...], ...]


@dataclass
class SuiteResult:
    """Outcome of one suite: how many instances ran and which ones failed."""

    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, label: str) -> None:
        self.checked += 1
        if not passed:
            self.failures.append(label)

    def line(self, timing: bool = False) -> str:
        status = "PASS" if self.ok else "FAIL"
        out = f"{status} {self.name}: {self.checked} checks, {len(self.failures)} failures"
        return out + f", {self.seconds:.2f}s" if timing else out

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "failures": self.failures[:20],
            "failure_count": len(self.failures),
            "notes": self.notes,
        }


def default_jobs() -> int:
    """Worker count from ``QSCHUR_JOBS``, defaulting to a single process."""
    try:
        return max(1, int(os.environ.get("QSCHUR_JOBS", "1")))
    except ValueError:
        return 1


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _timed(name: str, body: Callable[[SuiteResult], None]) -> SuiteResult:
    res = SuiteResult(name)
    start = time.perf_counter()
    body(res)
    res.seconds = time.perf_counter() - start
    return res


def strong_compositions_upto(k: int) -> list[tuple[int, ...]]:
    return [a for d in range(1, k + 1) for a in compositions(d)]


def partitions_upto(k: int) -> list[tuple[int, ...]]:
    return [p for d in range(k + 1) for p in partitions(d)]


# ---------------------------------------------------------------------------
# worked examples
# ---------------------------------------------------------------------------

FIGURE_ARRAY = (
    (1, 0, 3, 0, 0, 2, 2),
    (0, 3, 0, 0, 2, 2),
    (1, 0, 0, 2, 2),
    (0, 0, 2, 2),
    (0, 1, 2),
    (1, 2),
    (2,),
)
FIGURE_CT = ((1,), (3, 2, 2), (6, 4), (7, 7))
FIGURE_YT = ((7, 7, 2), (6, 4), (3, 2), (1,))

LR_U = ((1,), (4, 3, 2), (5, 4), (5, 3))
LR_T = ((4, 3, 2, 1), (4, 3), (2,))
LR_V = ((1,), (3, 2), (4, 3, 2), (4,), (5, 4, 3, 2, 1), (5, 4, 3))


def golden_checks() -> list[tuple[str, Callable[[], bool]]]:
    """The worked examples, each as a zero-argument predicate."""

    def insertion_example() -> bool:
        res = rct_insert(((1,), (3,), (4, 3, 2), (5, 4, 2), (5, 4)), 4)
        return (
            res.tableau == ((1,), (3,), (4, 3, 2), (4,), (5, 4, 2), (5, 4))
            and res.new_box == (4, 1)
            and res.path == frozenset({(4, 1), (5, 2), (6, 2)})
        )

    def u_and_s() -> bool:
        V, S = rho(LR_U, LR_T)
        return check_rct(LR_U) is None and check_lr_skew(S) is None and S.word() == (4, 4, 3, 3, 4, 2, 1)

    def lr_figure() -> bool:
        V, S = rho(LR_U, LR_T)
        return V == LR_V and S.outer == (1, 2, 3, 1, 5, 3) and S.inner == (1, 0, 3, 0, 2, 2)

    def pi_example() -> bool:
        f = apply_word(XPoly.monomial((2, 1, 0)), (1, 2), "pi")
        expected = XPoly(3, {(2, 1, 0): 1, (2, 0, 1): 1, (1, 2, 0): 1, (1, 1, 1): 1, (0, 2, 1): 1})
        expected_pi2 = XPoly(3, {(2, 1, 0): 1, (2, 0, 1): 1})
        return f == expected and apply_word(XPoly.monomial((2, 1, 0)), (2,), "pi") == expected_pi2

    def key_example() -> bool:
        return key_of_composition((1, 0, 3, 2, 0, 1)) == ((1, 3, 3), (3, 4), (4,), (6,))

    def right_key_example() -> bool:
        return right_key(((1, 2), (2, 4), (3,), (5,))) == ((1, 2), (2, 4), (4,), (5,))

    def psi_example() -> bool:
        return psi(FIGURE_ARRAY) == FIGURE_CT and psi_inverse(FIGURE_CT, 7).rows == FIGURE_ARRAY

    def theta_example() -> bool:
        return theta(FIGURE_CT) == FIGURE_YT and theta_inverse(FIGURE_YT) == FIGURE_CT

    def arm_leg_example() -> bool:
        st = box_stats((3, 1, 2, 4, 3, 0, 4, 2, 3), (5, 2))
        return st.l == 1 and st.a == 3

    def rsk_example() -> bool:
        P, _ = rsk((4, 4, 4, 3, 3, 2, 1), (2, 4, 4, 3, 3, 2, 1))
        return P == LR_T

    return [
        ("RCT insertion of 4", insertion_example),
        ("U and S validate", u_and_s),
        ("rho on the LR figure", lr_figure),
        ("pi_1 pi_2 on x1^2 x2", pi_example),
        ("key of (1,0,3,2,0,1)", key_example),
        ("right key", right_key_example),
        ("psi on the array figure", psi_example),
        ("theta example", theta_example),
        ("arm and leg", arm_leg_example),
        ("RSK example", rsk_example),
    ]


def suite_goldens(max_size: int = 4, n: int = 4, jobs: int = 1) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        for label, check in golden_checks():
            try:
                passed = bool(check())
            except Exception as exc:  # a crash is a failed golden, reported by name
                passed = False
                label = f"{label} ({type(exc).__name__}: {exc})"
            res.record(passed, label)

    return _timed("goldens", body)


# ---------------------------------------------------------------------------
# LR rule
# ---------------------------------------------------------------------------


def _lr_pair(pair: tuple[tuple[int, ...], tuple[int, ...]]) -> tuple[str, bool]:
    alpha, lam = pair
    d = sum(alpha) + sum(lam)
    terms = expand_product(alpha, lam, d, check=False).terms
    return f"alpha={alpha} lam={lam}", expansion_matches_product(alpha, lam, terms, d)


def suite_lrrule(max_alpha: int = 4, max_lam: int = 3, jobs: int = 1) -> SuiteResult:
    """``sum_beta C * RS_beta == RS_alpha * s_lam`` in ``|alpha| + |lam|`` variables."""
    pairs = [(a, l) for a in strong_compositions_upto(max_alpha) for l in partitions_upto(max_lam)]

    def body(res: SuiteResult) -> None:
        for label, passed in _map(_lr_pair, pairs, jobs):
            res.record(passed, label)

    return _timed("lrrule", body)


# ---------------------------------------------------------------------------
# insertion lemmas
# ---------------------------------------------------------------------------


def _track(boxes: list[tuple[int, int]], new: tuple[int, int]) -> list[tuple[int, int]]:
    """Shift earlier boxes down when ``new`` opens a row above them."""
    i, j = new
    if j != 1:
        return boxes + [new]
    return [(r + 1 if r >= i else r, c) for r, c in boxes] + [new]


def insertion_lemma_failures(U: Rows, n: int) -> list[str]:
    """All insertion properties for one tableau and every letter ``<= n``."""
    bad: list[str] = []
    singles = {}
    for b in range(1, n + 1):
        res = rct_insert(U, b)
        singles[b] = res
        V = res.tableau
        tag = f"U={U} b={b}"
        if check_rct(V) is not None:
            bad.append(f"invalid result {tag}")
        rows_hit = [r for r, _ in res.path]
        if len(rows_hit) != len(set(rows_hit)) or res.new_box not in res.path:
            bad.append(f"rows lemma {tag}")
        r = res.augmented_row
        if any(len(V[k - 1]) == len(V[r - 1]) for k in range(r + 1, len(V) + 1)):
            bad.append(f"lastrow lemma {tag}")
        if rct_uninsert(V, r) != (U, b):
            bad.append(f"un-insertion {tag}")
    for b in range(1, n + 1):
        first = singles[b]
        for c in range(1, n + 1):
            second = rct_insert(first.tableau, c)
            cb, cc = first.new_box[1], second.new_box[1]
            if b <= c and cc > cb:
                bad.append(f"bumping (c weakly left) U={U} b={b} c={c}")
            if c < b and cc <= cb:
                bad.append(f"bumping (a strictly right) U={U} b={b} a={c}")
    for word in combinations_with_replacement(range(1, n + 1), 3):
        V, boxes = U, []
        for letter in word:
            res = rct_insert(V, letter)
            V = res.tableau
            boxes = _track(boxes, res.new_box)
        if not all(reading_order_less(boxes[k + 1], boxes[k]) for k in range(len(boxes) - 1)):
            bad.append(f"readingorder U={U} word={word}")
    return bad


def _insert_word(U: Rows, word: Iterable[int]) -> Rows:
    for b in word:
        U = rct_insert(U, b).tableau
    return U


def knuth_lemma_failures(U: Rows, n: int) -> list[str]:
    """``U <- w == U <- w'`` for every K1-equivalent pair of three-letter words."""
    bad = []
    for w in ((a, b, c) for a in range(1, n + 1) for b in range(1, n + 1) for c in range(1, n + 1)):
        target = _insert_word(U, w)
        for w2 in knuth_class(w, "K1"):
            if w2 != w and _insert_word(U, w2) != target:
                bad.append(f"knuth U={U} w={w} w'={w2}")
    return bad


def _insertion_shape(args: tuple[tuple[int, ...], int]) -> tuple[int, list[str]]:
    alpha, n = args
    count, bad = 0, []
    for U in all_tableaux("rct", alpha, n):
        count += 1
        bad.extend(insertion_lemma_failures(U, n))
        bad.extend(knuth_lemma_failures(U, n))
    return count, bad


def suite_insertion(max_size: int = 5, n: int = 4, jobs: int = 1) -> SuiteResult:
    """Insertion lemmas on every RCT with at most ``max_size`` cells and entries ``<= n``."""
    shapes = [((), n)] + [(a, n) for a in strong_compositions_upto(max_size)]

    def body(res: SuiteResult) -> None:
        for count, bad in _map(_insertion_shape, shapes, jobs):
            res.checked += count
            res.failures.extend(bad)
        res.notes["tableaux"] = res.checked

    return _timed("insertion", body)


# ---------------------------------------------------------------------------
# coinvariant triangularity and super fillings
# ---------------------------------------------------------------------------


def super_filling_is_unique(lam: Sequence[int], alpha: Sequence[int]) -> bool:
    beta = phi_pair(lam, alpha)
    fills = list(lr_fillings(beta, alpha, lam))
    return len(fills) == 1 and fills[0] == super_filling(lam, alpha)


def suite_coinvariant(max_degree: int = 5, max_super: int = 6, jobs: int = 1) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        for d in range(max_degree + 1):
            res.record(coinvariant_basis(d).is_uni_upper_triangular(), f"triangularity d={d}")
        for d in range(max_super + 1):
            for lam, alpha in pb_pairs(d):
                res.record(super_filling_is_unique(lam, alpha), f"super filling lam={lam} alpha={alpha}")

    return _timed("coinvariant", body)


# ---------------------------------------------------------------------------
# atoms
# ---------------------------------------------------------------------------

ATOM_ROUTES: dict[str, Callable[[tuple[int, ...]], XPoly]] = {
    "pibar": demazure_atom,
    "ct": atom_via_ct,
    "keys": atom_via_keys,
    "paths": atom_via_paths,
    "caps": atom_via_caps,
    "macdonald": atom_specialization,
}


def atom_gammas(n: int = 3, max_part: int = 2) -> list[tuple[int, ...]]:
    gammas = set(weak_compositions_bounded(n, max_part))
    for lam in ((2, 1, 0), (2, 2, 0)):
        gammas.update(permutations(lam))
    return sorted(gammas)


def _atom_instance(gamma: tuple[int, ...]) -> tuple[str, list[str]]:
    base = demazure_atom(gamma)
    return str(gamma), [name for name, fn in ATOM_ROUTES.items() if fn(gamma) != base]


def suite_atoms(max_size: int = 2, n: int = 3, jobs: int = 1) -> SuiteResult:
    """Six constructions of the atom agree for every ``gamma`` in ``[0, max_size]^n``."""
    gammas = atom_gammas(n, max_size) if n == 3 else sorted(weak_compositions_bounded(n, max_size))

    def body(res: SuiteResult) -> None:
        for label, disagree in _map(_atom_instance, gammas, jobs):
            res.record(not disagree, f"gamma={label} routes={disagree}")

    return _timed("atoms", body)


# ---------------------------------------------------------------------------
# pattern bijections
# ---------------------------------------------------------------------------


def pattern_failures(U: Rows, n: int) -> list[str]:
    bad = []
    X = psi_inverse(U, n)
    if psi(X) != U:
        bad.append(f"psi round trip U={U}")
    Y = theta(U)
    if theta_inverse(Y) != U:
        bad.append(f"theta round trip U={U}")
    G = gt_from_tableau(Y, n)
    if tableau_from_gt(G) != Y:
        bad.append(f"phi round trip U={U}")
    if Theta_tilde(Theta(X)) != X:
        bad.append(f"Theta_tilde after Theta U={U}")
    if Theta(Theta_tilde(G)) != G:
        bad.append(f"Theta after Theta_tilde U={U}")
    if Theta(X) != G:
        bad.append(f"commuting square U={U}")
    return bad


def _pattern_shape(args: tuple[tuple[int, ...], int]) -> tuple[int, list[str]]:
    alpha, n = args
    count, bad = 0, []
    for U in all_tableaux("ct", alpha, n):
        count += 1
        bad.extend(pattern_failures(U, n))
    return count, bad


def suite_patterns(max_size: int = 5, n: int = 5, jobs: int = 1) -> SuiteResult:
    shapes = [(a, n) for a in strong_compositions_upto(max_size) if len(a) <= n]

    def body(res: SuiteResult) -> None:
        for count, bad in _map(_pattern_shape, shapes, jobs):
            res.checked += count
            res.failures.extend(bad)

    return _timed("patterns", body)


# ---------------------------------------------------------------------------
# Hecke operators and eigenfunctions
# ---------------------------------------------------------------------------


def gammas_upto(n: int, max_size: int) -> list[tuple[int, ...]]:
    return [g for d in range(max_size + 1) for g in weak_compositions(d, n)]


def _hecke_a(gamma: tuple[int, ...]) -> list[str]:
    return [r.label for i in range(1, len(gamma) + 1) if not (r := check_Y_eigen(gamma, i)).ok]


def _hecke_bc(gamma: tuple[int, ...]) -> tuple[int, list[str]]:
    n = len(gamma)
    count, bad = 0, []
    for tau in all_perms(n):
        inv = tau.inverse()
        for i in range(1, n):
            if inv[i - 1] < inv[i]:
                count += 1
                r = check_T_action(gamma, tau, i)
                if not r.ok:
                    bad.append(r.check + " " + r.label)
        count += 1
        r = check_T_tau(gamma, tau)
        if not r.ok:
            bad.append(r.check + " " + r.label)
        for i in range(1, n + 1):
            count += 1
            r = check_Y_tau_eigen(gamma, tau, i)
            if not r.ok:
                bad.append(r.check + " " + r.label)
    return count, bad


def suite_hecke(max_size: int = 3, n: int = 3, jobs: int = 1) -> SuiteResult:
    """Eigen equations, the action of ``T_i`` on basement permutations and operator relations.

    Parts (a)-(c) run over all ``gamma`` with ``n`` parts and size ``<= max_size``;
    part (a) additionally covers two variables up to size ``max_size + 1``.
    Part (d) checks the relations on monomials of degree ``<= max_size``.
    """
    part_a = gammas_upto(n, max_size) + gammas_upto(2, max_size + 1)
    part_bc = gammas_upto(n, max_size)

    def body(res: SuiteResult) -> None:
        for gamma, bad in zip(part_a, _map(_hecke_a, part_a, jobs)):
            res.checked += len(gamma)
            res.failures.extend(f"Y-eigen {b}" for b in bad)
        for count, bad in _map(_hecke_bc, part_bc, jobs):
            res.checked += count
            res.failures.extend(bad)
        for r in operator_relations(n, max_size):
            res.record(r.ok, f"{r.check} {r.label}")

    return _timed("hecke", body)


# ---------------------------------------------------------------------------
# coinversion bookkeeping
# ---------------------------------------------------------------------------


def coinv_pass_rates(max_size: int = 4, n: int = 3) -> dict[str, tuple[int, int]]:
    """Per reading, the number of non-attacking fillings satisfying the coinv identity."""
    totals = {r: [0, 0] for r in COINV_READINGS}
    for m in range(1, n + 1):
        for gamma in gammas_upto(m, max_size):
            for tau in all_perms(m):
                for reading, (good, total) in coinv_report(gamma, tau).items():
                    totals[reading][0] += good
                    totals[reading][1] += total
    return {r: (g, t) for r, (g, t) in totals.items()}


def suite_coinv(max_size: int = 4, n: int = 3, jobs: int = 1) -> SuiteResult:
    """Passes when at least one reading satisfies the identity on every filling."""

    def body(res: SuiteResult) -> None:
        rates = coinv_pass_rates(max_size, n)
        res.notes["pass_rates"] = {r: f"{g}/{t}" for r, (g, t) in rates.items()}
        res.checked = max(t for _, t in rates.values())
        full = [r for r, (g, t) in rates.items() if g == t]
        res.notes["readings_passing_everywhere"] = full
        if not full:
            res.failures.append("no reading passes on every filling")

    return _timed("coinv", body)


# ---------------------------------------------------------------------------

SUITES: dict[str, Callable[..., SuiteResult]] = {
    "goldens": suite_goldens,
    "lrrule": lambda max_size=4, n=4, jobs=1: suite_lrrule(max_size, min(max_size, 3), jobs),
    "insertion": suite_insertion,
    "coinvariant": lambda max_size=4, n=4, jobs=1: suite_coinvariant(max_size, max_size, jobs),
    "atoms": lambda max_size=2, n=3, jobs=1: suite_atoms(min(max_size, 2), n, jobs),
    "patterns": suite_patterns,
    "hecke": lambda max_size=3, n=3, jobs=1: suite_hecke(max_size, n, jobs),
    "coinv": lambda max_size=4, n=3, jobs=1: suite_coinv(max_size, n, jobs),
}


def run_suite(name: str, max_size: int | None = None, n: int | None = None, jobs: int = 1) -> list[SuiteResult]:
    """Run one suite by name, or every suite for ``"all"``.

    Bounds left as ``None`` fall back to each suite's own defaults.
    """
    bounds = {k: v for k, v in (("max_size", max_size), ("n", n)) if v is not None}
    if name == "all":
        return [fn(**bounds, jobs=jobs) for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(name)
    return [SUITES[name](**bounds, jobs=jobs)]


__all__ = [
    "ATOM_ROUTES",
    "SUITES",
    "SuiteResult",
    "atom_gammas",
    "coinv_pass_rates",
    "default_jobs",
    "golden_checks",
    "insertion_lemma_failures",
    "knuth_lemma_failures",
    "pattern_failures",
    "run_suite",
    "suite_atoms",
    "suite_coinv",
    "suite_coinvariant",
    "suite_goldens",
    "suite_hecke",
    "suite_insertion",
    "suite_lrrule",
    "suite_patterns",
    "super_filling_is_unique",
]
