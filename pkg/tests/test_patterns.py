import json
from itertools import permutations as orderings
from itertools import product

import pytest

from qschur.combinat import compositions, foundation, partitions, strip_zeros, weak_compositions_bounded
from qschur.demazure import demazure_atom
from qschur.patterns import (
    Theta,
    Theta_tilde,
    TriArray,
    atom_via_caps,
    cap_patterns,
    commuting_square_holds,
    cts_with_foundation,
    gt_from_tableau,
    gt_patterns,
    is_cap,
    is_gt,
    is_reverse_column_strict,
    psi,
    psi_inverse,
    shape_of_ct,
    tableau_from_gt,
    theta,
    theta_inverse,
    validate_cap,
    validate_gt,
)
from qschur.tableaux import all_tableaux, check_ct

ARRAY = (
    (1, 0, 3, 0, 0, 2, 2),
    (0, 3, 0, 0, 2, 2),
    (1, 0, 0, 2, 2),
    (0, 0, 2, 2),
    (0, 1, 2),
    (1, 2),
    (2,),
)
CT = ((1,), (3, 2, 2), (6, 4), (7, 7))
YT = ((7, 7, 2), (6, 4), (3, 2), (1,))

SMALL_CTS = [U for d in range(1, 6) for alpha in compositions(d) for U in all_tableaux("ct", alpha, 5)]


def _triangles(first_row, bound):
    """Every triangular array below a fixed first row with entries in 0..bound."""
    n = len(first_row)
    free = n * (n + 1) // 2 - n
    for values in product(range(bound + 1), repeat=free):
        it = iter(values)
        rows = [tuple(first_row)] + [tuple(next(it) for _ in range(n - i)) for i in range(1, n)]
        yield TriArray(tuple(rows))


# ---------------------------------------------------------------------------
# validation and enumeration
# ---------------------------------------------------------------------------


def test_figure_array_is_a_cap():
    assert is_cap(ARRAY)


@pytest.mark.parametrize("n", [1, 2, 4])
def test_zero_array_is_valid_for_both_kinds(n):
    zeros = tuple((0,) * (n - i) for i in range(n))
    assert is_cap(zeros) and is_gt(zeros)


def test_ragged_array_raises():
    with pytest.raises(ValueError):
        TriArray(((1, 2), (1, 1)))


def test_violations_are_named():
    assert validate_gt(((1, 2), (1,))).violation.rule == "interlacing"
    assert validate_cap(((0, 1), (2,))).violation.rule == "diagonal"
    assert validate_cap(((-1,),)).violation.rule == "nonnegative"


@pytest.mark.parametrize("gamma", [g for n in (1, 2, 3) for g in weak_compositions_bounded(n, 3)] + [
    g for g in weak_compositions_bounded(4, 2)
])
def test_cap_enumeration_equals_filtered_brute_force(gamma):
    expected = {X for X in _triangles(gamma, max(gamma)) if is_cap(X)}
    got = list(cap_patterns(gamma))
    assert len(got) == len(set(got))
    assert set(got) == expected


@pytest.mark.parametrize("top", [(1, 0), (2, 1, 0), (2, 2, 0), (3, 1, 0), (2, 1, 1, 0), (2, 2, 1, 0)])
def test_gt_enumeration_equals_filtered_brute_force(top):
    assert set(gt_patterns(top)) == {X for X in _triangles(top, top[0]) if is_gt(X)}


def test_gt_top_must_decrease():
    with pytest.raises(ValueError):
        list(gt_patterns((0, 1)))


# ---------------------------------------------------------------------------
# psi
# ---------------------------------------------------------------------------


def test_psi_on_the_figure():
    assert psi(ARRAY) == CT
    assert psi_inverse(CT, 7).rows == ARRAY
    assert shape_of_ct(CT, 7) == ARRAY[0]


def test_single_row_pattern():
    assert psi(((3,),)) == ((1, 1, 1),)


def test_psi_rejects_non_patterns():
    with pytest.raises(ValueError):
        psi(((0, 1), (2,)))


def test_psi_inverse_rejects_non_tableaux():
    with pytest.raises(ValueError):
        psi_inverse(((1, 2),))
    with pytest.raises(ValueError):
        psi_inverse(CT, 6)


@pytest.mark.parametrize("gamma", [g for n in (1, 2, 3, 4) for g in weak_compositions_bounded(n, 3) if n < 4 or max(g) <= 2])
def test_psi_round_trip_and_cardinalities(gamma):
    n = len(gamma)
    images = []
    for X in cap_patterns(gamma):
        U = psi(X)
        assert U == () or check_ct(U) is None
        assert tuple(len(r) for r in U) == strip_zeros(gamma)
        assert {r[0] for r in U} == foundation(gamma)
        assert psi_inverse(U, n) == X
        images.append(U)
    assert sorted(images) == sorted(cts_with_foundation(gamma))


@pytest.mark.parametrize("gamma", list(product(range(3), repeat=3)) + [(1, 0, 2, 1), (0, 2, 1, 1), (2, 0, 0, 1)])
def test_cap_weights_give_the_atom(gamma):
    assert atom_via_caps(gamma) == demazure_atom(gamma)


# ---------------------------------------------------------------------------
# theta
# ---------------------------------------------------------------------------


def test_theta_example():
    assert theta(CT) == YT
    assert theta_inverse(YT) == CT


def test_single_column_sorts():
    assert theta(((1,), (2,), (4,))) == ((4,), (2,), (1,))


def test_theta_inverse_rejects_bad_input():
    with pytest.raises(ValueError):
        theta_inverse(((1, 2),))


def test_theta_round_trip_on_small_tableaux():
    for U in SMALL_CTS:
        T = theta(U)
        assert is_reverse_column_strict(T)
        assert theta_inverse(T) == U


# ---------------------------------------------------------------------------
# GT patterns and Theta
# ---------------------------------------------------------------------------


def test_single_box_pattern():
    assert gt_from_tableau(((1,),), 1).rows == ((1,),)
    assert tableau_from_gt(((1,),)) == ((1,),)


def test_gt_round_trip_for_top_210():
    for G in gt_patterns((2, 1, 0)):
        assert gt_from_tableau(tableau_from_gt(G), 3) == G


def test_figure_sorted_rows():
    G = Theta(ARRAY)
    assert G.rows[0] == (3, 2, 2, 1, 0, 0, 0)
    assert is_gt(G)
    assert Theta_tilde(G).rows == ARRAY
    assert tableau_from_gt(G) == YT
    assert gt_from_tableau(YT, 7) == G


@pytest.mark.parametrize("lam", [(2, 1, 0), (3, 2, 0), (2, 2, 1)])
def test_sorted_cap_is_fixed(lam):
    for X in cap_patterns(lam):
        if all(list(r) == sorted(r, reverse=True) for r in X.rows):
            assert Theta(X) == X


def test_commuting_square_on_small_tableaux():
    for U in SMALL_CTS:
        X = psi_inverse(U, 5)
        assert Theta_tilde(Theta(X)) == X
        assert commuting_square_holds(U, 5)
        assert tableau_from_gt(Theta(X)) == theta(U)


@pytest.mark.parametrize("top", [(2, 1, 0), (2, 2, 0, 0), (3, 1, 1, 0), (2, 1, 1, 0)])
def test_Theta_tilde_then_Theta_is_identity(top):
    for G in gt_patterns(top):
        X = Theta_tilde(G)
        assert is_cap(X)
        assert Theta(X) == G


@pytest.mark.parametrize("n", [2, 3, 4])
def test_caps_over_rearrangements_count_gt_patterns(n):
    for d in range(1, 6):
        for lam in partitions(d):
            if len(lam) > n:
                continue
            top = lam + (0,) * (n - len(lam))
            caps = sum(len(list(cap_patterns(g))) for g in set(orderings(top)))
            assert caps == len(list(gt_patterns(top)))


def test_array_json_round_trip():
    X = TriArray(ARRAY)
    assert TriArray.from_json(json.loads(json.dumps(X.to_json()))) == X
    assert X.pretty().splitlines()[0].split() == [str(v) for v in ARRAY[0]]
