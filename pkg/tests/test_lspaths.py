import json
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qschur.combinat import partitions, transpose
from qschur.demazure import demazure_atom, demazure_char, min_coset_reps
from qschur.exact import XPoly
from qschur.lspaths import (
    RationalPath,
    atom_via_paths,
    char_via_paths,
    e_op,
    enumerate_paths,
    f_op,
    h_profile,
    is_ls_path,
    is_rational_path,
    path_weight,
    path_weight_exact,
    paths_starting_at,
)
from qschur.permutations import Perm, all_perms
from qschur.tableaux import gen_function, rrst_count

LAM = (2, 1, 0)
ALL_210 = enumerate_paths(LAM)


def test_straight_path_weight():
    assert path_weight(RationalPath.straight(LAM)) == (2, 1, 0)


def test_straight_path_profile():
    prof = h_profile(RationalPath.straight(LAM), 1)
    assert prof.values[-1] == 1
    assert prof.Q == 0
    assert prof.P == 1


def test_weights_of_single_box_paths():
    weights = Counter(path_weight(p) for p in enumerate_paths((1, 0, 0)))
    assert weights == Counter({(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})


def test_path_needs_matching_cut_count():
    with pytest.raises(ValueError):
        RationalPath(LAM, (Perm.identity(3),), (Fraction(0),))


def test_non_integral_weight_raises():
    path = RationalPath(LAM, (Perm((2, 3, 1)), Perm((1, 3, 2))), (0, Fraction(1, 3), 1))
    assert any(c.denominator == 3 for c in path_weight_exact(path))
    with pytest.raises(ValueError):
        path_weight(path)


@pytest.mark.parametrize("tau", [t for t in all_perms(3)])
def test_single_step_paths_are_ls(tau):
    path = RationalPath((2, 1, 0), (tau,), (0, 1))
    assert is_rational_path(path)
    assert is_ls_path(path)


def test_every_enumerated_path_is_ls():
    assert len(ALL_210) == 8
    assert all(is_rational_path(p) and is_ls_path(p) for p in ALL_210)


def test_perturbed_cut_is_rejected():
    path = next(p for p in ALL_210 if p.r == 2)
    assert path.cuts[1] == Fraction(1, 2)
    perturbed = RationalPath(path.lam, path.chain, (0, Fraction(1, 3), 1))
    assert is_rational_path(perturbed)
    assert not is_ls_path(perturbed)


def test_chain_must_decrease():
    path = RationalPath(LAM, (Perm((1, 3, 2)), Perm((2, 3, 1))), (0, Fraction(1, 2), 1))
    assert not is_rational_path(path)


# ---------------------------------------------------------------------------
# root operators
# ---------------------------------------------------------------------------


def test_f1_on_the_straight_path():
    out = f_op(RationalPath.straight(LAM), 1)
    assert path_weight(out) == (1, 2, 0)


def test_f_is_null_when_P_vanishes():
    straight = RationalPath.straight((1, 1, 0))
    assert h_profile(straight, 1).P == 0
    assert f_op(straight, 1) is None
    assert e_op(straight, 1) is None


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from([(2, 1, 0), (2, 2, 0), (3, 1, 0), (2, 1, 0, 0), (2, 1, 1, 0)]).flatmap(
        lambda lam: st.tuples(st.sampled_from(enumerate_paths(lam)), st.integers(1, len(lam) - 1))
    )
)
def test_e_and_f_are_inverse(args):
    path, i = args
    down = f_op(path, i)
    if down is not None:
        assert e_op(down, i) == path
        w, v = path_weight(path), path_weight(down)
        assert v[i - 1] == w[i - 1] - 1 and v[i] == w[i] + 1
    up = e_op(path, i)
    if up is not None:
        assert f_op(up, i) == path
    assert (down is None) == (h_profile(path, i).P == 0)
    assert (up is None) == (h_profile(path, i).Q == 0)


# ---------------------------------------------------------------------------
# enumeration and polynomials
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4])
def test_path_count_matches_tableau_count(n):
    for d in range(1, 6):
        for lam in partitions(d):
            if len(lam) <= n:
                assert len(enumerate_paths(lam, n)) == rrst_count(transpose(lam), n)


def test_paths_split_by_first_direction():
    lam = (2, 1, 0)
    parts = [paths_starting_at(tau, lam) for tau in min_coset_reps(lam)]
    assert sum(map(len, parts)) == len(ALL_210)
    assert set().union(*map(set, parts)) == set(ALL_210)


def test_atom_of_a_partition():
    assert atom_via_paths((2, 1, 0)) == XPoly.monomial((2, 1, 0))


def test_longest_element_gives_schur():
    w0 = Perm((3, 2, 1))
    assert char_via_paths(w0, LAM) == gen_function("schur", (2, 1), 3)
    assert char_via_paths(w0, LAM) == demazure_char(w0, LAM)


@pytest.mark.parametrize("tau", list(all_perms(3)))
def test_char_via_paths_matches_operators(tau):
    assert char_via_paths(tau, LAM) == demazure_char(tau, LAM)


def test_char_requires_a_coset_representative():
    with pytest.raises(ValueError):
        char_via_paths(Perm((2, 1, 3)), (1, 1, 0))


@pytest.mark.parametrize(
    "gamma",
    [(2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 0, 2), (0, 2, 1), (0, 1, 2), (2, 2, 0), (2, 0, 2), (0, 2, 2)],
)
def test_atom_via_paths_matches_operators(gamma):
    assert atom_via_paths(gamma) == demazure_atom(gamma)


def test_path_json_round_trip():
    for p in ALL_210:
        assert RationalPath.from_json(json.loads(json.dumps(p.to_json()))) == p
