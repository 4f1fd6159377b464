from collections import Counter
from itertools import product

import pytest

from qschur.combinat import compositions, lexrev_compare, partitions, pb_pairs, phi_pair, reverse, transpose
from qschur.lrrule import (
    candidate_shapes,
    coinvariant_basis,
    count_by_content,
    expand_product,
    expansion_matches_product,
    inner_placements,
    leading_term,
    lr_coefficient,
    lr_fillings,
    rho,
    rho_inverse,
    super_filling,
)
from qschur.tableaux import SkewFilling, all_tableaux, check_lr_skew

U = ((1,), (4, 3, 2), (5, 4), (5, 3))
T = ((4, 3, 2, 1), (4, 3), (2,))
V = ((1,), (3, 2), (4, 3, 2), (4,), (5, 4, 3, 2, 1), (5, 4, 3))


def _brute_fillings(beta, alpha, lam):
    """Every filling of every placement, kept when it validates and has content reverse(lam)."""
    top = len(lam)
    out = set()
    for gamma in inner_placements(alpha, beta):
        free = [(i, j) for i, b in enumerate(beta) for j in range(gamma[i], b)]
        for values in product(range(1, top + 1), repeat=len(free)):
            rows = [[None] * b for b in beta]
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            S = SkewFilling(beta, gamma, tuple(map(tuple, rows)))
            if count_by_content(S) == reverse(lam) and check_lr_skew(S) is None:
                out.add(S)
    return out


def _rho_image(alpha, lam, n):
    return {rho(U, T)[1] for U in all_tableaux("rct", alpha, n) for T in all_tableaux("rrst", transpose(lam), n)}


SMALL_PAIRS = [(a, l) for da in range(1, 4) for a in compositions(da) for dl in range(1, 3) for l in partitions(dl)]


# ---------------------------------------------------------------------------
# the worked example
# ---------------------------------------------------------------------------


def test_rho_on_the_worked_example():
    V_out, S = rho(U, T)
    assert V_out == V
    assert S.outer == (1, 2, 3, 1, 5, 3)
    assert S.inner == (1, 0, 3, 0, 2, 2)
    assert S.word() == (4, 4, 3, 3, 4, 2, 1)
    assert check_lr_skew(S) is None
    assert rho_inverse(V_out, S) == (U, T)


def test_example_coefficient_is_positive():
    assert lr_coefficient((1, 3, 2, 2), (3, 2, 1, 1), (1, 2, 3, 1, 5, 3)) >= 1


def test_rho_with_empty_partition():
    V_out, S = rho(U, ())
    assert V_out == U
    assert S.word() == ()
    assert rho_inverse(V_out, S) == (U, ())


# ---------------------------------------------------------------------------
# coefficients
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("alpha", [(1,), (2, 1), (1, 3)])
def test_empty_partition_gives_identity(alpha):
    for beta in compositions(sum(alpha)):
        assert lr_coefficient(alpha, (), beta) == (1 if beta == alpha else 0)


def test_coefficient_requires_matching_size():
    with pytest.raises(ValueError):
        lr_coefficient((1,), (1,), (1,))


@pytest.mark.parametrize("alpha, lam", SMALL_PAIRS)
def test_pruned_enumeration_matches_brute_force(alpha, lam):
    for beta in compositions(sum(alpha) + sum(lam)):
        assert set(lr_fillings(beta, alpha, lam)) == _brute_fillings(beta, alpha, lam), beta


def test_candidate_shapes_hold_every_term():
    for alpha, lam in SMALL_PAIRS:
        shapes = set(candidate_shapes(alpha, lam))
        for beta in compositions(sum(alpha) + sum(lam)):
            if beta not in shapes:
                assert lr_coefficient(alpha, lam, beta) == 0


def test_product_in_six_variables():
    exp = expand_product((1, 2), (2, 1), 6)
    assert expansion_matches_product(exp.alpha, exp.lam, exp.terms, 6)


def test_single_boxes():
    exp = expand_product((1,), (1,), 2)
    assert exp.terms == {(2,): 1, (1, 1): 1}


def test_too_few_variables_raise():
    with pytest.raises(ValueError):
        expand_product((1, 2), (1,), 3)


@pytest.mark.parametrize("alpha", [a for d in range(1, 4) for a in compositions(d)])
@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)])
def test_expansion_equals_product(alpha, lam):
    exp = expand_product(alpha, lam, check=False)
    assert all(c > 0 for c in exp.terms.values())
    assert expansion_matches_product(exp.alpha, exp.lam, exp.terms, sum(alpha) + sum(lam))


def test_expansion_json_is_ordered_by_lexrev():
    data = expand_product((1,), (2, 1), check=False).to_json()
    betas = [tuple(t["beta"]) for t in data["terms"]]
    assert all(lexrev_compare(a, b) > 0 for a, b in zip(betas, betas[1:]))
    assert data["alpha"] == [1] and data["lambda"] == [2, 1]


# ---------------------------------------------------------------------------
# the bijection
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("alpha", [a for d in range(1, 4) for a in compositions(d)])
@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1)])
def test_rho_round_trips_and_lands_in_valid_fillings(alpha, lam):
    n = 4
    for U_ in all_tableaux("rct", alpha, n):
        for T_ in all_tableaux("rrst", transpose(lam), n):
            V_, S = rho(U_, T_)
            assert check_lr_skew(S) is None
            assert S.alpha == alpha
            assert count_by_content(S) == reverse(lam)
            assert rho_inverse(V_, S) == (U_, T_)


@pytest.mark.parametrize("alpha, lam", [((1,), (2, 2)), ((1,), (3, 2)), ((2,), (2, 2)), ((1, 1), (2, 2))])
def test_fillings_reached_by_rho_give_the_product(alpha, lam):
    d = sum(alpha) + sum(lam)
    image = _rho_image(alpha, lam, d)
    terms = Counter(S.outer for S in image)
    assert expansion_matches_product(alpha, lam, dict(terms), d)
    # every filling reached by rho is one of the enumerated fillings
    assert all(S in set(lr_fillings(S.outer, alpha, lam)) for S in image)


def test_two_by_two_admits_a_filling_rho_never_reaches():
    # The validity rules accept this filling of (1,1,1,2)/(1,0,0,0), but no pair (U, T)
    # maps to it, so the enumerated count exceeds the coefficient in the product.
    extra = SkewFilling((1, 1, 1, 2), (1, 0, 0, 0), ((None,), (2,), (1,), (2, 1)))
    assert check_lr_skew(extra) is None
    assert extra not in _rho_image((1,), (2, 2), 5)
    exp = expand_product((1,), (2, 2), check=False)
    assert not expansion_matches_product(exp.alpha, exp.lam, exp.terms, 5)


def test_rho_inverse_rejects_foreign_fillings():
    extra = SkewFilling((1, 1, 1, 2), (1, 0, 0, 0), ((None,), (2,), (1,), (2, 1)))
    with pytest.raises(ValueError):
        rho_inverse(((1,), (2,), (3,), (5, 4)), extra)


# ---------------------------------------------------------------------------
# super fillings and the coinvariant basis
# ---------------------------------------------------------------------------


def test_super_filling_example():
    lam, alpha = (3, 3, 2, 2, 2, 1, 1), (1, 3, 1, 2, 3, 1, 2)
    S = super_filling(lam, alpha)
    assert S.inner == alpha
    assert S.outer == phi_pair(lam, alpha) == (1, 8, 1, 2, 10, 1, 4)
    appended = [tuple(v for v in r if v is not None) for r in S.rows]
    assert appended[4] == (7, 6, 5, 4, 3, 2, 1)
    assert appended[1] == (7, 6, 5, 4, 3)
    assert appended[6] == (7, 6)
    assert count_by_content(S) == reverse(lam)
    assert check_lr_skew(S) is None


def test_super_filling_of_empty_partition():
    S = super_filling((), (2, 1))
    assert S.rows == ((None, None), (None,))
    assert list(lr_fillings((2, 1), (2, 1), ())) == [S]


@pytest.mark.parametrize("d", range(0, 7))
def test_super_filling_is_the_only_filling_of_its_shape(d):
    for lam, alpha in pb_pairs(d):
        S = super_filling(lam, alpha)
        assert list(lr_fillings(phi_pair(lam, alpha), alpha, lam)) == [S]


def test_degree_zero_basis():
    B = coinvariant_basis(0)
    assert B.matrix == ((1,),)
    assert B.columns == ((),)


def test_degree_one_basis():
    B = coinvariant_basis(1)
    assert B.pairs == (((1,), ()),)
    assert B.matrix == ((1,),)


@pytest.mark.parametrize("d", range(0, 6))
def test_transition_matrix_is_uni_upper_triangular(d):
    B = coinvariant_basis(d)
    assert len(B.pairs) == len(B.columns) == max(1, 2 ** (d - 1))
    assert B.is_uni_upper_triangular()


def test_leading_terms_in_degree_four():
    for lam, alpha in pb_pairs(4):
        assert leading_term(alpha, lam) == phi_pair(lam, alpha)


def test_basis_json():
    data = coinvariant_basis(2).to_json()
    assert data["d"] == 2
    assert len(data["matrix"]) == len(data["columns"]) == 2
