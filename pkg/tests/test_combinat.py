from itertools import permutations as orderings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qschur.combinat import (
    compositions,
    content,
    dominates,
    foundation,
    is_inverting,
    is_partition,
    is_pure,
    is_regular_reverse_lattice,
    lexrev_compare,
    lexrev_sorted,
    parse_composition,
    partitions,
    pb_pairs,
    phi_pair,
    pure_tail_value,
    reverse,
    reverse_contained_in,
    shape_ops,
    sort_to_partition,
    strip_zeros,
    transpose,
    weak_compositions,
)

weak = st.lists(st.integers(0, 4), max_size=7).map(tuple)


def test_shape_ops_of_a_weak_composition():
    ops = shape_ops((1, 0, 2, 3, 0, 2))
    assert ops["strip_zeros"] == (1, 2, 3, 2)
    assert ops["sort_to_partition"] == (3, 2, 2, 1)
    assert ops["foundation"] == {1, 3, 4, 6}
    assert "transpose" not in ops


def test_transpose_and_reverse_of_a_partition():
    assert transpose((3, 2, 2, 1)) == (4, 3, 1)
    assert reverse((3, 2, 2, 1)) == (1, 2, 2, 3)


def test_all_zero_composition_strips_to_empty():
    assert strip_zeros((0, 0)) == ()
    assert foundation((0, 0)) == frozenset()


def test_transpose_rejects_non_partitions():
    with pytest.raises(ValueError):
        transpose((1, 2))


@given(weak)
def test_strip_and_sort_commute(gamma):
    assert strip_zeros(sort_to_partition(gamma)) == sort_to_partition(strip_zeros(gamma))


@pytest.mark.parametrize("d", range(1, 8))
def test_transpose_is_an_involution(d):
    for lam in partitions(d):
        assert transpose(transpose(lam)) == lam


@pytest.mark.parametrize(
    "text, expected",
    [("1,0,3,2", (1, 0, 3, 2)), ("", ()), (" 4 ", (4,))],
)
def test_parse_composition(text, expected):
    assert parse_composition(text) == expected


@pytest.mark.parametrize("text", ["1,,2", "a", "1,-1"])
def test_parse_composition_rejects_garbage(text):
    with pytest.raises(ValueError):
        parse_composition(text)


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "word, expected",
    [((4, 4, 3, 3, 4, 2, 1), True), ((1,), True), ((1, 2), False), ((), False), ((2,), False)],
)
def test_regular_reverse_lattice(word, expected):
    assert is_regular_reverse_lattice(word) is expected


def test_content_of_lattice_example():
    assert content((4, 4, 3, 3, 4, 2, 1)) == (1, 1, 2, 3)
    assert content((4, 4, 3, 3, 4, 2, 1), 5) == (1, 1, 2, 3, 0)


@given(st.lists(st.integers(1, 4), max_size=8))
def test_lattice_matches_prefix_counts(word):
    def brute(w):
        if 1 not in w:
            return False
        for k in range(1, len(w) + 1):
            c = content(w[:k], max(w))
            if any(c[i - 2] > c[i - 1] for i in range(2, max(w) + 1)):
                return False
        return True

    assert is_regular_reverse_lattice(word) == brute(word)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("d", range(0, 8))
def test_composition_counts(d):
    comps = list(compositions(d))
    assert len(comps) == (2 ** (d - 1) if d else 1)
    assert len(set(comps)) == len(comps)


def test_partition_counts():
    assert [len(list(partitions(d))) for d in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_weak_compositions_count():
    # stars and bars: C(d + n - 1, n - 1)
    assert len(list(weak_compositions(3, 3))) == 10


# ---------------------------------------------------------------------------
# orders
# ---------------------------------------------------------------------------


def test_lexrev_chain_for_four():
    chain = [(4,), (1, 3), (3, 1), (2, 2), (1, 1, 2), (1, 2, 1), (2, 1, 1), (1, 1, 1, 1)]
    assert lexrev_sorted(compositions(4)) == chain


def test_lexrev_rejects_unequal_sizes():
    with pytest.raises(ValueError):
        lexrev_compare((1,), (2,))


@pytest.mark.parametrize("d", range(1, 8))
def test_lexrev_is_a_total_order(d):
    comps = list(compositions(d))
    for a in comps:
        assert lexrev_compare(a, a) == 0
        for b in comps:
            if a != b:
                assert lexrev_compare(a, b) == -lexrev_compare(b, a) != 0
    for a, b, c in orderings(comps[:12], 3):
        if lexrev_compare(a, b) > 0 and lexrev_compare(b, c) > 0:
            assert lexrev_compare(a, c) > 0


def test_dominance():
    assert dominates((2, 1, 0), (1, 1, 1))
    assert not dominates((1, 1, 1), (2, 1, 0))


def test_reverse_containment_aligns_from_the_right():
    assert reverse_contained_in((1, 2), (3, 1, 3))
    assert not reverse_contained_in((2, 1), (3, 1, 3))
    assert not reverse_contained_in((1, 1, 1, 1), (3, 3))


# ---------------------------------------------------------------------------
# pure and inverting compositions
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "alpha, expected",
    [((1, 3, 1, 2, 3, 1, 2), True), ((1, 2, 1, 2, 3, 1, 3), False), ((), True), ((1,), True), ((2,), False)],
)
def test_inverting(alpha, expected):
    assert is_inverting(alpha) is expected


@pytest.mark.parametrize(
    "alpha, k",
    [((5, 4, 3, 5, 2, 1, 1), 2), ((5, 4, 3, 5, 1), 1), ((1, 3), 0), ((), 0), ((2, 1), 2), ((1, 2, 1), 0)],
)
def test_pure_tail_value(alpha, k):
    assert pure_tail_value(alpha) == k
    assert is_pure(alpha) == (k % 2 == 0)


def _brute_tail(alpha):
    """Largest k with alpha = (prefix, k^{i_k}, ..., 1^{i_1}), all i_j >= 1 and no prefix part <= k."""
    best = 0
    for cut in range(len(alpha) + 1):
        prefix, tail = alpha[:cut], alpha[cut:]
        k = max(tail, default=0)
        if list(tail) != sorted(tail, reverse=True) or set(tail) != set(range(1, k + 1)):
            continue
        if any(p <= k for p in prefix):
            continue
        best = max(best, k)
    return best


@pytest.mark.parametrize("d", range(1, 9))
def test_pure_tail_matches_factorization_search(d):
    for alpha in compositions(d):
        assert pure_tail_value(alpha) == _brute_tail(alpha)


def test_phi_example():
    assert phi_pair((3, 3, 2, 2, 2, 1, 1), (1, 3, 1, 2, 3, 1, 2)) == (1, 8, 1, 2, 10, 1, 4)


def test_phi_of_empty_partition_is_identity():
    assert phi_pair((), (2, 1, 3)) == (2, 1, 3)


def test_phi_pads_short_compositions():
    assert phi_pair((1, 1, 1), ()) == (3,)
    assert phi_pair((2,), (2,)) == (3, 1)


@pytest.mark.parametrize("d", range(0, 8))
def test_phi_is_a_bijection_onto_compositions(d):
    images = [phi_pair(lam, alpha) for lam, alpha in pb_pairs(d)]
    assert len(set(images)) == len(images)
    assert set(images) == set(compositions(d))


def test_pb_pairs_use_partitions_and_pure_inverting_parts():
    for lam, alpha in pb_pairs(5):
        assert lam == () or is_partition(lam)
        assert is_pure(alpha) and is_inverting(alpha)
