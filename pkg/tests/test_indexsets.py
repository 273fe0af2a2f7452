from itertools import combinations

import pytest

from tancone.indexsets import (
    admissible_pair_by_ends,
    admissible_pairs,
    bruhat_leq,
    enumerate_indices,
    format_index,
    is_isotropic,
    join_meet,
    pair_leq,
    parse_index,
    sharp,
    star,
    star_set,
)


@pytest.mark.parametrize(
    "d, j, expected",
    [(2, 1, 4), (2, 2, 3), (3, 6, 1), (1, 1, 2), (1, 2, 1)],
)
def test_star(d, j, expected):
    assert star(j, d) == expected
    assert star(star(j, d), d) == j


def test_star_range_check():
    with pytest.raises(ValueError):
        star(0, 2)
    with pytest.raises(ValueError):
        star(5, 2)


def brute_isotropic(d):
    """Independent oracle: filter raw subsets by v and v* disjoint."""
    out = []
    for v in combinations(range(1, 2 * d + 1), d):
        mirror = {2 * d + 1 - j for j in v}
        if not set(v) & mirror:
            out.append(v)
    return out


def test_enumerate_d1():
    assert enumerate_indices(1) == ((1,), (2,))


def test_enumerate_d2_matches_brute_force():
    assert enumerate_indices(2) == ((1, 2), (1, 3), (2, 4), (3, 4))
    assert list(enumerate_indices(2)) == brute_isotropic(2)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_enumeration_sizes(d):
    assert len(enumerate_indices(d, ambient_only=True)) == len(
        list(combinations(range(2 * d), d))
    )
    assert len(enumerate_indices(d)) == 2**d
    assert list(enumerate_indices(d)) == brute_isotropic(d)


def test_ambient_count_d2():
    assert len(enumerate_indices(2, ambient_only=True)) == 6


@pytest.mark.parametrize(
    "v, w, expected",
    [((1, 3), (2, 4), True), ((1, 4), (2, 3), False), ((1, 3), (1, 3), True)],
)
def test_bruhat_examples(v, w, expected):
    assert bruhat_leq(v, w) is expected


@pytest.mark.parametrize("d", [1, 2, 3])
def test_bruhat_is_partial_order(d):
    elems = enumerate_indices(d, ambient_only=True)
    for v in elems:
        assert bruhat_leq(v, v)
        for w in elems:
            if bruhat_leq(v, w) and bruhat_leq(w, v):
                assert v == w
            for u in elems:
                if bruhat_leq(v, w) and bruhat_leq(w, u):
                    assert bruhat_leq(v, u)


def test_bruhat_size_mismatch():
    with pytest.raises(ValueError):
        bruhat_leq((1,), (1, 2))


@pytest.mark.parametrize(
    "d, theta, expected",
    [(2, (1, 4), (2, 3)), (2, (1, 2), (1, 2))],
)
def test_sharp_examples(d, theta, expected):
    assert sharp(theta, d) == expected


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_sharp_involution_and_fixed_set(d):
    fixed = set()
    for theta in enumerate_indices(d, ambient_only=True):
        assert sharp(sharp(theta, d), d) == theta
        if sharp(theta, d) == theta:
            fixed.add(theta)
    assert fixed == set(enumerate_indices(d))


def test_join_meet_examples():
    assert join_meet((1, 4), (2, 3)) == ((2, 4), (1, 3))
    v = (1, 3)
    assert join_meet(v, v) == (v, v)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_orbit_join_meet_isotropic(d):
    for theta in enumerate_indices(d, ambient_only=True):
        join, meet = join_meet(theta, sharp(theta, d))
        assert is_isotropic(join, d)
        assert is_isotropic(meet, d)
        assert bruhat_leq(meet, join)


def test_admissible_pairs_d1():
    pairs = admissible_pairs(1)
    assert [(p.top, p.bot) for p in pairs] == [((1,), (1,)), ((2,), (2,))]


def test_admissible_pairs_d2():
    pairs = admissible_pairs(2)
    assert len(pairs) == 5
    nondiag = [p for p in pairs if p.top != p.bot]
    assert len(nondiag) == 1
    assert nondiag[0].top == (2, 4)
    assert nondiag[0].bot == (1, 3)
    assert set(nondiag[0].orbit) == {(1, 4), (2, 3)}


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_admissible_pairs_properties(d):
    pairs = admissible_pairs(d)
    for p in pairs:
        assert bruhat_leq(p.bot, p.top)
        assert is_isotropic(p.top, d) and is_isotropic(p.bot, d)
    # ends determine the pair
    assert len({(p.top, p.bot) for p in pairs}) == len(pairs)


def test_admissible_pairs_d4_deduplicates_shared_ends():
    # two sharp-orbits share (join, meet) = ((2,4,6,8), (1,3,5,7)); the
    # pair set keeps one of them, giving 42 pairs rather than 43 orbits
    pairs = admissible_pairs(4)
    assert len(pairs) == 42
    dup = admissible_pair_by_ends(4)[((2, 4, 6, 8), (1, 3, 5, 7))]
    assert dup.rep == (1, 3, 6, 8)


@pytest.mark.parametrize("d", [2, 3])
def test_beta_degree_same_for_both_representatives(d):
    for beta in enumerate_indices(d):
        for p in admissible_pairs(d):
            theta, mate = p.orbit
            assert len(set(theta) - set(beta)) == len(set(mate) - set(beta))
            deg2 = len(set(p.top) - set(beta)) + len(set(p.bot) - set(beta))
            assert deg2 == 2 * p.beta_degree(beta)


def test_pair_order_via_top_bot():
    by_ends = admissible_pair_by_ends(2)
    a = by_ends[((1, 2), (1, 2))]
    b = by_ends[((2, 4), (1, 3))]
    assert pair_leq(a, b)
    assert not pair_leq(b, a)
    assert pair_leq(a, a)  # diagonal pairs may repeat in a chain
    assert not pair_leq(b, b)


def test_parse_and_format():
    assert parse_index("1,3", 2) == (1, 3)
    assert format_index((1, 3)) == "1,3"
    with pytest.raises(ValueError):
        parse_index("3,1", 2)
    with pytest.raises(ValueError):
        parse_index("1,5", 2)
    with pytest.raises(ValueError):
        parse_index("1", 2)


def test_star_set_sorted():
    assert star_set((1, 3), 2) == (2, 4)
