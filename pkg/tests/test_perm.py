import itertools
import math
import random

import pytest

from steiner.perm import (
    Perm,
    PermError,
    PermGroup,
    format_group,
    group_order,
    is_t_homogeneous,
    is_t_transitive,
    parse_group,
    setwise_stabilizer,
)


def symmetric(n):
    return PermGroup([Perm.from_cycles(n, (0, 1)), Perm.from_cycles(n, tuple(range(n)))], n)


def random_group(rng, n, ngens):
    gens = []
    for _ in range(ngens):
        images = list(range(n))
        rng.shuffle(images)
        gens.append(Perm(images))
    return PermGroup(gens, n)


def test_right_action():
    g = Perm([1, 2, 0])
    h = Perm([0, 2, 1])
    assert (g * h)(0) == h(g(0))
    assert (g * g.inverse()).is_identity()
    assert g.order() == 3
    assert (g**-1) == g.inverse()


def test_cycles_roundtrip():
    g = Perm.from_cycles(7, (0, 3, 5), (1, 2))
    assert g.cycles() == [(0, 3, 5), (1, 2)]
    assert g.order() == 6
    assert g.fixed_points() == frozenset({4, 6})


def test_bad_perm():
    with pytest.raises(PermError):
        Perm([0, 0, 1])


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_symmetric_order(n):
    assert group_order(symmetric(n)) == math.factorial(n)


def test_chain_order_matches_enumeration():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randrange(3, 9)
        G = random_group(rng, n, rng.randrange(1, 3))
        assert G.order() == len(G.elements())


def test_membership():
    rng = random.Random(3)
    G = PermGroup([Perm.from_cycles(6, (0, 1, 2)), Perm.from_cycles(6, (3, 4))], 6)
    elems = set(G.elements())
    for _ in range(50):
        images = list(range(6))
        rng.shuffle(images)
        g = Perm(images)
        assert (g in G) == (g in elems)


def test_orbit_stabilizer():
    G = symmetric(5)
    for x in range(5):
        assert len(G.orbit(x)) * G.stabilizer(x).order() == 120
    C = PermGroup([Perm.from_cycles(5, (0, 1, 2, 3, 4))], 5)
    assert C.orbits().lengths == [5]


def test_setwise_stabilizer_brute_force():
    rng = random.Random(11)
    for _ in range(10):
        G = random_group(rng, 7, 2)
        elems = G.elements()
        for S in [(0, 1), (0, 2, 5), (1, 3, 4, 6)]:
            expect = sum(1 for g in elems if {g(x) for x in S} == set(S))
            H = setwise_stabilizer(G, S)
            assert H.order() == expect
            assert all({g(x) for x in S} == set(S) for g in H.generators)


def test_transitivity_and_homogeneity():
    G = symmetric(5)
    assert is_t_transitive(G, 5)
    A = PermGroup([Perm.from_cycles(5, (0, 1, 2)), Perm.from_cycles(5, (0, 1, 2, 3, 4))], 5)
    assert A.order() == 60
    assert A.transitivity_degree() == 3
    C = PermGroup([Perm.from_cycles(5, (0, 1, 2, 3, 4))], 5)
    assert not is_t_transitive(C, 2)
    assert is_t_homogeneous(C, 1)
    assert not is_t_homogeneous(C, 2)


def test_subset_orbit_count_brute_force():
    G = PermGroup([Perm.from_cycles(6, (0, 1, 2, 3, 4, 5)), Perm([5, 4, 3, 2, 1, 0])], 6)
    elems = G.elements()
    for t in (2, 3):
        seen, count = set(), 0
        for S in itertools.combinations(range(6), t):
            if S not in seen:
                count += 1
                seen |= {tuple(sorted(g(x) for x in S)) for g in elems}
        assert G.subset_orbit_count(t) == count


def test_group_text_format():
    G = symmetric(5)
    H = parse_group(format_group(G))
    assert H.order() == 120 and H.degree == 5
    with pytest.raises(PermError):
        parse_group("deg 3\n0 1 2\n")
    with pytest.raises(PermError):
        parse_group("degree 3\n0 1 2 3\n")
    with pytest.raises(PermError):
        parse_group("degree 3\n0 1 x\n")
