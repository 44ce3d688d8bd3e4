import itertools
import math
import random

import pytest

from steiner.design import (
    Design,
    DesignError,
    automorphism_group,
    coverage_counts,
    derived_design,
    format_design,
    is_automorphism_group,
    params,
    parse_design,
    transitivity_report,
    verify_design,
)
from steiner.perm import Perm, PermGroup

FANO = [tuple(sorted(((i) % 7, (i + 1) % 7, (i + 3) % 7))) for i in range(7)]


def brute_coverage(blocks, t, v):
    return {S: sum(1 for B in blocks if set(S) <= set(B)) for S in itertools.combinations(range(v), t)}


def test_fano():
    D = verify_design(FANO, 2, 7, 3)
    assert D.b == 7
    assert params(D) == (7, 3, 1)
    assert len(D.flags()) == 21


def test_coverage_matches_brute_force():
    rng = random.Random(5)
    blocks = [tuple(sorted(rng.sample(range(9), 4))) for _ in range(12)]
    counts = coverage_counts(sorted(set(blocks)), 3, 9)
    brute = brute_coverage(sorted(set(blocks)), 3, 9)
    assert sorted(counts.tolist()) == sorted(brute.values())
    assert int(counts.sum()) == sum(brute.values())


def test_failure_witness():
    bad = FANO[:-1] + [(0, 1, 2)]
    with pytest.raises(DesignError) as err:
        verify_design(bad, 2, 7, 3)
    subset, n = err.value.witness
    assert brute_coverage(bad, 2, 7)[tuple(subset)] == n != 1
    with pytest.raises(DesignError):
        verify_design(FANO + [FANO[0]], 2, 7, 3)
    with pytest.raises(DesignError):
        verify_design([(0, 1, 7)], 2, 7, 3)
    with pytest.raises(DesignError):
        verify_design([(0, 1)], 2, 7, 3)


def test_automorphisms_of_fano():
    D = verify_design(FANO, 2, 7, 3)
    G = automorphism_group(D)
    assert G.order() == 168
    assert is_automorphism_group(D, G)
    rep = transitivity_report(D, G)
    assert rep.flag_transitive and rep.block_transitive
    assert rep.point_trans_degree == 2
    cyc = PermGroup([Perm([(x + 1) % 7 for x in range(7)])], 7)
    rep = transitivity_report(D, cyc)
    assert rep.block_transitive and not rep.flag_transitive
    assert rep.flag_orbit_count == 3


def test_not_automorphism():
    D = verify_design(FANO, 2, 7, 3)
    G = PermGroup([Perm.from_cycles(7, (0, 1))], 7)
    assert not is_automorphism_group(D, G)
    with pytest.raises(DesignError):
        transitivity_report(D, G)


def test_automorphism_group_of_complete_design():
    blocks = list(itertools.combinations(range(6), 3))
    D = verify_design(blocks, 3, 6, 3)
    assert automorphism_group(D).order() == math.factorial(6)


def test_derived_and_roundtrip():
    # 3-(8,4,1): the planes of AG(3,2)
    blocks = [B for B in itertools.combinations(range(8), 4) if B[0] ^ B[1] ^ B[2] == B[3]]
    D = verify_design(blocks, 3, 8, 4)
    assert D.b == 14
    E = derived_design(D, 7)
    assert (E.t, E.v, E.k, E.b) == (2, 7, 3, 7)
    assert parse_design(format_design(D)) == D
    with pytest.raises(DesignError):
        derived_design(D, 8)


def test_parse_errors():
    with pytest.raises(DesignError):
        parse_design("2 7 3 1\n")
    with pytest.raises(DesignError):
        parse_design("2 7 3 1 8\n" + "\n".join(" ".join(map(str, B)) for B in FANO))
    with pytest.raises(DesignError):
        parse_design("2 7 3 1 1\n0 1 a\n")
