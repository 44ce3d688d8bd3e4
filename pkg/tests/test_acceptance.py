"""Acceptance criteria.  Each test prints one ``CRITERION n: PASS|FAIL`` line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""

import math
import time
from itertools import combinations

from steiner.admiss import CAMERON_LIST, alltop_filter, cameron_equality_scan, eq0_scan
from steiner.census import EXPECTED_SURVIVORS, run_census, survivors
from steiner.construct import (
    ag_plane_design,
    mathieu_group,
    netto_extension_design,
    spherical_design,
    witt_design,
    witt_design_via_psl,
)
from steiner.design import automorphism_group, derived_design, params, transitivity_report
from steiner.pgl import GroupDescriptor, admitted_kinds, make_group, observed_orbit_census
from steiner.gf import prime_power


def report(n, checks):
    """Print the verdict line, then fail with the names of the failed checks."""
    failed = [name for name, ok in checks if not ok]
    print(f"CRITERION {n}: {'PASS' if not failed else 'FAIL'}" + (f" ({', '.join(failed)})" if failed else ""))
    assert not failed, failed


def brute_cover(blocks, t, v):
    """Count blocks through every t-subset directly, without the design module."""
    counts = {}
    for B in blocks:
        for S in combinations(B, t):
            counts[S] = counts.get(S, 0) + 1
    return counts, math.comb(v, t)


def test_criterion_1_witt_24():
    start = time.time()
    D, cert = witt_design_via_psl(23)
    G = make_group(GroupDescriptor("PSL2", 23))
    counts, total = brute_cover(D.blocks, 5, 24)
    stab = G.setwise_stabilizer(cert.base_block).order()
    rep = transitivity_report(D, G, homog_bound=0)
    report(1, [
        ("b = 759", D.b == 759),
        ("every 5-subset once", len(counts) == total == 42504 and set(counts.values()) == {1}),
        ("stabilizer 8", stab == 8 == cert.stabilizer_order),
        ("flag-transitive", rep.flag_transitive),
        ("sharp", G.order() == 6072 == D.b * 8),
        ("runtime", time.time() - start < 120),
    ])


def test_criterion_2_witt_12():
    start = time.time()
    D, cert = witt_design_via_psl(11)
    A = automorphism_group(D)
    rep = transitivity_report(D, A, homog_bound=0)
    report(2, [
        ("b = 132", D.b == 132),
        ("stabilizer 5", cert.stabilizer_order == 5),
        ("|Aut| = 95040", A.order() == 95040),
        ("5-transitive", A.is_t_transitive(5)),
        ("flag-transitive", rep.flag_transitive),
        ("runtime", time.time() - start < 60),
    ])


def test_criterion_3_orbit_census():
    start = time.time()
    bad = []
    rows = 0
    for q in range(4, 82):
        if prime_power(q) is None:
            continue
        for kind in admitted_kinds(q):
            row = observed_orbit_census(q, kind)
            rows += 1
            if not row.match:
                bad.append((q, str(kind)))
    report(3, [
        (f"{len(bad)} mismatches {bad[:5]}", not bad),
        ("rows checked", rows > 0),
        ("runtime", time.time() - start < 300),
    ])


def test_criterion_4_t5_census():
    start = time.time()
    reports = run_census(5, 2048, 10)
    by_id = {r.case_id: r for r in reports}
    found = sorted(survivors(reports))
    designs = {cid: by_id[cid].certificate["design"] for cid in found}
    report(4, [
        (f"survivors {found}", found == sorted(EXPECTED_SURVIVORS[5])),
        ("PSL(2,23) on 5-(24,8,1)", designs.get("as_PSL2(23)") == [5, 24, 8, 1, 759]),
        ("M12 on 5-(12,6,1)", designs.get("as_Mathieu(12)") == [5, 12, 6, 1, 132]),
        ("M24 on 5-(24,8,1)", designs.get("as_Mathieu(24)") == [5, 24, 8, 1, 759]),
        ("no unresolved cases", all(r.verdict != "unresolved" for r in reports)),
        ("PSL(2,q) equation survivor (23,8,1)", eq0_scan(2048) == [(23, 8, 1)]),
        ("runtime", time.time() - start < 600),
    ])


def test_criterion_5_t6_census():
    start = time.time()
    reports = run_census(6, 10**5, 10)
    report(5, [
        ("no survivors", survivors(reports) == []),
        ("no unresolved cases", all(r.verdict != "unresolved" for r in reports)),
        ("runtime", time.time() - start < 600),
    ])


def _corpus():
    yield witt_design(24)
    yield witt_design(12)
    yield witt_design(11)
    yield ag_plane_design(3)
    yield ag_plane_design(4)
    yield spherical_design(3, 2)
    yield spherical_design(4, 2)
    yield netto_extension_design(7)
    yield netto_extension_design(19)


def test_criterion_6_identities():
    checks = []
    for D in _corpus():
        b, r, lam2 = params(D)
        tag = f"{D.t}-({D.v},{D.k},{D.lam})"
        checks.append((f"{tag} bk = vr", b * D.k == D.v * r))
        checks.append((f"{tag} C(v,t) = b C(k,t)", math.comb(D.v, D.t) * D.lam == b * math.comb(D.k, D.t)))
        checks.append((f"{tag} r(k-1) = lambda2(v-1)", r * (D.k - 1) == lam2 * (D.v - 1)))
    D = witt_design(24)
    D23 = derived_design(D, 23)
    D22 = derived_design(D23, 22)
    checks.append(("4-(23,7,1) b = 253", (D23.t, D23.v, D23.k, D23.b) == (4, 23, 7, 253)))
    checks.append(("3-(22,6,1) b = 77", (D22.t, D22.v, D22.k, D22.b) == (3, 22, 6, 77)))
    report(6, checks)


def test_criterion_7_cameron():
    found = cameron_equality_scan(6, 50, 2500)
    report(7, [(f"equality cases {found}", found == list(CAMERON_LIST))])


def _groups():
    yield "PSL2(7)", make_group(GroupDescriptor("PSL2", 7))
    yield "PSL2(8)", make_group(GroupDescriptor("PSL2", 8))
    yield "PGL2(9)", make_group(GroupDescriptor("PGL2", 9))
    yield "PGammaL2(8)", make_group(GroupDescriptor("PGammaL2", 8))
    yield "AGammaL1(8)", make_group(GroupDescriptor("AGammaL1", 8))
    yield "ASL(3,2)", make_group(GroupDescriptor("SLd2_affine", d=3))
    yield "M11", mathieu_group(11)
    yield "PSL2(23)", make_group(GroupDescriptor("PSL2", 23))
    yield "M12", mathieu_group(12)
    yield "2^4:A7", make_group(GroupDescriptor("A7_affine"))


def _design_group_pairs():
    yield witt_design(24), make_group(GroupDescriptor("PSL2", 23))
    yield witt_design(24), mathieu_group(24)
    yield witt_design(12), mathieu_group(12)
    yield spherical_design(3, 2), make_group(GroupDescriptor("PGL2", 9))
    yield netto_extension_design(19), make_group(GroupDescriptor("PSL2", 19))
    yield ag_plane_design(4), make_group(GroupDescriptor("SLd2_affine", d=4))
    D = ag_plane_design(3)
    yield D, automorphism_group(D)


def test_criterion_8_properties():
    checks = []
    for name, G in _groups():
        order = G.order()
        if order <= 10**6:
            ok = all(len(G.orbit(x)) * G.stabilizer(x).order() == order for x in range(G.degree))
            checks.append((f"orbit-stabilizer {name}", ok))
        if order <= 10**4:
            checks.append((f"chain vs enumeration {name}", len(G.elements()) == order))
    flag_pairs = 0
    for D, G in _design_group_pairs():
        rep = transitivity_report(D, G, homog_bound=0)
        if rep.flag_transitive:
            flag_pairs += 1
            checks.append((f"flag => 2-transitive on {D!r}", G.is_t_transitive(2)))
            if D.t >= 5:
                checks.append((f"flag => 3-homogeneous on {D!r}", G.is_t_homogeneous(3)))
    checks.append(("flag-transitive pairs found", flag_pairs >= 5))
    d3 = [k for k in (6, 7, 8) if alltop_filter(3, k)]
    dbig = [(d, k) for d in range(4, 21) for k in (6, 7, 8) if alltop_filter(d, k)]
    checks.append(("Alltop: d = 3 only", d3 == [6, 7, 8] and dbig == []))
    report(8, checks)
