import json
import math

import pytest

from steiner.admiss import k_upper_bound, lambda_i
from steiner.census import (
    EXPECTED_SURVIVORS,
    SCHEMA_VERSION,
    CensusError,
    census_json,
    explain,
    matches_expected,
    pgl23_exclusion,
    run_census,
    survivors,
)


@pytest.fixture(scope="module")
def t5():
    return run_census(5, 64, 6)


@pytest.fixture(scope="module")
def t6():
    return run_census(6, 64, 6)


def by_id(reports):
    return {r.case_id: r for r in reports}


def test_t5_small_caps(t5):
    assert sorted(survivors(t5)) == sorted(EXPECTED_SURVIVORS[5])
    assert matches_expected(t5, 5)


def test_t6_small_caps(t6):
    assert survivors(t6) == []
    assert matches_expected(t6, 6)


def test_monotone_caps(t5):
    wider = run_census(5, 256, 8)
    assert survivors(wider) == survivors(t5)


def test_every_case_once(t5):
    ids = [r.case_id for r in t5]
    assert len(ids) == len(set(ids))
    for prefix in ("affine_AGL1_8", "affine_AGammaL1_8", "affine_AGammaL1_32", "affine_A7_16",
                   "as_Alt(v)", "as_M11_on12", "as_Mathieu(11)", "as_Mathieu(24)", "affine_SLd2(6)"):
        assert prefix in ids


def test_witnesses_recheck(t5, t6):
    # every divprop kill is re-derived from scratch
    for rep in t5 + t6:
        for kill in rep.witness.get("kills", []):
            if isinstance(kill, dict) and kill["filter"] == "divprop":
                t, k = rep.t, kill["k"]
                v = rep.witness["v"]
                r = math.comb(v - 1, t - 1) // math.comb(k - 1, t - 1)
                assert r == kill["r"] and kill["order_Gx"] % r != 0


def test_psl_ranges_cover_k(t6):
    for rep in t6:
        if rep.case_id.startswith("as_PSL2(") and rep.verdict == "eliminated":
            v = rep.witness["v"]
            ks = [k for lo, hi, _ in rep.witness["kills"] for k in range(lo, hi + 1)]
            assert ks == list(range(7, min(k_upper_bound(6, v), v - 1) + 1))


def test_cited_cases(t5):
    ids = by_id(t5)
    assert ids["as_Alt(v)"].source == "cited"
    assert "Kantor" in ids["as_Alt(v)"].note
    assert ids["as_M11_on12"].verdict == "eliminated"
    assert "3-(12,6,2)" in ids["as_M11_on12"].witness["reason"]


def test_explain_a7(t5, t6):
    text = explain(by_id(t5)["affine_A7_16"])
    assert "k <= 7" in text and "divprop" in text and "{6,7}" in text
    text = explain(by_id(t6)["affine_AGammaL1_32"])
    assert "divprop with |G_x| = 155" in text


def test_survivor_certificates(t5):
    psl = by_id(t5)["as_PSL2(23)"]
    assert psl.certificate["stabilizer_order"] == 8
    assert psl.certificate["sharply"]
    assert psl.certificate["pgl_exclusion"]["pgl_invariant"] == 0
    m24 = by_id(t5)["as_Mathieu(24)"].certificate
    assert m24["design"] == [5, 24, 8, 1, 759] and m24["flag_transitive"] and m24["matches_witt"]
    assert "certificate" in explain(psl)


def test_pgl23_exclusion():
    res = pgl23_exclusion()
    assert res["psl_orbit_designs"] >= 1
    assert res["pgl_invariant"] == 0


def test_json(t5):
    data = census_json(t5, 5, 64, 6)
    assert data["schema_version"] == SCHEMA_VERSION
    assert data["matches_expected"]
    json.dumps(data)


def test_preconditions():
    with pytest.raises(CensusError):
        run_census(5, 32, 6)
    with pytest.raises(CensusError):
        run_census(5, 64, 5)
    with pytest.raises(CensusError):
        run_census(4, 64, 6)


def test_unexpected_survivor_detected(t5):
    rigged = [r for r in t5 if r.case_id != "as_Mathieu(12)"]
    assert not matches_expected(rigged, 5)
