"""Case-by-case census of flag-transitive Steiner 5- and 6-designs.

Each case of the 3-homogeneous group list is run through an ordered chain of
filters.  For every block size k the first filter that fails is recorded, so
an eliminated case carries an independently checkable witness.  Arguments
taken from the literature are reported with ``source == "cited"``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import combinations

from . import admiss
from .admiss import (
    alltop_filter,
    eq_a,
    eq_e,
    k_upper_bound,
    lambda_i,
    subcase_equation_scan,
)
from .construct import (
    _orbit_design,
    block_orbit,
    forced_designs,
    mathieu_group,
    sharpness_check,
    witt_design,
    witt_design_via_psl,
)
from .gf import prime_power
from .pgl import GroupDescriptor, make_group

SCHEMA_VERSION = 1
MIN_Q_CAP = 64
MIN_D_CAP = 6
EXPECTED_SURVIVORS = {
    5: ("as_PSL2(23)", "as_Mathieu(12)", "as_Mathieu(24)"),
    6: (),
}
KANTOR = "literature: Kantor Thm. 3"
CONTAINMENT_K = 8  # blocks of an SL(d,2) design lie in 3-spaces

FILTER_TEXT = {
    "k_bound": "k-bound from the second Cameron inequality",
    "comb": "integrality of b, r and lambda2",
    "divprop": "r divides |G_x|",
    "alltop": "2^d - 3 divides C(k,4)",
    "containment": "blocks lie in 3-dimensional subspaces, so k <= 8",
    "eq_a": "q - 3 >= (k-3)(k-4)",
    "flag_equation": "(q-2)(q-3) n |G_xB| = (k-1)(k-2)(k-3)(k-4) a with a | ne",
    "lagrange": "|G_xB| divides |G_x|",
    "eq_e": "(q-2)(q-3)(q-4) divides (k-1)...(k-5) e",
    "forcing": "block through a t-set is a union of orbits of its stabilizer",
    "pgl_exclusion": "no such design is invariant under PGL(2,23)",
    "subcase_scans": "semilinear subcase equations have no solutions",
}


class CensusError(ValueError):
    pass


@dataclass
class CaseReport:
    case_id: str
    t: int
    verdict: str  # "eliminated", "survivor" or "unresolved"
    filters: tuple[str, ...] = ()
    witness: dict = field(default_factory=dict)
    source: str = "computed"
    certificate: dict | None = None
    note: str | None = None

    @property
    def survives(self):
        return self.verdict == "survivor"

    def as_dict(self):
        out = {
            "case_id": self.case_id,
            "t": self.t,
            "verdict": self.verdict,
            "filters": list(self.filters),
            "source": self.source,
            "witness": self.witness,
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate
        if self.note:
            out["note"] = self.note
        return out


# --- filter chains over k ------------------------------------------------------

def _comb(t, v, k):
    return all(lambda_i(t, v, k, i).denominator == 1 for i in range(3))


def _r(t, v, k):
    return int(lambda_i(t, v, k, 1))


def _k_range(t, v, cap=None):
    hi = min(k_upper_bound(t, v), v - 1)
    if cap is not None:
        hi = min(hi, cap)
    return range(t + 1, hi + 1)


def _run_chain(t, v, chain, k_cap=None):
    """Apply named predicates to each k; returns (kills, passed)."""
    kills = []
    passed = []
    for k in _k_range(t, v, k_cap):
        for name, pred in chain:
            detail = pred(k)
            if detail is not True:
                kills.append({"k": k, "filter": name, **(detail or {})})
                break
        else:
            passed.append(k)
    return kills, passed


def _comb_pred(t, v):
    def pred(k):
        if _comb(t, v, k):
            return True
        bad = next(i for i in range(3) if lambda_i(t, v, k, i).denominator != 1)
        return {"lambda_index": bad, "value": str(lambda_i(t, v, k, bad))}
    return pred


def _divprop_pred(t, v, order_gx):
    def pred(k):
        r = _r(t, v, k)
        if order_gx % r == 0:
            return True
        return {"r": r, "order_Gx": order_gx}
    return pred


def _alltop_pred(d):
    def pred(k):
        if alltop_filter(d, k):
            return True
        return {"divisor": 2**d - 3, "binom_k_4": math.comb(k, 4)}
    return pred


def _filters_used(kills):
    seen = []
    for kill in kills:
        if kill["filter"] not in seen:
            seen.append(kill["filter"])
    return tuple(seen)


def _k_bound_witness(t, v, k_cap=None):
    w = {"v": v, "k_max": k_upper_bound(t, v)}
    if k_cap is not None:
        w["k_cap"] = k_cap
    return w


def _chain_report(case_id, t, v, chain, k_cap=None, extra=None, source="computed"):
    kills, passed = _run_chain(t, v, chain, k_cap)
    witness = {**_k_bound_witness(t, v, k_cap), **(extra or {}), "kills": kills}
    if passed:
        witness["passed"] = passed
        return CaseReport(case_id, t, "unresolved", _filters_used(kills), witness, source)
    filters = _filters_used(kills) or ("k_bound",)
    return CaseReport(case_id, t, "eliminated", filters, witness, source)


# --- affine cases -------------------------------------------------------------

def _affine_small(t):
    out = []
    for case_id, family, q in (("affine_AGL1_8", "AGL1", 8), ("affine_AGammaL1_8", "AGammaL1", 8)):
        out.append(_chain_report(case_id, t, q, [("comb", _comb_pred(t, q))]))
    desc = GroupDescriptor("AGammaL1", 32)
    order_gx = desc.order // 32
    chain = [("divprop", _divprop_pred(t, 32, order_gx)), ("comb", _comb_pred(t, 32))]
    out.append(_chain_report("affine_AGammaL1_32", t, 32, chain, extra={"order_G": desc.order}))
    return out


def _affine_sl(t, d_cap):
    out = []
    for d in range(2, d_cap + 1):
        v = 2**d
        case_id = f"affine_SLd2({d})"
        desc = GroupDescriptor("SLd2_affine", d=d)
        order_gx = desc.order // v
        if d <= 3:
            out.append(_chain_report(case_id, t, v, [("comb", _comb_pred(t, v))]))
            continue
        chain = []
        if t == 5:
            chain.append(("alltop", _alltop_pred(d)))
        chain += [("comb", _comb_pred(t, v)), ("divprop", _divprop_pred(t, v, order_gx))]
        rep = _chain_report(case_id, t, v, chain, k_cap=CONTAINMENT_K,
                            extra={"order_Gx": order_gx}, source="cited")
        rep.filters = ("containment",) + rep.filters
        rep.note = "k <= 8 from the containment argument is cited, the rest is computed"
        out.append(rep)
    return out


def _affine_a7(t):
    G = make_group(GroupDescriptor("A7_affine"))
    order_gx = G.order() // 16
    div = ("divprop", _divprop_pred(t, 16, order_gx))
    comb = ("comb", _comb_pred(t, 16))
    chain = [div, comb] if t == 5 else [comb, div]
    return [_chain_report("affine_A7_16", t, 16, chain, extra={"order_Gx": order_gx})]


# --- almost simple cases ------------------------------------------------------

def _alt(t):
    v_min = t + 2
    return CaseReport(
        "as_Alt(v)", t, "eliminated", ("kantor",),
        {"v_min": v_min, "reason": f"for v >= {v_min} the group is {t}-transitive; "
                                   f"smaller v leave no k with {t} < k < v"},
        source="cited", note=KANTOR)


def _psl_t5_chain(q):
    p, e = prime_power(q)
    n = math.gcd(2, q - 1)
    v = q + 1
    gx = q * (q - 1) // n

    def flag_eq(k):
        f4 = (k - 1) * (k - 2) * (k - 3) * (k - 4)
        den = (q - 2) * (q - 3) * n
        if any(f4 * a % den == 0 for a in _divisors(n * e)):
            return True
        return {"lhs_factor": den, "rhs": f4, "ne": n * e}

    def lagrange(k):
        f4 = (k - 1) * (k - 2) * (k - 3) * (k - 4)
        den = (q - 2) * (q - 3) * n
        for a in _divisors(n * e):
            if f4 * a % den == 0 and (gx * a) % (f4 * a // den) == 0:
                return True
        return {"order_Gx_over_a": gx}

    return [
        ("eq_a", lambda k: True if eq_a(q, k) else {"q": q}),
        ("flag_equation", flag_eq),
        ("lagrange", lagrange),
        ("comb", _comb_pred(5, v)),
        ("divprop", _divprop_pred(5, v, q * (q - 1) * e)),
    ]


def _psl_t6_chain(q):
    p, e = prime_power(q)
    v = q + 1

    def eqe(k):
        if eq_e(q, k, e):
            return True
        return {"divisor": (q - 2) * (q - 3) * (q - 4)}

    return [
        ("eq_e", eqe),
        ("comb", _comb_pred(6, v)),
        ("divprop", _divprop_pred(6, v, q * (q - 1) * e)),
    ]


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _compress(kills):
    """Collapse per-k kills into [k_lo, k_hi, filter] runs."""
    runs = []
    for kill in kills:
        if runs and runs[-1][2] == kill["filter"] and runs[-1][1] == kill["k"] - 1:
            runs[-1][1] = kill["k"]
        else:
            runs.append([kill["k"], kill["k"], kill["filter"]])
    return runs


def pgl23_exclusion():
    """PSL(2,23)-orbit designs with blocks through {inf,0,1,2,3}, and whether PGL(2,23) fixes any.

    A flag-transitive PGL(2,23) would make the 759 blocks (an odd number)
    a single PSL(2,23)-orbit, so checking these orbits is exhaustive.
    """
    q = 23
    G = make_group(GroupDescriptor("PSL2", q))
    S = (0, 1, 2, 3, q)
    rest = [x for x in range(q + 1) if x not in S]
    designs = {}
    for extra in combinations(rest, 3):
        D = _orbit_design(G, S + extra, 5, 759)
        if D is not None:
            designs[D.blocks] = D
    # x -> 5x, 5 a non-square mod 23
    m = [5 * x % q for x in range(q)] + [q]
    invariant = 0
    for blocks in designs:
        bset = set(blocks)
        if all(tuple(sorted(m[x] for x in B)) in bset for B in blocks):
            invariant += 1
    return {"psl_orbit_designs": len(designs), "pgl_invariant": invariant}


def _psl2_cases(t, q_cap):
    out = []
    for q in range(4, q_cap + 1):
        if prime_power(q) is None:
            continue
        v = q + 1
        chain = _psl_t5_chain(q) if t == 5 else _psl_t6_chain(q)
        kills, passed = _run_chain(t, v, chain)
        witness = {**_k_bound_witness(t, v), "kills": _compress(kills)}
        case_id = f"as_PSL2({q})"
        if not passed:
            out.append(CaseReport(case_id, t, "eliminated", _filters_used(kills) or ("k_bound",), witness))
            continue
        if t == 5 and q == 23 and passed == [8]:
            out.append(_psl23_survivor(witness))
            continue
        witness["passed"] = passed
        out.append(CaseReport(case_id, t, "unresolved", _filters_used(kills), witness))
    if t == 5:
        scans = {eq: {"cap": admiss.default_cap(eq), "survivors": [c.as_dict() for c in subcase_equation_scan(eq)]}
                 for eq in admiss.EQUATION_IDS}
        left = any(s["survivors"] for s in scans.values())
        out.append(CaseReport(
            "as_PSL2(subcases)", t, "unresolved" if left else "eliminated", ("subcase_scans",), scans,
            note="the index-2 branch for p = 3 is the mutatis-mutandis branch, scanned as Eq0_half"))
    return out


def _psl23_survivor(witness):
    D, cert = witt_design_via_psl(23)
    G = make_group(GroupDescriptor("PSL2", 23))
    sharp = sharpness_check(D, G)
    exclusion = pgl23_exclusion()
    certificate = {**cert.as_dict(), "design": [D.t, D.v, D.k, D.lam, D.b], **sharp,
                   "pgl_exclusion": exclusion}
    witness = {**witness, "passed": [8], "stab_order": 1}
    filters = ("flag_equation", "pgl_exclusion")
    if exclusion["pgl_invariant"]:
        return CaseReport("as_PSL2(23)", 5, "unresolved", filters, witness, certificate=certificate,
                          note="PGL(2,23) preserves a candidate design")
    return CaseReport("as_PSL2(23)", 5, "survivor", filters, witness, certificate=certificate,
                      note="G = PSL(2,23); PGL(2,23) excluded by computation")


def _mathieu(t):
    out = []
    for v in (11, 12, 22, 23, 24):
        G = mathieu_group(v)
        order = G.order()
        gx = order // v
        chain = [("divprop", _divprop_pred(t, v, gx)), ("comb", _comb_pred(t, v))]
        kills, passed = _run_chain(t, v, chain)
        witness = {**_k_bound_witness(t, v), "order_G": order, "kills": kills}
        case_id = f"as_Mathieu({v})"
        designs = []
        for k in passed:
            found = forced_designs(G, t, k)
            if found:
                designs += [(k, D) for D in found]
            else:
                kills.append({"k": k, "filter": "forcing"})
        filters = _filters_used(kills)
        if not designs:
            out.append(CaseReport(case_id, t, "eliminated", filters, witness))
            continue
        (k, D), = designs
        sharp = sharpness_check(D, G)
        cert = {"design": [D.t, D.v, D.k, D.lam, D.b], "order_G": order,
                "transitivity_degree": G.transitivity_degree(t), **sharp,
                "matches_witt": D.blocks == witt_design(v).blocks}
        verdict = "survivor" if sharp["flag_transitive"] else "unresolved"
        out.append(CaseReport(case_id, t, verdict, filters + ("forcing",), witness, certificate=cert,
                              note=f"agrees with {KANTOR}"))
    return out


def _m11_on12(t):
    return CaseReport(
        "as_M11_on12", t, "eliminated", ("literature",),
        {"v": 12, "reason": "the geometry preserved by the 3-transitive M11 is a 3-(12,6,2) design, "
                            "not a Steiner design"},
        source="cited")


def run_census(t: int, q_cap: int = 2048, d_cap: int = 10) -> list[CaseReport]:
    if t not in (5, 6):
        raise CensusError(f"t must be 5 or 6, got {t}")
    if q_cap < MIN_Q_CAP:
        raise CensusError(f"q_cap must be at least {MIN_Q_CAP}")
    if d_cap < MIN_D_CAP:
        raise CensusError(f"d_cap must be at least {MIN_D_CAP}")
    reports = []
    reports += _affine_small(t)
    reports += _affine_sl(t, d_cap)
    reports += _affine_a7(t)
    reports.append(_alt(t))
    reports += _psl2_cases(t, q_cap)
    reports += _mathieu(t)
    reports.append(_m11_on12(t))
    return reports


def survivors(reports) -> list[str]:
    return [r.case_id for r in reports if r.survives]


def matches_expected(reports, t) -> bool:
    """All cases decided, survivors exactly the known list."""
    if any(r.verdict == "unresolved" for r in reports):
        return False
    return sorted(survivors(reports)) == sorted(EXPECTED_SURVIVORS[t])


def explain(report: CaseReport) -> str:
    head = f"{report.case_id} (t={report.t}): {report.verdict} [{report.source}]"
    lines = [head]
    w = report.witness
    if "k_max" in w:
        lines.append(f"  k <= {w['k_max']} by the k-bound" +
                     (f", k <= {w['k_cap']} by containment" if "k_cap" in w else ""))
    kills = w.get("kills", [])
    if kills and isinstance(kills[0], list):
        for lo, hi, name in kills:
            ks = f"k = {lo}" if lo == hi else f"k in [{lo}, {hi}]"
            lines.append(f"  {ks} killed by {name}: {FILTER_TEXT.get(name, name)}")
    else:
        by_filter = {}
        for kill in kills:
            by_filter.setdefault(kill["filter"], []).append(kill)
        for name, group in by_filter.items():
            ks = ",".join(str(x["k"]) for x in group)
            extra = ""
            if name == "divprop":
                extra = f" with |G_x| = {group[0]['order_Gx']}"
            lines.append(f"  k in {{{ks}}} killed by {name}{extra}: {FILTER_TEXT.get(name, name)}")
    if "reason" in w:
        lines.append(f"  {w['reason']}")
    if report.case_id == "as_PSL2(subcases)":
        for eq, s in w.items():
            lines.append(f"  {eq}: cap {s['cap']}, {len(s['survivors'])} survivors")
    if report.certificate:
        lines.append("  certificate: " + json.dumps(report.certificate, sort_keys=True))
    if report.note:
        lines.append(f"  note: {report.note}")
    return "\n".join(lines)


def census_json(reports, t, q_cap, d_cap) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "t": t,
        "q_cap": q_cap,
        "d_cap": d_cap,
        "survivors": survivors(reports),
        "matches_expected": matches_expected(reports, t),
        "reports": [r.as_dict() for r in reports],
    }
