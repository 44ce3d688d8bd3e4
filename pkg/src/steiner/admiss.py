"""Parameter admissibility for Steiner designs with flag-transitive groups.

Everything here is exact integer or rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .gf import is_prime, prime_power

CAMERON_LIST = ((3, 4, 8), (3, 6, 22), (3, 12, 112), (4, 7, 23), (5, 8, 24))


class AdmissError(ValueError):
    pass


@dataclass(frozen=True)
class ParamSet:
    t: int
    v: int
    k: int
    lam: int
    b: Fraction
    r: Fraction
    lambda2: Fraction | None
    failure: str | None = None

    @property
    def feasible(self):
        return self.failure is None

    @property
    def nontrivial(self):
        return self.t < self.k < self.v

    def as_dict(self):
        show = lambda x: None if x is None else (int(x) if x.denominator == 1 else str(x))
        return {"t": self.t, "v": self.v, "k": self.k, "lambda": self.lam,
                "b": show(self.b), "r": show(self.r), "lambda2": show(self.lambda2),
                "feasible": self.feasible, "failure": self.failure}


def param_arithmetic(t, v, k, lam=1) -> ParamSet:
    """b, r and lambda2 from the counting identities; ``failure`` names the first non-integral one."""
    if not 1 <= t <= k <= v:
        raise AdmissError(f"need 1 <= t <= k <= v, got ({t}, {v}, {k})")
    b = Fraction(math.comb(v, t) * lam, math.comb(k, t))
    r = b * k / v
    lambda2 = r * (k - 1) / (v - 1) if t >= 2 and v > 1 else None
    failure = None
    for name, value in (("b", b), ("r", r), ("lambda2", lambda2)):
        if value is not None and value.denominator != 1:
            failure = name
            break
    return ParamSet(t, v, k, lam, b, r, lambda2, failure)


def lambda_i(t, v, k, i, lam=1) -> Fraction:
    """Number of blocks through an i-subset."""
    return Fraction(lam * math.comb(v - i, t - i), math.comb(k - i, t - i))


def steiner_integral(t, v, k, lam=1) -> bool:
    """All lambda_i (0 <= i < t) are integers."""
    return all(lambda_i(t, v, k, i, lam).denominator == 1 for i in range(t))


@dataclass(frozen=True)
class CameronResult:
    a_ok: bool
    b_ok: bool
    equality_case: tuple[int, int, int] | None

    @property
    def listed(self):
        return self.equality_case in CAMERON_LIST


def cameron_bounds(t, v, k) -> CameronResult:
    a_ok = v >= (t + 1) * (k - t + 1)
    lhs, rhs = v - t + 1, (k - t + 2) * (k - t + 1)
    b_ok = t <= 2 or lhs >= rhs
    tight = t > 2 and lhs == rhs
    return CameronResult(a_ok, b_ok, (t, k, v) if tight else None)


def cameron_equality_scan(t_max=6, k_max=50, v_max=2500):
    """(t, k, v) with equality in the second bound and integral lambda_i.

    Only non-trivial Steiner parameters (3 <= t < k < v) are considered.
    """
    found = []
    for t in range(3, t_max + 1):
        for k in range(t + 1, k_max + 1):
            v = (k - t + 2) * (k - t + 1) + t - 1
            if k < v <= v_max and steiner_integral(t, v, k):
                found.append((t, k, v))
    return found


def k_upper_bound(t, v) -> int:
    """floor(sqrt(v) + 3/2 + (t - 3)), computed without floating point."""
    if not 3 <= t <= 6:
        raise AdmissError(f"k bound is stated for 3 <= t <= 6, got t={t}")
    c = 2 * (t - 3) + 3  # the constant is c/2
    k = math.isqrt(v) + c // 2 + 2
    while True:
        d = 2 * k - c
        if d <= 0 or d * d <= 4 * v:
            return k
        k -= 1


def divprop_filter(t, v, k, order_Gx) -> bool:
    """r divides |G_x| (False when r is not even an integer)."""
    r = lambda_i(t, v, k, 1)
    return r.denominator == 1 and order_Gx % int(r) == 0


def flag_equation_check(t, v, k, order_Gxy, order_GxB) -> bool:
    """C(v-2,t-2) * |G_xB| == (k-1) C(k-2,t-2) |G_xy|."""
    if t < 3 or order_Gxy <= 0 or order_GxB <= 0:
        raise AdmissError("need t >= 3 and positive orders")
    return math.comb(v - 2, t - 2) * order_GxB == (k - 1) * math.comb(k - 2, t - 2) * order_Gxy


def alltop_filter(d, k) -> bool:
    """(2^d - 3) divides C(k,4)."""
    return math.comb(k, 4) % (2**d - 3) == 0


def _falling4(k):
    return (k - 1) * (k - 2) * (k - 3) * (k - 4)


def eq0(q, k, stab, n) -> bool:
    return (q - 2) * (q - 3) * stab * n == _falling4(k)


def eq_a(q, k) -> bool:
    return q - 3 >= (k - 3) * (k - 4)


def eq_b(q, k, stab, n) -> bool:
    return (q - 2) * stab * n <= (k - 1) * (k - 2)


def case2_t5_filter(q, k, stab, n) -> bool:
    """The equation for G = PSL(2,q) together with its two inequalities."""
    return eq0(q, k, stab, n) and eq_a(q, k) and eq_b(q, k, stab, n)


def eq_e(q, k, e) -> bool:
    return (k - 1) * (k - 2) * (k - 3) * (k - 4) * (k - 5) * e % ((q - 2) * (q - 3) * (q - 4)) == 0


def comb_c_integral(t, v, k) -> bool:
    """lambda2 and r = lambda2 (v-1)/(k-1) are both integers."""
    lam2 = lambda_i(t, v, k, 2)
    if lam2.denominator != 1:
        return False
    return (lam2 * (v - 1) / (k - 1)).denominator == 1


def case2_t6_filter(q, k) -> bool:
    pe = prime_power(q)
    if pe is None or q <= 3:
        raise AdmissError(f"q={q} must be a prime power > 3")
    return eq_e(q, k, pe[1]) and k <= k_upper_bound(6, q + 1) and comb_c_integral(6, q + 1, k)


def eq0_scan(q_max=2048):
    """Every (q, k, stab) satisfying the G = PSL(2,q) equation and inequalities."""
    hits = []
    for q in range(4, q_max + 1):
        if prime_power(q) is None:
            continue
        n = math.gcd(2, q - 1)
        for k in range(6, k_upper_bound(5, q + 1) + 1):
            for stab in range(1, (k - 1) * (k - 2) // ((q - 2) * n) + 1):
                if case2_t5_filter(q, k, stab, n):
                    hits.append((q, k, stab))
    return hits


# --- the equations for the semilinear subcases -----------------------------------

@dataclass(frozen=True)
class CaseEquation:
    id: str
    q: int
    k: int | None = None
    s: int | None = None
    u: int | None = None
    w: int | None = None
    c: int | None = None
    qbar: int | None = None
    m: int | None = None
    stab_order: int | None = None
    checks: tuple[str, ...] = field(default=())

    def as_dict(self):
        out = {"id": self.id, "q": self.q}
        for name in ("k", "s", "u", "w", "c", "qbar", "m", "stab_order"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        out["checks"] = list(self.checks)
        return out


EQUATION_IDS = ("E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8", "Eq0_half", "CondB", "CondBstar")

# caps on s^u: the stated bound plus one step; None means the scan uses DEFAULT_CAP
STATED_CAPS = {"E1": 7, "E2": 5, "E3": 7, "E8": 4}
DEFAULT_CAP = 16
EQ0_HALF_Q_CAP = 2048
COND_B_Q_CAP = 2**16


def default_cap(eq_id):
    if eq_id in STATED_CAPS:
        return STATED_CAPS[eq_id] + 1
    if eq_id == "Eq0_half":
        return EQ0_HALF_Q_CAP
    if eq_id in ("CondB", "CondBstar"):
        return COND_B_Q_CAP
    return DEFAULT_CAP


def _primes_upto(n):
    return [x for x in range(2, n + 1) if is_prime(x)]


def _exponents(cap):
    """(s, u) with s prime, u >= 1 and s^u <= cap."""
    out = []
    for s in _primes_upto(cap):
        u = 1
        while s**u <= cap:
            out.append((s, u))
            u += 1
    return out


def _divisors(n):
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _scan_e1_e2(eq_id, cap):
    denom, mult = (2, 6) if eq_id == "E1" else (4, 3)
    hits = []
    for s, u in _exponents(cap):
        q = 3 ** (s**u)
        lhs = (q - 2) * (q - 3)
        for sign, half in (("+", (q + 1) // 2), ("-", (q - 1) // 2)):
            for c in _divisors(half):
                if c <= 5 or lhs * denom != _falling4(c) * s:
                    continue
                companion = mult * s - (6 if sign == "+" else 1)
                if companion % c:
                    continue
                hits.append(CaseEquation(eq_id, q, k=c, s=s, u=u, c=c,
                                         checks=(f"c | (q{sign}1)/2", f"c | {companion}")))
    return hits


def _scan_e3(cap):
    hits = []
    for s, u in _exponents(cap):
        q = 3 ** (s**u)
        lhs = (q - 2) * (q - 3)
        for sign, half in (("+", (q + 1) // 2), ("-", (q - 1) // 2)):
            for c in _divisors(half):
                if 2 * c <= 5:
                    continue
                if lhs != 2 * (2 * c - 1) * (c - 1) * (2 * c - 3) * (c - 2) * s:
                    continue
                companion = 6 * s - 6 if sign == "+" else 6 * s - 1
                if companion % c:
                    continue
                hits.append(CaseEquation("E3", q, k=2 * c, s=s, u=u, c=c,
                                         checks=(f"c | (q{sign}1)/2", f"c | {companion}")))
    return hits


def _subfield_pairs(cap, w_min=1):
    """(s, u, w, q, qbar) with q = 3^(s^u), qbar = 3^(s^w), w_min <= w < u."""
    for s, u in _exponents(cap):
        for w in range(w_min, u):
            yield s, u, w, 3 ** (s**u), 3 ** (s**w)


def _scan_e4(cap):
    hits = []
    for s, u, w, q, qbar in _subfield_pairs(cap):
        if 2 * (q - 2) * (q - 3) != _falling4(qbar) * s:
            continue
        checks = ["equation"]
        if s == 2 and u - w == 1:
            g = math.gcd(qbar**4 - 5 * qbar**2 + 6, qbar - 2)
            checks.append(f"gcd = {g}")
            if g == 1:
                continue
        hits.append(CaseEquation("E4", q, k=qbar, s=s, u=u, w=w, qbar=qbar, checks=tuple(checks)))
    return hits


def _scan_e5(cap):
    hits = []
    for s, u in _exponents(cap):
        f = s**u
        q = 3**f
        lhs = 2 * (q - 2) * (q - 3)
        for j in range(1, f + 1):
            qbar = 3**j
            for c in _divisors(math.gcd(qbar - 1, q - 1)):
                k = c * qbar
                if k <= 5 or c < 2:
                    continue
                if lhs != _falling4(k) * s or (q - 2) * (q - 3) % (k - 3):
                    continue
                hits.append(CaseEquation("E5", q, k=k, s=s, u=u, c=c, qbar=qbar,
                                             checks=("c | qbar-1", "c | q-1", "(k-3) | (q-2)(q-3)")))
    return hits


def _scan_e6(cap):
    hits = []
    for s, u, w, q, qbar in _subfield_pairs(cap):
        if (q - 2) * (q - 3) == (qbar - 2) * (qbar - 3) * s:
            hits.append(CaseEquation("E6", q, k=qbar + 1, s=s, u=u, w=w, qbar=qbar,
                                     m=s ** (u - w), checks=("equation",)))
    return hits


def _scan_e7(cap):
    hits = []
    for s, u, w, q, qbar in _subfield_pairs(cap):
        m = s ** (u - w)
        if m % 2:
            continue
        h = qbar * qbar - qbar
        if (q - 2) * (q - 3) * (qbar + 1) != (h - 1) * (h - 2) * (h - 3) * (h - 4) * s:
            continue
        if (q - 2) * (q - 3) % (h - 1) == 0:
            hits.append(CaseEquation("E7", q, k=h, s=s, u=u, w=w, qbar=qbar, m=m,
                                     checks=("m even", "(k-1) | (q-2)(q-3)")))
    return hits


def _scan_e8(cap):
    hits = []
    for s, u in _exponents(cap):
        for w in range(0, u + 1):
            q, qbar = 3 ** (s**u), 3 ** (s**w)
            h = (qbar**3 - qbar) // 2
            if 2 * (q - 2) * (q - 3) == (h - 1) * (h - 2) * (h - 3) * (h - 4) * s:
                hits.append(CaseEquation("E8", q, k=h, s=s, u=u, w=w, qbar=qbar,
                                         checks=("equation",)))
    return hits


def _scan_eq0_half(q_cap):
    """(q-2)(q-3) stab = (k-1)(k-2)(k-3)(k-4) with stab | q(q-1)/2, q odd."""
    hits = []
    for q in range(5, q_cap + 1, 2):
        if prime_power(q) is None:
            continue
        for k in range(6, k_upper_bound(5, q + 1) + 1):
            num = _falling4(k)
            den = (q - 2) * (q - 3)
            if num % den:
                continue
            stab = num // den
            if not eq_a(q, k):
                continue
            checks = ["equation", "q - 3 >= (k-3)(k-4)"]
            if (q * (q - 1) // 2) % stab:
                continue
            checks.append("stab | |PSL(2,q)_0|")
            hits.append(CaseEquation("Eq0_half", q, k=k, stab_order=stab, checks=tuple(checks)))
    return hits


def _scan_cond_b(eq_id, q_cap):
    """Conditions (B) (p = 2) and (B*) (p = 3) for both branches of the stabilizer."""
    from .pgl import subgroup_orbit_options  # local import: pgl is heavier

    p = 2 if eq_id == "CondB" else 3
    n = 1 if p == 2 else 2
    hits = []
    e = 2
    while p**e <= q_cap:
        pe = prime_power(e)
        if pe is not None:
            s = pe[0]
            q = p**e
            for k in range(6, min(k_upper_bound(5, q + 1), q) + 1):
                num = _falling4(k) * s
                den = (q - 2) * (q - 3) * n
                if num % den:
                    continue
                stab = num // den
                if (q * (q - 1) // n) % stab:
                    continue
                for sigma in (s, 1):
                    if (stab * k) % sigma or k % sigma:
                        continue
                    order_b = stab * k // sigma
                    if subgroup_orbit_options(q, order_b, k, k // sigma):
                        hits.append(CaseEquation(eq_id, q, k=k, s=s, u=pe[1], stab_order=stab,
                                                 checks=("equation", f"branch {sigma}",
                                                         "subgroup with matching orbits")))
        e += 1
    return hits


def subcase_equation_scan(eq_id, cap=None):
    """Survivors of one subcase equation together with its side conditions."""
    if eq_id not in EQUATION_IDS:
        raise AdmissError(f"unknown equation id {eq_id!r}; choose from {', '.join(EQUATION_IDS)}")
    cap = default_cap(eq_id) if cap is None else cap
    if eq_id in ("E1", "E2"):
        return _scan_e1_e2(eq_id, cap)
    if eq_id == "E3":
        return _scan_e3(cap)
    if eq_id == "E4":
        return _scan_e4(cap)
    if eq_id == "E5":
        return _scan_e5(cap)
    if eq_id == "E6":
        return _scan_e6(cap)
    if eq_id == "E7":
        return _scan_e7(cap)
    if eq_id == "E8":
        return _scan_e8(cap)
    if eq_id == "Eq0_half":
        return _scan_eq0_half(cap)
    return _scan_cond_b(eq_id, cap)
