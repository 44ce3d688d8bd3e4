"""Fractional-linear groups on the projective line and their subgroup orbits.

Points of PL(q) are indexed by field codes ``0..q-1`` with infinity at index
``q``.  A 2x2 matrix ``(a, b, c, d)`` of codes acts by ``x -> (ax+b)/(cx+d)``.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field

from .gf import Field, FieldError, field_make, prime_power
from .perm import Perm, PermGroup

FAMILIES = (
    "PSL2", "PGL2", "PSigmaL2", "PGammaL2", "AGL1", "AGammaL1",
    "SLd2_affine", "A7_affine", "Mathieu_as_automorphisms",
)
MATHIEU_ORDERS = {11: 7920, 12: 95040, 22: 887040, 23: 10200960, 24: 244823040}
OBSERVED_Q_BOUND = 128
SEED = 20240101


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class PLPoint:
    """A point of GF(q) u {inf}; ``value`` is a field code or None for infinity."""

    field: Field
    value: int | None

    @property
    def is_infinity(self):
        return self.value is None

    @property
    def index(self):
        return self.field.q if self.value is None else self.value

    def __repr__(self):
        return "inf" if self.value is None else f"PL({self.field.element(self.value)!r})"


def projective_line(F: Field) -> list[PLPoint]:
    return [PLPoint(F, c) for c in range(F.q)] + [PLPoint(F, None)]


def _field_for(q):
    pe = prime_power(q)
    if pe is None:
        raise GroupError(f"{q} is not a prime power")
    return field_make(*pe)


def mobius_images(F: Field, M) -> list[int]:
    """Image list of x -> (ax+b)/(cx+d) on PL(q)."""
    a, b, c, d = M
    q = F.q
    add, mul, div = F.add, F.mul, F.div
    images = [0] * (q + 1)
    for x in range(q):
        den = add(mul(c, x), d)
        num = add(mul(a, x), b)
        images[x] = q if den == 0 else div(num, den)
    images[q] = q if c == 0 else div(a, c)
    return images


def mobius_perm(F: Field, M) -> Perm:
    a, b, c, d = M
    if F.sub(F.mul(a, d), F.mul(b, c)) == 0:
        raise GroupError("singular matrix")
    return Perm(mobius_images(F, M), check=False)


def mat_mul(F: Field, M, N):
    """Matrix of the map 'apply N, then M'."""
    a, b, c, d = M
    e, f, g, h = N
    add, mul = F.add, F.mul
    return (add(mul(a, e), mul(b, g)), add(mul(a, f), mul(b, h)),
            add(mul(c, e), mul(d, g)), add(mul(c, f), mul(d, h)))


def mat_det(F: Field, M):
    a, b, c, d = M
    return F.sub(F.mul(a, d), F.mul(b, c))


def _to_standard(F: Field, z):
    """Matrix sending z1 -> 0, z2 -> inf, z3 -> 1 (points as indices, q = inf)."""
    z1, z2, z3 = z
    q, sub, one = F.q, F.sub, F.one
    if z1 == q:
        return (0, sub(z3, z2), one, F.neg(z2))
    if z2 == q:
        return (one, F.neg(z1), 0, sub(z3, z1))
    if z3 == q:
        return (one, F.neg(z1), one, F.neg(z2))
    a = sub(z3, z2)
    c = sub(z3, z1)
    return (a, F.neg(F.mul(z1, a)), c, F.neg(F.mul(z2, c)))


def mobius_from_points(F: Field, src, dst):
    """The unique PGL(2,q) matrix mapping three distinct points onto three others."""
    A = _to_standard(F, src)
    a, b, c, d = _to_standard(F, dst)
    Binv = (d, F.neg(b), F.neg(c), a)
    return mat_mul(F, Binv, A)


def frobenius_perm(F: Field) -> Perm:
    """x -> x^p on PL(q), fixing infinity."""
    return Perm([F.frobenius(x) for x in range(F.q)] + [F.q], check=False)


@dataclass(frozen=True)
class GroupDescriptor:
    family: str
    q: int | None = None
    d: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GroupError(f"unknown family {self.family!r}")
        if self.family in ("SLd2_affine",):
            if self.d is None or self.d < 2:
                raise GroupError("SLd2_affine needs d >= 2")
        elif self.family == "A7_affine":
            pass
        elif self.family == "Mathieu_as_automorphisms":
            if self.q not in MATHIEU_ORDERS:
                raise GroupError(f"no Mathieu design on {self.q} points")
        else:
            if self.q is None or prime_power(self.q) is None:
                raise GroupError(f"q={self.q!r} is not a prime power")
            if self.family.startswith("P") and self.q <= 3:
                raise GroupError("projective families need q > 3")

    @property
    def p(self):
        return prime_power(self.q)[0] if self.q else 2

    @property
    def e(self):
        return prime_power(self.q)[1] if self.q else 1

    @property
    def n(self):
        return math.gcd(2, self.q - 1) if self.q else 1

    @property
    def a(self):
        """Index of the field-automorphism part."""
        return self.e if self.family in ("PSigmaL2", "PGammaL2", "AGammaL1") else 1

    @property
    def degree(self):
        f = self.family
        if f == "SLd2_affine":
            return 2**self.d
        if f == "A7_affine":
            return 16
        if f == "Mathieu_as_automorphisms":
            return self.q
        if f in ("AGL1", "AGammaL1"):
            return self.q
        return self.q + 1

    @property
    def order(self):
        f, q = self.family, self.q
        if f == "PSL2":
            return q * (q * q - 1) // self.n
        if f == "PGL2":
            return q * (q * q - 1)
        if f == "PSigmaL2":
            return q * (q * q - 1) * self.e // self.n
        if f == "PGammaL2":
            return q * (q * q - 1) * self.e
        if f == "AGL1":
            return q * (q - 1)
        if f == "AGammaL1":
            return q * (q - 1) * self.e
        if f == "SLd2_affine":
            return 2**self.d * math.prod(2**self.d - 2**i for i in range(self.d))
        if f == "A7_affine":
            return 16 * 2520
        return MATHIEU_ORDERS[q]


def _psl_gens(F):
    mu = F.primitive
    one = F.one
    return [(one, one, 0, one), (F.mul(mu, mu), 0, 0, one), (0, F.neg(one), one, 0)]


def _pgl_gens(F):
    one = F.one
    return [(one, one, 0, one), (F.primitive, 0, 0, one), (0, F.neg(one), one, 0)]


def _affine_gens(F):
    return [[F.add(x, F.one) for x in range(F.q)],
            [F.mul(F.primitive, x) for x in range(F.q)]]


def _bit_matrix_perm(rows, d):
    """Permutation of GF(2)^d (bit i = coordinate i) given column images."""
    images = []
    for x in range(2**d):
        y = 0
        for i in range(d):
            if x >> i & 1:
                y ^= rows[i]
        images.append(y)
    return images


def _sl_d2_gens(d):
    translation = [x ^ 1 for x in range(2**d)]
    # transvection e1 -> e1 + e0 and the cyclic coordinate shift generate SL(d,2)
    cols = [1 << i for i in range(d)]
    cols[1] = 0b11
    transvection = _bit_matrix_perm(cols, d)
    shift = _bit_matrix_perm([1 << ((i + 1) % d) for i in range(d)], d)
    return [translation, transvection, shift]


def _a7_linear_gens(seed=SEED):
    """Two matrices in GL(4,2) generating a subgroup of order 2520."""
    rng = random.Random(seed)
    while True:
        pair = []
        for _ in range(2):
            while True:
                cols = [rng.randrange(1, 16) for _ in range(4)]
                images = _bit_matrix_perm(cols, 4)
                if len(set(images)) == 16:
                    break
            pair.append(images)
        if PermGroup(pair, 16).order() == 2520:
            return pair


def make_group(desc: GroupDescriptor) -> PermGroup:
    f = desc.family
    if f == "Mathieu_as_automorphisms":
        from .construct import mathieu_group
        return mathieu_group(desc.q)
    if f == "SLd2_affine":
        return PermGroup(_sl_d2_gens(desc.d), 2**desc.d)
    if f == "A7_affine":
        return PermGroup([[x ^ 1 for x in range(16)]] + _a7_linear_gens(), 16)
    F = _field_for(desc.q)
    if f in ("AGL1", "AGammaL1"):
        gens = _affine_gens(F)
        if f == "AGammaL1" and F.e > 1:
            gens.append([F.frobenius(x) for x in range(F.q)])
        return PermGroup(gens, F.q)
    mats = _psl_gens(F) if f in ("PSL2", "PSigmaL2") else _pgl_gens(F)
    gens = [mobius_perm(F, M) for M in mats]
    if f in ("PSigmaL2", "PGammaL2") and F.e > 1:
        gens.append(frobenius_perm(F))
    return PermGroup(gens, F.q + 1)


def psl2(q: int) -> PermGroup:
    return make_group(GroupDescriptor("PSL2", q))


# --- subgroup kinds and the orbit census ------------------------------------

_KIND_ARGS = {
    "cyclic": ("c",), "dihedral": ("c",), "elem_abelian": ("qbar",),
    "semidirect": ("qbar", "c"), "psl2": ("qbar", "m"), "pgl2": ("qbar", "m"),
    "A4": (), "S4": (), "A5": (),
}


@dataclass(frozen=True)
class SubgroupKind:
    name: str
    args: tuple[int, ...] = ()

    def __post_init__(self):
        if self.name not in _KIND_ARGS:
            raise GroupError(f"unknown subgroup kind {self.name!r}")
        if len(self.args) != len(_KIND_ARGS[self.name]):
            raise GroupError(f"{self.name} takes arguments {_KIND_ARGS[self.name]}")

    @classmethod
    def parse(cls, text: str) -> SubgroupKind:
        m = re.fullmatch(r"\s*(\w+?)\s*(?:\(([\d,\s]*)\))?\s*", text)
        if not m:
            raise GroupError(f"cannot parse subgroup kind {text!r}")
        args = tuple(int(a) for a in (m.group(2) or "").split(",") if a.strip())
        return cls(m.group(1), args)

    def __str__(self):
        if not self.args:
            return self.name
        return f"{self.name}({','.join(map(str, self.args))})"

    @property
    def order(self):
        name, args = self.name, self.args
        if name == "cyclic":
            return args[0]
        if name == "dihedral":
            return 2 * args[0]
        if name == "elem_abelian":
            return args[0]
        if name == "semidirect":
            return args[0] * args[1]
        if name in ("psl2", "pgl2"):
            qb = args[0]
            full = qb * (qb * qb - 1)
            return full if name == "pgl2" else full // math.gcd(2, qb - 1)
        return {"A4": 12, "S4": 24, "A5": 60}[name]


def _divides(a, b):
    return b % a == 0


def _ord_mod(p, c):
    """Least d >= 1 with p^d = 1 mod c."""
    x, d = p % c, 1
    while x != 1 % c:
        x = x * p % c
        d += 1
    return d


def predicted_orbit_census(kind: SubgroupKind, q: int) -> dict[int, int]:
    """Orbit lengths of a subgroup of PSL(2,q) on PL(q), as {length: count}.

    Lengths with count zero are omitted.
    """
    pe = prime_power(q)
    if pe is None or q <= 3:
        raise GroupError(f"q={q} must be a prime power > 3")
    p, e = pe
    n = math.gcd(2, q - 1)
    name, args = kind.name, kind.args
    N = {}

    def put(length, count):
        if count < 0 or count != int(count):
            raise GroupError(f"{kind} at q={q}: count {count} for length {length}")
        if count:
            N[length] = N.get(length, 0) + int(count)

    def side(ok):
        if not ok:
            raise GroupError(f"{kind} does not satisfy the side conditions at q={q}")

    if name == "cyclic":
        (c,) = args
        side(c >= 2)
        if _divides(c, (q + 1) // n):
            put(c, (q + 1) // c)
        elif _divides(c, (q - 1) // n):
            put(1, 2)
            put(c, (q - 1) // c)
        else:
            side(False)
    elif name == "dihedral":
        (c,) = args
        side(c >= 2)
        plus, minus = _divides(c, (q + 1) // n), _divides(c, (q - 1) // n)
        side(plus or minus)
        if p == 2:
            if plus:
                put(c, 1)
                put(2 * c, (q + 1 - c) // (2 * c))
            else:
                put(2, 1)
                put(c, 1)
                put(2 * c, (q - 1 - c) // (2 * c))
        elif q % 4 == 1:
            if plus:
                put(c, 2)
                put(2 * c, (q + 1 - 2 * c) // (2 * c))
            elif c == 2:
                put(2, 3)
                put(4, (q - 5) // 4)
            else:
                put(2, 1)
                put(c, 2)
                put(2 * c, (q - 1 - 2 * c) // (2 * c))
        else:
            if plus:
                put(2 * c, (q + 1) // (2 * c))
            else:
                put(2, 1)
                put(2 * c, (q - 1) // (2 * c))
    elif name == "elem_abelian":
        (qbar,) = args
        side(qbar > 1 and prime_power(qbar) is not None and prime_power(qbar)[0] == p
             and _divides(qbar, q))
        put(1, 1)
        put(qbar, q // qbar)
    elif name == "semidirect":
        qbar, c = args
        side(qbar > 1 and prime_power(qbar) is not None and prime_power(qbar)[0] == p
             and _divides(qbar, q) and c >= 2 and _divides(c, qbar - 1)
             and _divides(c, (q - 1) // n))
        put(1, 1)
        put(qbar, 1)
        put(c * qbar, (q - qbar) // (c * qbar))
    elif name in ("psl2", "pgl2"):
        qbar, m = args
        side(qbar >= 2 and m >= 1 and qbar**m == q)
        if name == "pgl2":
            side(m > 1 and m % 2 == 0)
        order = kind.order
        put(qbar + 1, 1)
        rest = q - qbar
        if m % 2 == 0:
            put(qbar * (qbar - 1), 1)
            rest -= qbar * (qbar - 1)
        side(_divides(order, rest))
        put(order, rest // order)
    elif name == "A4":
        if p == 2:
            side(e % 2 == 0)
            put(1, 1)
            put(4, 1)
            put(12, (q - 4) // 12)
        elif q % 4 == 1:
            if p == 3:
                put(4, 1), put(6, 1), put(12, (q - 9) // 12)
            elif _divides(3, (q + 1) // 2):
                put(6, 1), put(12, (q - 5) // 12)
            else:
                put(4, 2), put(6, 1), put(12, (q - 13) // 12)
        else:
            if p == 3:
                put(4, 1), put(12, (q - 3) // 12)
            elif _divides(3, (q + 1) // 2):
                put(12, (q + 1) // 12)
            else:
                put(4, 2), put(12, (q - 7) // 12)
    elif name == "S4":
        side(p != 2 and q % 8 in (1, 7))
        if q % 8 == 1:
            if p == 3:
                put(4, 1), put(6, 1), put(24, (q - 9) // 24)
            elif _divides(3, (q + 1) // 2):
                put(6, 1), put(12, 1), put(24, (q - 17) // 24)
            else:
                put(6, 1), put(8, 1), put(12, 1), put(24, (q - 25) // 24)
        else:
            if _divides(3, (q + 1) // 2):
                put(24, (q + 1) // 24)
            else:
                put(8, 1), put(24, (q - 7) // 24)
    elif name == "A5":
        side(p != 2 and (p == 5 or q % 10 in (1, 9)))
        h_plus, h_minus = (q + 1) // 2, (q - 1) // 2
        if q % 4 == 1:
            if p == 5 and e % 2 == 1:
                put(6, 1), put(60, (q - 5) // 60)
            elif p == 5:
                put(6, 1), put(20, 1), put(60, (q - 25) // 60)
            elif p == 3:
                if _divides(5, h_plus):
                    put(10, 1), put(60, (q - 9) // 60)
                else:
                    put(10, 1), put(12, 1), put(60, (q - 21) // 60)
            elif _divides(15, h_plus):
                put(30, 1), put(60, (q - 29) // 60)
            elif _divides(3, h_plus):
                put(12, 1), put(30, 1), put(60, (q - 41) // 60)
            elif _divides(5, h_plus):
                put(20, 1), put(30, 1), put(60, (q - 49) // 60)
            else:
                put(12, 1), put(20, 1), put(30, 1), put(60, (q - 61) // 60)
        else:
            if _divides(15, h_plus):
                put(60, (q + 1) // 60)
            elif _divides(3, h_plus):
                put(12, 1), put(60, (q - 11) // 60)
            elif _divides(5, h_plus):
                put(20, 1), put(60, (q - 19) // 60)
            else:
                put(12, 1), put(20, 1), put(60, (q - 31) // 60)
    total = sum(length * count for length, count in N.items())
    if total != q + 1:
        raise GroupError(f"{kind} at q={q}: predicted lengths sum to {total}, not {q + 1}")
    return dict(sorted(N.items()))


def admitted_kinds(q: int) -> list[SubgroupKind]:
    """One subgroup kind per admissible parameter choice in PSL(2,q)."""
    p, e = prime_power(q)
    n = math.gcd(2, q - 1)
    kinds = []
    cs = sorted({c for c in range(2, q + 2)
                 if _divides(c, (q + 1) // n) or _divides(c, (q - 1) // n)})
    kinds += [SubgroupKind("cyclic", (c,)) for c in cs]
    kinds += [SubgroupKind("dihedral", (c,)) for c in cs]
    kinds += [SubgroupKind("elem_abelian", (p**f,)) for f in range(1, e + 1)]
    for f in range(1, e + 1):
        qbar = p**f
        for c in range(2, qbar):
            if _divides(c, qbar - 1) and _divides(c, (q - 1) // n):
                kinds.append(SubgroupKind("semidirect", (qbar, c)))
    for m in range(1, e + 1):
        if e % m == 0:
            qbar = p ** (e // m)
            kinds.append(SubgroupKind("psl2", (qbar, m)))
            if m % 2 == 0:
                kinds.append(SubgroupKind("pgl2", (qbar, m)))
    if p != 2 or e % 2 == 0:
        kinds.append(SubgroupKind("A4"))
    if p != 2 and q % 8 in (1, 7):
        kinds.append(SubgroupKind("S4"))
    if p != 2 and (p == 5 or q % 10 in (1, 9)):
        kinds.append(SubgroupKind("A5"))
    return kinds


@dataclass
class OrbitCensusRow:
    q: int
    kind: SubgroupKind
    predicted: dict[int, int]
    observed: dict[int, int]
    subgroup_order: int = 0

    @property
    def match(self):
        return self.predicted == self.observed

    def as_dict(self):
        return {
            "q": self.q,
            "kind": str(self.kind),
            "predicted": {str(k): v for k, v in self.predicted.items()},
            "observed": {str(k): v for k, v in self.observed.items()},
            "match": self.match,
        }


class _PSLContext:
    """Helpers for building subgroups of PSL(2,q) from matrices."""

    def __init__(self, q):
        self.F = _field_for(q)
        self.q = q
        self.rng = random.Random(SEED + q)

    def perm(self, M):
        return mobius_perm(self.F, M)

    def in_psl(self, M):
        return self.F.is_square(mat_det(self.F, M))

    def random_element(self):
        F = self.F
        while True:
            a, b, c = (self.rng.randrange(F.q) for _ in range(3))
            if a == 0:
                continue
            d = F.div(F.add(F.one, F.mul(b, c)), a)
            return self.perm((a, b, c, d))

    def element_of_order(self, c):
        """An element of PSL(2,q) of order exactly c (split or non-split torus)."""
        F, q = self.F, self.q
        n = math.gcd(2, q - 1)
        if _divides(c, (q - 1) // n):
            lam = F.exp((q - 1) // c)
            return self.perm((lam, 0, 0, F.one))
        target = (q + 1) // n
        for t in range(q):
            g = self.perm((0, F.neg(F.one), F.one, t))
            o = g.order()
            if o % c == 0 and _divides(o, target):
                return g ** (o // c)
        raise GroupError(f"no element of order {c} in PSL(2,{q})")

    def group(self, gens, expected):
        G = PermGroup(gens, self.q + 1)
        if G.order() != expected:
            raise GroupError(f"constructed subgroup has order {G.order()}, expected {expected}")
        return G


def _dihedral(ctx: _PSLContext, c):
    F, q = ctx.F, ctx.q
    g = ctx.element_of_order(c)
    ginv = g.inverse()
    if c >= 3:
        x0 = next(x for x in range(q + 1) if g(x) != x)
        src = (x0, g(x0), g(g(x0)))
        for y in range(q + 1):
            dst = (y, ginv(y), ginv(ginv(y)))
            if len(set(dst)) < 3:
                continue
            M = mobius_from_points(F, src, dst)
            if not ctx.in_psl(M):
                continue
            h = ctx.perm(M)
            if (h * h).is_identity() and h * g * h == ginv:
                return ctx.group([g, h], 2 * c)
    else:
        x0 = next(x for x in range(q + 1) if g(x) != x)
        z = next(x for x in range(q + 1) if x not in (x0, g(x0)))
        for y in range(q + 1):
            for w in range(q + 1):
                dst = (y, g(y), w)
                if len(set(dst)) < 3:
                    continue
                M = mobius_from_points(F, (x0, g(x0), z), dst)
                if not ctx.in_psl(M):
                    continue
                h = ctx.perm(M)
                if h != g and not h.is_identity() and (h * h).is_identity() and h * g == g * h:
                    return ctx.group([g, h], 4)
    raise GroupError(f"no dihedral group of order {2 * c} found in PSL(2,{q})")


def _additive_span(F, K, size):
    """A K-subspace of GF(q) with ``size`` elements spanned greedily in code order."""
    span = {0}
    for y in range(1, F.q):
        if len(span) >= size:
            break
        if y in span:
            continue
        new = set(span)
        for k in K:
            ky = F.mul(k, y)
            new |= {F.add(s, ky) for s in span}
        span = new
    if len(span) != size:
        raise GroupError("span construction failed")
    return span


def _translations(ctx, span):
    F = ctx.F
    basis, covered = [], {0}
    for y in sorted(span):
        if y not in covered:
            basis.append(y)
            covered |= {F.add(s, y) for s in covered}
    return [ctx.perm((F.one, y, 0, F.one)) for y in basis]


def _polyhedral(ctx: _PSLContext, orders, group_order, tries=200000):
    """Random (a, b) with |a|, |b|, |ab| = orders generating a group of the given order."""
    a_order, b_order, ab_order = orders
    pool = {a_order: None, b_order: None}
    for _ in range(tries):
        g = ctx.random_element()
        o = g.order()
        if o % b_order == 0 and pool[b_order] is None:
            pool[b_order] = g ** (o // b_order)
            break
    b = pool[b_order]
    if b is None:
        raise GroupError("no element of the required order found")
    for _ in range(tries):
        g = ctx.random_element()
        o = g.order()
        if o % a_order:
            continue
        a = g ** (o // a_order)
        if (a * b).order() != ab_order:
            continue
        G = PermGroup([a, b], ctx.q + 1)
        if G.order() == group_order:
            return G
    raise GroupError(f"random search failed for a subgroup of order {group_order}")


def build_subgroup(q: int, kind: SubgroupKind) -> PermGroup:
    """One subgroup of PSL(2,q) of the requested kind, verified by its order."""
    if q > OBSERVED_Q_BOUND:
        raise GroupError(f"subgroup search bound exceeded (q={q} > {OBSERVED_Q_BOUND})")
    predicted_orbit_census(kind, q)  # validates side conditions
    ctx = _PSLContext(q)
    F = ctx.F
    name, args = kind.name, kind.args
    if name == "cyclic":
        return ctx.group([ctx.element_of_order(args[0])], args[0])
    if name == "dihedral":
        return _dihedral(ctx, args[0])
    if name == "elem_abelian":
        span = _additive_span(F, F.subfield(1), args[0])
        return ctx.group(_translations(ctx, span), args[0])
    if name == "semidirect":
        qbar, c = args
        d = _ord_mod(F.p, c)
        K = F.subfield(d)
        span = _additive_span(F, K, qbar)
        lam = F.exp((F.q - 1) // c)
        gens = _translations(ctx, span) + [ctx.perm((lam, 0, 0, F.one))]
        return ctx.group(gens, qbar * c)
    if name in ("psl2", "pgl2"):
        qbar, m = args
        f = F.e // m
        nu = F.exp((F.q - 1) // (qbar - 1)) if qbar > 2 else F.one
        scale = F.mul(nu, nu) if name == "psl2" else nu
        one = F.one
        mats = [(one, one, 0, one), (0, F.neg(one), one, 0)]
        if scale != one:
            mats.append((scale, 0, 0, one))
        if f > 1:
            # translations by a basis of the subfield
            sub = F.subfield(f)
            mats += [(one, y, 0, one) for y in sub[1:]][: 2 * f]
        return ctx.group([ctx.perm(M) for M in mats], kind.order)
    if name == "A4":
        return _polyhedral(ctx, (2, 3, 3), 12)
    if name == "S4":
        return _polyhedral(ctx, (2, 3, 4), 24)
    return _polyhedral(ctx, (2, 3, 5), 60)


def observed_orbit_census(q: int, kind: SubgroupKind) -> OrbitCensusRow:
    if isinstance(kind, str):
        kind = SubgroupKind.parse(kind)
    predicted = predicted_orbit_census(kind, q)
    U = build_subgroup(q, kind)
    observed = U.orbits().length_counts()
    return OrbitCensusRow(q, kind, predicted, observed, U.order())


def orbit_census(q_max: int) -> list[OrbitCensusRow]:
    rows = []
    for q in range(4, q_max + 1):
        if prime_power(q) is None:
            continue
        for kind in admitted_kinds(q):
            rows.append(observed_orbit_census(q, kind))
    return rows


def kinds_of_order(q: int, order: int) -> list[SubgroupKind | None]:
    """Subgroup kinds of PSL(2,q) with the given order; None stands for the trivial group."""
    p, e = prime_power(q)
    n = math.gcd(2, q - 1)
    found = []
    if order == 1:
        found.append(None)
    candidates = [SubgroupKind("cyclic", (order,))]
    if order % 2 == 0:
        candidates.append(SubgroupKind("dihedral", (order // 2,)))
    for f in range(1, e + 1):
        qbar = p**f
        if order == qbar:
            candidates.append(SubgroupKind("elem_abelian", (qbar,)))
        elif order % qbar == 0:
            candidates.append(SubgroupKind("semidirect", (qbar, order // qbar)))
    for m in range(1, e + 1):
        if e % m == 0:
            candidates.append(SubgroupKind("psl2", (p ** (e // m), m)))
            candidates.append(SubgroupKind("pgl2", (p ** (e // m), m)))
    candidates += [SubgroupKind(x) for x in ("A4", "S4", "A5")]
    for kind in candidates:
        if kind.order != order:
            continue
        try:
            predicted_orbit_census(kind, q)
        except GroupError:
            continue
        found.append(kind)
    return found


def _union_reaches(lengths: dict[int, int], total: int, required: int | None) -> bool:
    """Can ``total`` points be a union of orbits, one of them of length ``required``?"""
    if required is not None:
        if lengths.get(required, 0) < 1:
            return False
        lengths = dict(lengths)
        lengths[required] -= 1
        total -= required
    reach = {0}
    for length, count in lengths.items():
        for _ in range(min(count, total // length)):
            reach |= {x + length for x in reach if x + length <= total}
    return total in reach


def subgroup_orbit_options(q: int, order: int, k: int, orbit_len: int | None) -> list:
    """Kinds of order ``order`` in PSL(2,q) for which a k-set can be a union of orbits.

    With ``orbit_len`` given, one of the orbits must have that length.
    """
    out = []
    for kind in kinds_of_order(q, order):
        lengths = {1: q + 1} if kind is None else predicted_orbit_census(kind, q)
        if _union_reaches(lengths, k, orbit_len):
            out.append(kind)
    return out
