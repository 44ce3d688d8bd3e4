"""Steiner systems built as block orbits of linear groups."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from itertools import combinations

from .design import Design, DesignError, automorphism_group, derived_design, is_automorphism_group, transitivity_report, verify_design
from .gf import FieldError, field_make, find_primitive_sixth_root, prime_power
from .perm import PermGroup
from .pgl import GroupDescriptor, _PSLContext, make_group

WITT_PARAMS = {23: (8, 759, 8), 11: (6, 132, 5)}  # q -> (k, b, stabilizer order)


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class BaseBlockCertificate:
    q: int
    group: GroupDescriptor
    base_block: tuple[int, ...]
    orbit_length: int
    stabilizer_order: int

    def as_dict(self):
        return {
            "q": self.q,
            "group": self.group.family,
            "base_block": list(self.base_block),
            "orbit_length": self.orbit_length,
            "stabilizer_order": self.stabilizer_order,
        }


def block_orbit(G: PermGroup, block, limit=None) -> list[tuple[int, ...]]:
    """Sorted orbit of a point set under G (breadth-first over generators)."""
    start = tuple(sorted(block))
    seen = {start}
    queue = [start]
    gens = [g.images for g in G.generators]
    for B in queue:
        for g in gens:
            C = tuple(sorted(g[x] for x in B))
            if C not in seen:
                seen.add(C)
                queue.append(C)
                if limit is not None and len(seen) > limit:
                    return sorted(seen)
    return sorted(seen)


def ag_plane_design(d: int) -> Design:
    """Points and planes of AG(d,2): the 3-(2^d,4,1) design."""
    if d < 3:
        raise ConstructionError("AG(d,2) plane design needs d >= 3")
    blocks = []
    for x, y, z in combinations(range(2**d), 3):
        w = x ^ y ^ z
        if w > z:
            blocks.append((x, y, z, w))
    return verify_design(blocks, 3, 2**d, 4, 1)


def spherical_design(q: int, e: int) -> Design:
    """Orbit of the subline GF(q) u {inf} under PGL(2,q^e): a 3-(q^e+1,q+1,1) design."""
    pe = prime_power(q)
    if pe is None or q < 3:
        raise ConstructionError(f"q={q} must be a prime power >= 3")
    if e < 2:
        raise ConstructionError("need e >= 2")
    Q = q**e
    if Q + 1 > 2**16:
        raise ConstructionError(f"q^e + 1 = {Q + 1} exceeds 2^16")
    p, f = pe
    F = field_make(p, f * e)
    base = F.subfield(f) + [Q]
    G = make_group(GroupDescriptor("PGL2", Q))
    return verify_design(block_orbit(G, base), 3, Q + 1, q + 1, 1)


def netto_extension_design(q: int) -> Design:
    """Orbit of {0, 1, eps, inf} under PSL(2,q), eps a primitive sixth root of unity."""
    pe = prime_power(q)
    if pe is None or q % 12 != 7:
        raise ConstructionError(f"q={q} must be a prime power congruent to 7 mod 12")
    F = field_make(*pe)
    eps = find_primitive_sixth_root(F).value
    base = (0, F.one, eps, q)
    G = make_group(GroupDescriptor("PSL2", q))
    return verify_design(block_orbit(G, base), 3, q + 1, 4, 1)


def _cyclic_orders(q):
    n = 2 if q % 2 else 1
    p = prime_power(q)[0]
    cs = {c for c in range(2, q + 2) if ((q + 1) // n) % c == 0 or ((q - 1) // n) % c == 0}
    cs.add(p)
    return sorted(cs, reverse=True)


def _cyclic_subgroup(ctx, c, p):
    if c == p:
        F = ctx.F
        return PermGroup([ctx.perm((F.one, F.one, 0, F.one))], ctx.q + 1)
    return PermGroup([ctx.element_of_order(c)], ctx.q + 1)


def witt_design_via_psl(q: int) -> tuple[Design, BaseBlockCertificate]:
    """The Witt 5-design on q+1 points as one PSL(2,q)-orbit of a base block.

    Candidate base blocks are unions of orbits of cyclic subgroups, tried
    with the subgroup order descending and the unions in lexicographic order.
    """
    if q not in WITT_PARAMS:
        raise ConstructionError("Witt construction is available for q in {11, 23}")
    k, b, stab = WITT_PARAMS[q]
    desc = GroupDescriptor("PSL2", q)
    G = make_group(desc)
    ctx = _PSLContext(q)
    p = prime_power(q)[0]
    tried = set()
    for c in _cyclic_orders(q):
        C = _cyclic_subgroup(ctx, c, p)
        orbs = [o for o in C.orbits().orbits if len(o) <= k]
        for r in range(1, len(orbs) + 1):
            for combo in combinations(range(len(orbs)), r):
                if sum(len(orbs[i]) for i in combo) != k:
                    continue
                block = tuple(sorted(x for i in combo for x in orbs[i]))
                if block in tried:
                    continue
                tried.add(block)
                orbit = block_orbit(G, block, limit=b)
                if len(orbit) != b:
                    continue
                try:
                    D = verify_design(orbit, 5, q + 1, k, 1)
                except DesignError:
                    continue
                order = G.order()
                S = G.setwise_stabilizer(block)
                if S.order() * b != order:
                    raise ConstructionError("orbit-stabilizer check failed")
                cert = BaseBlockCertificate(q, desc, block, b, S.order())
                return D, cert
    raise ConstructionError(f"no base block found for q={q}")


@functools.lru_cache(maxsize=None)
def witt_design(v: int) -> Design:
    """Witt designs on 24, 23, 22, 12 or 11 points."""
    if v in (24, 23, 22):
        D = witt_design_via_psl(23)[0]
        for x in range(24 - v):
            D = derived_design(D, D.v - 1)
        return D
    if v in (12, 11):
        D = witt_design_via_psl(11)[0]
        return derived_design(D, 11) if v == 11 else D
    raise ConstructionError(f"no Witt design on {v} points")


@functools.lru_cache(maxsize=None)
def mathieu_group(v: int) -> PermGroup:
    """Full automorphism group of the Witt design on v points."""
    return automorphism_group(witt_design(v))


def sharpness_check(D: Design, G: PermGroup) -> dict:
    if not is_automorphism_group(D, G):
        raise DesignError("group does not preserve the block set")
    rep = transitivity_report(D, G, homog_bound=0)
    flag = rep.flag_transitive
    return {"flag_transitive": flag, "sharply": flag and G.order() == D.b * D.k}


def _orbit_design(G: PermGroup, block, t, b):
    """G-orbit of ``block`` if it is a Steiner t-design with b blocks, else None.

    Gives up as soon as two blocks share t points.
    """
    start = tuple(sorted(block))
    base = set(start)
    seen = {start}
    queue = [start]
    gens = [g.images for g in G.generators]
    for B in queue:
        for g in gens:
            C = tuple(sorted(g[x] for x in B))
            if C in seen:
                continue
            if len(base.intersection(C)) >= t or len(seen) >= b:
                return None
            seen.add(C)
            queue.append(C)
    if len(seen) != b:
        return None
    try:
        return verify_design(sorted(seen), t, G.degree, len(start), 1)
    except DesignError:
        return None


def forced_designs(G: PermGroup, t: int, k: int) -> list[Design]:
    """All Steiner t-(v,k,1) designs on which a t-homogeneous G is block-transitive.

    The block through a fixed t-set S is invariant under the setwise
    stabilizer G_S, so it is S together with a union of G_S-orbits.
    """
    v = G.degree
    if not t < k < v:
        return []
    if not G.is_t_homogeneous(t):
        raise ConstructionError(f"group is not {t}-homogeneous")
    S = tuple(range(t))
    orbs = G.setwise_stabilizer(S).orbits([x for x in range(v) if x >= t]).orbits
    b = math.comb(v, t) // math.comb(k, t)
    if b * math.comb(k, t) != math.comb(v, t):
        return []
    found = {}
    for r in range(1, len(orbs) + 1):
        for combo in combinations(range(len(orbs)), r):
            if sum(len(orbs[i]) for i in combo) != k - t:
                continue
            block = S + tuple(x for i in combo for x in orbs[i])
            D = _orbit_design(G, block, t, b)
            if D is not None:
                found[D.blocks] = D
    return [found[key] for key in sorted(found)]
