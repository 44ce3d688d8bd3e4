"""Block designs: verification, derived designs, and group actions on flags."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .perm import Perm, PermGroup

COVERAGE_BOUND = 10**8
AUT_MAX_POINTS = 24
AUT_MAX_BLOCKS = 1000


class DesignError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Design:
    t: int
    v: int
    k: int
    lam: int
    blocks: tuple[tuple[int, ...], ...]

    @property
    def b(self):
        return len(self.blocks)

    @cached_property
    def block_index(self):
        return {B: i for i, B in enumerate(self.blocks)}

    @cached_property
    def incidence(self):
        inc = np.zeros((self.v, self.b), dtype=bool)
        for j, B in enumerate(self.blocks):
            inc[list(B), j] = True
        return inc

    def flags(self):
        return [(x, i) for i, B in enumerate(self.blocks) for x in B]

    def image(self, g):
        """The block list moved by a point permutation, canonically sorted."""
        imgs = g.images if isinstance(g, Perm) else g
        return sorted(tuple(sorted(imgs[x] for x in B)) for B in self.blocks)

    def __repr__(self):
        return f"Design({self.t}-({self.v},{self.k},{self.lam}), b={self.b})"


def _binomial_table(v, t):
    return np.array([[math.comb(x, j) for j in range(t + 1)] for x in range(v)], dtype=np.int64)


def _colex_unrank(rank, t):
    out = []
    for j in range(t, 0, -1):
        x = j - 1
        while math.comb(x + 1, j) <= rank:
            x += 1
        out.append(x)
        rank -= math.comb(x, j)
    return tuple(sorted(out))


def coverage_counts(blocks, t, v):
    """Number of blocks through each t-subset, indexed by colex rank."""
    total = math.comb(v, t)
    if total > COVERAGE_BOUND:
        raise DesignError(f"C({v},{t}) = {total} exceeds the coverage bound {COVERAGE_BOUND}")
    arr = np.asarray(blocks, dtype=np.int64)
    k = arr.shape[1]
    binom = _binomial_table(v, t)
    cols = np.arange(1, t + 1)
    counts = np.zeros(total, dtype=np.int64)
    subsets = np.array(list(combinations(range(k), t)), dtype=np.int64)
    # chunk over blocks to keep the rank array modest
    step = max(1, 2_000_000 // max(1, len(subsets)))
    for start in range(0, len(arr), step):
        chunk = arr[start:start + step][:, subsets]  # (blocks, C(k,t), t), rows sorted
        ranks = binom[chunk, cols].sum(axis=2).ravel()
        counts += np.bincount(ranks, minlength=total)
    return counts


def verify_design(blocks, t, v, k, lam=1) -> Design:
    """Validate a t-(v,k,lam) design and return it in canonical form."""
    if not blocks:
        raise DesignError("no blocks")
    if not 1 <= t <= k <= v:
        raise DesignError(f"need 1 <= t <= k <= v, got t={t} k={k} v={v}")
    canon = []
    for B in blocks:
        S = tuple(sorted(set(B)))
        if len(S) != k or len(B) != k:
            raise DesignError(f"block {tuple(B)} does not have {k} distinct points", witness=tuple(B))
        if S[0] < 0 or S[-1] >= v:
            raise DesignError(f"block {S} has points outside 0..{v - 1}", witness=S)
        canon.append(S)
    canon.sort()
    for a, b in zip(canon, canon[1:]):
        if a == b:
            raise DesignError(f"duplicate block {a}", witness=a)
    counts = coverage_counts(canon, t, v)
    bad = np.flatnonzero(counts != lam)
    if len(bad):
        subset = _colex_unrank(int(bad[0]), t)
        n = int(counts[bad[0]])
        raise DesignError(f"{t}-subset {subset} lies in {n} blocks, expected {lam}",
                          witness=(subset, n))
    return Design(t, v, k, lam, tuple(canon))


def params(D: Design) -> tuple[int, int, int]:
    """(b, r, lambda2) read off the incidence counts."""
    inc = D.incidence.astype(np.int64)
    reps = inc.sum(axis=1)
    if reps.min() != reps.max():
        raise DesignError("points lie in different numbers of blocks")
    r = int(reps[0])
    if D.b * D.k != D.v * r:
        raise DesignError("bk != vr")
    pair = inc @ inc.T
    off = pair[~np.eye(D.v, dtype=bool)]
    if D.v > 1 and off.min() != off.max():
        raise DesignError("pairs lie in different numbers of blocks")
    lam2 = int(off[0]) if D.v > 1 else 0
    return D.b, r, lam2


def derived_design(D: Design, x: int) -> Design:
    if D.t < 2:
        raise DesignError("derived designs need t >= 2")
    if not 0 <= x < D.v:
        raise DesignError(f"point {x} out of range")
    relabel = lambda y: y if y < x else y - 1
    blocks = [tuple(relabel(y) for y in B if y != x) for B in D.blocks if x in B]
    return verify_design(blocks, D.t - 1, D.v - 1, D.k - 1, D.lam)


def is_automorphism_group(D: Design, G: PermGroup) -> bool:
    if G.degree != D.v:
        raise DesignError(f"group degree {G.degree} != v = {D.v}")
    return all(D.image(g) == list(D.blocks) for g in G.generators)


@dataclass
class TransitivityReport:
    point_trans_degree: int
    point_homog_degree: int
    block_transitive: bool
    flag_transitive: bool
    flag_orbit_count: int
    block_orbit_count: int
    group_order: int


def _components(n, edges_from, edges_to):
    if n == 0:
        return 0
    if len(edges_from) == 0:
        return n
    r = np.concatenate(edges_from)
    c = np.concatenate(edges_to)
    graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(n, n))
    return int(connected_components(graph, directed=True, connection="weak")[0])


def _block_and_flag_orbits(D: Design, G: PermGroup):
    k = D.k
    idx = D.block_index
    arr = np.asarray(D.blocks, dtype=np.int64)
    bsrc, bdst, fsrc, fdst = [], [], [], []
    blocks_range = np.arange(D.b)
    for g in G.generators:
        img = np.asarray(g.images, dtype=np.int64)[arr]  # (b, k), unsorted
        order = np.argsort(img, axis=1, kind="stable")
        sorted_img = np.take_along_axis(img, order, axis=1)
        targets = np.array([idx[tuple(row)] for row in sorted_img.tolist()], dtype=np.int64)
        bsrc.append(blocks_range)
        bdst.append(targets)
        # position j of block i goes to position pos[i, j] of block targets[i]
        pos = np.empty_like(order)
        np.put_along_axis(pos, order, np.arange(k)[None, :].repeat(D.b, axis=0), axis=1)
        fsrc.append((blocks_range[:, None] * k + np.arange(k)[None, :]).ravel())
        fdst.append((targets[:, None] * k + pos).ravel())
    return _components(D.b, bsrc, bdst), _components(D.b * k, fsrc, fdst)


def transitivity_report(D: Design, G: PermGroup, homog_bound=10**7) -> TransitivityReport:
    if not is_automorphism_group(D, G):
        raise DesignError("group does not preserve the block set")
    block_orbits, flag_orbits = _block_and_flag_orbits(D, G)
    homog = 0
    for s in range(1, D.v // 2 + 1):
        if math.comb(D.v, s) > homog_bound or not G.is_t_homogeneous(s):
            break
        homog = s
    else:
        homog = D.v
    return TransitivityReport(
        point_trans_degree=G.transitivity_degree(),
        point_homog_degree=homog,
        block_transitive=block_orbits == 1,
        flag_transitive=flag_orbits == 1,
        flag_orbit_count=flag_orbits,
        block_orbit_count=block_orbits,
        group_order=G.order(),
    )


class _AutSearch:
    """Backtracking for block-preserving point permutations.

    A partial map is extended one point at a time.  Each mapped point gets a
    bit; a block's mask records which mapped points it contains.  A point can
    only go to a point whose sorted row of incident masks is identical.
    """

    def __init__(self, D: Design):
        self.D = D
        self.v = D.v
        self.inc = D.incidence
        self.block_set = set(D.blocks)
        self.nodes = 0

    def _profiles(self, masks):
        rows = np.sort(np.where(self.inc, masks[None, :], 0), axis=1)
        return [row.tobytes() for row in rows]

    def find(self, pairs):
        """An automorphism extending the list of (x, y) pairs, or None."""
        dom = np.zeros(self.D.b, dtype=np.int64)
        img = np.zeros(self.D.b, dtype=np.int64)
        phi = {}
        for x, y in pairs:
            if x in phi or y in phi.values():
                return None
            pd, pi = self._profiles(dom), self._profiles(img)
            if pd[x] != pi[y]:
                return None
            bit = np.int64(1) << len(phi)
            dom = dom | np.where(self.inc[x], bit, 0)
            img = img | np.where(self.inc[y], bit, 0)
            phi[x] = y
        return self._dfs(phi, dom, img)

    def _dfs(self, phi, dom, img):
        self.nodes += 1
        v = self.v
        if len(phi) == v:
            images = [phi[x] for x in range(v)]
            if all(tuple(sorted(images[x] for x in B)) in self.block_set
                   for B in self.D.blocks):
                return images
            return None
        pd, pi = self._profiles(dom), self._profiles(img)
        used = set(phi.values())
        by_key = {}
        for y in range(v):
            if y not in used:
                by_key.setdefault(pi[y], []).append(y)
        best = None
        for x in range(v):
            if x in phi:
                continue
            cands = by_key.get(pd[x], ())
            if not cands:
                return None
            if best is None or len(cands) < len(best[1]):
                best = (x, cands)
        x, cands = best
        bit = np.int64(1) << len(phi)
        new_dom = dom | np.where(self.inc[x], bit, 0)
        for y in cands:
            phi[x] = y
            found = self._dfs(phi, new_dom, img | np.where(self.inc[y], bit, 0))
            if found is not None:
                return found
            del phi[x]
        return None


def automorphism_group(D: Design, known=()) -> PermGroup:
    """The full automorphism group, level by level over the base 0, 1, ..., v-1.

    ``known`` may hold automorphisms already available; they only speed up
    the search.
    """
    if D.v > AUT_MAX_POINTS or D.b > AUT_MAX_BLOCKS:
        raise DesignError(
            f"automorphism search bound exceeded (v={D.v} > {AUT_MAX_POINTS} "
            f"or b={D.b} > {AUT_MAX_BLOCKS})")
    v = D.v
    search = _AutSearch(D)
    gens = []
    for g in known:
        g = g if isinstance(g, Perm) else Perm(g)
        if D.image(g) != list(D.blocks):
            raise DesignError("a supplied permutation is not an automorphism")
        if not g.is_identity():
            gens.append(g)

    def orbit(point, fixing):
        group_gens = [g for g in gens if all(g(p) == p for p in fixing)]
        if not group_gens:
            return {point}
        return set(PermGroup(group_gens, v).orbit(point))

    for level in range(v - 2, -1, -1):
        prefix = list(range(level))
        reach = orbit(level, prefix)
        dead = set()
        for gamma in range(level + 1, v):
            if gamma in reach or gamma in dead:
                continue
            pairs = [(p, p) for p in prefix] + [(level, gamma)]
            images = search.find(pairs)
            if images is None:
                dead |= orbit(gamma, prefix)
                continue
            gens.append(Perm(images, check=False))
            reach = orbit(level, prefix)
    return PermGroup(gens, v)


# --- text format --------------------------------------------------------------

def format_design(D: Design) -> str:
    lines = [f"{D.t} {D.v} {D.k} {D.lam} {D.b}"]
    lines += [" ".join(map(str, B)) for B in D.blocks]
    return "\n".join(lines) + "\n"


def parse_design(text: str) -> Design:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 5:
        raise DesignError("first line must be 't v k lambda b'")
    try:
        t, v, k, lam, b = map(int, rows[0])
        blocks = [tuple(map(int, r)) for r in rows[1:]]
    except ValueError as exc:
        raise DesignError(f"non-integer entry: {exc}") from None
    if len(blocks) != b:
        raise DesignError(f"header says {b} blocks, file has {len(blocks)}")
    return verify_design(blocks, t, v, k, lam)


def read_design(path) -> Design:
    with open(path) as fh:
        return parse_design(fh.read())


def write_design(D: Design, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_design(D))
