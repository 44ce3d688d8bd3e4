"""Permutations and permutation groups with a deterministic stabilizer chain.

Permutations act on the right: ``(g * h)(x) == h(g(x))``.  Internally the
chain code works on plain image tuples; :class:`Perm` wraps a tuple at the
public boundary.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

HOMOGENEITY_BOUND = 10**7


class PermError(ValueError):
    pass


def _mul(a, b):
    return tuple(map(b.__getitem__, a))


def _inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _is_identity(a):
    return all(i == x for i, x in enumerate(a))


def _first_moved(a):
    for i, x in enumerate(a):
        if i != x:
            return i
    return None


class Perm:
    """A permutation of ``{0..n-1}`` given by its image list."""

    __slots__ = ("images",)

    def __init__(self, images, check=True):
        images = tuple(images)
        if check and sorted(images) != list(range(len(images))):
            raise PermError("images do not form a bijection on {0..n-1}")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(n), check=False)

    @classmethod
    def from_cycles(cls, n, *cycles):
        images = list(range(n))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x]

    def __mul__(self, other):
        if other.degree != self.degree:
            raise PermError("degree mismatch")
        return Perm(_mul(self.images, other.images), check=False)

    def inverse(self):
        return Perm(_inv(self.images), check=False)

    __invert__ = inverse

    def __pow__(self, k):
        result = Perm.identity(self.degree)
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def is_identity(self):
        return _is_identity(self.images)

    def cycles(self):
        seen, out = set(), []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc, j = [i], self.images[i]
            seen.add(i)
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self):
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def fixed_points(self):
        return frozenset(i for i, x in enumerate(self.images) if i == x)

    def __repr__(self):
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Perm<{self.degree}>{body or '()'}"


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple[tuple[int, ...], ...]

    @property
    def lengths(self):
        return sorted(len(o) for o in self.orbits)

    def length_counts(self):
        counts = {}
        for o in self.orbits:
            counts[len(o)] = counts.get(len(o), 0) + 1
        return dict(sorted(counts.items()))


class StabChain:
    """Base, strong generators and explicit transversals, built by Schreier-Sims.

    The construction is deterministic: base points are the given prefix
    followed by the smallest point moved by each new strong generator, and
    Schreier generators are processed in orbit-then-generator order.
    """

    def __init__(self, generators, degree, base_prefix=()):
        self.degree = degree
        self.base = []
        for b in base_prefix:
            if b not in self.base:
                self.base.append(b)
        self.strong = [g for g in generators if not _is_identity(g)]
        for g in self.strong:
            if all(g[b] == b for b in self.base):
                self.base.append(_first_moved(g))
        self.level_gens = [self._fixing(i) for i in range(len(self.base))]
        self.transversals = [self._transversal(i) for i in range(len(self.base))]
        self._schreier_sims()

    def _fixing(self, i):
        prefix = self.base[:i]
        return [g for g in self.strong if all(g[b] == b for b in prefix)]

    def _transversal(self, i):
        beta = self.base[i]
        ident = tuple(range(self.degree))
        trans = {beta: ident}
        queue = [beta]
        gens = self.level_gens[i]
        for pt in queue:
            u = trans[pt]
            for s in gens:
                y = s[pt]
                if y not in trans:
                    trans[y] = _mul(u, s)
                    queue.append(y)
        return trans

    def sift(self, g, start=0):
        for i in range(start, len(self.base)):
            gamma = g[self.base[i]]
            u = self.transversals[i].get(gamma)
            if u is None:
                return g, i
            g = _mul(g, _inv(u))
        return g, len(self.base)

    def _schreier_sims(self):
        i = len(self.base) - 1
        while i >= 0:
            found = None
            trans = self.transversals[i]
            for gamma, u in list(trans.items()):
                for s in self.level_gens[i]:
                    sg = _mul(_mul(u, s), _inv(trans[s[gamma]]))
                    if _is_identity(sg):
                        continue
                    h, j = self.sift(sg, i + 1)
                    if j < len(self.base) or not _is_identity(h):
                        found = (h, j)
                        break
                if found:
                    break
            if found is None:
                i -= 1
                continue
            h, j = found
            if j == len(self.base):
                self.base.append(_first_moved(h))
                self.level_gens.append([])
                self.transversals.append({})
            self.strong.append(h)
            for level in range(i + 1, j + 1):
                self.level_gens[level].append(h)
                self.transversals[level] = self._transversal(level)
            i = j

    def order(self):
        return math.prod(len(t) for t in self.transversals)

    def contains(self, g):
        h, j = self.sift(g)
        return j == len(self.base) and _is_identity(h)

    def basic_orbit_lengths(self):
        return [len(t) for t in self.transversals]

    def stabilizer_generators(self, level):
        """Strong generators fixing the first ``level`` base points."""
        if level >= len(self.base):
            return []
        return list(self.level_gens[level])


class PermGroup:
    """A permutation group given by generators; the chain is built on first use."""

    def __init__(self, generators, degree=None):
        gens = []
        for g in generators:
            if not isinstance(g, Perm):
                g = Perm(g)
            gens.append(g)
        if degree is None:
            if not gens:
                raise PermError("degree required for a group without generators")
            degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise PermError("generators have different degrees")
        self.degree = degree
        self.generators = [g for g in gens if not g.is_identity()]
        self._chain = None
        self._chains = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"

    def _raw(self):
        return [g.images for g in self.generators]

    def chain(self, base_prefix=()):
        base_prefix = tuple(base_prefix)
        with self._lock:
            if not base_prefix:
                if self._chain is None:
                    self._chain = StabChain(self._raw(), self.degree)
                return self._chain
            ch = self._chains.get(base_prefix)
            if ch is None:
                ch = StabChain(self._raw(), self.degree, base_prefix)
                self._chains[base_prefix] = ch
            return ch

    def order(self):
        return self.chain().order()

    def __contains__(self, g):
        if g.degree != self.degree:
            return False
        return self.chain().contains(g.images)

    def _check_point(self, x):
        if not 0 <= x < self.degree:
            raise PermError(f"point {x} out of range 0..{self.degree - 1}")

    def orbit(self, x):
        self._check_point(x)
        seen = {x}
        queue = [x]
        gens = self._raw()
        for pt in queue:
            for g in gens:
                y = g[pt]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def orbits(self, pts=None):
        pts = range(self.degree) if pts is None else pts
        remaining = set()
        for x in pts:
            self._check_point(x)
            remaining.add(x)
        out = []
        for x in sorted(remaining):
            if x in remaining:
                orb = self.orbit(x)
                remaining.difference_update(orb)
                out.append(tuple(p for p in orb))
        return OrbitPartition(tuple(out))

    def is_transitive(self):
        return len(self.orbit(0)) == self.degree

    def stabilizer(self, x):
        self._check_point(x)
        ch = self.chain((x,))
        gens = ch.stabilizer_generators(1)
        return PermGroup([Perm(g, check=False) for g in gens], self.degree)

    def pointwise_stabilizer(self, pts):
        pts = list(pts)
        for x in pts:
            self._check_point(x)
        ch = self.chain(tuple(pts))
        gens = ch.stabilizer_generators(len(dict.fromkeys(pts)))
        return PermGroup([Perm(g, check=False) for g in gens], self.degree)

    def setwise_stabilizer(self, S):
        """{g : S^g = S} by backtracking over base images of the points of S."""
        S = sorted(set(S))
        if not S:
            raise PermError("setwise stabilizer of the empty set")
        for x in S:
            self._check_point(x)
        if len(S) == self.degree:
            return self
        ch = self.chain(tuple(S))
        m = len(S)
        Sset = set(S)
        result = PermGroup([Perm(g, check=False) for g in ch.stabilizer_generators(m)],
                           self.degree)
        ident = tuple(range(self.degree))
        tops = []

        def search(level, g):
            if level == m:
                if not _is_identity(g):
                    tops.append(g)
                return
            for gamma, u in ch.transversals[level].items():
                if g[gamma] in Sset:
                    search(level + 1, _mul(u, g))

        search(0, ident)
        gens = list(result.generators)
        for g in tops:
            if not result.chain().contains(g):
                gens.append(Perm(g, check=False))
                result = PermGroup(gens, self.degree)
        return result

    def is_t_transitive(self, t):
        if not 1 <= t <= self.degree:
            raise PermError(f"t={t} out of range 1..{self.degree}")
        return self.transitivity_degree(limit=t) >= t

    def transitivity_degree(self, limit=None):
        """Largest t (up to ``limit``) with G transitive on ordered t-tuples."""
        n = self.degree
        limit = n if limit is None else min(limit, n)
        prefix = tuple(range(limit))
        ch = self.chain(prefix)
        t = 0
        for i in range(limit):
            if ch.base[i] != i or len(ch.transversals[i]) != n - i:
                break
            t += 1
        return t

    def subset_orbit_count(self, t):
        """Number of orbits on unordered t-subsets (connected components of the generator graph)."""
        n = self.degree
        if not 1 <= t <= n:
            raise PermError(f"t={t} out of range 1..{n}")
        total = math.comb(n, t)
        if total > HOMOGENEITY_BOUND:
            raise PermError(f"C({n},{t}) = {total} exceeds the subset-space bound")
        if not self.generators:
            return total
        subsets = np.array(list(combinations(range(n), t)), dtype=np.int64).reshape(total, t)
        binom = np.array([[math.comb(x, j) for j in range(t + 1)] for x in range(n)],
                         dtype=np.int64)
        cols = np.arange(1, t + 1)
        rows, targets = [], []
        src = np.arange(total)
        for g in self.generators:
            img = np.sort(np.asarray(g.images, dtype=np.int64)[subsets], axis=1)
            rank = binom[img, cols].sum(axis=1)
            rows.append(src)
            targets.append(rank)
        # colex ranks of the sorted source subsets
        order = binom[subsets, cols].sum(axis=1)
        relabel = np.empty(total, dtype=np.int64)
        relabel[order] = src
        r = np.concatenate(rows)
        c = relabel[np.concatenate(targets)]
        graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(total, total))
        ncomp, _ = connected_components(graph, directed=True, connection="weak")
        return int(ncomp)

    def is_t_homogeneous(self, t):
        return self.subset_orbit_count(t) == 1

    def homogeneity_degree(self, limit):
        t = 0
        for s in range(1, min(limit, self.degree) + 1):
            if not self.is_t_homogeneous(s):
                break
            t = s
        return t

    def elements(self, limit=10**6):
        """All elements by closure (for small groups and oracle checks)."""
        ident = tuple(range(self.degree))
        seen = {ident}
        queue = [ident]
        gens = self._raw()
        for x in queue:
            for g in gens:
                y = _mul(x, g)
                if y not in seen:
                    if len(seen) >= limit:
                        raise PermError(f"group has more than {limit} elements")
                    seen.add(y)
                    queue.append(y)
        return [Perm(x, check=False) for x in sorted(seen)]


def group_order(G: PermGroup) -> int:
    return G.order()


def orbits(G: PermGroup, pts=None) -> OrbitPartition:
    return G.orbits(pts)


def point_stabilizer(G: PermGroup, x: int) -> PermGroup:
    return G.stabilizer(x)


def setwise_stabilizer(G: PermGroup, S) -> PermGroup:
    return G.setwise_stabilizer(S)


def is_t_transitive(G: PermGroup, t: int) -> bool:
    return G.is_t_transitive(t)


def is_t_homogeneous(G: PermGroup, t: int) -> bool:
    return G.is_t_homogeneous(t)


def element_fixed_points(g: Perm) -> frozenset:
    return g.fixed_points()


# --- text format: "degree n" then one permutation per line ----------------------

def format_group(G: PermGroup) -> str:
    lines = [f"degree {G.degree}"]
    lines += [" ".join(map(str, g.images)) for g in G.generators]
    return "\n".join(lines) + "\n"


def parse_group(text: str) -> PermGroup:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2 or rows[0][0] != "degree":
        raise PermError("first line must be 'degree n'")
    try:
        n = int(rows[0][1])
        gens = [Perm([int(x) for x in r]) for r in rows[1:]]
    except ValueError as exc:
        raise PermError(f"bad permutation: {exc}") from None
    for g in gens:
        if g.degree != n:
            raise PermError(f"permutation of degree {g.degree} in a degree {n} file")
    return PermGroup(gens, n)


def read_group(path) -> PermGroup:
    with open(path) as fh:
        return parse_group(fh.read())


def write_group(G: PermGroup, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_group(G))
