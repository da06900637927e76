"""Permutation-group engine.

Stabilizer chains (Schreier-Sims), conjugacy-class sizes by conjugation
search, centralizers with explicit generators, induced actions on
k-subsets, Riemann-Hurwitz genus arithmetic, and a complete subgroup
survey for small groups.  All permutations are 0-based.
"""

from math import comb, gcd

import numpy as np


class PermGrpError(Exception):
    pass


class Permutation:
    """A permutation of {0..n-1}, stored as its image array."""

    __slots__ = ("images", "_key")

    def __init__(self, images):
        arr = np.asarray(images, dtype=np.int32)
        if arr.ndim != 1 or not np.array_equal(np.sort(arr), np.arange(len(arr))):
            raise PermGrpError("images are not a bijection on {0..n-1}")
        arr = arr.copy()
        arr.flags.writeable = False
        self.images = arr
        self._key = None

    @classmethod
    def _raw(cls, arr):
        """Internal constructor skipping bijection validation."""
        self = object.__new__(cls)
        arr.flags.writeable = False
        self.images = arr
        self._key = None
        return self

    @staticmethod
    def identity(n):
        return Permutation._raw(np.arange(n, dtype=np.int32))

    @property
    def key(self):
        if self._key is None:
            self._key = self.images.tobytes()
        return self._key

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return int(self.images[point])

    def __mul__(self, other):
        """Left-to-right composition: (a*b)(x) = b(a(x))."""
        return Permutation._raw(other.images[self.images])

    def inverse(self):
        out = np.empty(len(self.images), dtype=np.int32)
        out[self.images] = np.arange(len(self.images), dtype=np.int32)
        return Permutation._raw(out)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = Permutation.identity(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def is_identity(self):
        return bool(np.array_equal(self.images, np.arange(len(self.images))))

    def image_list(self):
        return [int(v) for v in self.images]

    def cycles(self, include_fixed=False):
        imgs = self.images
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = int(imgs[start])
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = int(imgs[x])
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return CycleType([len(c) for c in self.cycles(include_fixed=True)])

    def order(self):
        o = 1
        for c in self.cycles():
            o = o * len(c) // gcd(o, len(c))
        return o

    def cycle_string(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(%s)" % " ".join(str(x) for x in c) for c in cyc)

    def __repr__(self):
        if self.degree <= 60:
            return "Permutation(%s)" % self.cycle_string()
        return "Permutation(degree=%d, order=%d)" % (self.degree, self.order())


class CycleType:
    """Multiset of cycle lengths summing to the degree."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        p = tuple(sorted((int(v) for v in parts), reverse=True))
        if not all(v >= 1 for v in p):
            raise PermGrpError("cycle lengths must be positive integers")
        self.parts = p

    @property
    def degree(self):
        return sum(self.parts)

    @property
    def cycle_count(self):
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, CycleType) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def canonical_permutation(self):
        """Fill cycles over {0..n-1} in decreasing length order."""
        images = []
        pos = 0
        for length in self.parts:
            images.extend(list(range(pos + 1, pos + length)) + [pos])
            pos += length
        return Permutation(images)

    def __repr__(self):
        runs = []
        for v in self.parts:
            if runs and runs[-1][0] == v:
                runs[-1][1] += 1
            else:
                runs.append([v, 1])
        return ".".join("%d^%d" % (v, m) if m > 1 else "%d" % v for v, m in runs)


def parse_permutation(text, degree=None):
    """Parse cycle notation '(0 1 2)(3 4)' or a whitespace image list."""
    text = text.strip()
    if text.startswith("("):
        body = text.replace(",", " ")
        cycles = []
        pos = 0
        while pos < len(body):
            if body[pos].isspace():
                pos += 1
                continue
            if body[pos] != "(":
                raise PermGrpError("bad cycle notation: %r" % text)
            end = body.find(")", pos)
            if end < 0:
                raise PermGrpError("unbalanced cycle notation: %r" % text)
            cycles.append([int(v) for v in body[pos + 1 : end].split()])
            pos = end + 1
        seen = set()
        for c in cycles:
            for v in c:
                if v in seen:
                    raise PermGrpError("point repeated in cycles: %d" % v)
                seen.add(v)
        n = degree
        if n is None:
            n = max((max(c) for c in cycles if c), default=-1) + 1
        images = list(range(n))
        for c in cycles:
            for i, v in enumerate(c):
                images[v] = c[(i + 1) % len(c)]
        return Permutation(images)
    images = [int(v) for v in text.split()]
    if degree is not None and len(images) != degree:
        raise PermGrpError("expected degree %d, got %d" % (degree, len(images)))
    return Permutation(images)


def parity(perm):
    """'even' or 'odd', from the sign (-1)^(n - #cycles)."""
    n = perm.degree
    c = len(perm.cycles(include_fixed=True))
    return "even" if (n - c) % 2 == 0 else "odd"


def cycle_type_parity(ctype):
    return "even" if (ctype.degree - ctype.cycle_count) % 2 == 0 else "odd"


# ---------------------------------------------------------------------------
# stabilizer chains (deterministic Schreier-Sims)
# ---------------------------------------------------------------------------

class _ChainLevel:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point, identity):
        self.point = point
        self.gens = []
        self.transversal = {point: identity}


class StabilizerChain:
    """Deterministic Schreier-Sims stabilizer chain.

    Every Schreier generator of every level is sifted, so the computed
    order is exact with no randomization.
    """

    def __init__(self, generators, degree, base_hint=()):
        self.degree = degree
        self.levels = []
        self._identity = Permutation.identity(degree)
        for b in base_hint:
            self.levels.append(_ChainLevel(b, self._identity))
        for g in generators:
            if not g.is_identity():
                self._add_generator(0, g)

    def _add_generator(self, idx, g):
        if g.is_identity():
            return
        if idx == len(self.levels):
            moved = int(np.nonzero(g.images != np.arange(self.degree))[0][0])
            self.levels.append(_ChainLevel(moved, self._identity))
        level = self.levels[idx]
        level.gens.append(g)
        # extend the basic orbit; every (coset rep, generator) pair either
        # discovers a new point or yields a Schreier generator to sift
        pending = [(pt, g) for pt in list(level.transversal)]
        while pending:
            pt, h = pending.pop()
            u = level.transversal[pt]
            img = h(pt)
            rep = level.transversal.get(img)
            if rep is None:
                level.transversal[img] = u * h
                pending.extend((img, k) for k in level.gens)
            else:
                s = u * h * rep.inverse()
                if not s.is_identity():
                    residue, _ = self._strip(s, idx + 1)
                    if residue is not None:
                        # the residue fixes base points up to idx, so it is
                        # a strong generator for every level below; add it
                        # one level down and let recursion push it deeper
                        self._add_generator(idx + 1, residue)

    def _strip(self, g, start):
        """Sift g through levels >= start; (residue, level) if it fails to
        reach the identity, else (None, -1)."""
        h = g
        for i in range(start, len(self.levels)):
            level = self.levels[i]
            rep = level.transversal.get(h(level.point))
            if rep is None:
                return h, i
            h = h * rep.inverse()
        if h.is_identity():
            return None, -1
        return h, len(self.levels)

    def order(self):
        n = 1
        for level in self.levels:
            n *= len(level.transversal)
        return n

    def contains(self, g):
        if g.degree != self.degree:
            return False
        residue, _ = self._strip(g, 0)
        return residue is None

    def base(self):
        return [level.point for level in self.levels]

    def random_element(self, rng):
        g = self._identity
        for level in self.levels:
            pts = list(level.transversal.keys())
            g = g * level.transversal[rng.choice(pts)]
        return g

    def iter_elements(self):
        def rec(idx, prefix):
            if idx == len(self.levels):
                yield prefix
                return
            for u in self.levels[idx].transversal.values():
                yield from rec(idx + 1, u * prefix)

        yield from rec(0, self._identity)


class PermGroup:
    """Permutation group given by generators; BSGS built lazily."""

    def __init__(self, generators, degree=None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise PermGrpError("need a degree for the trivial group")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise PermGrpError("generator degrees disagree")
        self.generators = [g for g in gens if not g.is_identity()]
        self.degree = degree
        self._chains_by_base = {}

    def chain(self, base_hint=()):
        key = tuple(base_hint)
        if key not in self._chains_by_base:
            self._chains_by_base[key] = StabilizerChain(
                self.generators, self.degree, base_hint=base_hint
            )
        return self._chains_by_base[key]

    def order(self):
        return self.chain().order()

    def __contains__(self, g):
        return self.chain().contains(g)

    def random_element(self, rng):
        return self.chain().random_element(rng)

    def orbits(self):
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            pos = 0
            while pos < len(orbit):
                pt = orbit[pos]
                pos += 1
                for g in self.generators:
                    img = g(pt)
                    if not seen[img]:
                        seen[img] = True
                        orbit.append(img)
            out.append(sorted(orbit))
        return out

    def is_transitive(self):
        return self.degree > 0 and len(self.orbits()) == 1

    def elements(self, cap=10**6):
        if self.order() > cap:
            raise PermGrpError("group too large to enumerate: %d" % self.order())
        return list(self.chain().iter_elements())

    def stabilizer(self, point):
        """Point stabilizer, generated by strong generators that fix it."""
        chain = self.chain(base_hint=(point,))
        gens = []
        for level in chain.levels[1:]:
            gens.extend(level.gens)
        gens = [g for g in gens if g(point) == point]
        sub = PermGroup(_dedup_perms(gens), self.degree)
        expected = self.order() // len(chain.levels[0].transversal)
        if sub.order() != expected:
            raise PermGrpError("stabilizer construction failed")
        return sub


def _dedup_perms(perms):
    out = []
    seen = set()
    for g in perms:
        if g.key not in seen:
            seen.add(g.key)
            out.append(g)
    return out


def bsgs_order(G):
    return G.order()


def brute_force_order(generators, cap=10**6):
    """Closure size by plain BFS; independent check for small groups."""
    if not generators:
        return 1
    n = generators[0].degree
    ident = Permutation.identity(n)
    seen = {ident.key}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in generators:
                prod = h * g
                if prod.key not in seen:
                    if len(seen) >= cap:
                        raise PermGrpError("closure cap exceeded")
                    seen.add(prod.key)
                    nxt.append(prod)
        frontier = nxt
    return len(seen)


# ---------------------------------------------------------------------------
# conjugation search
# ---------------------------------------------------------------------------

def conjugacy_class_size(G, x, cap=10**7, key_points=None):
    """Size of the conjugation orbit of x under G, by breadth-first search.

    key_points: optional list of points whose images fingerprint an
    element.  A base of the group works (images on a base determine a
    group element uniquely) and keeps the visited-set small for large
    degrees.
    """
    if key_points is None:
        keyfn = lambda h: h.key
    else:
        pts = np.asarray(key_points, dtype=np.int32)
        keyfn = lambda h: h.images[pts].tobytes()
    seen = {keyfn(x)}
    frontier = [x]
    inv_gens = [(g, g.inverse()) for g in G.generators]
    while frontier:
        nxt = []
        for h in frontier:
            for g, ginv in inv_gens:
                conj = ginv * h * g
                k = keyfn(conj)
                if k not in seen:
                    if len(seen) >= cap:
                        raise PermGrpError("conjugacy class cap exceeded")
                    seen.add(k)
                    nxt.append(conj)
        frontier = nxt
    return len(seen)


def centralizer_order(G, x, cap=10**7, key_points=None):
    size = conjugacy_class_size(G, x, cap=cap, key_points=key_points)
    order = G.order()
    if order % size != 0:
        raise PermGrpError("class size does not divide the group order")
    return order // size


def centralizer(G, x, cap=10**7):
    """Centralizer of x in G with explicit generators, via Schreier
    generators of the stabilizer in the conjugation action."""
    ident = Permutation.identity(G.degree)
    transversal = {x.key: ident}
    frontier = [x]
    inv_gens = [(g, g.inverse()) for g in G.generators]
    cgens = []
    cseen = set()
    while frontier:
        nxt = []
        for h in frontier:
            u = transversal[h.key]
            for g, ginv in inv_gens:
                conj = ginv * h * g
                rep = transversal.get(conj.key)
                if rep is not None:
                    s = u * g * rep.inverse()
                    if not s.is_identity() and s.key not in cseen:
                        cseen.add(s.key)
                        cgens.append(s)
                else:
                    if len(transversal) >= cap:
                        raise PermGrpError("conjugacy class cap exceeded")
                    transversal[conj.key] = u * g
                    nxt.append(conj)
        frontier = nxt
    C = PermGroup(cgens, G.degree)
    if C.order() * len(transversal) != G.order():
        raise PermGrpError("centralizer construction failed")
    return C


# ---------------------------------------------------------------------------
# induced action on k-subsets
# ---------------------------------------------------------------------------

def kset_rank(subset):
    """Colexicographic rank of a sorted k-subset."""
    return sum(comb(a, i + 1) for i, a in enumerate(subset))


def kset_unrank(rank, n, k):
    """Inverse of kset_rank over subsets of {0..n-1}."""
    out = []
    for i in range(k, 0, -1):
        a = i - 1
        while comb(a + 1, i) <= rank:
            a += 1
        out.append(a)
        rank -= comb(a, i)
    out.reverse()
    return tuple(out)


def iter_ksubsets(n, k):
    """All k-subsets of {0..n-1} in colexicographic order."""
    if k > n:
        return
    subset = list(range(k))
    while True:
        yield tuple(subset)
        i = 0
        while i + 1 < k and subset[i] + 1 == subset[i + 1]:
            i += 1
        subset[i] += 1
        if subset[i] >= n:
            return
        for j in range(i):
            subset[j] = j


def induced_kset_action(perm, k):
    """The permutation induced on k-subsets, indexed by colex rank."""
    n = perm.degree
    if not 1 <= k <= n:
        raise PermGrpError("k out of range")
    images = [0] * comb(n, k)
    for rank, subset in enumerate(iter_ksubsets(n, k)):
        image = sorted(perm(a) for a in subset)
        images[rank] = kset_rank(image)
    return Permutation(images)


# ---------------------------------------------------------------------------
# Riemann-Hurwitz genus
# ---------------------------------------------------------------------------

class RHGenusError(PermGrpError):
    """Branch data produced a negative or non-integral genus."""

    def __init__(self, two_g_minus_2):
        self.two_g_minus_2 = two_g_minus_2
        super().__init__("inconsistent branch data: 2g-2 = %r" % (two_g_minus_2,))


def rh_genus(n, types):
    """Genus g with 2g - 2 = -2n + sum_i (n - #cycles(type_i))."""
    for t in types:
        if t.degree != n:
            raise PermGrpError("cycle type of wrong degree: %r" % t)
    two_g_minus_2 = -2 * n + sum(n - t.cycle_count for t in types)
    if two_g_minus_2 % 2 != 0 or two_g_minus_2 < -2:
        raise RHGenusError(two_g_minus_2)
    return (two_g_minus_2 + 2) // 2


# ---------------------------------------------------------------------------
# small-group machinery (multiplication tables)
# ---------------------------------------------------------------------------

class FiniteGroupTable:
    """A small group as a multiplication table on element indices.

    Index 0 is the identity.  Built from an explicit full element list.
    """

    MAX_SIZE = 5000

    def __init__(self, elements):
        m = len(elements)
        if m > self.MAX_SIZE:
            raise PermGrpError("group too large for table machinery: %d" % m)
        ident = Permutation.identity(elements[0].degree)
        elts = [ident] + [g for g in _dedup_perms(elements) if not g.is_identity()]
        if len(elts) != m:
            raise PermGrpError("element list has duplicates or lacks identity")
        self.elements = elts
        self.index = {g.key: i for i, g in enumerate(elts)}
        emat = np.stack([g.images for g in elts])  # m x n
        n = emat.shape[1]
        table = np.empty((m, m), dtype=np.int32)
        for j in range(m):
            rows = emat[j][emat]  # images of elts[i] * elts[j] for all i
            for i in range(m):
                table[i, j] = self.index[rows[i].astype(np.int32).tobytes()]
        self.table = table
        inv = np.empty(m, dtype=np.int32)
        for i in range(m):
            inv[i] = int(np.nonzero(table[i] == 0)[0][0])
        self.inv = inv

    @property
    def size(self):
        return len(self.elements)

    def element_order(self, i):
        o = 1
        x = int(i)
        while x != 0:
            x = int(self.table[x, i])
            o += 1
        return o

    def conj_map(self, g):
        """Index array c with c[x] = index of g^-1 * x * g."""
        row = self.table[self.inv[g], :]
        return self.table[row, g]

    def closure(self, seed):
        """Subgroup generated by the given element indices (sorted array)."""
        s = np.unique(np.fromiter((int(v) for v in seed), dtype=np.int32))
        s = np.unique(np.concatenate([s, np.array([0], dtype=np.int32)]))
        while True:
            prods = np.unique(self.table[np.ix_(s, s)])
            if len(prods) == len(s):
                return prods
            s = prods

    def subgroup_conjugates(self, s, gen_indices):
        """Conjugation orbit of the subgroup s under the listed generators;
        a set of frozensets of indices."""
        arr = np.asarray(s, dtype=np.int32)
        start = frozenset(int(v) for v in arr)
        maps = [self.conj_map(g) for g in gen_indices]
        seen = {start}
        frontier = [arr]
        while frontier:
            nxt = []
            for cur in frontier:
                for cmap in maps:
                    img = np.sort(cmap[cur])
                    key = frozenset(int(v) for v in img)
                    if key not in seen:
                        seen.add(key)
                        nxt.append(img)
            frontier = nxt
        return seen

    def is_normal(self, sub):
        s = np.fromiter((int(v) for v in sorted(sub)), dtype=np.int32)
        key = frozenset(int(v) for v in s)
        for g in range(self.size):
            img = self.table[self.table[self.inv[g], s], g]
            if frozenset(int(v) for v in img) != key:
                return False
        return True

    def quotient_table(self, normal_sub):
        """Quotient by a normal subgroup, as a _RawTable."""
        w = np.fromiter((int(v) for v in sorted(normal_sub)), dtype=np.int32)
        m = self.size
        coset_id = np.full(m, -1, dtype=np.int32)
        reps = []
        for x in range(m):
            if coset_id[x] >= 0:
                continue
            members = self.table[w, x]
            coset_id[members] = len(reps)
            reps.append(int(members.min()))
        q = len(reps)
        table = np.empty((q, q), dtype=np.int32)
        for a in range(q):
            for b in range(q):
                table[a, b] = coset_id[self.table[reps[a], reps[b]]]
        e = int(coset_id[0])
        if e != 0:
            # swap so the identity coset sits at index 0
            swap = np.arange(q, dtype=np.int32)
            swap[0], swap[e] = e, 0
            table = swap[table[np.ix_(swap, swap)]]
        return _RawTable(table)


class _RawTable:
    """Bare multiplication table with identity at index 0."""

    def __init__(self, table):
        self.table = table

    @property
    def size(self):
        return int(self.table.shape[0])

    def element_order(self, i):
        o = 1
        x = int(i)
        while x != 0:
            x = int(self.table[x, i])
            o += 1
        return o

    def closure(self, seed):
        s = np.unique(np.fromiter((int(v) for v in seed), dtype=np.int32))
        s = np.unique(np.concatenate([s, np.array([0], dtype=np.int32)]))
        while True:
            prods = np.unique(self.table[np.ix_(s, s)])
            if len(prods) == len(s):
                return prods
            s = prods

    def _inv(self, g):
        return int(np.nonzero(self.table[g] == 0)[0][0])

    def is_normal(self, sub):
        s = np.fromiter((int(v) for v in sorted(sub)), dtype=np.int32)
        key = frozenset(int(v) for v in s)
        for g in range(self.size):
            img = self.table[self.table[self._inv(g), s], g]
            if frozenset(int(v) for v in img) != key:
                return False
        return True

    def is_cyclic(self):
        m = self.size
        return any(self.element_order(i) == m for i in range(m))

    def is_metacyclic(self):
        """Has a cyclic normal subgroup with cyclic quotient.  The trivial
        subgroup counts, so cyclic groups qualify."""
        m = self.size
        if self.is_cyclic():
            return True
        seen = set()
        for i in range(m):
            c = self.closure([i])
            key = frozenset(int(v) for v in c)
            if key in seen:
                continue
            seen.add(key)
            if not self.is_normal(key):
                continue
            # with c normal and cyclic, the quotient is cyclic iff some
            # single coset generates it, i.e. <c, x> is everything
            for x in range(m):
                if len(self.closure(list(c) + [x])) == m:
                    return True
        return False


def group_table(G, cap=FiniteGroupTable.MAX_SIZE):
    """Multiplication table of a PermGroup (order capped)."""
    order = G.order()
    if order > cap:
        raise PermGrpError("group too large for table machinery: %d" % order)
    return FiniteGroupTable(G.elements(cap=cap))


class SubgroupClass:
    """A conjugacy class of subgroups inside a FiniteGroupTable group."""

    __slots__ = ("table", "rep", "order", "class_size")

    def __init__(self, table, rep, class_size):
        self.table = table
        self.rep = rep  # sorted numpy index array
        self.order = len(rep)
        self.class_size = class_size

    def rep_permutations(self):
        return [self.table.elements[int(i)] for i in self.rep]

    def rep_group(self):
        perms = self.rep_permutations()
        return PermGroup([g for g in perms if not g.is_identity()], perms[0].degree)

    def element_order_histogram(self):
        hist = {}
        for i in self.rep:
            o = self.table.element_order(int(i))
            hist[o] = hist.get(o, 0) + 1
        return hist

    def structure_name(self):
        return small_group_name(self.order, self.element_order_histogram())

    def orbit_lengths(self):
        """Orbit lengths of the representative subgroup on all points of
        the ambient permutation domain."""
        perms = self.rep_permutations()
        degree = perms[0].degree
        seen = [False] * degree
        lengths = []
        for start in range(degree):
            if seen[start]:
                continue
            orbit = {start}
            frontier = [start]
            while frontier:
                pt = frontier.pop()
                for g in perms:
                    img = g(pt)
                    if img not in orbit:
                        orbit.add(img)
                        frontier.append(img)
            for pt in orbit:
                seen[pt] = True
            lengths.append(len(orbit))
        return sorted(lengths)

    def __repr__(self):
        return "SubgroupClass(order=%d, name=%s, class_size=%d)" % (
            self.order,
            self.structure_name(),
            self.class_size,
        )


_SMALL_NAMES = {
    (1, ()): "C1",
    (2, ((2, 1),)): "C2",
    (3, ((3, 2),)): "C3",
    (4, ((2, 1), (4, 2))): "C4",
    (4, ((2, 3),)): "V4",
    (5, ((5, 4),)): "C5",
    (6, ((2, 1), (3, 2), (6, 2))): "C6",
    (6, ((2, 3), (3, 2))): "S3",
    (7, ((7, 6),)): "C7",
    (8, ((2, 1), (4, 2), (8, 4))): "C8",
    (8, ((2, 7),)): "C2^3",
    (8, ((2, 5), (4, 2))): "D4",
    (8, ((2, 3), (4, 4))): "C4xC2",
    (8, ((2, 1), (4, 6))): "Q8",
    (12, ((2, 3), (3, 8))): "A4",
    (12, ((2, 7), (3, 2), (6, 2))): "D6",
    (12, ((2, 1), (3, 2), (4, 6), (6, 2))): "Dic3",
    (12, ((2, 1), (3, 2), (4, 2), (6, 2), (12, 4))): "C12",
    (21, ((3, 14), (7, 6),)): "C7:C3",
    (24, ((2, 9), (3, 8), (4, 6))): "S4",
    (168, ((2, 21), (3, 56), (4, 42), (7, 48))): "PSL(3,2)",
}


def small_group_name(order, hist):
    """Best-effort structure name from the element-order histogram."""
    key = (order, tuple(sorted((o, c) for o, c in hist.items() if o > 1)))
    return _SMALL_NAMES.get(key, "G%d" % order)


def _is_prime_power(n):
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


def _cyclic_candidates(table):
    """One generator index per cyclic subgroup of prime-power order.

    Every finite group is generated by elements of prime-power order
    (each element is a product of its own power-coprime components), so
    adjoining these suffices to reach every subgroup.
    """
    candidates = []
    seen = set()
    for i in range(1, table.size):
        if not _is_prime_power(table.element_order(i)):
            continue
        c = table.closure([i])
        key = frozenset(int(v) for v in c)
        if key not in seen:
            seen.add(key)
            candidates.append(i)
    return candidates


def all_subgroups_small(G, cap=10**4):
    """All subgroups of G up to conjugacy, for |G| <= cap.

    Search by closure extension: starting from the trivial subgroup,
    repeatedly adjoin one element of prime-power order; each subgroup is
    reachable this way.  New subgroups are deduplicated by their full
    conjugation orbit.
    """
    order = G.order()
    if order > cap:
        raise PermGrpError("subgroup survey capped at %d" % cap)
    table = group_table(G, cap=min(cap, FiniteGroupTable.MAX_SIZE))
    gen_indices = [table.index[g.key] for g in G.generators]
    candidates = _cyclic_candidates(table)

    seen = {}
    classes = []

    def register(s):
        key = frozenset(int(v) for v in s)
        if key in seen:
            return None
        orbit = table.subgroup_conjugates(s, gen_indices)
        cls = SubgroupClass(
            table, np.fromiter(sorted(key), dtype=np.int32, count=len(key)),
            len(orbit),
        )
        idx = len(classes)
        classes.append(cls)
        for member in orbit:
            seen[member] = idx
        return cls

    queue = [register(np.array([0], dtype=np.int32))]
    while queue:
        cls = queue.pop()
        if cls.order == order:
            continue
        hset = set(int(v) for v in cls.rep)
        for g in candidates:
            if g in hset:
                continue
            new_cls = register(table.closure(list(cls.rep) + [g]))
            if new_cls is not None:
                queue.append(new_cls)
    classes.sort(
        key=lambda c: (c.order, sorted(c.element_order_histogram().items()))
    )
    return classes


def all_subgroups_table(table):
    """Every subgroup (not just up to conjugacy) of a table group, as
    frozensets of indices; intended for small orders."""
    candidates = _cyclic_candidates(table)
    found = {frozenset([0])}
    queue = [frozenset([0])]
    while queue:
        h = queue.pop()
        if len(h) == table.size:
            continue
        for g in candidates:
            if g in h:
                continue
            k = frozenset(int(v) for v in table.closure(list(h) + [g]))
            if k not in found:
                found.add(k)
                queue.append(k)
    return found


def decomposition_plausible(H, p, cap=10**4):
    """True iff H has a normal p-subgroup W (possibly trivial) with H/W
    metacyclic."""
    if isinstance(H, SubgroupClass):
        table = FiniteGroupTable(H.rep_permutations())
    elif isinstance(H, PermGroup):
        table = group_table(H, cap=min(cap, FiniteGroupTable.MAX_SIZE))
    elif isinstance(H, FiniteGroupTable):
        table = H
    else:
        raise PermGrpError("unsupported subgroup representation")
    normal_psubs = [frozenset([0])]
    if table.size % p == 0:
        for key in all_subgroups_table(table):
            size = len(key)
            if size == 1:
                continue
            q = size
            while q % p == 0:
                q //= p
            if q == 1 and table.is_normal(key):
                normal_psubs.append(key)
    for w in normal_psubs:
        if len(w) == 1:
            quotient = _RawTable(table.table)
        else:
            quotient = table.quotient_table(w)
        if quotient.is_metacyclic():
            return True
    return False


def element_mapping(G, src, dst):
    """Some element of G mapping src to dst, or None."""
    ident = Permutation.identity(G.degree)
    reps = {src: ident}
    frontier = [src]
    while frontier:
        nxt = []
        for pt in frontier:
            for g in G.generators:
                img = g(pt)
                if img not in reps:
                    reps[img] = reps[pt] * g
                    nxt.append(img)
        frontier = nxt
    return reps.get(dst)


def derived_subgroup_order(G):
    """Order of the commutator subgroup (closure of generator commutators
    under conjugation by G)."""
    gens = []
    seen = set()
    for a in G.generators:
        for b in G.generators:
            c = a.inverse() * b.inverse() * a * b
            if not c.is_identity() and c.key not in seen:
                seen.add(c.key)
                gens.append(c)
    if not gens:
        return 1
    current = PermGroup(gens, G.degree)
    while True:
        new_gens = []
        for h in list(gens):
            for g in G.generators:
                c = g.inverse() * h * g
                if c.key not in seen and c not in current:
                    seen.add(c.key)
                    new_gens.append(c)
        if not new_gens:
            return current.order()
        gens.extend(new_gens)
        current = PermGroup(gens, G.degree)


def is_perfect(G):
    return derived_subgroup_order(G) == G.order()


def stabilizer_orbit_lengths(G, point):
    """Orbit lengths of Stab_G(point) on all points; G must be transitive."""
    if not G.is_transitive():
        raise PermGrpError("group is not transitive")
    return sorted(len(o) for o in G.stabilizer(point).orbits())


# ---------------------------------------------------------------------------
# reference constructions on 8 points
# ---------------------------------------------------------------------------

def affine_group_8():
    """AGL(3,2) acting on the 8 vectors of F_2^3 (bit-encoded points)."""

    def linear(mat):
        images = []
        for v in range(8):
            w = 0
            for row in range(3):
                bit = 0
                for col in range(3):
                    bit ^= mat[row][col] & (v >> col)
                w |= (bit & 1) << row
            images.append(w)
        return Permutation(images)

    transvection = linear([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    cycle = linear([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    translation = Permutation([v ^ 1 for v in range(8)])
    G = PermGroup([transvection, cycle, translation])
    if G.order() != 1344:
        raise PermGrpError("affine group construction failed")
    return G
