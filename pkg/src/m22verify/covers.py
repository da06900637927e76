"""Covering-group data: manifests, straight-line programs, verified group
loading, subgroup lifting, splitting verdicts, and class-lifting indices.

Group data lives in a directory per group: a key=value manifest, a
generator file (permutation or matrix form), and word files.  A cover's
manifest names its quotient group; on load, the correspondence
"cover generator i maps to quotient generator i" is certified by a
stabilizer-chain order computation on the diagonal action (cover points
plus quotient points): the diagonal group has the cover's order exactly
when the index-wise map extends to a homomorphism.
"""

import os
import random

import numpy as np

from .permgrp import (
    FiniteGroupTable,
    PermGroup,
    PermGrpError,
    Permutation,
    all_subgroups_table,
    conjugacy_class_size,
)


class CoversError(Exception):
    pass


# ---------------------------------------------------------------------------
# straight-line programs
# ---------------------------------------------------------------------------

class SLPWord:
    """A straight-line program over registers; result = last assigned."""

    __slots__ = ("instructions", "result")

    def __init__(self, instructions):
        if not instructions:
            raise CoversError("empty straight-line program")
        defined = set()
        for instr in instructions:
            op = instr[0]
            target = instr[1]
            if op == "gen":
                pass
            elif op == "mul":
                if instr[2] not in defined or instr[3] not in defined:
                    raise CoversError("undefined register in %r" % (instr,))
            elif op in ("inv", "pow"):
                if instr[2] not in defined:
                    raise CoversError("undefined register in %r" % (instr,))
            else:
                raise CoversError("unknown instruction %r" % (instr,))
            defined.add(target)
        self.instructions = tuple(instructions)
        self.result = instructions[-1][1]


def parse_slp(text):
    """Parse the one-instruction-per-line SLP format.

    Lines: 'r3 = g1', 'r3 = r1 * r2', 'r4 = inv r3', 'r5 = pow r1 6'.
    """
    instructions = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) < 3 or parts[1] != "=" or not _is_reg(parts[0]):
            raise CoversError("bad SLP line: %r" % raw)
        target = parts[0]
        rhs = parts[2:]
        if len(rhs) == 1 and rhs[0].startswith("g"):
            instructions.append(("gen", target, int(rhs[0][1:])))
        elif len(rhs) == 3 and rhs[1] == "*" and _is_reg(rhs[0]) and _is_reg(rhs[2]):
            instructions.append(("mul", target, rhs[0], rhs[2]))
        elif len(rhs) == 2 and rhs[0] == "inv" and _is_reg(rhs[1]):
            instructions.append(("inv", target, rhs[1]))
        elif len(rhs) == 3 and rhs[0] == "pow" and _is_reg(rhs[1]):
            instructions.append(("pow", target, rhs[1], int(rhs[2])))
        else:
            raise CoversError("bad SLP line: %r" % raw)
    return SLPWord(instructions)


def _is_reg(token):
    return token.startswith("r") and token[1:].isdigit()


def evaluate_slp(word, gens):
    """Evaluate an SLPWord on a generator list (1-based g1..gk)."""
    regs = {}
    for instr in word.instructions:
        op, target = instr[0], instr[1]
        if op == "gen":
            idx = instr[2]
            if not 1 <= idx <= len(gens):
                raise CoversError("generator g%d out of range" % idx)
            regs[target] = gens[idx - 1]
        elif op == "mul":
            regs[target] = regs[instr[2]] * regs[instr[3]]
        elif op == "inv":
            regs[target] = regs[instr[2]].inverse()
        elif op == "pow":
            regs[target] = regs[instr[2]] ** instr[3]
    return regs[word.result]


def slp_from_word(signed_indices):
    """SLP text for a product of generators; negative index = inverse.

    An empty word is not representable; callers handle identity words.
    """
    if not signed_indices:
        raise CoversError("cannot emit an SLP for the empty word")
    lines = []
    reg = 0
    gen_regs = {}
    acc = None
    for s in signed_indices:
        i = abs(s)
        if i not in gen_regs:
            reg += 1
            gen_regs[i] = "r%d" % reg
            lines.append("%s = g%d" % (gen_regs[i], i))
        term = gen_regs[i]
        if s < 0:
            reg += 1
            lines.append("r%d = inv %s" % (reg, term))
            term = "r%d" % reg
        if acc is None:
            acc = term
        else:
            reg += 1
            lines.append("r%d = %s * %s" % (reg, acc, term))
            acc = "r%d" % reg
    if not lines or lines[-1].split(" = ")[0] != acc:
        reg += 1
        lines.append("r%d = pow %s 1" % (reg, acc))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# matrix elements over small finite fields
# ---------------------------------------------------------------------------

class GFContext:
    """F_q arithmetic, q = p^k <= 2^16; elements encoded as integers whose
    base-p digits are the coefficients in a fixed polynomial basis."""

    def __init__(self, q, modulus=None):
        p = _smallest_prime_factor(q)
        k = 0
        n = q
        while n > 1:
            if n % p:
                raise CoversError("q = %d is not a prime power" % q)
            n //= p
            k += 1
        if q > 1 << 16:
            raise CoversError("field too large: %d" % q)
        self.q, self.p, self.k = q, p, k
        if k == 1:
            self.modulus = None
        else:
            if modulus is None:
                raise CoversError("extension field %d needs a modulus" % q)
            if len(modulus) != k + 1 or modulus[-1] % p != 1:
                raise CoversError("modulus must be monic of degree %d" % k)
            self.modulus = tuple(v % p for v in modulus)
        self._mul_table = None
        if q <= 256:
            table = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
            self._mul_table = table

    def _digits(self, a):
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits):
        v = 0
        for d in reversed(digits):
            v = v * self.p + d
        return v

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        da, db = self._digits(a), self._digits(b)
        return self._encode([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        return self._encode([(-x) % self.p for x in self._digits(a)])

    def _mul_slow(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        # reduce by the monic modulus
        for i in range(len(prod) - 1, self.k - 1, -1):
            c = prod[i]
            if c:
                for j in range(self.k):
                    prod[i - self.k + j] = (
                        prod[i - self.k + j] - c * self.modulus[j]
                    ) % self.p
                prod[i] = 0
        return self._encode(prod[: self.k])

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_slow(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("field inverse of zero")
        # q is small: a^(q-2)
        result, base, e = 1, a, self.q - 2
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result


def _smallest_prime_factor(n):
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


class MatrixElement:
    """Invertible square matrix over a GFContext."""

    __slots__ = ("ctx", "rows", "_key")

    def __init__(self, ctx, rows):
        self.ctx = ctx
        self.rows = tuple(tuple(int(v) % ctx.q for v in r) for r in rows)
        self._key = None

    @property
    def dim(self):
        return len(self.rows)

    @property
    def key(self):
        if self._key is None:
            self._key = (self.ctx.q, self.rows)
        return self._key

    def __eq__(self, other):
        return isinstance(other, MatrixElement) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __mul__(self, other):
        ctx = self.ctx
        n = self.dim
        b = other.rows
        out = []
        for i in range(n):
            row = []
            ar = self.rows[i]
            for j in range(n):
                acc = 0
                for t in range(n):
                    if ar[t]:
                        acc = ctx.add(acc, ctx.mul(ar[t], b[t][j]))
                row.append(acc)
            out.append(row)
        return MatrixElement(ctx, out)

    def is_identity(self):
        return all(
            v == (1 if i == j else 0)
            for i, row in enumerate(self.rows)
            for j, v in enumerate(row)
        )

    def inverse(self):
        ctx = self.ctx
        n = self.dim
        a = [list(r) for r in self.rows]
        b = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                raise CoversError("matrix not invertible")
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
            s = ctx.inv(a[col][col])
            a[col] = [ctx.mul(s, v) for v in a[col]]
            b[col] = [ctx.mul(s, v) for v in b[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    c = a[r][col]
                    a[r] = [ctx.add(v, ctx.neg(ctx.mul(c, w))) for v, w in zip(a[r], a[col])]
                    b[r] = [ctx.add(v, ctx.neg(ctx.mul(c, w))) for v, w in zip(b[r], b[col])]
        return MatrixElement(ctx, b)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = MatrixElement(
            self.ctx,
            [[1 if i == j else 0 for j in range(self.dim)] for i in range(self.dim)],
        )
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def apply_vector(self, vec):
        """Row-vector action: vec * M, vectors as tuples."""
        ctx = self.ctx
        n = self.dim
        return tuple(
            _dot(ctx, vec, tuple(self.rows[t][j] for t in range(n)))
            for j in range(n)
        )


def _dot(ctx, u, v):
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = ctx.add(acc, ctx.mul(a, b))
    return acc


def matrix_permutation_action(gens):
    """Convert matrix generators to permutations of the orbit of all unit
    vectors under the row-vector action (a faithful action for groups
    acting faithfully on the row space, which invertible matrices do)."""
    if not gens:
        raise CoversError("no matrix generators")
    n = gens[0].dim
    seeds = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    index = {}
    order = []
    for s in seeds:
        if s not in index:
            index[s] = len(order)
            order.append(s)
    pos = 0
    while pos < len(order):
        v = order[pos]
        pos += 1
        for g in gens:
            w = g.apply_vector(v)
            if w not in index:
                index[w] = len(order)
                order.append(w)
    perms = []
    for g in gens:
        images = [index[g.apply_vector(v)] for v in order]
        perms.append(Permutation(images))
    return perms


# ---------------------------------------------------------------------------
# generator files and manifests
# ---------------------------------------------------------------------------

def parse_gens_perm(text):
    """Parse 'P <degree> <count>' followed by <count> image lines."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    header = lines[0].split()
    if len(header) != 3 or header[0] != "P":
        raise CoversError("bad permutation file header: %r" % lines[0])
    degree, count = int(header[1]), int(header[2])
    if len(lines) != count + 1:
        raise CoversError("expected %d generator lines, found %d" % (count, len(lines) - 1))
    gens = []
    for ln in lines[1:]:
        images = [int(v) for v in ln.split()]
        if len(images) != degree:
            raise CoversError("generator has wrong degree")
        gens.append(Permutation(images))
    return gens


def dump_gens_perm(gens):
    degree = gens[0].degree
    out = ["P %d %d" % (degree, len(gens))]
    for g in gens:
        out.append(" ".join(str(v) for v in g.image_list()))
    return "\n".join(out) + "\n"


def parse_gens_mat(text):
    """Parse 'M <q> <dim>' [modulus line for prime powers] followed by the
    generator matrices, one row per line; the matrix count is implied."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    header = lines[0].split()
    if len(header) != 3 or header[0] != "M":
        raise CoversError("bad matrix file header: %r" % lines[0])
    q, dim = int(header[1]), int(header[2])
    pos = 1
    modulus = None
    if pos < len(lines) and lines[pos].startswith("modulus"):
        modulus = [int(v) for v in lines[pos].split()[1:]]
        pos += 1
    ctx = GFContext(q, modulus)
    if (len(lines) - pos) % dim != 0 or len(lines) == pos:
        raise CoversError("matrix row count is not a multiple of the dimension")
    gens = []
    while pos < len(lines):
        rows = []
        for _ in range(dim):
            row = [int(v) for v in lines[pos].split()]
            if len(row) != dim:
                raise CoversError("bad matrix row")
            rows.append(row)
            pos += 1
        gens.append(MatrixElement(ctx, rows))
    return gens


def parse_manifest(text):
    out = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CoversError("bad manifest line: %r" % raw)
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


class CoverManifest:
    """Parsed manifest for a group-data directory."""

    def __init__(self, path):
        self.path = path
        with open(os.path.join(path, "manifest")) as fh:
            kv = parse_manifest(fh.read())
        self.kv = kv
        self.name = kv["name"]
        self.kind = kv.get("kind", "perm")
        self.order = int(kv["order"])
        self.degree = int(kv["degree"])
        self.gens_file = kv.get("gens", "gens.perm" if self.kind == "perm" else "gens.mat")
        self.quotient = kv.get("quotient") or None
        self.kernel_order = int(kv.get("kernel_order", "1"))
        self.kernel_central = kv.get("kernel_central", "true") == "true"
        self.kernel_word = kv.get("kernel_word") or None
        self.relators = []
        i = 0
        while ("relator_%d" % i) in kv:
            # value: "<slp path> <kernel power>"
            spec = kv["relator_%d" % i].split()
            self.relators.append((spec[0], int(spec[1])))
            i += 1

    def read(self, rel):
        with open(os.path.join(self.path, rel)) as fh:
            return fh.read()


class LoadedGroup:
    """A verified plain group (no cover structure)."""

    def __init__(self, name, gens, order):
        self.name = name
        self.gens = gens
        self.group = PermGroup(list(gens), gens[0].degree)
        if self.group.order() != order:
            raise CoversError(
                "%s: order mismatch: computed %d, manifest %d"
                % (name, self.group.order(), order)
            )
        self.order = order
        self.degree = gens[0].degree


class LoadedCover:
    """A verified cover with its quotient correspondence.

    diag_gens[i] acts on cover points 0..d-1 and quotient points
    d..d+dq-1; the coordinate projection onto the quotient part is the
    certified homomorphism pi with central (or normal) kernel <z>.
    """

    def __init__(self, name, cover_gens, quotient, kernel_order, kernel_central,
                 order, kernel_word, relator_checks):
        self.name = name
        self.cover_gens = cover_gens
        self.quotient = quotient
        self.c = kernel_order
        self.kernel_central = kernel_central
        self.order = order
        d = cover_gens[0].degree
        dq = quotient.degree
        self.cover_degree = d
        if len(cover_gens) != len(quotient.gens):
            raise CoversError("%s: generator count differs from quotient" % name)
        self.diag_gens = [
            _concat_perm(cg, qg) for cg, qg in zip(cover_gens, quotient.gens)
        ]
        self.group = PermGroup(list(cover_gens), d)
        self.diag = PermGroup(list(self.diag_gens), d + dq)
        if order != kernel_order * quotient.order:
            raise CoversError("%s: order != kernel_order * quotient order" % name)
        if self.group.order() != order:
            raise CoversError(
                "%s: order mismatch: computed %d, manifest %d"
                % (name, self.group.order(), order)
            )
        if self.diag.order() != order:
            raise CoversError(
                "%s: diagonal order %d != %d; generator map is not a "
                "homomorphism onto the quotient" % (name, self.diag.order(), order)
            )
        # kernel generator
        self.z_diag = evaluate_slp(kernel_word, self.diag_gens)
        self.z = _cover_part(self.z_diag, d)
        if not _quotient_part_is_identity(self.z_diag, d):
            raise CoversError("%s: kernel word does not project to identity" % name)
        if _element_order(self.z) != kernel_order:
            raise CoversError("%s: kernel generator order != %d" % (name, kernel_order))
        zpows = {self.z.key}
        zp = self.z
        for _ in range(kernel_order - 2):
            zp = zp * self.z
            zpows.add(zp.key)
        for g in cover_gens:
            conj = g.inverse() * self.z * g
            if kernel_central:
                if conj != self.z:
                    raise CoversError("%s: kernel generator is not central" % name)
            elif conj.key not in zpows and not conj.is_identity():
                raise CoversError("%s: kernel subgroup is not normal" % name)
        for word, expected_power in relator_checks:
            val = evaluate_slp(word, self.diag_gens)
            if not _quotient_part_is_identity(val, d):
                raise CoversError("%s: relator does not vanish in quotient" % name)
            if _cover_part(val, d) != self.z ** (expected_power % kernel_order):
                raise CoversError("%s: relator has wrong kernel value" % name)
        self._lift_chain = None

    def _chain(self):
        if self._lift_chain is None:
            base = tuple(self.cover_degree + p for p in range(self.quotient.degree))
            self._lift_chain = self.diag.chain(base_hint=base)
        return self._lift_chain

    def lift_of(self, h):
        """Some diagonal element whose quotient part equals h (an element
        of the quotient group); raises if h is not in the quotient."""
        chain = self._chain()
        d = self.cover_degree
        cur = h
        reps = []
        for level in chain.levels:
            if level.point < d:
                break
            img = cur(level.point - d) + d
            rep = level.transversal.get(img)
            if rep is None:
                raise CoversError("element is not in the quotient group")
            reps.append(rep)
            cur = cur * _quotient_part(rep, d).inverse()
        if not cur.is_identity():
            raise CoversError("element is not in the quotient group")
        lift = Permutation.identity(d + self.quotient.degree)
        for rep in reversed(reps):
            lift = lift * rep
        if _quotient_part(lift, d) != h:
            raise CoversError("lift reconstruction failed")
        return lift

    def cover_part(self, diag_elt):
        return _cover_part(diag_elt, self.cover_degree)


def _concat_perm(a, b):
    return Permutation._raw(
        np.concatenate([a.images, b.images + len(a.images)]).astype(np.int32)
    )


def _cover_part(diag, d):
    return Permutation._raw(diag.images[:d].copy())


def _quotient_part(diag, d):
    return Permutation._raw((diag.images[d:] - d).astype(np.int32))


def _quotient_part_is_identity(diag, d):
    n = len(diag.images)
    return bool(np.array_equal(diag.images[d:], np.arange(d, n, dtype=np.int32)))


def _element_order(g):
    return g.order()


def load_group(path):
    """Load and verify a group-data directory; returns LoadedGroup or
    LoadedCover depending on the manifest."""
    manifest = CoverManifest(path)
    if manifest.kind == "perm":
        gens = parse_gens_perm(manifest.read(manifest.gens_file))
    elif manifest.kind == "mat":
        gens = matrix_permutation_action(parse_gens_mat(manifest.read(manifest.gens_file)))
    else:
        raise CoversError("unknown group kind %r" % manifest.kind)
    if gens[0].degree != manifest.degree and manifest.kind == "perm":
        raise CoversError("%s: degree mismatch" % manifest.name)
    if manifest.quotient is None:
        return LoadedGroup(manifest.name, gens, manifest.order)
    quotient = load_group(os.path.join(os.path.dirname(path.rstrip("/")), manifest.quotient))
    if isinstance(quotient, LoadedCover):
        raise CoversError("quotient chains are not supported")
    if manifest.kernel_word is None:
        raise CoversError("%s: cover manifest needs kernel_word" % manifest.name)
    kernel_word = parse_slp(manifest.read(manifest.kernel_word))
    relator_checks = [
        (parse_slp(manifest.read(rel)), power) for rel, power in manifest.relators
    ]
    return LoadedCover(
        manifest.name,
        gens,
        quotient,
        manifest.kernel_order,
        manifest.kernel_central,
        manifest.order,
        kernel_word,
        relator_checks,
    )


# ---------------------------------------------------------------------------
# subgroup lifting and splitting
# ---------------------------------------------------------------------------

def lift_subgroup(cover, words, u=None, cap=10**5):
    """Explicit element set of the preimage of U = <words> in the cover.

    Words are evaluated on the diagonal generators; the preimage is the
    closure of the lifted generators together with the kernel generator.
    Returns (elements, order_of_U).
    """
    lifted = [evaluate_slp(w, cover.diag_gens) for w in words]
    d = cover.cover_degree
    qgens = [_quotient_part(g, d) for g in lifted]
    U = PermGroup([g for g in qgens if not g.is_identity()], cover.quotient.degree)
    expected = u
    u = U.order()
    if expected is not None and u != expected:
        raise CoversError("subgroup words generate order %d, expected %d" % (u, expected))
    target = u * cover.c
    if target > cap:
        raise CoversError("preimage too large for explicit enumeration: %d" % target)
    seed = lifted + [cover.z_diag]
    elements = _closure(seed, cap=target)
    if len(elements) != target:
        raise CoversError(
            "preimage closure has size %d, expected %d (wrong words?)"
            % (len(elements), target)
        )
    return elements, u


def _closure(gens, cap):
    ident = Permutation.identity(gens[0].degree)
    seen = {ident.key: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                prod = h * g
                if prod.key not in seen:
                    if len(seen) >= cap:
                        raise CoversError("closure cap exceeded")
                    seen[prod.key] = prod
                    nxt.append(prod)
        frontier = nxt
    return list(seen.values())


def splits(cover, words, u=None, cap=10**5):
    """True iff the preimage of U contains a complement of the kernel
    (a subgroup of order |U| meeting <z> trivially)."""
    elements, u = lift_subgroup(cover, words, u=u, cap=cap)
    d = cover.cover_degree
    if cover.c == 2:
        return _splits_mod2(cover, elements, u)
    return _splits_exhaustive(cover, elements, u)


def _splits_mod2(cover, elements, u):
    """Kernel order 2: split iff z lies outside the subgroup generated by
    all squares and commutators of the preimage (the kernel of the
    largest elementary-abelian 2-quotient)."""
    # generators of the preimage suffice: squares and commutators of a
    # generating set, closed under conjugation, generate P'P^2
    gens = _small_generating_set(elements, u * cover.c)
    seed = []
    for a in gens:
        seed.append(a * a)
        for b in gens:
            seed.append(a.inverse() * b.inverse() * a * b)
    seed = [g for g in seed if not g.is_identity()]
    sub = _normal_closure_in(gens, seed)
    return cover.z_diag not in sub


def _small_generating_set(elements, order, seed=7):
    rng = random.Random(seed)
    pool = [g for g in elements if not g.is_identity()]
    degree = elements[0].degree
    for k in (2, 3, 4, 6):
        for _ in range(20):
            gens = rng.sample(pool, min(k, len(pool)))
            if PermGroup(gens, degree).order() == order:
                return gens
    return pool


def _normal_closure_in(group_gens, seed):
    if not seed:
        return PermGroup([], group_gens[0].degree)
    gens = list(seed)
    seen = {g.key for g in gens}
    current = PermGroup(gens, gens[0].degree)
    while True:
        new = []
        for h in gens:
            for g in group_gens:
                c = g.inverse() * h * g
                if c.key not in seen and c not in current:
                    seen.add(c.key)
                    new.append(c)
        if not new:
            return current
        gens.extend(new)
        current = PermGroup(gens, gens[0].degree)


def _splits_exhaustive(cover, elements, u):
    """Search all subgroups of the preimage for one of order u meeting
    the kernel trivially."""
    table = FiniteGroupTable(elements)
    kernel_indices = set()
    zp = cover.z_diag
    for _ in range(cover.c - 1):
        kernel_indices.add(table.index[zp.key])
        zp = zp * cover.z_diag
    for sub in all_subgroups_table(table):
        if len(sub) == u and not (sub & kernel_indices):
            return True
    return False


# ---------------------------------------------------------------------------
# order-6 subgroup survey
# ---------------------------------------------------------------------------

class WordTable:
    """Breadth-first enumeration of a group with a word for each element
    (in the given generators; negative index = inverse)."""

    def __init__(self, gens, cap=10**6):
        degree = gens[0].degree
        ident = Permutation.identity(degree)
        alphabet = []
        for i, g in enumerate(gens, start=1):
            alphabet.append((g, (i,)))
            alphabet.append((g.inverse(), (-i,)))
        self.words = {ident.key: ()}
        frontier = [ident]
        while frontier:
            nxt = []
            for h in frontier:
                hw = self.words[h.key]
                for g, lb in alphabet:
                    prod = h * g
                    if prod.key not in self.words:
                        if len(self.words) >= cap:
                            raise CoversError("word table cap exceeded")
                        self.words[prod.key] = hw + lb
                        nxt.append(prod)
            frontier = nxt
        self.size = len(self.words)

    def word_of(self, g):
        w = self.words.get(g.key)
        if w is None:
            raise CoversError("element not in the enumerated group")
        return w


def order6_survey(G, word_table=None):
    """Conjugation-orbit representatives of all order-6 subgroups of G.

    Enumerates cyclic C6 subgroups from order-6 elements and S3 subgroups
    from (order-3 element, inverting involution) pairs, deduplicates by
    conjugation orbits of element-key fingerprints, and returns for each
    representative a dict with structure name, generator permutations,
    and (when a word table is supplied) SLP texts for the generators.
    """
    elements = G.elements(cap=10**6)
    by_order = {}
    for g in elements:
        by_order.setdefault(g.order(), []).append(g)
    subgroups = {}
    # cyclic C6
    for g in by_order.get(6, ()):
        members = [g]
        cur = g
        for _ in range(5):
            cur = cur * g
            members.append(cur)
        key = frozenset(m.key for m in members)
        if key not in subgroups:
            subgroups[key] = ("C6", [g])
    # S3: order-3 x with involution t, t x t = x^-1
    invs = by_order.get(2, [])
    if invs:
        imat = np.stack([t.images for t in invs])
        for x in by_order.get(3, ()):
            xinv_images = x.inverse().images
            # conj images: t[x[t[p]]] for each involution row t
            tmp = x.images[imat]
            conj = np.take_along_axis(imat, tmp, axis=1)
            hits = np.nonzero(np.all(conj == xinv_images, axis=1))[0]
            for idx in hits:
                t = invs[int(idx)]
                x2 = x * x
                members = [x, x2, t, x * t, x2 * t]
                key = frozenset([Permutation.identity(G.degree).key]
                                + [m.key for m in members])
                if key not in subgroups:
                    subgroups[key] = ("S3", [x, t])
    # deduplicate by conjugation orbits
    reps = []
    seen = set()
    inv_gens = [(g, g.inverse()) for g in G.generators]
    for key, (name, gens) in subgroups.items():
        if key in seen:
            continue
        reps.append((name, gens))
        frontier = [gens]
        seen.add(_subgroup_key_from_gens(gens, G.degree))
        while frontier:
            nxt = []
            for cur in frontier:
                for g, ginv in inv_gens:
                    conj = [ginv * h * g for h in cur]
                    k = _subgroup_key_from_gens(conj, G.degree)
                    if k not in seen:
                        seen.add(k)
                        nxt.append(conj)
            frontier = nxt
    out = []
    for name, gens in reps:
        entry = {"name": name, "generators": gens}
        if word_table is not None:
            entry["slps"] = [slp_from_word(word_table.word_of(g)) for g in gens]
        out.append(entry)
    out.sort(key=lambda e: e["name"])
    return out


def _subgroup_key_from_gens(gens, degree):
    elems = _closure(gens, cap=7)
    return frozenset(g.key for g in elems)


# ---------------------------------------------------------------------------
# class-lifting indices
# ---------------------------------------------------------------------------

def class_lift_indices(cover, class_specs, seed=0, cap=10**7):
    """For each (element order, cycle type on the quotient) spec: find a
    quotient representative, lift it to an element of the same order in
    the cover (adjusting by kernel powers), and return the ratio of the
    cover class size to the quotient class size."""
    rng = random.Random(seed)
    quotient = cover.quotient.group
    out = []
    base = cover.diag.chain().base()
    for order, ctype in class_specs:
        rep = None
        for _ in range(200000):
            g = quotient.random_element(rng)
            if g.order() == order and g.cycle_type() == ctype:
                rep = g
                break
        if rep is None:
            raise CoversError("no element of order %d and type %r found" % (order, ctype))
        qsize = conjugacy_class_size(quotient, rep, cap=cap)
        lift = cover.lift_of(rep)
        adjusted = None
        zp = Permutation.identity(lift.degree)
        for _ in range(cover.c):
            cand = zp * lift
            if cand.order() == order:
                adjusted = cand
                break
            zp = zp * cover.z_diag
        if adjusted is None:
            raise CoversError(
                "no equal-order lift for the class of order %d" % order
            )
        csize = conjugacy_class_size(cover.diag, adjusted, cap=cap, key_points=base)
        if csize % qsize != 0:
            raise CoversError("cover class size not a multiple of quotient's")
        out.append(csize // qsize)
    return tuple(out)
