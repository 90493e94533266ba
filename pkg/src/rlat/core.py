"""Finite algebras in the involutive residuated lattice signature.

An algebra is stored as the signature (join, fusion, neg, 1) over elements
0..n-1; meet, residual and 0 are term-derived and never supplied. Order
relations are kept as int bitmasks: bit y of row x is set iff x R y.
"""

from dataclasses import dataclass
from functools import cached_property


def bits(mask):
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements):
    m = 0
    for x in elements:
        m |= 1 << x
    return m


class Report:
    """Named check verdicts, each with the first failing tuple if any."""

    def __init__(self):
        self.checks = []

    def add(self, name, ok, witness=None):
        self.checks.append((name, bool(ok), None if ok else witness))

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.checks)

    def failures(self):
        return [(name, witness) for name, ok, witness in self.checks if not ok]

    def witness(self, name):
        for check_name, _, witness in self.checks:
            if check_name == name:
                return witness
        raise KeyError(name)

    def lines(self, names=None):
        out = []
        for name, ok, witness in self.checks:
            if ok:
                out.append("%s: pass" % name)
            elif witness is None:
                out.append("%s: FAIL" % name)
            else:
                shown = tuple(names[w] if names else w for w in witness)
                out.append("%s: FAIL at (%s)" % (name, ", ".join(map(str, shown))))
        return out


# AxiomReport is a Report whose check names are the axiom names below.
AxiomReport = Report

AXIOM_NAMES = (
    "join commutative",
    "join associative",
    "join idempotent",
    "fusion commutative",
    "fusion associative",
    "fusion unit",
    "fusion idempotent",
    "involution",
    "residuation",
    "fusion distributes over join",
)


class FiniteInRL:
    """Finite algebra (names, one, neg, join, fusion); immutable once built.

    Structural well-formedness (shapes, ranges, distinct names) is enforced
    here and raises ValueError; the equational axioms are checked separately
    by validate().
    """

    def __init__(self, names, one, neg, join, fusion):
        self.names = list(names)
        self.n = len(self.names)
        n = self.n
        if n < 1:
            raise ValueError("empty carrier")
        if len(set(self.names)) != n:
            raise ValueError("duplicate element names")
        if not all(isinstance(t, str) and t and not t.isspace() for t in self.names):
            raise ValueError("element names must be nonempty tokens")
        if not (0 <= one < n):
            raise ValueError("unit out of range")
        self.one = one
        self.neg = list(neg)
        if len(self.neg) != n or any(not (0 <= v < n) for v in self.neg):
            raise ValueError("neg must map all %d elements into range" % n)
        self.join = [list(row) for row in join]
        self.fusion = [list(row) for row in fusion]
        for label, table in (("join", self.join), ("fusion", self.fusion)):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError("%s table is not %dx%d" % (label, n, n))
            if any(not (0 <= v < n) for row in table for v in row):
                raise ValueError("%s table entry out of range" % label)
        self.index = {name: i for i, name in enumerate(self.names)}

    def __eq__(self, other):
        if not isinstance(other, FiniteInRL):
            return NotImplemented
        return (self.names == other.names and self.one == other.one
                and self.neg == other.neg and self.join == other.join
                and self.fusion == other.fusion)

    def __repr__(self):
        return "FiniteInRL(n=%d, one=%s)" % (self.n, self.names[self.one])

    def element(self, name):
        if name not in self.index:
            raise ValueError("unknown element %r" % name)
        return self.index[name]

    @cached_property
    def zero(self):
        return self.neg[self.one]

    def leq(self, x, y):
        return self.join[x][y] == y

    def mleq(self, x, y):
        return self.fusion[x][y] == x

    @cached_property
    def lat_up(self):
        # row x: elements above x in the lattice order
        return tuple(mask_of(y for y in range(self.n) if self.join[x][y] == y)
                     for x in range(self.n))

    @cached_property
    def lat_dn(self):
        return _transpose(self.lat_up)

    @cached_property
    def mon_up(self):
        # row x: elements above x in the monoidal order (x.y = x)
        return tuple(mask_of(y for y in range(self.n) if self.fusion[x][y] == x)
                     for x in range(self.n))

    @cached_property
    def mon_dn(self):
        return _transpose(self.mon_up)

    @cached_property
    def meet(self):
        neg = self.neg
        return [[neg[self.join[neg[x]][neg[y]]] for y in range(self.n)]
                for x in range(self.n)]

    @cached_property
    def imp(self):
        # residual: x -> y = neg(neg(y) . x)
        neg = self.neg
        return [[neg[self.fusion[neg[y]][x]] for y in range(self.n)]
                for x in range(self.n)]

    @cached_property
    def pos_cone(self):
        return self.lat_up[self.one]

    @cached_property
    def neg_cone(self):
        return self.lat_dn[self.one]

    @cached_property
    def lat_covers(self):
        return _covers(self.lat_up)

    @cached_property
    def mon_covers(self):
        return _covers(self.mon_up)

    def block_bounds(self, x):
        """Bottom and top of the Boolean interval containing x."""
        return self.fusion[x][self.neg[x]], self.join[x][self.neg[x]]


def _transpose(rows):
    n = len(rows)
    cols = [0] * n
    for x in range(n):
        row = rows[x]
        for y in bits(row):
            cols[y] |= 1 << x
    return tuple(cols)


def _covers(up):
    """Cover pairs (x, y) of the preorder given by up-set masks."""
    n = len(up)
    out = []
    for x in range(n):
        strict = up[x] & ~(1 << x)
        for y in bits(strict):
            # some z with x < z < y disqualifies the pair
            if not any((up[z] >> y) & 1 for z in bits(strict & ~(1 << y))):
                out.append((x, y))
    return tuple(out)


@dataclass
class OrderPair:
    lattice_leq: tuple
    monoidal_leq: tuple
    lattice_covers: tuple
    monoidal_covers: tuple


@dataclass
class DerivedOps:
    zero: int
    meet: list
    residual: list
    positive_cone: int
    negative_cone: int


def derived_operations(alg):
    """Both orders plus the term-derived operations of an algebra."""
    orders = OrderPair(alg.lat_up, alg.mon_up, alg.lat_covers, alg.mon_covers)
    ops = DerivedOps(alg.zero, alg.meet, alg.imp, alg.pos_cone, alg.neg_cone)
    return orders, ops


def validate(alg):
    """Check every defining axiom; returns an AxiomReport.

    The first failing tuple (by element index, scanned lexicographically) is
    recorded per axiom. All checks passing certifies membership in the class.
    """
    n = alg.n
    jn, fu, ng = alg.join, alg.fusion, alg.neg
    rep = Report()

    def first_pair(pred):
        for x in range(n):
            for y in range(n):
                if not pred(x, y):
                    return (x, y)
        return None

    def first_triple(pred):
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if not pred(x, y, z):
                        return (x, y, z)
        return None

    w = first_pair(lambda x, y: jn[x][y] == jn[y][x])
    rep.add("join commutative", w is None, w)
    w = first_triple(lambda x, y, z: jn[jn[x][y]][z] == jn[x][jn[y][z]])
    rep.add("join associative", w is None, w)
    w = next(((x,) for x in range(n) if jn[x][x] != x), None)
    rep.add("join idempotent", w is None, w)

    w = first_pair(lambda x, y: fu[x][y] == fu[y][x])
    rep.add("fusion commutative", w is None, w)
    w = first_triple(lambda x, y, z: fu[fu[x][y]][z] == fu[x][fu[y][z]])
    rep.add("fusion associative", w is None, w)
    w = next(((x,) for x in range(n) if fu[alg.one][x] != x), None)
    rep.add("fusion unit", w is None, w)
    w = next(((x,) for x in range(n) if fu[x][x] != x), None)
    rep.add("fusion idempotent", w is None, w)

    w = next(((x,) for x in range(n) if ng[ng[x]] != x), None)
    rep.add("involution", w is None, w)

    zero = ng[alg.one]

    def resid(x, y):
        below_neg = jn[x][ng[y]] == ng[y]
        prod_below_zero = jn[fu[x][y]][zero] == zero
        sym = jn[y][ng[x]] == ng[x]
        return below_neg == prod_below_zero == sym

    w = first_pair(resid)
    rep.add("residuation", w is None, w)

    w = first_triple(lambda x, y, z: fu[x][jn[y][z]] == jn[fu[x][y]][fu[x][z]])
    rep.add("fusion distributes over join", w is None, w)
    return rep


def elementary_properties(alg):
    """The seven elementary consequences, checked exhaustively."""
    n = alg.n
    rep = Report()
    mt, jn, fu, ng = alg.meet, alg.join, alg.fusion, alg.neg

    w = None
    for x in range(n):
        for y in range(n):
            if alg.leq(x, y) and not alg.leq(ng[y], ng[x]):
                w = (x, y)
                break
        if w:
            break
    rep.add("negation antitone", w is None, w)

    w = None
    for x in range(n):
        for y in range(n):
            m = mt[x][y]
            lower = alg.leq(m, x) and alg.leq(m, y)
            greatest = all(alg.leq(z, m) for z in range(n)
                           if alg.leq(z, x) and alg.leq(z, y))
            if not (lower and greatest):
                w = (x, y)
                break
        if w:
            break
    rep.add("meet is the lattice infimum", w is None, w)

    w = next(((x, y) for x in range(n) for y in range(n)
              if ng[jn[x][y]] != mt[ng[x]][ng[y]]
              or ng[mt[x][y]] != jn[ng[x]][ng[y]]), None)
    rep.add("De Morgan", w is None, w)

    w = next(((x, y) for x in range(n) for y in range(n)
              if not (alg.leq(mt[x][y], fu[x][y]) and alg.leq(fu[x][y], jn[x][y]))),
             None)
    rep.add("fusion between meet and join", w is None, w)

    pos = list(bits(alg.pos_cone))
    w = next(((x, y) for x in pos for y in pos if fu[x][y] != jn[x][y]), None)
    rep.add("fusion is join on the positive cone", w is None, w)

    neg_els = list(bits(alg.neg_cone))
    w = next(((x, y) for x in neg_els for y in neg_els if fu[x][y] != mt[x][y]), None)
    rep.add("fusion is meet on the negative cone", w is None, w)

    consts_ok = (alg.zero == ng[alg.one] and ng[alg.zero] == alg.one
                 and alg.leq(alg.zero, alg.one))
    rep.add("constants 0 = neg 1 <= 1 = neg 0", consts_ok, (alg.one,))
    return rep


def _block_size(alg, x):
    bottom, top = alg.block_bounds(x)
    return bin(alg.mon_up[bottom] & alg.mon_dn[top]).count("1")


def _fingerprints(alg):
    out = []
    for x in range(alg.n):
        out.append((
            bin(alg.lat_up[x]).count("1"),
            bin(alg.lat_dn[x]).count("1"),
            bin(alg.mon_up[x]).count("1"),
            bin(alg.mon_dn[x]).count("1"),
            _block_size(alg, x),
            x == alg.one,
            alg.neg[x] == x,
        ))
    return out


def _is_isomorphism(a, b, m):
    for x in range(a.n):
        if m[a.neg[x]] != b.neg[m[x]]:
            return False
        for y in range(a.n):
            if m[a.join[x][y]] != b.join[m[x]][m[y]]:
                return False
            if m[a.fusion[x][y]] != b.fusion[m[x]][m[y]]:
                return False
    return m[a.one] == b.one


def find_isomorphism(a, b):
    """A signature-preserving bijection a -> b as a list, or None.

    Search is pruned by per-element invariants (cone and block sizes) and by
    checking partial table consistency while extending the map.
    """
    if a.n != b.n:
        return None
    fa, fb = _fingerprints(a), _fingerprints(b)
    if sorted(fa) != sorted(fb):
        return None
    cands = [[u for u in range(b.n) if fb[u] == fa[x]] for x in range(a.n)]
    order = sorted(range(a.n), key=lambda x: (len(cands[x]), x))
    m = [-1] * a.n
    minv = [-1] * b.n

    def consistent(x, u):
        nx = a.neg[x]
        if m[nx] != -1 and m[nx] != b.neg[u]:
            return False
        for y in range(a.n):
            if m[y] == -1:
                continue
            v = m[y]
            for ta, tb in ((a.join, b.join), (a.fusion, b.fusion)):
                for za, zb in ((ta[x][y], tb[u][v]), (ta[y][x], tb[v][u])):
                    if m[za] != -1:
                        if m[za] != zb:
                            return False
                    elif minv[zb] != -1:
                        return False
        return True

    def extend(i):
        if i == a.n:
            return _is_isomorphism(a, b, m)
        x = order[i]
        for u in cands[x]:
            if minv[u] != -1:
                continue
            m[x] = u
            minv[u] = x
            if consistent(x, u) and extend(i + 1):
                return True
            m[x] = -1
            minv[u] = -1
        return False

    if extend(0):
        return list(m)
    return None


def subalgebra_generated(alg, seeds):
    """Least subset containing seeds and 1, closed under join, fusion, neg."""
    closed = set(seeds)
    closed.add(alg.one)
    frontier = list(closed)
    while frontier:
        fresh = set()
        for x in frontier:
            y = alg.neg[x]
            if y not in closed:
                fresh.add(y)
        for x in list(closed):
            for y in frontier:
                for z in (alg.join[x][y], alg.fusion[x][y]):
                    if z not in closed and z not in fresh:
                        fresh.add(z)
        closed |= fresh
        frontier = list(fresh)
    return closed
