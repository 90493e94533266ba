"""Enumerate all members of a given size up to isomorphism.

Shape normalization: the unit is element 0, and the involution is canonical.
A negation fixed point x forces x = 0 = 1 (its block collapses), so on an
odd carrier the unit is the unique fixed point and the rest pair up; on an
even carrier negation is fixed-point free with neg(0) = 1. Relabeling puts
the 2-cycles in consecutive positions, so exactly one shape per size exists
and every isomorphism between two shaped algebras fixes the unit and
commutes with the involution. Minimizing the tables over that permutation
group is therefore a complete isomorph rejector.

Search: fusion tables are filled cell by cell with incremental associativity
checks; each complete fusion induces candidate lattice orders parametrized
by the down-set D of zero (x <= y iff x . neg(y) lies in D), and the full
axiom checker is the final filter.
"""

from dataclasses import dataclass
from itertools import combinations, permutations, product

from .core import FiniteInRL, bits, validate

DEFAULT_CAP = 8


@dataclass
class Corpus:
    max_size: int
    algebras: tuple
    counts: dict


def enumerate_up_to_iso(max_size, cap=DEFAULT_CAP):
    if max_size < 1:
        raise ValueError("size bound must be positive")
    if max_size > cap:
        raise ValueError("size bound %d exceeds cap %d" % (max_size, cap))
    algebras = []
    counts = {}
    for n in range(1, max_size + 1):
        found = _enumerate_size(n)
        counts[n] = len(found)
        algebras.extend(found)
    return Corpus(max_size, tuple(algebras), counts)


def _neg_shape(n):
    if n % 2 == 1:
        neg = [0] + [0] * (n - 1)
        for i in range(1, n, 2):
            neg[i], neg[i + 1] = i + 1, i
    else:
        neg = [1, 0] + [0] * (n - 2)
        for i in range(2, n, 2):
            neg[i], neg[i + 1] = i + 1, i
    return neg


def _perm_group(n):
    """Permutations fixing element 0 and commuting with the shaped negation."""
    start = 1 if n % 2 == 1 else 2
    pairs = [(i, i + 1) for i in range(start, n, 2)]
    k = len(pairs)
    out = []
    for order in permutations(range(k)):
        for flips in product((0, 1), repeat=k):
            perm = list(range(n))
            for t, (p, q) in enumerate(pairs):
                tp, tq = pairs[order[t]]
                if flips[t]:
                    tp, tq = tq, tp
                perm[p], perm[q] = tp, tq
            out.append(tuple(perm))
    return out


def _enumerate_size(n):
    names = ["e%d" % i for i in range(n)]
    neg = _neg_shape(n)
    perms = _perm_group(n)
    cells = list(combinations(range(1, n), 2))
    fusion = [[None] * n for _ in range(n)]
    for x in range(n):
        fusion[x][x] = x
        fusion[0][x] = fusion[x][0] = x

    found = {}

    def assoc_ok(i, j):
        # only triples meeting {i, j} can have become newly decidable
        for t in (i, j):
            for x in range(n):
                for y in range(n):
                    for tri in ((t, x, y), (x, t, y), (x, y, t)):
                        a, b, c = tri
                        ab = fusion[a][b]
                        bc = fusion[b][c]
                        if ab is None or bc is None:
                            continue
                        lhs = fusion[ab][c]
                        rhs = fusion[a][bc]
                        if lhs is not None and rhs is not None and lhs != rhs:
                            return False
        return True

    def fill(idx):
        if idx == len(cells):
            _orders_for_fusion(n, names, neg, fusion, perms, found)
            return
        i, j = cells[idx]
        for v in range(n):
            fusion[i][j] = fusion[j][i] = v
            if assoc_ok(i, j):
                fill(idx + 1)
        fusion[i][j] = fusion[j][i] = None

    fill(0)
    return [found[key] for key in sorted(found)]


def _orders_for_fusion(n, names, neg, fusion, perms, found):
    base = 0
    for x in range(n):
        base |= 1 << fusion[x][neg[x]]
    free = [x for x in range(n) if not (base >> x) & 1]
    for pick in range(1 << len(free)):
        d = base
        for t, x in enumerate(free):
            if (pick >> t) & 1:
                d |= 1 << x
        up = [0] * n
        for x in range(n):
            row = 0
            fx = fusion[x]
            for y in range(n):
                if (d >> fx[neg[y]]) & 1:
                    row |= 1 << y
            up[x] = row
        if not _is_order_with_joins(n, up):
            continue
        join = _join_table(n, up)
        if join is None:
            continue
        alg = FiniteInRL(names, 0, list(neg),
                         [row[:] for row in join],
                         [row[:] for row in fusion])
        if not validate(alg).ok:
            continue
        key, canon = _canonicalize(n, names, neg, join, fusion, perms)
        if key not in found:
            found[key] = canon


def _is_order_with_joins(n, up):
    for x in range(n):
        row = up[x]
        for y in bits(row):
            if y != x and (up[y] >> x) & 1:
                return False          # antisymmetry
            if up[y] & ~row:
                return False          # transitivity
    return True


def _join_table(n, up):
    join = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            common = up[x] & up[y]
            m = -1
            for z in bits(common):
                if up[z] == common:
                    m = z
                    break
            if m < 0:
                return None
            join[x][y] = join[y][x] = m
    return join


def _canonicalize(n, names, neg, join, fusion, perms):
    best = None
    best_tables = None
    for perm in perms:
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        jo = bytes(perm[join[inv[x]][inv[y]]]
                   for x in range(n) for y in range(n))
        fu = bytes(perm[fusion[inv[x]][inv[y]]]
                   for x in range(n) for y in range(n))
        key = jo + fu
        if best is None or key < best:
            best = key
            best_tables = (jo, fu)
    jo, fu = best_tables
    join_c = [[jo[x * n + y] for y in range(n)] for x in range(n)]
    fusion_c = [[fu[x * n + y] for y in range(n)] for x in range(n)]
    return best, FiniteInRL(names, 0, list(neg), join_c, fusion_c)
