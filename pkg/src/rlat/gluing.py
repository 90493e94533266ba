"""Glue two algebras along a fusion- and join-preserving bijection.

The lower algebra A contributes an element a of its negative cone (not below
the lower zero), the upper algebra B an element b of its negative cone, and
phi maps the monoidal up-set of a onto the monoidal down-set of b. The glued
algebra stacks B's monoidal order on top of A's; its unit and zero are B's.
"""

from dataclasses import dataclass

from .core import FiniteInRL, Report, bits, validate


@dataclass
class GluingSpec:
    lower: FiniteInRL
    upper: FiniteInRL
    a: int        # element of lower
    b: int        # element of upper
    phi: dict     # lower id -> upper id, domain {x | a mon<= x}


@dataclass
class GluedAlgebra:
    result: FiniteInRL
    provenance: tuple   # glued id -> ("lower" | "upper", original id)


def validate_gluing(spec):
    """Check every gluing ingredient; witnesses are element names."""
    A, B, a, b, phi = spec.lower, spec.upper, spec.a, spec.b, spec.phi
    rep = Report()

    in_range = (0 <= a < A.n and 0 <= b < B.n
                and all(0 <= x < A.n and 0 <= y < B.n
                        for x, y in phi.items()))
    rep.add("spec references elements of both carriers", in_range)
    if not in_range:
        return rep

    rep.add("a lies in the lower negative cone", A.leq(a, A.one),
            (A.names[a],))
    rep.add("a is not below the lower zero", not A.leq(a, A.zero),
            (A.names[a],))
    rep.add("b lies in the upper negative cone", B.leq(b, B.one),
            (B.names[b],))

    dom = set(bits(A.mon_up[a]))
    cod = set(bits(B.mon_dn[b]))
    keys = set(phi)

    bad = sorted(keys ^ dom)
    rep.add("phi domain is the monoidal up-set of a", not bad,
            tuple(A.names[x] for x in bad))

    targets = sorted(phi[x] for x in keys)
    dup = next((y for i, y in enumerate(targets[1:]) if y == targets[i]), None)
    rep.add("phi is injective", dup is None,
            None if dup is None else (B.names[dup],))

    bad = sorted(set(targets) ^ cod)
    rep.add("phi image is the monoidal down-set of b", not bad,
            tuple(B.names[y] for y in bad))

    rep.add("phi sends the lower unit to b", phi.get(A.one) == b,
            (A.names[A.one],))

    wf = wj = None
    for x in sorted(keys):
        for y in sorted(keys):
            f, j = A.fusion[x][y], A.join[x][y]
            if wf is None and (f not in keys
                               or phi[f] != B.fusion[phi[x]][phi[y]]):
                wf = (A.names[x], A.names[y])
            if wj is None and (j not in keys
                               or phi[j] != B.join[phi[x]][phi[y]]):
                wj = (A.names[x], A.names[y])
    rep.add("phi preserves fusion", wf is None, wf)
    rep.add("phi preserves join", wj is None, wj)

    anchor = A.join[a][A.zero]
    ok = anchor in phi and phi[anchor] == B.block_bounds(b)[0]
    rep.add("phi sends a join lower-zero to the block bottom of b", ok,
            (A.names[anchor],))
    return rep


def glue(spec, check=True):
    """Construct the glued algebra; raises ValueError on bad ingredients.

    With check=True the derived lattice order is compared against its
    four-case characterization and the result is fully validated; failures
    there raise RuntimeError since valid ingredients guarantee success.
    """
    rep = validate_gluing(spec)
    if not rep.ok:
        raise ValueError("invalid gluing ingredients: "
                         + "; ".join(name for name, _ in rep.failures()))
    A, B = spec.lower, spec.upper
    a, b, phi = spec.a, spec.b, spec.phi
    phi_inv = {v: k for k, v in phi.items()}
    na = A.neg[a]
    nA, nB = A.n, B.n

    names = list(A.names)
    taken = set(names)
    for nm in B.names:
        while nm in taken:
            nm += "'"
        taken.add(nm)
        names.append(nm)

    neg = ([A.neg[x] for x in range(nA)]
           + [nA + B.neg[y] for y in range(nB)])
    n = nA + nB
    join = [[0] * n for _ in range(n)]
    fusion = [[0] * n for _ in range(n)]
    for x in range(nA):
        for y in range(nA):
            join[x][y] = A.join[x][y]
            fusion[x][y] = A.fusion[x][y]
    for x in range(nB):
        for y in range(nB):
            join[nA + x][nA + y] = nA + B.join[x][y]
            fusion[nA + x][nA + y] = nA + B.fusion[x][y]
    for x in range(nA):
        for y in range(nB):
            f = A.fusion[x][phi_inv[B.fusion[y][b]]]
            fusion[x][nA + y] = fusion[nA + y][x] = f
            if A.leq(x, na):
                j = nA + B.join[phi[A.join[x][a]]][y]
            else:
                j = A.join[x][phi_inv[B.fusion[y][b]]]
            join[x][nA + y] = join[nA + y][x] = j

    out = FiniteInRL(names, nA + B.one, neg, join, fusion)
    prov = tuple([("lower", x) for x in range(nA)]
                 + [("upper", y) for y in range(nB)])
    if check:
        _self_check(out, spec, phi_inv)
    return GluedAlgebra(out, prov)


def _self_check(out, spec, phi_inv):
    A, B = spec.lower, spec.upper
    a, b, phi = spec.a, spec.b, spec.phi
    na = A.neg[a]
    nA = A.n
    for x in range(nA):
        for y in range(nA):
            if out.leq(x, y) != A.leq(x, y):
                raise RuntimeError("internal error: glued order disagrees "
                                   "on the lower part")
    for x in range(B.n):
        for y in range(B.n):
            if out.leq(nA + x, nA + y) != B.leq(x, y):
                raise RuntimeError("internal error: glued order disagrees "
                                   "on the upper part")
    for x in range(nA):
        for y in range(B.n):
            expect = A.leq(x, na) and B.leq(phi[A.join[x][a]], y)
            if out.leq(x, nA + y) != expect:
                raise RuntimeError("internal error: glued order fails the "
                                   "lower-upper case at (%s, %s)"
                                   % (A.names[x], B.names[y]))
            expect = (A.leq(phi_inv[B.fusion[y][b]], x)
                      and not A.leq(x, na))
            if out.leq(nA + y, x) != expect:
                raise RuntimeError("internal error: glued order fails the "
                                   "upper-lower case at (%s, %s)"
                                   % (B.names[y], A.names[x]))
    bad = validate(out)
    if not bad.ok:
        raise RuntimeError("internal error: glued algebra fails axiom %r"
                           % bad.failures()[0][0])
