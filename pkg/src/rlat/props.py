"""Decision procedures: distributive semilattice, distributive lattice,
semilinearity. Each verdict carries the least counterexample when it fails.
"""

from dataclasses import dataclass

from .core import bits


@dataclass(frozen=True)
class PropertyVerdict:
    holds: bool
    witness: tuple = None


def distributive_semilattice_table(meet):
    """Distributivity of the meet-semilattice given by an explicit table.

    Condition: whenever meet(x, y) is below z, some x' above x and y' above y
    satisfy meet(x', y') = z. Orders and bounds are read off the table alone.
    """
    n = len(meet)
    up = [0] * n
    for x in range(n):
        for y in range(n):
            if meet[x][y] == x:
                up[x] |= 1 << y
    # factor[z][x]: targets y' completing some x' above x to meet(x',y') = z
    factor = [[0] * n for _ in range(n)]
    for xp in range(n):
        row = meet[xp]
        for yp in range(n):
            z = row[yp]
            fz = factor[z]
            for x in range(n):
                if (up[x] >> xp) & 1:
                    fz[x] |= 1 << yp
    for x in range(n):
        for y in range(n):
            below = up[meet[x][y]]
            for z in bits(below):
                if not factor[z][x] & up[y]:
                    return PropertyVerdict(False, (x, y, z))
    return PropertyVerdict(True)


def is_distributive_semilattice(alg):
    """Distributivity of the monoidal semilattice of a validated algebra."""
    return distributive_semilattice_table(alg.fusion)


def is_lattice_distributive(alg):
    """Meet distributes over join in the lattice order."""
    n = alg.n
    mt, jn = alg.meet, alg.join
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if mt[x][jn[y][z]] != jn[mt[x][y]][mt[x][z]]:
                    return PropertyVerdict(False, (x, y, z))
    return PropertyVerdict(True)


def is_semilinear(alg):
    """((x -> y) ^ 1) v ((y -> x) ^ 1) = 1 for all pairs."""
    n = alg.n
    one = alg.one
    mt, jn, imp = alg.meet, alg.join, alg.imp
    for x in range(n):
        for y in range(n):
            lhs = jn[mt[imp[x][y]][one]][mt[imp[y][x]][one]]
            if lhs != one:
                return PropertyVerdict(False, (x, y))
    return PropertyVerdict(True)
