"""Command line surface.

Exit codes: 0 success or property holds; 1 axiom/property fails (witness on
standard output); 2 invalid input or usage. `-` reads an algebra file from
standard input.
"""

import argparse
import os
import sys

from .congruence import congruence_lattice
from .core import validate
from .decompose import Leaf, decompose
from .fileformat import (ParseError, build_spec, dot_export, emit,
                         load_algebra, parse, parse_gluing, write_tree)
from .generate import boolean_algebra, build_an
from .gluing import glue, validate_gluing
from .partition import partition
from .props import (is_distributive_semilattice, is_lattice_distributive,
                    is_semilinear)
from .search import enumerate_up_to_iso

_PROPS = {
    "distr-semilattice": is_distributive_semilattice,
    "distr-lattice": is_lattice_distributive,
    "semilinear": is_semilinear,
}


def _read_algebra(path):
    if path == "-":
        return parse(sys.stdin.read())
    return load_algebra(path)


def _checked(alg):
    """Validate or raise a _NotMember carrying the report lines."""
    rep = validate(alg)
    if not rep.ok:
        raise _NotMember(rep)
    return alg


class _NotMember(Exception):
    def __init__(self, report):
        super().__init__("not a member")
        self.report = report


def _cmd_check(args):
    alg = _read_algebra(args.file)
    rep = validate(alg)
    for line in rep.lines(alg.names):
        print(line)
    return 0 if rep.ok else 1


def _cmd_partition(args):
    alg = _checked(_read_algebra(args.file))
    p = partition(alg)
    for b in p.blocks:
        print("block bottom=%s top=%s elements=%s"
              % (alg.names[b.bottom], alg.names[b.top],
                 " ".join(alg.names[x] for x in b.elements)))
    print("skeleton " + " ".join(alg.names[x] for x in p.skeleton))
    return 0


def _cmd_congruences(args):
    alg = _checked(_read_algebra(args.file))
    con = congruence_lattice(alg)
    print("congruences %d" % len(con.congruences))
    for gen, theta in zip(con.generators, con.congruences):
        print("generator=%s classes=%d" % (alg.names[gen],
                                           len(theta.classes)))
    return 0


def _cmd_glue(args):
    if args.specfile == "-":
        sf = parse_gluing(sys.stdin.read())
        base = os.getcwd()
    else:
        with open(args.specfile, "r", encoding="utf-8") as fh:
            sf = parse_gluing(fh.read())
        base = os.path.dirname(os.path.realpath(args.specfile))
    lower = _checked(load_algebra(os.path.join(base, sf.lower_ref)))
    upper = _checked(load_algebra(os.path.join(base, sf.upper_ref)))
    spec = build_spec(sf, lower, upper)
    rep = validate_gluing(spec)
    if not rep.ok:
        for line in rep.lines():
            print(line)
        return 1
    sys.stdout.write(emit(glue(spec).result))
    return 0


def _cmd_decompose(args):
    alg = _checked(_read_algebra(args.file))
    tree = decompose(alg)

    def describe(node, name):
        if isinstance(node, Leaf):
            print("leaf %s: %d elements" % (name, node.algebra.n))
            return
        s = node.split
        lo, up = s.spec.lower, s.spec.upper
        # the split atom is the lower unit; the complement's negation is
        # the monoidal least element of the upper factor
        least = next(z for z in range(up.n)
                     if up.mon_up[z] == (1 << up.n) - 1)
        print("node %s: atom=%s complement=%s a=%s b=%s"
              % (name, lo.names[lo.one], up.names[up.neg[least]],
                 lo.names[s.spec.a], up.names[s.spec.b]))
        describe(node.lower, name + "0")
        describe(node.upper, name + "1")

    describe(tree, "t")
    if args.out:
        for fname, _ in write_tree(tree, args.out):
            print("wrote %s" % fname)
    return 0


def _cmd_reassemble(args):
    for candidate in ("t.gspec", "t.rlat"):
        root = os.path.join(args.dir, candidate)
        if os.path.exists(root):
            sys.stdout.write(emit(load_algebra(root)))
            return 0
    print("error: no t.gspec or t.rlat in %s" % args.dir, file=sys.stderr)
    return 2


def _cmd_gen(args):
    if args.family == "an":
        alg = build_an(args.number)
    else:
        alg = boolean_algebra(args.number)
    sys.stdout.write(emit(alg))
    return 0


def _cmd_enum(args):
    corpus = enumerate_up_to_iso(args.maxsize)
    os.makedirs(args.out, exist_ok=True)
    index = {}
    for alg in corpus.algebras:
        i = index.get(alg.n, 0)
        index[alg.n] = i + 1
        fname = "n%d_%d.rlat" % (alg.n, i)
        with open(os.path.join(args.out, fname), "w",
                  encoding="utf-8") as fh:
            fh.write(emit(alg))
    for size in sorted(corpus.counts):
        print("size %d: %d" % (size, corpus.counts[size]))
    return 0


def _cmd_prop(args):
    alg = _checked(_read_algebra(args.file))
    verdict = _PROPS[args.name](alg)
    if verdict.holds:
        print("holds")
        return 0
    labels = "xyz"
    print(" ".join("%s=%s" % (labels[i], alg.names[v])
                   for i, v in enumerate(verdict.witness)))
    return 1


def _cmd_dot(args):
    alg = _checked(_read_algebra(args.file))
    sys.stdout.write(dot_export(alg, args.order))
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="rlat",
        description="Finite commutative idempotent involutive residuated "
                    "lattices: validation, partitions, congruences, gluing, "
                    "decomposition, generation, enumeration.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate every axiom")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("partition", help="Boolean blocks and skeleton")
    p.add_argument("file")
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("congruences", help="congruence lattice summary")
    p.add_argument("file")
    p.set_defaults(func=_cmd_congruences)

    p = sub.add_parser("glue", help="glue two algebras per a spec file")
    p.add_argument("specfile")
    p.set_defaults(func=_cmd_glue)

    p = sub.add_parser("decompose", help="split into Boolean leaves")
    p.add_argument("file")
    p.add_argument("--out", help="write the tree to this directory")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("reassemble", help="glue a written tree back together")
    p.add_argument("dir")
    p.set_defaults(func=_cmd_reassemble)

    p = sub.add_parser("gen", help="generate a stock algebra")
    p.add_argument("family", choices=("an", "bool"))
    p.add_argument("number", type=int)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("enum", help="enumerate members up to isomorphism")
    p.add_argument("maxsize", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("prop", help="decide a property")
    p.add_argument("name", choices=sorted(_PROPS))
    p.add_argument("file")
    p.set_defaults(func=_cmd_prop)

    p = sub.add_parser("dot", help="Hasse diagram as DOT text")
    p.add_argument("file")
    p.add_argument("--order", choices=("lattice", "monoidal"),
                   default="lattice")
    p.set_defaults(func=_cmd_dot)
    return parser


def run(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _NotMember as exc:
        for line in exc.report.lines():
            print(line)
        return 1
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
