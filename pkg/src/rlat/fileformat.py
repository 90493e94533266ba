"""Line-oriented text formats for algebras and gluing specs, plus DOT export.

An algebra file holds five sections keyed by the first token of each line:
one `elements` line, one `one` line, one `neg` line, and n `join` plus n
`fusion` lines giving the tables row by row. Blank lines and lines starting
with `#` are ignored. A gluing spec file references two other files (paths
are resolved relative to the spec file) and lists the connecting map as
`phi x -> y` lines; a referenced file may itself be a spec, which makes a
decomposition tree on disk reassemblable by loading its root.
"""

import os
from dataclasses import dataclass

from .core import FiniteInRL
from .gluing import GluingSpec, glue, validate_gluing

_SECTIONS = ("elements", "one", "neg", "join", "fusion")


class ParseError(Exception):
    def __init__(self, lineno, message):
        super().__init__("line %d: %s" % (lineno, message))
        self.lineno = lineno


def _grouped_lines(text, allowed):
    groups = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        key = tokens[0]
        if key not in allowed:
            raise ParseError(lineno, "unknown section %r" % key)
        groups.setdefault(key, []).append((lineno, tokens[1:]))
    return groups


def parse(text):
    """Algebra file text to FiniteInRL; structural errors carry line numbers."""
    groups = _grouped_lines(text, _SECTIONS)
    for key in _SECTIONS:
        if key not in groups:
            raise ParseError(1, "missing section %r" % key)
    for key in ("elements", "one", "neg"):
        if len(groups[key]) > 1:
            raise ParseError(groups[key][1][0],
                             "duplicate section %r" % key)

    lineno, names = groups["elements"][0]
    if len(set(names)) != len(names):
        raise ParseError(lineno, "duplicate element names")
    index = {name: i for i, name in enumerate(names)}
    n = len(names)

    def resolve(lineno, token):
        if token not in index:
            raise ParseError(lineno, "undeclared element %r" % token)
        return index[token]

    lineno, tokens = groups["one"][0]
    if len(tokens) != 1:
        raise ParseError(lineno, "section 'one' needs exactly one token")
    one = resolve(lineno, tokens[0])

    lineno, tokens = groups["neg"][0]
    if len(tokens) != n:
        raise ParseError(lineno, "section 'neg' needs %d tokens, got %d"
                         % (n, len(tokens)))
    neg = [resolve(lineno, t) for t in tokens]

    tables = {}
    for key in ("join", "fusion"):
        rows = groups[key]
        if len(rows) != n:
            raise ParseError(rows[-1][0] if rows else 1,
                             "section %r needs %d rows, got %d"
                             % (key, n, len(rows)))
        table = []
        for lineno, tokens in rows:
            if len(tokens) != n:
                raise ParseError(lineno, "row needs %d tokens, got %d"
                                 % (n, len(tokens)))
            table.append([resolve(lineno, t) for t in tokens])
        tables[key] = table
    return FiniteInRL(names, one, neg, tables["join"], tables["fusion"])


def emit(alg):
    """Canonical text for an algebra: fixed section order, single spaces."""
    names = alg.names
    lines = ["elements " + " ".join(names),
             "one " + names[alg.one],
             "neg " + " ".join(names[v] for v in alg.neg)]
    for key, table in (("join", alg.join), ("fusion", alg.fusion)):
        for row in table:
            lines.append(key + " " + " ".join(names[v] for v in row))
    return "\n".join(lines) + "\n"


@dataclass
class GluingSpecFile:
    lower_ref: str
    upper_ref: str
    a: str
    b: str
    pairs: tuple   # (x name in lower, y name in upper)


def parse_gluing(text):
    groups = _grouped_lines(text, ("lower", "upper", "a", "b", "phi"))
    fields = {}
    for key in ("lower", "upper", "a", "b"):
        if key not in groups:
            raise ParseError(1, "missing section %r" % key)
        if len(groups[key]) > 1:
            raise ParseError(groups[key][1][0], "duplicate section %r" % key)
        lineno, tokens = groups[key][0]
        if len(tokens) != 1:
            raise ParseError(lineno, "section %r needs exactly one token"
                             % key)
        fields[key] = tokens[0]
    pairs = []
    for lineno, tokens in groups.get("phi", []):
        if len(tokens) != 3 or tokens[1] != "->":
            raise ParseError(lineno, "phi lines read 'phi x -> y'")
        pairs.append((tokens[0], tokens[2]))
    if not pairs:
        raise ParseError(1, "missing section 'phi'")
    return GluingSpecFile(fields["lower"], fields["upper"],
                          fields["a"], fields["b"], tuple(pairs))


def emit_gluing(spec_file):
    lines = ["lower " + spec_file.lower_ref,
             "upper " + spec_file.upper_ref,
             "a " + spec_file.a,
             "b " + spec_file.b]
    for x, y in spec_file.pairs:
        lines.append("phi %s -> %s" % (x, y))
    return "\n".join(lines) + "\n"


def load_algebra(path, _seen=None):
    """Load an algebra file, or glue a spec file (recursively) by extension."""
    real = os.path.realpath(path)
    seen = _seen or frozenset()
    if real in seen:
        raise ParseError(1, "circular reference through %s" % path)
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if not path.endswith(".gspec"):
        return parse(text)
    sf = parse_gluing(text)
    base = os.path.dirname(real)
    lower = load_algebra(os.path.join(base, sf.lower_ref), seen | {real})
    upper = load_algebra(os.path.join(base, sf.upper_ref), seen | {real})
    spec = build_spec(sf, lower, upper)
    rep = validate_gluing(spec)
    if not rep.ok:
        raise ValueError("gluing spec %s fails %r"
                         % (path, rep.failures()[0][0]))
    return glue(spec).result


def build_spec(spec_file, lower, upper):
    """Resolve a parsed spec file's tokens against its two loaded algebras."""
    a = lower.element(spec_file.a)
    b = upper.element(spec_file.b)
    phi = {}
    for x, y in spec_file.pairs:
        key = lower.element(x)
        if key in phi:
            raise ValueError("phi maps %s twice" % x)
        phi[key] = upper.element(y)
    return GluingSpec(lower, upper, a, b, phi)


def write_tree(tree, outdir, prefix="t"):
    """Write a decomposition tree as one file per leaf and per node.

    A leaf at name p becomes p.rlat; a node becomes p.gspec referencing its
    children p0 and p1. Returns the list of (filename, kind) written, root
    first.
    """
    from .decompose import Leaf

    os.makedirs(outdir, exist_ok=True)
    written = []

    def emit_node(node, name):
        if isinstance(node, Leaf):
            fname = name + ".rlat"
            with open(os.path.join(outdir, fname), "w",
                      encoding="utf-8") as fh:
                fh.write(emit(node.algebra))
            written.append((fname, "leaf"))
            return fname
        spec = node.split.spec
        fname = name + ".gspec"
        written.append((fname, "node"))
        lower_ref = emit_node(node.lower, name + "0")
        upper_ref = emit_node(node.upper, name + "1")
        pairs = tuple((spec.lower.names[x], spec.upper.names[y])
                      for x, y in sorted(spec.phi.items()))
        sf = GluingSpecFile(lower_ref, upper_ref,
                            spec.lower.names[spec.a],
                            spec.upper.names[spec.b], pairs)
        with open(os.path.join(outdir, fname), "w", encoding="utf-8") as fh:
            fh.write(emit_gluing(sf))
        return fname

    emit_node(tree, prefix)
    return written


def _quote(name):
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dot_export(alg, order):
    """DOT digraph of the Hasse covers of the chosen order."""
    if order == "lattice":
        covers = alg.lat_covers
    elif order == "monoidal":
        covers = alg.mon_covers
    else:
        raise ValueError("order must be 'lattice' or 'monoidal'")
    lines = ["digraph %s {" % order, "  rankdir=BT;"]
    for name in alg.names:
        lines.append("  %s;" % _quote(name))
    for x, y in sorted(covers):
        lines.append("  %s -> %s;" % (_quote(alg.names[x]),
                                      _quote(alg.names[y])))
    lines.append("}")
    return "\n".join(lines) + "\n"
