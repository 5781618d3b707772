"""Explicit rainbow-broom-free colorings built from round robins and
small vector spaces over GF(2) and GF(3)."""
import collections
import itertools
from fractions import Fraction
from broomlab import common
from broomlab import coloring
from broomlab import exceptions
from broomlab import graph


logger = common.logging.getLogger(__name__)


class VectorLabel(collections.namedtuple("VectorLabel", ["q", "coords"])):
    """Vector over Z/q, arithmetic componentwise mod q."""

    def __add__(self, other):
        return VectorLabel(self.q, tuple((a + b) % self.q for a, b
                                         in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return VectorLabel(self.q, tuple((a - b) % self.q for a, b
                                         in zip(self.coords, other.coords)))

    def __neg__(self):
        return VectorLabel(self.q, tuple(-a % self.q for a in self.coords))

    def __str__(self):
        return "".join(str(a) for a in self.coords)


def vector_labels(q, s):
    """All of (Z/q)^s in lexicographic order."""
    return [VectorLabel(q, coords)
            for coords in itertools.product(range(q), repeat=s)]


def _require_dimension(s):
    if s < 2:
        raise exceptions.InvalidParameter(
            "Dimension s must be >= 2, got {0}!".format(s)
        )


def _color_by(host, key):
    ids = {}
    colors = []
    for u, v in host.edges:
        colors.append(ids.setdefault(key(u, v), len(ids) + 1))
    return coloring.ColoredGraph(host, colors)


def odd_clique_coloring(t):
    """K_{t+1} split into t perfect matchings (t odd)."""
    if t < 3 or t % 2 == 0:
        raise exceptions.InvalidParameter(
            "Odd clique coloring needs odd t >= 3, got {0}!".format(t)
        )
    return coloring.round_robin_factorize(t + 1)


def f2_bipartite_coloring(s):
    """K_{2^s,2^s} with c(x y) = x - y over GF(2)^s."""
    _require_dimension(s)
    labels = vector_labels(2, s)
    side = len(labels)
    host = graph.build_biclique(side, side)
    return _color_by(host, lambda u, v: labels[u] - labels[v - side])


def f3_clique_coloring(s):
    """K_{3^s} on GF(3)^s with c(uv) = u + v."""
    _require_dimension(s)
    labels = vector_labels(3, s)
    host = graph.build_clique(len(labels))
    return _color_by(host, lambda u, v: labels[u] + labels[v])


def f2_clique_coloring(s):
    """K_{2^s} on GF(2)^s with c(uv) = u - v."""
    _require_dimension(s)
    labels = vector_labels(2, s)
    host = graph.build_clique(len(labels))
    return _color_by(host, lambda u, v: labels[u] - labels[v])


Family = collections.namedtuple("Family",
                                ["name", "param", "build", "stated_t"])


FAMILIES = collections.OrderedDict((f.name, f) for f in [
    Family("odd-matching", "t", odd_clique_coloring, lambda t: t),
    Family("f2-bipartite", "s", f2_bipartite_coloring, lambda s: 2 ** s),
    Family("f2-clique", "s", f2_clique_coloring, lambda s: 2 ** s - 2),
    Family("f3-clique", "s", f3_clique_coloring, lambda s: 3 ** s - 1),
])


def generate(family, value):
    """Build a family member.

    :return: (coloring, stated t, metadata comment lines)
    """
    if family not in FAMILIES:
        msg = "Unknown family '{0}', expected one of: {1}."
        raise exceptions.InvalidParameter(msg.format(
            family, ", ".join(FAMILIES)
        ))
    fam = FAMILIES[family]
    cg = fam.build(value)
    t = fam.stated_t(value)
    comments = [
        "family {0}".format(fam.name),
        "{0} {1}".format(fam.param, value),
        "t {0}".format(t),
    ]
    logger.debug("Generated {0} {1}={2}: {3!r}".format(
        fam.name, fam.param, value, cg
    ))
    return cg, t, comments


DensityReport = collections.namedtuple("DensityReport",
                                       ["copies", "edges", "coefficient"])


def density_report(block, n):
    """Edges of floor(n/|V|) disjoint copies of block and |E|/|V|."""
    k = block.graph.n
    if n < k:
        msg = "Target order {0} is below the block order {1}!".format(n, k)
        raise exceptions.InvalidParameter(msg)
    copies = n // k
    return DensityReport(copies, copies * block.graph.m,
                         Fraction(block.graph.m, k))
