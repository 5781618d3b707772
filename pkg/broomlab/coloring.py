"""Edge colorings of `graph.Graph` hosts and the coloring file format.

Colors are positive integers; 0 is reserved for "uncolored" in partial
search states. A canonical coloring numbers its colors 1..C in order of
first appearance along the edge index.
"""
import collections
from networkx.algorithms import isomorphism
import networkx
from broomlab import common
from broomlab import exceptions
from broomlab import graph


logger = common.logging.getLogger(__name__)


HEADER = "broomlab-coloring v1"

# loader error codes
MALFORMED_HEADER = "malformed-header"
MALFORMED_LINE = "malformed-line"
UNSORTED_EDGES = "unsorted-edges"
DUPLICATE_EDGE = "duplicate-edge"
COLOR_OUT_OF_RANGE = "color-out-of-range"
NON_CANONICAL_COLORS = "non-canonical-colors"
IMPROPER_COLORING = "improper-coloring"


ProperVerdict = collections.namedtuple("ProperVerdict", ["ok", "vertex"])


def canonical_relabel(colors):
    """Map color ids to 1..C in first-appearance order."""
    mapping = {}
    out = []
    for c in colors:
        if c not in mapping:
            mapping[c] = len(mapping) + 1
        out.append(mapping[c])
    return tuple(out)


class ColoredGraph(object):

    def __init__(self, host, colors, canonical=True):
        colors = tuple(colors)
        if len(colors) != host.m:
            msg = "Expected {0} edge colors, got {1}!".format(
                host.m, len(colors)
            )
            raise exceptions.InvalidParameter(msg)
        for c in colors:
            if isinstance(c, bool) or not isinstance(c, int) or c < 1:
                msg = "Color {0!r} is not a positive integer!".format(c)
                raise exceptions.InvalidParameter(msg)
        self.graph = host
        self.colors = canonical_relabel(colors) if canonical else colors
        self._at = None

    @property
    def n(self):
        return self.graph.n

    def num_colors(self):
        return len(set(self.colors))

    def palette(self):
        return sorted(set(self.colors))

    def color_of(self, u, v):
        return self.colors[self.graph.index_of(u, v)]

    def incident(self, v):
        """dict neighbor -> color of the edge to it."""
        if self._at is None:
            at = [dict() for _ in range(self.graph.n)]
            for (u, w), c in zip(self.graph.edges, self.colors):
                at[u][w] = c
                at[w][u] = c
            self._at = at
        return self._at[v]

    def is_canonical(self):
        return canonical_relabel(self.colors) == self.colors

    def __eq__(self, other):
        return (isinstance(other, ColoredGraph) and
                self.graph == other.graph and self.colors == other.colors)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.graph, self.colors))

    def __repr__(self):
        return "ColoredGraph(n={0}, m={1}, colors={2})".format(
            self.graph.n, self.graph.m, self.num_colors()
        )


def check_proper(cg):
    """ProperVerdict(ok, vertex); vertex is the least vertex seeing a repeat."""
    for v in cg.graph.vertices():
        seen = set()
        for c in cg.incident(v).values():
            if c in seen:
                return ProperVerdict(False, v)
            seen.add(c)
    return ProperVerdict(True, None)


def require_proper(cg):
    verdict = check_proper(cg)
    if not verdict.ok:
        raise exceptions.ImproperColoring(verdict.vertex)
    return cg


def canonicalize_colors(cg):
    return ColoredGraph(cg.graph, cg.colors, canonical=True)


def round_robin_factorize(k):
    """Circle-method 1-factorization of K_k.

    Vertex k-1 sits in the center; round r pairs it with r and pairs
    r+i with r-i (mod k-1) for the remaining players.
    """
    if k < 2 or k % 2:
        raise exceptions.InvalidParameter(
            "Round robin needs an even order >= 2, got {0}!".format(k)
        )
    host = graph.build_clique(k)
    colors = [0] * host.m
    rounds = k - 1
    for r in range(rounds):
        matches = [(r, k - 1)]
        for i in range(1, k // 2):
            matches.append(((r + i) % rounds, (r - i) % rounds))
        for u, v in matches:
            colors[host.index_of(u, v)] = r + 1
    return ColoredGraph(host, colors)


def color_degree_profile(cg, v):
    if not 0 <= v < cg.graph.n:
        raise exceptions.InvalidParameter("No vertex {0}!".format(v))
    return frozenset(cg.incident(v).values())


class ColorClassView(object):
    """Edges per color, plus the missing color per vertex for a palette."""

    def __init__(self, cg, palette=None):
        self.coloring = cg
        self.palette = sorted(palette) if palette is not None else cg.palette()
        self.classes = collections.OrderedDict((c, []) for c in self.palette)
        for edge, c in zip(cg.graph.edges, cg.colors):
            self.classes.setdefault(c, []).append(edge)

    def is_matching(self, color):
        touched = set()
        for u, v in self.classes.get(color, ()):
            if u in touched or v in touched:
                return False
            touched.update((u, v))
        return True

    def missing_color(self, v):
        """The palette color absent at v, if exactly one is absent."""
        present = color_degree_profile(self.coloring, v)
        missing = [c for c in self.palette if c not in present]
        return missing[0] if len(missing) == 1 else None

    def is_one_factorization(self):
        n = self.coloring.graph.n
        if n % 2 or len(self.palette) != n - 1:
            return False
        return all(len(edges) == n // 2 and self.is_matching(c)
                   for c, edges in self.classes.items())

    def is_near_one_factorization(self):
        n = self.coloring.graph.n
        if n % 2 == 0 or len(self.palette) != n:
            return False
        if not all(len(edges) == n // 2 and self.is_matching(c)
                   for c, edges in self.classes.items()):
            return False
        labels = [self.missing_color(v) for v in range(n)]
        return None not in labels and len(set(labels)) == n


def color_classes(cg, palette=None):
    return ColorClassView(cg, palette)


def _incidence_graph(cg):
    nxg = networkx.Graph()
    for v in cg.graph.vertices():
        nxg.add_node(("v", v), kind="vertex")
    for c in cg.palette():
        nxg.add_node(("c", c), kind="color")
    for i, ((u, v), c) in enumerate(zip(cg.graph.edges, cg.colors)):
        nxg.add_node(("e", i), kind="edge")
        nxg.add_edges_from([(("e", i), ("v", u)), (("e", i), ("v", v)),
                            (("e", i), ("c", c))])
    return nxg


def colorings_isomorphic(a, b):
    """True if some vertex relabeling plus color renaming maps a onto b."""
    if (a.graph.n, a.graph.m, a.num_colors()) != \
            (b.graph.n, b.graph.m, b.num_colors()):
        return False
    matcher = isomorphism.GraphMatcher(
        _incidence_graph(a), _incidence_graph(b),
        node_match=isomorphism.categorical_node_match("kind", None)
    )
    return matcher.is_isomorphic()


def format_coloring(cg, comments=()):
    lines = [HEADER, "n {0} m {1} colors {2}".format(
        cg.graph.n, cg.graph.m, cg.num_colors()
    )]
    for (u, v), c in zip(cg.graph.edges, cg.colors):
        lines.append("{0} {1} {2}".format(u, v, c))
    for comment in comments:
        lines.append("# {0}".format(comment))
    return "\n".join(lines) + "\n"


def write_coloring(cg, path, comments=()):
    with open(path, "w") as fp:
        fp.write(format_coloring(cg, comments))
    logger.info("Wrote coloring with {0} edges to '{1}'.".format(
        cg.graph.m, path
    ))


def _ints(line, count, code, lineno, error):
    parts = line.split()
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise error(code, lineno, "expected integers in {0!r}".format(line))
    if len(values) != count:
        raise error(code, lineno, "expected {0} fields in {1!r}".format(
            count, line
        ))
    return values


def parse_coloring(lines, error=exceptions.ColoringFormatError,
                   first_lineno=1):
    """Parse coloring file lines (comment lines skipped) into ColoredGraph."""
    body = [(first_lineno + i, line.strip()) for i, line in enumerate(lines)]
    body = [(no, line) for no, line in body
            if line and not line.startswith("#")]
    if not body or body[0][1] != HEADER:
        no = body[0][0] if body else first_lineno
        raise error(MALFORMED_HEADER, no, "missing '{0}'".format(HEADER))
    if len(body) < 2:
        raise error(MALFORMED_HEADER, body[0][0], "missing size line")
    no, sizes = body[1]
    parts = sizes.split()
    if len(parts) != 6 or parts[0::2] != ["n", "m", "colors"]:
        raise error(MALFORMED_HEADER, no, "bad size line {0!r}".format(sizes))
    try:
        n, m, num_colors = (int(p) for p in parts[1::2])
    except ValueError:
        raise error(MALFORMED_HEADER, no, "bad size line {0!r}".format(sizes))
    if n < 0 or m < 0 or num_colors < 0:
        raise error(MALFORMED_HEADER, no, "negative size")
    rows = body[2:]
    if len(rows) != m:
        raise error(MALFORMED_HEADER, no, "declared {0} edges, found {1}".format(
            m, len(rows)
        ))
    edges, colors, previous = [], [], None
    for no, line in rows:
        u, v, c = _ints(line, 3, MALFORMED_LINE, no, error)
        if not (0 <= u < v < n):
            raise error(MALFORMED_LINE, no, "bad edge ({0}, {1})".format(u, v))
        if previous is not None and (u, v) == previous:
            raise error(DUPLICATE_EDGE, no, "edge ({0}, {1})".format(u, v))
        if previous is not None and (u, v) < previous:
            raise error(UNSORTED_EDGES, no, "edge ({0}, {1})".format(u, v))
        if not 1 <= c <= num_colors:
            raise error(COLOR_OUT_OF_RANGE, no, "color {0}".format(c))
        previous = (u, v)
        edges.append((u, v))
        colors.append(c)
    if canonical_relabel(colors) != tuple(colors) or \
            len(set(colors)) != num_colors:
        no = rows[0][0] if rows else body[1][0]
        raise error(NON_CANONICAL_COLORS, no, "colors not in first-appearance "
                                              "order 1..{0}".format(num_colors))
    cg = ColoredGraph(graph.Graph(n, edges), colors, canonical=False)
    verdict = check_proper(cg)
    if not verdict.ok:
        raise error(IMPROPER_COLORING, body[1][0],
                    "repeated color at vertex {0}".format(verdict.vertex))
    return cg


def load_coloring(path):
    with open(path) as fp:
        lines = fp.read().splitlines()
    cg = parse_coloring(lines)
    logger.debug("Loaded {0!r} from '{1}'.".format(cg, path))
    return cg
