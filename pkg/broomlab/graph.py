"""Simple undirected graphs on vertices 0..n-1 with a canonical edge index.

Edges are stored as pairs (u, v) with u < v, sorted lexicographically; the
position of a pair in that order is its edge index, used by the search
engines for branching and by the coloring file format.
"""
import itertools
from fractions import Fraction
import networkx
from broomlab import common
from broomlab import exceptions


logger = common.logging.getLogger(__name__)


class VertexSet(object):
    """Immutable bitset over 0..n-1."""

    __slots__ = ("n", "bits")

    def __init__(self, n, bits=0):
        self.n = n
        self.bits = bits

    @classmethod
    def of(cls, n, vertices):
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                msg = "Vertex {0} outside 0..{1}!".format(v, n - 1)
                raise exceptions.InvalidParameter(msg)
            bits |= 1 << v
        return cls(n, bits)

    def __contains__(self, v):
        return 0 <= v < self.n and bool(self.bits >> v & 1)

    def __iter__(self):
        bits, v = self.bits, 0
        while bits:
            if bits & 1:
                yield v
            bits >>= 1
            v += 1

    def __len__(self):
        return bin(self.bits).count("1")

    def __and__(self, other):
        return VertexSet(self.n, self.bits & other.bits)

    def __or__(self, other):
        return VertexSet(max(self.n, other.n), self.bits | other.bits)

    def __sub__(self, other):
        return VertexSet(self.n, self.bits & ~other.bits)

    def __eq__(self, other):
        return isinstance(other, VertexSet) and self.bits == other.bits

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.bits)

    def __repr__(self):
        return "VertexSet({0})".format(sorted(self))


class Graph(object):

    def __init__(self, n, edges=()):
        if n < 0:
            raise exceptions.InvalidParameter("Vertex count must be >= 0!")
        pairs = set()
        for u, v in edges:
            if u == v:
                raise exceptions.InvalidParameter(
                    "Self-loop at vertex {0}!".format(u)
                )
            if not (0 <= u < n and 0 <= v < n):
                raise exceptions.InvalidParameter(
                    "Edge ({0}, {1}) outside 0..{2}!".format(u, v, n - 1)
                )
            pair = (min(u, v), max(u, v))
            if pair in pairs:
                raise exceptions.InvalidParameter(
                    "Duplicate edge {0}!".format(pair)
                )
            pairs.add(pair)
        self.n = n
        self.edges = tuple(sorted(pairs))
        self._index = dict((e, i) for i, e in enumerate(self.edges))
        adjacency = [[] for _ in range(n)]
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        self._adjacency = tuple(tuple(sorted(a)) for a in adjacency)
        self._nbits = tuple(
            VertexSet.of(n, a).bits for a in self._adjacency
        )

    @property
    def m(self):
        return len(self.edges)

    def vertices(self):
        return range(self.n)

    def index_of(self, u, v):
        """Edge index of {u, v}; raises InvalidParameter if absent."""
        try:
            return self._index[(min(u, v), max(u, v))]
        except KeyError:
            msg = "No edge ({0}, {1}) in graph!".format(u, v)
            raise exceptions.InvalidParameter(msg)

    def edge_at(self, i):
        return self.edges[i]

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self._index

    def neighbors(self, v):
        """Sorted tuple of neighbors."""
        return self._adjacency[v]

    def neighborhood(self, v):
        return VertexSet(self.n, self._nbits[v])

    def closed_neighborhood(self, v):
        return VertexSet(self.n, self._nbits[v] | 1 << v)

    def common_neighborhood(self, u, v):
        return VertexSet(self.n, self._nbits[u] & self._nbits[v])

    def degree(self, v):
        return len(self._adjacency[v])

    def max_degree(self):
        return max([len(a) for a in self._adjacency] or [0])

    def min_degree(self):
        return min([len(a) for a in self._adjacency] or [0])

    def average_degree(self):
        if self.n == 0:
            return Fraction(0)
        return Fraction(2 * self.m, self.n)

    def is_complete(self):
        return self.m == self.n * (self.n - 1) // 2

    def induced_subgraph(self, vertices):
        """Subgraph on `vertices`, relabeled 0..k-1 in increasing order.

        :return: (graph, kept) where kept[i] is the old label of vertex i.
        """
        kept = sorted(set(vertices))
        relabel = dict((old, new) for new, old in enumerate(kept))
        edges = [(relabel[u], relabel[v]) for u, v in self.edges
                 if u in relabel and v in relabel]
        return Graph(len(kept), edges), kept

    def components(self):
        """Connected components as sorted vertex lists, by least vertex."""
        nxg = self.to_networkx()
        parts = [sorted(c) for c in networkx.connected_components(nxg)]
        return sorted(parts)

    def to_networkx(self):
        nxg = networkx.Graph()
        nxg.add_nodes_from(range(self.n))
        nxg.add_edges_from(self.edges)
        return nxg

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n and
                self.edges == other.edges)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return "Graph(n={0}, m={1})".format(self.n, self.m)


def build_clique(k):
    if k < 1:
        raise exceptions.InvalidParameter("Clique order must be >= 1!")
    return Graph(k, itertools.combinations(range(k), 2))


def build_biclique(a, b):
    """K_{a,b}; vertices 0..a-1 form the first side."""
    if a < 1 or b < 1:
        raise exceptions.InvalidParameter("Biclique sides must be >= 1!")
    return Graph(a + b, ((x, a + y) for x in range(a) for y in range(b)))


def disjoint_union(block, n):
    """floor(n / |V(block)|) disjoint copies of block padded to n vertices."""
    if n < 0:
        raise exceptions.InvalidParameter("Vertex count must be >= 0!")
    k = block.n
    copies = n // k if k else 0
    edges = [(i * k + u, i * k + v)
             for i in range(copies) for u, v in block.edges]
    return Graph(n, edges)


def paths_from(g, start, length):
    """Simple paths with `length` edges starting at `start`, in lex order."""
    if length < 1:
        raise exceptions.InvalidParameter("Path length must be >= 1!")
    if length > g.n - 1:
        return iter(())

    def _extend(path, used):
        if len(path) == length + 1:
            yield tuple(path)
            return
        for w in g.neighbors(path[-1]):
            if not used >> w & 1:
                path.append(w)
                yield from _extend(path, used | 1 << w)
                path.pop()

    return _extend([start], 1 << start)


def enumerate_paths(g, length):
    """Every simple path with `length` edges, once per direction, lex order."""
    if length < 1:
        raise exceptions.InvalidParameter("Path length must be >= 1!")
    for v in g.vertices():
        for p in paths_from(g, v, length):
            yield p


def enumerate_c4(g):
    """Every 4-cycle once as (a, b, c, d): a least, b < d its neighbors."""
    for a in g.vertices():
        nbrs = [v for v in g.neighbors(a) if v > a]
        for i, b in enumerate(nbrs):
            for d in nbrs[i + 1:]:
                for c in g.common_neighborhood(b, d):
                    if c > a:
                        yield (a, b, c, d)
