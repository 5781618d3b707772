"""Rainbow broom detection and the four-cycle / sigma analyzers."""
import collections
import itertools
import math
from broomlab import common
from broomlab import coloring
from broomlab import exceptions
from broomlab import graph


logger = common.logging.getLogger(__name__)


BICHROMATIC = "bichromatic"
TRICHROMATIC = "trichromatic"
RAINBOW_ANCHORED = "rainbow-anchored"
RAINBOW_UNANCHORED = "rainbow-unanchored"
CYCLE_CLASSES = (BICHROMATIC, TRICHROMATIC, RAINBOW_ANCHORED,
                 RAINBOW_UNANCHORED)


class BroomPattern(object):
    """B_{t,ell}: a handle path with ell edges plus t-ell bristles at its end."""

    def __init__(self, t, ell=common.DEFAULT_ELL):
        if not 2 <= ell <= t:
            msg = "Broom needs 2 <= ell <= t, got t={0} ell={1}!".format(t, ell)
            raise exceptions.InvalidParameter(msg)
        self.t = t
        self.ell = ell

    @property
    def bristle_count(self):
        return self.t - self.ell

    @property
    def order(self):
        return self.t + 1

    def __repr__(self):
        return "B({0},{1})".format(self.t, self.ell)


class BroomEmbedding(collections.namedtuple("BroomEmbedding",
                                            ["handle", "bristles"])):
    """handle is v_0..v_ell; bristles are sorted neighbors of v_ell."""

    def edges(self):
        path = list(zip(self.handle, self.handle[1:]))
        base = self.handle[-1]
        return path + [(base, w) for w in self.bristles]

    def is_rainbow_in(self, cg):
        """Re-verify: distinct vertices, edges present, colors distinct."""
        verts = list(self.handle) + list(self.bristles)
        if len(set(verts)) != len(verts):
            return False
        if not all(cg.graph.has_edge(u, v) for u, v in self.edges()):
            return False
        colors = [cg.color_of(u, v) for u, v in self.edges()]
        return len(set(colors)) == len(colors)

    def __str__(self):
        return "handle {0} bristles {1}".format(
            "-".join(str(v) for v in self.handle),
            ",".join(str(v) for v in self.bristles)
        )


def _is_rainbow_path(cg, path):
    at = [cg.incident(u)[v] for u, v in zip(path, path[1:])]
    return len(set(at)) == len(at), at


def find_rainbow_broom(cg, pat):
    """Least rainbow copy of `pat` in a proper coloring, or None.

    For each rainbow handle (lex order) the bristle candidates are the
    neighbors of the handle's end whose edge avoids the handle colors; under
    properness they are pairwise distinct in color, so counting suffices.
    """
    coloring.require_proper(cg)
    g = cg.graph
    if g.m < pat.t or g.n < pat.order:
        return None
    if pat.ell > 3:
        return naive_rainbow_broom(cg, pat)
    need = pat.bristle_count
    for path in graph.enumerate_paths(g, pat.ell):
        rainbow, used = _is_rainbow_path(cg, path)
        if not rainbow:
            continue
        base = path[-1]
        on_path = set(path)
        used = set(used)
        candidates = [w for w, c in sorted(cg.incident(base).items())
                      if w not in on_path and c not in used]
        if len(candidates) >= need:
            return BroomEmbedding(tuple(path), tuple(candidates[:need]))
    return None


def naive_rainbow_broom(cg, pat):
    """Reference embedder: tries every injection of the broom's vertices."""
    g = cg.graph
    n, need = g.n, pat.bristle_count
    if n < pat.order:
        return None
    size = math.perm(n, pat.ell + 1) * math.comb(n - pat.ell - 1, need)
    if size > common.NAIVE_EMBED_LIMIT:
        raise exceptions.SizeGuardError("naive broom embedding", size,
                                        common.NAIVE_EMBED_LIMIT)
    for handle in itertools.permutations(range(n), pat.ell + 1):
        if not all(g.has_edge(u, v) for u, v in zip(handle, handle[1:])):
            continue
        rest = [w for w in range(n) if w not in handle]
        for bristles in itertools.combinations(rest, need):
            embedding = BroomEmbedding(handle, bristles)
            if embedding.is_rainbow_in(cg):
                return embedding
    return None


def find_rainbow_path_from(cg, v, length):
    """Least rainbow path with `length` edges starting at v, or None."""
    for path in graph.paths_from(cg.graph, v, length):
        if _is_rainbow_path(cg, path)[0]:
            return path
    return None


def _rotate(cycle, anchor):
    if anchor not in cycle:
        msg = "Anchor {0} not on cycle {1}!".format(anchor, cycle)
        raise exceptions.InvalidParameter(msg)
    i = cycle.index(anchor)
    return tuple(cycle[i:] + cycle[:i])


def cycle_colors(cg, cycle):
    edges = zip(cycle, cycle[1:] + cycle[:1])
    try:
        return [cg.color_of(u, v) for u, v in edges]
    except exceptions.InvalidParameter:
        msg = "Cycle {0} is not present in the host!".format(cycle)
        raise exceptions.InvalidParameter(msg)


def classify_c4(cg, cycle, anchor):
    """Classify the 4-cycle `cycle` (closed walk order) relative to anchor."""
    cycle = tuple(cycle)
    v, x, y, z = _rotate(cycle, anchor)
    colors = cycle_colors(cg, cycle)
    distinct = len(set(colors))
    if distinct <= 2:
        return BICHROMATIC
    if distinct == 3:
        return TRICHROMATIC
    profile = coloring.color_degree_profile(cg, v)
    if cg.color_of(x, y) in profile and cg.color_of(y, z) in profile:
        return RAINBOW_ANCHORED
    return RAINBOW_UNANCHORED


def anchor_qualifies(g, cycle, anchor, t):
    """|N(v) minus the other three cycle vertices| >= t-2."""
    v, x, y, z = _rotate(tuple(cycle), anchor)
    others = graph.VertexSet.of(g.n, (x, y, z))
    return len(g.neighborhood(v) - others) >= t - 2


def c4_histogram(cg):
    """Counts of each cycle class over all (4-cycle, anchor) pairs."""
    counts = collections.OrderedDict((name, 0) for name in CYCLE_CLASSES)
    for cycle in graph.enumerate_c4(cg.graph):
        for anchor in cycle:
            counts[classify_c4(cg, cycle, anchor)] += 1
    return counts


def c4_violations(cg, t):
    """(cycle, anchor, class) triples that a rainbow-B_{t,3}-free coloring
    cannot have: trichromatic, or rainbow-unanchored at a qualifying anchor."""
    found = []
    for cycle in graph.enumerate_c4(cg.graph):
        for anchor in cycle:
            if not anchor_qualifies(cg.graph, cycle, anchor, t):
                continue
            kind = classify_c4(cg, cycle, anchor)
            if kind in (TRICHROMATIC, RAINBOW_UNANCHORED):
                found.append((cycle, anchor, kind))
    return found


GoodVerdict = collections.namedtuple("GoodVerdict",
                                     ["ok", "num_colors", "trichromatic"])


def check_good_coloring(cg, t):
    """At most t+1 colors and no trichromatic 4-cycle."""
    num_colors = cg.num_colors()
    for cycle in graph.enumerate_c4(cg.graph):
        if len(set(cycle_colors(cg, cycle))) == 3:
            return GoodVerdict(False, num_colors, cycle)
    return GoodVerdict(num_colors <= t + 1, num_colors, None)


class SigmaMap(object):
    """sigma(c(uw)) = c(vw) over common neighbors w of u and v."""

    def __init__(self, u, v, mapping, uv_color, palette):
        self.u = u
        self.v = v
        self.mapping = mapping
        self.uv_color = uv_color
        self.palette = frozenset(palette)

    def __len__(self):
        return len(self.mapping)

    def __getitem__(self, color):
        return self.mapping[color]

    def is_bijection(self):
        """A permutation of its own domain."""
        return set(self.mapping.values()) == set(self.mapping)

    def is_derangement(self):
        """A fixed-point-free permutation of im(c) minus {c(uv)}."""
        target = self.palette - {self.uv_color}
        return (set(self.mapping) == target and self.is_bijection() and
                all(a != b for a, b in self.mapping.items()))

    def is_involution(self):
        """Fixed-point-free involution: a product of disjoint transpositions."""
        if not self.is_bijection():
            return False
        return all(a != b and self.mapping[b] == a
                   for a, b in self.mapping.items())

    def cycles(self):
        """Cycle notation of the map; open chains end where the map stops."""
        seen, out = set(), []
        for start in sorted(self.mapping):
            if start in seen:
                continue
            cycle, c = [], start
            while c in self.mapping and c not in seen:
                seen.add(c)
                cycle.append(c)
                c = self.mapping[c]
            out.append(tuple(cycle))
        return out

    def __repr__(self):
        return "SigmaMap({0},{1}: {2})".format(
            self.u, self.v,
            "".join("({0})".format(" ".join(str(c) for c in cyc))
                    for cyc in self.cycles())
        )


def extract_sigma(cg, u, v):
    g = cg.graph
    at_u, at_v = cg.incident(u), cg.incident(v)
    mapping = dict((at_u[w], at_v[w]) for w in g.common_neighborhood(u, v))
    uv_color = at_u.get(v)
    return SigmaMap(u, v, mapping, uv_color, cg.palette())


def sigma_summary(cg):
    """Aggregate sigma properties over all unordered vertex pairs."""
    summary = collections.OrderedDict([
        ("pairs", 0), ("nonempty", 0), ("bijection", 0),
        ("derangement", 0), ("involution", 0),
    ])
    for u, v in itertools.combinations(cg.graph.vertices(), 2):
        sigma = extract_sigma(cg, u, v)
        summary["pairs"] += 1
        if not len(sigma):
            continue
        summary["nonempty"] += 1
        summary["bijection"] += sigma.is_bijection()
        summary["derangement"] += sigma.is_derangement()
        summary["involution"] += sigma.is_involution()
    return summary


DegreeReport = collections.namedtuple(
    "DegreeReport", ["t", "top", "high", "low", "holds"]
)


def degree_structure_report(cg, t):
    """Vertices of degree t+1 (top), t (high) and <= t-1 (low).

    `holds` is true when at most two vertices reach t+1 and, if exactly two
    do, every other vertex has degree at most t-1.
    """
    g = cg.graph
    if g.n > t + 2:
        msg = "Degree structure needs at most t+2={0} vertices, got {1}!"
        raise exceptions.InvalidParameter(msg.format(t + 2, g.n))
    degrees = [g.degree(v) for v in g.vertices()]
    top = sum(1 for d in degrees if d == t + 1)
    high = sum(1 for d in degrees if d == t)
    low = sum(1 for d in degrees if d <= t - 1)
    holds = top <= 2 and (top < 2 or high == 0)
    return DegreeReport(t, top, high, low, holds)
