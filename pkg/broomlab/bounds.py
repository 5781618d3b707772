"""Ledger of the known leading coefficients of ex*(n, B_{t,3}) and the
dense-subgraph reductions used alongside it."""
import collections
from fractions import Fraction
from broomlab import common
from broomlab import exceptions
from broomlab import graph


logger = common.logging.getLogger(__name__)


# provenance labels
ODD_MATCHINGS = "K_{t+1} split into perfect matchings"
ODD_UPPER = "odd t upper bound"
CLIQUE_COPIES = "disjoint copies of K_t"
POWER_OF_TWO_CLIQUE = "GF(2)^s coloring of K_{t+2}, t = 2^s - 2"
POWER_OF_TWO_CLIQUE_UPPER = "t = 2^s - 2 upper bound"
POWER_OF_TWO_BIPARTITE = "GF(2)^s coloring of K_{t,t}, t = 2^s"
POWER_OF_THREE_CLIQUE = "GF(3)^s coloring of K_{t+1}, t = 3^s - 1"
MULTIPLE_OF_FOUR_UPPER = "t = 0 mod 4 upper bound"
EVEN_UPPER = "even t upper bound"


class BoundsReport(collections.namedtuple("BoundsReport", [
        "t", "lower", "upper", "exact", "lower_source", "upper_source",
        "advisory"])):

    def __str__(self):
        if self.exact:
            return "exact {0}".format(self.lower)
        return "[{0}, {1}]".format(self.lower, self.upper)


def power_exponent(x, base):
    """s with base**s == x, or None; exact integer arithmetic only."""
    if x < 1:
        return None
    s = 0
    while x % base == 0:
        x //= base
        s += 1
    return s if x == 1 else None


def _even_lower(t):
    s = power_exponent(t + 1, 3)
    if s is not None and s >= 2:
        return Fraction(t, 2), POWER_OF_THREE_CLIQUE
    return Fraction(t - 1, 2), CLIQUE_COPIES


def _advisory(t, ell):
    if 3 * ell - 4 <= t:
        return "general bound ex* <= ({0}+{1}-2)/2 n = {2} n".format(
            t, ell, Fraction(t + ell - 2, 2)
        )
    return None


def bounds_for(t, ell=common.DEFAULT_ELL):
    if ell != 3:
        raise exceptions.InvalidParameter(
            "Only handle length 3 is tabulated, got {0}!".format(ell)
        )
    if t < 3:
        raise exceptions.InvalidParameter("Need t >= 3, got {0}!".format(t))
    advisory = _advisory(t, ell)
    if t % 2:
        half = Fraction(t, 2)
        return BoundsReport(t, half, half, True, ODD_MATCHINGS, ODD_UPPER,
                            advisory)
    s = power_exponent(t + 2, 2)
    if s is not None and s >= 3:
        value = Fraction(t + 1, 2)
        return BoundsReport(t, value, value, True, POWER_OF_TWO_CLIQUE,
                            POWER_OF_TWO_CLIQUE_UPPER, advisory)
    s = power_exponent(t, 2)
    if s is not None and s >= 2:
        half = Fraction(t, 2)
        return BoundsReport(t, half, half, True, POWER_OF_TWO_BIPARTITE,
                            MULTIPLE_OF_FOUR_UPPER, advisory)
    lower, lower_source = _even_lower(t)
    if t % 4 == 0:
        upper, upper_source = Fraction(t, 2), MULTIPLE_OF_FOUR_UPPER
    else:
        upper = Fraction(t + 1, 2) - Fraction(1, t + 2)
        upper_source = EVEN_UPPER
    return BoundsReport(t, lower, upper, lower == upper, lower_source,
                        upper_source, advisory)


def _satisfied(degrees, alive, d):
    if not alive:
        return False
    edges = sum(degrees[v] for v in alive)  # twice the edge count
    return (min(degrees[v] for v in alive) > d / 2 and
            Fraction(edges, len(alive)) >= d)


def extract_dense_subgraph(g, d):
    """Delete least-index vertices of degree <= d/2 until the remaining
    graph has minimum degree > d/2 and average degree >= d."""
    d = Fraction(d)
    if d <= 0:
        raise exceptions.InvalidParameter("Density must be > 0!")
    if g.average_degree() < d:
        msg = "Average degree {0} is below d = {1}!"
        raise exceptions.InvalidParameter(msg.format(g.average_degree(), d))
    alive = set(g.vertices())
    degrees = dict((v, g.degree(v)) for v in alive)
    while not _satisfied(degrees, alive, d):
        low = [v for v in sorted(alive) if degrees[v] <= d / 2]
        if not low:
            break
        victim = low[0]
        alive.discard(victim)
        for w in g.neighbors(victim):
            if w in alive:
                degrees[w] -= 1
        logger.debug("Deleted vertex {0}, {1} left.".format(victim, len(alive)))
    return g.induced_subgraph(alive)[0]


def component_filter(g, d):
    """Keep the components whose average degree exceeds d."""
    d = Fraction(d)
    kept = []
    for component in g.components():
        sub = g.induced_subgraph(component)[0]
        if sub.average_degree() > d:
            kept.extend(component)
    return g.induced_subgraph(kept)[0]
