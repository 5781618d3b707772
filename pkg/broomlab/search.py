"""Certified exhaustive search for rainbow-B_{t,3}-free proper colorings.

The generic engine colors the host edge by edge, offering colors
1..min(used+1, palette_cap) so that every partition of the edges into at
most palette_cap matchings is visited exactly once. A complete coloring is
accepted iff the broom detector finds nothing.
"""
import collections
import itertools
import random
import time
import psutil
from broomlab import common
from broomlab import coloring
from broomlab import detect
from broomlab import exceptions
from broomlab import graph
from broomlab.certificate import SearchCertificate, WITNESS, EXHAUSTED
from broomlab.control.Thread import ThreadPool


logger = common.logging.getLogger(__name__)


PALETTE_RECOLORING = "palette-recoloring"


def default_palette_cap(host):
    """n-1 or n colors on complete hosts of even or odd order, else |E|."""
    if host.is_complete() and host.n > 1:
        return host.n - 1 if host.n % 2 == 0 else host.n
    return max(host.m, 1)


def host_label(host):
    if host.is_complete():
        return "clique:{0}".format(host.n)
    return "graph:n={0},m={1}".format(host.n, host.m)


def c4_qualifies(host, t):
    """First (cycle, anchor) breaking |N(v) minus {x,y,z}| >= t-2, or None."""
    for cycle in graph.enumerate_c4(host):
        for anchor in cycle:
            if not detect.anchor_qualifies(host, cycle, anchor, t):
                return cycle, anchor
    return None


class SearchConfig(object):

    def __init__(self, host, t, mode=common.MODE_GENERIC, palette_cap=None,
                 rules=None, order=common.ORDER_INDEX,
                 workers=common.DEFAULT_WORKERS, seed=common.DEFAULT_SEED,
                 audit_rate=common.DEFAULT_AUDIT_RATE, host_spec=None,
                 branch=None, lemma_registry=None):
        if t < 3:
            raise exceptions.InvalidParameter(
                "Search needs t >= 3 for B_(t,3), got {0}!".format(t)
            )
        if mode not in common.MODES:
            raise exceptions.InvalidParameter("Unknown mode '{0}'!".format(mode))
        if order not in common.ORDERS:
            raise exceptions.InvalidParameter(
                "Unknown edge order '{0}'!".format(order)
            )
        if workers < 1:
            raise exceptions.InvalidParameter("Need at least one worker!")
        self.host = host
        self.t = t
        self.ell = 3
        self.mode = mode
        self.order = order
        self.workers = workers
        self.seed = seed
        self.audit_rate = audit_rate
        self.host_spec = host_spec or host_label(host)
        self.branch = branch
        self.lemma_registry = lemma_registry
        if mode == common.MODE_NEAR_FACTORIZATION:
            self._init_near_factorization(palette_cap, rules)
        else:
            self._init_generic(palette_cap, rules)

    def _init_near_factorization(self, palette_cap, rules):
        host = self.host
        if not host.is_complete():
            raise exceptions.InvalidParameter(
                "Near-factorization mode needs a complete host!"
            )
        if host.n % 2 == 0:
            raise exceptions.InvalidParameter(
                "Near-factorization mode needs odd order, got {0}; "
                "use generic mode.".format(host.n)
            )
        if self.t != host.n - 1:
            raise exceptions.InvalidParameter(
                "Near-factorization mode needs t = n-1 = {0}!".format(
                    host.n - 1)
            )
        if palette_cap is not None and palette_cap != host.n:
            raise exceptions.InvalidParameter(
                "Near-factorization mode fixes palette_cap = {0}!".format(
                    host.n)
            )
        if self.workers != 1:
            raise exceptions.InvalidParameter(
                "Near-factorization mode runs on a single worker!"
            )
        if self.order != common.ORDER_INDEX:
            raise exceptions.InvalidParameter(
                "Near-factorization mode branches over color classes only!"
            )
        self.palette_cap = host.n
        if rules is None:
            rules = frozenset([common.RULE_C4, common.RULE_LEMMA])
        if common.RULE_BROOM_CAPACITY in rules:
            raise exceptions.InvalidParameter(
                "Rule '{0}' is generic-mode only!".format(
                    common.RULE_BROOM_CAPACITY)
            )
        if common.RULE_C4 not in rules:
            raise exceptions.InvalidParameter(
                "Near-factorization mode always places whole color triples; "
                "rule '{0}' cannot be disabled!".format(common.RULE_C4)
            )
        self.rules = frozenset(rules)
        self.assumed_reductions = (PALETTE_RECOLORING,)

    def _init_generic(self, palette_cap, rules):
        host = self.host
        if self.branch is not None:
            raise exceptions.InvalidParameter(
                "Branch restriction is a near-factorization feature!"
            )
        default_cap = default_palette_cap(host)
        self.palette_cap = default_cap if palette_cap is None else palette_cap
        if self.palette_cap < host.max_degree():
            raise exceptions.InvalidParameter(
                "palette_cap {0} is below the max degree {1}!".format(
                    self.palette_cap, host.max_degree())
            )
        qualifies = c4_qualifies(host, self.t) is None
        if rules is None:
            rules = set([common.RULE_BROOM_CAPACITY])
            if qualifies:
                rules.add(common.RULE_C4)
        if common.RULE_LEMMA in rules:
            raise exceptions.InvalidParameter(
                "Rule '{0}' is near-factorization only!".format(
                    common.RULE_LEMMA)
            )
        if common.RULE_C4 in rules and not qualifies:
            cycle, anchor = c4_qualifies(host, self.t)
            raise exceptions.InvalidParameter(
                "Rule '{0}' needs |N(v) - cycle| >= t-2 on every 4-cycle; "
                "fails at vertex {1} of {2}!".format(common.RULE_C4, anchor,
                                                     cycle)
            )
        self.rules = frozenset(rules)
        recolored = host.is_complete() and self.palette_cap < host.m
        self.assumed_reductions = (PALETTE_RECOLORING,) if recolored else ()

    @property
    def deterministic(self):
        return self.workers == 1

    @property
    def audits(self):
        return self.audit_rate > 0 and \
            self.host.n <= common.AUDIT_MAX_VERTICES

    def echo(self):
        """Certificate config block; excludes worker count and volatile data."""
        echo = collections.OrderedDict([
            ("host", self.host_spec),
            ("n", self.host.n),
            ("m", self.host.m),
            ("t", self.t),
            ("ell", self.ell),
            ("mode", self.mode),
            ("palette_cap", self.palette_cap),
            ("rules", ",".join(sorted(self.rules)) or "none"),
            ("order", self.order),
            ("deterministic", "yes" if self.deterministic else "no"),
            ("seed", self.seed),
            ("audit_rate", self.audit_rate if self.audits else 0),
            ("assumed", ",".join(self.assumed_reductions) or "none"),
        ])
        if self.branch is not None:
            echo["branch"] = self.branch
        return echo

    def with_rules(self, rules, branch=None):
        return SearchConfig(
            self.host, self.t, mode=self.mode, palette_cap=self.palette_cap,
            rules=rules, order=self.order, workers=self.workers,
            seed=self.seed, audit_rate=self.audit_rate,
            host_spec=self.host_spec, branch=branch,
            lemma_registry=self.lemma_registry
        )


class Statistics(object):
    """Counters for one run; merging is associative."""

    def __init__(self, rules=()):
        self.nodes = 0
        self.leaves = 0
        self.depth = 0
        self.pruned = collections.OrderedDict((r, 0) for r in sorted(rules))
        self.audited = collections.OrderedDict()
        self.extra = collections.OrderedDict()

    def reach(self, depth):
        if depth > self.depth:
            self.depth = depth

    def merge(self, other):
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.reach(other.depth)
        for table, theirs in ((self.pruned, other.pruned),
                              (self.audited, other.audited),
                              (self.extra, other.extra)):
            for key, value in theirs.items():
                table[key] = table.get(key, 0) + value
        return self

    def as_dict(self, wall_ms=None):
        out = collections.OrderedDict([
            ("nodes", self.nodes), ("leaves", self.leaves),
            ("depth", self.depth),
        ])
        for rule, count in self.pruned.items():
            out["pruned.{0}".format(rule)] = count
        for rule, count in self.audited.items():
            out["audited.{0}".format(rule)] = count
        out.update(self.extra)
        if wall_ms is not None:
            out["wall_ms"] = wall_ms
            rss = psutil.Process().memory_info().rss
            out["rss_mb"] = rss // (1024 * 1024)
        return out


class PartialColoring(object):
    """Colors by edge index (0 = uncolored) with per-vertex color bitmasks.

    Colors are introduced canonically: a new color id is always used+1.
    """

    def __init__(self, host, palette_cap):
        self.host = host
        self.palette_cap = palette_cap
        self.colors = [0] * host.m
        self.masks = [0] * host.n
        self.via = [[-1] * (palette_cap + 2) for _ in range(host.n)]
        self.uncolored = [host.degree(v) for v in host.vertices()]
        self.count = [0] * (palette_cap + 2)
        self.used = 0
        self.colored = 0

    def allowed(self, i):
        u, v = self.host.edges[i]
        busy = self.masks[u] | self.masks[v]
        top = min(self.used + 1, self.palette_cap)
        return [c for c in range(1, top + 1) if not busy >> c & 1]

    def assign(self, i, c):
        u, v = self.host.edges[i]
        if self.colors[i] or (self.masks[u] | self.masks[v]) >> c & 1:
            raise exceptions.InvalidParameter(
                "Cannot color edge {0} with {1}!".format(i, c)
            )
        if c > self.used + 1 or c > self.palette_cap:
            raise exceptions.InvalidParameter(
                "Color {0} skips the canonical order!".format(c)
            )
        self.colors[i] = c
        self.masks[u] |= 1 << c
        self.masks[v] |= 1 << c
        self.via[u][c] = v
        self.via[v][c] = u
        self.uncolored[u] -= 1
        self.uncolored[v] -= 1
        self.count[c] += 1
        self.colored += 1
        if c > self.used:
            self.used = c

    def unassign(self, i):
        c = self.colors[i]
        u, v = self.host.edges[i]
        self.colors[i] = 0
        self.masks[u] &= ~(1 << c)
        self.masks[v] &= ~(1 << c)
        self.via[u][c] = -1
        self.via[v][c] = -1
        self.uncolored[u] += 1
        self.uncolored[v] += 1
        self.count[c] -= 1
        self.colored -= 1
        while self.used and not self.count[self.used]:
            self.used -= 1

    def is_complete(self):
        return self.colored == self.host.m

    def to_coloring(self):
        return coloring.ColoredGraph(self.host, self.colors)


class C4Index(object):
    """4-cycles of a host by edge and by vertex, for the four-cycle rule."""

    def __init__(self, host, t):
        bad = c4_qualifies(host, t)
        if bad is not None:
            raise exceptions.InvalidParameter(
                "Host does not support the four-cycle rule at t={0}: "
                "vertex {1} of {2}!".format(t, bad[1], bad[0])
            )
        self.host = host
        self.cycles = []
        self.by_edge = [[] for _ in range(host.m)]
        self.by_vertex = [[] for _ in range(host.n)]
        for cycle in graph.enumerate_c4(host):
            ring = zip(cycle, cycle[1:] + cycle[:1])
            edges = tuple(host.index_of(u, v) for u, v in ring)
            cid = len(self.cycles)
            self.cycles.append((cycle, edges))
            for e in edges:
                self.by_edge[e].append(cid)
            for v in cycle:
                self.by_vertex[v].append(cid)


C4Verdict = collections.namedtuple("C4Verdict", ["pruned", "cycle", "reason"])


def _cycle_defect(state, cycle, edges, anchors):
    colors = [state.colors[e] for e in edges]
    if 0 in colors:
        return None
    distinct = len(set(colors))
    if distinct == 3:
        return detect.TRICHROMATIC
    if distinct < 4:
        return None
    for pos, v in enumerate(cycle):
        if v not in anchors or state.uncolored[v]:
            continue
        mask = state.masks[v]
        opposite = (colors[(pos + 1) % 4], colors[(pos + 2) % 4])
        if not all(mask >> c & 1 for c in opposite):
            return detect.RAINBOW_UNANCHORED
    return None


def apply_c4_prune(state, index):
    """Scan every 4-cycle of the host for a state no rainbow-free
    completion can have: a fully colored trichromatic cycle, or a rainbow
    one whose fully colored anchor misses a color of its opposite edges."""
    for cycle, edges in index.cycles:
        reason = _cycle_defect(state, cycle, edges, cycle)
        if reason is not None:
            return C4Verdict(True, cycle, reason)
    return C4Verdict(False, None, None)


class _Stopped(Exception):
    pass


class GenericSearch(object):

    def __init__(self, config, stop=None):
        self.config = config
        self.host = config.host
        self.t = config.t
        self.state = PartialColoring(self.host, config.palette_cap)
        self.pattern = detect.BroomPattern(config.t, config.ell)
        self.rules = config.rules
        self.index = None
        if common.RULE_C4 in self.rules:
            self.index = C4Index(self.host, config.t)
        self.incident = [[(w, self.host.index_of(v, w))
                          for w in self.host.neighbors(v)]
                         for v in self.host.vertices()]
        self.stats = Statistics(self.rules)
        self._rng = random.Random(config.seed)
        self._stop = stop

    # rules

    def _c4_fires(self, e):
        st, index = self.state, self.index
        for cid in index.by_edge[e]:
            cycle, edges = index.cycles[cid]
            if _cycle_defect(st, cycle, edges, cycle):
                return True
        for v in self.host.edges[e]:
            if st.uncolored[v]:
                continue
            for cid in index.by_vertex[v]:
                cycle, edges = index.cycles[cid]
                if _cycle_defect(st, cycle, edges, (v,)):
                    return True
        return False

    def _colored(self, v):
        colors = self.state.colors
        return [(w, colors[i]) for w, i in self.incident[v] if colors[i]]

    def _broom_at(self, path, handle_colors):
        """True if `path` (rainbow, colored) ends in enough colored bristles."""
        st = self.state
        x0, x1, x2, base = path
        excluded = set([x2])
        for w in (x0, x1):
            if self.host.has_edge(base, w) and \
                    st.colors[self.host.index_of(base, w)]:
                excluded.add(w)
        for c in handle_colors[:2]:
            w = st.via[base][c]
            if w >= 0:
                excluded.add(w)
        colored_degree = self.host.degree(base) - st.uncolored[base]
        return colored_degree - len(excluded) >= self.t - 3

    def _handles_ending_at(self, base):
        for x2, c23 in self._colored(base):
            for x1, c12 in self._colored(x2):
                if x1 == base or c12 == c23:
                    continue
                for x0, c01 in self._colored(x1):
                    if x0 in (x2, base) or c01 in (c12, c23):
                        continue
                    yield (x0, x1, x2, base), (c01, c12, c23)

    def _handles_through(self, p, q, c):
        # (p, q) as the first handle edge
        for x2, c2 in self._colored(q):
            if x2 == p:
                continue
            for x3, c3 in self._colored(x2):
                if x3 in (p, q) or c3 in (c, c2):
                    continue
                yield (p, q, x2, x3), (c, c2, c3)
        # (p, q) as the middle handle edge
        for x0, c0 in self._colored(p):
            if x0 == q:
                continue
            for x3, c3 in self._colored(q):
                if x3 in (x0, p) or c3 == c0:
                    continue
                yield (x0, p, q, x3), (c0, c, c3)

    def _broom_capacity_fires(self, e):
        u, v = self.host.edges[e]
        c = self.state.colors[e]
        handles = itertools.chain(
            self._handles_ending_at(u), self._handles_ending_at(v),
            self._handles_through(u, v, c), self._handles_through(v, u, c)
        )
        for path, handle_colors in handles:
            if self._broom_at(path, handle_colors):
                return True
        return False

    def _fires(self, e, rules):
        if common.RULE_C4 in rules and self._c4_fires(e):
            return common.RULE_C4
        if common.RULE_BROOM_CAPACITY in rules and \
                self._broom_capacity_fires(e):
            return common.RULE_BROOM_CAPACITY
        return None

    # branching

    def _next_edge(self):
        st = self.state
        if self.config.order == common.ORDER_INDEX:
            return st.colors.index(0)
        best, best_count = None, None
        for i, c in enumerate(st.colors):
            if c:
                continue
            count = len(st.allowed(i))
            if best is None or count < best_count:
                best, best_count = i, count
                if count <= 1:
                    break
        return best

    def _leaf(self):
        self.stats.leaves += 1
        cg = self.state.to_coloring()
        if detect.find_rainbow_broom(cg, self.pattern) is None:
            return cg
        return None

    def _audit(self, rule, rules, depth):
        audited = self.stats.audited
        audited[rule] = audited.get(rule, 0) + 1
        kept, self.stats = self.stats, Statistics(rules)
        try:
            witness = self._descend(depth + 1, rules - {rule})
        finally:
            self.stats = kept
        if witness is not None:
            raise exceptions.PruneUnsound(rule, depth + 1)

    def _descend(self, depth, rules):
        st = self.state
        if st.is_complete():
            return self._leaf()
        i = self._next_edge()
        for c in st.allowed(i):
            st.assign(i, c)
            stats = self.stats
            stats.nodes += 1
            stats.reach(depth + 1)
            if stats.nodes % common.PROGRESS_INTERVAL == 0:
                self._progress()
            rule = self._fires(i, rules)
            if rule is not None:
                stats.pruned[rule] += 1
                if self.config.audits and \
                        self._rng.random() < self.config.audit_rate:
                    self._audit(rule, rules, depth)
            else:
                witness = self._descend(depth + 1, rules)
                if witness is not None:
                    return witness
            st.unassign(i)
        return None

    def _progress(self):
        if self._stop is not None and self._stop.is_set():
            raise _Stopped()
        logger.debug("{0} nodes, {1} colored, depth {2}".format(
            self.stats.nodes, self.state.colored, self.stats.depth
        ))

    # prefixes for parallel hunting

    def prefixes(self, depth):
        """Surviving assignment sequences of the first `depth` branch levels,
        in search order."""
        found = []
        st = self.state

        def _collect(path):
            if len(path) == depth or st.is_complete():
                found.append(tuple(path))
                return
            i = self._next_edge()
            for c in st.allowed(i):
                st.assign(i, c)
                self.stats.nodes += 1
                self.stats.reach(len(path) + 1)
                rule = self._fires(i, self.rules)
                if rule is None:
                    path.append((i, c))
                    _collect(path)
                    path.pop()
                else:
                    self.stats.pruned[rule] += 1
                st.unassign(i)

        _collect([])
        return found

    def replay(self, prefix):
        for i, c in prefix:
            self.state.assign(i, c)
        return self.state.colored

    def run_below(self, prefix):
        depth = self.replay(prefix)
        return self._descend(depth, self.rules)

    def run(self):
        return self._descend(0, self.rules)


def _certify(config, witness, stats, started):
    wall_ms = int((time.time() - started) * 1000)
    if witness is not None:
        if not coloring.check_proper(witness).ok or \
                detect.find_rainbow_broom(witness, detect.BroomPattern(
                    config.t)) is not None:
            raise exceptions.CertificateMismatch(
                "Search returned a witness that fails re-verification!"
            )
        result = WITNESS
    else:
        result = EXHAUSTED
    cert = SearchCertificate(config.echo(), result, witness,
                             stats.as_dict(wall_ms))
    logger.info("Search {0} t={1} {2}: {3}".format(
        config.host_spec, config.t, config.mode, cert.summary()
    ))
    return cert


def _parallel_hunt(config, started):
    root = GenericSearch(config)
    prefixes = root.prefixes(common.DEFAULT_SPLIT_DEPTH)
    logger.info("Hunting over {0} prefixes with {1} workers.".format(
        len(prefixes), config.workers
    ))
    pool = ThreadPool(config.workers)
    hits = []

    def _hunt(k, prefix):
        engine = GenericSearch(config, stop=pool.stopped)
        try:
            if engine.run_below(prefix) is not None:
                hits.append(k)
                pool.stop()
        except _Stopped:
            pass

    try:
        for k, prefix in enumerate(prefixes):
            pool.add_task(_hunt, k, prefix)
        pool.wait_completion()
    finally:
        pool.shutdown()
    if not hits:
        raise exceptions.NondeterministicExhaustion(config.workers)

    # rerun in order so the least witness is the one reported
    stats = root.stats
    for prefix in prefixes[:min(hits) + 1]:
        engine = GenericSearch(config)
        witness = engine.run_below(prefix)
        stats.merge(engine.stats)
        if witness is not None:
            return _certify(config, witness, stats, started)
    raise exceptions.CertificateMismatch(
        "Sequential rerun lost the witness of prefix {0}!".format(min(hits))
    )


def search(config):
    """Run the configured engine and return a SearchCertificate."""
    started = time.time()
    logger.info("Searching {0} t={1} mode={2} palette_cap={3} rules={4}".format(
        config.host_spec, config.t, config.mode, config.palette_cap,
        ",".join(sorted(config.rules)) or "none"
    ))
    if config.mode == common.MODE_NEAR_FACTORIZATION:
        from broomlab import nearfactor
        engine = nearfactor.NearFactorizationSearch(config)
        witness = engine.run()
        return _certify(config, witness, engine.stats, started)
    if not config.deterministic:
        return _parallel_hunt(config, started)
    engine = GenericSearch(config)
    witness = engine.run()
    return _certify(config, witness, engine.stats, started)


# 1-factorizations


def _union_is_four_cycles(a, b):
    """Union of two perfect matchings (edge sets) is a union of 4-cycles."""
    partner_a = dict()
    for u, v in a:
        partner_a[u], partner_a[v] = v, u
    partner_b = dict()
    for u, v in b:
        partner_b[u], partner_b[v] = v, u
    for x in partner_a:
        y = partner_a[x]
        z = partner_b[y]
        w = partner_a[z]
        if partner_b[w] != x:
            return False
    return True


def enumerate_one_factorizations(k, four_cycle_property=False,
                                 up_to_isomorphism=False):
    """1-factorizations of K_k, color j being the class of edge (0, j).

    With four_cycle_property, only factorizations where c(xy) = c(zw)
    forces c(yz) = c(xw); with up_to_isomorphism, one per vertex
    relabeling class.
    """
    if k < 2 or k % 2:
        raise exceptions.InvalidParameter(
            "1-factorizations need an even order >= 2, got {0}!".format(k)
        )
    if k > common.MAX_FACTORIZATION_ORDER:
        raise exceptions.SizeGuardError("1-factorization enumeration", k,
                                        common.MAX_FACTORIZATION_ORDER)
    host = graph.build_clique(k)
    used = set()
    classes = []
    kept = []

    def _matchings(covered, current):
        free = [v for v in range(k) if v not in covered]
        if not free:
            yield list(current)
            return
        x = free[0]
        for y in free[1:]:
            if (x, y) in used:
                continue
            current.append((x, y))
            covered.update((x, y))
            yield from _matchings(covered, current)
            covered.difference_update((x, y))
            current.pop()

    def _classes(j):
        if j == k:
            yield classes
            return
        if (0, j) in used:
            return
        for matching in _matchings(set([0, j]), [(0, j)]):
            if four_cycle_property and not all(
                    _union_is_four_cycles(matching, other)
                    for other in classes):
                continue
            used.update(matching)
            classes.append(matching)
            yield from _classes(j + 1)
            classes.pop()
            used.difference_update(matching)

    for found in _classes(1):
        colors = [0] * host.m
        for j, matching in enumerate(found):
            for u, v in matching:
                colors[host.index_of(u, v)] = j + 1
        cg = coloring.ColoredGraph(host, colors)
        if up_to_isomorphism:
            if any(coloring.colorings_isomorphic(cg, other) for other in kept):
                continue
            kept.append(cg)
        yield cg
