"""Near-1-factorization search on complete graphs of odd order.

Every vertex is labeled by the single color it misses. In a
rainbow-B_{n-1,3}-free coloring an edge BC of color A forces c(AB) = C and
c(AC) = B (otherwise a trichromatic four-cycle through A completes a
rainbow broom at A), so colors come in triples {A, B, C} covering each
pair exactly once. The engine places whole triples, class by class.

Class 0 is fixed to the pairs (1,2), (3,4), ... by relabeling vertices.
Class 1 is enumerated up to the symmetries fixing class 0: one matching
per cycle type of its union with class 0 on the vertices 3..n-1.
"""
import collections
import random
from broomlab import common
from broomlab import detect
from broomlab import coloring
from broomlab import exceptions
from broomlab.search import SearchConfig, Statistics, search


logger = common.logging.getLogger(__name__)


BRANCH_PREFIX = "cycles:"


def format_cycle_type(cycle_type):
    return BRANCH_PREFIX + ",".join(str(p) for p in cycle_type)


def parse_cycle_type(branch):
    if branch is None:
        return None
    if not branch.startswith(BRANCH_PREFIX):
        raise exceptions.InvalidParameter(
            "Unknown branch '{0}'!".format(branch)
        )
    body = branch[len(BRANCH_PREFIX):]
    if not body:
        return ()
    try:
        return tuple(sorted((int(p) for p in body.split(",")), reverse=True))
    except ValueError:
        raise exceptions.InvalidParameter(
            "Unknown branch '{0}'!".format(branch)
        )


def cycle_types(n):
    """Partitions of (n-3)/2 pairs into alternating cycles (parts >= 2)."""
    total = (n - 3) // 2

    def _parts(rest, largest):
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, largest), 1, -1):
            for tail in _parts(rest - part, part):
                yield (part,) + tail

    return list(_parts(total, total))


def has_long_alternating_component(a, b):
    """True if two matchings (partner dicts) contain a 2-colored path with
    four edges, i.e. their union has a component on five or more vertices."""
    seen = set()
    for start in set(a) | set(b):
        if start in seen:
            continue
        stack, size = [start], 0
        seen.add(start)
        while stack:
            v = stack.pop()
            size += 1
            for partner in (a.get(v), b.get(v)):
                if partner is not None and partner not in seen:
                    seen.add(partner)
                    stack.append(partner)
        if size >= 5:
            return True
    return False


class NearFactorizationSearch(object):

    def __init__(self, config):
        if config.mode != common.MODE_NEAR_FACTORIZATION:
            raise exceptions.InvalidParameter(
                "Config is not in near-factorization mode!"
            )
        self.config = config
        self.host = config.host
        self.n = config.host.n
        self.pattern = detect.BroomPattern(config.t)
        self.branch = parse_cycle_type(config.branch)
        self.third = [[-1] * self.n for _ in range(self.n)]
        self.covered = [0] * self.n  # vertices covered per class
        self.stats = Statistics(config.rules)
        self._rng = random.Random(config.seed)
        self.lemma_active = False
        if common.RULE_LEMMA in config.rules:
            from broomlab import lemmas
            registry = config.lemma_registry or lemmas.LemmaRegistry()
            self.lemma_active = registry.prepare(config)

    # triples

    def _place(self, a, b, c):
        third = self.third
        third[a][b] = third[b][a] = c
        third[a][c] = third[c][a] = b
        third[b][c] = third[c][b] = a
        for k in (a, b, c):
            self.covered[k] += 2

    def _remove(self, a, b, c):
        third = self.third
        third[a][b] = third[b][a] = -1
        third[a][c] = third[c][a] = -1
        third[b][c] = third[c][b] = -1
        for k in (a, b, c):
            self.covered[k] -= 2

    def _complete(self, k):
        return self.covered[k] == self.n - 1

    def _partners(self, k):
        """Class k as a partner dict."""
        row = self.third[k]
        return dict((x, row[x]) for x in range(self.n) if row[x] >= 0)

    def _next_slot(self):
        for k in range(self.n):
            if self._complete(k):
                continue
            row = self.third[k]
            for x in range(self.n):
                if x != k and row[x] < 0:
                    return k, x
        return None

    # lemma rule

    def _lemma_fires(self, classes):
        for k in classes:
            if not self._complete(k):
                continue
            mine = self._partners(k)
            for other in range(self.n):
                if other != k and self._complete(other) and \
                        has_long_alternating_component(
                            mine, self._partners(other)):
                    return True
        return False

    def _audit(self, depth, below):
        rule = common.RULE_LEMMA
        audited = self.stats.audited
        audited[rule] = audited.get(rule, 0) + 1
        active, self.lemma_active = self.lemma_active, False
        kept, self.stats = self.stats, Statistics(self.config.rules)
        try:
            witness = below()
        finally:
            self.stats = kept
            self.lemma_active = active
        if witness is not None:
            raise exceptions.PruneUnsound(rule, depth)

    def _maybe_audit(self, depth, below):
        if self.config.audits and \
                self._rng.random() < self.config.audit_rate:
            self._audit(depth, below)

    # search

    def _leaf(self):
        self.stats.leaves += 1
        colors = [self.third[u][v] + 1 for u, v in self.host.edges]
        cg = coloring.ColoredGraph(self.host, colors)
        if detect.find_rainbow_broom(cg, self.pattern) is None:
            return cg
        return None

    def _descend(self, depth):
        slot = self._next_slot()
        if slot is None:
            return self._leaf()
        k, x = slot
        third, stats = self.third, self.stats
        for y in range(x + 1, self.n):
            if y == k or third[k][y] >= 0:
                continue
            if third[x][y] >= 0:
                stats.pruned[common.RULE_C4] += 1
                continue
            self._place(k, x, y)
            stats.nodes += 1
            stats.reach(depth + 1)
            if stats.nodes % common.PROGRESS_INTERVAL == 0:
                logger.debug("{0} nodes, class {1}".format(stats.nodes, k))
            if self.lemma_active and self._lemma_fires((k, x, y)):
                stats.pruned[common.RULE_LEMMA] += 1
                self._maybe_audit(depth + 1, lambda: self._descend(depth + 1))
            else:
                witness = self._descend(depth + 1)
                if witness is not None:
                    return witness
            self._remove(k, x, y)
        return None

    def _fix_first_class(self):
        for v in range(1, self.n, 2):
            self._place(0, v, v + 1)
            self.stats.nodes += 1
        self.stats.reach(self.n // 2)

    def second_class_representatives(self):
        """First matching of each cycle type on 3..n-1, in search order."""
        rest = list(range(3, self.n))
        found = collections.OrderedDict()

        def _match(free, pairs):
            if not free:
                kind = self._cycle_type(pairs)
                if kind not in found:
                    found[kind] = list(pairs)
                return
            x = free[0]
            for y in free[1:]:
                if self.third[x][y] >= 0:
                    continue
                pairs.append((x, y))
                _match([v for v in free if v not in (x, y)], pairs)
                pairs.pop()

        _match(rest, [])
        return found

    def _cycle_type(self, pairs):
        first = dict()
        for v in range(3, self.n, 2):
            first[v], first[v + 1] = v + 1, v
        second = dict()
        for x, y in pairs:
            second[x], second[y] = y, x
        seen, lengths = set(), []
        for start in sorted(first):
            if start in seen:
                continue
            v, size = start, 0
            while v not in seen:
                seen.add(v)
                w = first[v]
                seen.add(w)
                size += 1
                v = second[w]
            lengths.append(size)
        return tuple(sorted(lengths, reverse=True))

    def _run_branch(self, pairs, depth):
        for x, y in pairs:
            self._place(1, x, y)
            self.stats.nodes += 1
        self.stats.reach(depth + len(pairs))
        try:
            return self._descend(depth + len(pairs))
        finally:
            for x, y in pairs:
                self._remove(1, x, y)

    def run(self):
        self._fix_first_class()
        depth = self.n // 2
        representatives = self.second_class_representatives()
        self.stats.extra["branches"] = len(representatives)
        self.stats.extra["lemma_active"] = int(self.lemma_active)
        logger.info("Second class cycle types: {0}".format(
            ", ".join(format_cycle_type(k) for k in representatives) or "none"
        ))
        for kind, pairs in representatives.items():
            if self.branch is not None and kind != self.branch:
                continue
            if self.lemma_active and kind and max(kind) >= 3:
                self.stats.pruned[common.RULE_LEMMA] += 1
                logger.info("Branch {0} closed by lemma certificate.".format(
                    format_cycle_type(kind)
                ))
                self._maybe_audit(depth, lambda: self._run_branch(pairs, depth))
                continue
            witness = self._run_branch(pairs, depth)
            if witness is not None:
                return witness
        return None


def near_factorization_search(host, t, **kwargs):
    """Convenience wrapper: SearchConfig in near-factorization mode."""
    config = SearchConfig(host, t, mode=common.MODE_NEAR_FACTORIZATION,
                          **kwargs)
    return search(config)
