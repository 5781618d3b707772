import random
import itertools
import unittest
from broomlab import graph
from broomlab import coloring
from broomlab import construct
from broomlab import detect
from broomlab import exceptions


def random_proper_coloring(rng, n, p=0.6):
    host = graph.Graph(n, [e for e in itertools.combinations(range(n), 2)
                           if rng.random() < p])
    palette = list(range(1, 2 * host.max_degree() + 1))
    busy = [set() for _ in range(n)]
    colors = []
    for u, v in host.edges:
        c = rng.choice([c for c in palette if c not in busy[u] | busy[v]])
        busy[u].add(c)
        busy[v].add(c)
        colors.append(c)
    return coloring.ColoredGraph(host, colors)


def _colored(n, pairs):
    """ColoredGraph from {(u, v): color}."""
    host = graph.Graph(n, pairs.keys())
    return coloring.ColoredGraph(host, [pairs[e] for e in host.edges])


class TestRainbowBroom(unittest.TestCase):

    def test_constructions_are_free(self):
        self.assertIsNone(detect.find_rainbow_broom(
            construct.odd_clique_coloring(9), detect.BroomPattern(9)
        ))
        self.assertIsNone(detect.find_rainbow_broom(
            construct.f3_clique_coloring(2), detect.BroomPattern(8)
        ))

    def test_too_few_edges(self):
        cg = _colored(4, {(0, 1): 1, (1, 2): 2, (2, 3): 3})
        self.assertIsNone(detect.find_rainbow_broom(cg,
                                                    detect.BroomPattern(4)))
        self.assertIsNotNone(detect.find_rainbow_broom(
            cg, detect.BroomPattern(3)
        ))

    def test_star(self):
        t = 6
        star = graph.build_biclique(1, t)
        cg = coloring.ColoredGraph(star, range(1, t + 1))
        self.assertIsNone(detect.find_rainbow_broom(cg,
                                                    detect.BroomPattern(t)))

    def test_least_witness(self):
        # K_5 with the Z_5 coloring c(uv) = u + v
        host = graph.build_clique(5)
        cg = coloring.ColoredGraph(host, [(u + v) % 5 + 1
                                          for u, v in host.edges])
        found = detect.find_rainbow_broom(cg, detect.BroomPattern(4))
        self.assertEqual(found.handle, (0, 1, 2, 3))
        self.assertEqual(found.bristles, (4,))
        self.assertTrue(found.is_rainbow_in(cg))
        self.assertEqual(len(found.edges()), 4)

    def test_improper(self):
        cg = _colored(3, {(0, 1): 1, (1, 2): 1})

        def callback():
            detect.find_rainbow_broom(cg, detect.BroomPattern(2, 2))
        self.assertRaises(exceptions.PreconditionViolation, callback)

    def test_pattern(self):
        pat = detect.BroomPattern(9)
        self.assertEqual((pat.order, pat.bristle_count), (10, 6))

        def callback():
            detect.BroomPattern(2)
        self.assertRaises(exceptions.InvalidParameter, callback)

    def test_matches_naive(self):
        rng = random.Random(20160729)
        for _ in range(1000):
            cg = random_proper_coloring(rng, rng.randint(3, 7))
            ell = rng.choice([2, 3])
            pat = detect.BroomPattern(rng.randint(ell, 5), ell)
            fast = detect.find_rainbow_broom(cg, pat)
            self.assertEqual(fast, detect.naive_rainbow_broom(cg, pat))
            if fast is not None:
                self.assertTrue(fast.is_rainbow_in(cg))

    def test_long_handle_uses_naive(self):
        rng = random.Random(11)
        for _ in range(20):
            cg = random_proper_coloring(rng, 6, p=0.8)
            pat = detect.BroomPattern(5, 4)
            self.assertEqual(
                detect.find_rainbow_broom(cg, pat) is None,
                detect.naive_rainbow_broom(cg, pat) is None
            )


class TestRainbowPath(unittest.TestCase):

    def test_isolated(self):
        cg = _colored(3, {(0, 1): 1})
        self.assertIsNone(detect.find_rainbow_path_from(cg, 2, 1))

    def test_k4_round_robin_has_none(self):
        # first and last edge of a 3-edge path in K_4 form a perfect matching
        cg = coloring.round_robin_factorize(4)
        for v in range(4):
            self.assertIsNone(detect.find_rainbow_path_from(cg, v, 3))

    def test_short_path(self):
        cg = _colored(3, {(0, 1): 1, (1, 2): 2})
        self.assertEqual(detect.find_rainbow_path_from(cg, 0, 2), (0, 1, 2))


class TestCycleClasses(unittest.TestCase):

    def test_bichromatic(self):
        cg = _colored(4, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2})
        self.assertEqual(detect.classify_c4(cg, (0, 1, 2, 3), 0),
                         detect.BICHROMATIC)

    def test_trichromatic(self):
        cg = _colored(4, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 3})
        self.assertEqual(detect.classify_c4(cg, (0, 1, 2, 3), 1),
                         detect.TRICHROMATIC)
        verdict = detect.check_good_coloring(cg, 10)
        self.assertFalse(verdict.ok)
        self.assertEqual(verdict.trichromatic, (0, 1, 2, 3))

    def test_rainbow(self):
        cg = _colored(6, {(0, 1): 1, (1, 2): 2, (2, 3): 3, (0, 3): 4,
                          (0, 4): 2, (0, 5): 3})
        self.assertEqual(detect.classify_c4(cg, (0, 1, 2, 3), 0),
                         detect.RAINBOW_ANCHORED)
        self.assertEqual(detect.classify_c4(cg, (0, 1, 2, 3), 2),
                         detect.RAINBOW_UNANCHORED)

        def callback():
            detect.classify_c4(cg, (0, 1, 2, 3), 4)
        self.assertRaises(exceptions.InvalidParameter, callback)

    def test_f2_clique(self):
        cg = construct.f2_clique_coloring(3)
        histogram = detect.c4_histogram(cg)
        self.assertEqual(histogram[detect.TRICHROMATIC], 0)
        self.assertEqual(histogram[detect.RAINBOW_UNANCHORED], 0)
        self.assertGreater(histogram[detect.BICHROMATIC], 0)
        self.assertEqual(detect.c4_violations(cg, 6), [])
        self.assertTrue(detect.check_good_coloring(cg, 6).ok)

    def test_edgeless_good(self):
        cg = coloring.ColoredGraph(graph.Graph(4), [])
        self.assertTrue(detect.check_good_coloring(cg, 3).ok)
        self.assertEqual(sum(detect.c4_histogram(cg).values()), 0)


class TestSigma(unittest.TestCase):

    def test_empty(self):
        cg = _colored(4, {(0, 1): 1, (2, 3): 1})
        self.assertEqual(len(detect.extract_sigma(cg, 0, 2)), 0)

    def test_two_transpositions(self):
        # u=0, v=1 with common neighbors 2..5; c(uv) is the first color
        cg = _colored(6, {(0, 1): 5, (0, 2): 1, (0, 3): 2, (0, 4): 3,
                          (0, 5): 4, (1, 2): 2, (1, 3): 1, (1, 4): 4,
                          (1, 5): 3})
        sigma = detect.extract_sigma(cg, 0, 1)
        self.assertEqual(sigma.uv_color, 1)
        self.assertEqual(sigma.cycles(), [(2, 3), (4, 5)])
        self.assertTrue(sigma.is_bijection())
        self.assertTrue(sigma.is_derangement())
        self.assertTrue(sigma.is_involution())

    def test_f2_clique_involutions(self):
        summary = detect.sigma_summary(construct.f2_clique_coloring(3))
        self.assertEqual(summary["pairs"], 28)
        self.assertEqual(summary["involution"], 28)
        self.assertEqual(summary["derangement"], 28)


class TestDegreeStructure(unittest.TestCase):

    def test_k10(self):
        report = detect.degree_structure_report(
            construct.odd_clique_coloring(9), 9
        )
        self.assertEqual((report.top, report.high, report.low), (0, 10, 0))
        self.assertTrue(report.holds)

    def test_f2_clique(self):
        report = detect.degree_structure_report(
            construct.f2_clique_coloring(3), 6
        )
        self.assertEqual(report.top, 8)
        self.assertFalse(report.holds)

    def test_too_many_vertices(self):
        def callback():
            detect.degree_structure_report(construct.f3_clique_coloring(2), 6)
        self.assertRaises(exceptions.InvalidParameter, callback)


if __name__ == '__main__':
    unittest.main()
