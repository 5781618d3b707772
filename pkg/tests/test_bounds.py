import json
import random
import itertools
import unittest
from fractions import Fraction
from broomlab import graph
from broomlab import bounds
from broomlab import exceptions


fixtures = json.load(open("tests/fixtures.json"))


class TestBoundsFor(unittest.TestCase):

    def test_table(self):
        for t, expected in fixtures["bounds"].items():
            report = bounds.bounds_for(int(t))
            self.assertEqual(report.lower, Fraction(expected["lower"]))
            self.assertEqual(report.upper, Fraction(expected["upper"]))
            self.assertEqual(report.exact, expected["exact"])

    def test_text(self):
        self.assertEqual(str(bounds.bounds_for(9)), "exact 9/2")
        self.assertEqual(str(bounds.bounds_for(10)), "[9/2, 65/12]")
        self.assertEqual(bounds.bounds_for(10).upper,
                         Fraction(11, 2) - Fraction(1, 12))

    def test_provenance(self):
        report = bounds.bounds_for(26)
        self.assertEqual(report.lower_source, bounds.POWER_OF_THREE_CLIQUE)
        self.assertEqual(report.upper_source, bounds.EVEN_UPPER)
        report = bounds.bounds_for(12)
        self.assertEqual(report.lower_source, bounds.CLIQUE_COPIES)
        self.assertEqual(report.upper_source, bounds.MULTIPLE_OF_FOUR_UPPER)
        report = bounds.bounds_for(6)
        self.assertEqual(report.lower_source, bounds.POWER_OF_TWO_CLIQUE)

    def test_advisory(self):
        self.assertIsNotNone(bounds.bounds_for(5).advisory)
        self.assertIsNone(bounds.bounds_for(4).advisory)

    def test_sweep(self):
        for t in range(3, 5000):
            report = bounds.bounds_for(t)
            self.assertLessEqual(report.lower, report.upper)
            if report.exact:
                self.assertEqual(report.lower, report.upper)

    def test_invalid(self):
        def callback():
            bounds.bounds_for(2)
        self.assertRaises(exceptions.InvalidParameter, callback)

        def callback():
            bounds.bounds_for(9, ell=4)
        self.assertRaises(exceptions.InvalidParameter, callback)

    def test_power_exponent(self):
        self.assertEqual(bounds.power_exponent(27, 3), 3)
        self.assertEqual(bounds.power_exponent(1, 2), 0)
        self.assertIsNone(bounds.power_exponent(12, 2))
        self.assertIsNone(bounds.power_exponent(0, 2))


class TestDenseSubgraph(unittest.TestCase):

    def test_unchanged(self):
        g = graph.build_clique(6)
        self.assertEqual(bounds.extract_dense_subgraph(g, 4), g)

    def test_pendant(self):
        k10 = graph.build_clique(10)
        g = graph.Graph(11, list(k10.edges) + [(0, 10)])
        self.assertEqual(bounds.extract_dense_subgraph(g, 8), k10)

        # average degree 92/11 is below 9
        def callback():
            bounds.extract_dense_subgraph(g, 9)
        self.assertRaises(exceptions.InvalidParameter, callback)

    def test_positive_density(self):
        # no vertex set of an edgeless graph has minimum degree above 0
        def callback():
            bounds.extract_dense_subgraph(graph.Graph(5), 0)
        self.assertRaises(exceptions.InvalidParameter, callback)

        def callback():
            bounds.extract_dense_subgraph(graph.build_clique(4), -1)
        self.assertRaises(exceptions.InvalidParameter, callback)

    def test_star_stops_early(self):
        star = graph.build_biclique(1, 100)
        self.assertEqual(bounds.extract_dense_subgraph(star, Fraction("1.9")),
                         star)

    def test_random(self):
        rng = random.Random(1)
        for _ in range(1000):
            n = rng.randint(2, 12)
            g = graph.Graph(n, [e for e in itertools.combinations(range(n), 2)
                                if rng.random() < rng.random()])
            if not g.m:
                continue
            d = g.average_degree() * Fraction(rng.randint(1, 10), 10)
            out = bounds.extract_dense_subgraph(g, d)
            self.assertGreater(out.n, 0)
            self.assertGreater(out.min_degree(), d / 2)
            self.assertGreaterEqual(out.average_degree(), d)


class TestComponentFilter(unittest.TestCase):

    def test_filter(self):
        g = graph.disjoint_union(graph.build_clique(10), 10)
        g = graph.Graph(13, list(g.edges) + [(10, 11), (10, 12), (11, 12)])
        self.assertEqual(bounds.component_filter(g, 8), graph.build_clique(10))

    def test_all_dense(self):
        g = graph.disjoint_union(graph.build_clique(4), 8)
        self.assertEqual(bounds.component_filter(g, 2), g)

    def test_empty(self):
        self.assertEqual(bounds.component_filter(graph.Graph(0), 1).n, 0)


if __name__ == '__main__':
    unittest.main()
