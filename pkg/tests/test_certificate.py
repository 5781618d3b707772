import os
import shutil
import tempfile
import unittest
import collections
from broomlab import certificate
from broomlab import construct
from broomlab import exceptions
from broomlab.version import ENGINE_VERSION


def _config(t=6):
    return collections.OrderedDict([
        ("host", "clique:8"), ("n", 8), ("m", 28), ("t", t),
        ("mode", "generic"), ("palette_cap", 7), ("rules", "c4"),
    ])


class TestSearchCertificate(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_witness_round_trip(self):
        witness = construct.f2_clique_coloring(3)
        cert = certificate.SearchCertificate(
            _config(), certificate.WITNESS, witness,
            {"nodes": 40, "depth": 28, "pruned.c4": 3, "wall_ms": 12}
        )
        path = os.path.join(self.tmp, "k8.cert")
        cert.write(path)
        self.assertTrue(certificate.looks_like_certificate(path))
        loaded = certificate.load_certificate(path)
        self.assertTrue(loaded.is_witness())
        self.assertEqual(loaded.witness, witness)
        self.assertEqual(loaded.t, 6)
        self.assertEqual(loaded.engine, ENGINE_VERSION)
        self.assertEqual(loaded.stats["pruned.c4"], 3)
        self.assertTrue(loaded.same_run(cert))
        self.assertIsNone(certificate.check_witness(loaded))

    def test_exhausted_format(self):
        cert = certificate.SearchCertificate(
            _config(4), certificate.EXHAUSTED, stats={"nodes": 9}
        )
        lines = cert.format().splitlines()
        self.assertEqual(lines[0], certificate.HEADER)
        self.assertIn("result EXHAUSTED", lines)
        self.assertEqual(lines[-1], "engine {0}".format(ENGINE_VERSION))
        loaded = certificate.parse_certificate(lines)
        self.assertFalse(loaded.is_witness())
        self.assertEqual(loaded.config["host"], "clique:8")

    def test_same_run_ignores_wall_time(self):
        a = certificate.SearchCertificate(
            _config(), certificate.EXHAUSTED,
            stats={"nodes": 5, "wall_ms": 10, "rss_mb": 20}
        )
        b = certificate.SearchCertificate(
            _config(), certificate.EXHAUSTED,
            stats={"nodes": 5, "wall_ms": 99, "rss_mb": 21}
        )
        c = certificate.SearchCertificate(
            _config(), certificate.EXHAUSTED,
            stats={"nodes": 6, "wall_ms": 10, "rss_mb": 20}
        )
        self.assertTrue(a.same_run(b))
        self.assertFalse(a.same_run(c))

    def test_failing_witness(self):
        # the GF(2)^3 coloring of K_8 holds a rainbow B(5,3)
        cert = certificate.SearchCertificate(
            _config(5), certificate.WITNESS, construct.f2_clique_coloring(3)
        )
        self.assertIsNotNone(certificate.check_witness(cert))

    def test_invalid_results(self):
        def callback():
            certificate.SearchCertificate(_config(), "MAYBE")
        self.assertRaises(exceptions.InvalidParameter, callback)

        def callback():
            certificate.SearchCertificate(_config(), certificate.WITNESS)
        self.assertRaises(exceptions.InvalidParameter, callback)


class TestCertificateLoader(unittest.TestCase):

    def _lines(self):
        cert = certificate.SearchCertificate(
            _config(), certificate.EXHAUSTED, stats={"nodes": 9}
        )
        return cert.format().splitlines()

    def _code(self, lines):
        try:
            certificate.parse_certificate(lines)
        except exceptions.CertificateFormatError as e:
            return e.code
        self.fail("parse_certificate accepted {0!r}".format(lines))

    def test_header(self):
        lines = self._lines()
        self.assertEqual(self._code(["broomlab-cert v0"] + lines[1:]),
                         certificate.MALFORMED_HEADER)
        self.assertEqual(self._code([]), certificate.MALFORMED_HEADER)

    def test_missing_field(self):
        lines = [l for l in self._lines() if not l.startswith("t ")]
        self.assertEqual(self._code(lines), certificate.MISSING_FIELD)
        lines = [l for l in self._lines() if not l.startswith("engine ")]
        self.assertEqual(self._code(lines), certificate.MISSING_FIELD)

    def test_bad_statistic(self):
        lines = [l.replace("nodes=9", "nodes=many") for l in self._lines()]
        self.assertEqual(self._code(lines), certificate.MALFORMED_STATISTIC)

    def test_bad_result(self):
        lines = [l.replace("EXHAUSTED", "DONE") for l in self._lines()]
        self.assertEqual(self._code(lines), certificate.MALFORMED_SECTION)

    def test_bad_embedded_coloring(self):
        cert = certificate.SearchCertificate(
            _config(), certificate.WITNESS, construct.f2_clique_coloring(3)
        )
        lines = cert.format().splitlines()
        lines[lines.index("result WITNESS") + 1] = "broomlab-coloring v9"

        def callback():
            certificate.parse_certificate(lines)
        self.assertRaises(exceptions.CertificateFormatError, callback)


if __name__ == '__main__':
    unittest.main()
