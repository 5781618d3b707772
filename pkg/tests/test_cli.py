import io
import os
import json
import contextlib
import tempfile
import unittest
from broomlab import cli
from broomlab import graph
from broomlab import search
from broomlab import construct
from broomlab import certificate


fixtures = json.load(open("tests/fixtures.json"))


class TestCliArgs(unittest.TestCase):

    def tearDown(self):
        for path in getattr(self, "paths", []):
            if os.path.exists(path):
                os.remove(path)

    def _path(self):
        path = tempfile.mktemp()
        self.paths = getattr(self, "paths", []) + [path]
        return path

    def test_version(self):
        self.assertEqual(cli.main(["version"]), 0)

    def test_no_command(self):
        def callback():
            cli.main([])
        self.assertRaises(SystemExit, callback)

    def test_unknown_flag(self):
        def callback():
            cli.main(["bounds", "--t=9", "--bogus"])
        self.assertRaises(SystemExit, callback)

    def test_help_names_parameters(self):
        for command in ("verify", "search", "analyze", "bounds"):
            out = io.StringIO()

            def callback():
                with contextlib.redirect_stdout(out):
                    cli._parse_args([command, "--help"])
            self.assertRaises(SystemExit, callback)
            text = " ".join(out.getvalue().split())
            self.assertIn("Broom edge count t", text)
        out = io.StringIO()

        def callback():
            with contextlib.redirect_stdout(out):
                cli._parse_args(["verify", "--help"])
        self.assertRaises(SystemExit, callback)
        self.assertIn("Handle length (default: 3)",
                      " ".join(out.getvalue().split()))

    def test_bounds(self):
        self.assertEqual(cli.main(["bounds", "--t=9"]), 0)
        self.assertEqual(cli.main(["--quiet", "bounds", "--t=26"]), 0)
        self.assertEqual(cli.main(["bounds", "--t=2"]), 2)
        self.assertEqual(cli.main(["bounds", "--t=nine"]), 2)

    def test_construct(self):
        self.assertEqual(cli.main(["construct", "--family=odd-matching",
                                   "--t=5"]), 0)
        self.assertEqual(cli.main(["construct", "--family=odd-matching",
                                   "--t=4"]), 2)
        self.assertEqual(cli.main(["construct", "--family=f2-clique"]), 2)
        self.assertEqual(cli.main(["construct", "--family=petersen",
                                   "--s=2"]), 2)

    def test_construct_and_verify(self):
        path = self._path()
        args = ["construct", "--family=f3-clique", "--s=2", "--out=" + path]
        self.assertEqual(cli.main(args), 0)
        self.assertTrue(os.path.exists(path))
        expected = fixtures["verify"]
        args = ["verify", "--in=" + path, "--t=8"]
        self.assertEqual(cli.main(args), expected["f3-clique s=2 t=8"])
        args = ["verify", "--in=" + path, "--t=7"]
        self.assertEqual(cli.main(args), expected["f3-clique s=2 t=7"])
        args = ["analyze", "--in=" + path, "--t=8"]
        self.assertEqual(cli.main(args), 0)

    def test_verify_inputs(self):
        path = self._path()
        with open(path, "w") as fp:
            fp.write("broomlab-coloring v1\n"
                     "n 3 m 3 colors 2\n"
                     "0 1 1\n"
                     "0 2 2\n"
                     "1 2 1\n")
        self.assertEqual(cli.main(["verify", "--in=" + path, "--t=3"]), 2)
        missing = self._path()
        self.assertEqual(cli.main(["verify", "--in=" + missing, "--t=3"]), 2)
        good = self._path()
        cli.main(["construct", "--family=f2-clique", "--s=3",
                  "--out=" + good])
        self.assertEqual(cli.main(["verify", "--in=" + good, "--t=x"]), 2)
        self.assertEqual(cli.main(["verify", "--in=" + good, "--t=6",
                                   "--ell=1"]), 2)

    def test_search_exhausted_and_rerun(self):
        path = self._path()
        args = ["search", "--host=clique:6", "--t=4", "--out=" + path]
        self.assertEqual(cli.main(args), 1)
        cert = certificate.load_certificate(path)
        self.assertEqual(cert.result, fixtures["search"]["clique:6 t=4"])
        self.assertEqual(cli.main(["certify", "--cert=" + path]), 0)
        self.assertEqual(cli.main(["certify", "--cert=" + path, "--rerun"]),
                         0)
        # an exhausted certificate holds no coloring to verify
        self.assertEqual(cli.main(["verify", "--in=" + path, "--t=4"]), 2)

    def test_search_witness(self):
        path = self._path()
        args = ["search", "--host=clique:8", "--t=6", "--out=" + path]
        self.assertEqual(cli.main(args), 0)
        self.assertEqual(cli.main(["certify", "--cert=" + path]), 0)
        self.assertEqual(cli.main(["verify", "--in=" + path, "--t=6"]), 0)
        self.assertEqual(cli.main(["analyze", "--in=" + path, "--t=6"]), 0)

    def test_search_options(self):
        args = ["search", "--host=clique:6", "--t=4", "--workers=2"]
        self.assertEqual(cli.main(args), 1)
        args = ["search", "--host=clique:7", "--t=6",
                "--mode=near-factorization"]
        self.assertEqual(cli.main(args), 0)
        args = ["search", "--host=biclique:2,2", "--t=3", "--rules=none",
                "--order=constrained"]
        self.assertEqual(cli.main(args), 0)

    def test_search_usage_errors(self):
        for extra in (["--host=clique:7", "--t=6", "--rules=c4"],
                      ["--host=clique:7", "--t=6", "--rules=magic"],
                      ["--host=clique:6", "--t=4", "--palette_cap=4"],
                      ["--host=wheel:6", "--t=4"],
                      ["--host=clique:6", "--t=4", "--audit_rate=2"],
                      ["--host=clique:6", "--t=5",
                       "--mode=near-factorization"],
                      ["--host=clique:7", "--t=6",
                       "--lemma_dir=" + self._path()]):
            self.assertEqual(cli.main(["search"] + extra), 2)

    def test_certify_mismatch(self):
        path = self._path()
        config = search.SearchConfig(graph.build_clique(8), 5)
        witness = construct.f2_clique_coloring(3)
        stats = {"nodes": 0, "leaves": 0, "depth": 0}
        cert = certificate.SearchCertificate(config.echo(),
                                             certificate.WITNESS, witness,
                                             stats)
        cert.write(path)
        self.assertEqual(cli.main(["certify", "--cert=" + path]), 1)

    def test_certify_not_a_certificate(self):
        path = self._path()
        cli.main(["construct", "--family=odd-matching", "--t=3",
                  "--out=" + path])
        self.assertEqual(cli.main(["certify", "--cert=" + path]), 2)


if __name__ == '__main__':
    unittest.main()
