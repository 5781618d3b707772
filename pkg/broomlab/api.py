import os
from broomlab import common
from broomlab import graph
from broomlab import coloring
from broomlab import detect
from broomlab import construct
from broomlab import bounds
from broomlab import exceptions
from broomlab import deserialize
from broomlab import certificate
from broomlab import lemmas
from broomlab import search as engine
from broomlab import __version__
from broomlab.version import ENGINE_VERSION


logger = common.logging.getLogger(__name__)


CONSTRUCT_TEMPLATE = (
    "{family} {param}={value}: t={t} n={n} edges={m} colors={colors}"
)


ANALYZE_TEMPLATE = """Coloring: n={n} edges={m} colors={colors} t={t}

Four-cycle classes (cycle, anchor):
{histogram}
Violations at qualifying anchors: {violations}

Sigma maps over vertex pairs:
{sigma}
Degree structure: {degrees}
Good coloring: {good}
"""


def build_host(spec):
    """Host graph from 'clique:k', 'biclique:a,b' or 'file:path'.

    :return: (graph, canonical spec string)
    """
    kind, args = deserialize.host_spec(spec)
    if kind == "clique":
        return graph.build_clique(args[0]), "clique:{0}".format(args[0])
    if kind == "biclique":
        return graph.build_biclique(*args), "biclique:{0},{1}".format(*args)
    return coloring.load_coloring(args[0]).graph, "file:{0}".format(args[0])


def load_colored(path):
    """Coloring from a coloring file or from a WITNESS certificate."""
    path = deserialize.unicode_str(path)
    if certificate.looks_like_certificate(path):
        cert = certificate.load_certificate(path)
        if not cert.is_witness():
            raise exceptions.InvalidParameter(
                "Certificate '{0}' holds no witness ({1})!".format(
                    path, cert.result)
            )
        return cert.witness
    return coloring.load_coloring(path)


class Workbench(object):

    def __init__(self, debug=False, quiet=False):
        debug = deserialize.flag(debug)
        quiet = deserialize.flag(quiet)
        common.configure_logging(debug=debug, quiet=quiet)

    @staticmethod
    def version():
        print(__version__)
        return common.EXIT_OK

    def construct(self, family, t=None, s=None, out=None):
        """Build a construction family member.

        :param family: One of odd-matching, f2-bipartite, f2-clique, f3-clique.
        :param t: Parameter of the odd-matching family.
        :param s: Dimension of the vector space families.
        :param out: Write the coloring file here.
        """
        family = deserialize.choice(family, list(construct.FAMILIES), "family")
        param = construct.FAMILIES[family].param
        value = t if param == "t" else s
        if value is None:
            raise exceptions.InvalidInput(
                "Family '{0}' needs --{1}!".format(family, param)
            )
        cg, stated_t, comments = construct.generate(
            family, deserialize.integer(value)
        )
        if out is not None:
            coloring.write_coloring(cg, out, comments)
        print(CONSTRUCT_TEMPLATE.format(
            family=family, param=param, value=value, t=stated_t, n=cg.n,
            m=cg.graph.m, colors=cg.num_colors()
        ))
        return common.EXIT_OK

    def verify(self, in_path, t, ell=common.DEFAULT_ELL):
        """Exit 0 if the coloring has no rainbow broom, 1 with the least one.

        :param in_path: Coloring file or WITNESS certificate.
        :param t: Edge count of the broom.
        :param ell: Handle length of the broom (default 3).
        """
        pattern = detect.BroomPattern(deserialize.integer(t),
                                      deserialize.integer(ell))
        cg = load_colored(in_path)
        found = detect.find_rainbow_broom(cg, pattern)
        if found is None:
            print("OK: no rainbow {0}".format(pattern))
            return common.EXIT_OK
        print("VIOLATED: rainbow {0} at {1}".format(pattern, found))
        return common.EXIT_VIOLATED

    def analyze(self, in_path, t):
        """Print the four-cycle, sigma and degree structure of a coloring.

        :param in_path: Coloring file or WITNESS certificate.
        :param t: Broom edge count the analysis is relative to.
        """
        t = deserialize.positive_nonzero_integer(t)
        cg = load_colored(in_path)
        coloring.require_proper(cg)
        histogram = detect.c4_histogram(cg)
        sigma = detect.sigma_summary(cg)
        try:
            report = detect.degree_structure_report(cg, t)
            degrees = "top={0} high={1} low={2} holds={3}".format(
                report.top, report.high, report.low,
                "yes" if report.holds else "no"
            )
        except exceptions.InvalidParameter as e:
            degrees = "n/a ({0})".format(e)
        verdict = detect.check_good_coloring(cg, t)
        good = "yes"
        if not verdict.ok:
            good = "no (colors={0}, trichromatic={1})".format(
                verdict.num_colors, verdict.trichromatic
            )
        print(ANALYZE_TEMPLATE.format(
            n=cg.n, m=cg.graph.m, colors=cg.num_colors(), t=t,
            histogram="".join("    {0}: {1}\n".format(k, v)
                              for k, v in histogram.items()),
            violations=len(detect.c4_violations(cg, t)),
            sigma="".join("    {0}: {1}\n".format(k, v)
                          for k, v in sigma.items()),
            degrees=degrees, good=good
        ))
        return common.EXIT_OK

    def search(self, host, t, mode=common.MODE_GENERIC, palette_cap=None,
               rules=None, order=common.ORDER_INDEX,
               workers=common.DEFAULT_WORKERS, seed=common.DEFAULT_SEED,
               audit_rate=common.DEFAULT_AUDIT_RATE, out=None,
               lemma_dir=None):
        """Exhaustive search for a rainbow-broom-free coloring of a host.

        :param host: clique:k, biclique:a,b or file:path.
        :param t: Edge count of the forbidden broom.
        :param mode: generic or near-factorization.
        :param palette_cap: Maximum number of colors.
        :param rules: Comma separated prune rules, 'none' for no rules.
        :param order: Edge branching order, index or constrained.
        :param workers: Witness hunt threads (exhaustion uses one).
        :param seed: Seed of the prune audits.
        :param audit_rate: Fraction of pruned nodes re-expanded.
        :param out: Write the certificate here.
        :param lemma_dir: Directory of lemma certificates.
        :return: 0 for WITNESS, 1 for EXHAUSTED.
        """
        t = deserialize.integer(t)
        mode = deserialize.mode(mode)
        palette_cap = deserialize.optional_integer(palette_cap)
        rules = deserialize.rules(rules)
        order = deserialize.order(order)
        workers = deserialize.positive_nonzero_integer(workers)
        seed = deserialize.integer(seed)
        audit_rate = deserialize.probability(audit_rate)
        if lemma_dir is not None and not os.path.isdir(lemma_dir):
            raise exceptions.InvalidInput(
                "Lemma directory '{0}' does not exist!".format(lemma_dir)
            )
        host_graph, spec = build_host(host)
        if mode == common.MODE_NEAR_FACTORIZATION and workers > 1:
            logger.warning("Exhaustion runs use a single worker, "
                           "ignoring --workers {0}.".format(workers))
            workers = 1
        registry = lemmas.LemmaRegistry(lemma_dir=lemma_dir)

        def _config(workers):
            return engine.SearchConfig(
                host_graph, t, mode=mode, palette_cap=palette_cap, rules=rules,
                order=order, workers=workers, seed=seed,
                audit_rate=audit_rate, host_spec=spec, lemma_registry=registry
            )

        config = _config(workers)
        try:
            cert = engine.search(config)
        except exceptions.NondeterministicExhaustion as e:
            logger.warning("{0} Rerunning with one worker.".format(e))
            cert = engine.search(_config(1))
        if out is not None:
            cert.write(out)
        print(cert.summary())
        return common.EXIT_OK if cert.is_witness() else common.EXIT_VIOLATED

    def bounds(self, t, ell=common.DEFAULT_ELL):
        """Print the coefficient bounds of ex*(n, B_{t,ell}) / n.

        :param t: Edge count of the broom.
        """
        report = bounds.bounds_for(deserialize.integer(t),
                                   deserialize.integer(ell))
        print("t={0}: {1}".format(report.t, report))
        print("    lower: {0}".format(report.lower_source))
        print("    upper: {0}".format(report.upper_source))
        if report.advisory is not None:
            print("    advisory: {0}".format(report.advisory))
        return common.EXIT_OK

    def certify(self, cert_path, rerun=False):
        """Re-check a certificate file.

        WITNESS certificates are re-verified directly. EXHAUSTED ones are
        only re-established with rerun, which repeats the recorded search
        and compares verdict and statistics.

        :param cert_path: Certificate file.
        :param rerun: Repeat the search of an EXHAUSTED certificate.
        """
        cert = certificate.load_certificate(cert_path)
        rerun = deserialize.flag(rerun)
        if cert.engine != ENGINE_VERSION:
            logger.warning("Certificate engine {0} differs from {1}.".format(
                cert.engine, ENGINE_VERSION
            ))
        if cert.is_witness():
            found = certificate.check_witness(cert)
            if found is not None:
                print("MISMATCH: witness contains a rainbow broom at "
                      "{0}".format(found))
                return common.EXIT_VIOLATED
            print("OK: witness re-verified for t={0}".format(cert.t))
            if not rerun:
                return common.EXIT_OK
        elif not rerun:
            print("EXHAUSTED certificate, {0}; use --rerun to "
                  "re-establish it".format(cert.summary()))
            return common.EXIT_OK
        fresh = engine.search(self._replay_config(cert))
        if cert.config.get("deterministic") == "no":
            # parallel hunts only fix the verdict and the least witness
            same = (fresh.result, fresh.witness) == (cert.result, cert.witness)
        else:
            same = fresh.same_run(cert)
        if not same:
            print("MISMATCH: rerun gave {0}".format(fresh.summary()))
            return common.EXIT_VIOLATED
        print("OK: rerun reproduced {0}".format(fresh.summary()))
        return common.EXIT_OK

    @staticmethod
    def _replay_config(cert):
        conf = cert.config
        host_graph, spec = build_host(conf["host"])
        rules = conf["rules"]
        return engine.SearchConfig(
            host_graph, cert.t, mode=deserialize.mode(conf["mode"]),
            palette_cap=deserialize.integer(conf["palette_cap"]),
            rules=deserialize.rules(rules),
            order=deserialize.order(conf.get("order", common.ORDER_INDEX)),
            workers=1,
            seed=deserialize.integer(conf.get("seed", common.DEFAULT_SEED)),
            audit_rate=deserialize.probability(conf.get("audit_rate", 0)),
            host_spec=spec, branch=conf.get("branch"),
            lemma_registry=lemmas.LemmaRegistry()
        )
