"""Lemma-certified pruning for the near-factorization engine.

A lemma rule prunes on a structural fact that is itself established by
EXHAUSTED certificates of smaller sub-searches. The registry is the only
place such a rule becomes active: if any required certificate is missing,
stale or a WITNESS, the rule stays off and the search runs without it.
Certificates read from a lemma directory are rerun and must reproduce
exactly before they count.
"""
import os
from broomlab import common
from broomlab import exceptions
from broomlab import nearfactor
from broomlab.certificate import load_certificate, EXHAUSTED
from broomlab.version import ENGINE_VERSION


logger = common.logging.getLogger(__name__)


class BichromaticP4Rule(object):
    """No two complete color classes span a 2-colored path on four edges.

    Certified by exhausting every second-class cycle type that contains an
    alternating cycle of length six or more.
    """

    name = "no-bichromatic-p4"

    def required_branches(self, n):
        return [nearfactor.format_cycle_type(kind)
                for kind in nearfactor.cycle_types(n)
                if kind and max(kind) >= 3]

    def sub_config(self, config, branch):
        return config.with_rules([common.RULE_C4], branch=branch)

    def accepts(self, cert, config, branch):
        """Reason the certificate does not back this branch, or None."""
        if cert.result != EXHAUSTED:
            return "result is {0}".format(cert.result)
        if cert.engine != ENGINE_VERSION:
            return "engine {0} is stale".format(cert.engine)
        expected = self.sub_config(config, branch).echo()
        for key in ("host", "n", "t", "mode", "branch"):
            if cert.config.get(key) != str(expected[key]):
                return "config {0} mismatch".format(key)
        if common.RULE_LEMMA in cert.config.get("rules", "").split(","):
            return "certificate relies on a lemma itself"
        return None


def certificate_filename(rule, n, branch):
    return "{0}_n{1}_{2}.cert".format(rule.name, n, branch.replace(":", "-"))


class LemmaRegistry(object):

    def __init__(self, lemma_dir=None, rules=None, auto_certify=True):
        self.lemma_dir = lemma_dir
        self.rules = [BichromaticP4Rule()] if rules is None else list(rules)
        self.auto_certify = auto_certify
        self.certificates = dict()  # (rule name, n, branch) -> certificate

    def _path(self, rule, n, branch):
        if self.lemma_dir is None:
            return None
        return os.path.join(self.lemma_dir,
                            certificate_filename(rule, n, branch))

    def _obtain(self, rule, config, branch):
        n = config.host.n
        key = (rule.name, n, branch)
        if key in self.certificates:
            return self.certificates[key]
        path = self._path(rule, n, branch)
        cert = None
        if path is not None and os.path.exists(path):
            try:
                cert = load_certificate(path)
            except exceptions.FormatError as e:
                logger.warning("Unreadable lemma certificate '{0}': {1}".format(
                    path, e
                ))
                return None
            if not self._reproduces(rule, config, branch, cert, path):
                return None
        elif self.auto_certify:
            from broomlab.search import search
            logger.info("Certifying {0} on branch {1}.".format(
                rule.name, branch
            ))
            cert = search(rule.sub_config(config, branch))
            if path is not None:
                cert.write(path)
        if cert is not None:
            self.certificates[key] = cert
        return cert

    def _reproduces(self, rule, config, branch, cert, path):
        """Rerun the sub-search behind a stored certificate the rule would
        accept; only an identical run may back the rule."""
        if rule.accepts(cert, config, branch) is not None:
            return True  # rejected in prepare anyway
        from broomlab.search import search
        logger.info("Re-establishing lemma certificate '{0}'.".format(path))
        fresh = search(rule.sub_config(config, branch))
        if fresh.same_run(cert):
            return True
        logger.warning("Lemma certificate '{0}' does not reproduce: rerun "
                       "gave {1}.".format(path, fresh.summary()))
        return False

    def prepare(self, config):
        """True if every registered rule is certified for this config."""
        if not self.rules:
            return False
        for rule in self.rules:
            for branch in rule.required_branches(config.host.n):
                cert = self._obtain(rule, config, branch)
                if cert is None:
                    logger.warning(
                        "Lemma {0} disabled: no certificate for {1}.".format(
                            rule.name, branch)
                    )
                    return False
                reason = rule.accepts(cert, config, branch)
                if reason is not None:
                    logger.warning("Lemma {0} disabled on {1}: {2}.".format(
                        rule.name, branch, reason
                    ))
                    return False
        logger.info("Lemma rules active: {0}".format(
            ", ".join(rule.name for rule in self.rules)
        ))
        return True
